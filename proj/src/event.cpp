#include "coordconf/event.hpp"

#include <stdexcept>

namespace coordconf {

namespace {
bool is_name_start(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
}
}  // namespace

bool is_valid_event_name(std::string_view name) {
  if (name.empty() || !is_name_start(name[0])) return false;
  for (char c : name.substr(1)) {
    if (!is_name_start(c) && !(c >= '0' && c <= '9') && c != '.' && c != ':') {
      return false;
    }
  }
  return true;
}

bool is_valid_identifier(std::string_view name) {
  if (name.empty() || !is_name_start(name[0])) return false;
  for (char c : name.substr(1)) {
    if (!is_name_start(c) && !(c >= '0' && c <= '9')) return false;
  }
  return true;
}

Event::Event(std::string name, std::optional<Value> payload, std::string source)
    : name_(std::move(name)), payload_(std::move(payload)), source_(std::move(source)) {
  if (!is_valid_event_name(name_)) {
    throw std::invalid_argument("invalid event name '" + name_ + "'");
  }
}

}  // namespace coordconf
