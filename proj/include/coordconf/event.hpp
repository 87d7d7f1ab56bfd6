#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "coordconf/value.hpp"

namespace coordconf {

/// `[A-Za-z_][A-Za-z0-9_.:]*`
bool is_valid_event_name(std::string_view name);

/// `[A-Za-z_][A-Za-z0-9_]*` — configuration ids, component ids, state ids.
bool is_valid_identifier(std::string_view name);

/// Named signal with optional payload; the only coupling between monitors,
/// the coordinator and the configurator.
class Event {
 public:
  Event(std::string name, std::optional<Value> payload = std::nullopt,
        std::string source = {});

  const std::string& name() const { return name_; }
  const std::optional<Value>& payload() const { return payload_; }
  const std::string& source() const { return source_; }

 private:
  std::string name_;
  std::optional<Value> payload_;
  std::string source_;
};

}  // namespace coordconf
