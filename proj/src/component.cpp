#include "coordconf/component.hpp"

#include <array>

namespace coordconf {

const char* lifecycle_state_name(LifecycleState s) {
  switch (s) {
    case LifecycleState::PreOperational: return "preoperational";
    case LifecycleState::Stopped: return "stopped";
    case LifecycleState::Running: return "running";
    case LifecycleState::Fatal: return "fatal";
  }
  return "?";
}

const char* lifecycle_command_name(LifecycleCommand c) {
  switch (c) {
    case LifecycleCommand::Configure: return "configure";
    case LifecycleCommand::Start: return "start";
    case LifecycleCommand::Stop: return "stop";
    case LifecycleCommand::Cleanup: return "cleanup";
  }
  return "?";
}

Result<LifecycleState> parse_lifecycle_state(std::string_view token) {
  if (token == "preoperational") return LifecycleState::PreOperational;
  if (token == "stopped") return LifecycleState::Stopped;
  if (token == "running") return LifecycleState::Running;
  if (token == "fatal") return LifecycleState::Fatal;
  return Error{ErrorCode::ParseError,
               "unknown lifecycle state '" + std::string(token) + "'"};
}

Result<LifecycleState> lifecycle_step(LifecycleState from, LifecycleCommand cmd) {
  if (from == LifecycleState::Fatal) {
    return Error{ErrorCode::ComponentFatal, "component is fatal"};
  }
  switch (cmd) {
    case LifecycleCommand::Configure:
      if (from == LifecycleState::PreOperational) return LifecycleState::Stopped;
      break;
    case LifecycleCommand::Cleanup:
      if (from == LifecycleState::Stopped) return LifecycleState::PreOperational;
      break;
    case LifecycleCommand::Start:
      if (from == LifecycleState::Stopped) return LifecycleState::Running;
      break;
    case LifecycleCommand::Stop:
      if (from == LifecycleState::Running) return LifecycleState::Stopped;
      break;
  }
  return Error{ErrorCode::IllegalTransition,
               std::string(lifecycle_command_name(cmd)) + " is illegal from " +
                   lifecycle_state_name(from)};
}

Result<std::vector<LifecycleCommand>> compute_lifecycle_path(LifecycleState from,
                                                             LifecycleState to) {
  if (from == LifecycleState::Fatal || to == LifecycleState::Fatal) {
    return Error{ErrorCode::FatalEndpoint, "no path through fatal"};
  }
  auto index = [](LifecycleState s) {
    return s == LifecycleState::PreOperational ? 0 : s == LifecycleState::Stopped ? 1 : 2;
  };
  static constexpr std::array<LifecycleCommand, 2> up = {LifecycleCommand::Configure,
                                                         LifecycleCommand::Start};
  static constexpr std::array<LifecycleCommand, 2> down = {LifecycleCommand::Stop,
                                                           LifecycleCommand::Cleanup};
  std::vector<LifecycleCommand> path;
  int a = index(from);
  int b = index(to);
  while (a < b) path.push_back(up[a++]);
  while (a > b) path.push_back(down[2 - a--]);
  return path;
}

}  // namespace coordconf
