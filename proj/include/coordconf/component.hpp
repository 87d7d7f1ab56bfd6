#pragma once

#include <chrono>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "coordconf/value.hpp"

namespace coordconf {

/// PreOperational <-> Stopped <-> Running form a linear chain; Fatal is
/// entered only through fault injection and has no outgoing command.
enum class LifecycleState { PreOperational, Stopped, Running, Fatal };
enum class LifecycleCommand { Configure, Start, Stop, Cleanup };

const char* lifecycle_state_name(LifecycleState s);
const char* lifecycle_command_name(LifecycleCommand c);
Result<LifecycleState> parse_lifecycle_state(std::string_view token);

/// Next state when applying `cmd` in `from`, or IllegalTransition /
/// ComponentFatal.
Result<LifecycleState> lifecycle_step(LifecycleState from, LifecycleCommand cmd);

/// Shortest command sequence along the chain; empty when from == to.
Result<std::vector<LifecycleCommand>> compute_lifecycle_path(LifecycleState from,
                                                             LifecycleState to);

struct BehaviorSucceed {};
struct BehaviorFail {
  std::string message;
};
struct BehaviorBlock {
  std::chrono::milliseconds duration;
};
struct BehaviorCrash {};

/// Fault-injection knob for operations; default is succeed.
using OperationBehavior =
    std::variant<BehaviorSucceed, BehaviorFail, BehaviorBlock, BehaviorCrash>;

struct OperationSpec {
  std::string name;
  int arity = 0;
  OperationBehavior behavior = BehaviorSucceed{};
};

struct CallOutcome {
  bool success = true;
  std::string message;
};

struct PropertyDecl {
  std::string name;
  DeclaredKind kind;
  Value initial;
};

/// Everything needed to instantiate a component: used both for explicit
/// instances in the system model and for the deployment type catalog.
struct ComponentDeclarations {
  std::vector<PropertyDecl> properties;
  std::vector<std::string> in_ports;
  std::vector<std::string> out_ports;
  std::vector<OperationSpec> operations;
};

struct Connection {
  std::string from_component;
  std::string from_port;
  std::string to_component;
  std::string to_port;

  bool operator==(const Connection& o) const = default;
  bool operator<(const Connection& o) const {
    return std::tie(from_component, from_port, to_component, to_port) <
           std::tie(o.from_component, o.from_port, o.to_component, o.to_port);
  }
};

}  // namespace coordconf
