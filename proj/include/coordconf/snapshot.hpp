#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>

#include "coordconf/component.hpp"
#include "coordconf/value.hpp"

namespace coordconf {

struct ComponentSnapshot {
  LifecycleState lifecycle = LifecycleState::PreOperational;
  std::map<std::string, Value> properties;
  std::map<std::string, std::optional<Value>> in_ports;
  std::map<std::string, std::optional<Value>> out_ports;
};

/// Deep, immutable copy of all observable system state.
struct SystemSnapshot {
  std::map<std::string, ComponentSnapshot> components;
  std::set<Connection> connections;

  bool equals(const SystemSnapshot& other, double real_tol = 0.0) const;
  bool operator==(const SystemSnapshot& other) const { return equals(other); }
  bool operator!=(const SystemSnapshot& other) const { return !equals(other); }

  /// Human-readable description of the first difference, or empty when equal.
  std::string first_difference(const SystemSnapshot& other) const;
};

}  // namespace coordconf
