#pragma once

#include <atomic>
#include <condition_variable>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "coordconf/component.hpp"
#include "coordconf/snapshot.hpp"
#include "coordconf/status.hpp"
#include "coordconf/value.hpp"

namespace coordconf {

/// In-process simulated component framework: components with lifecycle
/// states, properties, depth-1 data-flow ports, callable operations and
/// connections.
///
/// All mutations are serialized by one mutex per registry. A block-behavior
/// operation suspends only the calling thread; the registry lock is not held
/// while blocked.
class ComponentRegistry {
 public:
  ComponentRegistry() = default;
  ComponentRegistry(const ComponentRegistry&) = delete;
  ComponentRegistry& operator=(const ComponentRegistry&) = delete;

  Status create_component(const std::string& id, const std::string& type_name,
                          const ComponentDeclarations& decls);
  Status destroy_component(const std::string& id);
  Status create_connection(const std::string& from_component,
                           const std::string& from_port,
                           const std::string& to_component,
                           const std::string& to_port);
  Status remove_connection(const std::string& from_component,
                           const std::string& from_port,
                           const std::string& to_component,
                           const std::string& to_port);

  Result<LifecycleState> lifecycle_command(const std::string& id,
                                           LifecycleCommand cmd);
  Status write_port(const std::string& component, const std::string& port,
                    const Value& v);
  Status set_property(const std::string& component, const std::string& property,
                      const Value& v);
  Result<CallOutcome> call_operation(const std::string& component,
                                     const std::string& operation,
                                     const std::vector<Value>& args);

  SystemSnapshot take_snapshot() const;

  // Undo support: restore a port/property/lifecycle without data-flow
  // propagation. Restoring a port to nullopt re-establishes the never-written
  // state.
  Status restore_port(const std::string& component, const std::string& port,
                      const std::optional<Value>& v);
  Status restore_property(const std::string& component,
                          const std::string& property, const Value& v);

  // Fault injection / test knobs.
  Status set_operation_behavior(const std::string& component,
                                const std::string& operation,
                                OperationBehavior behavior);
  Status force_lifecycle(const std::string& id, LifecycleState state);

  // Read-only queries (used by monitors, validation and the harness).
  bool has_component(const std::string& id) const;
  std::vector<std::string> component_ids() const;  // sorted
  Result<LifecycleState> lifecycle(const std::string& id) const;
  Result<std::string> type_name(const std::string& id) const;
  bool has_property(const std::string& id, const std::string& prop) const;
  bool has_in_port(const std::string& id, const std::string& port) const;
  bool has_out_port(const std::string& id, const std::string& port) const;
  Result<OperationSpec> operation(const std::string& id,
                                  const std::string& op) const;
  Result<Value> property(const std::string& id, const std::string& prop) const;
  /// Last value on the named port (out first, then in); error if the port
  /// does not exist, nullopt when never written.
  Result<std::optional<Value>> port_value(const std::string& id,
                                          const std::string& port) const;
  std::vector<Connection> connections() const;  // sorted
  std::size_t component_count() const;

  /// Read of a monitorable target: property first, then port last-value.
  Result<std::optional<Value>> observe(const std::string& id,
                                       const std::string& field) const;

  /// Makes every pending and future block-behavior sleep return early with a
  /// failure outcome. Used by the harness watchdog for forced shutdown.
  void interrupt_blocking();

 private:
  struct Port {
    std::optional<DeclaredKind> fixed_kind;  // set at first write
    std::optional<Value> last;
  };
  struct Property {
    DeclaredKind kind;  // fixed at declaration
    Value value;
  };
  struct ComponentState {
    std::string type_name;
    LifecycleState lifecycle = LifecycleState::PreOperational;
    std::map<std::string, Property> properties;
    std::map<std::string, Port> in_ports;
    std::map<std::string, Port> out_ports;
    std::map<std::string, OperationSpec> operations;
  };

  Status write_port_locked(ComponentState& comp, const std::string& comp_id,
                           const std::string& port, const Value& v);

  mutable std::mutex mutex_;
  std::mutex block_mutex_;
  std::condition_variable block_cv_;
  std::atomic<bool> interrupted_{false};
  std::map<std::string, ComponentState> components_;
  std::set<Connection> connections_;
};

}  // namespace coordconf
