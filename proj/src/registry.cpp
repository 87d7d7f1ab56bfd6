#include "coordconf/registry.hpp"

#include <algorithm>

namespace coordconf {

namespace {

DeclaredKind kind_of_value(const Value& v) {
  if (v.kind() == ValueKind::Array) {
    return DeclaredKind{ValueKind::Array, v.element_kind()};
  }
  return DeclaredKind{v.kind(), std::nullopt};
}

Error unknown_component(const std::string& id) {
  return Error{ErrorCode::UnknownComponent, "no component '" + id + "'"};
}

}  // namespace

Status ComponentRegistry::create_component(const std::string& id,
                                           const std::string& type_name,
                                           const ComponentDeclarations& decls) {
  std::lock_guard lock(mutex_);
  if (components_.count(id)) {
    return Error{ErrorCode::DuplicateId, "component '" + id + "' already exists"};
  }
  ComponentState comp;
  comp.type_name = type_name;
  comp.lifecycle = LifecycleState::PreOperational;
  for (const PropertyDecl& p : decls.properties) {
    if (!kind_accepts(p.kind.kind, p.kind.element, p.initial)) {
      return Error{ErrorCode::KindMismatch,
                   "initial value for " + id + "." + p.name + " is not " +
                       kind_token(p.kind)};
    }
    comp.properties[p.name] = Property{p.kind, coerce_to_kind(p.kind.kind, p.kind.element, p.initial)};
  }
  for (const std::string& p : decls.in_ports) comp.in_ports[p] = Port{};
  for (const std::string& p : decls.out_ports) comp.out_ports[p] = Port{};
  for (const OperationSpec& op : decls.operations) comp.operations[op.name] = op;
  components_.emplace(id, std::move(comp));
  return Status::ok_status();
}

Status ComponentRegistry::destroy_component(const std::string& id) {
  std::lock_guard lock(mutex_);
  auto it = components_.find(id);
  if (it == components_.end()) return unknown_component(id);
  LifecycleState s = it->second.lifecycle;
  if (s != LifecycleState::PreOperational && s != LifecycleState::Stopped) {
    return Error{ErrorCode::DestroyWhileRunning,
                 "component '" + id + "' is " + lifecycle_state_name(s) +
                     "; stop it before destroying"};
  }
  components_.erase(it);
  for (auto c = connections_.begin(); c != connections_.end();) {
    if (c->from_component == id || c->to_component == id) {
      c = connections_.erase(c);
    } else {
      ++c;
    }
  }
  return Status::ok_status();
}

Status ComponentRegistry::create_connection(const std::string& from_component,
                                            const std::string& from_port,
                                            const std::string& to_component,
                                            const std::string& to_port) {
  std::lock_guard lock(mutex_);
  auto from = components_.find(from_component);
  if (from == components_.end()) return unknown_component(from_component);
  auto to = components_.find(to_component);
  if (to == components_.end()) return unknown_component(to_component);
  if (!from->second.out_ports.count(from_port)) {
    return Error{ErrorCode::UnknownPort,
                 "no out-port '" + from_component + "." + from_port + "'"};
  }
  if (!to->second.in_ports.count(to_port)) {
    return Error{ErrorCode::UnknownPort,
                 "no in-port '" + to_component + "." + to_port + "'"};
  }
  Connection conn{from_component, from_port, to_component, to_port};
  if (connections_.count(conn)) {
    return Error{ErrorCode::DuplicateConnection,
                 "connection " + from_component + "." + from_port + " -> " +
                     to_component + "." + to_port + " already exists"};
  }
  connections_.insert(conn);
  return Status::ok_status();
}

Status ComponentRegistry::remove_connection(const std::string& from_component,
                                            const std::string& from_port,
                                            const std::string& to_component,
                                            const std::string& to_port) {
  std::lock_guard lock(mutex_);
  Connection conn{from_component, from_port, to_component, to_port};
  if (!connections_.erase(conn)) {
    return Error{ErrorCode::UnknownConnection,
                 "no connection " + from_component + "." + from_port + " -> " +
                     to_component + "." + to_port};
  }
  return Status::ok_status();
}

Result<LifecycleState> ComponentRegistry::lifecycle_command(const std::string& id,
                                                            LifecycleCommand cmd) {
  std::lock_guard lock(mutex_);
  auto it = components_.find(id);
  if (it == components_.end()) return unknown_component(id);
  auto next = lifecycle_step(it->second.lifecycle, cmd);
  if (!next.ok()) {
    Error e = next.error();
    e.message = "component '" + id + "': " + e.message;
    return e;
  }
  it->second.lifecycle = next.value();
  return next.value();
}

Status ComponentRegistry::write_port_locked(ComponentState& comp,
                                            const std::string& comp_id,
                                            const std::string& port,
                                            const Value& v) {
  bool is_out = comp.out_ports.count(port) > 0;
  bool is_in = comp.in_ports.count(port) > 0;
  if (!is_out && !is_in) {
    return Error{ErrorCode::UnknownPort, "no port '" + comp_id + "." + port + "'"};
  }
  Port& p = is_out ? comp.out_ports[port] : comp.in_ports[port];
  if (p.fixed_kind && !kind_accepts(p.fixed_kind->kind, p.fixed_kind->element, v)) {
    return Error{ErrorCode::KindMismatch,
                 "port " + comp_id + "." + port + " holds " +
                     kind_token(*p.fixed_kind) + ", got " + v.repr()};
  }
  // Writes are atomic: check every connected in-port before touching state.
  struct Target {
    Port* port;
    std::string label;
  };
  std::vector<Target> fanout;
  if (is_out) {
    for (const Connection& c : connections_) {
      if (c.from_component != comp_id || c.from_port != port) continue;
      auto dest = components_.find(c.to_component);
      if (dest == components_.end()) continue;
      auto dp = dest->second.in_ports.find(c.to_port);
      if (dp == dest->second.in_ports.end()) continue;
      Port& in = dp->second;
      if (in.fixed_kind && !kind_accepts(in.fixed_kind->kind, in.fixed_kind->element, v)) {
        return Error{ErrorCode::KindMismatch,
                     "connected port " + c.to_component + "." + c.to_port +
                         " holds " + kind_token(*in.fixed_kind) + ", got " + v.repr()};
      }
      fanout.push_back({&in, c.to_component + "." + c.to_port});
    }
  }
  auto store = [&](Port& target) {
    if (!target.fixed_kind) target.fixed_kind = kind_of_value(v);
    target.last = coerce_to_kind(target.fixed_kind->kind, target.fixed_kind->element, v);
  };
  store(p);
  for (Target& t : fanout) store(*t.port);
  return Status::ok_status();
}

Status ComponentRegistry::write_port(const std::string& component,
                                     const std::string& port, const Value& v) {
  std::lock_guard lock(mutex_);
  auto it = components_.find(component);
  if (it == components_.end()) return unknown_component(component);
  return write_port_locked(it->second, component, port, v);
}

Status ComponentRegistry::set_property(const std::string& component,
                                       const std::string& property, const Value& v) {
  std::lock_guard lock(mutex_);
  auto it = components_.find(component);
  if (it == components_.end()) return unknown_component(component);
  auto prop = it->second.properties.find(property);
  if (prop == it->second.properties.end()) {
    return Error{ErrorCode::UnknownProperty,
                 "no property '" + component + "." + property + "'"};
  }
  DeclaredKind& k = prop->second.kind;
  if (!kind_accepts(k.kind, k.element, v)) {
    return Error{ErrorCode::KindMismatch,
                 "property " + component + "." + property + " is " + kind_token(k) +
                     ", got " + v.repr()};
  }
  prop->second.value = coerce_to_kind(k.kind, k.element, v);
  return Status::ok_status();
}

Result<CallOutcome> ComponentRegistry::call_operation(const std::string& component,
                                                      const std::string& operation,
                                                      const std::vector<Value>& args) {
  OperationBehavior behavior;
  {
    std::lock_guard lock(mutex_);
    auto it = components_.find(component);
    if (it == components_.end()) return unknown_component(component);
    auto op = it->second.operations.find(operation);
    if (op == it->second.operations.end()) {
      return Error{ErrorCode::UnknownOperation,
                   "no operation '" + component + "." + operation + "'"};
    }
    if (static_cast<int>(args.size()) != op->second.arity) {
      return Error{ErrorCode::ArityMismatch,
                   component + "." + operation + " takes " +
                       std::to_string(op->second.arity) + " argument(s), got " +
                       std::to_string(args.size())};
    }
    behavior = op->second.behavior;
  }

  if (auto* fail = std::get_if<BehaviorFail>(&behavior)) {
    return CallOutcome{false, fail->message};
  }
  if (std::holds_alternative<BehaviorCrash>(behavior)) {
    std::lock_guard lock(mutex_);
    auto it = components_.find(component);
    if (it != components_.end()) it->second.lifecycle = LifecycleState::Fatal;
    return CallOutcome{false, "operation crashed"};
  }
  if (auto* block = std::get_if<BehaviorBlock>(&behavior)) {
    // Suspends the caller only; the registry lock is not held while
    // waiting. Interruptible so a watchdog can force shutdown.
    std::unique_lock lock(block_mutex_);
    bool interrupted = block_cv_.wait_for(lock, block->duration,
                                          [this] { return interrupted_.load(); });
    if (interrupted) return CallOutcome{false, "interrupted"};
    return CallOutcome{true, ""};
  }
  return CallOutcome{true, ""};
}

void ComponentRegistry::interrupt_blocking() {
  interrupted_.store(true);
  block_cv_.notify_all();
}

SystemSnapshot ComponentRegistry::take_snapshot() const {
  std::lock_guard lock(mutex_);
  SystemSnapshot snap;
  for (const auto& [id, comp] : components_) {
    ComponentSnapshot cs;
    cs.lifecycle = comp.lifecycle;
    for (const auto& [name, prop] : comp.properties) cs.properties[name] = prop.value;
    for (const auto& [name, port] : comp.in_ports) cs.in_ports[name] = port.last;
    for (const auto& [name, port] : comp.out_ports) cs.out_ports[name] = port.last;
    snap.components.emplace(id, std::move(cs));
  }
  snap.connections = connections_;
  return snap;
}

Status ComponentRegistry::restore_port(const std::string& component,
                                       const std::string& port,
                                       const std::optional<Value>& v) {
  std::lock_guard lock(mutex_);
  auto it = components_.find(component);
  if (it == components_.end()) return unknown_component(component);
  auto out = it->second.out_ports.find(port);
  auto in = it->second.in_ports.find(port);
  Port* p = out != it->second.out_ports.end() ? &out->second
            : in != it->second.in_ports.end() ? &in->second
                                              : nullptr;
  if (!p) return Error{ErrorCode::UnknownPort, "no port '" + component + "." + port + "'"};
  p->last = v;
  return Status::ok_status();
}

Status ComponentRegistry::restore_property(const std::string& component,
                                           const std::string& property,
                                           const Value& v) {
  std::lock_guard lock(mutex_);
  auto it = components_.find(component);
  if (it == components_.end()) return unknown_component(component);
  auto prop = it->second.properties.find(property);
  if (prop == it->second.properties.end()) {
    return Error{ErrorCode::UnknownProperty,
                 "no property '" + component + "." + property + "'"};
  }
  prop->second.value = v;
  return Status::ok_status();
}

Status ComponentRegistry::set_operation_behavior(const std::string& component,
                                                 const std::string& operation,
                                                 OperationBehavior behavior) {
  std::lock_guard lock(mutex_);
  auto it = components_.find(component);
  if (it == components_.end()) return unknown_component(component);
  auto op = it->second.operations.find(operation);
  if (op == it->second.operations.end()) {
    return Error{ErrorCode::UnknownOperation,
                 "no operation '" + component + "." + operation + "'"};
  }
  op->second.behavior = std::move(behavior);
  return Status::ok_status();
}

Status ComponentRegistry::force_lifecycle(const std::string& id, LifecycleState state) {
  std::lock_guard lock(mutex_);
  auto it = components_.find(id);
  if (it == components_.end()) return unknown_component(id);
  it->second.lifecycle = state;
  return Status::ok_status();
}

bool ComponentRegistry::has_component(const std::string& id) const {
  std::lock_guard lock(mutex_);
  return components_.count(id) > 0;
}

std::vector<std::string> ComponentRegistry::component_ids() const {
  std::lock_guard lock(mutex_);
  std::vector<std::string> ids;
  ids.reserve(components_.size());
  for (const auto& [id, _] : components_) ids.push_back(id);
  return ids;
}

Result<LifecycleState> ComponentRegistry::lifecycle(const std::string& id) const {
  std::lock_guard lock(mutex_);
  auto it = components_.find(id);
  if (it == components_.end()) return unknown_component(id);
  return it->second.lifecycle;
}

Result<std::string> ComponentRegistry::type_name(const std::string& id) const {
  std::lock_guard lock(mutex_);
  auto it = components_.find(id);
  if (it == components_.end()) return unknown_component(id);
  return it->second.type_name;
}

bool ComponentRegistry::has_property(const std::string& id, const std::string& prop) const {
  std::lock_guard lock(mutex_);
  auto it = components_.find(id);
  return it != components_.end() && it->second.properties.count(prop) > 0;
}

bool ComponentRegistry::has_in_port(const std::string& id, const std::string& port) const {
  std::lock_guard lock(mutex_);
  auto it = components_.find(id);
  return it != components_.end() && it->second.in_ports.count(port) > 0;
}

bool ComponentRegistry::has_out_port(const std::string& id, const std::string& port) const {
  std::lock_guard lock(mutex_);
  auto it = components_.find(id);
  return it != components_.end() && it->second.out_ports.count(port) > 0;
}

Result<OperationSpec> ComponentRegistry::operation(const std::string& id,
                                                   const std::string& op) const {
  std::lock_guard lock(mutex_);
  auto it = components_.find(id);
  if (it == components_.end()) return unknown_component(id);
  auto o = it->second.operations.find(op);
  if (o == it->second.operations.end()) {
    return Error{ErrorCode::UnknownOperation, "no operation '" + id + "." + op + "'"};
  }
  return o->second;
}

Result<Value> ComponentRegistry::property(const std::string& id,
                                          const std::string& prop) const {
  std::lock_guard lock(mutex_);
  auto it = components_.find(id);
  if (it == components_.end()) return unknown_component(id);
  auto p = it->second.properties.find(prop);
  if (p == it->second.properties.end()) {
    return Error{ErrorCode::UnknownProperty, "no property '" + id + "." + prop + "'"};
  }
  return p->second.value;
}

Result<std::optional<Value>> ComponentRegistry::port_value(const std::string& id,
                                                           const std::string& port) const {
  std::lock_guard lock(mutex_);
  auto it = components_.find(id);
  if (it == components_.end()) return unknown_component(id);
  auto out = it->second.out_ports.find(port);
  if (out != it->second.out_ports.end()) return out->second.last;
  auto in = it->second.in_ports.find(port);
  if (in != it->second.in_ports.end()) return in->second.last;
  return Error{ErrorCode::UnknownPort, "no port '" + id + "." + port + "'"};
}

std::vector<Connection> ComponentRegistry::connections() const {
  std::lock_guard lock(mutex_);
  return std::vector<Connection>(connections_.begin(), connections_.end());
}

std::size_t ComponentRegistry::component_count() const {
  std::lock_guard lock(mutex_);
  return components_.size();
}

Result<std::optional<Value>> ComponentRegistry::observe(const std::string& id,
                                                        const std::string& field) const {
  std::lock_guard lock(mutex_);
  auto it = components_.find(id);
  if (it == components_.end()) return unknown_component(id);
  auto p = it->second.properties.find(field);
  if (p != it->second.properties.end()) return std::optional<Value>(p->second.value);
  auto out = it->second.out_ports.find(field);
  if (out != it->second.out_ports.end()) return out->second.last;
  auto in = it->second.in_ports.find(field);
  if (in != it->second.in_ports.end()) return in->second.last;
  return Error{ErrorCode::UnknownTarget, "no property or port '" + id + "." + field + "'"};
}

}  // namespace coordconf
