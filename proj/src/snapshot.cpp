#include "coordconf/snapshot.hpp"

#include <sstream>

namespace coordconf {

namespace {

bool optional_equals(const std::optional<Value>& a, const std::optional<Value>& b,
                     double tol) {
  if (a.has_value() != b.has_value()) return false;
  return !a.has_value() || a->equals(*b, tol);
}

std::string optional_repr(const std::optional<Value>& v) {
  return v ? v->repr() : "<absent>";
}

}  // namespace

bool SystemSnapshot::equals(const SystemSnapshot& other, double real_tol) const {
  if (connections != other.connections) return false;
  if (components.size() != other.components.size()) return false;
  auto a = components.begin();
  auto b = other.components.begin();
  for (; a != components.end(); ++a, ++b) {
    if (a->first != b->first) return false;
    const ComponentSnapshot& x = a->second;
    const ComponentSnapshot& y = b->second;
    if (x.lifecycle != y.lifecycle) return false;
    if (x.properties.size() != y.properties.size()) return false;
    for (auto p = x.properties.begin(), q = y.properties.begin();
         p != x.properties.end(); ++p, ++q) {
      if (p->first != q->first || !p->second.equals(q->second, real_tol)) return false;
    }
    auto ports_equal = [&](const auto& lhs, const auto& rhs) {
      if (lhs.size() != rhs.size()) return false;
      auto p = lhs.begin();
      auto q = rhs.begin();
      for (; p != lhs.end(); ++p, ++q) {
        if (p->first != q->first || !optional_equals(p->second, q->second, real_tol)) {
          return false;
        }
      }
      return true;
    };
    if (!ports_equal(x.in_ports, y.in_ports)) return false;
    if (!ports_equal(x.out_ports, y.out_ports)) return false;
  }
  return true;
}

std::string SystemSnapshot::first_difference(const SystemSnapshot& other) const {
  std::ostringstream out;
  for (const auto& [id, comp] : components) {
    auto o = other.components.find(id);
    if (o == other.components.end()) {
      out << "component '" << id << "' missing from other";
      return out.str();
    }
    if (comp.lifecycle != o->second.lifecycle) {
      out << id << ".lifecycle: " << lifecycle_state_name(comp.lifecycle) << " vs "
          << lifecycle_state_name(o->second.lifecycle);
      return out.str();
    }
    for (const auto& [name, v] : comp.properties) {
      auto ov = o->second.properties.find(name);
      if (ov == o->second.properties.end() || v != ov->second) {
        out << id << "." << name << ": " << v.repr() << " vs "
            << (ov == o->second.properties.end() ? "<missing>" : ov->second.repr());
        return out.str();
      }
    }
    auto check_ports = [&](const char* tag, const auto& mine, const auto& theirs) {
      for (const auto& [name, v] : mine) {
        auto ov = theirs.find(name);
        if (ov == theirs.end() || !optional_equals(v, ov->second, 0.0)) {
          out << id << "." << name << " (" << tag << "): " << optional_repr(v) << " vs "
              << (ov == theirs.end() ? "<missing>" : optional_repr(ov->second));
          return false;
        }
      }
      return true;
    };
    if (!check_ports("in", comp.in_ports, o->second.in_ports)) return out.str();
    if (!check_ports("out", comp.out_ports, o->second.out_ports)) return out.str();
  }
  for (const auto& [id, _] : other.components) {
    if (!components.count(id)) {
      out << "component '" << id << "' missing from this";
      return out.str();
    }
  }
  if (connections != other.connections) {
    out << "connection sets differ (" << connections.size() << " vs "
        << other.connections.size() << ")";
    return out.str();
  }
  return "";
}

}  // namespace coordconf
