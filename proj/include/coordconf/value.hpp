#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "coordconf/status.hpp"

namespace coordconf {

enum class ValueKind { Boolean, Integer, Real, String, Array };

const char* value_kind_name(ValueKind kind);

/// Dynamically typed datum flowing through ports, properties and operation
/// arguments. Arrays are homogeneous in scalar kind and never nested.
class Value {
 public:
  using Array = std::vector<Value>;

  Value() : data_(false) {}
  Value(bool b) : data_(b) {}
  Value(std::int64_t i) : data_(i) {}
  Value(int i) : data_(static_cast<std::int64_t>(i)) {}
  Value(double d) : data_(d) {}
  Value(std::string s) : data_(std::move(s)) {}
  Value(const char* s) : data_(std::string(s)) {}

  /// Builds a homogeneous array. Fails on nested arrays or mixed scalar
  /// kinds, except that integers widen to real when mixed with reals.
  static Result<Value> array(Array elements);

  ValueKind kind() const;
  /// Scalar kind of the elements; only valid for arrays.
  ValueKind element_kind() const;

  bool is_numeric() const {
    return kind() == ValueKind::Integer || kind() == ValueKind::Real;
  }

  bool as_bool() const { return std::get<bool>(data_); }
  std::int64_t as_int() const { return std::get<std::int64_t>(data_); }
  double as_real() const { return std::get<double>(data_); }
  const std::string& as_string() const { return std::get<std::string>(data_); }
  const Array& as_array() const { return std::get<Array>(data_); }

  /// Numeric reading: integers convert, reals pass through.
  double numeric() const;

  /// Deep equality. Reals compare within |a-b| <= real_tol (default exact).
  bool equals(const Value& other, double real_tol = 0.0) const;
  bool operator==(const Value& other) const { return equals(other); }
  bool operator!=(const Value& other) const { return !equals(other); }

  /// Canonical text form: `true`, `42`, `33.4`, `"s"`, `{1.0, 2.0}`.
  /// Reals always carry a decimal point or exponent so the kind survives
  /// a parse round-trip.
  std::string repr() const;

 private:
  std::variant<bool, std::int64_t, double, std::string, Array> data_;
};

/// Whether `v` may be stored into a slot of kind `declared` (element kind
/// `declared_elem` for arrays). Integers widen into real slots; everything
/// else must match exactly.
bool kind_accepts(ValueKind declared, std::optional<ValueKind> declared_elem,
                  const Value& v);

/// Coerce `v` for storage into the declared kind (widens integers to real
/// where needed). Precondition: kind_accepts() holds.
Value coerce_to_kind(ValueKind declared, std::optional<ValueKind> declared_elem,
                     const Value& v);

/// Parses one value literal (`true`, `-3`, `0.5`, `"s"`, `'s'`,
/// `{1, 2, 3}`) from `text` starting at `pos`; advances `pos` past it.
Result<Value> parse_value_literal(std::string_view text, std::size_t& pos);

/// Parses a literal that must span the whole string (surrounding blanks ok).
Result<Value> parse_value_literal(std::string_view text);

/// Kind tokens used by the system model file: bool, int, real, string and
/// the array forms bool[], int[], real[], string[].
struct DeclaredKind {
  ValueKind kind;
  std::optional<ValueKind> element;
};
Result<DeclaredKind> parse_kind_token(std::string_view token);
std::string kind_token(const DeclaredKind& k);

}  // namespace coordconf
