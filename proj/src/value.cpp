#include "coordconf/value.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <sstream>

namespace coordconf {

const char* value_kind_name(ValueKind kind) {
  switch (kind) {
    case ValueKind::Boolean: return "bool";
    case ValueKind::Integer: return "int";
    case ValueKind::Real: return "real";
    case ValueKind::String: return "string";
    case ValueKind::Array: return "array";
  }
  return "?";
}

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnknownComponent: return "UnknownComponent";
    case ErrorCode::UnknownPort: return "UnknownPort";
    case ErrorCode::UnknownProperty: return "UnknownProperty";
    case ErrorCode::UnknownOperation: return "UnknownOperation";
    case ErrorCode::UnknownConnection: return "UnknownConnection";
    case ErrorCode::UnknownConfiguration: return "UnknownConfiguration";
    case ErrorCode::UnknownComponentType: return "UnknownComponentType";
    case ErrorCode::UnknownTarget: return "UnknownTarget";
    case ErrorCode::DuplicateId: return "DuplicateId";
    case ErrorCode::DuplicateConnection: return "DuplicateConnection";
    case ErrorCode::IllegalTransition: return "IllegalTransition";
    case ErrorCode::ComponentFatal: return "ComponentFatal";
    case ErrorCode::FatalEndpoint: return "FatalEndpoint";
    case ErrorCode::DestroyWhileRunning: return "DestroyWhileRunning";
    case ErrorCode::KindMismatch: return "KindMismatch";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::QueueFull: return "QueueFull";
    case ErrorCode::EmptyStack: return "EmptyStack";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "?";
}

std::string Error::to_string() const {
  std::string out = error_code_name(code);
  if (!message.empty()) {
    out += ": ";
    out += message;
  }
  return out;
}

Result<Value> Value::array(Array elements) {
  bool has_real = false;
  bool has_int = false;
  std::optional<ValueKind> elem;
  for (const Value& e : elements) {
    ValueKind k = e.kind();
    if (k == ValueKind::Array) {
      return Error{ErrorCode::KindMismatch, "nested arrays are not allowed"};
    }
    if (k == ValueKind::Integer) has_int = true;
    if (k == ValueKind::Real) has_real = true;
    if (!elem) {
      elem = k;
    } else if (*elem != k) {
      bool numeric_mix = (k == ValueKind::Integer || k == ValueKind::Real) &&
                         (*elem == ValueKind::Integer || *elem == ValueKind::Real);
      if (!numeric_mix) {
        return Error{ErrorCode::KindMismatch,
                     std::string("mixed array element kinds: ") +
                         value_kind_name(*elem) + " and " + value_kind_name(k)};
      }
      elem = ValueKind::Real;
    }
  }
  if (has_int && has_real) {
    for (Value& e : elements) {
      if (e.kind() == ValueKind::Integer) e = Value(static_cast<double>(e.as_int()));
    }
  }
  Value v;
  v.data_ = std::move(elements);
  return v;
}

ValueKind Value::kind() const {
  switch (data_.index()) {
    case 0: return ValueKind::Boolean;
    case 1: return ValueKind::Integer;
    case 2: return ValueKind::Real;
    case 3: return ValueKind::String;
    default: return ValueKind::Array;
  }
}

ValueKind Value::element_kind() const {
  const Array& a = as_array();
  return a.empty() ? ValueKind::Real : a.front().kind();
}

double Value::numeric() const {
  return kind() == ValueKind::Integer ? static_cast<double>(as_int()) : as_real();
}

bool Value::equals(const Value& other, double real_tol) const {
  if (kind() != other.kind()) return false;
  switch (kind()) {
    case ValueKind::Boolean: return as_bool() == other.as_bool();
    case ValueKind::Integer: return as_int() == other.as_int();
    case ValueKind::Real:
      if (real_tol <= 0.0) return as_real() == other.as_real();
      return std::fabs(as_real() - other.as_real()) <= real_tol;
    case ValueKind::String: return as_string() == other.as_string();
    case ValueKind::Array: {
      const Array& a = as_array();
      const Array& b = other.as_array();
      if (a.size() != b.size()) return false;
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i].equals(b[i], real_tol)) return false;
      }
      return true;
    }
  }
  return false;
}

namespace {

std::string real_repr(double d) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), d);
  std::string s(buf, res.ptr);
  // keep the kind visible: 3.0 must not print as "3"
  if (s.find_first_of(".eE") == std::string::npos &&
      s.find_first_not_of("-0123456789") == std::string::npos) {
    s += ".0";
  }
  return s;
}

std::string quote_string(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  out += '"';
  return out;
}

}  // namespace

std::string Value::repr() const {
  switch (kind()) {
    case ValueKind::Boolean: return as_bool() ? "true" : "false";
    case ValueKind::Integer: return std::to_string(as_int());
    case ValueKind::Real: return real_repr(as_real());
    case ValueKind::String: return quote_string(as_string());
    case ValueKind::Array: {
      std::string out = "{";
      const Array& a = as_array();
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) out += ", ";
        out += a[i].repr();
      }
      out += "}";
      return out;
    }
  }
  return "?";
}

bool kind_accepts(ValueKind declared, std::optional<ValueKind> declared_elem,
                  const Value& v) {
  if (declared == ValueKind::Real && v.kind() == ValueKind::Integer) return true;
  if (declared != v.kind()) return false;
  if (declared != ValueKind::Array) return true;
  if (!declared_elem) return true;
  if (v.as_array().empty()) return true;
  ValueKind ek = v.element_kind();
  if (*declared_elem == ValueKind::Real && ek == ValueKind::Integer) return true;
  return *declared_elem == ek;
}

Value coerce_to_kind(ValueKind declared, std::optional<ValueKind> declared_elem,
                     const Value& v) {
  if (declared == ValueKind::Real && v.kind() == ValueKind::Integer) {
    return Value(static_cast<double>(v.as_int()));
  }
  if (declared == ValueKind::Array && declared_elem &&
      *declared_elem == ValueKind::Real && !v.as_array().empty() &&
      v.element_kind() == ValueKind::Integer) {
    Value::Array widened;
    widened.reserve(v.as_array().size());
    for (const Value& e : v.as_array()) {
      widened.push_back(Value(static_cast<double>(e.as_int())));
    }
    return Value::array(std::move(widened)).value();
  }
  return v;
}

namespace {

void skip_blanks(std::string_view text, std::size_t& pos) {
  while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
}

Result<Value> parse_string_literal(std::string_view text, std::size_t& pos) {
  char q = text[pos];
  ++pos;
  std::string out;
  while (pos < text.size() && text[pos] != q) {
    char c = text[pos];
    if (c == '\\' && pos + 1 < text.size()) {
      ++pos;
      char e = text[pos];
      switch (e) {
        case 'n': out += '\n'; break;
        case 't': out += '\t'; break;
        default: out += e;
      }
    } else {
      out += c;
    }
    ++pos;
  }
  if (pos >= text.size()) {
    return Error{ErrorCode::ParseError, "unterminated string literal"};
  }
  ++pos;  // closing quote
  return Value(std::move(out));
}

Result<Value> parse_number_literal(std::string_view text, std::size_t& pos) {
  std::size_t start = pos;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
  bool is_real = false;
  while (pos < text.size()) {
    char c = text[pos];
    if (c >= '0' && c <= '9') {
      ++pos;
    } else if (c == '.' || c == 'e' || c == 'E') {
      is_real = true;
      ++pos;
      if ((c == 'e' || c == 'E') && pos < text.size() &&
          (text[pos] == '-' || text[pos] == '+')) {
        ++pos;
      }
    } else {
      break;
    }
  }
  std::string tok(text.substr(start, pos - start));
  if (tok.empty() || tok == "-" || tok == "+") {
    return Error{ErrorCode::ParseError, "malformed number"};
  }
  if (is_real) {
    char* end = nullptr;
    double d = std::strtod(tok.c_str(), &end);
    if (end != tok.c_str() + tok.size()) {
      return Error{ErrorCode::ParseError, "malformed number '" + tok + "'"};
    }
    return Value(d);
  }
  std::int64_t i = 0;
  auto res = std::from_chars(tok.data(), tok.data() + tok.size(), i);
  if (res.ec != std::errc() || res.ptr != tok.data() + tok.size()) {
    return Error{ErrorCode::ParseError, "malformed integer '" + tok + "'"};
  }
  return Value(i);
}

}  // namespace

Result<Value> parse_value_literal(std::string_view text, std::size_t& pos) {
  skip_blanks(text, pos);
  if (pos >= text.size()) {
    return Error{ErrorCode::ParseError, "expected a value"};
  }
  char c = text[pos];
  if (c == '"' || c == '\'') return parse_string_literal(text, pos);
  if (c == '{') {
    ++pos;
    Value::Array elems;
    skip_blanks(text, pos);
    if (pos < text.size() && text[pos] == '}') {
      return Error{ErrorCode::ParseError, "empty array literal"};
    }
    while (true) {
      auto e = parse_value_literal(text, pos);
      if (!e.ok()) return e;
      elems.push_back(std::move(e.value()));
      skip_blanks(text, pos);
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      break;
    }
    skip_blanks(text, pos);
    if (pos >= text.size() || text[pos] != '}') {
      return Error{ErrorCode::ParseError, "expected '}' after array elements"};
    }
    ++pos;
    return Value::array(std::move(elems));
  }
  if (text.substr(pos, 4) == "true" &&
      (pos + 4 >= text.size() || !std::isalnum(static_cast<unsigned char>(text[pos + 4])))) {
    pos += 4;
    return Value(true);
  }
  if (text.substr(pos, 5) == "false" &&
      (pos + 5 >= text.size() || !std::isalnum(static_cast<unsigned char>(text[pos + 5])))) {
    pos += 5;
    return Value(false);
  }
  return parse_number_literal(text, pos);
}

Result<Value> parse_value_literal(std::string_view text) {
  std::size_t pos = 0;
  auto v = parse_value_literal(text, pos);
  if (!v.ok()) return v;
  skip_blanks(text, pos);
  if (pos != text.size()) {
    return Error{ErrorCode::ParseError,
                 "trailing characters after value: '" + std::string(text.substr(pos)) + "'"};
  }
  return v;
}

Result<DeclaredKind> parse_kind_token(std::string_view token) {
  bool is_array = false;
  std::string_view base = token;
  if (base.size() > 2 && base.substr(base.size() - 2) == "[]") {
    is_array = true;
    base = base.substr(0, base.size() - 2);
  }
  ValueKind k;
  if (base == "bool") k = ValueKind::Boolean;
  else if (base == "int") k = ValueKind::Integer;
  else if (base == "real") k = ValueKind::Real;
  else if (base == "string") k = ValueKind::String;
  else {
    return Error{ErrorCode::ParseError, "unknown kind '" + std::string(token) + "'"};
  }
  if (is_array) return DeclaredKind{ValueKind::Array, k};
  return DeclaredKind{k, std::nullopt};
}

std::string kind_token(const DeclaredKind& k) {
  if (k.kind == ValueKind::Array) {
    return std::string(value_kind_name(*k.element)) + "[]";
  }
  return value_kind_name(k.kind);
}

}  // namespace coordconf
