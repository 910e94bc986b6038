#pragma once

#include <string>
#include <utility>
#include <vector>

#include "interpolate.hpp"

namespace semisym {

// Canonical JSON: compact, keys in fixed order, terms graded-lex descending,
// coefficients as coprime integer polynomial pairs with positive-lead
// denominator. Identical values serialize to identical bytes.

namespace jsonio {

// the coprime integer pair (p*N, q*D) from num = (p/q)*N, den = D
inline std::pair<std::vector<Int>, std::vector<Int>> integer_pair(const RatFunc& x) {
  std::pair<std::vector<Int>, std::vector<Int>> out;
  if (x.is_zero()) {
    out.first = {Int(0)};
    out.second = {Int(1)};
    return out;
  }
  Rational c = x.num().content();
  for (int i = 0; i <= x.num().degree(); ++i) {
    Rational v = x.num().coeff(i) / c;
    out.first.push_back(v.get_num() * c.get_num());
  }
  for (int i = 0; i <= x.den().degree(); ++i)
    out.second.push_back(x.den().coeff(i).get_num() * c.get_den());
  return out;
}

inline void append_int_list(std::string& s, const std::vector<Int>& v) {
  s += '[';
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += v[i].get_str();
  }
  s += ']';
}

inline void append_ints(std::string& s, const IntVec& v) {
  s += '[';
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  s += ']';
}

inline void append_coeff_fields(std::string& s, const RatFunc& c) {
  auto [num, den] = integer_pair(c);
  s += "\"num\":";
  append_int_list(s, num);
  s += ",\"den\":";
  append_int_list(s, den);
}

}  // namespace jsonio

inline std::string to_json(const MultiPoly& f) {
  std::string s = "{\"n\":" + std::to_string(f.nvars()) + ",\"terms\":[";
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    if (!first) s += ',';
    first = false;
    s += "{\"exp\":";
    jsonio::append_ints(s, e);
    s += ',';
    jsonio::append_coeff_fields(s, c);
    s += '}';
  }
  s += "]}";
  return s;
}

inline std::string to_json(const RExpansion& ex) {
  const char* tag = ex.basis == RExpansion::Basis::Elementary ? "elementary"
                    : ex.basis == RExpansion::Basis::R        ? "R"
                    : ex.basis == RExpansion::Basis::RBar     ? "Rbar"
                                                              : "monomial";
  std::string s =
      "{\"n\":" + std::to_string(ex.n) + ",\"basis\":\"" + tag + "\",\"terms\":[";
  bool first = true;
  for (const auto& [mu, c] : ex.coeffs) {
    if (!first) s += ',';
    first = false;
    s += "{\"mu\":";
    jsonio::append_ints(s, mu);
    s += ',';
    jsonio::append_coeff_fields(s, c);
    s += '}';
  }
  s += "]}";
  return s;
}

// ---- minimal reader for the schemas above ----

struct JsonValue {
  enum class Kind { Null, Number, String, Array, Object } kind = Kind::Null;
  std::string scalar;  // number spelling or string body
  std::vector<JsonValue> items;
  std::vector<std::pair<std::string, JsonValue>> fields;

  const JsonValue& at(const std::string& key) const {
    for (const auto& [k, v] : fields)
      if (k == key) return v;
    throw std::domain_error("json: missing key '" + key + "'");
  }
  bool has(const std::string& key) const {
    for (const auto& [k, v] : fields)
      if (k == key) return true;
    return false;
  }
  long as_long() const { return std::stol(scalar); }
  Int as_int() const { return Int(scalar); }
};

namespace jsonio {

class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {}

  JsonValue parse() {
    JsonValue v = value();
    skip_ws();
    if (pos_ != s_.size()) throw std::domain_error("json: trailing characters");
    return v;
  }

 private:
  const std::string& s_;
  size_t pos_ = 0;

  void skip_ws() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\n' || s_[pos_] == '\t' ||
                                s_[pos_] == '\r'))
      ++pos_;
  }
  char peek() {
    skip_ws();
    if (pos_ >= s_.size()) throw std::domain_error("json: unexpected end");
    return s_[pos_];
  }
  void expect(char c) {
    if (peek() != c) throw std::domain_error(std::string("json: expected '") + c + "'");
    ++pos_;
  }

  JsonValue value() {
    char c = peek();
    if (c == '{') return object();
    if (c == '[') return array();
    if (c == '"') return string();
    return number();
  }

  JsonValue object() {
    JsonValue v;
    v.kind = JsonValue::Kind::Object;
    expect('{');
    if (peek() == '}') {
      ++pos_;
      return v;
    }
    while (true) {
      JsonValue key = string();
      expect(':');
      v.fields.emplace_back(key.scalar, value());
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      expect('}');
      return v;
    }
  }

  JsonValue array() {
    JsonValue v;
    v.kind = JsonValue::Kind::Array;
    expect('[');
    if (peek() == ']') {
      ++pos_;
      return v;
    }
    while (true) {
      v.items.push_back(value());
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      expect(']');
      return v;
    }
  }

  JsonValue string() {
    JsonValue v;
    v.kind = JsonValue::Kind::String;
    expect('"');
    while (pos_ < s_.size() && s_[pos_] != '"') v.scalar += s_[pos_++];
    expect('"');
    return v;
  }

  JsonValue number() {
    JsonValue v;
    v.kind = JsonValue::Kind::Number;
    size_t start = pos_;
    if (pos_ < s_.size() && s_[pos_] == '-') ++pos_;
    while (pos_ < s_.size() && s_[pos_] >= '0' && s_[pos_] <= '9') ++pos_;
    if (pos_ == start) throw std::domain_error("json: malformed number");
    v.scalar = s_.substr(start, pos_ - start);
    return v;
  }
};

inline IntVec read_ints(const JsonValue& arr) {
  IntVec out;
  for (const auto& x : arr.items) out.push_back(static_cast<int>(x.as_long()));
  return out;
}

inline RPoly read_int_poly(const JsonValue& arr) {
  std::vector<Rational> c;
  for (const auto& x : arr.items) c.emplace_back(x.as_int());
  return RPoly::from_coeffs(std::move(c));
}

inline RatFunc read_coeff(const JsonValue& obj) {
  return RatFunc(read_int_poly(obj.at("num")), read_int_poly(obj.at("den")));
}

}  // namespace jsonio

inline JsonValue parse_json(const std::string& text) { return jsonio::Parser(text).parse(); }

inline MultiPoly multipoly_from_json(const std::string& text) {
  JsonValue v = parse_json(text);
  int n = static_cast<int>(v.at("n").as_long());
  MultiPoly f(n);
  for (const auto& term : v.at("terms").items)
    f += MultiPoly::monomial(n, jsonio::read_ints(term.at("exp")),
                             jsonio::read_coeff(term));
  return f;
}

// specialization of every coefficient at a rational parameter value
inline MultiPoly specialize(const MultiPoly& f, const Rational& rv) {
  MultiPoly out(f.nvars());
  for (const auto& [e, c] : f.terms()) out += MultiPoly::monomial(f.nvars(), e, c.eval(rv));
  return out;
}

}  // namespace semisym
