#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "k3cert/errors.hpp"
#include "k3cert/exactalg/poly.hpp"

namespace k3cert {

// Polynomial text object:
//   {"ring":"Q3","terms":[{"exps":[0,0,1,0,1],"coeff":"1"},...]}
// Terms are listed in grlex order (leading term first); coefficients are
// "p/q", or "p" when q = 1. Rings are resolved by name among the fixed rings.

inline nlohmann::ordered_json poly_to_json(const Poly& p) {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& [m, c] : p.terms()) {
    nlohmann::ordered_json term;
    term["exps"] = std::vector<int>(m.exps().begin(), m.exps().end());
    term["coeff"] = c.to_string();
    terms.push_back(std::move(term));
  }
  nlohmann::ordered_json out;
  out["ring"] = p.ring()->name();
  out["terms"] = std::move(terms);
  return out;
}

inline std::string serialize_poly(const Poly& p) { return poly_to_json(p).dump(); }

inline Poly poly_from_json(const nlohmann::json& j) {
  try {
    const RingPtr ring = rings::by_name(j.at("ring").get<std::string>());
    Poly::Terms terms;
    for (const auto& term : j.at("terms")) {
      Monomial m(term.at("exps").get<std::vector<int>>());
      if (m.size() != ring->num_vars()) throw ParseError("poly: exponent vector has wrong length");
      const Scalar c = Scalar::parse(term.at("coeff").get<std::string>());
      if (c.is_zero()) throw ParseError("poly: explicit zero coefficient");
      if (!terms.emplace(std::move(m), c).second) throw ParseError("poly: repeated monomial");
    }
    return Poly(ring, std::move(terms));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("poly: ") + e.what());
  }
}

inline Poly parse_poly(std::string_view text) {
  try {
    return poly_from_json(nlohmann::json::parse(text));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("poly: ") + e.what());
  }
}

namespace detail {

class ExprParser {
 public:
  ExprParser(const RingPtr& ring, std::string_view text) : ring_(ring), text_(text) {}

  Poly parse() {
    Poly p = expr();
    skip_space();
    if (pos_ != text_.size()) fail("trailing input");
    return p;
  }

 private:
  Poly expr() {
    skip_space();
    bool negate = false;
    if (peek() == '+' || peek() == '-') negate = text_[pos_++] == '-';
    Poly acc = term();
    if (negate) acc = -acc;
    for (;;) {
      skip_space();
      const char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      Poly t = term();
      if (c == '+') acc += t; else acc -= t;
    }
    return acc;
  }

  Poly term() {
    Poly acc = factor();
    for (;;) {
      skip_space();
      if (peek() != '*') break;
      ++pos_;
      acc *= factor();
    }
    return acc;
  }

  Poly factor() {
    skip_space();
    Poly base(ring_);
    const char c = peek();
    if (c == '(') {
      ++pos_;
      base = expr();
      skip_space();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
    } else if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
      std::string digits = number();
      skip_space();
      if (peek() == '/') {
        ++pos_;
        skip_space();
        digits += "/" + number();
      }
      return Poly::constant(ring_, Scalar::parse(digits));
    } else if (std::isalpha(static_cast<unsigned char>(c)) != 0) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      try {
        base = Poly::var(ring_, name);
      } catch (const InvalidArgument&) {
        fail("unknown variable '" + name + "'");
      }
    } else {
      fail("unexpected character");
    }
    skip_space();
    if (peek() == '^') {
      ++pos_;
      skip_space();
      base = base.pow(static_cast<unsigned>(std::stoul(number())));
    }
    return base;
  }

  std::string number() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
    if (start == pos_) fail("expected a number");
    return std::string(text_.substr(start, pos_ - start));
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("expression '" + std::string(text_) + "' at " + std::to_string(pos_) + ": " + what);
  }

  const RingPtr& ring_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses infix notation such as "U0*U2 - U1^2" or "3/2*X0^2*Y1" over ring.
inline Poly parse_expr(const RingPtr& ring, std::string_view text) {
  return detail::ExprParser(ring, text).parse();
}

}  // namespace k3cert
