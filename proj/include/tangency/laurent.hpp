#pragma once

// Laurent polynomials with integer coefficients over named symbols, and a
// small monomial rewrite system used to normalize chart-transition algebra.
//
// Normal form of an expression: every rule applied to exhaustion, products
// expanded, like terms collected, zero terms dropped, terms ordered
// lexicographically by (symbol, exponent) sequences.

#include "tangency/core.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace tangency {

/// Product of symbols with nonzero integer exponents.
class Monomial {
 public:
  Monomial() = default;

  static Monomial symbol(const std::string& name, int exponent = 1) {
    Monomial m;
    if (exponent != 0) m.exps_[name] = exponent;
    return m;
  }

  const std::map<std::string, int>& exponents() const noexcept { return exps_; }
  bool is_one() const noexcept { return exps_.empty(); }

  int exponent(const std::string& name) const {
    auto it = exps_.find(name);
    return it == exps_.end() ? 0 : it->second;
  }

  Monomial& operator*=(const Monomial& o) {
    for (const auto& [s, e] : o.exps_) {
      int& slot = exps_[s];
      slot += e;
      if (slot == 0) exps_.erase(s);
    }
    return *this;
  }
  friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }

  Monomial pow(int k) const {
    Monomial r;
    if (k == 0) return r;
    for (const auto& [s, e] : exps_) r.exps_[s] = e * k;
    return r;
  }
  Monomial inverse() const { return pow(-1); }

  /// The same monomial with `name` removed.
  Monomial without(const std::string& name) const {
    Monomial r = *this;
    r.exps_.erase(name);
    return r;
  }

  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;

  std::string str() const {
    if (exps_.empty()) return "1";
    std::string out;
    for (const auto& [s, e] : exps_) {
      if (!out.empty()) out += '*';
      out += s;
      if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
  }

 private:
  std::map<std::string, int> exps_;
};

/// Finite sum of integer multiples of monomials.
class Expr {
 public:
  Expr() = default;
  Expr(long long c) { add_term(Monomial{}, Integer(c)); }  // NOLINT: implicit constant
  Expr(Integer c) { add_term(Monomial{}, std::move(c)); }  // NOLINT
  Expr(const Monomial& m) { add_term(m, 1); }              // NOLINT

  static Expr symbol(const std::string& name, int exponent = 1) { return Expr(Monomial::symbol(name, exponent)); }
  static Expr term(const Monomial& m, Integer coeff) {
    Expr e;
    e.add_term(m, std::move(coeff));
    return e;
  }

  const std::map<Monomial, Integer>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Single term with coefficient +-1, i.e. a unit of the Laurent ring.
  bool is_unit() const { return terms_.size() == 1 && abs(terms_.begin()->second) == 1; }

  Expr& operator+=(const Expr& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Expr& operator-=(const Expr& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Expr operator-() const {
    Expr r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }
  friend Expr operator+(Expr a, const Expr& b) { return a += b; }
  friend Expr operator-(Expr a, const Expr& b) { return a -= b; }
  friend Expr operator*(const Expr& a, const Expr& b) {
    Expr r;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
  }
  Expr& operator*=(const Expr& o) { return *this = *this * o; }

  /// Inverse of a unit; throws for anything else.
  Expr unit_inverse() const {
    if (!is_unit()) throw std::domain_error("not a unit: " + str());
    const auto& [m, c] = *terms_.begin();
    return term(m.inverse(), c);
  }

  /// Apply a monomial-to-expression map term by term.
  Expr map_monomials(const std::function<Expr(const Monomial&)>& f) const {
    Expr r;
    for (const auto& [m, c] : terms_) r += Expr(c) * f(m);
    return r;
  }

  std::set<std::string> symbols() const {
    std::set<std::string> out;
    for (const auto& [m, c] : terms_)
      for (const auto& [s, e] : m.exponents()) out.insert(s);
    return out;
  }

  bool operator==(const Expr&) const = default;

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      const bool neg = c < 0;
      const Integer mag = neg ? Integer(-c) : c;
      if (first) {
        if (neg) out += '-';
      } else {
        out += neg ? " - " : " + ";
      }
      if (m.is_one()) {
        out += mag.str();
      } else {
        if (mag != 1) out += mag.str() + "*";
        out += m.str();
      }
      first = false;
    }
    return out;
  }

 private:
  void add_term(const Monomial& m, Integer c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  std::map<Monomial, Integer> terms_;
};

inline std::ostream& operator<<(std::ostream& os, const Expr& e) { return os << e.str(); }

/// Evaluate at complex values of the symbols; every symbol must be bound.
inline std::complex<double> evaluate(const Expr& e, const std::map<std::string, std::complex<double>>& at) {
  std::complex<double> total = 0.0;
  for (const auto& [m, c] : e.terms()) {
    std::complex<double> v = c.convert_to<double>();
    for (const auto& [s, k] : m.exponents()) {
      auto it = at.find(s);
      if (it == at.end()) throw std::invalid_argument("no value bound for symbol " + s);
      v *= std::pow(it->second, k);
    }
    total += v;
  }
  return total;
}

/// Rules of the form  symbol -> monomial, at most one per symbol, with an
/// acyclic dependency graph. Those two conditions make rewriting terminating
/// and the normal form independent of rule order.
class RewriteSystem {
 public:
  struct Rule {
    std::string lhs;
    Monomial rhs;
    std::string str() const { return lhs + " -> " + rhs.str(); }
  };

  void add_rule(const std::string& lhs, const Monomial& rhs) {
    if (rules_.count(lhs)) throw std::invalid_argument("second rule for symbol " + lhs);
    if (reaches(rhs, lhs)) throw std::invalid_argument("rule " + lhs + " -> " + rhs.str() + " creates a cycle");
    rules_.emplace(lhs, rhs);
    order_.push_back(lhs);
  }

  /// Replace an existing rule (or add one) without the acyclicity guarantee
  /// being relaxed. Used for fault injection.
  void replace_rule(const std::string& lhs, const Monomial& rhs) {
    if (rules_.erase(lhs)) order_.erase(std::find(order_.begin(), order_.end(), lhs));
    add_rule(lhs, rhs);
  }

  bool has_rule(const std::string& lhs) const { return rules_.count(lhs) != 0; }
  const Monomial& rule(const std::string& lhs) const { return rules_.at(lhs); }

  std::vector<Rule> rules() const {
    std::vector<Rule> out;
    for (const auto& l : order_) out.push_back({l, rules_.at(l)});
    return out;
  }

  Monomial normalize(const Monomial& m) const {
    Monomial out;
    for (const auto& [s, e] : m.exponents()) {
      auto it = rules_.find(s);
      if (it == rules_.end())
        out *= Monomial::symbol(s, e);
      else
        out *= normalize(it->second).pow(e);
    }
    return out;
  }

  Expr normalize(const Expr& e) const {
    return e.map_monomials([this](const Monomial& m) { return Expr(normalize(m)); });
  }

  /// Apply exactly one rule, everywhere it occurs, once.
  Expr apply_once(const Expr& e, const std::string& lhs) const {
    const Monomial& rhs = rules_.at(lhs);
    return e.map_monomials([&](const Monomial& m) {
      const int k = m.exponent(lhs);
      if (k == 0) return Expr(m);
      return Expr(m.without(lhs) * rhs.pow(k));
    });
  }

  /// Rewrite by cycling through rules in the given order until nothing
  /// changes. Yields the same result as normalize() for any order.
  Expr normalize_in_order(const Expr& e, const std::vector<std::string>& order) const {
    Expr cur = e;
    for (std::size_t round = 0; round <= rules_.size() + 1; ++round) {
      bool changed = false;
      for (const auto& lhs : order) {
        Expr next = apply_once(cur, lhs);
        if (next != cur) {
          cur = std::move(next);
          changed = true;
        }
      }
      if (!changed) return cur;
    }
    if (!is_normal(cur)) throw InternalError("rewriting did not terminate in the expected number of rounds");
    return cur;
  }

  /// Rewrite, recording each rule application as "rule  =>  expression".
  Expr normalize_traced(const Expr& e, std::vector<std::string>& trace) const {
    Expr cur = e;
    for (;;) {
      bool changed = false;
      for (const auto& lhs : order_) {
        if (!cur.symbols().count(lhs)) continue;
        cur = apply_once(cur, lhs);
        trace.push_back(lhs + " -> " + rules_.at(lhs).str() + "  =>  " + cur.str());
        changed = true;
      }
      if (!changed) return cur;
    }
  }

  bool is_normal(const Expr& e) const {
    for (const auto& s : e.symbols())
      if (rules_.count(s)) return false;
    return true;
  }

 private:
  bool reaches(const Monomial& from, const std::string& target) const {
    for (const auto& [s, e] : from.exponents()) {
      if (s == target) return true;
      auto it = rules_.find(s);
      if (it != rules_.end() && reaches(it->second, target)) return true;
    }
    return false;
  }

  std::map<std::string, Monomial> rules_;
  std::vector<std::string> order_;
};

}  // namespace tangency
