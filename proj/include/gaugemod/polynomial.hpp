#ifndef GAUGEMOD_POLYNOMIAL_HPP
#define GAUGEMOD_POLYNOMIAL_HPP

#include "rational.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

namespace gaugemod {

/// Exponents of one monomial; length equals the number of ring variables.
using ExponentVector = std::vector<int>;

inline int total_degree(const ExponentVector& e) { return std::accumulate(e.begin(), e.end(), 0); }

inline bool divides(const ExponentVector& a, const ExponentVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline ExponentVector exp_add(const ExponentVector& a, const ExponentVector& b) {
  ExponentVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline ExponentVector exp_sub(const ExponentVector& a, const ExponentVector& b) {
  ExponentVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline ExponentVector exp_lcm(const ExponentVector& a, const ExponentVector& b) {
  ExponentVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

/// Ordered variable names plus the total-degree cap that every product is checked against.
struct Ring {
  std::vector<std::string> variables;
  int max_degree = 64;

  std::size_t size() const { return variables.size(); }

  std::size_t index_of(const std::string& name) const {
    auto it = std::find(variables.begin(), variables.end(), name);
    if (it == variables.end()) throw Error("unknown variable '" + name + "'");
    return static_cast<std::size_t>(it - variables.begin());
  }
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(std::vector<std::string> vars, int max_degree = 64) {
  return std::make_shared<const Ring>(Ring{std::move(vars), max_degree});
}

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && a->variables == b->variables);
}

/// Total order on exponent vectors compatible with multiplication.
struct MonomialOrder {
  enum class Kind { GradedReverseLex, Lex };

  Kind kind = Kind::GradedReverseLex;
  /// priority[0] is the largest variable; empty means declaration order.
  std::vector<int> priority;

  static MonomialOrder grevlex(std::vector<int> prio = {}) { return {Kind::GradedReverseLex, std::move(prio)}; }
  static MonomialOrder lex(std::vector<int> prio = {}) { return {Kind::Lex, std::move(prio)}; }

  int var_at(std::size_t rank) const { return priority.empty() ? static_cast<int>(rank) : priority[rank]; }

  /// True iff a < b.
  bool less(const ExponentVector& a, const ExponentVector& b) const {
    const std::size_t n = a.size();
    if (kind == Kind::GradedReverseLex) {
      int da = total_degree(a), db = total_degree(b);
      if (da != db) return da < db;
      for (std::size_t r = n; r-- > 0;) {
        int v = var_at(r);
        if (a[v] != b[v]) return a[v] > b[v];
      }
      return false;
    }
    for (std::size_t r = 0; r < n; ++r) {
      int v = var_at(r);
      if (a[v] != b[v]) return a[v] < b[v];
    }
    return false;
  }

  bool operator==(const MonomialOrder& o) const { return kind == o.kind && priority == o.priority; }
};

struct OrderLess {
  const MonomialOrder* order;
  bool operator()(const ExponentVector& a, const ExponentVector& b) const { return order->less(a, b); }
};

/// Sparse polynomial with rational coefficients. Never stores a zero coefficient.
class Polynomial {
public:
  using TermMap = std::map<ExponentVector, Rational>;

  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr ring, const Rational& c) {
    Polynomial p(ring);
    if (c != 0) p.terms_.emplace(ExponentVector(ring->size(), 0), c);
    return p;
  }

  static Polynomial variable(RingPtr ring, std::size_t index) {
    Polynomial p(ring);
    ExponentVector e(ring->size(), 0);
    e.at(index) = 1;
    p.terms_.emplace(std::move(e), Rational(1));
    return p;
  }

  static Polynomial variable(RingPtr ring, const std::string& name) {
    auto idx = ring->index_of(name);
    return variable(std::move(ring), idx);
  }

  static Polynomial monomial(RingPtr ring, ExponentVector e, const Rational& c = 1) {
    if (e.size() != ring->size()) throw MismatchError("exponent vector length does not match ring");
    if (total_degree(e) > ring->max_degree) throw BudgetError("total degree exceeds cap of " + std::to_string(ring->max_degree));
    Polynomial p(ring);
    if (c != 0) p.terms_.emplace(std::move(e), c);
    return p;
  }

  const RingPtr& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
  }

  Rational constant_term() const {
    if (terms_.empty()) return 0;
    auto it = terms_.find(ExponentVector(ring_->size(), 0));
    return it == terms_.end() ? Rational(0) : it->second;
  }

  int degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
    return d;
  }

  /// Adds c·x^e in place.
  void add_term(const ExponentVector& e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Polynomial operator-() const {
    Polynomial r(*this);
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }

  Polynomial& operator+=(const Polynomial& q) {
    check_ring(q);
    for (const auto& [e, c] : q.terms_) add_term(e, c);
    return *this;
  }

  Polynomial& operator-=(const Polynomial& q) {
    check_ring(q);
    for (const auto& [e, c] : q.terms_) add_term(e, -c);
    return *this;
  }

  Polynomial& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }

  friend Polynomial operator+(Polynomial p, const Polynomial& q) { return p += q; }
  friend Polynomial operator-(Polynomial p, const Polynomial& q) { return p -= q; }
  friend Polynomial operator*(Polynomial p, const Rational& s) { return p *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial p) { return p *= s; }

  friend Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    p.check_ring(q);
    Polynomial r(p.ring_);
    const int cap = p.ring_->max_degree;
    for (const auto& [e1, c1] : p.terms_) {
      for (const auto& [e2, c2] : q.terms_) {
        ExponentVector e = exp_add(e1, e2);
        if (total_degree(e) > cap) throw BudgetError("total degree exceeds cap of " + std::to_string(cap));
        r.add_term(e, c1 * c2);
      }
    }
    return r;
  }

  Polynomial& operator*=(const Polynomial& q) { return *this = *this * q; }

  /// Multiplies by the monomial c·x^e.
  Polynomial mul_term(const ExponentVector& e, const Rational& c) const {
    Polynomial r(ring_);
    const int cap = ring_->max_degree;
    for (const auto& [e1, c1] : terms_) {
      ExponentVector m = exp_add(e1, e);
      if (total_degree(m) > cap) throw BudgetError("total degree exceeds cap of " + std::to_string(cap));
      r.terms_.emplace(std::move(m), c1 * c);
    }
    if (c == 0) r.terms_.clear();
    return r;
  }

  Polynomial pow(int n) const {
    if (n < 0) throw Error("negative polynomial power");
    Polynomial r = constant(ring_, 1);
    for (int i = 0; i < n; ++i) r *= *this;
    return r;
  }

  friend bool operator==(const Polynomial& p, const Polynomial& q) {
    return same_ring(p.ring_, q.ring_) && p.terms_ == q.terms_;
  }
  friend bool operator!=(const Polynomial& p, const Polynomial& q) { return !(p == q); }

  /// Deterministic strict weak order (storage order), for use as a map key.
  friend bool operator<(const Polynomial& p, const Polynomial& q) { return p.terms_ < q.terms_; }

  void check_ring(const Polynomial& q) const {
    if (!same_ring(ring_, q.ring_)) throw MismatchError("polynomials belong to different rings");
  }

private:
  RingPtr ring_;
  TermMap terms_;
};

/// Formal partial derivative with respect to variable index v.
inline Polynomial partial(const Polynomial& p, std::size_t v) {
  if (v >= p.ring()->size()) throw Error("unknown variable index " + std::to_string(v));
  Polynomial r(p.ring());
  for (const auto& [e, c] : p.terms()) {
    if (e[v] == 0) continue;
    ExponentVector d = e;
    d[v] -= 1;
    r.add_term(d, c * e[v]);
  }
  return r;
}

inline Polynomial partial(const Polynomial& p, const std::string& var) { return partial(p, p.ring()->index_of(var)); }

/// Maximal term under the given order.
inline std::pair<ExponentVector, Rational> leading_term(const Polynomial& p, const MonomialOrder& ord) {
  if (p.is_zero()) throw Error("leading term of the zero polynomial");
  auto best = p.terms().begin();
  for (auto it = std::next(best); it != p.terms().end(); ++it)
    if (ord.less(best->first, it->first)) best = it;
  return *best;
}

/// Divides by the leading coefficient under ord.
inline Polynomial make_monic(const Polynomial& p, const MonomialOrder& ord) {
  if (p.is_zero()) return p;
  Rational lc = leading_term(p, ord).second;
  return p * Rational(1 / lc);
}

/// Terms sorted in decreasing order under ord.
inline std::vector<std::pair<ExponentVector, Rational>> sorted_terms(const Polynomial& p, const MonomialOrder& ord) {
  std::vector<std::pair<ExponentVector, Rational>> v(p.terms().begin(), p.terms().end());
  std::sort(v.begin(), v.end(), [&](const auto& a, const auto& b) { return ord.less(b.first, a.first); });
  return v;
}

inline std::string render_monomial(const ExponentVector& e, const Ring& ring) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += ring.variables[i];
    if (e[i] > 1) s += '^' + std::to_string(e[i]);
  }
  return s;
}

/// Canonical text: decreasing terms under ord, `a/b` coefficients, `*` between factors.
inline std::string render(const Polynomial& p, const MonomialOrder& ord = {}) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : sorted_terms(p, ord)) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    std::string mono = render_monomial(e, *p.ring());
    if (mono.empty()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += to_string(mag) + "*" + mono;
    }
  }
  return out;
}

} // namespace gaugemod

#endif
