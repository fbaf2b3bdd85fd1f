#ifndef GAUGEMOD_GROEBNER_HPP
#define GAUGEMOD_GROEBNER_HPP

#include "polynomial.hpp"

#include <deque>
#include <optional>
#include <utility>
#include <vector>

namespace gaugemod {

/// Ideal given by generators in a single ring. An empty generator list is the zero ideal.
class Ideal {
public:
  Ideal(RingPtr ring, std::vector<Polynomial> generators) : ring_(std::move(ring)), gens_(std::move(generators)) {
    for (const auto& g : gens_) {
      if (!same_ring(g.ring(), ring_)) throw MismatchError("ideal generator from a different ring");
      if (g.is_zero()) throw Error("ideal generators must be nonzero");
    }
  }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }

private:
  RingPtr ring_;
  std::vector<Polynomial> gens_;
};

/// Reduced (monic, tail-reduced) Gröbner basis of an ideal under a fixed order.
struct GroebnerBasis {
  RingPtr ring;
  MonomialOrder order;
  std::vector<Polynomial> basis;
  std::vector<ExponentVector> leads;

  bool is_unit() const { return basis.size() == 1 && basis.front().is_constant(); }
};

/// Remainder of multivariate division by the basis: no term is divisible by any leading monomial.
inline Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb) {
  if (!same_ring(p.ring(), gb.ring)) throw MismatchError("normal_form: polynomial from a different ring");
  if (gb.basis.empty() || p.is_zero()) return p;
  if (gb.is_unit()) return Polynomial(p.ring());

  std::map<ExponentVector, Rational, OrderLess> work(OrderLess{&gb.order});
  for (const auto& [e, c] : p.terms()) work.emplace(e, c);

  Polynomial rem(p.ring());
  while (!work.empty()) {
    auto top = std::prev(work.end());
    ExponentVector e = top->first;
    Rational c = top->second;
    std::size_t k = 0;
    while (k < gb.basis.size() && !divides(gb.leads[k], e)) ++k;
    if (k == gb.basis.size()) {
      rem.add_term(e, c);
      work.erase(top);
      continue;
    }
    // basis elements are monic: subtract c·x^(e - lead)·g
    ExponentVector shift = exp_sub(e, gb.leads[k]);
    for (const auto& [ge, gc] : gb.basis[k].terms()) {
      ExponentVector m = exp_add(ge, shift);
      auto [it, inserted] = work.try_emplace(m, -c * gc);
      if (!inserted) {
        it->second -= c * gc;
        if (it->second == 0) work.erase(it);
      }
    }
  }
  return rem;
}

inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord) {
  auto [ef, cf] = leading_term(f, ord);
  auto [eg, cg] = leading_term(g, ord);
  ExponentVector l = exp_lcm(ef, eg);
  return f.mul_term(exp_sub(l, ef), Rational(1 / cf)) - g.mul_term(exp_sub(l, eg), Rational(1 / cg));
}

namespace detail {

inline GroebnerBasis make_basis(RingPtr ring, const MonomialOrder& ord, std::vector<Polynomial> polys) {
  GroebnerBasis gb{std::move(ring), ord, std::move(polys), {}};
  for (const auto& g : gb.basis) gb.leads.push_back(leading_term(g, ord).first);
  return gb;
}

inline bool coprime(const ExponentVector& a, const ExponentVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

} // namespace detail

/// Buchberger's algorithm followed by minimization and tail reduction.
inline GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& ord = {}) {
  const RingPtr& ring = ideal.ring();
  std::vector<Polynomial> g;
  for (const auto& p : ideal.generators()) g.push_back(make_monic(p, ord));
  if (g.empty()) return detail::make_basis(ring, ord, {});

  std::deque<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 1; j < g.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);

  while (!pairs.empty()) {
    auto [i, j] = pairs.front();
    pairs.pop_front();
    auto li = leading_term(g[i], ord).first;
    auto lj = leading_term(g[j], ord).first;
    if (detail::coprime(li, lj)) continue;
    GroebnerBasis current = detail::make_basis(ring, ord, g);
    Polynomial r = normal_form(s_polynomial(g[i], g[j], ord), current);
    if (r.is_zero()) continue;
    g.push_back(make_monic(r, ord));
    if (g.back().is_constant()) {
      return detail::make_basis(ring, ord, {Polynomial::constant(ring, 1)});
    }
    for (std::size_t k = 0; k + 1 < g.size(); ++k) pairs.emplace_back(k, g.size() - 1);
  }

  // minimize: drop elements whose leading monomial is divisible by another's
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    auto li = leading_term(g[i], ord).first;
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j) continue;
      auto lj = leading_term(g[j], ord).first;
      if (divides(lj, li) && (lj != li || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(g[i]);
  }

  // tail-reduce each element against the others
  std::vector<Polynomial> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    auto [le, lc] = leading_term(minimal[i], ord);
    Polynomial tail = minimal[i] - Polynomial::monomial(ring, le, lc);
    Polynomial p = Polynomial::monomial(ring, le, lc) + normal_form(tail, detail::make_basis(ring, ord, others));
    reduced.push_back(make_monic(p, ord));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ord.less(leading_term(a, ord).first, leading_term(b, ord).first);
  });
  return detail::make_basis(ring, ord, std::move(reduced));
}

/// Every pairwise S-polynomial reduces to zero.
inline bool s_pairs_reduce_to_zero(const GroebnerBasis& gb) {
  for (std::size_t i = 0; i < gb.basis.size(); ++i)
    for (std::size_t j = i + 1; j < gb.basis.size(); ++j)
      if (!normal_form(s_polynomial(gb.basis[i], gb.basis[j], gb.order), gb).is_zero()) return false;
  return true;
}

inline bool is_member(const Polynomial& p, const GroebnerBasis& gb) { return normal_form(p, gb).is_zero(); }

inline bool is_member(const Polynomial& p, const Ideal& ideal, const MonomialOrder& ord = {}) {
  return is_member(p, buchberger(ideal, ord));
}

inline bool is_unit_ideal(const Ideal& ideal, const MonomialOrder& ord = {}) { return buchberger(ideal, ord).is_unit(); }

/// The quotient algebra A = Q[x]/I with cached basis. Elements are normal-form polynomials.
class QuotientRing {
public:
  explicit QuotientRing(const Ideal& ideal, const MonomialOrder& ord = {})
      : ideal_(ideal), gb_(buchberger(ideal, ord)) {}

  const RingPtr& ring() const { return ideal_.ring(); }
  const Ideal& ideal() const { return ideal_; }
  const GroebnerBasis& basis() const { return gb_; }
  const MonomialOrder& order() const { return gb_.order; }

  Polynomial reduce(const Polynomial& p) const { return normal_form(p, gb_); }
  bool is_zero(const Polynomial& p) const { return reduce(p).is_zero(); }
  bool equal(const Polynomial& a, const Polynomial& b) const { return is_zero(a - b); }

  Polynomial zero() const { return Polynomial(ring()); }
  Polynomial one() const { return reduce(Polynomial::constant(ring(), 1)); }
  Polynomial var(std::size_t i) const { return reduce(Polynomial::variable(ring(), i)); }

  std::string render(const Polynomial& p) const { return gaugemod::render(p, order()); }

private:
  Ideal ideal_;
  GroebnerBasis gb_;
};

using QuotientPtr = std::shared_ptr<const QuotientRing>;

} // namespace gaugemod

#endif
