#ifndef GAUGEMOD_GLREP_HPP
#define GAUGEMOD_GLREP_HPP

#include "matrix.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gaugemod {

/// Default cap on N^k·k! for the symmetrized central elements.
inline constexpr std::uint64_t default_term_budget = 200000;

/// Finite-dimensional gl_N representation: rho(E_ij) for 0-based i, j.
class GlModule {
public:
  /// Validates [E_ij, E_kl] = d_jk E_il - d_li E_kj; reports the first failing quadruple (1-based).
  GlModule(std::size_t n, std::vector<Matrix> matrices, std::string label = "custom")
      : n_(n), rho_(std::move(matrices)), label_(std::move(label)) {
    if (rho_.size() != n_ * n_) throw Error("expected N^2 = " + std::to_string(n_ * n_) + " matrices");
    dim_ = n_ == 0 ? 0 : rho_.front().rows();
    for (const auto& m : rho_)
      if (m.rows() != dim_ || m.cols() != dim_) throw Error("representation matrices must be square of equal size");
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        for (std::size_t k = 0; k < n_; ++k)
          for (std::size_t l = 0; l < n_; ++l) {
            Matrix expected(dim_, dim_);
            if (j == k) expected += rho(i, l);
            if (l == i) expected -= rho(k, j);
            if (commutator(rho(i, j), rho(k, l)) != expected)
              throw Error("gl_N relation fails for (i,j,k,l) = (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                          "," + std::to_string(k + 1) + "," + std::to_string(l + 1) + ")");
          }
  }

  std::size_t rank() const { return n_; }
  std::size_t dim() const { return dim_; }
  const std::string& label() const { return label_; }
  const Matrix& rho(std::size_t i, std::size_t j) const { return rho_.at(i * n_ + j); }

private:
  std::size_t n_, dim_ = 0;
  std::vector<Matrix> rho_;
  std::string label_;
};

namespace detail {

inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> mask(n, false);
  std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(k), true);
  do {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask[i]) s.push_back(i);
    out.push_back(std::move(s));
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return out;
}

} // namespace detail

/// k-element subsets of {0..n-1} in lexicographic order; the basis of Lambda^k.
inline std::vector<std::vector<std::size_t>> wedge_basis(std::size_t n, std::size_t k) {
  if (k > n) return {};
  return detail::subsets(n, k);
}

/// Lambda^k of the natural module; Lambda^0 is trivial.
inline GlModule exterior_power(std::size_t n, std::size_t k) {
  if (k > n) throw Error("exterior power degree " + std::to_string(k) + " out of range for N = " + std::to_string(n));
  auto basis = wedge_basis(n, k);
  std::map<std::vector<std::size_t>, std::size_t> index;
  for (std::size_t b = 0; b < basis.size(); ++b) index[basis[b]] = b;
  std::vector<Matrix> rho;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Matrix m(basis.size(), basis.size());
      for (std::size_t b = 0; b < basis.size(); ++b) {
        const auto& s = basis[b];
        auto pos = std::find(s.begin(), s.end(), j);
        if (pos == s.end()) continue;
        if (i != j && std::find(s.begin(), s.end(), i) != s.end()) continue;
        // replace e_j by e_i in place, then sort counting transpositions
        std::vector<std::size_t> t = s;
        t[static_cast<std::size_t>(pos - s.begin())] = i;
        int sign = 1;
        for (std::size_t x = 0; x < t.size(); ++x)
          for (std::size_t y = x + 1; y < t.size(); ++y)
            if (t[x] > t[y]) sign = -sign;
        std::sort(t.begin(), t.end());
        m(index.at(t), b) += sign;
      }
      rho.push_back(std::move(m));
    }
  return GlModule(n, std::move(rho), "exterior(" + std::to_string(k) + ")");
}

inline GlModule trivial_module(std::size_t n, std::size_t dim = 1) {
  return GlModule(n, std::vector<Matrix>(n * n, Matrix(dim, dim)), "trivial");
}

inline GlModule custom_module(std::size_t n, std::vector<Matrix> matrices) { return GlModule(n, std::move(matrices)); }

/// Generator E_ij of gl_N (0-based).
struct Generator {
  std::size_t i, j;
  auto operator<=>(const Generator&) const = default;
};

using Word = std::vector<Generator>;

/// Formal linear combination of words in U(gl_N); no PBW normalization.
class UEAElement {
public:
  UEAElement() = default;
  explicit UEAElement(std::size_t n) : n_(n) {}

  std::size_t rank() const { return n_; }
  const std::map<Word, Rational>& terms() const { return terms_; }

  void add(const Word& w, const Rational& c) {
    if (c == 0) return;
    for (const auto& g : w)
      if (g.i >= n_ || g.j >= n_) throw Error("generator index out of range for gl_" + std::to_string(n_));
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  static UEAElement generator(std::size_t n, std::size_t i, std::size_t j) {
    UEAElement e(n);
    e.add({{i, j}}, 1);
    return e;
  }

  static UEAElement scalar(std::size_t n, const Rational& c) {
    UEAElement e(n);
    e.add({}, c);
    return e;
  }

  friend UEAElement operator+(UEAElement a, const UEAElement& b) {
    for (const auto& [w, c] : b.terms_) a.add(w, c);
    return a;
  }
  friend UEAElement operator-(UEAElement a, const UEAElement& b) {
    for (const auto& [w, c] : b.terms_) a.add(w, -c);
    return a;
  }
  friend UEAElement operator*(const Rational& s, UEAElement a) {
    if (s == 0) a.terms_.clear();
    for (auto& [w, c] : a.terms_) c *= s;
    return a;
  }
  friend UEAElement operator*(const UEAElement& a, const UEAElement& b) {
    UEAElement r(a.n_);
    for (const auto& [w1, c1] : a.terms_)
      for (const auto& [w2, c2] : b.terms_) {
        Word w = w1;
        w.insert(w.end(), w2.begin(), w2.end());
        r.add(w, c1 * c2);
      }
    return r;
  }

private:
  std::size_t n_ = 0;
  std::map<Word, Rational> terms_;
};

/// Sum over words of coefficient × product of rho-matrices in word order.
inline Matrix evaluate(const UEAElement& el, const GlModule& m) {
  if (el.rank() != m.rank()) throw MismatchError("element of gl_" + std::to_string(el.rank()) + " evaluated on a gl_" +
                                                 std::to_string(m.rank()) + "-module");
  Matrix acc(m.dim(), m.dim());
  for (const auto& [w, c] : el.terms()) {
    Matrix p = Matrix::identity(m.dim());
    for (const auto& g : w) p = p * m.rho(g.i, g.j);
    acc += c * p;
  }
  return acc;
}

/// Omega_k = sum E_{i1 i2} E_{i2 i3} ... E_{ik i1}.
inline UEAElement casimir(std::size_t k, std::size_t n) {
  if (k < 1) throw Error("Casimir degree must be at least 1");
  UEAElement out(n);
  if (n == 0) return out;
  std::vector<std::size_t> idx(k, 0);
  for (;;) {
    Word w;
    for (std::size_t a = 0; a < k; ++a) w.push_back({idx[a], idx[(a + 1) % k]});
    out.add(w, 1);
    std::size_t p = 0;
    while (p < k && ++idx[p] == n) idx[p++] = 0;
    if (p == k) break;
  }
  return out;
}

inline std::uint64_t factorial(std::uint64_t n) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 2; i <= n; ++i) r *= i;
  return r;
}

inline std::uint64_t hat_omega_terms(std::size_t k, std::size_t n) {
  std::uint64_t t = factorial(k);
  for (std::size_t i = 0; i < k; ++i) {
    t *= n;
    if (t > (std::uint64_t{1} << 40)) break;
  }
  return t;
}

/// Symmetrized element sum_{i in I_N^k} sum_{sigma in S_k} E_{i_sigma(1) i_1} ... E_{i_sigma(k) i_k}.
inline UEAElement hat_omega(std::size_t k, std::size_t n, std::uint64_t budget = default_term_budget) {
  if (k < 2) throw Error("hat_omega is defined for k >= 2");
  if (hat_omega_terms(k, n) > budget)
    throw BudgetError("hat_omega(" + std::to_string(k) + "," + std::to_string(n) + ") needs " +
                      std::to_string(hat_omega_terms(k, n)) + " terms, budget " + std::to_string(budget));
  UEAElement out(n);
  if (n == 0) return out;
  std::vector<std::size_t> idx(k, 0);
  for (;;) {
    std::vector<std::size_t> sigma(k);
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
      Word w;
      for (std::size_t a = 0; a < k; ++a) w.push_back({idx[sigma[a]], idx[a]});
      out.add(w, 1);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    std::size_t p = 0;
    while (p < k && ++idx[p] == n) idx[p++] = 0;
    if (p == k) break;
  }
  return out;
}

/// (N+k-1)!/N! as a rational.
inline Rational omega1_coefficient(std::size_t k, std::size_t n) {
  Rational r = 1;
  for (std::size_t x = n + 1; x <= n + k - 1; ++x) r *= static_cast<unsigned long>(x);
  return r;
}

/// P_k acting on m: evaluate(hat_omega_k) - (N+k-1)!/N! · evaluate(Omega_1).
inline Matrix p_poly_matrix(std::size_t k, const GlModule& m, std::uint64_t budget = default_term_budget) {
  if (k < 2) throw Error("P_k is defined for k >= 2");
  return evaluate(hat_omega(k, m.rank(), budget), m) - omega1_coefficient(k, m.rank()) * evaluate(casimir(1, m.rank()), m);
}

/// Scalars of Omega_1..Omega_N; throws naming the first Casimir that does not act by a scalar.
inline std::vector<Rational> central_character(const GlModule& m) {
  std::vector<Rational> out;
  for (std::size_t k = 1; k <= m.rank(); ++k) {
    auto s = evaluate(casimir(k, m.rank()), m).scalar_value();
    if (!s) throw Error("Omega_" + std::to_string(k) + " does not act by a scalar");
    out.push_back(*s);
  }
  return out;
}

struct ExceptionalReport {
  std::vector<Rational> character;
  Rational omega1;
  bool omega1_in_range = false;        ///< Omega_1 in {0..N}
  std::vector<Matrix> p_values;        ///< P_2..P_N
  std::vector<std::optional<Rational>> p_scalars;
  bool possibly_exceptional = false;
};

/// Candidate test for modules whose gauge modules may be V-reducible. Simplicity of m is assumed, not checked.
inline ExceptionalReport exceptional_check(const GlModule& m, std::uint64_t budget = default_term_budget) {
  ExceptionalReport rep;
  rep.character = central_character(m);
  rep.omega1 = rep.character.empty() ? Rational(0) : rep.character.front();
  rep.omega1_in_range = is_integer(rep.omega1) && rep.omega1 >= 0 && rep.omega1 <= static_cast<long>(m.rank());
  bool all_zero = true;
  for (std::size_t k = 2; k <= m.rank(); ++k) {
    Matrix p = p_poly_matrix(k, m, budget);
    all_zero = all_zero && p.is_zero();
    rep.p_scalars.push_back(p.scalar_value());
    rep.p_values.push_back(std::move(p));
  }
  rep.possibly_exceptional = rep.omega1_in_range && all_zero;
  return rep;
}

/// Brute-force sum over I_N^k of |Stab(i)| under S_k permuting positions.
inline std::uint64_t stabilizer_sum(std::size_t n, std::size_t k, std::uint64_t budget = default_term_budget) {
  if (hat_omega_terms(k, n) > budget) throw BudgetError("stabilizer_sum exceeds budget");
  std::uint64_t total = 0;
  if (n == 0) return 0;
  std::vector<std::size_t> idx(k, 0);
  for (;;) {
    std::vector<std::size_t> sigma(k);
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
      bool fixes = true;
      for (std::size_t a = 0; a < k && fixes; ++a) fixes = idx[sigma[a]] == idx[a];
      total += fixes;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    std::size_t p = 0;
    while (p < k && ++idx[p] == n) idx[p++] = 0;
    if (p == k) break;
  }
  return total;
}

} // namespace gaugemod

#endif
