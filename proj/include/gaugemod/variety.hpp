#ifndef GAUGEMOD_VARIETY_HPP
#define GAUGEMOD_VARIETY_HPP

#include "localization.hpp"
#include "parser.hpp"

#include <memory>
#include <string>
#include <vector>

namespace gaugemod {

using PolyMatrix = std::vector<std::vector<Polynomial>>;

namespace detail {

inline void combinations(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out) {
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
}

// Laplace expansion along the first row, reduced in A at each step.
inline Polynomial determinant(const QuotientRing& a, const PolyMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return a.one();
  if (n == 1) return a.reduce(m[0][0]);
  Polynomial det = a.zero();
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    PolyMatrix minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Polynomial> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(std::move(row));
    }
    Polynomial term = a.reduce(m[0][c] * determinant(a, minor));
    if (c % 2) det -= term;
    else det += term;
  }
  return det;
}

} // namespace detail

/// Chart N(h) given by a nonzero r×r minor of the Jacobian.
struct Chart {
  std::string name;                     ///< rendering of the normalized minor
  Polynomial minor;                     ///< the minor itself (certificate)
  Polynomial h;                         ///< minor with its constant factor removed
  std::vector<std::size_t> rows;        ///< generators used
  std::vector<std::size_t> beta;        ///< Jacobian columns used
  std::vector<std::size_t> parameters;  ///< complement of beta
};

/// Polynomial vector field: ambient coefficients f_1..f_n, reduced in A.
struct VectorField {
  std::vector<Polynomial> coeffs;

  friend bool operator==(const VectorField& a, const VectorField& b) { return a.coeffs == b.coeffs; }
};

/// Smooth affine variety X = V(I) in affine n-space.
class Variety {
public:
  Variety(RingPtr ring, std::vector<Polynomial> generators, const MonomialOrder& ord = {})
      : ring_(ring), gens_(generators),
        quotient_(std::make_shared<const QuotientRing>(Ideal(ring, std::move(generators)), ord)) {
    if (quotient_->basis().is_unit()) throw Error("defining ideal is the unit ideal (empty variety)");
    for (const auto& g : gens_) {
      std::vector<Polynomial> row;
      for (std::size_t i = 0; i < ring_->size(); ++i) row.push_back(partial(g, i));
      jacobian_.push_back(std::move(row));
    }
    rank_ = compute_rank();
    enumerate();
  }

  /// Convenience: variable names and generator expressions.
  static Variety parse(const std::vector<std::string>& vars, const std::vector<std::string>& gens, int max_degree = 64) {
    auto ring = make_ring(vars, max_degree);
    std::vector<Polynomial> polys;
    for (const auto& g : gens) polys.push_back(parse_poly(g, ring));
    return Variety(ring, std::move(polys));
  }

  const RingPtr& ring() const { return ring_; }
  const QuotientPtr& quotient() const { return quotient_; }
  const QuotientRing& algebra() const { return *quotient_; }
  const std::vector<Polynomial>& generators() const { return gens_; }

  /// Entry (j, i) is dg_j/dx_i.
  const PolyMatrix& jacobian() const { return jacobian_; }
  std::size_t jacobian_rank() const { return rank_; }
  std::size_t dimension() const { return ring_->size() - rank_; }

  const std::vector<Chart>& charts() const { return charts_; }
  const std::vector<Polynomial>& minors() const { return minors_; }

  const Chart& chart(const std::string& name) const {
    for (const auto& c : charts_)
      if (c.name == name) return c;
    throw Error("no chart named '" + name + "'");
  }

  /// I + <m^k : m a nonzero r×r minor> is the unit ideal; k = 1 is the Jacobian criterion.
  bool smoothness_certificate(int k = 1) const {
    std::vector<Polynomial> gens = gens_;
    for (const auto& m : minors_) gens.push_back(m.pow(k));
    return is_unit_ideal(Ideal(ring_, std::move(gens)), quotient_->order());
  }

  bool is_vector_field(const std::vector<Polynomial>& coeffs) const {
    if (coeffs.size() != ring_->size()) throw MismatchError("vector field arity does not match ring");
    for (const auto& row : jacobian_) {
      Polynomial s(ring_);
      for (std::size_t i = 0; i < coeffs.size(); ++i) s += coeffs[i] * row[i];
      if (!quotient_->is_zero(s)) return false;
    }
    return true;
  }

  VectorField make_field(const std::vector<Polynomial>& coeffs) const {
    if (!is_vector_field(coeffs)) throw Error("coefficients do not define a vector field on the variety");
    VectorField v;
    for (const auto& c : coeffs) v.coeffs.push_back(quotient_->reduce(c));
    return v;
  }

  /// eta(p) = sum_i f_i dp/dx_i, in A.
  Polynomial apply(const VectorField& v, const Polynomial& p) const {
    Polynomial r(ring_);
    for (std::size_t i = 0; i < v.coeffs.size(); ++i)
      if (!v.coeffs[i].is_zero()) r += v.coeffs[i] * partial(p, i);
    return quotient_->reduce(r);
  }

  /// [a, b]_i = a(b_i) - b(a_i).
  VectorField bracket(const VectorField& a, const VectorField& b) const {
    VectorField r;
    for (std::size_t i = 0; i < ring_->size(); ++i) r.coeffs.push_back(apply(a, b.coeffs[i]) - apply(b, a.coeffs[i]));
    return r;
  }

  std::string render(const VectorField& v) const {
    std::string s;
    for (std::size_t i = 0; i < v.coeffs.size(); ++i) {
      if (v.coeffs[i].is_zero()) continue;
      if (!s.empty()) s += " + ";
      s += "(" + quotient_->render(v.coeffs[i]) + ")*d/d" + ring_->variables[i];
    }
    return s.empty() ? "0" : s;
  }

private:
  // Fraction-free elimination over the domain A; zero tests are ideal membership.
  std::size_t compute_rank() const {
    PolyMatrix m;
    for (const auto& row : jacobian_) {
      std::vector<Polynomial> r;
      for (const auto& e : row) r.push_back(quotient_->reduce(e));
      m.push_back(std::move(r));
    }
    std::size_t rank = 0;
    const std::size_t cols = ring_->size();
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
      std::size_t p = rank;
      while (p < m.size() && m[p][c].is_zero()) ++p;
      if (p == m.size()) continue;
      std::swap(m[p], m[rank]);
      for (std::size_t i = rank + 1; i < m.size(); ++i) {
        if (m[i][c].is_zero()) continue;
        Polynomial f = m[i][c];
        for (std::size_t j = 0; j < cols; ++j)
          m[i][j] = quotient_->reduce(m[rank][c] * m[i][j] - f * m[rank][j]);
      }
      ++rank;
    }
    return rank;
  }

  void enumerate() {
    std::vector<std::vector<std::size_t>> row_sets, col_sets;
    detail::combinations(gens_.size(), rank_, row_sets);
    detail::combinations(ring_->size(), rank_, col_sets);
    for (const auto& cols : col_sets) {
      for (const auto& rows : row_sets) {
        PolyMatrix sub;
        for (auto r : rows) {
          std::vector<Polynomial> line;
          for (auto c : cols) line.push_back(jacobian_[r][c]);
          sub.push_back(std::move(line));
        }
        Polynomial minor = detail::determinant(*quotient_, sub);
        if (minor.is_zero()) continue;
        minors_.push_back(minor);
        Polynomial h = make_monic(minor, quotient_->order());
        bool dup = false;
        for (const auto& c : charts_) dup = dup || (c.h == h && c.beta == cols);
        if (dup) continue;
        Chart chart;
        chart.name = quotient_->render(h);
        chart.minor = minor;
        chart.h = h;
        chart.rows = rows;
        chart.beta = cols;
        for (std::size_t i = 0; i < ring_->size(); ++i)
          if (std::find(cols.begin(), cols.end(), i) == cols.end()) chart.parameters.push_back(i);
        charts_.push_back(std::move(chart));
      }
    }
    // distinct column sets may share a normalized minor; disambiguate names
    for (std::size_t i = 0; i < charts_.size(); ++i) {
      bool clash = false;
      for (std::size_t j = 0; j < charts_.size(); ++j) clash = clash || (i != j && charts_[i].name == charts_[j].name);
      if (clash) {
        std::string suffix;
        for (auto c : charts_[i].beta) suffix += (suffix.empty() ? "" : ",") + ring_->variables[c];
        charts_[i].name += "[" + suffix + "]";
      }
    }
  }

  RingPtr ring_;
  std::vector<Polynomial> gens_;
  QuotientPtr quotient_;
  PolyMatrix jacobian_;
  std::size_t rank_ = 0;
  std::vector<Polynomial> minors_;
  std::vector<Chart> charts_;
};

/// Chart derivations tau_i = d/dx_i + sum_{j in beta} f_ij d/dx_j on A_(h), one per chart parameter.
class TangentFrame {
public:
  TangentFrame(const Variety& v, const Chart& chart)
      : chart_(chart), loc_(std::make_shared<const Localization>(v.quotient(), chart.h)) {
    const auto& a = v.algebra();
    const auto& jac = v.jacobian();
    const Rational scale = leading_term(chart.minor, a.order()).second;  // minor = scale·h
    PolyMatrix base;
    for (auto r : chart.rows) {
      std::vector<Polynomial> line;
      for (auto c : chart.beta) line.push_back(jac[r][c]);
      base.push_back(std::move(line));
    }
    for (auto i : chart.parameters) {
      std::vector<LocalizedElement> fi;
      Derivation tau;
      tau.images.assign(v.ring()->size(), LocalizedElement::zero(loc_));
      tau.images[i] = LocalizedElement::one(loc_);
      // Cramer's rule on the beta-columns: f_ij = det(base with column j := -J_{R,i}) / minor
      for (std::size_t c = 0; c < chart.beta.size(); ++c) {
        PolyMatrix m = base;
        for (std::size_t r = 0; r < chart.rows.size(); ++r) m[r][c] = -jac[chart.rows[r]][i];
        Polynomial num = detail::determinant(a, m) * Rational(1 / scale);
        LocalizedElement f(loc_, num, 1);
        tau.images[chart.beta[c]] = f;
        fi.push_back(f);
      }
      corrections_.push_back(std::move(fi));
      taus_.push_back(std::move(tau));
    }
  }

  const Chart& chart() const { return chart_; }
  const LocalizationPtr& localization() const { return loc_; }
  std::size_t dimension() const { return taus_.size(); }
  const Derivation& tau(std::size_t i) const { return taus_.at(i); }

  /// f_ij for parameter index i and beta index j.
  const LocalizedElement& correction(std::size_t i, std::size_t j) const { return corrections_.at(i).at(j); }

  LocalizedElement element(const Polynomial& p, int hpower = 0) const { return {loc_, p, hpower}; }
  LocalizedElement parameter(std::size_t i) const {
    return element(Polynomial::variable(loc_->ring(), chart_.parameters.at(i)));
  }

  /// d/dt_i on A_(h).
  LocalizedElement partial(const LocalizedElement& a, std::size_t i) const { return loc_partial(a, taus_.at(i)); }

  /// Invariant: dg/dx_i + sum_j f_ij dg/dx_j = 0 in A_(h) for every generator and parameter.
  bool verify(const Variety& v) const {
    for (const auto& g : v.generators())
      for (std::size_t i = 0; i < taus_.size(); ++i)
        if (!taus_[i].apply(loc_, g).is_zero()) return false;
    return true;
  }

  /// h·tau_i as a polynomial vector field.
  VectorField scaled_tau(const Variety& v, std::size_t i) const {
    VectorField f;
    const auto& a = v.algebra();
    for (const auto& img : taus_.at(i).images) {
      if (img.is_zero()) {
        f.coeffs.push_back(a.zero());
      } else if (img.hpower() == 1) {
        f.coeffs.push_back(img.numerator());
      } else {
        f.coeffs.push_back(a.reduce(img.numerator() * loc_->h_power(1 - img.hpower())));
      }
    }
    return f;
  }

private:
  Chart chart_;
  LocalizationPtr loc_;
  std::vector<std::vector<LocalizedElement>> corrections_;
  std::vector<Derivation> taus_;
};

/// Chart coefficients eta(t_i) of a vector field.
inline std::vector<LocalizedElement> to_chart(const TangentFrame& frame, const VectorField& vf) {
  std::vector<LocalizedElement> out;
  for (auto p : frame.chart().parameters) out.push_back(frame.element(vf.coeffs.at(p)));
  return out;
}

/// sum_i eta_i · d/dt_i (a).
inline LocalizedElement apply_chart_field(const TangentFrame& frame, const std::vector<LocalizedElement>& eta,
                                          const LocalizedElement& a) {
  LocalizedElement r = LocalizedElement::zero(frame.localization());
  for (std::size_t i = 0; i < eta.size(); ++i)
    if (!eta[i].is_zero()) r += eta[i] * frame.partial(a, i);
  return r;
}

/// Chart-form bracket: [eta, mu]_i = eta(mu_i) - mu(eta_i).
inline std::vector<LocalizedElement> chart_bracket(const TangentFrame& frame, const std::vector<LocalizedElement>& eta,
                                                   const std::vector<LocalizedElement>& mu) {
  std::vector<LocalizedElement> r;
  for (std::size_t i = 0; i < eta.size(); ++i)
    r.push_back(apply_chart_field(frame, eta, mu[i]) - apply_chart_field(frame, mu, eta[i]));
  return r;
}

} // namespace gaugemod

#endif
