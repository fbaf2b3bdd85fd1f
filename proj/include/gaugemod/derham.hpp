#ifndef GAUGEMOD_DERHAM_HPP
#define GAUGEMOD_DERHAM_HPP

#include "gauge.hpp"
#include "matrix.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gaugemod {

using WedgeIndex = std::vector<std::size_t>;  ///< strictly increasing chart-parameter indices

/// e_p ∧ e_S: sign and sorted support, or nullopt when p is already in S.
inline std::optional<std::pair<int, WedgeIndex>> wedge_front(std::size_t p, const WedgeIndex& s) {
  WedgeIndex r;
  int sign = 1;
  bool placed = false;
  for (auto q : s) {
    if (q == p) return std::nullopt;
    if (q < p) sign = -sign;
    if (!placed && q > p) {
      r.push_back(p);
      placed = true;
    }
    r.push_back(q);
  }
  if (!placed) r.push_back(p);
  return std::make_pair(sign, r);
}

/// E_pi acting on e_S as a derivation: replaces e_i by e_p.
inline std::optional<std::pair<int, WedgeIndex>> elementary_on_wedge(std::size_t p, std::size_t i, const WedgeIndex& s) {
  auto pos = std::find(s.begin(), s.end(), i);
  if (pos == s.end()) return std::nullopt;
  if (p == i) return std::make_pair(1, s);
  if (std::find(s.begin(), s.end(), p) != s.end()) return std::nullopt;
  WedgeIndex rest(s.begin(), s.end());
  rest.erase(rest.begin() + (pos - s.begin()));
  // move e_i to the front, then swap it for e_p
  int sign = (pos - s.begin()) % 2 ? -1 : 1;
  auto w = wedge_front(p, rest);
  return std::make_pair(sign * w->first, w->second);
}

/// Element of A_(h) ⊗ Lambda^k V.
class FormElement {
public:
  FormElement() = default;
  FormElement(LocalizationPtr ctx, std::size_t degree) : ctx_(std::move(ctx)), degree_(degree) {}

  static FormElement single(const LocalizedElement& g, const WedgeIndex& s) {
    FormElement f(g.context(), s.size());
    f.add(s, g);
    return f;
  }

  const LocalizationPtr& context() const { return ctx_; }
  std::size_t degree() const { return degree_; }
  const std::map<WedgeIndex, LocalizedElement>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  LocalizedElement coefficient(const WedgeIndex& s) const {
    auto it = terms_.find(s);
    return it == terms_.end() ? LocalizedElement::zero(ctx_) : it->second;
  }

  void add(const WedgeIndex& s, const LocalizedElement& a) {
    if (s.size() != degree_) throw MismatchError("wedge of wrong degree");
    for (std::size_t k = 1; k < s.size(); ++k)
      if (s[k - 1] >= s[k]) throw Error("wedge index must be strictly increasing");
    if (a.is_zero()) return;
    auto it = terms_.find(s);
    if (it == terms_.end()) {
      terms_.emplace(s, a);
      return;
    }
    it->second += a;
    if (it->second.is_zero()) terms_.erase(it);
  }

  friend FormElement operator+(FormElement a, const FormElement& b) {
    for (const auto& [s, c] : b.terms_) a.add(s, c);
    return a;
  }
  friend FormElement operator-(FormElement a, const FormElement& b) {
    for (const auto& [s, c] : b.terms_) a.add(s, -c);
    return a;
  }

  friend bool operator==(const FormElement& a, const FormElement& b) {
    if (a.degree_ != b.degree_) return false;
    for (const auto& [s, c] : a.terms_)
      if (b.coefficient(s) != c) return false;
    for (const auto& [s, c] : b.terms_)
      if (!a.terms_.count(s)) return false;
    return true;
  }
  friend bool operator!=(const FormElement& a, const FormElement& b) { return !(a == b); }

  std::string render() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [s, c] : terms_) {
      std::string w;
      for (auto i : s) w += (w.empty() ? "e" : "^e") + std::to_string(i + 1);
      out += (out.empty() ? "" : " + ") + ("[" + c.render() + "]⊗" + (w.empty() ? "1" : w));
    }
    return out;
  }

private:
  LocalizationPtr ctx_;
  std::size_t degree_ = 0;
  std::map<WedgeIndex, LocalizedElement> terms_;
};

inline FormElement scale(const LocalizedElement& f, const FormElement& x) {
  FormElement r(x.context(), x.degree());
  for (const auto& [s, c] : x.terms()) r.add(s, f * c);
  return r;
}

/// Twisted de Rham complex A_(h) ⊗ Lambda^• V with scalar gauge fields B_p.
class DeRhamComplex {
public:
  DeRhamComplex(std::shared_ptr<const TangentFrame> frame, std::vector<LocalizedElement> b)
      : frame_(std::move(frame)), b_(std::move(b)) {
    if (b_.size() != frame_->dimension()) throw MismatchError("need one gauge field per chart parameter");
  }

  std::size_t dimension() const { return frame_->dimension(); }
  const TangentFrame& frame() const { return *frame_; }
  const std::shared_ptr<const TangentFrame>& frame_ptr() const { return frame_; }
  const std::vector<LocalizedElement>& field() const { return b_; }

  /// True iff dB_i/dt_j = dB_j/dt_i for all pairs.
  bool field_is_closed() const {
    for (std::size_t i = 0; i < b_.size(); ++i)
      for (std::size_t j = i + 1; j < b_.size(); ++j)
        if (frame_->partial(b_[i], j) != frame_->partial(b_[j], i)) return false;
    return true;
  }

  /// d_k(g⊗v) = sum_p (dg/dt_p + B_p g) ⊗ e_p ∧ v.
  FormElement d(const FormElement& x) const {
    const std::size_t n = dimension();
    if (x.degree() >= n) throw Error("d_k is defined for k < N; got k = " + std::to_string(x.degree()));
    FormElement out(x.context(), x.degree() + 1);
    for (const auto& [s, g] : x.terms())
      for (std::size_t p = 0; p < n; ++p) {
        auto w = wedge_front(p, s);
        if (!w) continue;
        LocalizedElement c = frame_->partial(g, p) + b_[p] * g;
        out.add(w->second, Rational(w->first) * c);
      }
    return out;
  }

  /// (sum f_i d/dt_i)·(g⊗v) = sum_i (f_i dg/dt_i + B_i f_i g)⊗v + sum_{i,p} df_i/dt_p g ⊗ E_pi v.
  FormElement act(const std::vector<LocalizedElement>& eta, const FormElement& x) const {
    const std::size_t n = dimension();
    FormElement out(x.context(), x.degree());
    for (std::size_t i = 0; i < n; ++i) {
      const auto& f = eta.at(i);
      if (f.is_zero()) continue;
      std::vector<LocalizedElement> df;
      for (std::size_t p = 0; p < n; ++p) df.push_back(frame_->partial(f, p));
      for (const auto& [s, g] : x.terms()) {
        out.add(s, f * frame_->partial(g, i) + b_[i] * f * g);
        for (std::size_t p = 0; p < n; ++p) {
          if (df[p].is_zero()) continue;
          auto w = elementary_on_wedge(p, i, s);
          if (w) out.add(w->second, Rational(w->first) * (df[p] * g));
        }
      }
    }
    return out;
  }

private:
  std::shared_ptr<const TangentFrame> frame_;
  std::vector<LocalizedElement> b_;
};

/// d_{k+1}(d_k x) = 0.
inline CheckResult check_complex(const DeRhamComplex& cx, const FormElement& x) {
  FormElement dd = cx.d(cx.d(x));
  if (dd.is_zero()) return {};
  return {false, "d(d(x)) = " + dd.render()};
}

/// d(eta·x) = eta·d(x).
inline CheckResult check_morphism(const DeRhamComplex& cx, const std::vector<LocalizedElement>& eta, const FormElement& x) {
  FormElement lhs = cx.d(cx.act(eta, x));
  FormElement rhs = cx.act(eta, cx.d(x));
  if (lhs == rhs) return {};
  return {false, "d(eta.x) = " + lhs.render() + "; eta.d(x) = " + rhs.render()};
}

struct NonMorphismWitness {
  LocalizedElement f;
  FormElement x;
  FormElement d_of_fx;
  FormElement f_times_dx;
};

/// Concrete (f, x) with d(f·x) != f·d(x): f the first chart parameter, x = 1⊗1.
inline NonMorphismWitness witness_not_a_morphism(const DeRhamComplex& cx) {
  if (cx.dimension() == 0) throw Error("no chart parameters: d is not defined");
  const auto& frame = cx.frame();
  LocalizedElement f = frame.parameter(0);
  FormElement x = FormElement::single(LocalizedElement::one(frame.localization()), {});
  NonMorphismWitness w{f, x, cx.d(scale(f, x)), scale(f, cx.d(x))};
  if (w.d_of_fx == w.f_times_dx) throw Error("witness search failed: d commutes with multiplication by t_1");
  return w;
}

struct ObstructionVerdict {
  bool feasible = false;
  std::size_t unknowns = 0, equations = 0;
  std::vector<Polynomial> solution;  ///< f_1..f_N when feasible

  std::string label(int max_degree) const {
    return feasible ? "FEASIBLE" : "INFEASIBLE_UP_TO_D=" + std::to_string(max_degree);
  }
};

/// Solves sum_i (df_i/dx_i + B_i f_i) = 1 over polynomials f_i of total degree <= D in Q[x_1..x_N].
inline ObstructionVerdict gaussian_obstruction(const RingPtr& ring, const std::vector<Polynomial>& b, int max_degree) {
  const std::size_t n = ring->size();
  if (n == 0) throw Error("gaussian_obstruction needs at least one variable");
  if (b.size() != n) throw MismatchError("need one gauge field per variable");
  if (max_degree < 0) throw Error("degree bound must be non-negative");

  std::vector<ExponentVector> monos;
  ExponentVector e(n, 0);
  auto rec = [&](auto&& self, std::size_t v, int left) -> void {
    if (v == n) {
      monos.push_back(e);
      return;
    }
    for (int d = 0; d <= left; ++d) {
      e[v] = d;
      self(self, v + 1, left - d);
    }
    e[v] = 0;
  };
  rec(rec, 0, max_degree);

  // column (i, m) holds d(x^m)/dx_i + B_i x^m
  std::vector<Polynomial> columns;
  std::map<ExponentVector, std::size_t> row_of;
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& m : monos) {
      Polynomial xm = Polynomial::monomial(ring, m);
      Polynomial col = partial(xm, i) + b[i] * xm;
      for (const auto& [t, c] : col.terms()) row_of.try_emplace(t, 0);
      columns.push_back(std::move(col));
    }
  row_of.try_emplace(ExponentVector(n, 0), 0);
  std::size_t r = 0;
  for (auto& [t, idx] : row_of) idx = r++;

  Matrix a(row_of.size(), columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (const auto& [t, coef] : columns[c].terms()) a(row_of.at(t), c) = coef;
  std::vector<Rational> rhs(row_of.size());
  rhs[row_of.at(ExponentVector(n, 0))] = 1;

  ObstructionVerdict v;
  v.unknowns = columns.size();
  v.equations = row_of.size();
  auto sol = solve(a, rhs);
  if (!sol) return v;
  v.feasible = true;
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial f(ring);
    for (std::size_t k = 0; k < monos.size(); ++k) f.add_term(monos[k], (*sol)[i * monos.size() + k]);
    v.solution.push_back(std::move(f));
  }
  return v;
}

/// The Gaussian gauge B_i = -2 x_i on affine N-space.
inline ObstructionVerdict gaussian_obstruction(std::size_t n, int max_degree) {
  std::vector<std::string> vars;
  for (std::size_t i = 1; i <= n; ++i) vars.push_back("x" + std::to_string(i));
  auto ring = make_ring(vars);
  std::vector<Polynomial> b;
  for (std::size_t i = 0; i < n; ++i) b.push_back(Polynomial::variable(ring, i) * Rational(-2));
  return gaussian_obstruction(ring, b, max_degree);
}

} // namespace gaugemod

#endif
