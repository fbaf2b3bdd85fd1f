#ifndef GAUGEMOD_GAUGE_HPP
#define GAUGEMOD_GAUGE_HPP

#include "glrep.hpp"
#include "variety.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace gaugemod {

/// Square matrix with entries in A_(h).
class LocMatrix {
public:
  LocMatrix() = default;
  LocMatrix(const LocalizationPtr& ctx, std::size_t dim) : dim_(dim), e_(dim * dim, LocalizedElement::zero(ctx)) {}

  static LocMatrix scalar(const LocalizedElement& b, std::size_t dim) {
    LocMatrix m(b.context(), dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = b;
    return m;
  }

  std::size_t dim() const { return dim_; }
  LocalizedElement& operator()(std::size_t r, std::size_t c) { return e_[r * dim_ + c]; }
  const LocalizedElement& operator()(std::size_t r, std::size_t c) const { return e_[r * dim_ + c]; }

private:
  std::size_t dim_ = 0;
  std::vector<LocalizedElement> e_;
};

/// Gauge fields B_1..B_N on A_(h) ⊗ U for one chart.
struct GaugeField {
  std::vector<LocMatrix> B;

  static GaugeField zero(const LocalizationPtr& ctx, std::size_t n, std::size_t dim) {
    return {std::vector<LocMatrix>(n, LocMatrix(ctx, dim))};
  }

  /// Scalar fields b_i acting as b_i·identity.
  static GaugeField scalar(const std::vector<LocalizedElement>& b, std::size_t dim) {
    GaugeField g;
    for (const auto& x : b) g.B.push_back(LocMatrix::scalar(x, dim));
    return g;
  }
};

/// Element sum_s a_s ⊗ u_s of A_(h) ⊗ U, keyed by basis index of U.
class GaugeElement {
public:
  GaugeElement() = default;
  explicit GaugeElement(LocalizationPtr ctx) : ctx_(std::move(ctx)) {}

  static GaugeElement basis(const LocalizedElement& a, std::size_t index) {
    GaugeElement x(a.context());
    x.add(index, a);
    return x;
  }

  const LocalizationPtr& context() const { return ctx_; }
  const std::map<std::size_t, LocalizedElement>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  LocalizedElement coefficient(std::size_t index) const {
    auto it = terms_.find(index);
    return it == terms_.end() ? LocalizedElement::zero(ctx_) : it->second;
  }

  void add(std::size_t index, const LocalizedElement& a) {
    if (a.is_zero()) return;
    auto it = terms_.find(index);
    if (it == terms_.end()) {
      terms_.emplace(index, a);
      return;
    }
    it->second += a;
    if (it->second.is_zero()) terms_.erase(it);
  }

  friend GaugeElement operator+(GaugeElement a, const GaugeElement& b) {
    for (const auto& [i, c] : b.terms_) a.add(i, c);
    return a;
  }
  friend GaugeElement operator-(GaugeElement a, const GaugeElement& b) {
    for (const auto& [i, c] : b.terms_) a.add(i, -c);
    return a;
  }

  friend bool operator==(const GaugeElement& a, const GaugeElement& b) {
    for (const auto& [i, c] : a.terms_)
      if (b.coefficient(i) != c) return false;
    for (const auto& [i, c] : b.terms_)
      if (!a.terms_.count(i)) return false;
    return true;
  }
  friend bool operator!=(const GaugeElement& a, const GaugeElement& b) { return !(a == b); }

  std::string render() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [i, c] : terms_) s += (s.empty() ? "" : " + ") + ("[" + c.render() + "]⊗u" + std::to_string(i));
    return s;
  }

private:
  LocalizationPtr ctx_;
  std::map<std::size_t, LocalizedElement> terms_;
};

/// Coefficient-wise multiplication by a function.
inline GaugeElement a_action(const LocalizedElement& f, const GaugeElement& x) {
  GaugeElement r(f.context());
  for (const auto& [i, c] : x.terms()) r.add(i, f * c);
  return r;
}

struct AxiomReport {
  bool linearity = true;     ///< structural: B_i are matrices over A_(h)
  bool equivariance = true;  ///< [B_i, rho(E_pq)] = 0
  bool flatness = true;      ///< d_i B_j - d_j B_i + [B_i, B_j] = 0
  std::string witness;       ///< first failure, 1-based indices

  bool ok() const { return linearity && equivariance && flatness; }
};

/// Gauge-module structure on A_(h) ⊗ U in one chart, optionally twisted by a closed 1-form.
class GaugeAction {
public:
  GaugeAction(std::shared_ptr<const TangentFrame> frame, GlModule module, GaugeField field)
      : frame_(std::move(frame)), module_(std::move(module)), field_(std::move(field)) {
    if (module_.rank() != frame_->dimension())
      throw MismatchError("gl_N rank " + std::to_string(module_.rank()) + " does not match chart dimension " +
                          std::to_string(frame_->dimension()));
    if (field_.B.size() != frame_->dimension()) throw MismatchError("need one gauge field per chart parameter");
    for (const auto& b : field_.B)
      if (b.dim() != module_.dim()) throw MismatchError("gauge field size does not match dim U");
  }

  const TangentFrame& frame() const { return *frame_; }
  const std::shared_ptr<const TangentFrame>& frame_ptr() const { return frame_; }
  const GlModule& module() const { return module_; }
  const GaugeField& field() const { return field_; }
  const std::vector<LocalizedElement>& twist_form() const { return omega_; }
  const LocalizationPtr& localization() const { return frame_->localization(); }
  std::size_t dimension() const { return frame_->dimension(); }

  AxiomReport validate() const {
    AxiomReport rep;
    const std::size_t n = dimension(), d = module_.dim();
    const auto& ctx = localization();
    for (std::size_t i = 0; i < n && rep.equivariance; ++i)
      for (std::size_t p = 0; p < n && rep.equivariance; ++p)
        for (std::size_t q = 0; q < n && rep.equivariance; ++q) {
          const Matrix& r = module_.rho(p, q);
          for (std::size_t a = 0; a < d && rep.equivariance; ++a)
            for (std::size_t b = 0; b < d && rep.equivariance; ++b) {
              LocalizedElement s = LocalizedElement::zero(ctx);
              for (std::size_t c = 0; c < d; ++c) {
                if (r(c, b) != 0) s += r(c, b) * field_.B[i](a, c);
                if (r(a, c) != 0) s -= r(a, c) * field_.B[i](c, b);
              }
              if (!s.is_zero()) {
                rep.equivariance = false;
                rep.witness = "axiom 2: [B_" + std::to_string(i + 1) + ", rho(E_" + std::to_string(p + 1) +
                              std::to_string(q + 1) + ")] entry (" + std::to_string(a + 1) + "," +
                              std::to_string(b + 1) + ") = " + s.render();
              }
            }
        }
    for (std::size_t i = 0; i < n && rep.flatness; ++i)
      for (std::size_t j = i + 1; j < n && rep.flatness; ++j)
        for (std::size_t a = 0; a < d && rep.flatness; ++a)
          for (std::size_t b = 0; b < d && rep.flatness; ++b) {
            LocalizedElement s = frame_->partial(field_.B[j](a, b), i) - frame_->partial(field_.B[i](a, b), j);
            for (std::size_t c = 0; c < d; ++c)
              s += field_.B[i](a, c) * field_.B[j](c, b) - field_.B[j](a, c) * field_.B[i](c, b);
            if (!s.is_zero()) {
              rep.flatness = false;
              rep.witness = "axiom 3: (i,j) = (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") entry (" +
                            std::to_string(a + 1) + "," + std::to_string(b + 1) + ") = " + s.render();
            }
          }
    return rep;
  }

  /// (f d/dt_i)·(g⊗u) = f dg/dt_i ⊗ u + f g B_i u + sum_p g df/dt_p ⊗ rho(E_pi) u  (+ f P_i g ⊗ u when twisted).
  GaugeElement act(const std::vector<LocalizedElement>& eta, const GaugeElement& x) const {
    const std::size_t n = dimension(), d = module_.dim();
    if (eta.size() != n) throw MismatchError("vector field has wrong number of chart coefficients");
    GaugeElement out(localization());
    for (std::size_t i = 0; i < n; ++i) {
      const auto& f = eta[i];
      if (f.is_zero()) continue;
      std::vector<LocalizedElement> df;
      for (std::size_t p = 0; p < n; ++p) df.push_back(frame_->partial(f, p));
      for (const auto& [c, g] : x.terms()) {
        out.add(c, f * frame_->partial(g, i));
        LocalizedElement fg = f * g;
        for (std::size_t r = 0; r < d; ++r) {
          const auto& b = field_.B[i](r, c);
          if (!b.is_zero()) out.add(r, fg * b);
        }
        if (!omega_.empty() && !omega_[i].is_zero()) out.add(c, fg * omega_[i]);
        for (std::size_t p = 0; p < n; ++p) {
          if (df[p].is_zero()) continue;
          const Matrix& rho = module_.rho(p, i);
          LocalizedElement gdf = g * df[p];
          for (std::size_t r = 0; r < d; ++r)
            if (rho(r, c) != 0) out.add(r, rho(r, c) * gdf);
        }
      }
    }
    return out;
  }

  /// New action phi_omega(f d_i)·m = phi(f d_i)·m + f P_i m; rejects forms that are not closed.
  GaugeAction twist(const std::vector<LocalizedElement>& omega) const {
    const std::size_t n = dimension();
    if (omega.size() != n) throw MismatchError("1-form needs one coefficient per chart parameter");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (frame_->partial(omega[i], j) != frame_->partial(omega[j], i))
          throw Error("1-form is not closed: dP_" + std::to_string(i + 1) + "/dt_" + std::to_string(j + 1) +
                      " != dP_" + std::to_string(j + 1) + "/dt_" + std::to_string(i + 1));
    GaugeAction r(*this);
    if (r.omega_.empty()) r.omega_.assign(n, LocalizedElement::zero(localization()));
    for (std::size_t i = 0; i < n; ++i) r.omega_[i] += omega[i];
    return r;
  }

private:
  std::shared_ptr<const TangentFrame> frame_;
  GlModule module_;
  GaugeField field_;
  std::vector<LocalizedElement> omega_;
};

struct CheckResult {
  bool pass = true;
  std::string witness;
};

/// eta·(f·x) = eta(f)·x + f·(eta·x).
inline CheckResult check_av_compat(const GaugeAction& act, const std::vector<LocalizedElement>& eta,
                                   const LocalizedElement& f, const GaugeElement& x) {
  GaugeElement lhs = act.act(eta, a_action(f, x));
  GaugeElement rhs = a_action(apply_chart_field(act.frame(), eta, f), x) + a_action(f, act.act(eta, x));
  if (lhs == rhs) return {};
  return {false, "lhs = " + lhs.render() + "; rhs = " + rhs.render()};
}

/// [eta, mu]·x = eta·(mu·x) - mu·(eta·x).
inline CheckResult check_lie_action(const GaugeAction& act, const std::vector<LocalizedElement>& eta,
                                    const std::vector<LocalizedElement>& mu, const GaugeElement& x) {
  GaugeElement lhs = act.act(chart_bracket(act.frame(), eta, mu), x);
  GaugeElement rhs = act.act(eta, act.act(mu, x)) - act.act(mu, act.act(eta, x));
  if (lhs == rhs) return {};
  return {false, "lhs = " + lhs.render() + "; rhs = " + rhs.render()};
}

} // namespace gaugemod

#endif
