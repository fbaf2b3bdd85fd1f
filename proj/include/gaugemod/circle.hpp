#ifndef GAUGEMOD_CIRCLE_HPP
#define GAUGEMOD_CIRCLE_HPP

#include "gauge.hpp"
#include "matrix.hpp"

#include <map>
#include <memory>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace gaugemod::circle {

enum class Symbol { V = 0, U = 1 };

using BasisKey = std::pair<Symbol, int>;

/// Default support window for basis indices.
inline constexpr int default_window = 16;

/// Position in the order ... < u_{-1} < v_0 < u_0 < v_1 < u_1 < ...
inline long order_position(const BasisKey& k) { return 2L * k.second + (k.first == Symbol::U ? 1 : 0); }

inline std::string render_key(const BasisKey& k) {
  return std::string(k.first == Symbol::V ? "v" : "u") + "_" + std::to_string(k.second);
}

/// Finitely supported element of N(alpha) in the basis v_k = t^k⊗v, u_k = t^k⊗u.
class CircleElement {
public:
  explicit CircleElement(Rational alpha, int window = default_window) : alpha_(std::move(alpha)), window_(window) {}

  static CircleElement basis(const Rational& alpha, Symbol s, int k, int window = default_window) {
    CircleElement x(alpha, window);
    x.add({s, k}, 1);
    return x;
  }

  const Rational& alpha() const { return alpha_; }
  int window() const { return window_; }
  const std::map<BasisKey, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(const BasisKey& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add(const BasisKey& k, const Rational& c) {
    if (c == 0) return;
    if (k.second < -window_ || k.second > window_)
      throw BudgetError("basis index " + std::to_string(k.second) + " leaves the window [-" + std::to_string(window_) +
                        ", " + std::to_string(window_) + "]");
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  friend CircleElement operator+(CircleElement a, const CircleElement& b) {
    a.check(b);
    for (const auto& [k, c] : b.terms_) a.add(k, c);
    return a;
  }
  friend CircleElement operator-(CircleElement a, const CircleElement& b) {
    a.check(b);
    for (const auto& [k, c] : b.terms_) a.add(k, -c);
    return a;
  }
  friend CircleElement operator*(const Rational& s, CircleElement a) {
    if (s == 0) a.terms_.clear();
    for (auto& [k, c] : a.terms_) c *= s;
    return a;
  }

  friend bool operator==(const CircleElement& a, const CircleElement& b) {
    return a.alpha_ == b.alpha_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const CircleElement& a, const CircleElement& b) { return !(a == b); }

  /// Highest and lowest basis vector under the v/u interleaved order.
  BasisKey leading() const { return extreme(true); }
  BasisKey lowest() const { return extreme(false); }

  std::string render() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<BasisKey, Rational>> v(terms_.begin(), terms_.end());
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return order_position(a.first) > order_position(b.first); });
    std::string s;
    for (const auto& [k, c] : v) {
      if (s.empty()) s += c < 0 ? "-" : "";
      else s += c < 0 ? " - " : " + ";
      Rational m = abs(c);
      s += (m == 1 ? "" : to_string(m) + "*") + render_key(k);
    }
    return s;
  }

private:
  void check(const CircleElement& b) const {
    if (alpha_ != b.alpha_) throw MismatchError("circle elements with different alpha");
  }

  BasisKey extreme(bool high) const {
    if (terms_.empty()) throw Error("zero element has no leading term");
    auto best = terms_.begin()->first;
    for (const auto& [k, c] : terms_) {
      long pk = order_position(k), pb = order_position(best);
      if (high ? pk > pb : pk < pb) best = k;
    }
    return best;
  }

  Rational alpha_;
  int window_;
  std::map<BasisKey, Rational> terms_;
};

/// e_n v_k = (k + alpha n) v_{n+k} + u_{n+k};  e_n u_k = (k + alpha n) u_{n+k} + v_{n+k+1}.
inline CircleElement act_e(int n, const CircleElement& x) {
  CircleElement out(x.alpha(), x.window());
  for (const auto& [key, c] : x.terms()) {
    const int k = key.second;
    Rational w = c * (k + x.alpha() * n);
    if (key.first == Symbol::V) {
      out.add({Symbol::V, n + k}, w);
      out.add({Symbol::U, n + k}, c);
    } else {
      out.add({Symbol::U, n + k}, w);
      out.add({Symbol::V, n + k + 1}, c);
    }
  }
  return out;
}

/// Formal combination of words in the e_n; a word [a, b, c] means e_a e_b e_c (e_c applied first).
class OperatorWord {
public:
  static OperatorWord e(int n) {
    OperatorWord w;
    w.terms_[{n}] = 1;
    return w;
  }
  static OperatorWord scalar(const Rational& c) {
    OperatorWord w;
    if (c != 0) w.terms_[{}] = c;
    return w;
  }

  const std::map<std::vector<int>, Rational>& terms() const { return terms_; }

  friend OperatorWord operator+(OperatorWord a, const OperatorWord& b) {
    for (const auto& [w, c] : b.terms_) a.add(w, c);
    return a;
  }
  friend OperatorWord operator-(OperatorWord a, const OperatorWord& b) {
    for (const auto& [w, c] : b.terms_) a.add(w, -c);
    return a;
  }
  friend OperatorWord operator*(const OperatorWord& a, const OperatorWord& b) {
    OperatorWord r;
    for (const auto& [w1, c1] : a.terms_)
      for (const auto& [w2, c2] : b.terms_) {
        std::vector<int> w = w1;
        w.insert(w.end(), w2.begin(), w2.end());
        r.add(w, c1 * c2);
      }
    return r;
  }

  std::string render() const {
    std::string s;
    for (const auto& [w, c] : terms_) {
      std::string word;
      for (int n : w) word += (word.empty() ? "" : "*") + std::string("e_") + std::to_string(n);
      if (!s.empty()) s += c < 0 ? " - " : " + ";
      else if (c < 0) s += "-";
      Rational m = abs(c);
      if (word.empty()) s += to_string(m);
      else s += (m == 1 ? "" : to_string(m) + "*") + word;
    }
    return s.empty() ? "0" : s;
  }

private:
  void add(const std::vector<int>& w, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  std::map<std::vector<int>, Rational> terms_;
};

/// Right-to-left application; scalars multiply.
inline CircleElement apply_word(const OperatorWord& op, const CircleElement& x) {
  CircleElement out(x.alpha(), x.window());
  for (const auto& [w, c] : op.terms()) {
    CircleElement y = x;
    for (auto it = w.rbegin(); it != w.rend(); ++it) y = act_e(*it, y);
    out = out + c * y;
  }
  return out;
}

/// sl_2 Casimir C = e_0^2 + e_0 - e_{-1} e_1.
inline OperatorWord casimir_word() {
  return OperatorWord::e(0) * OperatorWord::e(0) + OperatorWord::e(0) - OperatorWord::e(-1) * OperatorWord::e(1);
}

/// s = e_{-1} e_0 - 1.
inline OperatorWord s_word() { return OperatorWord::e(-1) * OperatorWord::e(0) - OperatorWord::scalar(1); }

/// e_0 + 1 - alpha.
inline OperatorWord shifted_e0(const Rational& alpha) {
  return OperatorWord::e(0) + OperatorWord::scalar(1 - alpha);
}

/// q = e_{-1} e_0^2 - (e_0 + 1 - alpha).
inline OperatorWord q_word(const Rational& alpha) {
  return OperatorWord::e(-1) * OperatorWord::e(0) * OperatorWord::e(0) - shifted_e0(alpha);
}

/// p = e_1 - e_0^2 (e_0 + 1 - alpha).
inline OperatorWord p_word(const Rational& alpha) {
  return OperatorWord::e(1) - OperatorWord::e(0) * OperatorWord::e(0) * shifted_e0(alpha);
}

/// Samples v_k, u_k for k in [-3, 3] plus seeded random combinations.
inline std::vector<CircleElement> casimir_samples(const Rational& alpha, std::uint64_t seed = 1, int random_count = 8) {
  std::vector<CircleElement> out;
  for (int k = -3; k <= 3; ++k) {
    out.push_back(CircleElement::basis(alpha, Symbol::V, k));
    out.push_back(CircleElement::basis(alpha, Symbol::U, k));
  }
  std::mt19937_64 rng(seed);
  for (int r = 0; r < random_count; ++r) {
    CircleElement x(alpha);
    for (int k = -3; k <= 3; ++k) {
      x.add({Symbol::V, k}, Rational(static_cast<long>(rng() % 7) - 3));
      x.add({Symbol::U, k}, Rational(static_cast<long>(rng() % 7) - 3));
    }
    out.push_back(std::move(x));
  }
  return out;
}

/// C x = alpha(alpha - 1) x for every sample.
inline CheckResult casimir_scalar_check(const Rational& alpha, const std::vector<CircleElement>& samples) {
  const Rational gamma = alpha * (alpha - 1);
  const OperatorWord c = casimir_word();
  for (const auto& x : samples) {
    CircleElement cx = apply_word(c, x);
    if (cx != gamma * x) return {false, "C(" + x.render() + ") = " + cx.render() + ", expected gamma = " + to_string(gamma)};
  }
  return {};
}

/// e_n e_m x - e_m e_n x = (m - n) e_{n+m} x.
inline CheckResult witt_bracket_check(int n, int m, const CircleElement& x) {
  CircleElement lhs = act_e(n, act_e(m, x)) - act_e(m, act_e(n, x));
  CircleElement rhs = Rational(m - n) * act_e(n + m, x);
  if (lhs == rhs) return {};
  return {false, "[e_" + std::to_string(n) + ", e_" + std::to_string(m) + "] on " + x.render() + ": " + lhs.render() +
                     " vs " + rhs.render()};
}

struct BasisReport {
  std::vector<CircleElement> vectors;   ///< v_0, e_0^n v_0 (n<=D), e_{-1}^n v_0 (n<=D)
  std::vector<BasisKey> extremes;       ///< leading term for v_0 and e_0-powers, lowest term for e_{-1}-powers
  bool extremes_ok = true;
  bool independent = false;
  std::size_t rank = 0;
};

/// At alpha = 0: leading terms v_0, u_0, v_1, u_1, ... and lowest terms u_{-1}, u_{-2}, ...; full rank.
inline BasisReport basis_leading_terms(int max_power) {
  BasisReport rep;
  const Rational alpha = 0;
  CircleElement v0 = CircleElement::basis(alpha, Symbol::V, 0);
  rep.vectors.push_back(v0);
  rep.extremes.push_back(v0.leading());
  rep.extremes_ok = rep.extremes.back() == BasisKey{Symbol::V, 0};
  CircleElement x = v0;
  for (int n = 1; n <= max_power; ++n) {
    x = act_e(0, x);
    rep.vectors.push_back(x);
    rep.extremes.push_back(x.leading());
    // n-th power leads with v_{n/2} for even n, u_{(n-1)/2} for odd n
    BasisKey want = n % 2 ? BasisKey{Symbol::U, (n - 1) / 2} : BasisKey{Symbol::V, n / 2};
    rep.extremes_ok = rep.extremes_ok && rep.extremes.back() == want;
  }
  x = v0;
  for (int n = 1; n <= max_power; ++n) {
    x = act_e(-1, x);
    rep.vectors.push_back(x);
    rep.extremes.push_back(x.lowest());
    rep.extremes_ok = rep.extremes_ok && rep.extremes.back() == BasisKey{Symbol::U, -n} && x.coefficient({Symbol::U, -n}) != 0;
  }
  std::map<BasisKey, std::size_t> col;
  for (const auto& v : rep.vectors)
    for (const auto& [k, c] : v.terms()) col.try_emplace(k, 0);
  std::size_t i = 0;
  for (auto& [k, idx] : col) idx = i++;
  Matrix m(rep.vectors.size(), col.size());
  for (std::size_t r = 0; r < rep.vectors.size(); ++r)
    for (const auto& [k, c] : rep.vectors[r].terms()) m(r, col.at(k)) = c;
  rep.rank = gaugemod::rank(m);
  rep.independent = rep.rank == rep.vectors.size();
  return rep;
}

/// The circle ts = 1 as a gauge module with U_alpha = Q^2, rho(E_11) = alpha·I and the 2×2 field B.
///
/// The action formulas for N(alpha) are written against the frame t·d/dt, in which B = [[0, t], [1, 0]].
/// In the chart parameter t the same module has gauge field (B - rho(E_11)) / t.
class CircleGauge {
public:
  explicit CircleGauge(const Rational& alpha)
      : alpha_(alpha), variety_(Variety::parse({"t", "s"}, {"t*s - 1"})) {
    frame_ = std::make_shared<const TangentFrame>(variety_, variety_.chart("t"));
    const auto& ctx = frame_->localization();
    const auto& ring = variety_.ring();
    Polynomial t = Polynomial::variable(ring, "t");
    std::vector<std::vector<Polynomial>> b = {{Polynomial(ring), t}, {Polynomial::constant(ring, 1), Polynomial(ring)}};
    LocMatrix field(ctx, 2);
    for (std::size_t r = 0; r < 2; ++r)
      for (std::size_t c = 0; c < 2; ++c) {
        Polynomial e = b[r][c];
        if (r == c) e -= Polynomial::constant(ring, alpha);
        field(r, c) = LocalizedElement(ctx, e, 1);
      }
    GlModule u(1, {alpha * Matrix::identity(2)}, "U_alpha");
    action_ = std::make_unique<GaugeAction>(frame_, std::move(u), GaugeField{{field}});
  }

  const Variety& variety() const { return variety_; }
  const GaugeAction& action() const { return *action_; }
  const Rational& alpha() const { return alpha_; }

  /// t^k in A = Q[t, t^-1], written with s = t^-1 for negative k.
  LocalizedElement laurent(int k) const {
    const auto& ring = variety_.ring();
    Polynomial p = k >= 0 ? Polynomial::variable(ring, "t").pow(k) : Polynomial::variable(ring, "s").pow(-k);
    return frame_->element(p);
  }

  /// e_n = t^{n+1} d/dt in chart form.
  std::vector<LocalizedElement> e(int n) const { return {laurent(n + 1)}; }

  GaugeElement embed(const CircleElement& x) const {
    GaugeElement g(frame_->localization());
    for (const auto& [k, c] : x.terms()) g.add(k.first == Symbol::V ? 0 : 1, c * laurent(k.second));
    return g;
  }

  /// The gauge action of e_n on t^k⊗(v or u) equals act_e(n, v_k or u_k).
  CheckResult crosscheck(int n, int k, Symbol sym) const {
    CircleElement x = CircleElement::basis(alpha_, sym, k);
    GaugeElement via_gauge = action_->act(e(n), embed(x));
    GaugeElement via_formula = embed(act_e(n, x));
    if (via_gauge == via_formula) return {};
    return {false, "e_" + std::to_string(n) + " on " + render_key({sym, k}) + ": gauge action " + via_gauge.render() +
                       ", explicit formula " + via_formula.render()};
  }

private:
  Rational alpha_;
  Variety variety_;
  std::shared_ptr<const TangentFrame> frame_;
  std::unique_ptr<GaugeAction> action_;
};

} // namespace gaugemod::circle

#endif
