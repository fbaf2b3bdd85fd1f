#ifndef GAUGEMOD_LOCALIZATION_HPP
#define GAUGEMOD_LOCALIZATION_HPP

#include "groebner.hpp"

#include <memory>
#include <string>
#include <vector>

namespace gaugemod {

/// The localized algebra A_(h): fractions a / h^p with a in A.
class Localization {
public:
  Localization(QuotientPtr quotient, const Polynomial& h) : quotient_(std::move(quotient)), h_(quotient_->reduce(h)) {
    if (h_.is_zero()) throw Error("cannot localize at an element that is zero in A");
    h_is_one_ = h_ == quotient_->one();
  }

  const QuotientPtr& quotient() const { return quotient_; }
  const RingPtr& ring() const { return quotient_->ring(); }
  const Polynomial& h() const { return h_; }
  bool trivial() const { return h_is_one_; }

  Polynomial h_power(int p) const {
    Polynomial r = quotient_->one();
    for (int i = 0; i < p; ++i) r = quotient_->reduce(r * h_);
    return r;
  }

private:
  QuotientPtr quotient_;
  Polynomial h_;
  bool h_is_one_ = false;
};

using LocalizationPtr = std::shared_ptr<const Localization>;

/// Element numerator / h^hpower of A_(h). Kept lazy: h is never cancelled from the numerator.
class LocalizedElement {
public:
  LocalizedElement() = default;

  LocalizedElement(LocalizationPtr ctx, const Polynomial& numerator, int hpower = 0)
      : ctx_(std::move(ctx)), num_(ctx_->quotient()->reduce(numerator)), hpower_(ctx_->trivial() ? 0 : hpower) {
    if (hpower < 0) throw Error("negative power of h");
    if (num_.is_zero()) hpower_ = 0;
  }

  static LocalizedElement zero(const LocalizationPtr& ctx) { return {ctx, ctx->quotient()->zero(), 0}; }
  static LocalizedElement one(const LocalizationPtr& ctx) { return {ctx, ctx->quotient()->one(), 0}; }
  static LocalizedElement constant(const LocalizationPtr& ctx, const Rational& c) {
    return {ctx, Polynomial::constant(ctx->ring(), c), 0};
  }

  const LocalizationPtr& context() const { return ctx_; }
  const Polynomial& numerator() const { return num_; }
  int hpower() const { return hpower_; }
  bool is_zero() const { return num_.is_zero(); }

  LocalizedElement operator-() const { return {ctx_, -num_, hpower_, Raw{}}; }

  friend LocalizedElement operator+(const LocalizedElement& a, const LocalizedElement& b) {
    a.check(b);
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const auto& q = *a.ctx_->quotient();
    int m = std::max(a.hpower_, b.hpower_);
    Polynomial na = a.hpower_ == m ? a.num_ : q.reduce(a.num_ * a.ctx_->h_power(m - a.hpower_));
    Polynomial nb = b.hpower_ == m ? b.num_ : q.reduce(b.num_ * a.ctx_->h_power(m - b.hpower_));
    return {a.ctx_, na + nb, m};
  }

  friend LocalizedElement operator-(const LocalizedElement& a, const LocalizedElement& b) { return a + (-b); }

  friend LocalizedElement operator*(const LocalizedElement& a, const LocalizedElement& b) {
    a.check(b);
    if (a.is_zero() || b.is_zero()) return zero(a.ctx_);
    return {a.ctx_, a.num_ * b.num_, a.hpower_ + b.hpower_};
  }

  friend LocalizedElement operator*(const Rational& s, const LocalizedElement& a) {
    return {a.ctx_, a.num_ * s, a.hpower_, Raw{}};
  }

  LocalizedElement& operator+=(const LocalizedElement& b) { return *this = *this + b; }
  LocalizedElement& operator-=(const LocalizedElement& b) { return *this = *this - b; }
  LocalizedElement& operator*=(const LocalizedElement& b) { return *this = *this * b; }

  /// Divides by h^p.
  LocalizedElement over_h(int p) const { return {ctx_, num_, hpower_ + p}; }

  /// Cross-multiplication test in A: h^q·a = h^p·b (A is a domain, so the common power is dropped).
  friend bool operator==(const LocalizedElement& a, const LocalizedElement& b) {
    a.check(b);
    if (a.hpower_ == b.hpower_) return a.num_ == b.num_;
    const auto& q = *a.ctx_->quotient();
    int m = std::min(a.hpower_, b.hpower_);
    Polynomial lhs = q.reduce(a.num_ * a.ctx_->h_power(b.hpower_ - m));
    Polynomial rhs = q.reduce(b.num_ * a.ctx_->h_power(a.hpower_ - m));
    return lhs == rhs;
  }
  friend bool operator!=(const LocalizedElement& a, const LocalizedElement& b) { return !(a == b); }

  std::string render() const {
    std::string n = ctx_->quotient()->render(num_);
    if (hpower_ == 0) return n;
    std::string h = ctx_->quotient()->render(ctx_->h());
    std::string den = hpower_ == 1 ? "(" + h + ")" : "(" + h + ")^" + std::to_string(hpower_);
    return "(" + n + ")/" + den;
  }

  void check(const LocalizedElement& b) const {
    if (ctx_ != b.ctx_ && !(ctx_ && b.ctx_ && ctx_->h() == b.ctx_->h() && ctx_->quotient() == b.ctx_->quotient()))
      throw MismatchError("localized elements over different localizations");
  }

private:
  struct Raw {};
  // numerator already reduced
  LocalizedElement(LocalizationPtr ctx, Polynomial num, int hpower, Raw)
      : ctx_(std::move(ctx)), num_(std::move(num)), hpower_(num_.is_zero() ? 0 : hpower) {}

  LocalizationPtr ctx_;
  Polynomial num_;
  int hpower_ = 0;
};

/// A derivation of A_(h), fixed by its values on the ambient coordinates x_1..x_n.
struct Derivation {
  std::vector<LocalizedElement> images;

  /// Value on a polynomial: sum_j dP/dx_j · D(x_j).
  LocalizedElement apply(const LocalizationPtr& ctx, const Polynomial& p) const {
    if (images.size() != ctx->ring()->size()) throw MismatchError("derivation arity does not match ring");
    LocalizedElement acc = LocalizedElement::zero(ctx);
    for (std::size_t j = 0; j < images.size(); ++j) {
      if (images[j].is_zero()) continue;
      Polynomial dp = partial(p, j);
      if (dp.is_zero()) continue;
      acc += LocalizedElement(ctx, dp) * images[j];
    }
    return acc;
  }
};

/// Quotient rule: D(a / h^p) = D(a)/h^p - p·a·D(h)/h^(p+1).
inline LocalizedElement loc_partial(const LocalizedElement& a, const Derivation& d) {
  const auto& ctx = a.context();
  LocalizedElement da = d.apply(ctx, a.numerator()).over_h(a.hpower());
  if (a.hpower() == 0) return da;
  LocalizedElement dh = d.apply(ctx, ctx->h());
  LocalizedElement tail = LocalizedElement(ctx, a.numerator()).over_h(a.hpower() + 1) * dh;
  return da - Rational(a.hpower()) * tail;
}

} // namespace gaugemod

#endif
