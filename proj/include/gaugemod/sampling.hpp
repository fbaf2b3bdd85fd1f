#ifndef GAUGEMOD_SAMPLING_HPP
#define GAUGEMOD_SAMPLING_HPP

#include "localization.hpp"

#include <cstdint>
#include <random>

namespace gaugemod {

/// Seeded generator whose draws are identical across platforms (no std distributions).
class Sampler {
public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  /// Uniform-ish integer in [lo, hi].
  long integer(long lo, long hi) {
    auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(rng_() % span);
  }

  bool coin(int percent) { return integer(0, 99) < percent; }

  /// Random polynomial of total degree <= deg with small integer coefficients and ~density% of monomials.
  Polynomial polynomial(const RingPtr& ring, int deg, long coeff = 3, int density = 40) {
    Polynomial p(ring);
    ExponentVector e(ring->size(), 0);
    auto rec = [&](auto&& self, std::size_t var, int left) -> void {
      if (var == ring->size()) {
        if (coin(density)) p.add_term(e, Rational(integer(-coeff, coeff)));
        return;
      }
      for (int d = 0; d <= left; ++d) {
        e[var] = d;
        self(self, var + 1, left - d);
      }
      e[var] = 0;
    };
    rec(rec, 0, deg);
    return p;
  }

  /// Random element of A_(h): polynomial / h^p with p in [0, max_hpower].
  LocalizedElement localized(const LocalizationPtr& ctx, int deg, int max_hpower = 1) {
    Polynomial num = polynomial(ctx->ring(), deg);
    return {ctx, num, static_cast<int>(integer(0, max_hpower))};
  }

private:
  std::mt19937_64 rng_;
};

} // namespace gaugemod

#endif
