#include <gaugemod/derham.hpp>
#include <gaugemod/sampling.hpp>

#include <gtest/gtest.h>

#include <numeric>

using namespace gaugemod;

namespace {

std::shared_ptr<const TangentFrame> affine_frame(std::size_t n) {
  std::vector<std::string> vars;
  for (std::size_t i = 1; i <= n; ++i) vars.push_back("x" + std::to_string(i));
  auto v = Variety::parse(vars, {});
  return std::make_shared<const TangentFrame>(v, v.charts().front());
}

std::shared_ptr<const TangentFrame> sphere_frame() {
  auto v = Variety::parse({"x", "y", "z"}, {"x^2+y^2+z^2-1"});
  return std::make_shared<const TangentFrame>(v, v.chart("z"));
}

LocalizedElement L(const TangentFrame& f, const std::string& src, int hp = 0) {
  return LocalizedElement(f.localization(), parse_poly(src, f.localization()->ring()), hp);
}

std::vector<LocalizedElement> fields(const TangentFrame& f, std::initializer_list<const char*> src) {
  std::vector<LocalizedElement> out;
  for (auto s : src) out.push_back(L(f, s));
  return out;
}

std::vector<LocalizedElement> zeros(const TangentFrame& f) {
  return std::vector<LocalizedElement>(f.dimension(), LocalizedElement::zero(f.localization()));
}

WedgeIndex range(std::size_t from, std::size_t to) {
  WedgeIndex s(to - from);
  std::iota(s.begin(), s.end(), from);
  return s;
}

FormElement random_form(Sampler& rng, const LocalizationPtr& ctx, std::size_t n, std::size_t k) {
  FormElement x(ctx, k);
  for (const auto& s : wedge_basis(n, k))
    if (rng.coin(70)) x.add(s, rng.localized(ctx, 2, 1));
  return x;
}

std::vector<LocalizedElement> random_field(Sampler& rng, const LocalizationPtr& ctx, std::size_t n) {
  std::vector<LocalizedElement> eta;
  for (std::size_t i = 0; i < n; ++i) eta.push_back(rng.localized(ctx, 2, 1));
  return eta;
}

struct Config {
  std::string name;
  DeRhamComplex cx;
};

std::vector<Config> configurations() {
  std::vector<Config> out;
  for (std::size_t n = 1; n <= 3; ++n) {
    auto f = affine_frame(n);
    out.push_back({"A" + std::to_string(n) + " zero", DeRhamComplex(f, zeros(*f))});
    std::vector<LocalizedElement> g;
    for (std::size_t i = 1; i <= n; ++i) g.push_back(L(*f, "-2*x" + std::to_string(i)));
    out.push_back({"A" + std::to_string(n) + " gaussian", DeRhamComplex(f, g)});
  }
  auto fz = sphere_frame();
  out.push_back({"sphere zero", DeRhamComplex(fz, zeros(*fz))});
  out.push_back({"sphere B=(y,x)", DeRhamComplex(fz, fields(*fz, {"y", "x"}))});
  return out;
}

} // namespace

TEST(Wedge, SignsMatchPermutationParity) {
  for (std::size_t n = 1; n <= 4; ++n)
    for (std::size_t k = 0; k < n; ++k)
      for (const auto& s : wedge_basis(n, k))
        for (std::size_t p = 0; p < n; ++p) {
          auto w = wedge_front(p, s);
          if (std::find(s.begin(), s.end(), p) != s.end()) {
            EXPECT_FALSE(w);
            continue;
          }
          ASSERT_TRUE(w);
          // parity of the permutation sorting (p, s...)
          std::size_t inversions = 0;
          for (auto q : s) inversions += q < p;
          EXPECT_EQ(w->first, inversions % 2 ? -1 : 1);
          EXPECT_TRUE(std::is_sorted(w->second.begin(), w->second.end()));
          EXPECT_EQ(w->second.size(), k + 1);
        }
}

TEST(Wedge, ElementaryActionMatchesExteriorPower) {
  for (std::size_t n = 1; n <= 4; ++n)
    for (std::size_t k = 0; k <= n; ++k) {
      auto basis = wedge_basis(n, k);
      auto m = exterior_power(n, k);
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t c = 0; c < basis.size(); ++c) {
            Matrix col(basis.size(), 1);
            if (auto w = elementary_on_wedge(p, i, basis[c])) {
              auto r = std::find(basis.begin(), basis.end(), w->second) - basis.begin();
              col(static_cast<std::size_t>(r), 0) = w->first;
            }
            for (std::size_t r = 0; r < basis.size(); ++r) EXPECT_EQ(m.rho(p, i)(r, c), col(r, 0));
          }
    }
}

TEST(FormElement, RejectsUnsortedWedges) {
  auto f = affine_frame(2);
  FormElement x(f->localization(), 2);
  EXPECT_THROW(x.add({1, 0}, LocalizedElement::one(f->localization())), Error);
  EXPECT_THROW(x.add({0}, LocalizedElement::one(f->localization())), Error);
}

TEST(DeRham, DifferentialExamples) {
  for (std::size_t n = 1; n <= 3; ++n) {
    auto f = affine_frame(n);
    DeRhamComplex cx(f, zeros(*f));
    const auto& ctx = f->localization();
    for (std::size_t k = 0; k < n; ++k) {
      EXPECT_TRUE(cx.d(FormElement::single(LocalizedElement::one(ctx), range(0, k))).is_zero()) << n << " " << k;
      auto x = FormElement::single(f->parameter(0), range(1, k + 1));
      EXPECT_EQ(cx.d(x), FormElement::single(LocalizedElement::one(ctx), range(0, k + 1))) << n << " " << k;
    }
    EXPECT_THROW(cx.d(FormElement::single(LocalizedElement::one(ctx), range(0, n))), Error);
  }
  auto f1 = affine_frame(1);
  DeRhamComplex g(f1, fields(*f1, {"-2*x1"}));
  EXPECT_EQ(g.d(FormElement::single(LocalizedElement::one(f1->localization()), {})),
            FormElement::single(L(*f1, "-2*x1"), {0}));
}

TEST(DeRham, ComplexExamples) {
  auto f2 = affine_frame(2);
  Sampler rng(1);
  DeRhamComplex flat(f2, zeros(*f2));
  for (int trial = 0; trial < 10; ++trial) EXPECT_TRUE(check_complex(flat, random_form(rng, f2->localization(), 2, 0)).pass);

  auto fz = sphere_frame();
  DeRhamComplex sphere(fz, zeros(*fz));
  EXPECT_TRUE(check_complex(sphere, FormElement::single(L(*fz, "x", 1), {})).pass);

  DeRhamComplex curved(f2, fields(*f2, {"x2", "-x1"}));
  EXPECT_FALSE(curved.field_is_closed());
  auto r = check_complex(curved, FormElement::single(LocalizedElement::one(f2->localization()), {}));
  EXPECT_FALSE(r.pass);
  EXPECT_FALSE(r.witness.empty());
}

TEST(DeRham, MorphismExamples) {
  auto f2 = affine_frame(2);
  const auto& ctx = f2->localization();
  DeRhamComplex cx(f2, zeros(*f2));
  std::vector<LocalizedElement> d1{LocalizedElement::one(ctx), LocalizedElement::zero(ctx)};
  EXPECT_TRUE(check_morphism(cx, d1, FormElement::single(f2->parameter(0), {})).pass);
  std::vector<LocalizedElement> constant{LocalizedElement::constant(ctx, 3), LocalizedElement::constant(ctx, -1)};
  EXPECT_TRUE(check_morphism(cx, constant, FormElement::single(LocalizedElement::constant(ctx, 5), {1})).pass);
}

TEST(DeRham, ChainAndMorphismProperties) {
  Sampler rng(77);
  for (const auto& c : configurations()) {
    const auto& cx = c.cx;
    ASSERT_TRUE(cx.field_is_closed()) << c.name;
    const auto& ctx = cx.frame().localization();
    const std::size_t n = cx.dimension();
    for (int trial = 0; trial < 50; ++trial) {
      std::size_t k = static_cast<std::size_t>(rng.integer(0, static_cast<long>(n) - 1));
      auto x = random_form(rng, ctx, n, k);
      if (k + 2 <= n) {
        auto r = check_complex(cx, x);
        ASSERT_TRUE(r.pass) << c.name << ": " << r.witness;
      }
      auto m = check_morphism(cx, random_field(rng, ctx, n), x);
      ASSERT_TRUE(m.pass) << c.name << ": " << m.witness;
    }
  }
}

TEST(DeRham, ActionAgreesWithGaugeAction) {
  Sampler rng(12);
  for (const auto& c : configurations()) {
    const auto& cx = c.cx;
    const std::size_t n = cx.dimension();
    const auto& ctx = cx.frame().localization();
    for (std::size_t k = 0; k <= n; ++k) {
      auto basis = wedge_basis(n, k);
      auto m = exterior_power(n, k);
      GaugeAction ga(cx.frame_ptr(), m, GaugeField::scalar(cx.field(), m.dim()));
      auto to_gauge = [&](const FormElement& x) {
        GaugeElement g(ctx);
        for (const auto& [s, a] : x.terms())
          g.add(static_cast<std::size_t>(std::find(basis.begin(), basis.end(), s) - basis.begin()), a);
        return g;
      };
      for (int trial = 0; trial < 5; ++trial) {
        auto x = random_form(rng, ctx, n, k);
        auto eta = random_field(rng, ctx, n);
        EXPECT_EQ(to_gauge(cx.act(eta, x)), ga.act(eta, to_gauge(x))) << c.name << " k=" << k;
      }
    }
  }
}

TEST(DeRham, NotAnAModuleMorphism) {
  for (std::size_t n = 1; n <= 2; ++n) {
    auto f = affine_frame(n);
    DeRhamComplex cx(f, zeros(*f));
    auto w = witness_not_a_morphism(cx);
    EXPECT_EQ(w.f, f->parameter(0));
    EXPECT_EQ(w.d_of_fx, FormElement::single(LocalizedElement::one(f->localization()), {0}));
    EXPECT_TRUE(w.f_times_dx.is_zero());
  }
  auto point = Variety::parse({"x"}, {"x"});
  auto f0 = std::make_shared<const TangentFrame>(point, point.charts().front());
  DeRhamComplex cx0(f0, {});
  EXPECT_THROW(witness_not_a_morphism(cx0), Error);
}

TEST(DeRham, GaussianObstruction) {
  auto v1 = gaussian_obstruction(1, 6);
  EXPECT_FALSE(v1.feasible);
  EXPECT_EQ(v1.label(6), "INFEASIBLE_UP_TO_D=6");
  EXPECT_FALSE(gaussian_obstruction(2, 4).feasible);
  for (int d = 0; d <= 4; ++d) EXPECT_FALSE(gaussian_obstruction(1, d).feasible);

  auto ring = make_ring({"x"});
  auto control = gaussian_obstruction(ring, {Polynomial(ring)}, 1);
  ASSERT_TRUE(control.feasible);
  EXPECT_EQ(control.label(1), "FEASIBLE");
  EXPECT_EQ(partial(control.solution[0], 0), Polynomial::constant(ring, 1));
  EXPECT_EQ(control.solution[0], parse_poly("x", ring));
}
