#include <gaugemod/sampling.hpp>
#include <gaugemod/variety.hpp>

#include <gtest/gtest.h>

using namespace gaugemod;

namespace {

Variety sphere() { return Variety::parse({"x", "y", "z"}, {"x^2+y^2+z^2-1"}); }
Variety circle() { return Variety::parse({"t", "s"}, {"t*s-1"}); }
Variety hyperplane() { return Variety::parse({"x1", "x2", "x3"}, {"x1"}); }

std::vector<Polynomial> coeffs(const Variety& v, std::initializer_list<const char*> src) {
  std::vector<Polynomial> out;
  for (auto s : src) out.push_back(parse_poly(s, v.ring()));
  return out;
}

// e_n = t^{n+1} d/dt on ts = 1, written ambiently: e_n(t) = t^{n+1}, e_n(s) = -t^{n-1}
VectorField witt(const Variety& c, int n) {
  auto power = [&](int k) {
    return k >= 0 ? Polynomial::variable(c.ring(), "t").pow(k) : Polynomial::variable(c.ring(), "s").pow(-k);
  };
  return c.make_field({power(n + 1), -power(n - 1)});
}

} // namespace

TEST(Variety, Jacobians) {
  auto s = sphere();
  ASSERT_EQ(s.jacobian().size(), 1u);
  EXPECT_EQ(s.jacobian()[0], coeffs(s, {"2*x", "2*y", "2*z"}));
  auto c = circle();
  EXPECT_EQ(c.jacobian()[0], coeffs(c, {"s", "t"}));
  auto h = hyperplane();
  EXPECT_EQ(h.jacobian()[0], coeffs(h, {"1", "0", "0"}));
}

TEST(Variety, RankAndDimension) {
  EXPECT_EQ(sphere().jacobian_rank(), 1u);
  EXPECT_EQ(sphere().dimension(), 2u);
  EXPECT_EQ(circle().jacobian_rank(), 1u);
  EXPECT_EQ(hyperplane().jacobian_rank(), 1u);
  EXPECT_EQ(hyperplane().dimension(), 2u);
  // redundant generators do not raise the rank
  auto twice = Variety::parse({"x", "y"}, {"x^2+y^2-1", "2*x^2+2*y^2-2"});
  EXPECT_EQ(twice.jacobian_rank(), 1u);
  auto affine = Variety::parse({"x", "y"}, {});
  EXPECT_EQ(affine.jacobian_rank(), 0u);
  EXPECT_EQ(affine.dimension(), 2u);
  EXPECT_THROW(Variety::parse({"x"}, {"x", "x-1"}), Error);
}

TEST(Variety, Charts) {
  auto s = sphere();
  ASSERT_EQ(s.charts().size(), 3u);
  EXPECT_EQ(s.charts()[0].name, "x");
  EXPECT_EQ(s.charts()[1].name, "y");
  EXPECT_EQ(s.charts()[2].name, "z");
  EXPECT_EQ(s.chart("z").minor, parse_poly("2*z", s.ring()));
  EXPECT_EQ(s.chart("z").parameters, (std::vector<std::size_t>{0, 1}));

  auto c = circle();
  ASSERT_EQ(c.charts().size(), 2u);
  EXPECT_EQ(c.chart("s").parameters, (std::vector<std::size_t>{1}));
  EXPECT_EQ(c.chart("t").parameters, (std::vector<std::size_t>{0}));
  // s is a unit in A, so the chart s != 0 is all of X
  EXPECT_TRUE(is_unit_ideal(Ideal(c.ring(), coeffs(c, {"t*s-1", "s"}))));

  auto h = hyperplane();
  ASSERT_EQ(h.charts().size(), 1u);
  EXPECT_EQ(h.charts()[0].parameters, (std::vector<std::size_t>{1, 2}));
  EXPECT_THROW(s.chart("w"), Error);
}

TEST(Variety, Smoothness) {
  EXPECT_TRUE(sphere().smoothness_certificate());
  EXPECT_TRUE(sphere().smoothness_certificate(2));
  EXPECT_TRUE(circle().smoothness_certificate());
  EXPECT_TRUE(hyperplane().smoothness_certificate());
  auto cone = Variety::parse({"x", "y", "z"}, {"x^2+y^2-z^2"});
  EXPECT_FALSE(cone.smoothness_certificate());
}

TEST(Variety, TangentFrames) {
  auto s = sphere();
  TangentFrame fz(s, s.chart("z"));
  ASSERT_EQ(fz.dimension(), 2u);
  EXPECT_EQ(fz.correction(0, 0), fz.element(parse_poly("-x", s.ring()), 1));
  EXPECT_EQ(fz.correction(1, 0), fz.element(parse_poly("-y", s.ring()), 1));
  for (const auto& ch : s.charts()) EXPECT_TRUE(TangentFrame(s, ch).verify(s));

  auto h = hyperplane();
  TangentFrame fh(h, h.charts()[0]);
  EXPECT_TRUE(fh.verify(h));
  for (std::size_t i = 0; i < 2; ++i) {
    const auto& imgs = fh.tau(i).images;
    EXPECT_TRUE(imgs[0].is_zero());  // no correction along x1
    EXPECT_EQ(imgs[i + 1], LocalizedElement::one(fh.localization()));
  }
  auto c = circle();
  for (const auto& ch : c.charts()) EXPECT_TRUE(TangentFrame(c, ch).verify(c));
}

TEST(Variety, ScaledTauIsPolynomialVectorField) {
  for (auto v : {sphere(), circle(), hyperplane(), Variety::parse({"x", "y", "z"}, {"x*y - z", "x^2 + z^2 - 2"})}) {
    for (const auto& ch : v.charts()) {
      TangentFrame f(v, ch);
      ASSERT_TRUE(f.verify(v));
      for (std::size_t i = 0; i < f.dimension(); ++i) {
        auto field = f.scaled_tau(v, i);
        EXPECT_TRUE(v.is_vector_field(field.coeffs));
        // every correction has at most one power of h
        for (const auto& img : f.tau(i).images) EXPECT_LE(img.hpower(), 1);
      }
    }
  }
}

TEST(Variety, VectorFieldMembership) {
  auto s = sphere();
  EXPECT_TRUE(s.is_vector_field(coeffs(s, {"z", "0", "-x"})));
  EXPECT_FALSE(s.is_vector_field(coeffs(s, {"1", "0", "0"})));
  auto c = circle();
  EXPECT_TRUE(c.is_vector_field(coeffs(c, {"t", "-s"})));
  EXPECT_THROW(s.make_field(coeffs(s, {"1", "0", "0"})), Error);
}

TEST(Variety, Brackets) {
  auto s = sphere();
  auto a = s.make_field(coeffs(s, {"z", "0", "-x"}));
  auto b = s.make_field(coeffs(s, {"0", "z", "-y"}));
  auto ab = s.bracket(a, b);
  EXPECT_EQ(ab, s.make_field(coeffs(s, {"y", "-x", "0"})));
  EXPECT_TRUE(s.is_vector_field(ab.coeffs));
  auto aa = s.bracket(a, a);
  for (const auto& c : aa.coeffs) EXPECT_TRUE(c.is_zero());

  auto c = circle();
  EXPECT_EQ(c.bracket(witt(c, 0), witt(c, 1)), witt(c, 1));
  for (int n = -2; n <= 2; ++n)
    for (int m = -2; m <= 2; ++m) {
      auto lhs = c.bracket(witt(c, n), witt(c, m));
      auto rhs = witt(c, n + m);
      for (auto& co : rhs.coeffs) co = co * Rational(m - n);
      EXPECT_EQ(lhs, rhs) << n << "," << m;
    }
}

TEST(Variety, JacobiIdentity) {
  auto s = sphere();
  Sampler rng(21);
  TangentFrame fz(s, s.chart("z"));
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<VectorField> f;
    for (int k = 0; k < 3; ++k) {
      VectorField v{std::vector<Polynomial>(3, Polynomial(s.ring()))};
      for (std::size_t i = 0; i < 2; ++i) {
        auto g = rng.polynomial(s.ring(), 1);
        auto base = fz.scaled_tau(s, i);
        for (std::size_t j = 0; j < 3; ++j) v.coeffs[j] += s.algebra().reduce(g * base.coeffs[j]);
      }
      f.push_back(s.make_field(v.coeffs));
    }
    auto j1 = s.bracket(f[0], s.bracket(f[1], f[2]));
    auto j2 = s.bracket(f[1], s.bracket(f[2], f[0]));
    auto j3 = s.bracket(f[2], s.bracket(f[0], f[1]));
    for (std::size_t i = 0; i < 3; ++i) EXPECT_TRUE((j1.coeffs[i] + j2.coeffs[i] + j3.coeffs[i]).is_zero());
  }
}

TEST(Variety, ChartForm) {
  auto s = sphere();
  TangentFrame fz(s, s.chart("z"));
  auto rot = s.make_field(coeffs(s, {"z", "0", "-x"}));
  auto eta = to_chart(fz, rot);
  ASSERT_EQ(eta.size(), 2u);
  EXPECT_EQ(eta[0], fz.element(parse_poly("z", s.ring())));
  EXPECT_TRUE(eta[1].is_zero());
  // evaluating on the chart parameters recovers the coefficients
  for (std::size_t i = 0; i < 2; ++i) EXPECT_EQ(apply_chart_field(fz, eta, fz.parameter(i)), eta[i]);

  auto c = circle();
  TangentFrame ft(c, c.chart("t"));
  for (int n = -3; n <= 3; ++n) {
    auto e = to_chart(ft, witt(c, n));
    auto expected = n + 1 >= 0 ? Polynomial::variable(c.ring(), "t").pow(n + 1)
                               : Polynomial::variable(c.ring(), "s").pow(-(n + 1));
    EXPECT_EQ(e[0], ft.element(expected));
  }
}

TEST(Variety, ChartConsistencyWithAmbientAction) {
  Sampler rng(4);
  for (auto v : {sphere(), circle(), Variety::parse({"x", "y", "z"}, {"x*y - z", "x^2 + z^2 - 2"})}) {
    for (const auto& ch : v.charts()) {
      TangentFrame f(v, ch);
      std::vector<VectorField> fields;
      for (std::size_t i = 0; i < f.dimension(); ++i) fields.push_back(f.scaled_tau(v, i));
      for (int trial = 0; trial < 6; ++trial) {
        VectorField eta{std::vector<Polynomial>(v.ring()->size(), Polynomial(v.ring()))};
        for (const auto& b : fields) {
          auto g = rng.polynomial(v.ring(), 1);
          for (std::size_t j = 0; j < eta.coeffs.size(); ++j) eta.coeffs[j] += v.algebra().reduce(g * b.coeffs[j]);
        }
        auto a = rng.polynomial(v.ring(), 3);
        auto ambient = f.element(v.apply(eta, a));
        auto chart = apply_chart_field(f, to_chart(f, eta), f.element(a));
        EXPECT_EQ(ambient, chart);
      }
    }
  }
}
