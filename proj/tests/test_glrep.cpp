#include <gaugemod/glrep.hpp>

#include <gtest/gtest.h>

using namespace gaugemod;

namespace {

Matrix M(std::vector<std::vector<Rational>> rows) { return Matrix::from_rows(rows); }

// Sym^2 of the natural gl_2 module on x^2, xy, y^2; E_ij acts as x_i d/dx_j
GlModule sym2() {
  return custom_module(2, {M({{2, 0, 0}, {0, 1, 0}, {0, 0, 0}}), M({{0, 1, 0}, {0, 0, 2}, {0, 0, 0}}),
                           M({{0, 0, 0}, {2, 0, 0}, {0, 1, 0}}), M({{0, 0, 0}, {0, 1, 0}, {0, 0, 2}})});
}

// natural gl_2 module plus a trivial line
GlModule natural_plus_trivial() {
  std::vector<Matrix> mats;
  auto nat = exterior_power(2, 1);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      Matrix b(3, 3);
      for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < 2; ++c) b(r, c) = nat.rho(i, j)(r, c);
      mats.push_back(b);
    }
  return custom_module(2, mats);
}

std::vector<GlModule> test_modules(std::size_t n) {
  std::vector<GlModule> out;
  for (std::size_t k = 0; k <= n; ++k) out.push_back(exterior_power(n, k));
  if (n == 2) out.push_back(sym2());
  return out;
}

bool commutes_with_all(const Matrix& x, const GlModule& m) {
  for (std::size_t a = 0; a < m.rank(); ++a)
    for (std::size_t b = 0; b < m.rank(); ++b)
      if (!commutator(x, m.rho(a, b)).is_zero()) return false;
  return true;
}

} // namespace

TEST(GlModule, ExteriorPowers) {
  auto nat = exterior_power(2, 1);
  EXPECT_EQ(nat.dim(), 2u);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t r = 0; r < 2; ++r) EXPECT_EQ(nat.rho(i, j)(r, k), (j == k && r == i) ? 1 : 0);

  auto triv = exterior_power(2, 0);
  EXPECT_EQ(triv.dim(), 1u);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) EXPECT_TRUE(triv.rho(i, j).is_zero());

  auto det = exterior_power(3, 3);
  EXPECT_EQ(det.dim(), 1u);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(det.rho(i, j)(0, 0), i == j ? 1 : 0);

  EXPECT_EQ(exterior_power(4, 2).dim(), 6u);
  EXPECT_THROW(exterior_power(2, 3), Error);
}

TEST(GlModule, IdentityActsByDegree) {
  for (std::size_t n = 1; n <= 4; ++n)
    for (std::size_t k = 0; k <= n; ++k) {
      auto m = exterior_power(n, k);
      EXPECT_EQ(evaluate(casimir(1, n), m), Rational(static_cast<long>(k)) * Matrix::identity(m.dim()));
    }
}

TEST(GlModule, CustomModules) {
  Rational alpha(3, 7);
  EXPECT_NO_THROW(custom_module(1, {alpha * Matrix::identity(2)}));
  EXPECT_NO_THROW(custom_module(2, std::vector<Matrix>(4, Matrix(2, 2))));
  auto id = Matrix::identity(2);
  try {
    custom_module(2, {Matrix(2, 2), id, id, Matrix(2, 2)});
    FAIL() << "expected rejection";
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("(i,j,k,l)"), std::string::npos);
  }
  EXPECT_THROW(custom_module(2, {id, id, id}), Error);
  EXPECT_NO_THROW(sym2());
}

TEST(UEA, CasimirWords) {
  auto c1 = casimir(1, 2);
  EXPECT_EQ(c1.terms().size(), 2u);
  EXPECT_EQ(c1.terms().count(Word{{0, 0}}), 1u);
  EXPECT_EQ(c1.terms().count(Word{{1, 1}}), 1u);
  auto c2 = casimir(2, 2);
  EXPECT_EQ(c2.terms().size(), 4u);
  for (auto w : {Word{{0, 0}, {0, 0}}, Word{{0, 1}, {1, 0}}, Word{{1, 0}, {0, 1}}, Word{{1, 1}, {1, 1}}})
    EXPECT_EQ(c2.terms().at(w), 1);
  EXPECT_EQ(casimir(3, 3).terms().size(), 27u);
}

TEST(UEA, Evaluation) {
  auto nat = exterior_power(2, 1);
  EXPECT_EQ(evaluate(UEAElement::generator(2, 0, 0), nat), M({{1, 0}, {0, 0}}));
  EXPECT_EQ(evaluate(casimir(2, 2), nat), Rational(2) * Matrix::identity(2));
  EXPECT_EQ(evaluate(casimir(2, 2), exterior_power(2, 2)), Rational(2) * Matrix::identity(1));
  EXPECT_THROW(evaluate(UEAElement::generator(3, 2, 2), nat), Error);
  // products evaluate to matrix products in word order
  auto e12 = UEAElement::generator(2, 0, 1), e21 = UEAElement::generator(2, 1, 0);
  EXPECT_EQ(evaluate(e12 * e21 - e21 * e12, nat), nat.rho(0, 0) - nat.rho(1, 1));
}

TEST(UEA, HatOmegaTwoIsOmegaOneSquaredPlusOmegaTwo) {
  for (std::size_t n = 1; n <= 3; ++n)
    for (const auto& m : test_modules(n)) {
      auto c1 = casimir(1, n);
      EXPECT_EQ(evaluate(hat_omega(2, n), m), evaluate(c1 * c1 + casimir(2, n), m)) << m.label();
    }
  EXPECT_TRUE(evaluate(hat_omega(2, 2), exterior_power(2, 0)).is_zero());
  EXPECT_THROW(hat_omega(1, 2), Error);
  EXPECT_THROW(hat_omega(4, 3, 100), BudgetError);
}

TEST(UEA, Centrality) {
  for (std::size_t n = 2; n <= 3; ++n)
    for (std::size_t k = 2; k <= (n == 3 ? 3u : 4u); ++k)
      for (const auto& m : test_modules(n)) {
        EXPECT_TRUE(commutes_with_all(evaluate(hat_omega(k, n), m), m)) << n << " " << k << " " << m.label();
        EXPECT_TRUE(commutes_with_all(evaluate(casimir(k, n), m), m)) << n << " " << k << " " << m.label();
      }
}

TEST(UEA, PPolynomials) {
  auto nat = exterior_power(2, 1);
  EXPECT_TRUE(p_poly_matrix(2, nat).is_zero());
  EXPECT_TRUE(p_poly_matrix(2, exterior_power(2, 0)).is_zero());
  EXPECT_EQ(p_poly_matrix(2, sym2()), Rational(4) * Matrix::identity(3));
  for (std::size_t n = 1; n <= 3; ++n)
    for (const auto& m : test_modules(n)) {
      auto c1 = casimir(1, n);
      auto formula = casimir(2, n) + c1 * c1 - Rational(static_cast<long>(n + 1)) * c1;
      EXPECT_EQ(p_poly_matrix(2, m), evaluate(formula, m));
    }
  EXPECT_THROW(p_poly_matrix(1, nat), Error);
}

TEST(UEA, CentralCharacters) {
  EXPECT_EQ(central_character(exterior_power(2, 0)), (std::vector<Rational>{0, 0}));
  EXPECT_EQ(central_character(exterior_power(2, 1)), (std::vector<Rational>{1, 2}));
  EXPECT_EQ(central_character(exterior_power(2, 2)), (std::vector<Rational>{2, 2}));
  EXPECT_EQ(central_character(sym2()), (std::vector<Rational>{2, 6}));
  try {
    central_character(natural_plus_trivial());
    FAIL() << "expected non-scalar error";
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("Omega_1"), std::string::npos);
  }
}

TEST(UEA, ExceptionalCheck) {
  for (std::size_t k = 0; k <= 2; ++k) EXPECT_TRUE(exceptional_check(exterior_power(2, k)).possibly_exceptional);
  auto rep = exceptional_check(sym2());
  EXPECT_FALSE(rep.possibly_exceptional);
  EXPECT_TRUE(rep.omega1_in_range);
  ASSERT_EQ(rep.p_scalars.size(), 1u);
  EXPECT_EQ(*rep.p_scalars[0], 4);
  for (std::size_t n = 1; n <= 3; ++n) EXPECT_TRUE(exceptional_check(trivial_module(n)).possibly_exceptional);
  for (std::size_t k = 0; k <= 3; ++k) EXPECT_TRUE(exceptional_check(exterior_power(3, k)).possibly_exceptional);
  // gl_1 with E_11 = alpha: Omega_1 = alpha must lie in {0, 1}
  EXPECT_FALSE(exceptional_check(custom_module(1, {Rational(1, 2) * Matrix::identity(1)})).possibly_exceptional);
}

TEST(UEA, StabilizerSums) {
  EXPECT_EQ(stabilizer_sum(2, 2), 6u);
  for (std::size_t k = 1; k <= 5; ++k) EXPECT_EQ(stabilizer_sum(1, k), factorial(k));
  EXPECT_EQ(stabilizer_sum(3, 3), 60u);  // 5!/2!
  for (std::size_t n = 1; n <= 3; ++n)
    for (std::size_t k = 1; k <= 4; ++k) EXPECT_EQ(stabilizer_sum(n, k), factorial(n + k - 1) / factorial(n - 1));
}
