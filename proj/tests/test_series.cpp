#include <doctest.h>

#include <random>

#include "permpat/errors.hpp"
#include "permpat/series.hpp"
#include "support/oracles.hpp"

using namespace permpat;

namespace {

FormalPowerSeries random_series(std::mt19937& rng, int order,
                                bool invertible) {
  std::vector<Rational> coeffs;
  for (int i = 0; i <= order; ++i) {
    int num = static_cast<int>(rng() % 11) - 5;
    int den = 1 + static_cast<int>(rng() % 6);
    coeffs.emplace_back(num, den);
  }
  if (invertible && coeffs[0] == 0) coeffs[0] = 1;
  return FormalPowerSeries(std::move(coeffs));
}

// f_3(x) = 1 - x + x^3/6 - x^4/24 + x^6/720 - ... built directly from
// factorials, independent of the counting module.
FormalPowerSeries f3_direct(int order) {
  FormalPowerSeries f(order);
  BigInt fact = 1;
  for (int m = 0; m <= order; ++m) {
    if (m >= 2) fact *= m;
    if (m % 3 == 0) f.set_coefficient(m, Rational(BigInt(1), fact));
    if (m % 3 == 1) f.set_coefficient(m, Rational(BigInt(-1), fact));
  }
  return f;
}

}  // namespace

TEST_SUITE("series") {

TEST_CASE("basic arithmetic") {
  FormalPowerSeries one_plus(std::vector<Rational>{1, 1, 0, 0});
  FormalPowerSeries one_minus(std::vector<Rational>{1, -1, 0, 0});
  FormalPowerSeries product = one_plus * one_minus;
  CHECK(product.coefficient(0) == 1);
  CHECK(product.coefficient(1) == 0);
  CHECK(product.coefficient(2) == -1);
  CHECK(product.coefficient(3) == 0);

  std::mt19937 rng(1);
  FormalPowerSeries a = random_series(rng, 6, false);
  CHECK(a + FormalPowerSeries(6) == a);
}

TEST_CASE("results carry the smaller operand order") {
  FormalPowerSeries a(7), b(3);
  CHECK((a + b).order() == 3);
  CHECK((a * b).order() == 3);
  CHECK(ps_arith(a, b, SeriesOp::Sub).order() == 3);
}

TEST_CASE("multiplication matches direct convolution") {
  std::mt19937 rng(2);
  for (int trial = 0; trial < 30; ++trial) {
    FormalPowerSeries a = random_series(rng, 8, false);
    FormalPowerSeries b = random_series(rng, 8, false);
    FormalPowerSeries c = a * b;
    for (int n = 0; n <= 8; ++n) {
      Rational expected = 0;
      for (int i = 0; i <= n; ++i)
        expected += a.coefficient(i) * b.coefficient(n - i);
      CHECK(c.coefficient(n) == expected);
    }
  }
}

TEST_CASE("reciprocal of 1-x is the geometric series") {
  FormalPowerSeries geometric =
      ps_reciprocal(FormalPowerSeries(std::vector<Rational>{1, -1, 0, 0, 0}));
  for (int i = 0; i <= 4; ++i) CHECK(geometric.coefficient(i) == 1);
}

TEST_CASE("reciprocal requires a nonzero constant term") {
  FormalPowerSeries x(std::vector<Rational>{0, 1});
  CHECK_THROWS_AS(ps_reciprocal(x), ZeroConstantTerm);
}

TEST_CASE("reciprocal multiplies back to one") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    FormalPowerSeries a = random_series(rng, 9, true);
    FormalPowerSeries product = a * ps_reciprocal(a);
    CHECK(product.coefficient(0) == 1);
    for (int i = 1; i <= 9; ++i) CHECK(product.coefficient(i) == 0);
  }
}

TEST_CASE("reciprocal of f_3 encodes the tight 123 avoiders") {
  FormalPowerSeries a = ps_reciprocal(f3_direct(4));
  CHECK(a.coefficient(3) == Rational(5, 6));  // T_3 = 3! * 5/6 = 5
  // and 5 is what direct enumeration of the 6 length-3 permutations gives
  CHECK(oracles::naive_avoider_count(3, {1, 2, 3},
                                     ContainmentKind::Tight) == 5);
}

TEST_CASE("generalized binomial power") {
  FormalPowerSeries s = ps_binomial_power(Rational(-8), Rational(3, 2), 3);
  CHECK(s.coefficient(0) == 1);
  CHECK(s.coefficient(1) == -12);
  CHECK(s.coefficient(2) == 24);
  CHECK(s.coefficient(3) == 32);
  // against C(alpha,j) c^j computed term by term
  std::mt19937 rng(4);
  for (int trial = 0; trial < 10; ++trial) {
    Rational c(static_cast<int>(rng() % 9) - 4, 1 + rng() % 3);
    Rational alpha(static_cast<int>(rng() % 9) - 4, 1 + rng() % 4);
    FormalPowerSeries t = ps_binomial_power(c, alpha, 6);
    Rational coeff = 1;
    CHECK(t.coefficient(0) == 1);
    for (int j = 1; j <= 6; ++j) {
      coeff = coeff * (alpha - (j - 1)) / j;
      Rational cj = coeff;
      for (int e = 0; e < j; ++e) cj *= c;
      CHECK(t.coefficient(j) == cj);
    }
  }
  FormalPowerSeries linear = ps_binomial_power(Rational(7), Rational(1), 4);
  CHECK(linear.coefficient(0) == 1);
  CHECK(linear.coefficient(1) == 7);
  CHECK(linear.coefficient(2) == 0);
  FormalPowerSeries trivial = ps_binomial_power(Rational(7), Rational(0), 4);
  CHECK(trivial == FormalPowerSeries::constant(1, 4));
}

TEST_CASE("integration") {
  FormalPowerSeries x = ps_integrate(FormalPowerSeries::constant(1, 0));
  CHECK(x.order() == 1);
  CHECK(x.coefficient(0) == 0);
  CHECK(x.coefficient(1) == 1);

  // integral of e^{-t^2/2} starts x - x^3/6 + x^5/40
  FormalPowerSeries gauss =
      ps_exp(FormalPowerSeries::monomial(Rational(-1, 2), 2, 5));
  FormalPowerSeries integral = ps_integrate(gauss);
  CHECK(integral.coefficient(0) == 0);
  CHECK(integral.coefficient(1) == 1);
  CHECK(integral.coefficient(2) == 0);
  CHECK(integral.coefficient(3) == Rational(-1, 6));
  CHECK(integral.coefficient(4) == 0);
  CHECK(integral.coefficient(5) == Rational(1, 40));
}

TEST_CASE("derivative undoes integration") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    FormalPowerSeries a = random_series(rng, 7, false);
    CHECK(ps_derivative(ps_integrate(a)) == a);
  }
}

TEST_CASE("exponential") {
  CHECK(ps_exp(FormalPowerSeries(5)) == FormalPowerSeries::constant(1, 5));
  FormalPowerSeries e = ps_exp(FormalPowerSeries::monomial(1, 1, 6));
  BigInt fact = 1;
  for (int n = 0; n <= 6; ++n) {
    if (n >= 2) fact *= n;
    CHECK(e.coefficient(n) == Rational(BigInt(1), fact));
  }
  FormalPowerSeries gauss =
      ps_exp(FormalPowerSeries::monomial(Rational(-1, 2), 2, 4));
  CHECK(gauss.coefficient(4) == Rational(1, 8));
  CHECK_THROWS_AS(ps_exp(FormalPowerSeries::constant(1, 3)),
                  NonzeroConstantTerm);
}

TEST_CASE("ring axioms spot check") {
  std::mt19937 rng(6);
  for (int trial = 0; trial < 15; ++trial) {
    FormalPowerSeries a = random_series(rng, 6, false);
    FormalPowerSeries b = random_series(rng, 6, false);
    FormalPowerSeries c = random_series(rng, 6, false);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a - a == FormalPowerSeries(6));
  }
}

TEST_CASE("printing") {
  FormalPowerSeries s(std::vector<Rational>{1, Rational(-1, 2), 3});
  CHECK(s.to_string() == "1 + -1/2*x + 3*x^2");
}

}  // TEST_SUITE
