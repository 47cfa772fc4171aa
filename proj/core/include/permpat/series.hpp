#ifndef PERMPAT_SERIES_HPP
#define PERMPAT_SERIES_HPP

#include <string>
#include <vector>

#include "permpat/numeric.hpp"

namespace permpat {

// A truncated formal power series with exact rational coefficients.
// `order()` is the largest exponent whose coefficient is stored; all
// arithmetic truncates to the smaller operand order, never padding.
class FormalPowerSeries {
public:
  // Zero series of the given order.
  explicit FormalPowerSeries(int order);
  // order = coefficients.size() - 1.
  explicit FormalPowerSeries(std::vector<Rational> coefficients);

  static FormalPowerSeries constant(const Rational& c, int order);
  static FormalPowerSeries monomial(const Rational& c, int exponent,
                                    int order);

  int order() const { return static_cast<int>(coefficients_.size()) - 1; }
  const Rational& coefficient(int exponent) const;
  void set_coefficient(int exponent, const Rational& value);
  const std::vector<Rational>& coefficients() const { return coefficients_; }

  // "c0 + c1*x + c2*x^2 + ..." with exact fractions.
  std::string to_string() const;

  friend bool operator==(const FormalPowerSeries&,
                         const FormalPowerSeries&) = default;

private:
  std::vector<Rational> coefficients_;
};

enum class SeriesOp { Add, Sub, Mul };

// Coefficientwise Add/Sub or Cauchy-product Mul, exact, truncated to the
// smaller operand order.
FormalPowerSeries ps_arith(const FormalPowerSeries& a,
                           const FormalPowerSeries& b, SeriesOp op);

FormalPowerSeries operator+(const FormalPowerSeries& a,
                            const FormalPowerSeries& b);
FormalPowerSeries operator-(const FormalPowerSeries& a,
                            const FormalPowerSeries& b);
FormalPowerSeries operator*(const FormalPowerSeries& a,
                            const FormalPowerSeries& b);

// Multiplicative inverse to the same order; throws ZeroConstantTerm when
// the constant coefficient vanishes.
FormalPowerSeries ps_reciprocal(const FormalPowerSeries& a);

// Expansion of (1 + c*x)^alpha via generalized binomial coefficients.
FormalPowerSeries ps_binomial_power(const Rational& c, const Rational& alpha,
                                    int order);

// Termwise antiderivative with zero constant term; the result order is
// one higher than the input order (that coefficient is exact).
FormalPowerSeries ps_integrate(const FormalPowerSeries& a);

// Termwise derivative; result order is max(order - 1, 0).
FormalPowerSeries ps_derivative(const FormalPowerSeries& a);

// exp(a) via the recurrence from exp' = a'*exp; requires a_0 = 0, throws
// NonzeroConstantTerm otherwise.
FormalPowerSeries ps_exp(const FormalPowerSeries& a);

}  // namespace permpat

#endif  // PERMPAT_SERIES_HPP
