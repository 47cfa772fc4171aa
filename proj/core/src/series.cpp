#include "permpat/series.hpp"

#include <algorithm>
#include <stdexcept>

#include "permpat/errors.hpp"

namespace permpat {

FormalPowerSeries::FormalPowerSeries(int order) {
  if (order < 0) throw std::invalid_argument("series order must be >= 0");
  coefficients_.assign(order + 1, Rational(0));
}

FormalPowerSeries::FormalPowerSeries(std::vector<Rational> coefficients)
    : coefficients_(std::move(coefficients)) {
  if (coefficients_.empty())
    throw std::invalid_argument("series needs at least the constant term");
}

FormalPowerSeries FormalPowerSeries::constant(const Rational& c, int order) {
  FormalPowerSeries s(order);
  s.coefficients_[0] = c;
  return s;
}

FormalPowerSeries FormalPowerSeries::monomial(const Rational& c, int exponent,
                                              int order) {
  FormalPowerSeries s(order);
  if (exponent < 0) throw std::invalid_argument("negative exponent");
  if (exponent <= order) s.coefficients_[exponent] = c;
  return s;
}

const Rational& FormalPowerSeries::coefficient(int exponent) const {
  if (exponent < 0 || exponent > order())
    throw std::out_of_range("coefficient exponent out of range");
  return coefficients_[exponent];
}

void FormalPowerSeries::set_coefficient(int exponent, const Rational& value) {
  if (exponent < 0 || exponent > order())
    throw std::out_of_range("coefficient exponent out of range");
  coefficients_[exponent] = value;
}

std::string FormalPowerSeries::to_string() const {
  std::string out;
  for (int i = 0; i <= order(); ++i) {
    if (i) out += " + ";
    out += coefficients_[i].str();
    if (i == 1) out += "*x";
    if (i > 1) out += "*x^" + std::to_string(i);
  }
  return out;
}

FormalPowerSeries ps_arith(const FormalPowerSeries& a,
                           const FormalPowerSeries& b, SeriesOp op) {
  int order = std::min(a.order(), b.order());
  FormalPowerSeries out(order);
  switch (op) {
    case SeriesOp::Add:
      for (int i = 0; i <= order; ++i)
        out.set_coefficient(i, a.coefficient(i) + b.coefficient(i));
      break;
    case SeriesOp::Sub:
      for (int i = 0; i <= order; ++i)
        out.set_coefficient(i, a.coefficient(i) - b.coefficient(i));
      break;
    case SeriesOp::Mul:
      for (int i = 0; i <= order; ++i) {
        if (a.coefficient(i) == 0) continue;
        for (int j = 0; i + j <= order; ++j) {
          if (b.coefficient(j) == 0) continue;
          out.set_coefficient(
              i + j,
              out.coefficient(i + j) + a.coefficient(i) * b.coefficient(j));
        }
      }
      break;
  }
  return out;
}

FormalPowerSeries operator+(const FormalPowerSeries& a,
                            const FormalPowerSeries& b) {
  return ps_arith(a, b, SeriesOp::Add);
}

FormalPowerSeries operator-(const FormalPowerSeries& a,
                            const FormalPowerSeries& b) {
  return ps_arith(a, b, SeriesOp::Sub);
}

FormalPowerSeries operator*(const FormalPowerSeries& a,
                            const FormalPowerSeries& b) {
  return ps_arith(a, b, SeriesOp::Mul);
}

FormalPowerSeries ps_reciprocal(const FormalPowerSeries& a) {
  if (a.coefficient(0) == 0)
    throw ZeroConstantTerm("series reciprocal needs a nonzero constant term");
  int order = a.order();
  FormalPowerSeries b(order);
  Rational inv0 = Rational(1) / a.coefficient(0);
  b.set_coefficient(0, inv0);
  for (int n = 1; n <= order; ++n) {
    Rational s = 0;
    for (int i = 1; i <= n; ++i) s += a.coefficient(i) * b.coefficient(n - i);
    b.set_coefficient(n, -s * inv0);
  }
  return b;
}

FormalPowerSeries ps_binomial_power(const Rational& c, const Rational& alpha,
                                    int order) {
  FormalPowerSeries out(order);
  Rational term = 1;  // C(alpha, j) * c^j
  out.set_coefficient(0, term);
  for (int j = 1; j <= order; ++j) {
    term *= (alpha - (j - 1)) / j * c;
    out.set_coefficient(j, term);
  }
  return out;
}

FormalPowerSeries ps_integrate(const FormalPowerSeries& a) {
  FormalPowerSeries out(a.order() + 1);
  for (int j = 0; j <= a.order(); ++j)
    out.set_coefficient(j + 1, a.coefficient(j) / (j + 1));
  return out;
}

FormalPowerSeries ps_derivative(const FormalPowerSeries& a) {
  FormalPowerSeries out(std::max(a.order() - 1, 0));
  for (int j = 1; j <= a.order(); ++j)
    out.set_coefficient(j - 1, a.coefficient(j) * j);
  return out;
}

FormalPowerSeries ps_exp(const FormalPowerSeries& a) {
  if (a.coefficient(0) != 0)
    throw NonzeroConstantTerm("ps_exp requires a vanishing constant term");
  int order = a.order();
  FormalPowerSeries b(order);
  b.set_coefficient(0, Rational(1));
  // n*b_n = sum_{j=1}^{n} j*a_j*b_{n-j}, from b' = a'*b.
  for (int n = 1; n <= order; ++n) {
    Rational s = 0;
    for (int j = 1; j <= n; ++j)
      s += Rational(j) * a.coefficient(j) * b.coefficient(n - j);
    b.set_coefficient(n, s / n);
  }
  return b;
}

}  // namespace permpat
