#ifndef PERMPAT_ASYMPTOTICS_HPP
#define PERMPAT_ASYMPTOTICS_HPP

#include <optional>
#include <vector>

#include "permpat/exact_count.hpp"
#include "permpat/numeric.hpp"
#include "permpat/permutation.hpp"

namespace permpat {

struct GrowthRow {
  int n = 0;
  BigInt count;
  double root = 0.0;  // count^{1/n} (Classic) or (count/n!)^{1/n} otherwise
  CountMethod method = CountMethod::BruteForce;
};

// Exact avoider counts with their n-th roots: the finite prefix of the
// Stanley-Wilf limit sequence (Classic) or of the tight/very tight decay
// rate sequence.
struct GrowthSequence {
  Permutation pattern;
  ContainmentKind kind = ContainmentKind::Classic;
  std::vector<GrowthRow> rows;
};

GrowthSequence growth_sequence(const Permutation& q, ContainmentKind kind,
                               int n_max,
                               int max_brute_n = kDefaultBruteForceLimit);

// A bracket-certified root: f changes sign across (lo, hi), the bracket
// width is at most `tolerance`, and |residual| = |f(value)| is small.
struct RootResult {
  double value = 0.0;
  double residual = 0.0;
  double lo = 0.0;
  double hi = 0.0;
  double tolerance = 0.0;
};

// Smallest positive root omega_k of
//   f_k(x) = sum_i x^{ik}/(ik)! - sum_i x^{ik+1}/(ik+1)!,
// the reciprocal decay rate of T_n(12...k)/n!. Requires k >= 3; throws
// BracketingFailed if no sign change is found in (0, 4].
RootResult smallest_positive_root_fk(int k, double tol);

enum class TightConstant { Rho1342, Rho1234, Rho132 };

const char* to_string(TightConstant which);

struct TightConstantResult {
  TightConstant which = TightConstant::Rho132;
  RootResult rho;                // the decay constant itself
  std::optional<double> gamma;   // leading constant, Rho132 only
};

// Decay constants of tight avoider sequences:
//   Rho1342: rho = 1/z with int_0^z e^{-t^3/6} dt = 1,
//   Rho1234: rho = 1/z with z the smallest positive root of
//            cos z - sin z + e^{-z} = 0,
//   Rho132:  rho = 1/z with int_0^z e^{-t^2/2} dt = 1, and
//            gamma = e^{z^2/2}.
// Integrals use adaptive quadrature with error budget tol/10.
TightConstantResult tight_constant_roots(TightConstant which, double tol);

struct RatioTrendRow {
  int n = 0;
  BigInt count;
  Rational ratio;        // count/n!
  double ratio_root = 0.0;  // (count/n!)^{1/n}
  Rational bound;        // ((k!-1)/k!)^{floor(n/k)}
  bool bound_holds = false;  // ratio <= bound, exact comparison
};

struct RatioTrendReport {
  Permutation pattern;
  ContainmentKind kind = ContainmentKind::Tight;
  std::vector<RatioTrendRow> rows;
  bool all_bounds_hold = false;
};

// T_n(q)/n! per n with the crude subword bound ((k!-1)/k!)^{floor(n/k)};
// the bound is checked with exact rational arithmetic.
RatioTrendReport ratio_trend(const Permutation& q, ContainmentKind kind,
                             int n_min, int n_max,
                             int max_brute_n = kDefaultBruteForceLimit);

}  // namespace permpat

#endif  // PERMPAT_ASYMPTOTICS_HPP
