#ifndef PERMPAT_STOCHASTIC_HPP
#define PERMPAT_STOCHASTIC_HPP

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "permpat/exact_count.hpp"
#include "permpat/numeric.hpp"
#include "permpat/permutation.hpp"

namespace permpat {

// Deterministic random source: identical seeds yield identical streams on
// every platform (the engine is the fully specified mt19937_64 and all
// bounded draws use rejection sampling, never distribution objects).
class RandomSource {
public:
  explicit RandomSource(std::uint64_t seed);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t next_u64();
  // Unbiased draw from [0, bound), bound >= 1.
  std::uint64_t uniform_below(std::uint64_t bound);
  // Independent child stream for parallel work unit `index`; derived from
  // the master seed by a fixed splitting function.
  RandomSource substream(std::uint64_t index) const;

private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

// Uniform random permutation of length n via the unbiased Fisher-Yates
// shuffle; advances src.
Permutation sample_uniform(int n, RandomSource& src);

// Empirical moment statistics of copy counts over Monte Carlo trials.
// Skewness and excess kurtosis use the biased sample-moment estimators
// m3/m2^{3/2} and m4/m2^2 - 3.
struct SampleSummary {
  int n = 0;
  int k = 0;
  ContainmentKind kind = ContainmentKind::Classic;
  std::uint64_t trials = 0;
  double mean = 0.0;
  double variance = 0.0;
  double skewness = 0.0;
  double excess_kurtosis = 0.0;
  std::uint64_t seed = 0;
  std::string estimator = "biased sample moments";
};

// Moments of count_occurrences(p, 12...k, kind) over `trials` uniform
// samples. Work is split into fixed-size chunks, one substream per
// chunk, so the result is identical regardless of thread count. When
// per_trial is non-null it receives the individual counts.
SampleSummary copy_count_experiment(int n, int k, ContainmentKind kind,
                                    std::uint64_t trials,
                                    const RandomSource& src,
                                    std::vector<std::uint64_t>* per_trial =
                                        nullptr);

// Exact expectation of the number of copies of any length-k pattern in a
// uniform n-permutation: C(n,k)/k! (Classic), (n-k+1)/k! (Tight),
// (n-k+1)^2/(C(n,k) k!) (VeryTight). Independent of the pattern.
Rational expected_copies(int n, int k, ContainmentKind kind);

struct VarianceGrowthRow {
  int n = 0;
  bool exact = false;
  Rational variance_exact;  // set in exact mode
  double variance = 0.0;
  double ratio = 0.0;  // Var/n^{2k-1} (Classic) or Var/n (Tight)
};

struct VarianceGrowthReport {
  int k = 0;
  ContainmentKind kind = ContainmentKind::Classic;
  std::vector<VarianceGrowthRow> rows;
  double min_ratio = 0.0;
  bool bounded_below = false;  // all ratios strictly positive
};

// Variance of the copy count of 12...k per n, exact for n within the
// enumeration guard and Monte Carlo beyond it. Only Classic and Tight
// are meaningful here (their variances grow polynomially).
VarianceGrowthReport variance_growth_check(
    int k, ContainmentKind kind, const std::vector<int>& n_values,
    int max_brute_n = kDefaultBruteForceLimit,
    std::uint64_t mc_trials = 100000,
    const RandomSource& src = RandomSource(0));

// Exact check of
//   sum_{1<=a,b<=k} C(a+b-2,a-1) C(2k-a-b,k-a) = (2k-1) C(2k-2,k-1).
bool vandermonde_identity_check(int k);

enum class SampleMode { Exact, MonteCarlo };

struct PoissonCheckRow {
  int n = 0;
  bool exact = false;
  std::uint64_t trials = 0;  // Monte Carlo mode only
  double tv_distance = 0.0;  // to Poisson(1)
  std::array<double, 4> moments{};  // E[Z^j], j = 1..4
  Rational mean_exact;  // exact mode only
};

struct PoissonCheckReport {
  std::vector<PoissonCheckRow> rows;
  std::array<BigInt, 5> bell;  // B_0..B_4, the Poisson(1) moments
  bool tv_decreasing = false;
};

// Distribution of the succession count (very tight copies of 12) against
// the Poisson(1) law: total-variation distance and first four moments
// per n, with exact enumeration or Monte Carlo sampling.
PoissonCheckReport succession_poisson_check(
    const std::vector<int>& n_values, SampleMode mode,
    std::uint64_t trials = 0, const RandomSource& src = RandomSource(0),
    int max_brute_n = kDefaultBruteForceLimit);

// jth Bell number via the Bell triangle; B_j is the jth moment of the
// Poisson distribution with parameter 1.
BigInt bell_number(int j);

}  // namespace permpat

#endif  // PERMPAT_STOCHASTIC_HPP
