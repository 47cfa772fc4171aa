#ifndef PERMPAT_EXACT_COUNT_HPP
#define PERMPAT_EXACT_COUNT_HPP

#include <cstdint>
#include <map>

#include "permpat/numeric.hpp"
#include "permpat/permutation.hpp"
#include "permpat/series.hpp"

namespace permpat {

enum class CountMethod { Formula, GeneratingFunction, BruteForce };

const char* to_string(CountMethod method);

// One exact avoider count together with how it was obtained.
struct CountReport {
  int n = 0;
  Permutation pattern;
  ContainmentKind kind = ContainmentKind::Classic;
  BigInt count;
  CountMethod method = CountMethod::BruteForce;
};

// Exhaustive enumeration above this length is refused unless the caller
// raises the guard explicitly (each +1 costs a factor of n in CPU time).
inline constexpr int kDefaultBruteForceLimit = 11;

// nth Catalan number C(2n,n)/(n+1); the number of n-permutations avoiding
// any fixed pattern of length three.
BigInt catalan(int n);

enum class GesselForm { Sum, Product };

// Number of n-permutations avoiding 1234, by either of Gessel's two
// closed forms. Both are evaluated in exact rational arithmetic; a
// non-integer result throws NonIntegerResult (it would mean a bug).
BigInt s_1234(int n, GesselForm form);

// Number of n-permutations avoiding 1342, by the alternating closed form.
BigInt s_1342(int n);

// Ordinary generating function of S_n(1342),
//   H(x) = 32x / (-8x^2 + 20x + 1 - (1-8x)^{3/2}),
// expanded to the given order. The closed form encodes the empty
// permutation: its constant coefficient comes out exactly 1.
FormalPowerSeries gf_1342(int order);

// T_n(12...k) for n = 0..n_max from the reciprocal of
//   f_k(x) = sum_i x^{ik}/(ik)! - sum_i x^{ik+1}/(ik+1)!.
// Requires k >= 3.
std::vector<BigInt> tight_monotone_counts(int k, int n_max);

// T_n(132) for n = 0..n_max from 1/(1 - int_0^x e^{-t^2/2} dt).
std::vector<BigInt> tight_132_counts(int n_max);

// V_n(12...k) for n = 0..n_max from the coefficient series
//   sum_m m! x^m ((1-x^{k-1})/(1-x^k))^m.
// Requires k >= 2.
std::vector<BigInt> very_tight_monotone_counts(int k, int n_max);

// (k-1)^{2n}, an upper bound for S_n(12...k) when k > 2.
BigInt rank_bound(int n, int k);

// Number of n-permutations avoiding q under `kind`, by exhaustive
// enumeration in lexicographic order. Deterministic; throws
// SizeLimitExceeded when n > max_n.
BigInt brute_force_count(int n, const Permutation& q, ContainmentKind kind,
                         int max_n = kDefaultBruteForceLimit);

// For each t, the number of n-permutations with exactly t occurrences of
// q under `kind`. Values sum to n!.
std::map<std::uint64_t, BigInt> brute_force_copy_distribution(
    int n, const Permutation& q, ContainmentKind kind,
    int max_n = kDefaultBruteForceLimit);

}  // namespace permpat

#endif  // PERMPAT_EXACT_COUNT_HPP
