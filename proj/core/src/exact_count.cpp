#include "permpat/exact_count.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "permpat/errors.hpp"

namespace permpat {

const char* to_string(CountMethod method) {
  switch (method) {
    case CountMethod::Formula:
      return "formula";
    case CountMethod::GeneratingFunction:
      return "generating-function";
    case CountMethod::BruteForce:
      return "brute-force";
  }
  return "?";
}

BigInt catalan(int n) {
  if (n < 0) throw std::invalid_argument("catalan: n must be >= 0");
  Rational c(big_binomial(2 * n, n), n + 1);
  if (!is_integer(c)) throw NonIntegerResult("catalan");
  return to_integer(c);
}

BigInt s_1234(int n, GesselForm form) {
  if (n < 1) throw std::invalid_argument("s_1234: n must be >= 1");
  Rational total = 0;
  if (form == GesselForm::Sum) {
    for (int k = 0; k <= n; ++k) {
      long long poly = 3LL * k * k + 2 * k + 1 - n - 2LL * n * k;
      BigInt num = big_binomial(2 * k, k) * big_binomial(n, k) *
                   big_binomial(n, k) * poly;
      BigInt den = BigInt(k + 1) * (k + 1) * (k + 2) * (n - k + 1);
      total += Rational(num, den);
    }
    total *= 2;
  } else {
    BigInt sum = 0;
    for (int k = 0; k <= n; ++k)
      sum += big_binomial(2 * k, k) * big_binomial(n + 1, k + 1) *
             big_binomial(n + 2, k + 1);
    total = Rational(sum, BigInt(n + 1) * (n + 1) * (n + 2));
  }
  if (!is_integer(total)) throw NonIntegerResult("s_1234");
  return to_integer(total);
}

BigInt s_1342(int n) {
  if (n < 1) throw std::invalid_argument("s_1342: n must be >= 1");
  long long head = 7LL * n * n - 3 * n - 2;
  Rational total(BigInt(head) * (n % 2 == 1 ? 1 : -1), 2);
  Rational sum = 0;
  for (int i = 2; i <= n; ++i) {
    int sign = (n - i) % 2 == 0 ? 1 : -1;
    BigInt num = big_pow(2, i + 1) * big_factorial(2 * i - 4) *
                 big_binomial(n - i + 2, 2) * sign;
    BigInt den = big_factorial(i) * big_factorial(i - 2);
    sum += Rational(num, den);
  }
  total += Rational(3) * sum;
  if (!is_integer(total)) throw NonIntegerResult("s_1342");
  return to_integer(total);
}

FormalPowerSeries gf_1342(int order) {
  if (order < 1) throw std::invalid_argument("gf_1342: order must be >= 1");
  // Denominator of 32x / (-8x^2 + 20x + 1 - (1-8x)^{3/2}), one order
  // higher than requested so the division by x below is exact.
  FormalPowerSeries poly(order + 1);
  poly.set_coefficient(0, Rational(1));
  poly.set_coefficient(1, Rational(20));
  poly.set_coefficient(2, Rational(-8));
  FormalPowerSeries den =
      poly - ps_binomial_power(Rational(-8), Rational(3, 2), order + 1);
  if (den.coefficient(0) != 0)
    throw std::logic_error("gf_1342: denominator constant term must vanish");
  // H = 32x/den = 1/(den/(32x)); the shifted series has constant term 1,
  // so H(0) = 1: the closed form counts the empty permutation.
  FormalPowerSeries shifted(order);
  for (int j = 0; j <= order; ++j)
    shifted.set_coefficient(j, den.coefficient(j + 1) / 32);
  return ps_reciprocal(shifted);
}

namespace {

FormalPowerSeries f_k_series(int k, int order) {
  FormalPowerSeries f(order);
  BigInt fact = 1;
  std::vector<Rational> inv_fact(order + 1);
  for (int m = 0; m <= order; ++m) {
    if (m >= 2) fact *= m;
    inv_fact[m] = Rational(BigInt(1), m >= 2 ? fact : BigInt(1));
  }
  for (int i = 0; i * k <= order; ++i)
    f.set_coefficient(i * k, f.coefficient(i * k) + inv_fact[i * k]);
  for (int i = 0; i * k + 1 <= order; ++i)
    f.set_coefficient(i * k + 1,
                      f.coefficient(i * k + 1) - inv_fact[i * k + 1]);
  return f;
}

std::vector<BigInt> egf_to_counts(const FormalPowerSeries& a,
                                  const char* what) {
  std::vector<BigInt> out(a.order() + 1);
  BigInt fact = 1;
  for (int n = 0; n <= a.order(); ++n) {
    if (n >= 2) fact *= n;
    Rational c = a.coefficient(n) * Rational(fact);
    if (!is_integer(c)) throw NonIntegerResult(what);
    out[n] = to_integer(c);
  }
  return out;
}

}  // namespace

std::vector<BigInt> tight_monotone_counts(int k, int n_max) {
  if (k < 3)
    throw std::invalid_argument("tight_monotone_counts: k must be >= 3");
  if (n_max < 0)
    throw std::invalid_argument("tight_monotone_counts: n_max must be >= 0");
  return egf_to_counts(ps_reciprocal(f_k_series(k, n_max)),
                       "tight_monotone_counts");
}

std::vector<BigInt> tight_132_counts(int n_max) {
  if (n_max < 0)
    throw std::invalid_argument("tight_132_counts: n_max must be >= 0");
  int inner_order = std::max(n_max - 1, 0);
  FormalPowerSeries gauss =
      ps_exp(FormalPowerSeries::monomial(Rational(-1, 2), 2, inner_order));
  FormalPowerSeries integral = ps_integrate(gauss);  // order n_max (or 1)
  FormalPowerSeries denom =
      FormalPowerSeries::constant(Rational(1), n_max) - integral;
  return egf_to_counts(ps_reciprocal(denom), "tight_132_counts");
}

std::vector<BigInt> very_tight_monotone_counts(int k, int n_max) {
  if (k < 2)
    throw std::invalid_argument(
        "very_tight_monotone_counts: k must be >= 2");
  if (n_max < 0)
    throw std::invalid_argument(
        "very_tight_monotone_counts: n_max must be >= 0");
  FormalPowerSeries num(n_max);
  num.set_coefficient(0, Rational(1));
  if (k - 1 <= n_max)
    num.set_coefficient(k - 1, num.coefficient(k - 1) + Rational(-1));
  FormalPowerSeries den(n_max);
  den.set_coefficient(0, Rational(1));
  if (k <= n_max) den.set_coefficient(k, Rational(-1));
  FormalPowerSeries ratio = num * ps_reciprocal(den);

  // sum_m m! x^m ratio^m; the m-th term has valuation >= m, so the sum
  // truncates at m = n_max.
  FormalPowerSeries total(n_max);
  FormalPowerSeries power = FormalPowerSeries::constant(Rational(1), n_max);
  BigInt mfact = 1;
  for (int m = 0; m <= n_max; ++m) {
    if (m > 0) {
      power = power * ratio;
      mfact *= m;
    }
    for (int j = 0; m + j <= n_max; ++j)
      total.set_coefficient(
          m + j, total.coefficient(m + j) + Rational(mfact) * power.coefficient(j));
  }

  std::vector<BigInt> out(n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    if (!is_integer(total.coefficient(n)))
      throw std::logic_error(
          "very_tight_monotone_counts: non-integer coefficient");
    out[n] = to_integer(total.coefficient(n));
  }
  return out;
}

BigInt rank_bound(int n, int k) {
  if (n < 1) throw std::invalid_argument("rank_bound: n must be >= 1");
  if (k <= 2) throw std::invalid_argument("rank_bound: k must be > 2");
  return big_pow(BigInt(k - 1), 2 * static_cast<unsigned>(n));
}

namespace {

constexpr int kParallelEnumerationThreshold = 10;

// Visits every permutation of {1..n} with the given first entry, in
// lexicographic order of the remaining entries.
template <typename Visit>
void enumerate_with_first(int n, int first, Visit&& visit) {
  std::vector<int> buf(n);
  buf[0] = first;
  int idx = 1;
  for (int v = 1; v <= n; ++v)
    if (v != first) buf[idx++] = v;
  std::span<const int> view(buf);
  do {
    visit(view);
  } while (std::next_permutation(buf.begin() + 1, buf.end()));
}

template <typename Visit>
void enumerate_all(int n, Visit&& visit) {
  std::vector<int> buf(n);
  std::iota(buf.begin(), buf.end(), 1);
  std::span<const int> view(buf);
  do {
    visit(view);
  } while (std::next_permutation(buf.begin(), buf.end()));
}

void check_enumeration_size(int n, int max_n) {
  if (n < 0)
    throw std::invalid_argument("enumeration length must be >= 0");
  if (n > max_n)
    throw SizeLimitExceeded("exhaustive enumeration guarded at n <= " +
                            std::to_string(max_n) + " (got n = " +
                            std::to_string(n) + ")");
}

}  // namespace

BigInt brute_force_count(int n, const Permutation& q, ContainmentKind kind,
                         int max_n) {
  check_enumeration_size(n, max_n);
  if (q.empty())
    throw PreconditionViolated("pattern must have length >= 1");
  if (n == 0) return 1;  // the empty permutation avoids every pattern

  auto q_view = q.span();
  if (n >= kParallelEnumerationThreshold) {
    // Partition by first entry; integer summation makes the result
    // independent of the partitioning.
    std::vector<std::future<std::uint64_t>> parts;
    parts.reserve(n);
    for (int first = 1; first <= n; ++first) {
      parts.push_back(std::async(std::launch::async, [n, first, q_view,
                                                      kind]() {
        std::uint64_t avoiders = 0;
        enumerate_with_first(n, first, [&](std::span<const int> p) {
          if (!detail::contains_raw(p, q_view, kind)) ++avoiders;
        });
        return avoiders;
      }));
    }
    BigInt total = 0;
    for (auto& part : parts) total += part.get();
    return total;
  }

  std::uint64_t avoiders = 0;
  enumerate_all(n, [&](std::span<const int> p) {
    if (!detail::contains_raw(p, q_view, kind)) ++avoiders;
  });
  return BigInt(avoiders);
}

std::map<std::uint64_t, BigInt> brute_force_copy_distribution(
    int n, const Permutation& q, ContainmentKind kind, int max_n) {
  check_enumeration_size(n, max_n);
  if (q.empty())
    throw PreconditionViolated("pattern must have length >= 1");

  using Histogram = std::map<std::uint64_t, std::uint64_t>;
  auto q_view = q.span();
  std::map<std::uint64_t, BigInt> out;

  if (n == 0) {
    out[0] = 1;
    return out;
  }

  if (n >= kParallelEnumerationThreshold) {
    std::vector<std::future<Histogram>> parts;
    parts.reserve(n);
    for (int first = 1; first <= n; ++first) {
      parts.push_back(std::async(std::launch::async, [n, first, q_view,
                                                      kind]() {
        Histogram h;
        enumerate_with_first(n, first, [&](std::span<const int> p) {
          ++h[detail::count_occurrences_raw(p, q_view, kind)];
        });
        return h;
      }));
    }
    for (auto& part : parts)
      for (const auto& [copies, perms] : part.get()) out[copies] += perms;
    return out;
  }

  Histogram h;
  enumerate_all(n, [&](std::span<const int> p) {
    ++h[detail::count_occurrences_raw(p, q_view, kind)];
  });
  for (const auto& [copies, perms] : h) out[copies] = perms;
  return out;
}

}  // namespace permpat
