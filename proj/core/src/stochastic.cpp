#include "permpat/stochastic.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "permpat/errors.hpp"

namespace permpat {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace

RandomSource::RandomSource(std::uint64_t seed)
    : seed_(seed), engine_(splitmix64(seed)) {}

std::uint64_t RandomSource::next_u64() { return engine_(); }

std::uint64_t RandomSource::uniform_below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_below(0)");
  // Rejection sampling keeps the draw unbiased and platform-independent.
  std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
  while (true) {
    std::uint64_t r = engine_();
    if (r >= threshold) return r % bound;
  }
}

RandomSource RandomSource::substream(std::uint64_t index) const {
  return RandomSource(splitmix64(seed_ + (index + 1) * 0x9E3779B97F4A7C15ULL));
}

namespace {

void fisher_yates(std::vector<int>& buf, RandomSource& src) {
  int n = static_cast<int>(buf.size());
  for (int i = 0; i < n; ++i) buf[i] = i + 1;
  for (int i = n - 1; i > 0; --i) {
    int j = static_cast<int>(src.uniform_below(i + 1));
    std::swap(buf[i], buf[j]);
  }
}

std::uint64_t monotone_copy_count(std::span<const int> p, int k,
                                  ContainmentKind kind) {
  int n = static_cast<int>(p.size());
  switch (kind) {
    case ContainmentKind::Classic:
      return detail::count_increasing_subsequences(p, k);
    case ContainmentKind::Tight: {
      std::uint64_t total = 0;
      int run = 1;  // current increasing run length ending here
      for (int i = 0; i < n; ++i) {
        run = (i > 0 && p[i - 1] < p[i]) ? run + 1 : 1;
        if (run >= k) ++total;
      }
      return total;
    }
    case ContainmentKind::VeryTight: {
      std::uint64_t total = 0;
      for (int i = 0; i + k <= n; ++i) {
        bool hit = true;
        for (int a = 0; a + 1 < k && hit; ++a)
          hit = p[i + a] + 1 == p[i + a + 1];
        total += hit;
      }
      return total;
    }
  }
  return 0;
}

constexpr std::uint64_t kChunkTrials = 4096;

// Fills counts[t] for t in [0, trials) with copy counts of 12...k over
// independent samples. Chunk c always uses substream c of `src`, so the
// result does not depend on the number of worker threads.
void run_trials(int n, int k, ContainmentKind kind, std::uint64_t trials,
                const RandomSource& src, std::vector<std::uint64_t>& counts) {
  counts.assign(trials, 0);
  std::uint64_t chunks = (trials + kChunkTrials - 1) / kChunkTrials;
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(
      std::min<std::uint64_t>(workers, chunks ? chunks : 1));

  auto work = [&](unsigned worker) {
    std::vector<int> buf(n);
    for (std::uint64_t c = worker; c < chunks; c += workers) {
      RandomSource stream = src.substream(c);
      std::uint64_t begin = c * kChunkTrials;
      std::uint64_t end = std::min(trials, begin + kChunkTrials);
      for (std::uint64_t t = begin; t < end; ++t) {
        fisher_yates(buf, stream);
        counts[t] = monotone_copy_count(buf, k, kind);
      }
    }
  };

  if (workers == 1) {
    work(0);
    return;
  }
  std::vector<std::future<void>> futures;
  futures.reserve(workers);
  for (unsigned w = 0; w < workers; ++w)
    futures.push_back(std::async(std::launch::async, work, w));
  for (auto& f : futures) f.get();
}

struct Moments {
  double mean, variance, skewness, excess_kurtosis;
};

Moments biased_sample_moments(const std::vector<std::uint64_t>& counts) {
  double trials = static_cast<double>(counts.size());
  long double sum = 0;
  for (auto c : counts) sum += c;
  double mean = static_cast<double>(sum / trials);
  long double m2 = 0, m3 = 0, m4 = 0;
  for (auto c : counts) {
    long double d = static_cast<long double>(c) - mean;
    long double d2 = d * d;
    m2 += d2;
    m3 += d2 * d;
    m4 += d2 * d2;
  }
  m2 /= trials;
  m3 /= trials;
  m4 /= trials;
  Moments out{mean, static_cast<double>(m2), 0.0, 0.0};
  if (m2 > 0) {
    out.skewness = static_cast<double>(m3 / std::pow(m2, 1.5L));
    out.excess_kurtosis = static_cast<double>(m4 / (m2 * m2) - 3);
  }
  return out;
}

}  // namespace

Permutation sample_uniform(int n, RandomSource& src) {
  if (n < 1) throw std::invalid_argument("sample_uniform: n must be >= 1");
  std::vector<int> buf(n);
  fisher_yates(buf, src);
  return Permutation(std::move(buf));
}

SampleSummary copy_count_experiment(int n, int k, ContainmentKind kind,
                                    std::uint64_t trials,
                                    const RandomSource& src,
                                    std::vector<std::uint64_t>* per_trial) {
  if (k < 2 || n < k)
    throw std::invalid_argument("copy_count_experiment: need n >= k >= 2");
  if (trials < 1)
    throw std::invalid_argument("copy_count_experiment: trials must be >= 1");

  std::vector<std::uint64_t> local;
  std::vector<std::uint64_t>& counts = per_trial ? *per_trial : local;
  run_trials(n, k, kind, trials, src, counts);

  Moments m = biased_sample_moments(counts);
  SampleSummary summary;
  summary.n = n;
  summary.k = k;
  summary.kind = kind;
  summary.trials = trials;
  summary.mean = m.mean;
  summary.variance = m.variance;
  summary.skewness = m.skewness;
  summary.excess_kurtosis = m.excess_kurtosis;
  summary.seed = src.seed();
  return summary;
}

Rational expected_copies(int n, int k, ContainmentKind kind) {
  if (k < 1 || n < k)
    throw std::invalid_argument("expected_copies: need n >= k >= 1");
  switch (kind) {
    case ContainmentKind::Classic:
      return Rational(big_binomial(n, k), big_factorial(k));
    case ContainmentKind::Tight:
      return Rational(BigInt(n - k + 1), big_factorial(k));
    case ContainmentKind::VeryTight:
      return Rational(BigInt(n - k + 1) * (n - k + 1),
                      big_binomial(n, k) * big_factorial(k));
  }
  throw std::logic_error("unreachable");
}

namespace {

// Exact mean and variance of a copy-count distribution.
std::pair<Rational, Rational> distribution_mean_variance(
    const std::map<std::uint64_t, BigInt>& dist) {
  BigInt total = 0, first = 0, second = 0;
  for (const auto& [t, c] : dist) {
    total += c;
    first += BigInt(t) * c;
    second += BigInt(t) * t * c;
  }
  Rational mean(first, total);
  Rational variance = Rational(second, total) - mean * mean;
  return {mean, variance};
}

}  // namespace

VarianceGrowthReport variance_growth_check(int k, ContainmentKind kind,
                                           const std::vector<int>& n_values,
                                           int max_brute_n,
                                           std::uint64_t mc_trials,
                                           const RandomSource& src) {
  if (kind == ContainmentKind::VeryTight)
    throw std::invalid_argument(
        "variance_growth_check: kind must be Classic or Tight");
  if (k < 2) throw std::invalid_argument("variance_growth_check: k >= 2");

  VarianceGrowthReport report;
  report.k = k;
  report.kind = kind;
  Permutation alpha = monotone_pattern(k);
  for (int n : n_values) {
    if (n < k)
      throw std::invalid_argument("variance_growth_check: need n >= k");
    VarianceGrowthRow row;
    row.n = n;
    if (n <= max_brute_n) {
      auto dist = brute_force_copy_distribution(n, alpha, kind, max_brute_n);
      auto [mean, variance] = distribution_mean_variance(dist);
      row.exact = true;
      row.variance_exact = variance;
      row.variance = variance.convert_to<double>();
    } else {
      SampleSummary s = copy_count_experiment(
          n, k, kind, mc_trials, src.substream(static_cast<std::uint64_t>(n)));
      row.exact = false;
      row.variance = s.variance;
    }
    double scale = kind == ContainmentKind::Classic
                       ? std::pow(static_cast<double>(n), 2 * k - 1)
                       : static_cast<double>(n);
    row.ratio = row.variance / scale;
    report.rows.push_back(std::move(row));
  }
  report.min_ratio = report.rows.empty()
                         ? 0.0
                         : std::min_element(report.rows.begin(),
                                            report.rows.end(),
                                            [](auto& a, auto& b) {
                                              return a.ratio < b.ratio;
                                            })
                               ->ratio;
  report.bounded_below =
      !report.rows.empty() &&
      std::all_of(report.rows.begin(), report.rows.end(),
                  [](auto& r) { return r.ratio > 0; });
  return report;
}

bool vandermonde_identity_check(int k) {
  if (k < 1) throw std::invalid_argument("vandermonde: k must be >= 1");
  BigInt lhs = 0;
  for (int a = 1; a <= k; ++a)
    for (int b = 1; b <= k; ++b)
      lhs += big_binomial(a + b - 2, a - 1) * big_binomial(2 * k - a - b, k - a);
  BigInt rhs = BigInt(2 * k - 1) * big_binomial(2 * k - 2, k - 1);
  return lhs == rhs;
}

namespace {

double poisson1_pmf(std::uint64_t t) {
  double f = 1.0;
  for (std::uint64_t i = 2; i <= t; ++i) f *= static_cast<double>(i);
  return std::exp(-1.0) / f;
}

PoissonCheckRow poisson_row_from_histogram(
    int n, const std::map<std::uint64_t, double>& probabilities) {
  PoissonCheckRow row;
  row.n = n;
  std::uint64_t t_max = 0;
  for (const auto& [t, p] : probabilities) t_max = std::max(t_max, t);

  double tv = 0.0, poisson_mass = 0.0;
  for (std::uint64_t t = 0; t <= t_max; ++t) {
    double emp = 0.0;
    auto it = probabilities.find(t);
    if (it != probabilities.end()) emp = it->second;
    double pois = poisson1_pmf(t);
    poisson_mass += pois;
    tv += std::abs(emp - pois);
  }
  tv += 1.0 - poisson_mass;  // Poisson tail beyond the observed support
  row.tv_distance = tv / 2;

  for (int j = 1; j <= 4; ++j) {
    double m = 0.0;
    for (const auto& [t, p] : probabilities)
      m += std::pow(static_cast<double>(t), j) * p;
    row.moments[j - 1] = m;
  }
  return row;
}

}  // namespace

PoissonCheckReport succession_poisson_check(const std::vector<int>& n_values,
                                            SampleMode mode,
                                            std::uint64_t trials,
                                            const RandomSource& src,
                                            int max_brute_n) {
  PoissonCheckReport report;
  for (int j = 0; j <= 4; ++j) report.bell[j] = bell_number(j);

  Permutation q12 = monotone_pattern(2);
  for (int n : n_values) {
    if (n < 2)
      throw std::invalid_argument("succession_poisson_check: need n >= 2");
    std::map<std::uint64_t, double> probabilities;
    PoissonCheckRow row;
    if (mode == SampleMode::Exact) {
      auto dist =
          brute_force_copy_distribution(n, q12, ContainmentKind::VeryTight,
                                        max_brute_n);
      BigInt total = 0;
      for (const auto& [t, c] : dist) total += c;
      for (const auto& [t, c] : dist)
        probabilities[t] = Rational(c, total).convert_to<double>();
      row = poisson_row_from_histogram(n, probabilities);
      row.exact = true;
      auto [mean, variance] = distribution_mean_variance(dist);
      row.mean_exact = mean;
    } else {
      if (trials < 1)
        throw std::invalid_argument("monte carlo mode needs trials >= 1");
      std::vector<std::uint64_t> counts;
      run_trials(n, 2, ContainmentKind::VeryTight, trials,
                 src.substream(static_cast<std::uint64_t>(n)), counts);
      std::map<std::uint64_t, std::uint64_t> histogram;
      for (auto c : counts) ++histogram[c];
      for (const auto& [t, c] : histogram)
        probabilities[t] =
            static_cast<double>(c) / static_cast<double>(trials);
      row = poisson_row_from_histogram(n, probabilities);
      row.exact = false;
      row.trials = trials;
    }
    report.rows.push_back(std::move(row));
  }

  report.tv_decreasing = report.rows.size() >= 2;
  for (size_t i = 1; i < report.rows.size(); ++i)
    if (report.rows[i].tv_distance >= report.rows[i - 1].tv_distance)
      report.tv_decreasing = false;
  return report;
}

BigInt bell_number(int j) {
  if (j < 0) throw std::invalid_argument("bell_number: j must be >= 0");
  std::vector<BigInt> row{1};
  for (int i = 1; i <= j; ++i) {
    std::vector<BigInt> next;
    next.reserve(i + 1);
    next.push_back(row.back());
    for (const BigInt& v : row) next.push_back(next.back() + v);
    row = std::move(next);
  }
  return row.front();
}

}  // namespace permpat
