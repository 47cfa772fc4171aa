#include <algorithm>
#include <array>
#include <numeric>

#include "permpat/errors.hpp"
#include "permpat/permutation.hpp"

namespace permpat {
namespace detail {

bool window_matches(std::span<const int> window, std::span<const int> q) {
  int k = static_cast<int>(q.size());
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b)
      if ((q[a] < q[b]) != (window[a] < window[b])) return false;
  return true;
}

namespace {

bool is_increasing(std::span<const int> q) {
  return std::is_sorted(q.begin(), q.end());
}

bool is_decreasing(std::span<const int> q) {
  return std::is_sorted(q.rbegin(), q.rend());
}

// Longest increasing subsequence length, with early exit once `target`
// is reached (ranks of later entries cannot help containment queries).
int lis_length(std::span<const int> p, int target) {
  int n = static_cast<int>(p.size());
  std::vector<int> ranks(n, 1);
  int best = n > 0 ? 1 : 0;
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < j; ++i)
      if (p[i] < p[j] && ranks[i] + 1 > ranks[j]) ranks[j] = ranks[i] + 1;
    if (ranks[j] > best) best = ranks[j];
    if (best >= target) return best;
  }
  return best;
}

// Backtracking matcher for arbitrary patterns; positions are chosen left
// to right and every new choice is checked against all previous ones.
bool match_from(std::span<const int> p, std::span<const int> q,
                std::array<int, 32>& chosen, int depth) {
  int n = static_cast<int>(p.size());
  int k = static_cast<int>(q.size());
  int start = depth == 0 ? 0 : chosen[depth - 1] + 1;
  for (int i = start; i <= n - (k - depth); ++i) {
    bool ok = true;
    for (int e = 0; e < depth; ++e) {
      if ((q[e] < q[depth]) != (p[chosen[e]] < p[i])) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    chosen[depth] = i;
    if (depth == k - 1 || match_from(p, q, chosen, depth + 1)) return true;
  }
  return false;
}

std::uint64_t count_from(std::span<const int> p, std::span<const int> q,
                         std::array<int, 32>& chosen, int depth) {
  int n = static_cast<int>(p.size());
  int k = static_cast<int>(q.size());
  std::uint64_t total = 0;
  int start = depth == 0 ? 0 : chosen[depth - 1] + 1;
  for (int i = start; i <= n - (k - depth); ++i) {
    bool ok = true;
    for (int e = 0; e < depth; ++e) {
      if ((q[e] < q[depth]) != (p[chosen[e]] < p[i])) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    if (depth == k - 1) {
      ++total;
    } else {
      chosen[depth] = i;
      total += count_from(p, q, chosen, depth + 1);
    }
  }
  return total;
}

bool window_is_interval(std::span<const int> w) {
  auto [lo, hi] = std::minmax_element(w.begin(), w.end());
  return *hi - *lo == static_cast<int>(w.size()) - 1;
}

}  // namespace

std::uint64_t count_increasing_subsequences(std::span<const int> p, int k) {
  int n = static_cast<int>(p.size());
  if (k <= 0 || k > n) return 0;
  std::vector<std::uint64_t> prev(n, 1);  // subsequences of length 1
  std::vector<std::uint64_t> fen(n + 1), cur(n);
  for (int level = 2; level <= k; ++level) {
    std::fill(fen.begin(), fen.end(), 0);
    for (int j = 0; j < n; ++j) {
      std::uint64_t s = 0;
      for (int v = p[j] - 1; v > 0; v -= v & -v) s += fen[v];
      cur[j] = s;
      for (int v = p[j]; v <= n; v += v & -v) fen[v] += prev[j];
    }
    prev.swap(cur);
  }
  return std::accumulate(prev.begin(), prev.end(), std::uint64_t{0});
}

bool contains_raw(std::span<const int> p, std::span<const int> q,
                  ContainmentKind kind) {
  int n = static_cast<int>(p.size());
  int k = static_cast<int>(q.size());
  if (k > n) return false;

  switch (kind) {
    case ContainmentKind::Classic: {
      if (is_increasing(q)) return lis_length(p, k) >= k;
      if (is_decreasing(q)) {
        std::vector<int> c(p.size());
        for (int i = 0; i < n; ++i) c[i] = n + 1 - p[i];
        return lis_length(c, k) >= k;
      }
      std::array<int, 32> chosen{};
      return match_from(p, q, chosen, 0);
    }
    case ContainmentKind::Tight: {
      for (int i = 0; i + k <= n; ++i)
        if (window_matches(p.subspan(i, k), q)) return true;
      return false;
    }
    case ContainmentKind::VeryTight: {
      for (int i = 0; i + k <= n; ++i) {
        auto w = p.subspan(i, k);
        if (window_is_interval(w) && window_matches(w, q)) return true;
      }
      return false;
    }
  }
  return false;
}

std::uint64_t count_occurrences_raw(std::span<const int> p,
                                    std::span<const int> q,
                                    ContainmentKind kind) {
  int n = static_cast<int>(p.size());
  int k = static_cast<int>(q.size());
  if (k > n) return 0;

  switch (kind) {
    case ContainmentKind::Classic: {
      if (is_increasing(q)) return count_increasing_subsequences(p, k);
      if (is_decreasing(q)) {
        std::vector<int> c(p.size());
        for (int i = 0; i < n; ++i) c[i] = n + 1 - p[i];
        return count_increasing_subsequences(c, k);
      }
      std::array<int, 32> chosen{};
      return count_from(p, q, chosen, 0);
    }
    case ContainmentKind::Tight: {
      std::uint64_t total = 0;
      if (is_increasing(q)) {
        for (int i = 0; i + k <= n; ++i) {
          bool up = true;
          for (int a = 0; a + 1 < k && up; ++a) up = p[i + a] < p[i + a + 1];
          total += up;
        }
        return total;
      }
      for (int i = 0; i + k <= n; ++i)
        total += window_matches(p.subspan(i, k), q);
      return total;
    }
    case ContainmentKind::VeryTight: {
      std::uint64_t total = 0;
      for (int i = 0; i + k <= n; ++i) {
        auto w = p.subspan(i, k);
        total += window_is_interval(w) && window_matches(w, q);
      }
      return total;
    }
  }
  return 0;
}

}  // namespace detail

namespace {

void require_nonempty_pattern(const Permutation& q) {
  if (q.empty())
    throw PreconditionViolated("pattern must have length >= 1");
}

}  // namespace

bool contains(const Permutation& p, const Permutation& q,
              ContainmentKind kind) {
  require_nonempty_pattern(q);
  return detail::contains_raw(p.span(), q.span(), kind);
}

std::uint64_t count_occurrences(const Permutation& p, const Permutation& q,
                                ContainmentKind kind) {
  require_nonempty_pattern(q);
  return detail::count_occurrences_raw(p.span(), q.span(), kind);
}

}  // namespace permpat
