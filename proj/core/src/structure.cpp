#include "permpat/structure.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "permpat/errors.hpp"

namespace permpat {

ClassSignature class_signature(const Permutation& p) {
  return ClassSignature{p.size(), left_to_right_minima(p),
                        right_to_left_maxima(p)};
}

Permutation simion_schmidt(const Permutation& p) {
  static const Permutation q132({1, 3, 2});
  if (p.size() >= 3 && contains(p, q132, ContainmentKind::Classic))
    throw PreconditionViolated("simion_schmidt: input contains 132");

  int n = p.size();
  std::map<int, int> minima;  // position -> value
  for (auto [pos, val] : left_to_right_minima(p)) minima[pos] = val;

  std::vector<int> rest;
  for (int v : p.entries())
    if (!std::any_of(minima.begin(), minima.end(),
                     [v](auto& m) { return m.second == v; }))
      rest.push_back(v);
  std::sort(rest.begin(), rest.end(), std::greater<>());

  std::vector<int> out;
  out.reserve(n);
  auto next = rest.begin();
  for (int i = 1; i <= n; ++i) {
    auto it = minima.find(i);
    out.push_back(it != minima.end() ? it->second : *next++);
  }
  return Permutation(std::move(out));
}

Permutation simion_schmidt_inverse(const Permutation& r) {
  static const Permutation q123({1, 2, 3});
  if (r.size() >= 3 && contains(r, q123, ContainmentKind::Classic))
    throw PreconditionViolated("simion_schmidt_inverse: input contains 123");

  int n = r.size();
  std::map<int, int> minima;
  for (auto [pos, val] : left_to_right_minima(r)) minima[pos] = val;

  std::vector<int> rest;
  for (int v : r.entries())
    if (!std::any_of(minima.begin(), minima.end(),
                     [v](auto& m) { return m.second == v; }))
      rest.push_back(v);
  std::sort(rest.begin(), rest.end());

  std::vector<int> out;
  out.reserve(n);
  int current_min = 0;
  for (int i = 1; i <= n; ++i) {
    auto it = minima.find(i);
    if (it != minima.end()) {
      current_min = it->second;
      out.push_back(current_min);
    } else {
      // Smallest remaining entry larger than the closest minimum on the
      // left; one always exists for a valid 123-avoider.
      auto pick = std::find_if(rest.begin(), rest.end(),
                               [&](int v) { return v > current_min; });
      out.push_back(*pick);
      rest.erase(pick);
    }
  }
  return Permutation(std::move(out));
}

Permutation canonical_1234_avoider(const ClassSignature& sig) {
  int n = sig.n;
  if (n < 0) throw EmptyClass("negative length");
  std::map<int, int> fixed;  // position -> value
  for (const auto& family : {sig.lr_minima, sig.rl_maxima}) {
    for (auto [pos, val] : family) {
      if (pos < 1 || pos > n || val < 1 || val > n)
        throw EmptyClass("signature entry out of range");
      auto [it, inserted] = fixed.emplace(pos, val);
      if (!inserted && it->second != val)
        throw EmptyClass("conflicting values at one position");
    }
  }
  std::vector<bool> value_used(n + 1, false);
  for (auto [pos, val] : fixed) {
    if (value_used[val]) throw EmptyClass("value fixed at two positions");
    value_used[val] = true;
  }

  // Remaining entries go to the free positions in decreasing order.
  std::vector<int> rest;
  for (int v = n; v >= 1; --v)
    if (!value_used[v]) rest.push_back(v);

  std::vector<int> out;
  out.reserve(n);
  auto next = rest.begin();
  for (int i = 1; i <= n; ++i) {
    auto it = fixed.find(i);
    out.push_back(it != fixed.end() ? it->second : *next++);
  }
  Permutation candidate(std::move(out));
  if (class_signature(candidate) != sig)
    throw EmptyClass("no permutation realizes this signature");
  return candidate;
}

namespace {

// Lexicographically smallest 1324 occurrence whose first entry is a
// left-to-right minimum and whose last is a right-to-left maximum; such
// an occurrence exists whenever the permutation contains 1324 at all.
std::optional<std::array<int, 4>> find_anchored_1324(const Permutation& p) {
  int n = p.size();
  std::vector<bool> is_min(n + 1, false), is_max(n + 1, false);
  for (auto [pos, val] : left_to_right_minima(p)) is_min[pos] = true;
  for (auto [pos, val] : right_to_left_maxima(p)) is_max[pos] = true;

  for (int i1 = 1; i1 <= n - 3; ++i1) {
    if (!is_min[i1]) continue;
    for (int i2 = i1 + 1; i2 <= n - 2; ++i2) {
      if (p[i2] <= p[i1]) continue;
      for (int i3 = i2 + 1; i3 <= n - 1; ++i3) {
        if (!(p[i1] < p[i3] && p[i3] < p[i2])) continue;
        for (int i4 = i3 + 1; i4 <= n; ++i4) {
          if (is_max[i4] && p[i4] > p[i2])
            return std::array<int, 4>{i1, i2, i3, i4};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

NormalizeResult normalize_to_1324_avoider(const Permutation& p) {
  NormalizeResult result;
  std::vector<int> entries = p.entries();
  Permutation current = p;
  ClassSignature sig = class_signature(p);
  std::uint64_t inversions = inversion_count(p);

  while (true) {
    auto occurrence = find_anchored_1324(current);
    if (!occurrence) break;
    auto [i1, i2, i3, i4] = *occurrence;
    std::swap(entries[i2 - 1], entries[i3 - 1]);
    current = Permutation(entries);

    std::uint64_t new_inversions = inversion_count(current);
    if (new_inversions >= inversions)
      throw std::logic_error("normalize: inversions did not decrease");
    if (class_signature(current) != sig)
      throw std::logic_error("normalize: signature not preserved");
    inversions = new_inversions;
    result.steps.push_back(
        NormalizeStep{{i1, i2, i3, i4}, current, new_inversions});
  }

  static const Permutation q1324({1, 3, 2, 4});
  if (current.size() >= 4 && contains(current, q1324, ContainmentKind::Classic))
    throw std::logic_error("normalize: fixpoint still contains 1324");
  result.result = std::move(current);
  return result;
}

bool is_rising(const Permutation& q) {
  if (q.size() < 2)
    throw LengthTooSmall("is_rising needs a pattern of length >= 2");
  return q[1] < q[q.size()];
}

bool is_extendible(const Permutation& q) {
  if (!is_rising(q)) throw NotRising("is_extendible needs a rising pattern");
  int k = q.size();
  for (int s = 1; s <= k - 1; ++s) {
    bool smallest_prefix = true, largest_suffix = true;
    for (int i = 1; i <= s && smallest_prefix; ++i)
      smallest_prefix = q[i] <= s;
    for (int i = k - s + 1; i <= k && largest_suffix; ++i)
      largest_suffix = q[i] > k - s;
    if (!smallest_prefix || !largest_suffix) continue;
    bool same_pattern = true;
    for (int a = 1; a <= s && same_pattern; ++a)
      for (int b = a + 1; b <= s && same_pattern; ++b)
        same_pattern = (q[a] < q[b]) == (q[k - s + a] < q[k - s + b]);
    if (same_pattern) return true;
  }
  return false;
}

std::vector<Permutation> extendible_patterns(int k) {
  std::vector<Permutation> out;
  if (k < 2) return out;
  std::vector<int> entries(k);
  for (int i = 0; i < k; ++i) entries[i] = i + 1;
  do {
    if (entries.front() < entries.back()) {
      Permutation q(entries);
      if (is_extendible(q)) out.push_back(std::move(q));
    }
  } while (std::next_permutation(entries.begin(), entries.end()));
  return out;
}

}  // namespace permpat
