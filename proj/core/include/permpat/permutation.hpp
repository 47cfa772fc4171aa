#ifndef PERMPAT_PERMUTATION_HPP
#define PERMPAT_PERMUTATION_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace permpat {

// The three notions of pattern containment. Classic looks at arbitrary
// index subsequences, Tight at windows of consecutive positions, and
// VeryTight additionally requires the window's values to form an integer
// interval.
enum class ContainmentKind { Classic, Tight, VeryTight };

const char* to_string(ContainmentKind kind);
ContainmentKind containment_kind_from_string(const std::string& text);

enum class Symmetry { Reverse, Complement };

// A permutation of {1,...,n} in one-line notation. Positions and values
// are both 1-based. The empty permutation (n = 0) is valid.
class Permutation {
public:
  Permutation() = default;
  // Validates that `entries` is a bijection on {1..n}; throws
  // std::invalid_argument otherwise.
  explicit Permutation(std::vector<int> entries);

  static Permutation identity(int n);
  // Accepts "3 1 7 4 6 2 5", "3,1,7,4,6,2,5", and for n <= 9 the compact
  // digit string "3174625".
  static Permutation parse(const std::string& text);

  int size() const { return static_cast<int>(entries_.size()); }
  bool empty() const { return entries_.empty(); }
  // Value at 1-based position.
  int operator[](int position) const { return entries_[position - 1]; }
  const std::vector<int>& entries() const { return entries_; }
  std::span<const int> span() const { return entries_; }

  Permutation reversed() const;
  Permutation complemented() const;
  bool is_increasing() const;
  bool is_decreasing() const;

  std::string to_string() const;  // space-separated one-line notation

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a,
                                          const Permutation& b) {
    return a.entries_ <=> b.entries_;
  }

private:
  std::vector<int> entries_;
};

std::ostream& operator<<(std::ostream& os, const Permutation& p);

// The increasing pattern 12...k.
Permutation monotone_pattern(int k);

Permutation apply_symmetry(const Permutation& p, Symmetry which);

// True iff p contains q under the given notion. Throws
// PreconditionViolated for an empty pattern; a pattern longer than p is
// simply not contained.
bool contains(const Permutation& p, const Permutation& q,
              ContainmentKind kind);

// Exact number of occurrences of q in p (index subsequences for Classic,
// windows for Tight, windows with interval values for VeryTight).
std::uint64_t count_occurrences(const Permutation& p, const Permutation& q,
                                ContainmentKind kind);

// Entries smaller than everything to their left, as (position, value)
// pairs in position order. The first entry always qualifies.
std::vector<std::pair<int, int>> left_to_right_minima(const Permutation& p);

// Entries larger than everything to their right, in position order.
std::vector<std::pair<int, int>> right_to_left_maxima(const Permutation& p);

// Number of pairs i < j with p_i > p_j.
std::uint64_t inversion_count(const Permutation& p);

// Rank of each entry: the length of the longest increasing subsequence
// ending at that entry. The maximum rank is the LIS length of p.
std::vector<int> entry_ranks(const Permutation& p);

namespace detail {

// Raw-buffer variants used by the enumeration loops; `p` need not be
// validated but must be a permutation of {1..n}.
bool contains_raw(std::span<const int> p, std::span<const int> q,
                  ContainmentKind kind);
std::uint64_t count_occurrences_raw(std::span<const int> p,
                                    std::span<const int> q,
                                    ContainmentKind kind);
// Number of increasing subsequences of length exactly k (Fenwick-tree DP).
std::uint64_t count_increasing_subsequences(std::span<const int> p, int k);
// Order-isomorphism of a window against a pattern, O(k^2).
bool window_matches(std::span<const int> window, std::span<const int> q);

}  // namespace detail

}  // namespace permpat

#endif  // PERMPAT_PERMUTATION_HPP
