#ifndef PERMPAT_STRUCTURE_HPP
#define PERMPAT_STRUCTURE_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "permpat/permutation.hpp"

namespace permpat {

// Positions and values of the left-to-right minima and right-to-left
// maxima of a permutation. Two permutations with equal signatures are in
// the same class.
struct ClassSignature {
  int n = 0;
  std::vector<std::pair<int, int>> lr_minima;
  std::vector<std::pair<int, int>> rl_maxima;

  friend bool operator==(const ClassSignature&,
                         const ClassSignature&) = default;
  friend auto operator<=>(const ClassSignature&,
                          const ClassSignature&) = default;
};

ClassSignature class_signature(const Permutation& p);

// The Simion-Schmidt map: keep the left-to-right minima fixed and fill
// the remaining positions with the remaining entries in decreasing order.
// Maps 132-avoiders bijectively onto 123-avoiders; throws
// PreconditionViolated when p contains 132.
Permutation simion_schmidt(const Permutation& p);

// Inverse map: each non-minimum slot takes the smallest remaining entry
// larger than the closest left-to-right minimum on its left. Throws
// PreconditionViolated when r contains 123.
Permutation simion_schmidt_inverse(const Permutation& r);

// The unique 1234-avoiding member of the class: entries that are neither
// left-to-right minima nor right-to-left maxima placed in decreasing
// order. Throws EmptyClass when no permutation realizes sig.
Permutation canonical_1234_avoider(const ClassSignature& sig);

struct NormalizeStep {
  std::array<int, 4> occurrence;  // 1-based positions of the 1324 copy
  Permutation after;
  std::uint64_t inversions_after = 0;
};

struct NormalizeResult {
  Permutation result;
  std::vector<NormalizeStep> steps;
};

// Repeatedly pick the lexicographically smallest 1324 occurrence whose
// first entry is a left-to-right minimum and last a right-to-left
// maximum, and swap the occurrence's 2nd and 3rd entries. Each swap
// stays in the class and strictly decreases inversions, so this
// terminates in a 1324-avoiding permutation with the same signature.
NormalizeResult normalize_to_1324_avoider(const Permutation& p);

// q_1 < q_k. Throws LengthTooSmall for patterns shorter than 2.
bool is_rising(const Permutation& q);

// A rising pattern is extendible when for some s in [1, k-1] the
// leftmost s entries are the smallest s values, the rightmost s entries
// are the largest s values, and the two windows form identical patterns.
// Only extendible patterns admit overlapping very tight copies. Throws
// NotRising when q is not rising.
bool is_extendible(const Permutation& q);

// All rising extendible patterns of length k, in lexicographic order.
std::vector<Permutation> extendible_patterns(int k);

}  // namespace permpat

#endif  // PERMPAT_STRUCTURE_HPP
