#include <doctest.h>

#include <map>
#include <set>

#include "permpat/errors.hpp"
#include "permpat/structure.hpp"
#include "support/oracles.hpp"

using namespace permpat;

namespace {

std::vector<Permutation> permutations_of(int n) {
  std::vector<Permutation> out;
  oracles::for_each_permutation(
      n, [&](const std::vector<int>& e) { out.emplace_back(e); });
  return out;
}

}  // namespace

TEST_SUITE("structure") {

TEST_CASE("simion-schmidt on the worked example") {
  CHECK(simion_schmidt(Permutation::parse("34125")) ==
        Permutation::parse("35142"));
  CHECK(simion_schmidt_inverse(Permutation::parse("35142")) ==
        Permutation::parse("34125"));
  Permutation decreasing = Permutation::parse("54321");
  CHECK(simion_schmidt(decreasing) == decreasing);
  CHECK(simion_schmidt_inverse(decreasing) == decreasing);
}

TEST_CASE("simion-schmidt rejects inputs outside its domain") {
  CHECK_THROWS_AS(simion_schmidt(Permutation::parse("132")),
                  PreconditionViolated);
  CHECK_THROWS_AS(simion_schmidt_inverse(Permutation::parse("123")),
                  PreconditionViolated);
}

TEST_CASE("simion-schmidt is a bijection onto the 123-avoiders") {
  Permutation q123 = Permutation::parse("123");
  Permutation q132 = Permutation::parse("132");
  for (int n = 1; n <= 7; ++n) {
    std::set<Permutation> image, avoiders123;
    for (const Permutation& p : permutations_of(n)) {
      if (!contains(p, q123, ContainmentKind::Classic)) avoiders123.insert(p);
      if (!contains(p, q132, ContainmentKind::Classic)) {
        Permutation f = simion_schmidt(p);
        // left-to-right minima stay fixed, positions and values
        CHECK(left_to_right_minima(f) == left_to_right_minima(p));
        CHECK_FALSE(contains(f, q123, ContainmentKind::Classic));
        CHECK(simion_schmidt_inverse(f) == p);
        image.insert(f);
      }
    }
    CHECK(image == avoiders123);
  }
}

TEST_CASE("class signatures") {
  CHECK(class_signature(Permutation::parse("51234")) ==
        class_signature(Permutation::parse("51324")));
  CHECK(class_signature(Permutation::parse("24315")) !=
        class_signature(Permutation::parse("24135")));
  ClassSignature identity_sig = class_signature(Permutation::identity(6));
  CHECK(identity_sig.lr_minima ==
        std::vector<std::pair<int, int>>{{1, 1}});
  CHECK(identity_sig.rl_maxima ==
        std::vector<std::pair<int, int>>{{6, 6}});
}

TEST_CASE("canonical 1234-avoider of the 3*1*7*5 class") {
  // 3612745 is one member of the class fixed as 3,*,1,*,7,*,5.
  ClassSignature sig = class_signature(Permutation::parse("3612745"));
  Permutation canonical = canonical_1234_avoider(sig);
  CHECK(canonical == Permutation::parse("3614725"));
  CHECK_FALSE(contains(canonical, Permutation::parse("1234"),
                       ContainmentKind::Classic));
  CHECK(class_signature(canonical) == sig);
}

TEST_CASE("canonical avoider of a decreasing permutation is itself") {
  Permutation decreasing = Permutation::parse("654321");
  CHECK(canonical_1234_avoider(class_signature(decreasing)) == decreasing);
}

TEST_CASE("unrealizable signatures raise EmptyClass") {
  ClassSignature bad;
  bad.n = 2;
  bad.lr_minima = {{1, 1}};
  bad.rl_maxima = {{1, 1}};
  CHECK_THROWS_AS(canonical_1234_avoider(bad), EmptyClass);
  ClassSignature conflict;
  conflict.n = 3;
  conflict.lr_minima = {{1, 2}};
  conflict.rl_maxima = {{1, 3}};
  CHECK_THROWS_AS(canonical_1234_avoider(conflict), EmptyClass);
}

TEST_CASE("every nonempty class has exactly one 1234-avoider") {
  Permutation q1234 = Permutation::parse("1234");
  for (int n = 1; n <= 6; ++n) {
    std::map<ClassSignature, std::vector<Permutation>> classes;
    for (const Permutation& p : permutations_of(n))
      classes[class_signature(p)].push_back(p);
    for (const auto& [sig, members] : classes) {
      std::vector<Permutation> avoiders;
      for (const Permutation& p : members)
        if (!contains(p, q1234, ContainmentKind::Classic))
          avoiders.push_back(p);
      REQUIRE(avoiders.size() == 1);
      CHECK(canonical_1234_avoider(sig) == avoiders.front());
    }
  }
}

TEST_CASE("normalization fixes 1324 into 1234 in one swap") {
  NormalizeResult r = normalize_to_1324_avoider(Permutation::parse("1324"));
  CHECK(r.result == Permutation::parse("1234"));
  CHECK(r.steps.size() == 1);
  CHECK(r.steps[0].occurrence == std::array<int, 4>{1, 2, 3, 4});
}

TEST_CASE("normalization is the identity on 1324-avoiders") {
  Permutation p = Permutation::parse("3612745");
  NormalizeResult r = normalize_to_1324_avoider(p);
  CHECK(r.result == p);
  CHECK(r.steps.empty());
}

TEST_CASE("normalization: avoiding output, same class, fewer inversions") {
  Permutation q1324 = Permutation::parse("1324");
  for (int n = 1; n <= 6; ++n) {
    for (const Permutation& p : permutations_of(n)) {
      NormalizeResult r = normalize_to_1324_avoider(p);
      CHECK_FALSE(contains(r.result, q1324, ContainmentKind::Classic));
      CHECK(class_signature(r.result) == class_signature(p));
      std::uint64_t previous = inversion_count(p);
      CHECK(r.steps.size() <= previous);
      for (const NormalizeStep& step : r.steps) {
        CHECK(step.inversions_after < previous);
        previous = step.inversions_after;
      }
      if (!r.steps.empty()) CHECK(r.steps.back().after == r.result);
    }
  }
}

TEST_CASE("rising patterns") {
  CHECK(is_rising(Permutation::parse("2143")));
  CHECK_FALSE(is_rising(Permutation::parse("321")));
  CHECK_THROWS_AS(is_rising(Permutation::parse("1")), LengthTooSmall);
  for (int k = 2; k <= 6; ++k) {
    int rising = 0, total = 0;
    oracles::for_each_permutation(k, [&](const std::vector<int>& q) {
      ++total;
      rising += q.front() < q.back();
    });
    CHECK(rising * 2 == total);
  }
}

TEST_CASE("extendible patterns of length four") {
  std::vector<Permutation> ext = extendible_patterns(4);
  REQUIRE(ext.size() == 3);
  CHECK(ext[0] == Permutation::parse("1234"));
  CHECK(ext[1] == Permutation::parse("1324"));
  CHECK(ext[2] == Permutation::parse("2143"));
  CHECK_THROWS_AS(is_extendible(Permutation::parse("321")), NotRising);
}

TEST_CASE("monotone patterns are extendible, fractions shrink") {
  // extendible counts among rising patterns, frozen from an independent
  // exhaustive classification: 1/3, 3/12, 7/60, 31/360, 131/2520
  const std::map<int, std::size_t> expected = {
      {3, 1}, {4, 3}, {5, 7}, {6, 31}, {7, 131}};
  double previous_fraction = 1.0;
  for (int k = 3; k <= 7; ++k) {
    CHECK(is_extendible(Permutation::identity(k)));
    std::vector<Permutation> ext = extendible_patterns(k);
    CHECK(ext.size() == expected.at(k));
    double rising_count = big_factorial(k).convert_to<double>() / 2;
    double fraction = static_cast<double>(ext.size()) / rising_count;
    CHECK(fraction < previous_fraction);
    previous_fraction = fraction;
  }
  CHECK(is_extendible(Permutation::parse("12")));
}

TEST_CASE("non-extendible patterns never overlap very tightly") {
  // For every rising non-extendible q of length 3..5 and every p of
  // length <= 9, very tight occurrences of q are pairwise disjoint.
  // Windows are bucketed per pattern so each p is enumerated once.
  struct PatternInfo {
    std::vector<int> entries;
    bool nonextendible_rising;
  };
  std::map<int, std::vector<PatternInfo>> by_length;
  std::map<int, std::map<std::vector<int>, int>> index_of;
  for (int k = 3; k <= 5; ++k) {
    oracles::for_each_permutation(k, [&](const std::vector<int>& q) {
      Permutation perm(q);
      bool interesting = q.front() < q.back() && !is_extendible(perm);
      index_of[k][q] = static_cast<int>(by_length[k].size());
      by_length[k].push_back({q, interesting});
    });
  }

  for (int n = 3; n <= 9; ++n) {
    std::map<int, std::vector<std::vector<int>>> hits;  // k -> per-pattern
    for (int k = 3; k <= 5 && k <= n; ++k)
      hits[k].assign(by_length[k].size(), {});
    oracles::for_each_permutation(n, [&](const std::vector<int>& p) {
      for (int k = 3; k <= 5 && k <= n; ++k) {
        auto& pattern_hits = hits[k];
        for (auto& h : pattern_hits) h.clear();
        for (int i = 0; i + k <= n; ++i) {
          std::vector<int> window(p.begin() + i, p.begin() + i + k);
          auto [lo, hi] = std::minmax_element(window.begin(), window.end());
          if (*hi - *lo != k - 1) continue;
          std::vector<int> pat = oracles::pattern_of(window);
          pattern_hits[index_of[k][pat]].push_back(i);
        }
        for (std::size_t idx = 0; idx < pattern_hits.size(); ++idx) {
          if (!by_length[k][idx].nonextendible_rising) continue;
          const std::vector<int>& starts = pattern_hits[idx];
          for (std::size_t a = 0; a + 1 < starts.size(); ++a)
            CHECK(starts[a + 1] - starts[a] >= k);
        }
      }
    });
  }
}

}  // TEST_SUITE
