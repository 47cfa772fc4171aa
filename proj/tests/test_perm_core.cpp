#include <doctest.h>

#include <random>
#include <set>

#include "permpat/errors.hpp"
#include "permpat/permutation.hpp"
#include "support/oracles.hpp"

using namespace permpat;

TEST_SUITE("perm-core") {

TEST_CASE("parsing accepts all three notations") {
  Permutation p = Permutation::parse("3 1 7 4 6 2 5");
  CHECK(p == Permutation::parse("3,1,7,4,6,2,5"));
  CHECK(p == Permutation::parse("3174625"));
  CHECK(p.to_string() == "3 1 7 4 6 2 5");
  CHECK(p.size() == 7);
  CHECK(p[1] == 3);
  CHECK(p[7] == 5);
  CHECK(Permutation::parse("").empty());
  CHECK(Permutation::parse("1") == Permutation::identity(1));
}

TEST_CASE("invalid entries are rejected") {
  CHECK_THROWS_AS(Permutation({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::parse("10"), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::parse("1 2 x"), std::invalid_argument);
}

TEST_CASE("containment examples") {
  CHECK(contains(Permutation::parse("3174625"), Permutation::parse("123"),
                 ContainmentKind::Classic));
  CHECK(contains(Permutation::parse("246351"), Permutation::parse("132"),
                 ContainmentKind::Classic));
  CHECK_FALSE(contains(Permutation::parse("246351"),
                       Permutation::parse("132"), ContainmentKind::Tight));
  Permutation p = Permutation::parse("15324");
  CHECK(contains(p, Permutation::parse("213"), ContainmentKind::VeryTight));
  CHECK(contains(p, Permutation::parse("132"), ContainmentKind::Tight));
  CHECK_FALSE(contains(p, Permutation::parse("132"),
                       ContainmentKind::VeryTight));
}

TEST_CASE("every permutation contains itself under every kind") {
  for (int n = 1; n <= 6; ++n) {
    oracles::for_each_permutation(n, [&](const std::vector<int>& e) {
      Permutation p(e);
      for (ContainmentKind kind :
           {ContainmentKind::Classic, ContainmentKind::Tight,
            ContainmentKind::VeryTight})
        CHECK(contains(p, p, kind));
    });
  }
}

TEST_CASE("empty pattern is rejected, long pattern is not contained") {
  Permutation p = Permutation::parse("123");
  CHECK_THROWS_AS(contains(p, Permutation(), ContainmentKind::Classic),
                  PreconditionViolated);
  CHECK_FALSE(contains(p, Permutation::parse("1234"),
                       ContainmentKind::Classic));
  CHECK(count_occurrences(p, Permutation::parse("1234"),
                          ContainmentKind::Tight) == 0);
}

TEST_CASE("count_occurrences examples") {
  CHECK(count_occurrences(Permutation::parse("1234"),
                          Permutation::parse("12"),
                          ContainmentKind::Classic) == 6);
  CHECK(count_occurrences(Permutation::parse("214365"),
                          Permutation::parse("2143"),
                          ContainmentKind::VeryTight) == 2);
  CHECK(count_occurrences(Permutation::parse("321"),
                          Permutation::parse("12"),
                          ContainmentKind::Classic) == 0);
}

TEST_CASE("counts agree with the exhaustive subsequence scan") {
  std::mt19937 rng(20240811);
  const std::vector<std::vector<int>> patterns = {
      {1, 2}, {2, 1}, {1, 2, 3}, {1, 3, 2}, {2, 1, 3},
      {1, 2, 3, 4}, {2, 1, 4, 3}, {1, 3, 4, 2}};
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + static_cast<int>(rng() % 8);
    std::vector<int> e(n);
    std::iota(e.begin(), e.end(), 1);
    std::shuffle(e.begin(), e.end(), rng);
    Permutation p(e);
    for (const auto& qe : patterns) {
      Permutation q(qe);
      for (ContainmentKind kind :
           {ContainmentKind::Classic, ContainmentKind::Tight,
            ContainmentKind::VeryTight}) {
        CAPTURE(p.to_string());
        CAPTURE(q.to_string());
        CHECK(count_occurrences(p, q, kind) == oracles::naive_count(e, qe,
                                                                    kind));
        CHECK(contains(p, q, kind) == oracles::naive_contains(e, qe, kind));
      }
    }
  }
}

TEST_CASE("symmetries") {
  CHECK(apply_symmetry(Permutation::parse("34125"), Symmetry::Reverse) ==
        Permutation::parse("52143"));
  CHECK(apply_symmetry(Permutation::parse("34125"), Symmetry::Complement) ==
        Permutation::parse("32541"));
}

TEST_CASE("classic containment is symmetry-equivariant (exhaustive)") {
  std::vector<Permutation> patterns;
  oracles::for_each_permutation(
      3, [&](const std::vector<int>& q) { patterns.emplace_back(q); });
  for (int n = 1; n <= 7; ++n) {
    oracles::for_each_permutation(n, [&](const std::vector<int>& e) {
      Permutation p(e);
      Permutation pr = p.reversed(), pc = p.complemented();
      for (const Permutation& q : patterns) {
        bool direct = contains(p, q, ContainmentKind::Classic);
        CHECK(direct == contains(pr, q.reversed(), ContainmentKind::Classic));
        CHECK(direct ==
              contains(pc, q.complemented(), ContainmentKind::Classic));
      }
    });
  }
}

TEST_CASE("tight and very tight containment imply classic (exhaustive)") {
  std::vector<Permutation> patterns;
  for (int k = 2; k <= 4; ++k)
    oracles::for_each_permutation(
        k, [&](const std::vector<int>& q) { patterns.emplace_back(q); });
  for (int n = 1; n <= 7; ++n) {
    oracles::for_each_permutation(n, [&](const std::vector<int>& e) {
      Permutation p(e);
      for (const Permutation& q : patterns) {
        if (contains(p, q, ContainmentKind::VeryTight))
          CHECK(contains(p, q, ContainmentKind::Tight));
        if (contains(p, q, ContainmentKind::Tight))
          CHECK(contains(p, q, ContainmentKind::Classic));
      }
    });
  }
}

TEST_CASE("left-to-right minima") {
  auto minima = left_to_right_minima(Permutation::parse("4537612"));
  CHECK(minima == std::vector<std::pair<int, int>>{{1, 4}, {3, 3}, {6, 1}});
  CHECK(left_to_right_minima(Permutation::identity(5)) ==
        std::vector<std::pair<int, int>>{{1, 1}});
  auto all = left_to_right_minima(Permutation::parse("54321"));
  CHECK(all.size() == 5);
}

TEST_CASE("right-to-left maxima") {
  auto maxima = right_to_left_maxima(Permutation::parse("3612745"));
  CHECK(maxima == std::vector<std::pair<int, int>>{{5, 7}, {7, 5}});
  CHECK(right_to_left_maxima(Permutation::identity(6)) ==
        std::vector<std::pair<int, int>>{{6, 6}});
  CHECK(right_to_left_maxima(Permutation::parse("4321")).size() == 4);
}

TEST_CASE("inversion count") {
  CHECK(inversion_count(Permutation::parse("321")) == 3);
  CHECK(inversion_count(Permutation::identity(7)) == 0);
  CHECK(inversion_count(Permutation::parse("21")) == 1);
}

TEST_CASE("entry ranks match the exhaustive search") {
  CHECK(entry_ranks(Permutation::identity(5)) ==
        std::vector<int>{1, 2, 3, 4, 5});
  CHECK(entry_ranks(Permutation::parse("54321")) ==
        std::vector<int>{1, 1, 1, 1, 1});
  CHECK(entry_ranks(Permutation::parse("3174625")) ==
        std::vector<int>{1, 1, 2, 2, 3, 2, 3});
  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 1 + static_cast<int>(rng() % 9);
    std::vector<int> e(n);
    std::iota(e.begin(), e.end(), 1);
    std::shuffle(e.begin(), e.end(), rng);
    CHECK(entry_ranks(Permutation(e)) == oracles::ranks_by_exhaustion(e));
  }
}

TEST_CASE("rank structure: equal ranks decrease, max rank is the LIS") {
  for (int n = 1; n <= 7; ++n) {
    oracles::for_each_permutation(n, [&](const std::vector<int>& e) {
      Permutation p(e);
      std::vector<int> ranks = entry_ranks(p);
      int max_rank = *std::max_element(ranks.begin(), ranks.end());
      // entries of one rank must appear in decreasing order
      for (int r = 1; r <= max_rank; ++r) {
        int prev = n + 1;
        for (int i = 0; i < n; ++i) {
          if (ranks[i] == r) {
            CHECK(e[i] < prev);
            prev = e[i];
          }
        }
      }
      // avoiding 12...k is the same as max rank <= k-1
      for (int k = 2; k <= 4; ++k) {
        bool avoids = !contains(p, Permutation::identity(k),
                                ContainmentKind::Classic);
        CHECK(avoids == (max_rank <= k - 1));
      }
    });
  }
}

TEST_CASE("very tight copies of 12 are successions") {
  std::mt19937 rng(99);
  Permutation q12 = Permutation::parse("12");
  for (int trial = 0; trial < 100; ++trial) {
    int n = 2 + static_cast<int>(rng() % 9);
    std::vector<int> e(n);
    std::iota(e.begin(), e.end(), 1);
    std::shuffle(e.begin(), e.end(), rng);
    std::uint64_t successions = 0;
    for (int i = 0; i + 1 < n; ++i) successions += e[i] + 1 == e[i + 1];
    CHECK(count_occurrences(Permutation(e), q12,
                            ContainmentKind::VeryTight) == successions);
  }
}

}  // TEST_SUITE
