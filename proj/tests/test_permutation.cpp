#include <doctest.h>

#include "oracles.hpp"
#include "qawa/permutation.hpp"

using namespace qawa;

TEST_CASE("compose follows (u v)(i) = u(v(i))") {
  Permutation u({2, 1, 3}), v({1, 3, 2});
  CHECK(compose(u, v) == Permutation({2, 3, 1}));
  Permutation w({3, 1, 2});
  CHECK(compose(w, Permutation::identity(3)) == w);
  CHECK(compose(Permutation::identity(3), w) == w);
  CHECK(compose(Permutation({2, 1}), Permutation({2, 1})) == Permutation::identity(2));
  CHECK_THROWS(compose(Permutation({2, 1}), Permutation({1, 2, 3})));
}

TEST_CASE("length equals inversion count and the BFS word metric") {
  CHECK(length(Permutation::identity(4)) == 0);
  CHECK(length(Permutation({2, 1, 3})) == 1);
  CHECK(length(Permutation({3, 2, 1})) == 3);
  for (int n = 1; n <= 4; ++n) {
    auto dist = oracles::word_lengths_bfs(n);
    for (const auto& [w, d] : dist) CHECK(length(w) == d);
  }
}

TEST_CASE("reduced_word recomposes and has minimal length") {
  CHECK(reduced_word(Permutation::identity(3)).empty());
  CHECK(reduced_word(Permutation({2, 1, 3})) == std::vector<int>{1});
  CHECK(reduced_word(Permutation({3, 2, 1})) == std::vector<int>{1, 2, 1});
  for (int n = 1; n <= 4; ++n)
    for (const auto& w : all_permutations(n)) {
      auto word = reduced_word(w);
      CHECK(static_cast<int>(word.size()) == length(w));
      CHECK(from_word(n, word) == w);
    }
}

TEST_CASE("left descent matches the length drop, exhaustively for n <= 4") {
  CHECK_FALSE(left_descent(1, Permutation::identity(2)));
  CHECK(left_descent(1, Permutation({2, 1})));
  // w = [3,1,2]: l(w) = 2 and l(s_2 w) = l([2,1,3]) = 1, so index 2 descends
  CHECK(left_descent(2, Permutation({3, 1, 2})));
  for (int n = 2; n <= 4; ++n)
    for (const auto& w : all_permutations(n))
      for (int i = 1; i < n; ++i) {
        bool drop = length(compose(Permutation::simple(n, i), w)) < length(w);
        CHECK(left_descent(i, w) == drop);
      }
  CHECK_THROWS(left_descent(0, Permutation({2, 1})));
  CHECK_THROWS(left_descent(2, Permutation({2, 1})));
}

TEST_CASE("length changes by exactly one under a simple reflection") {
  for (int n = 2; n <= 4; ++n)
    for (const auto& w : all_permutations(n))
      for (int i = 1; i < n; ++i) {
        int diff = length(compose(w, Permutation::simple(n, i))) - length(w);
        CHECK((diff == 1 || diff == -1));
      }
}

TEST_CASE("act_positions places lam[i] at w(i) and is an action") {
  CHECK(act_positions(Permutation({2, 1}), {1, 0}) == std::vector<int>{0, 1});
  std::vector<int> lam{5, 0, -1};
  CHECK(act_positions(Permutation::identity(3), lam) == lam);
  CHECK(act_positions(Permutation({2, 3, 1}), lam) == std::vector<int>{-1, 5, 0});
  for (const auto& u : all_permutations(3))
    for (const auto& v : all_permutations(3))
      CHECK(act_positions(compose(u, v), lam) == act_positions(u, act_positions(v, lam)));
  CHECK_THROWS(act_positions(Permutation({2, 1}), lam));
}

TEST_CASE("permutation validation") {
  CHECK_THROWS(Permutation({1, 1}));
  CHECK_THROWS(Permutation({0, 1}));
  CHECK_THROWS(Permutation({2, 3}));
}
