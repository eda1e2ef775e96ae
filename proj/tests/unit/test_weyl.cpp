#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "weylbn/errors.hpp"
#include "weylbn/weyl.hpp"

using namespace weylbn;

namespace {

WeylGroup group(Family f, int n) { return WeylGroup(build_root_system({f, n})); }

int inversions(const std::vector<int>& p) {
  int k = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) k += p[i] > p[j];
  return k;
}

// Reduced words of the longest element of S_n: hook length formula on the
// staircase shape (n-1, ..., 1).
std::uint64_t staircase_count(int n) {
  const int cells = n * (n - 1) / 2;
  long double value = 1;
  for (int k = 2; k <= cells; ++k) value *= k;
  for (int i = 0; i < n - 1; ++i)
    for (int j = 0; j < n - 1 - i; ++j) {
      const int arm = n - 2 - i - j;
      const int leg = n - 2 - j - i;
      value /= arm + leg + 1;
    }
  return static_cast<std::uint64_t>(value + 0.5L);
}

}  // namespace

TEST_CASE("group orders") {
  CHECK(group(Family::A, 3).enumerate(1000).size() == 24);
  CHECK(group(Family::B, 3).enumerate(1000).size() == 48);
  CHECK(group(Family::C, 3).enumerate(1000).size() == 48);
  CHECK(group(Family::D, 4).enumerate(1000).size() == 192);
  CHECK(group(Family::G, 2).enumerate(1000).size() == 12);
  CHECK(group(Family::F, 4).enumerate(2000).size() == 1152);
  CHECK(group(Family::BC, 2).enumerate(1000).size() == 8);
  CHECK_THROWS_AS(group(Family::E, 6).enumerate(1000), GroupTooLarge);
}

TEST_CASE("length equals inversions in type A") {
  const WeylGroup W = group(Family::A, 4);
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> letter(0, 3), len(0, 14);
  for (int trial = 0; trial < 300; ++trial) {
    Word w(static_cast<std::size_t>(len(rng)));
    for (auto& x : w) x = letter(rng);
    std::vector<int> perm(5);
    std::iota(perm.begin(), perm.end(), 0);
    for (Node s : w) std::swap(perm[static_cast<std::size_t>(s)], perm[static_cast<std::size_t>(s) + 1]);
    CHECK(W.element_of(w).length() == inversions(perm));
  }
}

TEST_CASE("length census of A3 is Mahonian") {
  std::vector<std::size_t> census(7, 0);
  std::vector<int> p{0, 1, 2, 3};
  do ++census[static_cast<std::size_t>(inversions(p))];
  while (std::next_permutation(p.begin(), p.end()));
  CHECK(group(Family::A, 3).length_census(100) == census);
}

TEST_CASE("longest element") {
  for (auto [f, n] : {std::pair{Family::A, 4}, {Family::B, 4}, {Family::D, 5}, {Family::E, 6}, {Family::F, 4}}) {
    const WeylGroup W = group(f, n);
    const WeylElement w0 = W.longest_element();
    CHECK(static_cast<std::size_t>(w0.length()) == W.root_system().num_positive());
    CHECK(W.multiply(w0, w0) == W.identity());
    for (Node s = 0; s < n; ++s) CHECK(W.is_left_descent(w0, s));
  }
}

TEST_CASE("reduced words") {
  const WeylGroup A3 = group(Family::A, 3);
  const auto set = A3.reduced_words(A3.element_of(parse_word("2 1 3 2", 3)));
  REQUIRE(set.words.size() == 2);
  CHECK(format_word(set.words[0]) == "2 1 3 2");
  CHECK(format_word(set.words[1]) == "2 3 1 2");
  CHECK(set.braid_connected);
  CHECK(braid_graph_diameter(A3, set.words) == 1);

  const auto empty = A3.reduced_words(A3.element_of(parse_word("", 3)));
  CHECK(empty.words == std::vector<Word>{Word{}});

  for (int n = 2; n <= 5; ++n) {
    const WeylGroup W = group(Family::A, n - 1);
    const auto all = W.reduced_words(W.longest_element());
    CAPTURE(n);
    CHECK(all.words.size() == staircase_count(n));
    CHECK(all.braid_connected);
  }
  CHECK_THROWS_AS(A3.reduced_words(A3.longest_element(), 3), EnumerationCapExceeded);
}

TEST_CASE("reduced word of an element is reduced and evaluates back") {
  const WeylGroup W = group(Family::B, 3);
  for (const auto& x : W.enumerate(100)) {
    const Word w = W.reduced_word(x);
    CHECK(static_cast<int>(w.size()) == x.length());
    CHECK(W.element_of(w) == x);
  }
}

TEST_CASE("weight orbits have binomial size in type A") {
  const WeylGroup W = group(Family::A, 4);
  const std::size_t binom[] = {5, 10, 10, 5};
  for (Node a = 0; a < 4; ++a) {
    std::set<WeightVector> orbit;
    for (const auto& x : W.enumerate(200)) orbit.insert(W.act_on_weight(x, fundamental_weight(4, a)));
    CHECK(orbit.size() == binom[a]);
  }
}

TEST_CASE("word parsing") {
  CHECK(parse_word(" 1  2 3 ", 3) == Word{0, 1, 2});
  CHECK_THROWS_AS(parse_word("1 4", 3), InvalidSpec);
  CHECK_THROWS_AS(parse_word("1,2", 3), InvalidSpec);
  CHECK_THROWS_AS(parse_word("0", 3), InvalidSpec);
  CHECK(format_word({}).empty());
}
