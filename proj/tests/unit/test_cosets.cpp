#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "weylbn/cosets.hpp"
#include "weylbn/errors.hpp"

using namespace weylbn;

namespace {

using Perm = std::vector<int>;

Perm compose(const Perm& a, const Perm& b) {  // a after b
  Perm c(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) c[i] = a[static_cast<std::size_t>(b[i])];
  return c;
}

// <u> \ D_m / <v> with D_m acting on Z/m; s: i -> -i, t: i -> 1 - i.
std::size_t dihedral_double_cosets(int m, bool left_s, bool right_s) {
  Perm s(static_cast<std::size_t>(m)), t(static_cast<std::size_t>(m)), e(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    s[static_cast<std::size_t>(i)] = (m - i) % m;
    t[static_cast<std::size_t>(i)] = (m + 1 - i) % m;
    e[static_cast<std::size_t>(i)] = i;
  }
  std::set<Perm> group{e};
  for (bool grew = true; grew;) {
    grew = false;
    for (const Perm& x : std::set<Perm>(group))
      for (const Perm& g : {s, t}) grew |= group.insert(compose(x, g)).second;
  }
  REQUIRE(group.size() == static_cast<std::size_t>(2 * m));
  const Perm u = left_s ? s : t, v = right_s ? s : t;
  std::set<std::set<Perm>> cosets;
  for (const Perm& x : group)
    cosets.insert({x, compose(u, x), compose(x, v), compose(u, compose(x, v))});
  return cosets.size();
}

}  // namespace

TEST_CASE("rank-two counts match dihedral groups") {
  // W' = <r_b> for the node b that stays; the same reflection on both sides.
  for (auto [f, m] : {std::pair{Family::A, 3}, {Family::B, 4}, {Family::C, 4}, {Family::G, 6}, {Family::BC, 4}}) {
    for (Node removed = 0; removed < 2; ++removed) {
      const ParabolicChoice choice({f, 2}, removed);
      const bool keep_s = removed == 1;
      CAPTURE(to_string(f));
      CHECK(double_coset_count(choice).count == dihedral_double_cosets(m, keep_s, keep_s));
    }
  }
}

TEST_CASE("frozen small counts") {
  CHECK(double_coset_count(ParabolicChoice({Family::A, 3}, 0)).count == 2);
  CHECK(double_coset_count(ParabolicChoice({Family::A, 3}, 2)).count == 2);
  CHECK(double_coset_count(ParabolicChoice({Family::A, 3}, 1)).count == 3);
  CHECK(double_coset_count(ParabolicChoice({Family::B, 2}, 0)).count == 3);
  CHECK(double_coset_count(ParabolicChoice({Family::G, 2}, 1)).count == 4);
}

TEST_CASE("orbit method agrees with enumeration") {
  for (RootSystemSpec spec : {RootSystemSpec{Family::A, 4}, {Family::B, 3}, {Family::C, 3}, {Family::D, 4},
                              {Family::BC, 3}, {Family::F, 4}}) {
    auto W = std::make_shared<const WeylGroup>(build_root_system(spec));
    const auto naive = double_coset_counts_naive(*W);
    for (Node a = 0; a < spec.rank; ++a) {
      const ParabolicChoice choice(W, spec, a);
      const auto r = double_coset_count(choice);
      CAPTURE(spec.label());
      CAPTURE(a);
      CHECK(r.count == naive[static_cast<std::size_t>(a)]);
      CHECK(r.count == double_coset_count_naive(choice));
      CHECK(std::accumulate(r.orbit_sizes.begin(), r.orbit_sizes.end(), std::size_t{0}) == r.quotient_size);
      CHECK(parabolic_orbit(choice).size() == r.quotient_size);
    }
  }
}

TEST_CASE("quotient size is |W| / |W'|") {
  const RootSystemSpec spec{Family::D, 4};
  auto W = std::make_shared<const WeylGroup>(build_root_system(spec));
  const auto all = W->enumerate(1000);
  for (Node a = 0; a < 4; ++a) {
    std::size_t stabilizer = 0;
    for (const auto& x : all) stabilizer += W->act_on_weight(x, fundamental_weight(4, a)) == fundamental_weight(4, a);
    CHECK(parabolic_orbit(ParabolicChoice(W, spec, a)).size() * stabilizer == all.size());
  }
}

TEST_CASE("E8 counts by node") {
  auto W = std::make_shared<const WeylGroup>(build_root_system({Family::E, 8}));
  const std::size_t quotient[] = {2160, 17280, 69120, 483840, 241920, 60480, 6720, 240};
  for (Node a : {0, 7, 6}) {
    const auto r = double_coset_count(ParabolicChoice(W, {Family::E, 8}, a));
    CHECK(r.quotient_size == quotient[a]);
    CHECK(r.count > 2);
  }
}

TEST_CASE("sweep is deterministic and complete") {
  const auto one = lemma2_sweep(4, {}, 1);
  const auto many = lemma2_sweep(4, {}, 3);
  REQUIRE(one.size() == many.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    CHECK(one[i].spec == many[i].spec);
    CHECK(one[i].node == many[i].node);
    CHECK(one[i].count == many[i].count);
    CHECK(one[i].pass);
  }
  CHECK(lemma2_sweep(2).size() == 10);  // A2, B2, C2, BC2, G2
  CHECK_THROWS_AS(lemma2_types(1), InvalidSpec);
}

TEST_CASE("witness") {
  const auto r = stembridge_witness(ParabolicChoice({Family::A, 3}, 1));
  CHECK(r.i == 1);
  CHECK(r.length == 4);
  CHECK(r.reduced_words.size() == 2);
  CHECK(r.pass());

  const auto d4 = stembridge_witness(ParabolicChoice({Family::D, 4}, 0));
  CHECK(d4.i == 2);
  CHECK(d4.length == 6);
  CHECK(d4.pass());

  CHECK_THROWS_AS(stembridge_witness(ParabolicChoice({Family::A, 3}, 0)), WitnessNotApplicable);
  CHECK_THROWS_AS(stembridge_witness(ParabolicChoice({Family::A, 2}, 1)), WitnessNotApplicable);
}

TEST_CASE("case-one bound and w0 negation") {
  const auto b3 = case1_bound_check(ParabolicChoice({Family::B, 3}, 0));
  CHECK(b3.w0_is_minus_one);
  CHECK(b3.size_psi == 18);
  CHECK(b3.size_psi_prime == 8);
  CHECK(b3.holds);

  CHECK(w0_negation_map(build_root_system({Family::A, 4})) == std::vector<Node>{3, 2, 1, 0});
  CHECK_THROWS_AS(w0_negation_map(build_root_system({Family::B, 2})), InvalidSpec);
}

TEST_CASE("weight sets in type A") {
  const auto r = prop7_weight_sets(3);
  CHECK(r.pass);
  CHECK(r.difference.size() == 3);
  CHECK(r.difference == r.expected);
  CHECK_THROWS_AS(prop7_weight_sets(1), RankTooSmall);
}
