#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>

#include "weylbn/errors.hpp"
#include "weylbn/titssys.hpp"

using namespace weylbn;

namespace {

std::vector<std::size_t> cell_sizes(const TitsReport& r) {
  std::vector<std::size_t> v;
  for (const auto& c : r.cells) v.push_back(c.size);
  std::sort(v.begin(), v.end());
  return v;
}

// Double cosets B g B listed element by element.
std::vector<std::size_t> brute_double_cosets(const FiniteGroup& g, const Subgroup& b) {
  std::vector<char> done(g.order(), 0);
  std::vector<std::size_t> sizes;
  for (Elem x = 0; x < g.order(); ++x) {
    if (done[x]) continue;
    std::set<Elem> cell;
    for (Elem u : b.elements())
      for (Elem v : b.elements()) cell.insert(g.mul(g.mul(u, x), v));
    for (Elem y : cell) done[y] = 1;
    sizes.push_back(cell.size());
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

struct EnvGuard {
  explicit EnvGuard(const char* value) { setenv("WEYL_BN_MAX_GROUP", value, 1); }
  ~EnvGuard() { unsetenv("WEYL_BN_MAX_GROUP"); }
};

}  // namespace

TEST_CASE("standard SL3(F2)") {
  const TitsAnalysis a(standard_sl_system(3, 2));
  const TitsReport r = check_axioms(a);
  CHECK(r.pass());
  CHECK(r.weyl_order == 6);
  CHECK(r.rank == 2);
  CHECK(r.h_order == 1);
  CHECK(cell_sizes(r) == std::vector<std::size_t>{8, 16, 16, 32, 32, 64});
  CHECK(cell_sizes(r) == brute_double_cosets(a.G(), a.B()));
  CHECK(cell_size_formula_check(a, 3, 2));
  CHECK(star_property_check(a));
  CHECK(intersection_identity_check(a));
  CHECK(coxeter_order_check(a));
  CHECK(r.cells.front().word == "e");
  CHECK(r.cells.back().word == "1 2 1");
}

TEST_CASE("standard systems against explicit double cosets") {
  for (auto [n, p] : {std::pair{2, 2}, {2, 3}, {2, 5}, {3, 3}}) {
    const TitsAnalysis a(standard_sl_system(n, p));
    const TitsReport r = check_axioms(a);
    CAPTURE(r.label);
    CHECK(r.pass());
    CHECK(cell_sizes(r) == brute_double_cosets(a.G(), a.B()));
    CHECK(cell_size_formula_check(a, n, p));
  }
  CHECK(cell_sizes(check_axioms(standard_sl_system(2, 3))) == std::vector<std::size_t>{6, 18});
}

TEST_CASE("SL3(F3) identities") {
  const TitsAnalysis a(standard_sl_system(3, 3));
  CHECK(a.H().order() == 4);
  CHECK(star_property_check(a));
  CHECK(intersection_identity_check(a));
  const auto f = classify(a);
  CHECK(f.split);
  REQUIRE(f.witness_U);
  CHECK(*f.witness_U == unitriangular_U(a.candidate().G));
}

TEST_CASE("degenerate candidates") {
  const auto g = special_linear_group(3, 2);
  const Subgroup whole = Subgroup::whole(g);
  const TitsReport trivial = check_axioms({"G,G,G", g, whole, whole});
  CHECK(trivial.weyl_order == 1);
  CHECK(trivial.rank == 0);
  CHECK(trivial.t1_generates);

  const Subgroup b = upper_triangular_B(g);
  const TitsReport small = check_axioms({"B,B", g, b, b});
  CHECK_FALSE(small.t1_generates);
  CHECK_FALSE(small.pass());

  // B ∩ N = B is not normal in the simple group G.
  const TitsSystemCandidate bad{"B,G", g, b, whole};
  CHECK_THROWS_AS(derive_weyl(bad), HNotNormal);
  CHECK_FALSE(check_axioms(bad).h_normal_in_n);
}

TEST_CASE("rank one from 2-transitive actions") {
  const auto p2 = projective_space_action(2, 2);
  const TitsAnalysis a(rank1_from_2transitive(p2, 0, 1));
  const TitsReport r = check_axioms(a);
  CHECK(r.pass());
  CHECK(r.weyl_order == 2);
  CHECK(r.rank == 1);
  CHECK(r.b_order == 24);
  CHECK(r.group_order / r.b_order == 7);

  const TitsReport line = check_axioms(sl_projective_system(2, 7));
  CHECK(line.pass());
  CHECK(line.group_order / line.b_order == 8);

  const TitsAnalysis aff(affine_system(5));
  CHECK(check_axioms(aff).pass());
  CHECK(aff.G().order() / aff.B().order() == 5);
  for (Elem x : aff.B().elements()) CHECK(aff.G().encoding(x)[0] == 0);  // B = {(0, x)}
  CHECK(classify(aff).split);

  CHECK_THROWS_AS(rank1_from_2transitive(regular_action(special_linear_group(2, 2)), 0, 1), NotTwoTransitive);
}

TEST_CASE("column construction") {
  for (auto [n, p] : {std::pair{2, 2}, {2, 3}, {3, 2}}) {
    const TitsAnalysis col(sl_rank1_column_system(n, p));
    const TitsReport r = check_axioms(col);
    CHECK(r.pass());
    CHECK(r.rank == 1);
    CHECK(col.N().order() == 2 * col.H().order());
    CHECK(cell_sizes(r) == cell_sizes(check_axioms(sl_projective_system(n, p))));
  }
  CHECK(check_axioms(sl_rank1_column_system(2, 3)).group_order / check_axioms(sl_rank1_column_system(2, 3)).b_order == 4);
}

TEST_CASE("order-21 system in PSL3(F2)") {
  const auto r = psl3f2_nonstandard();
  CHECK(r.candidate.B.order() == 21);
  CHECK(r.points == 8);
  CHECK(r.two_transitive);
  CHECK(check_axioms(r.candidate).pass());
  CHECK(r.flags.split);
  CHECK(r.flags.saturated);
  CHECK(r.flags.fitting_order == 7);
  REQUIRE(r.flags.witness_U);
  CHECK(r.flags.witness_U->order() == 7);
  CHECK(r.standard_parabolic_orders == std::vector<std::size_t>{8, 24, 24});
  CHECK_FALSE(r.matches_standard);
}

TEST_CASE("weakly split agrees with the brute-force search") {
  for (const auto& c : {standard_sl_system(3, 2), sl_rank1_column_system(3, 2), affine_system(7)}) {
    const TitsAnalysis a(c);
    CHECK(classify(a).weakly_split == weakly_split_bruteforce(a));
  }
  CHECK_FALSE(classify(TitsAnalysis(sl_rank1_column_system(3, 2))).weakly_split);
}

TEST_CASE("exhaustive cap from the environment") {
  {
    EnvGuard env("100");
    CHECK(exhaustive_cap() == 100);
    CHECK_THROWS_AS(standard_sl_system(3, 2), GroupTooLarge);
  }
  {
    EnvGuard env("lots");
    CHECK_THROWS_AS(exhaustive_cap(), InvalidSpec);
  }
  CHECK(exhaustive_cap() == 100'000);
}

TEST_CASE("local Coxeter check matches the full analysis") {
  for (auto [n, p] : {std::pair{2, 3}, {3, 2}, {4, 2}}) {
    const TitsAnalysis a(standard_sl_system(n, p));
    const auto local = coxeter_order_check_local(n, p);
    CHECK(local.pass == coxeter_order_check(a));
    CHECK(local.weyl_order == a.weyl_order());
    CHECK(local.s_size == a.S().size());
    CHECK(local.b_order == a.B().order());
    CHECK(local.n_order == a.N().order());
  }
}
