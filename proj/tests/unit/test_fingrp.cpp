#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "weylbn/errors.hpp"
#include "weylbn/fingrp.hpp"

using namespace weylbn;

namespace {

// Number of n x n matrices over F_p with determinant 1, by listing them all.
std::size_t brute_sl_count(int n, int p) {
  const MatrixLaw law(n, p, false);
  Encoding m(static_cast<std::size_t>(n * n), 0);
  std::size_t count = 0;
  for (;;) {
    count += law.determinant(m) == 1;
    std::size_t k = 0;
    while (k < m.size() && m[k] == p - 1) m[k++] = 0;
    if (k == m.size()) return count;
    ++m[k];
  }
}

Subgroup frobenius21() {
  auto g = affine_group(7);
  std::vector<Elem> elems;
  for (Elem x = 0; x < g->order(); ++x) {
    const int mult = g->encoding(x)[1];
    if (mult == 1 || mult == 2 || mult == 4) elems.push_back(x);
  }
  return Subgroup(g, elems);
}

}  // namespace

TEST_CASE("prime field") {
  const PrimeField f(7);
  for (int a = 1; a < 7; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
  CHECK(f.primitive_root() == 3);
  CHECK_THROWS_AS(PrimeField(6), InvalidSpec);
  CHECK_THROWS_AS(f.inv(0), std::domain_error);
}

TEST_CASE("special linear group orders") {
  for (auto [n, p] : {std::pair{2, 2}, {2, 3}, {2, 5}, {3, 2}}) {
    const auto g = special_linear_group(n, p);
    CAPTURE(g->name());
    CHECK(g->order() == brute_sl_count(n, p));
    CHECK(g->order() == sl_order(n, p));
    CHECK(g->verify_axioms(2000).empty());
  }
  CHECK(sl_order(4, 2) == 20160);
  CHECK(sl_order(3, 3) == 5616);
  CHECK_THROWS_AS(special_linear_group(4, 3), GroupTooLarge);
}

TEST_CASE("matrix law") {
  const MatrixLaw law(3, 5, false);
  const Encoding a{1, 2, 3, 0, 1, 4, 2, 0, 1};
  const Encoding b{2, 0, 1, 1, 1, 0, 0, 3, 1};
  CHECK(law.multiply(a, law.invert(a)) == law.identity());
  CHECK(law.determinant(law.multiply(a, b)) == PrimeField(5).mul(law.determinant(a), law.determinant(b)));
  CHECK(law.format(law.identity()) == "100;010;001");
  CHECK_THROWS_AS(law.invert(Encoding(9, 0)), std::domain_error);
}

TEST_CASE("central quotient") {
  const auto g = special_linear_group(2, 3);
  CHECK(center(Subgroup::whole(g)).order() == 2);
  const auto pg = central_quotient(g);
  CHECK(pg->order() == 12);
  CHECK(pg->verify_axioms().empty());
  CHECK(central_quotient(special_linear_group(3, 2))->order() == 168);
}

TEST_CASE("matrix subgroups") {
  const auto g = special_linear_group(3, 3);
  CHECK(upper_triangular_B(g).order() == 108);
  CHECK(unitriangular_U(g).order() == 27);
  CHECK(diagonal_T(g).order() == 4);
  CHECK(monomial_N(g).order() == 24);
  CHECK(is_normal(unitriangular_U(g), upper_triangular_B(g)));
  CHECK_FALSE(is_normal(upper_triangular_B(g)));
}

TEST_CASE("subgroup operations") {
  const auto g = special_linear_group(2, 3);
  const Subgroup b = upper_triangular_B(g);
  const Subgroup n = monomial_N(g);
  CHECK(intersection(b, n).order() == 2);
  CHECK(product_size(b, n) == 12);
  CHECK(join(b, n).order() == 24);
  CHECK(conjugate(b, n.generators().front()).order() == b.order());
  CHECK(normal_subgroups(Subgroup::whole(g)).size() == 4);  // 1, Z, Q8, G
  Elem three = 0;
  while (g->element_order(three) != 3) ++three;
  CHECK_THROWS_AS(Subgroup(g, {0, three}), std::invalid_argument);
}

TEST_CASE("nilpotency and Fitting subgroup") {
  const Subgroup f21 = frobenius21();
  CHECK(f21.order() == 21);
  CHECK_FALSE(is_nilpotent(f21));
  CHECK(fitting_subgroup(f21).order() == 7);
  CHECK(fitting_subgroup_bruteforce(f21) == fitting_subgroup(f21));
  CHECK(normal_subgroups(f21).size() == 3);

  const auto g = special_linear_group(3, 2);
  const Subgroup b = upper_triangular_B(g);  // dihedral of order 8
  const auto series = lower_central_series(b);
  REQUIRE(series.size() == 3);
  CHECK(series[1].order() == 2);
  CHECK(series[2].order() == 1);
  CHECK(is_p_group(b, 2));
  CHECK(p_core(Subgroup::whole(special_linear_group(2, 3)), 2).order() == 8);

  const Subgroup whole = Subgroup::whole(special_linear_group(2, 3));
  CHECK(fitting_subgroup(whole) == fitting_subgroup_bruteforce(whole));
  CHECK_THROWS_AS(fitting_subgroup_bruteforce(Subgroup::whole(special_linear_group(3, 3))), CapExceeded);
}

TEST_CASE("actions") {
  const auto pp = projective_space_action(2, 2);
  CHECK(pp.num_points() == 7);
  CHECK(pp.is_valid_action());
  CHECK(pp.is_2transitive());
  CHECK(pp.stabilizer(0).order() == 24);

  const auto line = projective_space_action(1, 7);
  CHECK(line.num_points() == 8);
  CHECK(line.is_2transitive());

  const auto aff = affine_line_action(affine_group(5));
  CHECK(aff.group().order() == 20);
  CHECK(aff.is_valid_action());
  CHECK(aff.is_2transitive());

  const auto reg = regular_action(special_linear_group(2, 2));
  CHECK(reg.is_transitive());
  CHECK_FALSE(reg.is_2transitive());

  const auto g = special_linear_group(3, 2);
  const auto cosets = coset_action(upper_triangular_B(g));
  CHECK(cosets.num_points() == 21);
  CHECK(cosets.is_valid_action());
  for (std::size_t x = 0; x < cosets.num_points(); ++x) CHECK(cosets.stabilizer(x).order() == 8);
}

TEST_CASE("table csv") {
  std::ostringstream out;
  special_linear_group(2, 2)->write_table_csv(out);
  const std::string text = out.str();
  CHECK(std::count(text.begin(), text.end(), '\n') == 7);
  CHECK(text.rfind("*,10;01,", 0) == 0);
}
