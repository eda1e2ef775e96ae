#include <doctest.h>

#include <algorithm>
#include <array>
#include <set>

#include "weylbn/errors.hpp"
#include "weylbn/rootsys.hpp"

using namespace weylbn;

namespace {

std::set<IntVector> root_set(const RootSystem& rs) { return {rs.roots().begin(), rs.roots().end()}; }

// Classical roots written down directly from the standard description.
std::set<IntVector> classical_roots(Family f, int n) {
  std::set<IntVector> out;
  const int dim = f == Family::A ? n + 1 : n;
  auto unit = [&](int i, int sign) {
    IntVector v(static_cast<std::size_t>(dim), 0);
    v[static_cast<std::size_t>(i)] = sign;
    return v;
  };
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      if (i == j) continue;
      IntVector d = unit(i, 1);
      d[static_cast<std::size_t>(j)] = -1;
      out.insert(d);  // e_i - e_j
      if (f != Family::A && i < j)
        for (int s : {1, -1}) {
          IntVector v = unit(i, s);
          v[static_cast<std::size_t>(j)] = s;
          out.insert(v);  // ±(e_i + e_j)
        }
    }
  for (int i = 0; i < dim && f != Family::A && f != Family::D; ++i)
    for (int s : {1, -1}) {
      if (f == Family::B || f == Family::BC) out.insert(unit(i, s));
      if (f == Family::C || f == Family::BC) out.insert(unit(i, 2 * s));
    }
  return out;
}

}  // namespace

TEST_CASE("classical root sets match the direct description") {
  for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::BC})
    for (int n = 1; n <= 6; ++n) {
      const RootSystemSpec spec{f, n};
      if (!spec.admissible()) continue;
      CAPTURE(spec.label());
      CHECK(root_set(build_root_system(spec)) == classical_roots(f, n));
    }
}

TEST_CASE("E8 agrees with a lattice scan") {
  // Doubled coordinates: entries of one parity, squared norm 8, sum divisible by 4.
  std::set<IntVector> scan;
  std::array<int, 8> v{};
  for (long code = 0; code < 390'625; ++code) {
    long c = code;
    for (auto& x : v) {
      x = static_cast<int>(c % 5) - 2;
      c /= 5;
    }
    int norm = 0, sum = 0;
    bool even = true, odd = true;
    for (int x : v) {
      norm += x * x;
      sum += x;
      even = even && x % 2 == 0;
      odd = odd && x % 2 != 0;
    }
    if (norm == 8 && (even || odd) && sum % 4 == 0) scan.insert(IntVector(v.begin(), v.end()));
  }
  CHECK(scan.size() == 240);
  const RootSystem e8 = build_root_system({Family::E, 8});
  CHECK(e8.scale() == 2);
  CHECK(root_set(e8) == scan);
}

TEST_CASE("root counts") {
  const std::array<std::pair<RootSystemSpec, std::size_t>, 7> table{{{{Family::E, 6}, 72},
                                                                     {{Family::E, 7}, 126},
                                                                     {{Family::E, 8}, 240},
                                                                     {{Family::F, 4}, 48},
                                                                     {{Family::G, 2}, 12},
                                                                     {{Family::BC, 2}, 12},
                                                                     {{Family::D, 3}, 12}}};
  for (const auto& [spec, n] : table) {
    const RootSystem rs = build_root_system(spec);
    CAPTURE(spec.label());
    CHECK(rs.size() == n);
    CHECK(rs.num_positive() * 2 == n);
  }
}

TEST_CASE("every system is closed under its reflections and passes its own checks") {
  for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G, Family::BC})
    for (int n = 1; n <= 8; ++n) {
      const RootSystemSpec spec{f, n};
      if (!spec.admissible()) continue;
      const RootSystem rs = build_root_system(spec);
      CAPTURE(spec.label());
      CHECK(rs.check_invariants().empty());
      if (rs.size() > 130) continue;
      for (std::size_t a = 0; a < rs.size(); ++a)
        for (std::size_t b = 0; b < rs.size(); ++b) REQUIRE(rs.find(reflect(rs, a, rs.root(b))).has_value());
    }
}

TEST_CASE("Cartan matrix from simple-root inner products") {
  for (RootSystemSpec spec : {RootSystemSpec{Family::B, 3}, {Family::C, 3}, {Family::G, 2}, {Family::F, 4}, {Family::E, 6}}) {
    const RootSystem rs = build_root_system(spec);
    for (Node i = 0; i < rs.rank(); ++i)
      for (Node j = 0; j < rs.rank(); ++j) {
        const auto& ai = rs.root(rs.simple_root(i));
        const auto& aj = rs.root(rs.simple_root(j));
        CHECK(rs.cartan()[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] == 2 * dot(ai, aj) / dot(aj, aj));
      }
    CHECK(coxeter_matrix(rs) == coxeter_matrix_from_cartan(rs.cartan()));
  }
}

TEST_CASE("Coxeter entries of rank-two types") {
  CHECK(coxeter_matrix(build_root_system({Family::A, 2}))[0][1] == 3);
  CHECK(coxeter_matrix(build_root_system({Family::B, 2}))[0][1] == 4);
  CHECK(coxeter_matrix(build_root_system({Family::G, 2}))[0][1] == 6);
  CHECK_THROWS_AS(coxeter_matrix(build_root_system({Family::BC, 2})), NotReduced);
}

TEST_CASE("BC core is B") {
  const RootSystem bc = build_root_system({Family::BC, 3});
  CHECK_FALSE(bc.is_reduced());
  const RootSystem core = nondivisible_core(bc);
  CHECK(core.spec() == RootSystemSpec{Family::B, 3});
  CHECK(root_set(core) == classical_roots(Family::B, 3));
  CHECK_THROWS_AS(nondivisible_core(build_root_system({Family::B, 3})), NotNonReduced);
}

TEST_CASE("diagram helpers") {
  const RootSystem d5 = build_root_system({Family::D, 5});
  REQUIRE(branch_node(d5).has_value());
  CHECK(*branch_node(d5) == 2);
  CHECK(is_end_node(d5, 0));
  CHECK_FALSE(is_end_node(d5, 2));
  CHECK(dynkin_path(d5, 0, 2) == std::vector<Node>{0, 1, 2});
  CHECK(is_type_a_diagram(build_root_system({Family::A, 4})));
  CHECK(is_type_a_diagram(build_root_system({Family::D, 3})));
  CHECK_FALSE(is_type_a_diagram(build_root_system({Family::B, 3})));
  CHECK(*branch_node(build_root_system({Family::E, 6})) == 3);
}

TEST_CASE("spec parsing and validation") {
  CHECK(parse_family("bc") == Family::BC);
  CHECK(parse_family("E") == Family::E);
  CHECK_THROWS_AS(parse_family("H"), InvalidSpec);
  CHECK_THROWS_AS(RootSystemSpec({Family::E, 9}).validate(), InvalidSpec);
  CHECK_THROWS_AS(RootSystemSpec({Family::D, 2}).validate(), InvalidSpec);
  CHECK_THROWS_AS(RootSystemSpec({Family::A, 0}).validate(), InvalidSpec);
  CHECK(RootSystemSpec{Family::BC, 2}.label() == "BC2");
}
