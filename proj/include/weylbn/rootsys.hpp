#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace weylbn {

enum class Family { A, B, C, D, E, F, G, BC };

std::string_view to_string(Family f);
// Accepts "A".."G" and "BC", case-insensitive. Throws InvalidSpec.
Family parse_family(std::string_view text);

struct RootSystemSpec {
  Family family = Family::A;
  int rank = 1;

  bool admissible() const noexcept;
  // Throws InvalidSpec when (family, rank) names no irreducible root system.
  void validate() const;
  std::string label() const;  // "A3", "BC2", "E8"

  auto operator<=>(const RootSystemSpec&) const = default;
};

using IntVector = std::vector<std::int64_t>;
using IntMatrix = std::vector<std::vector<int>>;

std::int64_t dot(std::span<const std::int64_t> x, std::span<const std::int64_t> y);

// Diagram nodes (simple roots) are 0-based in the API and follow Bourbaki's
// numbering; text interfaces print them 1-based. See docs/numbering.md.
using Node = int;

// Immutable irreducible root system with integer coordinates.
//
// Roots are stored sorted lexicographically. For types whose standard
// coordinates involve halves (E6, E7, E8, F4) every vector is multiplied by
// scale() = 2, so all inner products are exact integers.
class RootSystem {
 public:
  const RootSystemSpec& spec() const noexcept { return spec_; }
  int rank() const noexcept { return spec_.rank; }
  int ambient_dim() const noexcept { return ambient_dim_; }
  int scale() const noexcept { return scale_; }
  bool is_reduced() const noexcept { return spec_.family != Family::BC; }

  std::size_t size() const noexcept { return roots_.size(); }
  std::size_t num_positive() const noexcept { return roots_.size() / 2; }
  const IntVector& root(std::size_t i) const { return roots_.at(i); }
  std::span<const IntVector> roots() const noexcept { return roots_; }
  std::optional<std::size_t> find(std::span<const std::int64_t> v) const;

  std::size_t simple_root(Node a) const { return simple_.at(static_cast<std::size_t>(a)); }
  std::span<const std::size_t> simple_indices() const noexcept { return simple_; }
  std::size_t negation(std::size_t i) const { return negation_.at(i); }
  bool is_positive(std::size_t i) const { return positive_.at(i) != 0; }
  // Coefficients of root i in the basis of simple roots (length rank()).
  const IntVector& simple_coefficients(std::size_t i) const { return coefficients_.at(i); }

  // cartan()[i][j] = <a_i, a_j^vee> = 2 (a_i, a_j) / (a_j, a_j).
  const IntMatrix& cartan() const noexcept { return cartan_; }
  bool adjacent(Node a, Node b) const;
  int degree(Node a) const;

  // Re-runs every structural invariant check; returns a description of the
  // first violation, or an empty string.
  std::string check_invariants() const;

 private:
  RootSystem(RootSystemSpec spec, int ambient_dim, int scale, std::vector<IntVector> roots,
             const std::vector<IntVector>& simple_roots);

  RootSystemSpec spec_;
  int ambient_dim_ = 0;
  int scale_ = 1;
  std::vector<IntVector> roots_;
  std::vector<std::size_t> simple_;
  std::vector<std::size_t> negation_;
  std::vector<char> positive_;
  std::vector<IntVector> coefficients_;
  IntMatrix cartan_;

  friend RootSystem build_root_system(const RootSystemSpec& spec);
  friend RootSystem nondivisible_core(const RootSystem& rs);
};

RootSystem build_root_system(const RootSystemSpec& spec);

// r_a(v) = v - <v, a^vee> a. Throws NonCrystallographicInput when <v, a^vee>
// is not an integer.
IntVector reflect(const RootSystem& rs, std::size_t a, std::span<const std::int64_t> v);
std::int64_t coroot_pairing(const RootSystem& rs, std::size_t a, std::span<const std::int64_t> v);

// Coxeter matrix m(a, b): order of r_a r_b, found by iterating the product on
// the simple roots. Requires a reduced system (throws NotReduced).
IntMatrix coxeter_matrix(const RootSystem& rs);
// The same matrix from the Cartan products n_ab n_ba in {0,1,2,3}.
IntMatrix coxeter_matrix_from_cartan(const IntMatrix& cartan);

// Non-divisible roots of a BC_n system; the result carries spec B_n.
// Throws NotNonReduced for reduced input.
RootSystem nondivisible_core(const RootSystem& rs);
// rs itself when reduced, its non-divisible core otherwise.
RootSystem reduced_form(const RootSystem& rs);

bool is_end_node(const RootSystem& rs, Node a);
std::vector<Node> dynkin_path(const RootSystem& rs, Node from, Node to);
std::optional<Node> branch_node(const RootSystem& rs);
// Simply laced with no branch node, i.e. the diagram of type A_rank.
bool is_type_a_diagram(const RootSystem& rs);

}  // namespace weylbn
