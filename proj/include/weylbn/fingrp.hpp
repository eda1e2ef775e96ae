#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace weylbn {

// Arithmetic in F_p.
class PrimeField {
 public:
  explicit PrimeField(int p);  // throws InvalidSpec unless p is a prime < 256
  int p() const noexcept { return p_; }
  int add(int a, int b) const noexcept { return (a + b) % p_; }
  int sub(int a, int b) const noexcept { return (a - b + p_) % p_; }
  int mul(int a, int b) const noexcept { return (a * b) % p_; }
  int neg(int a) const noexcept { return (p_ - a) % p_; }
  int inv(int a) const;  // throws std::domain_error for 0
  int primitive_root() const;

 private:
  int p_;
};

using Elem = std::uint32_t;
using Encoding = std::vector<std::uint8_t>;

struct EncodingHash {
  std::size_t operator()(const Encoding& e) const noexcept;
};

// Concrete arithmetic on canonical encodings.
class ElementLaw {
 public:
  virtual ~ElementLaw() = default;
  virtual Encoding identity() const = 0;
  virtual Encoding multiply(const Encoding& a, const Encoding& b) const = 0;
  virtual Encoding invert(const Encoding& a) const = 0;
  virtual std::string format(const Encoding& a) const = 0;
};

// n x n matrices over F_p, row-major. With `projective` set, every element is
// replaced by its lexicographically least nonzero scalar multiple.
class MatrixLaw final : public ElementLaw {
 public:
  MatrixLaw(int n, int p, bool projective);

  int dimension() const noexcept { return n_; }
  const PrimeField& field() const noexcept { return field_; }
  bool projective() const noexcept { return projective_; }

  Encoding identity() const override;
  Encoding multiply(const Encoding& a, const Encoding& b) const override;
  Encoding invert(const Encoding& a) const override;
  std::string format(const Encoding& a) const override;

  Encoding canonical(Encoding m) const;
  int determinant(const Encoding& m) const;
  int at(const Encoding& m, int row, int col) const {
    return m[static_cast<std::size_t>(row * n_ + col)];
  }
  std::vector<std::uint8_t> apply(const Encoding& m, std::span<const std::uint8_t> v) const;

 private:
  int n_;
  PrimeField field_;
  bool projective_;
};

// F_p x| F_p^x: (t, x)(t', x') = (t + x t', x x'), acting on F_p by y -> t + x y.
class AffineLaw final : public ElementLaw {
 public:
  explicit AffineLaw(int p);
  const PrimeField& field() const noexcept { return field_; }
  Encoding identity() const override;
  Encoding multiply(const Encoding& a, const Encoding& b) const override;
  Encoding invert(const Encoding& a) const override;
  std::string format(const Encoding& a) const override;

 private:
  PrimeField field_;
};

// Explicit finite group with elements indexed 0..order()-1 (0 is the
// identity). Products come from a materialized table for small groups and
// from the law plus an encoding index otherwise.
class FiniteGroup {
 public:
  static constexpr std::size_t kTableLimit = 1024;

  // Closure of the generators under the law. Throws GroupTooLarge beyond
  // max_order.
  static std::shared_ptr<const FiniteGroup> generate(std::string name,
                                                     std::shared_ptr<const ElementLaw> law,
                                                     std::vector<Encoding> generators,
                                                     std::size_t max_order = 100'000);

  const std::string& name() const noexcept { return name_; }
  std::size_t order() const noexcept { return enc_.size(); }
  Elem identity() const noexcept { return 0; }
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const { return inv_[a]; }
  Elem conj(Elem g, Elem x) const { return mul(mul(g, x), inv_[g]); }  // g x g^-1
  Elem commutator(Elem x, Elem y) const { return mul(mul(x, y), mul(inv_[x], inv_[y])); }
  int element_order(Elem a) const;

  std::span<const Elem> generators() const noexcept { return gens_; }
  const Encoding& encoding(Elem a) const { return enc_.at(a); }
  std::optional<Elem> find(const Encoding& e) const;
  const ElementLaw& law() const noexcept { return *law_; }
  // The law as a MatrixLaw, or nullptr.
  const MatrixLaw* matrix_law() const noexcept { return dynamic_cast<const MatrixLaw*>(law_.get()); }
  std::string format(Elem a) const { return law_->format(enc_.at(a)); }

  // Exhaustive closure / identity / inverse checks plus `samples` random
  // associativity triples. Returns an empty string or the first failure.
  std::string verify_axioms(std::size_t samples = 10'000, std::uint64_t seed = 1) const;
  // Cayley table as CSV: header row and column of element labels.
  void write_table_csv(std::ostream& out) const;

 private:
  std::string name_;
  std::shared_ptr<const ElementLaw> law_;
  std::vector<Encoding> enc_;
  std::unordered_map<Encoding, Elem, EncodingHash> index_;
  std::vector<Elem> gens_;
  std::vector<Elem> inv_;
  std::vector<std::uint16_t> table_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

// Subgroup of a FiniteGroup, held as its sorted element list plus a
// membership bitmap and a small generating set.
class Subgroup {
 public:
  // `elements` must form a subgroup; checked.
  Subgroup(GroupPtr group, std::vector<Elem> elements);
  static Subgroup whole(GroupPtr group);
  static Subgroup trivial(GroupPtr group);

  const FiniteGroup& group() const noexcept { return *group_; }
  const GroupPtr& group_ptr() const noexcept { return group_; }
  std::size_t order() const noexcept { return elems_.size(); }
  bool contains(Elem x) const { return member_[x] != 0; }
  std::span<const Elem> elements() const noexcept { return elems_; }
  std::span<const Elem> generators() const noexcept { return gens_; }
  bool is_subgroup_of(const Subgroup& other) const;

  bool operator==(const Subgroup& o) const { return elems_ == o.elems_; }

 private:
  struct Trusted {};
  // elements sorted and known to be generated by gens.
  Subgroup(Trusted, GroupPtr group, std::vector<Elem> elements, std::vector<Elem> gens);

  GroupPtr group_;
  std::vector<Elem> elems_;
  std::vector<char> member_;
  std::vector<Elem> gens_;

  friend Subgroup closure(const GroupPtr& group, std::span<const Elem> generators);
  friend Subgroup conjugate(const Subgroup& h, Elem g);
};

Subgroup closure(const GroupPtr& group, std::span<const Elem> generators);
Subgroup intersection(const Subgroup& a, const Subgroup& b);
Subgroup conjugate(const Subgroup& h, Elem g);  // g H g^-1
Subgroup join(const Subgroup& a, const Subgroup& b);
// |A B| as a set.
std::size_t product_size(const Subgroup& a, const Subgroup& b);

// H normal in K (H must lie in K).
bool is_normal(const Subgroup& h, const Subgroup& k);
bool is_normal(const Subgroup& h);  // in the whole group
Subgroup normal_closure(const Subgroup& k, std::span<const Elem> seeds);
std::vector<std::vector<Elem>> conjugacy_classes(const Subgroup& k);
// All normal subgroups of K (optionally only those inside `within`, which
// must itself be normal in K), sorted by order. Throws CapExceeded.
std::vector<Subgroup> normal_subgroups(const Subgroup& k, std::size_t cap = 4096,
                                       const std::optional<Subgroup>& within = std::nullopt);
Subgroup center(const Subgroup& k);

std::vector<Subgroup> lower_central_series(const Subgroup& h);
bool is_nilpotent(const Subgroup& h);
bool is_p_group(const Subgroup& h, int p);
// Largest normal p-subgroup of H.
Subgroup p_core(const Subgroup& h, int p);
// Product of the p-cores. Throws CapExceeded for |H| > max_order.
Subgroup fitting_subgroup(const Subgroup& h, std::size_t max_order = 10'000);
// Join of all nilpotent normal subgroups found by listing normal subgroups;
// throws CapExceeded for |H| > max_order.
Subgroup fitting_subgroup_bruteforce(const Subgroup& h, std::size_t max_order = 500);
std::vector<Subgroup> nilpotent_normal_subgroups(const Subgroup& h, std::size_t max_order = 500);

// --- matrix groups -------------------------------------------------------

std::size_t sl_order(int n, int p);  // saturates at SIZE_MAX
GroupPtr special_linear_group(int n, int p, std::size_t max_order = 100'000);
// Image in PGL of a matrix group: canonical scalar-multiple representatives.
GroupPtr central_quotient(const GroupPtr& group);
GroupPtr affine_group(int p);

// Filters of a matrix group.
Subgroup upper_triangular_B(const GroupPtr& g);
Subgroup monomial_N(const GroupPtr& g);
Subgroup unitriangular_U(const GroupPtr& g);  // upper triangular with unit diagonal
Subgroup diagonal_T(const GroupPtr& g);
// Permutation pattern of a monomial matrix: row i has its nonzero entry in
// column pattern[i]. Empty when not monomial.
std::vector<int> monomial_pattern(const FiniteGroup& g, Elem x);

// --- actions -------------------------------------------------------------

class GroupAction {
 public:
  GroupAction(GroupPtr group, std::vector<std::string> labels,
              const std::function<std::size_t(Elem, std::size_t)>& apply);

  const FiniteGroup& group() const noexcept { return *group_; }
  const GroupPtr& group_ptr() const noexcept { return group_; }
  std::size_t num_points() const noexcept { return labels_.size(); }
  const std::string& label(std::size_t x) const { return labels_.at(x); }
  std::size_t apply(Elem g, std::size_t x) const { return table_[static_cast<std::size_t>(g) * labels_.size() + x]; }

  std::vector<std::size_t> orbit(std::size_t x) const;
  std::vector<std::vector<std::size_t>> orbits() const;
  Subgroup stabilizer(std::size_t x) const;
  Subgroup setwise_stabilizer(std::size_t x, std::size_t y) const;
  bool is_transitive() const;
  bool is_2transitive() const;
  // identity acts trivially and g.(h.x) = (gh).x for all g, generators h, x.
  bool is_valid_action() const;

 private:
  GroupPtr group_;
  std::vector<std::string> labels_;
  std::vector<std::uint32_t> table_;
};

// SL_{n+1}(F_p) (or any matrix group of that dimension) on P^n(F_p).
GroupAction projective_space_action(const GroupPtr& group);
GroupAction projective_space_action(int n, int p);
// Left multiplication on the left cosets g B.
GroupAction coset_action(const Subgroup& b);
GroupAction affine_line_action(const GroupPtr& affine);
GroupAction regular_action(const GroupPtr& group);

}  // namespace weylbn
