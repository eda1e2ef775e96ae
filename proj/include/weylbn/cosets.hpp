#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "weylbn/rootsys.hpp"
#include "weylbn/weyl.hpp"

namespace weylbn {

// W' = <r_b : b != removed>. A BC_n input is analysed through its B_n core;
// `original` keeps the label that was asked for.
class ParabolicChoice {
 public:
  ParabolicChoice(const RootSystemSpec& original, Node removed);
  ParabolicChoice(std::shared_ptr<const WeylGroup> group, const RootSystemSpec& original,
                  Node removed);

  const RootSystemSpec& original() const noexcept { return original_; }
  const WeylGroup& group() const noexcept { return *group_; }
  std::shared_ptr<const WeylGroup> shared_group() const noexcept { return group_; }
  const RootSystem& root_system() const noexcept { return group_->root_system(); }
  Node removed() const noexcept { return removed_; }
  int rank() const noexcept { return original_.rank; }

 private:
  RootSystemSpec original_;
  std::shared_ptr<const WeylGroup> group_;
  Node removed_;
};

// W-orbit of the fundamental weight omega_a, i.e. W / W'. Points are stored
// as packed int8 coordinate rows; neighbor(i, s) is the index of r_s(point i).
class ParabolicOrbit {
 public:
  std::size_t size() const noexcept { return size_; }
  int rank() const noexcept { return rank_; }
  WeightVector point(std::size_t i) const;
  std::size_t neighbor(std::size_t i, Node s) const {
    return neighbors_[i * static_cast<std::size_t>(rank_) + static_cast<std::size_t>(s)];
  }
  std::size_t index_of(const WeightVector& v) const;  // size() when absent

 private:
  int rank_ = 0;
  std::size_t size_ = 0;
  std::vector<std::int8_t> coords_;
  std::vector<std::uint32_t> neighbors_;
  std::vector<std::uint32_t> slots_;  // open-addressing hash of point indices + 1

  std::size_t probe(const std::int8_t* key) const;
  friend ParabolicOrbit parabolic_orbit(const ParabolicChoice& choice);
};

ParabolicOrbit parabolic_orbit(const ParabolicChoice& choice);

struct DoubleCosetReport {
  RootSystemSpec spec;        // as requested (BC kept)
  int node = 0;               // 1-based
  std::size_t quotient_size = 0;   // [W : W']
  std::size_t count = 0;           // #W' \ W / W'
  std::vector<std::size_t> orbit_sizes;  // sizes of the W'-orbits, ascending
  bool expected_two = false;  // type A_m and an end node
  bool pass = false;
};

DoubleCosetReport double_coset_count(const ParabolicChoice& choice);
// Enumerates W and partitions it into W' x W' classes. Throws GroupTooLarge
// when |W| > max_order.
std::size_t double_coset_count_naive(const ParabolicChoice& choice,
                                     std::size_t max_order = 100'000);
// The same for every node at once, indexed by the removed node.
std::vector<std::size_t> double_coset_counts_naive(const WeylGroup& W, std::size_t max_order = 100'000);

// Every (type, node) with 2 <= rank <= max_rank: A, B, C, D, BC and the
// exceptional types in range. `families` empty means all. Results are sorted
// by (family, rank, node) regardless of `jobs`.
std::vector<RootSystemSpec> lemma2_types(int max_rank, const std::vector<Family>& families = {});
std::vector<DoubleCosetReport> lemma2_sweep(int max_rank, const std::vector<Family>& families = {},
                                            int jobs = 1);

struct WitnessReport {
  RootSystemSpec spec;
  int node = 0;  // 1-based
  Word word;
  int i = 0;
  int length = 0;
  std::vector<Word> reduced_words;
  bool length_ok = false;
  bool two_reduced_words = false;
  bool endpoints_r_a = false;
  bool coset_distinct = false;
  int braid_diameter = -1;

  bool pass() const noexcept { return length_ok && two_reduced_words && endpoints_r_a && coset_distinct; }
};

bool witness_applicable(const RootSystem& rs, Node a);
// Throws WitnessNotApplicable for end nodes of diagrams without a branch node.
WitnessReport stembridge_witness(const ParabolicChoice& choice);

struct Case1Bound {
  std::size_t size_psi = 0;
  std::size_t size_psi_prime = 0;
  bool w0_is_minus_one = false;
  bool holds = false;  // #Psi > #Psi' + 2
};

Case1Bound case1_bound_check(const ParabolicChoice& choice);

struct Prop7WeightSets {
  int m = 0;
  std::vector<std::size_t> lie_p;
  std::vector<std::size_t> lie_q;
  std::vector<std::size_t> difference;
  std::vector<std::size_t> expected;  // a_i + ... + a_m, i = 1..m
  bool pass = false;
};

// Type A_m with a = a_1. Throws RankTooSmall for m < 2.
Prop7WeightSets prop7_weight_sets(int m);

// sigma with w0(a_i) = -a_sigma(i) (0-based). Throws InvalidSpec unless type A.
std::vector<Node> w0_negation_map(const RootSystem& rs);

}  // namespace weylbn
