#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "weylbn/fingrp.hpp"

namespace weylbn {

// Largest group checked exhaustively. WEYL_BN_MAX_GROUP overrides the default.
std::size_t exhaustive_cap();

struct TitsSystemCandidate {
  std::string label;
  GroupPtr G;
  Subgroup B;
  Subgroup N;
};

struct WeylQuotient {
  Subgroup H;               // B ∩ N
  std::vector<Elem> reps;   // one per coset nH, reps[0] = identity
};

// Throws HNotNormal when B ∩ N is not normal in N.
WeylQuotient derive_weyl(const TitsSystemCandidate& c);

// Everything the checks share: the Weyl quotient, the double-coset partition
// of G and, once S is known, S-words and lengths on W^T.
class TitsAnalysis {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  explicit TitsAnalysis(TitsSystemCandidate c);  // throws HNotNormal, GroupTooLarge

  const TitsSystemCandidate& candidate() const noexcept { return c_; }
  const FiniteGroup& G() const noexcept { return *c_.G; }
  const Subgroup& B() const noexcept { return c_.B; }
  const Subgroup& N() const noexcept { return c_.N; }
  const Subgroup& H() const noexcept { return weyl_.H; }

  std::size_t weyl_order() const noexcept { return weyl_.reps.size(); }
  Elem rep(std::size_t w) const { return weyl_.reps.at(w); }
  std::size_t weyl_class(Elem n) const { return class_of_.at(n); }  // npos outside N
  std::size_t weyl_mul(std::size_t a, std::size_t b) const;

  // S sorted canonically; indices into the Weyl classes.
  const std::vector<std::size_t>& S() const noexcept { return s_; }
  // Shortest S-word (letters index S, shortlex least) and length; empty
  // optional when S does not reach w.
  const std::optional<std::vector<int>>& word(std::size_t w) const { return words_.at(w); }
  int length(std::size_t w) const;
  std::string word_key(std::size_t w) const;  // "e" or "1 2 1"

  std::size_t cell_of(Elem g) const { return cell_of_.at(g); }
  std::size_t num_cells() const noexcept { return cell_sizes_.size(); }
  std::size_t cell_size(std::size_t k) const { return cell_sizes_.at(k); }
  std::size_t cell_of_class(std::size_t w) const { return cell_of_.at(rep(w)); }
  // Cells met by rep(s) * b * rep(w) as b runs over B, i.e. the cells of BsB.BwB.
  std::vector<std::size_t> product_cells(std::size_t s, std::size_t w) const;

 private:
  TitsSystemCandidate c_;
  WeylQuotient weyl_;
  std::vector<std::size_t> class_of_;
  std::vector<std::size_t> cell_of_;
  std::vector<std::size_t> cell_sizes_;
  std::vector<std::size_t> s_;
  std::vector<std::optional<std::vector<int>>> words_;
};

// s ∈ S ⟺ s ≠ 1 and B ∪ BsB is a subgroup.
std::vector<std::size_t> find_S(const TitsAnalysis& a);

struct BruhatCell {
  std::string word;
  int length = 0;
  std::size_t size = 0;
};

struct TitsReport {
  std::string label;
  std::size_t group_order = 0;
  std::size_t b_order = 0;
  std::size_t n_order = 0;
  std::size_t h_order = 0;
  std::size_t weyl_order = 0;
  int rank = 0;
  bool t1_generates = false;
  bool h_normal_in_n = false;
  bool t2_holds = false;
  bool t3_holds = false;
  bool t4_holds = false;
  bool bruhat_bijective = false;
  bool self_normalizing = false;
  std::vector<std::string> s_set;  // formatted representatives
  std::vector<BruhatCell> cells;   // by (length, word)

  bool pass() const noexcept {
    return t1_generates && h_normal_in_n && t2_holds && t3_holds && t4_holds && bruhat_bijective &&
           self_normalizing;
  }
};

TitsReport check_axioms(const TitsAnalysis& a);
// Axiom failures become report flags; only size caps throw.
TitsReport check_axioms(const TitsSystemCandidate& c);

// |BwB| = p^l(w) |B| for each w, and the length census of W^T matches that of
// W(A_{n-1}) with Σ p^l |B| = |SL_n(F_p)|.
bool cell_size_formula_check(const TitsAnalysis& a, int n, int p);

// For all s ∈ S, w ∈ W^T: l(sw) > l(w) ⟺ BsB.BwB = BswB, and otherwise the
// product is exactly BwB ∪ BswB.
bool star_property_check(const TitsAnalysis& a);

// H = ∩_w wBw^-1 = B ∩ w0 B w0^-1.
bool intersection_identity_check(const TitsAnalysis& a);

// For a standard SL_n system: the order of s s' in W^T equals the A_{n-1}
// Coxeter entry of the nodes that s, s' permute. Throws InvalidSpec if some
// s is not an adjacent transposition pattern.
bool coxeter_order_check(const TitsAnalysis& a);

// The same check for the standard SL_n(F_p) system without listing G. B and
// N are generated directly; w ≠ 1 is distinguished iff |<B, n_w>| equals
// |B| (1 + [B : B ∩ n_w B n_w^-1]), i.e. iff <B, n_w> = B ∪ B n_w B.
struct LocalCoxeterResult {
  std::size_t b_order = 0;
  std::size_t n_order = 0;
  std::size_t weyl_order = 0;
  std::size_t s_size = 0;
  bool pass = false;
};
LocalCoxeterResult coxeter_order_check_local(int n, int p);

struct ClassificationFlags {
  bool saturated = false;
  bool weakly_split = false;
  bool split = false;
  std::size_t fitting_order = 0;
  std::optional<Subgroup> witness_U;
};

// Throws CapExceeded for |B| > max_b.
ClassificationFlags classify(const TitsAnalysis& a, std::size_t max_b = 10'000);
// B = HU for a nilpotent normal U, by listing normal subgroups of B.
bool weakly_split_bruteforce(const TitsAnalysis& a, std::size_t max_b = 500);

// --- constructors ----------------------------------------------------------

TitsSystemCandidate standard_sl_system(int n, int p);
// B = Stab(x), N = Stab({x, x2}). Throws NotTwoTransitive.
TitsSystemCandidate rank1_from_2transitive(const GroupAction& action, std::size_t x, std::size_t x2,
                                           std::string label = {});
// SL_n(F_p) with B fixing the line of e_1 and N = H ∪ gH where g swaps B with
// the stabilizer of the line of e_n. Throws NoConjugatorFound.
TitsSystemCandidate sl_rank1_column_system(int n, int p);
// Same group on P^{n-1}(F_p) with x = [1:0:..:0], x2 = [0:..:0:1].
TitsSystemCandidate sl_projective_system(int n, int p);
TitsSystemCandidate affine_system(int p);

struct NonstandardResult {
  TitsSystemCandidate candidate;
  ClassificationFlags flags;
  std::size_t points = 0;
  bool two_transitive = false;
  std::vector<std::size_t> standard_parabolic_orders;  // B and B ∪ BsB of the standard system
  bool matches_standard = false;
};

// Order-21 subgroup of PSL_3(F_2) and its rank-1 system on 8 cosets.
// Throws SubgroupNotFound.
NonstandardResult psl3f2_nonstandard();

}  // namespace weylbn
