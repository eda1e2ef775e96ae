#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "weylbn/rootsys.hpp"

namespace weylbn {

// A word in the simple reflections; letters are 0-based nodes.
using Word = std::vector<Node>;

// Parses whitespace-separated 1-based node indices ("2 1 3 2"). Throws
// InvalidSpec on malformed text or letters outside [1, rank].
Word parse_word(std::string_view text, int rank);
std::string format_word(const Word& w);

// Weight in the fundamental-weight basis: coords[a] = <lambda, a^vee>.
struct WeightVector {
  std::vector<std::int64_t> coords;
  bool operator==(const WeightVector&) const = default;
  auto operator<=>(const WeightVector&) const = default;
};

WeightVector fundamental_weight(int rank, Node a);

// Element of W stored as its permutation of the root indices.
class WeylElement {
 public:
  std::span<const std::uint16_t> root_perm() const noexcept { return perm_; }
  int length() const noexcept { return length_; }
  std::size_t operator()(std::size_t root) const { return perm_.at(root); }

  bool operator==(const WeylElement& o) const { return perm_ == o.perm_; }
  bool operator<(const WeylElement& o) const { return perm_ < o.perm_; }

 private:
  std::vector<std::uint16_t> perm_;
  int length_ = 0;
  friend class WeylGroup;
};

struct WeylElementHash {
  std::size_t operator()(const WeylElement& w) const noexcept;
};

struct ReducedWordSet {
  std::vector<Word> words;  // lexicographically sorted
  bool braid_connected = false;
};

class WeylGroup {
 public:
  // Non-reduced input is replaced by its non-divisible core.
  explicit WeylGroup(const RootSystem& rs);

  const RootSystem& root_system() const noexcept { return rs_; }
  int rank() const noexcept { return rs_.rank(); }
  const IntMatrix& coxeter() const noexcept { return coxeter_; }

  WeylElement identity() const;
  const WeylElement& simple_reflection(Node s) const { return simple_.at(static_cast<std::size_t>(s)); }
  // w = r_{word[0]} r_{word[1]} ..., acting on roots as the composite map.
  WeylElement element_of(const Word& word) const;
  WeylElement multiply(const WeylElement& x, const WeylElement& y) const;
  WeylElement inverse(const WeylElement& x) const;
  int length(const WeylElement& x) const { return x.length(); }
  int order(const WeylElement& x) const;

  bool is_left_descent(const WeylElement& x, Node s) const;   // l(s x) < l(x)
  bool is_right_descent(const WeylElement& x, Node s) const;  // l(x s) < l(x)

  WeylElement longest_element() const;
  bool is_minus_one(const WeylElement& x) const;

  // Lexicographically least reduced word.
  Word reduced_word(const WeylElement& x) const;
  // All reduced words, plus the braid-move connectivity check. Throws
  // EnumerationCapExceeded when more than cap words exist.
  ReducedWordSet reduced_words(const WeylElement& x, std::size_t cap = 1'000'000) const;
  // Words reachable from w by one braid move.
  std::vector<Word> braid_neighbors(const Word& w) const;

  WeightVector act_on_weight(const Word& word, const WeightVector& v) const;
  WeightVector act_on_weight(const WeylElement& x, const WeightVector& v) const;
  WeightVector reflect_weight(Node s, const WeightVector& v) const;

  // Every element of W; throws GroupTooLarge beyond max_order.
  std::vector<WeylElement> enumerate(std::size_t max_order) const;
  // census[k] = number of elements of length k.
  std::vector<std::size_t> length_census(std::size_t max_order) const;

 private:
  WeylElement from_perm(std::vector<std::uint16_t> perm) const;

  RootSystem rs_;
  IntMatrix coxeter_;
  std::vector<WeylElement> simple_;
  std::vector<std::size_t> positive_;
};

// Diameter of the braid-move graph on a set of reduced words of one element
// (-1 when it is disconnected).
int braid_graph_diameter(const WeylGroup& W, const std::vector<Word>& words);

}  // namespace weylbn
