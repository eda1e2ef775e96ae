#include "weylbn/weyl.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "weylbn/errors.hpp"

namespace weylbn {

Word parse_word(std::string_view text, int rank) {
  Word w;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
    if (ec != std::errc{} || (ptr != text.data() + text.size() && !std::isspace(static_cast<unsigned char>(*ptr))))
      throw InvalidSpec("malformed word '" + std::string(text) + "'");
    if (value < 1 || value > rank)
      throw InvalidSpec("letter " + std::to_string(value) + " outside 1.." + std::to_string(rank));
    w.push_back(value - 1);
    i = static_cast<std::size_t>(ptr - text.data());
  }
  return w;
}

std::string format_word(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(w[i] + 1);
  }
  return out;
}

WeightVector fundamental_weight(int rank, Node a) {
  WeightVector v{std::vector<std::int64_t>(static_cast<std::size_t>(rank), 0)};
  v.coords.at(static_cast<std::size_t>(a)) = 1;
  return v;
}

std::size_t WeylElementHash::operator()(const WeylElement& w) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto x : w.root_perm()) h = (h ^ x) * 1099511628211ull;
  return h;
}

WeylGroup::WeylGroup(const RootSystem& rs) : rs_(reduced_form(rs)), coxeter_(coxeter_matrix(rs_)) {
  if (rs_.size() > 0xffff) throw std::logic_error("root system too large for 16-bit permutations");
  for (std::size_t i = 0; i < rs_.size(); ++i)
    if (rs_.is_positive(i)) positive_.push_back(i);
  for (Node s = 0; s < rs_.rank(); ++s) {
    std::vector<std::uint16_t> perm(rs_.size());
    for (std::size_t i = 0; i < rs_.size(); ++i) {
      auto j = rs_.find(reflect(rs_, rs_.simple_root(s), rs_.root(i)));
      if (!j) throw std::logic_error("simple reflection leaves the root system");
      perm[i] = static_cast<std::uint16_t>(*j);
    }
    simple_.push_back(from_perm(std::move(perm)));
    if (simple_.back().length() != 1) throw std::logic_error("simple reflection of length != 1");
  }
}

WeylElement WeylGroup::from_perm(std::vector<std::uint16_t> perm) const {
  WeylElement w;
  w.perm_ = std::move(perm);
  int len = 0;
  for (std::size_t i : positive_) len += !rs_.is_positive(w.perm_[i]);
  w.length_ = len;
  return w;
}

WeylElement WeylGroup::identity() const {
  std::vector<std::uint16_t> perm(rs_.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<std::uint16_t>(i);
  return from_perm(std::move(perm));
}

WeylElement WeylGroup::element_of(const Word& word) const {
  WeylElement w = identity();
  for (Node s : word) {
    if (s < 0 || s >= rank()) throw InvalidSpec("letter outside the diagram");
    w = multiply(w, simple_[static_cast<std::size_t>(s)]);
  }
  return w;
}

WeylElement WeylGroup::multiply(const WeylElement& x, const WeylElement& y) const {
  std::vector<std::uint16_t> perm(rs_.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = x.perm_[y.perm_[i]];
  return from_perm(std::move(perm));
}

WeylElement WeylGroup::inverse(const WeylElement& x) const {
  std::vector<std::uint16_t> perm(rs_.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[x.perm_[i]] = static_cast<std::uint16_t>(i);
  return from_perm(std::move(perm));
}

int WeylGroup::order(const WeylElement& x) const {
  const WeylElement e = identity();
  WeylElement p = x;
  int k = 1;
  while (!(p == e)) {
    p = multiply(p, x);
    ++k;
  }
  return k;
}

bool WeylGroup::is_left_descent(const WeylElement& x, Node s) const {
  // l(s x) < l(x)  <=>  x^{-1}(a_s) < 0
  const std::size_t a = rs_.simple_root(s);
  for (std::size_t i = 0; i < rs_.size(); ++i)
    if (x.perm_[i] == a) return !rs_.is_positive(i);
  throw std::logic_error("root permutation is not a bijection");
}

bool WeylGroup::is_right_descent(const WeylElement& x, Node s) const {
  return !rs_.is_positive(x.perm_[rs_.simple_root(s)]);
}

WeylElement WeylGroup::longest_element() const {
  WeylElement w = identity();
  for (bool grew = true; grew;) {
    grew = false;
    for (Node s = 0; s < rank(); ++s)
      if (!is_left_descent(w, s)) {
        w = multiply(simple_[static_cast<std::size_t>(s)], w);
        grew = true;
        break;
      }
  }
  if (static_cast<std::size_t>(w.length()) != rs_.num_positive())
    throw std::logic_error("greedy ascent stopped below #positive roots");
  if (!(multiply(w, w) == identity())) throw std::logic_error("longest element is not an involution");
  return w;
}

bool WeylGroup::is_minus_one(const WeylElement& x) const {
  for (std::size_t a : rs_.simple_indices())
    if (x.perm_[a] != rs_.negation(a)) return false;
  return true;
}

Word WeylGroup::reduced_word(const WeylElement& x) const {
  Word word;
  WeylElement w = x;
  while (w.length() > 0) {
    Node s = 0;
    while (!is_left_descent(w, s)) ++s;
    word.push_back(s);
    w = multiply(simple_[static_cast<std::size_t>(s)], w);
  }
  return word;
}

std::vector<Word> WeylGroup::braid_neighbors(const Word& w) const {
  std::vector<Word> out;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    const Node s = w[i];
    const Node t = w[i + 1];
    if (s == t) continue;
    const auto m = static_cast<std::size_t>(coxeter_[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)]);
    if (i + m > w.size()) continue;
    bool alternating = true;
    for (std::size_t k = 0; k < m && alternating; ++k) alternating = w[i + k] == (k % 2 ? t : s);
    if (!alternating) continue;
    Word v = w;
    for (std::size_t k = 0; k < m; ++k) v[i + k] = k % 2 ? s : t;
    out.push_back(std::move(v));
  }
  return out;
}

ReducedWordSet WeylGroup::reduced_words(const WeylElement& x, std::size_t cap) const {
  if (cap == 0) throw std::invalid_argument("reduced_words: cap must be positive");
  ReducedWordSet result;
  Word prefix;
  std::function<void(const WeylElement&)> descend = [&](const WeylElement& w) {
    if (w.length() == 0) {
      if (result.words.size() == cap) throw EnumerationCapExceeded(cap, result.words.size());
      result.words.push_back(prefix);
      return;
    }
    for (Node s = 0; s < rank(); ++s) {
      if (!is_left_descent(w, s)) continue;
      prefix.push_back(s);
      descend(multiply(simple_[static_cast<std::size_t>(s)], w));
      prefix.pop_back();
    }
  };
  descend(x);

  // Matsumoto: the braid-move graph on the reduced words is connected.
  std::set<Word> all(result.words.begin(), result.words.end());
  std::set<Word> seen{result.words.front()};
  std::deque<Word> queue{result.words.front()};
  bool closed = true;
  while (!queue.empty()) {
    Word w = std::move(queue.front());
    queue.pop_front();
    for (auto& v : braid_neighbors(w)) {
      if (!all.contains(v)) closed = false;
      if (seen.insert(v).second) queue.push_back(std::move(v));
    }
  }
  result.braid_connected = closed && seen.size() == all.size();
  return result;
}

WeightVector WeylGroup::reflect_weight(Node s, const WeightVector& v) const {
  const auto i = static_cast<std::size_t>(s);
  if (v.coords.size() != static_cast<std::size_t>(rank()))
    throw std::invalid_argument("weight rank mismatch");
  WeightVector out = v;
  const std::int64_t c = v.coords[i];
  if (c == 0) return out;
  const auto& row = rs_.cartan()[i];
  for (std::size_t k = 0; k < out.coords.size(); ++k) out.coords[k] -= c * row[k];
  return out;
}

WeightVector WeylGroup::act_on_weight(const Word& word, const WeightVector& v) const {
  WeightVector out = v;
  for (auto it = word.rbegin(); it != word.rend(); ++it) out = reflect_weight(*it, out);
  return out;
}

WeightVector WeylGroup::act_on_weight(const WeylElement& x, const WeightVector& v) const {
  return act_on_weight(reduced_word(x), v);
}

std::vector<WeylElement> WeylGroup::enumerate(std::size_t max_order) const {
  std::vector<WeylElement> elements{identity()};
  std::unordered_set<WeylElement, WeylElementHash> seen{elements.front()};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (Node s = 0; s < rank(); ++s) {
      WeylElement y = multiply(elements[head], simple_[static_cast<std::size_t>(s)]);
      if (seen.insert(y).second) {
        if (elements.size() == max_order)
          throw GroupTooLarge("|W(" + rs_.spec().label() + ")| exceeds " + std::to_string(max_order));
        elements.push_back(std::move(y));
      }
    }
  }
  return elements;
}

std::vector<std::size_t> WeylGroup::length_census(std::size_t max_order) const {
  std::vector<std::size_t> census(rs_.num_positive() + 1, 0);
  for (const auto& w : enumerate(max_order)) ++census[static_cast<std::size_t>(w.length())];
  return census;
}

int braid_graph_diameter(const WeylGroup& W, const std::vector<Word>& words) {
  if (words.empty()) return -1;
  std::map<Word, std::size_t> index;
  for (const auto& w : words) index.emplace(w, index.size());
  std::vector<std::vector<std::size_t>> adj(index.size());
  for (const auto& [w, i] : index)
    for (const auto& v : W.braid_neighbors(w))
      if (auto it = index.find(v); it != index.end()) adj[i].push_back(it->second);
  int diameter = 0;
  for (std::size_t src = 0; src < adj.size(); ++src) {
    std::vector<int> dist(adj.size(), -1);
    dist[src] = 0;
    std::deque<std::size_t> queue{src};
    while (!queue.empty()) {
      auto x = queue.front();
      queue.pop_front();
      for (auto y : adj[x])
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          queue.push_back(y);
        }
    }
    for (int d : dist) {
      if (d < 0) return -1;
      diameter = std::max(diameter, d);
    }
  }
  return diameter;
}

}  // namespace weylbn
