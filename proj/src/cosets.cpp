#include "weylbn/cosets.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "weylbn/errors.hpp"

namespace weylbn {

namespace {

constexpr std::uint32_t kEmpty = 0;

std::uint64_t hash_bytes(const std::int8_t* key, int len) {
  std::uint64_t h = 1469598103934665603ull;
  for (int i = 0; i < len; ++i) h = (h ^ static_cast<std::uint8_t>(key[i])) * 1099511628211ull;
  return h ^ (h >> 29);
}

std::int8_t narrow(std::int64_t x) {
  if (x < -128 || x > 127) throw std::overflow_error("weight coordinate exceeds int8 range");
  return static_cast<std::int8_t>(x);
}

struct DisjointSets {
  std::vector<std::uint32_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

// Points of the W'-orbit of v, under r_b for b != removed.
std::set<WeightVector> sub_orbit(const WeylGroup& W, Node removed, const WeightVector& v) {
  std::set<WeightVector> seen{v};
  std::deque<WeightVector> queue{v};
  while (!queue.empty()) {
    WeightVector x = queue.front();
    queue.pop_front();
    for (Node b = 0; b < W.rank(); ++b) {
      if (b == removed) continue;
      WeightVector y = W.reflect_weight(b, x);
      if (seen.insert(y).second) queue.push_back(std::move(y));
    }
  }
  return seen;
}

}  // namespace

ParabolicChoice::ParabolicChoice(const RootSystemSpec& original, Node removed)
    : ParabolicChoice(std::make_shared<const WeylGroup>(build_root_system(original)), original,
                      removed) {}

ParabolicChoice::ParabolicChoice(std::shared_ptr<const WeylGroup> group,
                                 const RootSystemSpec& original, Node removed)
    : original_(original), group_(std::move(group)), removed_(removed) {
  if (removed_ < 0 || removed_ >= group_->rank())
    throw InvalidSpec("node " + std::to_string(removed_ + 1) + " is not in the diagram of " +
                      original_.label());
}

WeightVector ParabolicOrbit::point(std::size_t i) const {
  WeightVector v{std::vector<std::int64_t>(static_cast<std::size_t>(rank_))};
  for (int k = 0; k < rank_; ++k)
    v.coords[static_cast<std::size_t>(k)] = coords_[i * static_cast<std::size_t>(rank_) + static_cast<std::size_t>(k)];
  return v;
}

std::size_t ParabolicOrbit::probe(const std::int8_t* key) const {
  const std::size_t mask = slots_.size() - 1;
  std::size_t h = hash_bytes(key, rank_) & mask;
  for (;;) {
    const std::uint32_t s = slots_[h];
    if (s == kEmpty) return h;
    if (std::equal(key, key + rank_, coords_.data() + static_cast<std::size_t>(s - 1) * static_cast<std::size_t>(rank_)))
      return h;
    h = (h + 1) & mask;
  }
}

std::size_t ParabolicOrbit::index_of(const WeightVector& v) const {
  if (v.coords.size() != static_cast<std::size_t>(rank_)) return size_;
  std::vector<std::int8_t> key(v.coords.size());
  for (std::size_t k = 0; k < key.size(); ++k) {
    if (v.coords[k] < -128 || v.coords[k] > 127) return size_;
    key[k] = static_cast<std::int8_t>(v.coords[k]);
  }
  const std::uint32_t s = slots_[probe(key.data())];
  return s == kEmpty ? size_ : s - 1;
}

ParabolicOrbit parabolic_orbit(const ParabolicChoice& choice) {
  const WeylGroup& W = choice.group();
  const int r = W.rank();
  const auto ur = static_cast<std::size_t>(r);
  const IntMatrix& cartan = W.root_system().cartan();

  ParabolicOrbit orbit;
  orbit.rank_ = r;
  orbit.slots_.assign(1024, kEmpty);

  std::vector<std::int8_t> scratch(ur);
  auto insert = [&](const std::int8_t* key) -> std::uint32_t {
    if (2 * (orbit.size_ + 1) > orbit.slots_.size()) {
      std::vector<std::uint32_t> old(orbit.slots_.size() * 2, kEmpty);
      orbit.slots_.swap(old);
      for (std::size_t i = 0; i < orbit.size_; ++i)
        orbit.slots_[orbit.probe(orbit.coords_.data() + i * ur)] = static_cast<std::uint32_t>(i + 1);
    }
    const std::size_t slot = orbit.probe(key);
    if (orbit.slots_[slot] != kEmpty) return orbit.slots_[slot] - 1;
    orbit.coords_.insert(orbit.coords_.end(), key, key + r);
    orbit.slots_[slot] = static_cast<std::uint32_t>(++orbit.size_);
    return static_cast<std::uint32_t>(orbit.size_ - 1);
  };

  std::vector<std::int8_t> start(ur, 0);
  start[static_cast<std::size_t>(choice.removed())] = 1;
  insert(start.data());
  for (std::size_t head = 0; head < orbit.size_; ++head) {
    for (std::size_t s = 0; s < ur; ++s) {
      const std::int64_t c = orbit.coords_[head * ur + s];
      if (c == 0) {
        orbit.neighbors_.push_back(static_cast<std::uint32_t>(head));
        continue;
      }
      for (std::size_t k = 0; k < ur; ++k)
        scratch[k] = narrow(orbit.coords_[head * ur + k] - c * cartan[s][k]);
      orbit.neighbors_.push_back(insert(scratch.data()));
    }
  }
  return orbit;
}

DoubleCosetReport double_coset_count(const ParabolicChoice& choice) {
  const ParabolicOrbit orbit = parabolic_orbit(choice);
  const int r = choice.group().rank();

  DisjointSets sets(orbit.size());
  for (std::size_t i = 0; i < orbit.size(); ++i)
    for (Node b = 0; b < r; ++b)
      if (b != choice.removed())
        sets.unite(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(orbit.neighbor(i, b)));

  std::vector<std::size_t> sizes(orbit.size(), 0);
  for (std::size_t i = 0; i < orbit.size(); ++i) ++sizes[sets.find(static_cast<std::uint32_t>(i))];
  std::erase(sizes, std::size_t{0});
  std::sort(sizes.begin(), sizes.end());
  if (std::accumulate(sizes.begin(), sizes.end(), std::size_t{0}) != orbit.size())
    throw std::logic_error("W'-orbits do not partition W/W'");

  DoubleCosetReport report;
  report.spec = choice.original();
  report.node = choice.removed() + 1;
  report.quotient_size = orbit.size();
  report.count = sizes.size();
  report.orbit_sizes = std::move(sizes);
  const RootSystem& rs = choice.root_system();
  report.expected_two = is_type_a_diagram(rs) && is_end_node(rs, choice.removed());
  report.pass = report.expected_two ? report.count == 2 : report.count > 2;
  return report;
}

std::vector<std::size_t> double_coset_counts_naive(const WeylGroup& W, std::size_t max_order) {
  const auto elements = W.enumerate(max_order);
  std::unordered_map<WeylElement, std::uint32_t, WeylElementHash> index;
  for (std::size_t i = 0; i < elements.size(); ++i) index.emplace(elements[i], static_cast<std::uint32_t>(i));

  // left[i*r+b] = index of r_b x_i, right[i*r+b] = index of x_i r_b.
  const auto r = static_cast<std::size_t>(W.rank());
  std::vector<std::uint32_t> left(elements.size() * r), right(elements.size() * r);
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (Node b = 0; b < W.rank(); ++b) {
      const auto& s = W.simple_reflection(b);
      left[i * r + static_cast<std::size_t>(b)] = index.at(W.multiply(s, elements[i]));
      right[i * r + static_cast<std::size_t>(b)] = index.at(W.multiply(elements[i], s));
    }

  std::vector<std::size_t> counts;
  for (Node removed = 0; removed < W.rank(); ++removed) {
    DisjointSets sets(elements.size());
    for (std::size_t i = 0; i < elements.size(); ++i)
      for (std::size_t b = 0; b < r; ++b) {
        if (static_cast<Node>(b) == removed) continue;
        sets.unite(static_cast<std::uint32_t>(i), left[i * r + b]);
        sets.unite(static_cast<std::uint32_t>(i), right[i * r + b]);
      }
    std::size_t classes = 0;
    for (std::size_t i = 0; i < elements.size(); ++i) classes += sets.find(static_cast<std::uint32_t>(i)) == i;
    counts.push_back(classes);
  }
  return counts;
}

std::size_t double_coset_count_naive(const ParabolicChoice& choice, std::size_t max_order) {
  return double_coset_counts_naive(choice.group(), max_order).at(static_cast<std::size_t>(choice.removed()));
}

std::vector<RootSystemSpec> lemma2_types(int max_rank, const std::vector<Family>& families) {
  if (max_rank < 2) throw InvalidSpec("double-coset sweep needs max_rank >= 2");
  auto wanted = [&](Family f) {
    return families.empty() || std::find(families.begin(), families.end(), f) != families.end();
  };
  std::vector<RootSystemSpec> specs;
  for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::BC})
    for (int r = 2; r <= max_rank; ++r)
      if (RootSystemSpec s{f, r}; wanted(f) && s.admissible()) specs.push_back(s);
  for (RootSystemSpec s : {RootSystemSpec{Family::G, 2}, RootSystemSpec{Family::F, 4},
                           RootSystemSpec{Family::E, 6}, RootSystemSpec{Family::E, 7},
                           RootSystemSpec{Family::E, 8}})
    if (wanted(s.family) && s.rank <= max_rank) specs.push_back(s);
  std::sort(specs.begin(), specs.end());
  return specs;
}

std::vector<DoubleCosetReport> lemma2_sweep(int max_rank, const std::vector<Family>& families,
                                            int jobs) {
  const auto specs = lemma2_types(max_rank, families);
  std::vector<std::vector<DoubleCosetReport>> per_type(specs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t t; (t = next.fetch_add(1)) < specs.size();) {
      auto group = std::make_shared<const WeylGroup>(build_root_system(specs[t]));
      for (Node a = 0; a < specs[t].rank; ++a)
        per_type[t].push_back(double_coset_count(ParabolicChoice(group, specs[t], a)));
    }
  };
  const int threads = std::max(1, std::min<int>(jobs, static_cast<int>(specs.size())));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int k = 0; k < threads; ++k) pool.emplace_back(worker);
  }
  std::vector<DoubleCosetReport> out;
  for (auto& v : per_type) std::move(v.begin(), v.end(), std::back_inserter(out));
  return out;
}

bool witness_applicable(const RootSystem& rs, Node a) {
  return rs.degree(a) >= 2 || (rs.degree(a) == 1 && branch_node(rs).has_value());
}

WitnessReport stembridge_witness(const ParabolicChoice& choice) {
  const WeylGroup& W = choice.group();
  const RootSystem& rs = choice.root_system();
  const Node a = choice.removed();
  if (!witness_applicable(rs, a))
    throw WitnessNotApplicable("no witness for node " + std::to_string(a + 1) + " of " +
                               choice.original().label() +
                               ": end node of a diagram without a branch node");

  std::vector<Node> path;
  Node before_branch = -1;
  if (rs.degree(a) >= 2) {
    path = {a};
  } else {
    path = dynkin_path(rs, a, *branch_node(rs));
    before_branch = path[path.size() - 2];
  }
  const Node hub = path.back();
  std::vector<Node> outer;
  for (Node b = 0; b < rs.rank() && outer.size() < 2; ++b)
    if (rs.adjacent(hub, b) && b != before_branch) outer.push_back(b);

  WitnessReport report;
  report.spec = choice.original();
  report.node = a + 1;
  report.i = static_cast<int>(path.size());
  report.word = path;
  report.word.insert(report.word.end(), outer.begin(), outer.end());
  report.word.insert(report.word.end(), path.rbegin(), path.rend());

  const WeylElement w = W.element_of(report.word);
  report.length = w.length();
  report.length_ok = report.length == 2 * report.i + 2;
  const ReducedWordSet words = W.reduced_words(w, 1000);
  report.reduced_words = words.words;
  report.two_reduced_words = words.words.size() == 2 && words.braid_connected;
  report.endpoints_r_a = std::all_of(words.words.begin(), words.words.end(), [&](const Word& x) {
    return !x.empty() && x.front() == a && x.back() == a;
  });
  report.braid_diameter = braid_graph_diameter(W, words.words);

  const WeightVector omega = fundamental_weight(rs.rank(), a);
  const auto orbit = sub_orbit(W, a, W.act_on_weight(report.word, omega));
  report.coset_distinct = !orbit.contains(omega) && !orbit.contains(W.reflect_weight(a, omega));
  return report;
}

Case1Bound case1_bound_check(const ParabolicChoice& choice) {
  const RootSystem& rs = choice.root_system();
  const auto a = static_cast<std::size_t>(choice.removed());
  Case1Bound out;
  out.size_psi = rs.size();
  for (std::size_t i = 0; i < rs.size(); ++i) out.size_psi_prime += rs.simple_coefficients(i)[a] == 0;
  const WeylGroup& W = choice.group();
  out.w0_is_minus_one = W.is_minus_one(W.longest_element());
  out.holds = out.size_psi > out.size_psi_prime + 2;
  return out;
}

Prop7WeightSets prop7_weight_sets(int m) {
  if (m < 2) throw RankTooSmall("weight-set check needs m >= 2");
  const RootSystem rs = build_root_system({Family::A, m});
  const WeylGroup W(rs);
  const WeylElement w0 = W.longest_element();

  Prop7WeightSets out;
  out.m = m;
  std::vector<char> in_p(rs.size(), 0);
  for (std::size_t i = 0; i < rs.size(); ++i) {
    // all positive roots, and the negative roots in the span of a_2..a_m
    in_p[i] = rs.is_positive(i) || rs.simple_coefficients(i)[0] == 0;
    if (in_p[i]) out.lie_p.push_back(i);
  }
  for (std::size_t i : out.lie_p) {
    // i lies in w0(lieP) iff w0^{-1}(i) = w0(i) lies in lieP
    if (in_p[w0(i)]) out.lie_q.push_back(i);
    else out.difference.push_back(i);
  }
  for (int first = 0; first < m; ++first) {
    IntVector c(static_cast<std::size_t>(m), 0);
    for (int k = first; k < m; ++k) c[static_cast<std::size_t>(k)] = 1;
    for (std::size_t i = 0; i < rs.size(); ++i)
      if (rs.simple_coefficients(i) == c) out.expected.push_back(i);
  }
  std::sort(out.expected.begin(), out.expected.end());
  out.pass = out.difference == out.expected && out.difference.size() == static_cast<std::size_t>(m);
  return out;
}

std::vector<Node> w0_negation_map(const RootSystem& rs) {
  if (rs.spec().family != Family::A) throw InvalidSpec(rs.spec().label() + " is not of type A");
  const WeylGroup W(rs);
  const WeylElement w0 = W.longest_element();
  const int m = rs.rank();
  std::vector<Node> sigma(static_cast<std::size_t>(m), -1);
  for (Node i = 0; i < m; ++i) {
    const std::size_t image = w0(rs.simple_root(i));
    for (Node j = 0; j < m; ++j)
      if (rs.negation(rs.simple_root(j)) == image) sigma[static_cast<std::size_t>(i)] = j;
    if (sigma[static_cast<std::size_t>(i)] != m - 1 - i)
      throw std::logic_error("w0(a_i) != -a_{m+1-i} in " + rs.spec().label());
  }
  return sigma;
}

}  // namespace weylbn
