#include "weylbn/titssys.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <deque>
#include <functional>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

#include "weylbn/errors.hpp"
#include "weylbn/rootsys.hpp"
#include "weylbn/weyl.hpp"

namespace weylbn {

std::size_t exhaustive_cap() {
  const char* env = std::getenv("WEYL_BN_MAX_GROUP");
  if (!env || !*env) return 100'000;
  std::size_t value = 0;
  const char* end = env + std::strlen(env);
  auto [ptr, ec] = std::from_chars(env, end, value);
  if (ec != std::errc{} || ptr != end || value == 0)
    throw InvalidSpec(std::string("WEYL_BN_MAX_GROUP is not a positive integer: ") + env);
  return value;
}

WeylQuotient derive_weyl(const TitsSystemCandidate& c) {
  Subgroup h = intersection(c.B, c.N);
  if (!is_normal(h, c.N)) throw HNotNormal(c.label + ": B ∩ N is not normal in N");
  const FiniteGroup& G = *c.G;
  std::vector<char> seen(G.order(), 0);
  std::vector<Elem> reps;
  for (Elem n : c.N.elements()) {
    if (seen[n]) continue;
    reps.push_back(n);
    for (Elem x : h.elements()) seen[G.mul(n, x)] = 1;
  }
  return {std::move(h), std::move(reps)};
}

// --- TitsAnalysis ----------------------------------------------------------

TitsAnalysis::TitsAnalysis(TitsSystemCandidate c) : c_(std::move(c)), weyl_(derive_weyl(c_)) {
  const FiniteGroup& g = *c_.G;
  if (g.order() > exhaustive_cap())
    throw GroupTooLarge(c_.label + ": |G| = " + std::to_string(g.order()) + " exceeds the exhaustive cap " +
                        std::to_string(exhaustive_cap()));

  class_of_.assign(g.order(), npos);
  for (std::size_t w = 0; w < weyl_.reps.size(); ++w)
    for (Elem h : weyl_.H.elements()) class_of_[g.mul(weyl_.reps[w], h)] = w;

  // Double cosets B x B: components of x ~ bx ~ xb over generators b of B.
  cell_of_.assign(g.order(), npos);
  for (Elem start = 0; start < g.order(); ++start) {
    if (cell_of_[start] != npos) continue;
    const std::size_t id = cell_sizes_.size();
    std::vector<Elem> queue{start};
    cell_of_[start] = id;
    for (std::size_t head = 0; head < queue.size(); ++head)
      for (Elem b : c_.B.generators())
        for (Elem y : {g.mul(b, queue[head]), g.mul(queue[head], b)})
          if (cell_of_[y] == npos) {
            cell_of_[y] = id;
            queue.push_back(y);
          }
    cell_sizes_.push_back(queue.size());
  }

  s_ = find_S(*this);

  // Shortlex S-words by breadth-first search with letters appended on the right.
  words_.assign(weyl_order(), std::nullopt);
  words_[0] = std::vector<int>{};
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t w = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < s_.size(); ++i) {
      const std::size_t ws = weyl_mul(w, s_[i]);
      if (words_[ws]) continue;
      auto word = *words_[w];
      word.push_back(static_cast<int>(i));
      words_[ws] = std::move(word);
      queue.push_back(ws);
    }
  }
}

std::size_t TitsAnalysis::weyl_mul(std::size_t a, std::size_t b) const {
  return class_of_[G().mul(rep(a), rep(b))];
}

int TitsAnalysis::length(std::size_t w) const {
  const auto& word = words_.at(w);
  return word ? static_cast<int>(word->size()) : -1;
}

std::string TitsAnalysis::word_key(std::size_t w) const {
  const auto& word = words_.at(w);
  if (!word) return "?" + std::to_string(w);
  if (word->empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < word->size(); ++i) {
    if (i) out += ' ';
    out += std::to_string((*word)[i] + 1);
  }
  return out;
}

std::vector<std::size_t> TitsAnalysis::product_cells(std::size_t s, std::size_t w) const {
  std::set<std::size_t> hit;
  const Elem ns = rep(s), nw = rep(w);
  for (Elem b : B().elements()) hit.insert(cell_of_[G().mul(G().mul(ns, b), nw)]);
  return {hit.begin(), hit.end()};
}

std::vector<std::size_t> find_S(const TitsAnalysis& a) {
  const FiniteGroup& g = a.G();
  const std::size_t one = a.cell_of(g.identity());
  std::vector<std::size_t> s;
  for (std::size_t w = 1; w < a.weyl_order(); ++w) {
    // B ∪ BwB is closed iff n b n lands in it for every b.
    const std::size_t cw = a.cell_of_class(w);
    if (cw == one) continue;
    const auto cells = a.product_cells(w, w);
    if (std::all_of(cells.begin(), cells.end(), [&](std::size_t k) { return k == one || k == cw; }))
      s.push_back(w);
  }
  // Canonical order: by the node an adjacent transposition pattern moves,
  // otherwise by representative.
  auto key = [&](std::size_t w) -> std::pair<int, Elem> {
    if (g.matrix_law()) {
      const auto pattern = monomial_pattern(g, a.rep(w));
      std::vector<int> moved;
      for (std::size_t i = 0; i < pattern.size(); ++i)
        if (pattern[i] != static_cast<int>(i)) moved.push_back(static_cast<int>(i));
      if (moved.size() == 2 && moved[1] == moved[0] + 1) return {moved[0], a.rep(w)};
    }
    return {std::numeric_limits<int>::max(), a.rep(w)};
  };
  std::sort(s.begin(), s.end(), [&](std::size_t x, std::size_t y) { return key(x) < key(y); });
  return s;
}

// --- axioms ----------------------------------------------------------------

TitsReport check_axioms(const TitsAnalysis& a) {
  const FiniteGroup& g = a.G();
  const Subgroup& B = a.B();
  TitsReport r;
  r.label = a.candidate().label;
  r.group_order = g.order();
  r.b_order = B.order();
  r.n_order = a.N().order();
  r.h_order = a.H().order();
  r.weyl_order = a.weyl_order();
  r.rank = static_cast<int>(a.S().size());
  r.h_normal_in_n = true;

  r.t1_generates = join(B, a.N()).order() == g.order();

  r.t2_holds = true;
  for (std::size_t w = 0; w < a.weyl_order(); ++w)
    if (!a.word(w)) r.t2_holds = false;
  for (std::size_t s : a.S())
    if (a.weyl_mul(s, s) != 0) r.t2_holds = false;

  r.t3_holds = true;
  for (std::size_t s : a.S())
    for (std::size_t w = 0; w < a.weyl_order() && r.t3_holds; ++w) {
      const std::size_t c1 = a.cell_of_class(w);
      const std::size_t c2 = a.cell_of_class(a.weyl_mul(s, w));
      for (std::size_t k : a.product_cells(s, w))
        if (k != c1 && k != c2) r.t3_holds = false;
    }

  r.t4_holds = true;
  for (std::size_t s : a.S()) {
    const Elem ns = a.rep(s);
    if (std::all_of(B.generators().begin(), B.generators().end(),
                    [&](Elem b) { return B.contains(g.conj(ns, b)); }))
      r.t4_holds = false;
  }

  std::set<std::size_t> distinct;
  for (std::size_t w = 0; w < a.weyl_order(); ++w) distinct.insert(a.cell_of_class(w));
  r.bruhat_bijective = distinct.size() == a.weyl_order() && a.num_cells() == a.weyl_order();

  r.self_normalizing = true;
  for (Elem x = 0; x < g.order() && r.self_normalizing; ++x) {
    if (B.contains(x)) continue;
    if (std::all_of(B.generators().begin(), B.generators().end(),
                    [&](Elem b) { return B.contains(g.conj(x, b)); }))
      r.self_normalizing = false;
  }

  for (std::size_t s : a.S()) r.s_set.push_back(g.format(a.rep(s)));
  for (std::size_t w = 0; w < a.weyl_order(); ++w)
    r.cells.push_back({a.word_key(w), a.length(w), a.cell_size(a.cell_of_class(w))});
  std::sort(r.cells.begin(), r.cells.end(), [](const BruhatCell& x, const BruhatCell& y) {
    return std::tie(x.length, x.word) < std::tie(y.length, y.word);
  });
  return r;
}

TitsReport check_axioms(const TitsSystemCandidate& c) {
  try {
    return check_axioms(TitsAnalysis(c));
  } catch (const HNotNormal&) {
    TitsReport r;
    r.label = c.label;
    r.group_order = c.G->order();
    r.b_order = c.B.order();
    r.n_order = c.N.order();
    r.h_order = intersection(c.B, c.N).order();
    return r;
  }
}

bool cell_size_formula_check(const TitsAnalysis& a, int n, int p) {
  if (n < 2) throw RankTooSmall("cell size formula needs n >= 2");
  const WeylGroup W(build_root_system({Family::A, n - 1}));
  const auto census = W.length_census(a.G().order());

  std::vector<std::size_t> ours(census.size(), 0);
  for (std::size_t w = 0; w < a.weyl_order(); ++w) {
    const int len = a.length(w);
    if (len < 0 || static_cast<std::size_t>(len) >= ours.size()) return false;
    ++ours[static_cast<std::size_t>(len)];
    std::size_t expected = a.B().order();
    for (int k = 0; k < len; ++k) expected *= static_cast<std::size_t>(p);
    if (a.cell_size(a.cell_of_class(w)) != expected) return false;
  }
  if (ours != census) return false;

  std::size_t total = 0, pk = 1;
  for (std::size_t k = 0; k < census.size(); ++k, pk *= static_cast<std::size_t>(p))
    total += census[k] * pk * a.B().order();
  return total == sl_order(n, p) && total == a.G().order();
}

bool star_property_check(const TitsAnalysis& a) {
  for (std::size_t s : a.S())
    for (std::size_t w = 0; w < a.weyl_order(); ++w) {
      const std::size_t sw = a.weyl_mul(s, w);
      if (a.length(w) < 0 || a.length(sw) < 0) return false;
      const auto cells = a.product_cells(s, w);
      const std::size_t c_sw = a.cell_of_class(sw);
      const std::size_t c_w = a.cell_of_class(w);
      const bool single = cells == std::vector<std::size_t>{c_sw};
      if (a.length(sw) > a.length(w)) {
        if (!single) return false;
      } else {
        if (single || c_w == c_sw) return false;
        if (cells != std::vector<std::size_t>{std::min(c_w, c_sw), std::max(c_w, c_sw)}) return false;
      }
    }
  return true;
}

bool intersection_identity_check(const TitsAnalysis& a) {
  Subgroup all = a.B();
  std::size_t w0 = 0;
  int longest = -1;
  bool unique = false;
  for (std::size_t w = 0; w < a.weyl_order(); ++w) {
    all = intersection(all, conjugate(a.B(), a.rep(w)));
    const int len = a.length(w);
    if (len < 0) return false;
    if (len > longest) {
      longest = len;
      w0 = w;
      unique = true;
    } else if (len == longest) {
      unique = false;
    }
  }
  if (!unique || !(all == a.H())) return false;
  return intersection(a.B(), conjugate(a.B(), a.rep(w0))) == a.H();
}

namespace {

// Order of s s' in W against the A_{n-1} Coxeter entry of their nodes.
bool coxeter_orders_match(int n, const std::vector<int>& node, const std::vector<std::size_t>& S,
                          const std::function<std::size_t(std::size_t, std::size_t)>& mul) {
  const IntMatrix m = coxeter_matrix(build_root_system({Family::A, n - 1}));
  for (std::size_t i = 0; i < S.size(); ++i)
    for (std::size_t j = 0; j < S.size(); ++j) {
      const std::size_t st = mul(S[i], S[j]);
      int order = 1;
      for (std::size_t x = st; x != 0; x = mul(x, st)) ++order;
      if (order != m[static_cast<std::size_t>(node[i])][static_cast<std::size_t>(node[j])]) return false;
    }
  return true;
}

constexpr std::size_t npos_class = static_cast<std::size_t>(-1);

}  // namespace

bool coxeter_order_check(const TitsAnalysis& a) {
  const MatrixLaw* law = a.G().matrix_law();
  if (!law) throw InvalidSpec(a.G().name() + " is not a matrix group");
  const int n = law->dimension();
  if (n < 2) throw RankTooSmall("Coxeter check needs n >= 2");
  std::vector<int> node;
  for (std::size_t s : a.S()) {
    const auto pattern = monomial_pattern(a.G(), a.rep(s));
    std::vector<int> moved;
    for (std::size_t i = 0; i < pattern.size(); ++i)
      if (pattern[i] != static_cast<int>(i)) moved.push_back(static_cast<int>(i));
    if (moved.size() != 2 || moved[1] != moved[0] + 1)
      throw InvalidSpec(a.candidate().label + ": distinguished generator is not an adjacent transposition");
    node.push_back(moved[0]);
  }
  std::vector<int> sorted = node;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < n - 1; ++i)
    if (static_cast<int>(sorted.size()) != n - 1 || sorted[static_cast<std::size_t>(i)] != i) return false;

  return coxeter_orders_match(n, node, a.S(), [&](std::size_t x, std::size_t y) { return a.weyl_mul(x, y); });
}

LocalCoxeterResult coxeter_order_check_local(int n, int p) {
  if (n < 2) throw RankTooSmall("Coxeter check needs n >= 2");
  auto law = std::make_shared<const MatrixLaw>(n, p, false);
  const PrimeField& F = law->field();
  const int r = F.primitive_root();
  const auto nn = static_cast<std::size_t>(n);
  auto entry = [&](Encoding& m, int i, int j) -> std::uint8_t& { return m[static_cast<std::size_t>(i * n + j)]; };
  auto diag = [&](int i) {  // diag(.., r, r^-1, ..) at i, i+1
    Encoding m = law->identity();
    entry(m, i, i) = static_cast<std::uint8_t>(r);
    entry(m, i + 1, i + 1) = static_cast<std::uint8_t>(F.inv(r));
    return m;
  };
  auto upper = [&](const Encoding& m) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < i; ++j)
        if (law->at(m, i, j) != 0) return false;
    return true;
  };

  LocalCoxeterResult res;
  std::vector<Encoding> b_gens, n_gens;
  for (int i = 0; i + 1 < n; ++i) {
    b_gens.push_back(diag(i));
    n_gens.push_back(diag(i));
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Encoding t = law->identity();
      entry(t, i, j) = 1;
      b_gens.push_back(t);
      Encoding w = law->identity();  // e_i -> e_j, e_j -> -e_i
      entry(w, i, i) = entry(w, j, j) = 0;
      entry(w, j, i) = 1;
      entry(w, i, j) = static_cast<std::uint8_t>(F.neg(1));
      n_gens.push_back(w);
    }
  const std::size_t cap = exhaustive_cap();
  const auto B = FiniteGroup::generate("B", law, b_gens, cap);
  const auto N = FiniteGroup::generate("N", law, n_gens, cap);
  res.b_order = B->order();
  res.n_order = N->order();

  // W = N/H with H = the upper triangular (here diagonal) elements of N.
  std::vector<Elem> h;
  for (Elem x = 0; x < N->order(); ++x)
    if (upper(N->encoding(x))) h.push_back(x);
  std::vector<std::size_t> class_of(N->order(), npos_class);
  std::vector<Elem> reps;
  for (Elem x = 0; x < N->order(); ++x) {
    if (class_of[x] != npos_class) continue;
    for (Elem y : h) class_of[N->mul(x, y)] = reps.size();
    reps.push_back(x);
  }
  res.weyl_order = reps.size();
  auto wmul = [&](std::size_t a, std::size_t b) { return class_of[N->mul(reps[a], reps[b])]; };

  // x ∈ B g B, by a scan over the left factor.
  auto in_double_coset = [&](const Encoding& x, const Encoding& g_inv) {
    for (Elem b = 0; b < B->order(); ++b)
      if (upper(law->multiply(g_inv, law->multiply(B->encoding(B->inv(b)), x)))) return true;
    return false;
  };

  std::vector<std::size_t> S;
  std::vector<int> node;
  for (std::size_t w = 1; w < reps.size(); ++w) {
    const Encoding& nw = N->encoding(reps[w]);
    const Encoding nw_inv = law->invert(nw);
    std::size_t stable = 0;
    for (Elem b = 0; b < B->order(); ++b)
      stable += upper(law->multiply(nw_inv, law->multiply(B->encoding(b), nw)));
    const std::size_t parabolic = B->order() * (1 + B->order() / stable);
    // Cheap refutation first: some n b n outside B ∪ BnB.
    bool refuted = false;
    const std::size_t stride = std::max<std::size_t>(1, B->order() / 16);
    for (Elem b = 0; b < B->order() && !refuted; b += static_cast<Elem>(stride)) {
      const Encoding x = law->multiply(nw, law->multiply(B->encoding(b), nw));
      refuted = !upper(x) && !in_double_coset(x, nw_inv);
    }
    if (refuted) continue;
    std::vector<Encoding> gens = b_gens;
    gens.push_back(nw);
    try {
      if (FiniteGroup::generate("P", law, gens, parabolic)->order() != parabolic) continue;
    } catch (const GroupTooLarge&) {
      continue;
    }
    const auto pattern = monomial_pattern(*N, reps[w]);
    std::vector<int> moved;
    for (std::size_t i = 0; i < pattern.size(); ++i)
      if (pattern[i] != static_cast<int>(i)) moved.push_back(static_cast<int>(i));
    if (moved.size() != 2 || moved[1] != moved[0] + 1) return res;
    S.push_back(w);
    node.push_back(moved[0]);
  }
  res.s_size = S.size();
  std::vector<int> sorted = node;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < n - 1; ++i)
    if (sorted.size() != nn - 1 || sorted[static_cast<std::size_t>(i)] != i) return res;
  res.pass = coxeter_orders_match(n, node, S, wmul);
  return res;
}

// --- classification --------------------------------------------------------

ClassificationFlags classify(const TitsAnalysis& a, std::size_t max_b) {
  const Subgroup& B = a.B();
  const Subgroup& H = a.H();
  if (B.order() > max_b)
    throw CapExceeded("classify: |B| = " + std::to_string(B.order()) + " exceeds " + std::to_string(max_b));
  ClassificationFlags f;

  Subgroup all = B;
  for (Elem n : a.N().elements()) all = intersection(all, conjugate(B, n));
  f.saturated = all == H;

  // Every nilpotent normal U lies in Fit(B), so B = HU for some such U
  // exactly when B = H Fit(B).
  const Subgroup fit = fitting_subgroup(B, max_b);
  f.fitting_order = fit.order();
  f.weakly_split = product_size(H, fit) == B.order();

  if (f.saturated && f.weakly_split) {
    for (auto& u : normal_subgroups(B, 4096, fit)) {
      if (u.order() * H.order() != B.order()) continue;
      if (intersection(H, u).order() != 1) continue;
      f.witness_U = std::move(u);
      break;
    }
    f.split = f.witness_U.has_value();
  }
  if (f.split && !(f.weakly_split && f.saturated)) throw std::logic_error("split without weakly split");
  return f;
}

bool weakly_split_bruteforce(const TitsAnalysis& a, std::size_t max_b) {
  for (const auto& u : nilpotent_normal_subgroups(a.B(), max_b))
    if (product_size(a.H(), u) == a.B().order()) return true;
  return false;
}

// --- constructors ----------------------------------------------------------

namespace {

Subgroup matrix_filter(const GroupPtr& g, const std::function<bool(const Encoding&)>& keep) {
  std::vector<Elem> elems;
  for (Elem x = 0; x < g->order(); ++x)
    if (keep(g->encoding(x))) elems.push_back(x);
  return Subgroup(g, std::move(elems));
}

std::size_t point_index(const GroupAction& action, const std::string& label) {
  for (std::size_t x = 0; x < action.num_points(); ++x)
    if (action.label(x) == label) return x;
  throw std::logic_error("no point labelled " + label);
}

std::string basis_point(int n, int i) {
  std::string s = "[";
  for (int k = 0; k < n; ++k) s += std::string(k ? ":" : "") + (k == i ? "1" : "0");
  return s + "]";
}

}  // namespace

TitsSystemCandidate standard_sl_system(int n, int p) {
  if (n < 2) throw RankTooSmall("SL_n systems need n >= 2");
  auto g = special_linear_group(n, p, exhaustive_cap());
  return {g->name(), g, upper_triangular_B(g), monomial_N(g)};
}

TitsSystemCandidate rank1_from_2transitive(const GroupAction& action, std::size_t x, std::size_t x2,
                                           std::string label) {
  if (x == x2 || x >= action.num_points() || x2 >= action.num_points())
    throw InvalidSpec("rank-1 construction needs two distinct points");
  if (!action.is_2transitive()) throw NotTwoTransitive(action.group().name() + " action is not 2-transitive");
  if (label.empty()) label = action.group().name() + " rank 1";
  return {std::move(label), action.group_ptr(), action.stabilizer(x), action.setwise_stabilizer(x, x2)};
}

TitsSystemCandidate sl_rank1_column_system(int n, int p) {
  if (n < 2) throw RankTooSmall("SL_n systems need n >= 2");
  auto g = special_linear_group(n, p, exhaustive_cap());
  const MatrixLaw& law = *g->matrix_law();
  Subgroup b = matrix_filter(g, [&](const Encoding& m) {
    for (int i = 1; i < n; ++i)
      if (law.at(m, i, 0) != 0) return false;
    return true;
  });
  Subgroup b2 = matrix_filter(g, [&](const Encoding& m) {
    for (int i = 0; i + 1 < n; ++i)
      if (law.at(m, i, n - 1) != 0) return false;
    return true;
  });
  Subgroup h = intersection(b, b2);
  const FiniteGroup& G = *g;
  for (Elem x = 0; x < G.order(); ++x) {
    const bool swaps =
        std::all_of(b.generators().begin(), b.generators().end(), [&](Elem y) { return b2.contains(G.conj(x, y)); }) &&
        std::all_of(b2.generators().begin(), b2.generators().end(), [&](Elem y) { return b.contains(G.conj(x, y)); });
    if (!swaps) continue;
    std::vector<Elem> gens(h.generators().begin(), h.generators().end());
    gens.push_back(x);
    Subgroup nsub = closure(g, gens);
    if (nsub.order() != 2 * h.order()) continue;
    return {g->name() + " column", g, std::move(b), std::move(nsub)};
  }
  throw NoConjugatorFound(g->name() + ": no g with gBg^-1 = B'");
}

TitsSystemCandidate sl_projective_system(int n, int p) {
  if (n < 2) throw RankTooSmall("SL_n systems need n >= 2");
  auto g = special_linear_group(n, p, exhaustive_cap());
  const GroupAction action = projective_space_action(g);
  return rank1_from_2transitive(action, point_index(action, basis_point(n, 0)),
                                point_index(action, basis_point(n, n - 1)), g->name() + " projective");
}

TitsSystemCandidate affine_system(int p) {
  auto g = affine_group(p);
  return rank1_from_2transitive(affine_line_action(g), 0, 1, g->name());
}

NonstandardResult psl3f2_nonstandard() {
  auto g = central_quotient(special_linear_group(3, 2));
  const FiniteGroup& G = *g;
  std::optional<Subgroup> b;
  for (Elem x = 0; x < G.order() && !b; ++x) {
    if (G.element_order(x) != 7) continue;
    for (Elem y = 0; y < G.order(); ++y) {
      if (G.element_order(y) != 3) continue;
      const Elem gens[] = {x, y};
      Subgroup s = closure(g, gens);
      if (s.order() == 21) {
        b = std::move(s);
        break;
      }
    }
  }
  if (!b) throw SubgroupNotFound("no subgroup of order 21 in " + G.name());

  const GroupAction action = coset_action(*b);
  auto candidate = rank1_from_2transitive(action, 0, 1, G.name() + " order-21");
  if (!(candidate.B == *b)) throw std::logic_error("coset stabilizer differs from the chosen subgroup");
  auto flags = classify(TitsAnalysis(candidate));
  NonstandardResult r{std::move(candidate), std::move(flags), action.num_points(), action.is_2transitive(), {}, false};

  const TitsAnalysis standard({G.name(), g, upper_triangular_B(g), monomial_N(g)});
  r.standard_parabolic_orders.push_back(standard.B().order());
  for (std::size_t s : standard.S())
    r.standard_parabolic_orders.push_back(standard.B().order() + standard.cell_size(standard.cell_of_class(s)));
  r.matches_standard = std::find(r.standard_parabolic_orders.begin(), r.standard_parabolic_orders.end(),
                                 b->order()) != r.standard_parabolic_orders.end();
  return r;
}

}  // namespace weylbn
