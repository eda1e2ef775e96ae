#include "weylbn/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <sstream>
#include <stdexcept>

#include "weylbn/errors.hpp"

namespace weylbn {

namespace {

IntVector unit(int dim, int i, std::int64_t value = 1) {
  IntVector v(static_cast<std::size_t>(dim), 0);
  v[static_cast<std::size_t>(i)] = value;
  return v;
}

IntVector combo(int dim, std::initializer_list<std::pair<int, std::int64_t>> terms) {
  IntVector v(static_cast<std::size_t>(dim), 0);
  for (auto [i, c] : terms) v[static_cast<std::size_t>(i)] += c;
  return v;
}

IntVector negated(const IntVector& v) {
  IntVector r(v.size());
  std::transform(v.begin(), v.end(), r.begin(), [](std::int64_t x) { return -x; });
  return r;
}

// +-e_i +- e_j for i < j, each entry multiplied by k.
void add_long_pairs(std::vector<IntVector>& out, int dim, std::int64_t k) {
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1}) out.push_back(combo(dim, {{i, si * k}, {j, sj * k}}));
}

void add_axis(std::vector<IntVector>& out, int dim, std::int64_t k) {
  for (int i = 0; i < dim; ++i) {
    out.push_back(unit(dim, i, k));
    out.push_back(unit(dim, i, -k));
  }
}

std::vector<IntVector> chain_simple(int dim, int count) {
  std::vector<IntVector> simple;
  for (int i = 0; i < count; ++i) simple.push_back(combo(dim, {{i, 1}, {i + 1, -1}}));
  return simple;
}

struct Construction {
  int dim = 0;
  int scale = 1;
  std::vector<IntVector> roots;
  std::vector<IntVector> simple;
};

// E8 in Bourbaki coordinates, doubled.
Construction e8_doubled() {
  Construction c;
  c.dim = 8;
  c.scale = 2;
  add_long_pairs(c.roots, 8, 2);
  for (unsigned mask = 0; mask < 256; ++mask) {
    if (__builtin_popcount(mask) % 2 != 0) continue;
    IntVector v(8);
    for (int i = 0; i < 8; ++i) v[static_cast<std::size_t>(i)] = (mask >> i) & 1u ? -1 : 1;
    c.roots.push_back(v);
  }
  c.simple.push_back({1, -1, -1, -1, -1, -1, -1, 1});
  c.simple.push_back(combo(8, {{0, 2}, {1, 2}}));
  for (int i = 0; i < 6; ++i) c.simple.push_back(combo(8, {{i, -2}, {i + 1, 2}}));
  return c;
}

Construction construct(const RootSystemSpec& spec) {
  const int n = spec.rank;
  Construction c;
  switch (spec.family) {
    case Family::A:
      c.dim = n + 1;
      for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j)
          if (i != j) c.roots.push_back(combo(c.dim, {{i, 1}, {j, -1}}));
      c.simple = chain_simple(c.dim, n);
      break;
    case Family::B:
    case Family::C:
    case Family::BC:
      c.dim = n;
      add_long_pairs(c.roots, n, 1);
      if (spec.family != Family::C) add_axis(c.roots, n, 1);
      if (spec.family != Family::B) add_axis(c.roots, n, 2);
      c.simple = chain_simple(n, n - 1);
      c.simple.push_back(unit(n, n - 1, spec.family == Family::C ? 2 : 1));
      break;
    case Family::D:
      c.dim = n;
      add_long_pairs(c.roots, n, 1);
      c.simple = chain_simple(n, n - 1);
      c.simple.push_back(combo(n, {{n - 2, 1}, {n - 1, 1}}));
      break;
    case Family::G:
      c.dim = 3;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          if (i == j) continue;
          c.roots.push_back(combo(3, {{i, 1}, {j, -1}}));
        }
      for (int i = 0; i < 3; ++i) {
        IntVector v{-1, -1, -1};
        v[static_cast<std::size_t>(i)] = 2;
        c.roots.push_back(v);
        c.roots.push_back(negated(v));
      }
      c.simple = {combo(3, {{0, 1}, {1, -1}}), IntVector{-2, 1, 1}};
      break;
    case Family::F:
      c.dim = 4;
      c.scale = 2;
      add_axis(c.roots, 4, 2);
      add_long_pairs(c.roots, 4, 2);
      for (unsigned mask = 0; mask < 16; ++mask) {
        IntVector v(4);
        for (int i = 0; i < 4; ++i) v[static_cast<std::size_t>(i)] = (mask >> i) & 1u ? -1 : 1;
        c.roots.push_back(v);
      }
      c.simple = {IntVector{0, 2, -2, 0}, IntVector{0, 0, 2, -2}, IntVector{0, 0, 0, 2},
                  IntVector{1, -1, -1, -1}};
      break;
    case Family::E: {
      c = e8_doubled();
      // E7 and E6 are the E8 roots orthogonal to e7+e8 (and also e6+e8).
      std::vector<IntVector> normals;
      if (n <= 7) normals.push_back(combo(8, {{6, 1}, {7, 1}}));
      if (n <= 6) normals.push_back(combo(8, {{5, 1}, {7, 1}}));
      std::erase_if(c.roots, [&](const IntVector& r) {
        return std::any_of(normals.begin(), normals.end(),
                           [&](const IntVector& u) { return dot(r, u) != 0; });
      });
      c.simple.resize(static_cast<std::size_t>(n));
      break;
    }
  }
  return c;
}

}  // namespace

std::string_view to_string(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::E: return "E";
    case Family::F: return "F";
    case Family::G: return "G";
    case Family::BC: return "BC";
  }
  return "?";
}

Family parse_family(std::string_view text) {
  std::string up;
  for (char ch : text) up.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(ch))));
  for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G,
                   Family::BC})
    if (up == to_string(f)) return f;
  throw InvalidSpec("unknown root system family '" + std::string(text) + "'");
}

bool RootSystemSpec::admissible() const noexcept {
  switch (family) {
    case Family::E: return rank >= 6 && rank <= 8;
    case Family::F: return rank == 4;
    case Family::G: return rank == 2;
    case Family::D: return rank >= 3;
    default: return rank >= 1;
  }
}

void RootSystemSpec::validate() const {
  if (!admissible()) throw InvalidSpec("no irreducible root system of type " + label());
}

std::string RootSystemSpec::label() const {
  return std::string(to_string(family)) + std::to_string(rank);
}

std::int64_t dot(std::span<const std::int64_t> x, std::span<const std::int64_t> y) {
  if (x.size() != y.size()) throw std::invalid_argument("dot: dimension mismatch");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

RootSystem::RootSystem(RootSystemSpec spec, int ambient_dim, int scale,
                       std::vector<IntVector> roots, const std::vector<IntVector>& simple_roots)
    : spec_(spec), ambient_dim_(ambient_dim), scale_(scale), roots_(std::move(roots)) {
  std::sort(roots_.begin(), roots_.end());
  if (std::adjacent_find(roots_.begin(), roots_.end()) != roots_.end())
    throw std::logic_error("duplicate root in construction of " + spec_.label());

  const std::size_t count = roots_.size();
  negation_.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    auto j = find(negated(roots_[i]));
    if (!j) throw std::logic_error(spec_.label() + ": root set not closed under negation");
    negation_[i] = *j;
  }

  for (const auto& s : simple_roots) {
    auto j = find(s);
    if (!j) throw std::logic_error(spec_.label() + ": simple root is not a root");
    simple_.push_back(*j);
  }

  // Positive roots are reached from the simple roots by adding simple roots.
  const auto r = static_cast<std::size_t>(spec_.rank);
  coefficients_.assign(count, IntVector{});
  std::deque<std::size_t> queue;
  for (std::size_t k = 0; k < r; ++k) {
    coefficients_[simple_[k]] = IntVector(r, 0);
    coefficients_[simple_[k]][k] = 1;
    queue.push_back(simple_[k]);
  }
  std::size_t reached = r;
  while (!queue.empty()) {
    const std::size_t b = queue.front();
    queue.pop_front();
    for (std::size_t k = 0; k < r; ++k) {
      IntVector sum = roots_[b];
      const auto& s = roots_[simple_[k]];
      for (std::size_t d = 0; d < sum.size(); ++d) sum[d] += s[d];
      auto j = find(sum);
      if (!j || !coefficients_[*j].empty()) continue;
      coefficients_[*j] = coefficients_[b];
      coefficients_[*j][k] += 1;
      queue.push_back(*j);
      ++reached;
    }
  }
  if (2 * reached != count)
    throw std::logic_error(spec_.label() + ": positive roots not generated by simple roots");
  for (std::size_t i = 0; i < count; ++i)
    if (coefficients_[i].empty() && !coefficients_[negation_[i]].empty())
      coefficients_[i] = negated(coefficients_[negation_[i]]);

  positive_.assign(count, 0);
  for (std::size_t i = 0; i < count; ++i) {
    const auto& c = coefficients_[i];
    auto first = std::find_if(c.begin(), c.end(), [](std::int64_t x) { return x != 0; });
    positive_[i] = first != c.end() && *first > 0;
  }

  cartan_.assign(r, std::vector<int>(r, 0));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      cartan_[i][j] = static_cast<int>(coroot_pairing(*this, simple_[j], roots_[simple_[i]]));

  if (auto problem = check_invariants(); !problem.empty())
    throw std::logic_error(spec_.label() + ": " + problem);
}

std::optional<std::size_t> RootSystem::find(std::span<const std::int64_t> v) const {
  auto it = std::lower_bound(roots_.begin(), roots_.end(), v,
                             [](const IntVector& a, std::span<const std::int64_t> b) {
                               return std::lexicographical_compare(a.begin(), a.end(), b.begin(),
                                                                   b.end());
                             });
  if (it == roots_.end() || !std::equal(it->begin(), it->end(), v.begin(), v.end()))
    return std::nullopt;
  return static_cast<std::size_t>(it - roots_.begin());
}

bool RootSystem::adjacent(Node a, Node b) const {
  return a != b && cartan_.at(static_cast<std::size_t>(a)).at(static_cast<std::size_t>(b)) != 0;
}

int RootSystem::degree(Node a) const {
  int d = 0;
  for (Node b = 0; b < rank(); ++b) d += adjacent(a, b);
  return d;
}

std::string RootSystem::check_invariants() const {
  const std::size_t count = roots_.size();
  std::ostringstream err;
  for (std::size_t i = 0; i < count; ++i) {
    if (negation_[negation_[i]] != i || negation_[i] == i) return "negation is not an involution";
    if (positive_[i] == positive_[negation_[i]]) return "root and its negative share a sign";
  }
  const auto npos = std::count(positive_.begin(), positive_.end(), char{1});
  if (2 * static_cast<std::size_t>(npos) != count) return "positive roots are not half of all roots";

  for (std::size_t a = 0; a < count; ++a)
    for (std::size_t b = 0; b < count; ++b)
      if (!find(reflect(*this, a, roots_[b]))) {
        err << "reflection of root " << b << " in root " << a << " is not a root";
        return err.str();
      }

  for (std::size_t i = 0; i < cartan_.size(); ++i)
    for (std::size_t j = 0; j < cartan_.size(); ++j) {
      const int c = cartan_[i][j];
      if (i == j ? c != 2 : (c > 0 || c < -3)) return "Cartan entry out of range";
      if (i != j && is_reduced() && (c == 0) != (cartan_[j][i] == 0))
        return "Cartan matrix is not symmetrizable";
    }

  // Greedy subtraction of simple roots recovers each positive root's coefficients.
  const auto r = static_cast<std::size_t>(spec_.rank);
  for (std::size_t i = 0; i < count; ++i) {
    if (!positive_[i]) continue;
    IntVector v = roots_[i];
    IntVector coeff(r, 0);
    for (;;) {
      bool stepped = false;
      for (std::size_t k = 0; k < r && !stepped; ++k) {
        const auto& s = roots_[simple_[k]];
        if (v == s) {
          coeff[k] += 1;
          v.assign(v.size(), 0);
          stepped = true;
          break;
        }
        IntVector diff = v;
        for (std::size_t d = 0; d < diff.size(); ++d) diff[d] -= s[d];
        if (find(diff)) {
          v = std::move(diff);
          coeff[k] += 1;
          stepped = true;
        }
      }
      if (std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; })) break;
      if (!stepped) return "positive root is not a sum of simple roots";
    }
    if (coeff != coefficients_[i]) return "greedy simple-root decomposition disagrees";
    if (std::any_of(coeff.begin(), coeff.end(), [](std::int64_t x) { return x < 0; }))
      return "positive root with a negative coefficient";
  }
  return {};
}

RootSystem build_root_system(const RootSystemSpec& spec) {
  spec.validate();
  Construction c = construct(spec);
  return RootSystem(spec, c.dim, c.scale, std::move(c.roots), c.simple);
}

std::int64_t coroot_pairing(const RootSystem& rs, std::size_t a,
                            std::span<const std::int64_t> v) {
  const auto& alpha = rs.root(a);
  const std::int64_t num = 2 * dot(v, alpha);
  const std::int64_t den = dot(alpha, alpha);
  if (num % den != 0)
    throw NonCrystallographicInput("<v, a^vee> is not an integer for root " + std::to_string(a));
  return num / den;
}

IntVector reflect(const RootSystem& rs, std::size_t a, std::span<const std::int64_t> v) {
  const std::int64_t k = coroot_pairing(rs, a, v);
  const auto& alpha = rs.root(a);
  IntVector out(v.begin(), v.end());
  for (std::size_t d = 0; d < out.size(); ++d) out[d] -= k * alpha[d];
  return out;
}

IntMatrix coxeter_matrix(const RootSystem& rs) {
  if (!rs.is_reduced()) throw NotReduced(rs.spec().label() + " is not reduced; use its core");
  const auto r = static_cast<std::size_t>(rs.rank());
  IntMatrix m(r, std::vector<int>(r, 1));
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = a + 1; b < r; ++b) {
      const std::size_t ra = rs.simple_root(static_cast<Node>(a));
      const std::size_t rb = rs.simple_root(static_cast<Node>(b));
      // The product fixes the orthogonal complement of the root span, so it
      // suffices to follow the simple roots.
      std::vector<IntVector> current;
      for (std::size_t k = 0; k < r; ++k) current.push_back(rs.root(rs.simple_root(static_cast<Node>(k))));
      int order = 0;
      for (;;) {
        ++order;
        bool identity = true;
        for (std::size_t k = 0; k < r; ++k) {
          current[k] = reflect(rs, ra, reflect(rs, rb, current[k]));
          identity = identity && current[k] == rs.root(rs.simple_root(static_cast<Node>(k)));
        }
        if (identity) break;
        if (order > 12) throw std::logic_error("product of simple reflections has order > 12");
      }
      m[a][b] = m[b][a] = order;
    }
  if (m != coxeter_matrix_from_cartan(rs.cartan()))
    throw std::logic_error(rs.spec().label() + ": Coxeter matrix disagrees with Cartan table");
  return m;
}

IntMatrix coxeter_matrix_from_cartan(const IntMatrix& cartan) {
  static constexpr int kOrder[] = {2, 3, 4, 6};
  const std::size_t r = cartan.size();
  IntMatrix m(r, std::vector<int>(r, 1));
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b) {
      if (a == b) continue;
      const int prod = cartan[a][b] * cartan[b][a];
      if (prod < 0 || prod > 3) throw std::logic_error("Cartan product out of range");
      m[a][b] = kOrder[prod];
    }
  return m;
}

RootSystem nondivisible_core(const RootSystem& rs) {
  if (rs.is_reduced()) throw NotNonReduced(rs.spec().label() + " is already reduced");
  std::vector<IntVector> kept;
  for (const auto& v : rs.roots()) {
    bool divisible = std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x % 2 == 0; });
    if (divisible) {
      IntVector half(v.size());
      std::transform(v.begin(), v.end(), half.begin(), [](std::int64_t x) { return x / 2; });
      divisible = rs.find(half).has_value();
    }
    if (!divisible) kept.push_back(v);
  }
  std::vector<IntVector> simple;
  for (std::size_t s : rs.simple_indices()) simple.push_back(rs.root(s));
  const RootSystemSpec core_spec{Family::B, rs.rank()};
  RootSystem core(core_spec, rs.ambient_dim(), rs.scale(), std::move(kept), simple);
  if (core.cartan() != build_root_system(core_spec).cartan())
    throw std::logic_error("non-divisible core of " + rs.spec().label() + " is not of type B");
  return core;
}

RootSystem reduced_form(const RootSystem& rs) {
  return rs.is_reduced() ? rs : nondivisible_core(rs);
}

bool is_end_node(const RootSystem& rs, Node a) { return rs.degree(a) == 1; }

std::vector<Node> dynkin_path(const RootSystem& rs, Node from, Node to) {
  const int r = rs.rank();
  if (from < 0 || from >= r || to < 0 || to >= r) throw std::out_of_range("dynkin_path: bad node");
  std::vector<Node> parent(static_cast<std::size_t>(r), -1);
  std::deque<Node> queue{from};
  parent[static_cast<std::size_t>(from)] = from;
  while (!queue.empty()) {
    Node x = queue.front();
    queue.pop_front();
    for (Node y = 0; y < r; ++y)
      if (rs.adjacent(x, y) && parent[static_cast<std::size_t>(y)] < 0) {
        parent[static_cast<std::size_t>(y)] = x;
        queue.push_back(y);
      }
  }
  if (parent[static_cast<std::size_t>(to)] < 0) throw std::logic_error("Dynkin diagram disconnected");
  std::vector<Node> path{to};
  while (path.back() != from) path.push_back(parent[static_cast<std::size_t>(path.back())]);
  std::reverse(path.begin(), path.end());
  return path;
}

std::optional<Node> branch_node(const RootSystem& rs) {
  for (Node a = 0; a < rs.rank(); ++a)
    if (rs.degree(a) >= 3) return a;
  return std::nullopt;
}

bool is_type_a_diagram(const RootSystem& rs) {
  if (!rs.is_reduced()) return false;
  for (Node a = 0; a < rs.rank(); ++a)
    for (Node b = 0; b < rs.rank(); ++b)
      if (rs.adjacent(a, b) && rs.cartan()[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] != -1)
        return false;
  return !branch_node(rs).has_value();
}

}  // namespace weylbn
