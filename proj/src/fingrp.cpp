#include "weylbn/fingrp.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "weylbn/errors.hpp"

namespace weylbn {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::vector<int> prime_divisors(std::size_t n) {
  std::vector<int> out;
  for (std::size_t d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(static_cast<int>(d));
      while (n % d == 0) n /= d;
    }
  if (n > 1) out.push_back(static_cast<int>(n));
  return out;
}

bool is_power_of(std::size_t n, int p) {
  while (n % static_cast<std::size_t>(p) == 0) n /= static_cast<std::size_t>(p);
  return n == 1;
}

const MatrixLaw& require_matrix(const FiniteGroup& g) {
  const MatrixLaw* law = g.matrix_law();
  if (!law) throw InvalidSpec(g.name() + " is not a matrix group");
  return *law;
}

Subgroup filter(const GroupPtr& g, const std::function<bool(const Encoding&)>& keep) {
  std::vector<Elem> elems;
  for (Elem x = 0; x < g->order(); ++x)
    if (keep(g->encoding(x))) elems.push_back(x);
  return Subgroup(g, std::move(elems));
}

}  // namespace

// --- PrimeField ------------------------------------------------------------

PrimeField::PrimeField(int p) : p_(p) {
  if (!is_prime(p) || p > 251) throw InvalidSpec(std::to_string(p) + " is not a supported prime");
}

int PrimeField::inv(int a) const {
  a %= p_;
  if (a == 0) throw std::domain_error("inverse of 0 in F_p");
  for (int b = 1; b < p_; ++b)
    if (mul(a, b) == 1) return b;
  throw std::logic_error("F_p has no inverse for a nonzero element");
}

int PrimeField::primitive_root() const {
  for (int g = 1; g < p_; ++g) {
    int x = 1;
    int order = 0;
    do {
      x = mul(x, g);
      ++order;
    } while (x != 1);
    if (order == p_ - 1) return g;
  }
  throw std::logic_error("no primitive root");
}

std::size_t EncodingHash::operator()(const Encoding& e) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto b : e) h = (h ^ b) * 1099511628211ull;
  return h;
}

// --- laws ----------------------------------------------------------------

MatrixLaw::MatrixLaw(int n, int p, bool projective) : n_(n), field_(p), projective_(projective) {
  if (n < 1 || n > 8) throw InvalidSpec("matrix dimension out of range");
}

Encoding MatrixLaw::identity() const {
  Encoding m(static_cast<std::size_t>(n_ * n_), 0);
  for (int i = 0; i < n_; ++i) m[static_cast<std::size_t>(i * n_ + i)] = 1;
  return m;
}

Encoding MatrixLaw::multiply(const Encoding& a, const Encoding& b) const {
  const int p = field_.p();
  Encoding c(static_cast<std::size_t>(n_ * n_));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      int s = 0;
      for (int k = 0; k < n_; ++k) s += a[static_cast<std::size_t>(i * n_ + k)] * b[static_cast<std::size_t>(k * n_ + j)];
      c[static_cast<std::size_t>(i * n_ + j)] = static_cast<std::uint8_t>(s % p);
    }
  return projective_ ? canonical(std::move(c)) : c;
}

Encoding MatrixLaw::invert(const Encoding& a) const {
  const auto n = static_cast<std::size_t>(n_);
  std::vector<std::vector<int>> aug(n, std::vector<int>(2 * n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = a[i * n + j];
    aug[i][n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && aug[pivot][col] == 0) ++pivot;
    if (pivot == n) throw std::domain_error("singular matrix");
    std::swap(aug[pivot], aug[col]);
    const int inv = field_.inv(aug[col][col]);
    for (auto& x : aug[col]) x = field_.mul(x, inv);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || aug[r][col] == 0) continue;
      const int f = aug[r][col];
      for (std::size_t k = 0; k < 2 * n; ++k) aug[r][k] = field_.sub(aug[r][k], field_.mul(f, aug[col][k]));
    }
  }
  Encoding out(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i * n + j] = static_cast<std::uint8_t>(aug[i][n + j]);
  return projective_ ? canonical(std::move(out)) : out;
}

std::string MatrixLaw::format(const Encoding& a) const {
  std::string out;
  const bool wide = field_.p() > 10;
  for (int i = 0; i < n_; ++i) {
    if (i) out += ';';
    for (int j = 0; j < n_; ++j) {
      if (wide && j) out += ',';
      out += std::to_string(at(a, i, j));
    }
  }
  return out;
}

Encoding MatrixLaw::canonical(Encoding m) const {
  if (!projective_) return m;
  Encoding best = m;
  for (int lambda = 2; lambda < field_.p(); ++lambda) {
    Encoding c(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) c[i] = static_cast<std::uint8_t>(field_.mul(m[i], lambda));
    if (c < best) best = std::move(c);
  }
  return best;
}

int MatrixLaw::determinant(const Encoding& m) const {
  const auto n = static_cast<std::size_t>(n_);
  std::vector<std::vector<int>> a(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i * n + j];
  int det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = field_.neg(det);
    }
    det = field_.mul(det, a[col][col]);
    const int inv = field_.inv(a[col][col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      const int f = field_.mul(a[r][col], inv);
      for (std::size_t k = col; k < n; ++k) a[r][k] = field_.sub(a[r][k], field_.mul(f, a[col][k]));
    }
  }
  return det;
}

std::vector<std::uint8_t> MatrixLaw::apply(const Encoding& m, std::span<const std::uint8_t> v) const {
  std::vector<std::uint8_t> out(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) {
    int s = 0;
    for (int k = 0; k < n_; ++k) s += at(m, i, k) * v[static_cast<std::size_t>(k)];
    out[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(s % field_.p());
  }
  return out;
}

AffineLaw::AffineLaw(int p) : field_(p) {}

Encoding AffineLaw::identity() const { return {0, 1}; }

Encoding AffineLaw::multiply(const Encoding& a, const Encoding& b) const {
  return {static_cast<std::uint8_t>(field_.add(a[0], field_.mul(a[1], b[0]))),
          static_cast<std::uint8_t>(field_.mul(a[1], b[1]))};
}

Encoding AffineLaw::invert(const Encoding& a) const {
  const int xi = field_.inv(a[1]);
  return {static_cast<std::uint8_t>(field_.neg(field_.mul(xi, a[0]))), static_cast<std::uint8_t>(xi)};
}

std::string AffineLaw::format(const Encoding& a) const {
  return "(" + std::to_string(a[0]) + "," + std::to_string(a[1]) + ")";
}

// --- FiniteGroup -----------------------------------------------------------

std::shared_ptr<const FiniteGroup> FiniteGroup::generate(std::string name,
                                                         std::shared_ptr<const ElementLaw> law,
                                                         std::vector<Encoding> generators,
                                                         std::size_t max_order) {
  auto g = std::make_shared<FiniteGroup>();
  g->name_ = std::move(name);
  g->law_ = std::move(law);
  g->enc_.push_back(g->law_->identity());
  g->index_.emplace(g->enc_.front(), 0);
  for (std::size_t head = 0; head < g->enc_.size(); ++head)
    for (const auto& s : generators) {
      Encoding y = g->law_->multiply(g->enc_[head], s);
      if (g->index_.contains(y)) continue;
      if (g->enc_.size() == max_order)
        throw GroupTooLarge(g->name_ + " has more than " + std::to_string(max_order) + " elements");
      g->index_.emplace(y, static_cast<Elem>(g->enc_.size()));
      g->enc_.push_back(std::move(y));
    }
  for (const auto& s : generators) {
    const Elem x = g->index_.at(s);
    if (x != 0 && std::find(g->gens_.begin(), g->gens_.end(), x) == g->gens_.end()) g->gens_.push_back(x);
  }
  g->inv_.resize(g->enc_.size());
  for (Elem x = 0; x < g->enc_.size(); ++x) g->inv_[x] = g->index_.at(g->law_->invert(g->enc_[x]));
  const std::size_t n = g->enc_.size();
  if (n <= kTableLimit) {
    g->table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        g->table_[a * n + b] = static_cast<std::uint16_t>(g->index_.at(g->law_->multiply(g->enc_[a], g->enc_[b])));
  }
  return g;
}

Elem FiniteGroup::mul(Elem a, Elem b) const {
  if (!table_.empty()) return table_[static_cast<std::size_t>(a) * enc_.size() + b];
  return index_.at(law_->multiply(enc_[a], enc_[b]));
}

int FiniteGroup::element_order(Elem a) const {
  int k = 1;
  for (Elem x = a; x != identity(); x = mul(x, a)) ++k;
  return k;
}

std::optional<Elem> FiniteGroup::find(const Encoding& e) const {
  auto it = index_.find(e);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::string FiniteGroup::verify_axioms(std::size_t samples, std::uint64_t seed) const {
  const std::size_t n = order();
  for (Elem a = 0; a < n; ++a) {
    if (mul(a, identity()) != a || mul(identity(), a) != a) return "identity law fails";
    if (mul(a, inv(a)) != identity() || mul(inv(a), a) != identity()) return "inverse law fails";
    for (Elem s : gens_)
      if (!find(law_->multiply(enc_[a], enc_[s])) || !find(law_->multiply(enc_[s], enc_[a])))
        return "not closed under multiplication by generators";
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(n - 1));
  for (std::size_t i = 0; i < samples; ++i) {
    const Elem a = pick(rng), b = pick(rng), c = pick(rng);
    if (mul(mul(a, b), c) != mul(a, mul(b, c))) return "associativity fails";
  }
  return {};
}

void FiniteGroup::write_table_csv(std::ostream& out) const {
  const std::size_t n = order();
  out << "*";
  for (Elem b = 0; b < n; ++b) out << ',' << format(b);
  out << '\n';
  for (Elem a = 0; a < n; ++a) {
    out << format(a);
    for (Elem b = 0; b < n; ++b) out << ',' << format(mul(a, b));
    out << '\n';
  }
}

// --- Subgroup --------------------------------------------------------------

namespace {

std::vector<Elem> bfs_closure(const FiniteGroup& g, std::span<const Elem> gens) {
  std::vector<char> seen(g.order(), 0);
  std::vector<Elem> elems{g.identity()};
  seen[g.identity()] = 1;
  for (std::size_t head = 0; head < elems.size(); ++head)
    for (Elem s : gens) {
      const Elem y = g.mul(elems[head], s);
      if (!seen[y]) {
        seen[y] = 1;
        elems.push_back(y);
      }
    }
  std::sort(elems.begin(), elems.end());
  return elems;
}

}  // namespace

Subgroup::Subgroup(GroupPtr group, std::vector<Elem> elements) : group_(std::move(group)) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  std::vector<char> inside(group_->order(), 0);
  for (Elem x : elements) inside.at(x) = 1;
  // Greedy generating set: add the first element outside the current span.
  std::vector<Elem> span{group_->identity()};
  member_.assign(group_->order(), 0);
  member_[group_->identity()] = 1;
  for (Elem x : elements) {
    if (member_[x]) continue;
    gens_.push_back(x);
    span = bfs_closure(*group_, gens_);
    for (Elem y : span) {
      if (!inside[y]) throw std::invalid_argument("element set is not a subgroup of " + group_->name());
      member_[y] = 1;
    }
  }
  if (span.size() != elements.size())
    throw std::invalid_argument("element set is not a subgroup of " + group_->name());
  elems_ = std::move(span);
}

Subgroup::Subgroup(Trusted, GroupPtr group, std::vector<Elem> elements, std::vector<Elem> gens)
    : group_(std::move(group)), elems_(std::move(elements)), gens_(std::move(gens)) {
  member_.assign(group_->order(), 0);
  for (Elem x : elems_) member_[x] = 1;
  std::erase(gens_, group_->identity());
}

Subgroup Subgroup::whole(GroupPtr group) {
  std::vector<Elem> gens(group->generators().begin(), group->generators().end());
  std::vector<Elem> all(group->order());
  for (Elem x = 0; x < all.size(); ++x) all[x] = x;
  return Subgroup(Trusted{}, std::move(group), std::move(all), std::move(gens));
}

Subgroup Subgroup::trivial(GroupPtr group) {
  const Elem e = group->identity();
  return Subgroup(Trusted{}, std::move(group), {e}, {});
}

bool Subgroup::is_subgroup_of(const Subgroup& other) const {
  return std::all_of(elems_.begin(), elems_.end(), [&](Elem x) { return other.contains(x); });
}

Subgroup closure(const GroupPtr& group, std::span<const Elem> generators) {
  std::vector<Elem> gens(generators.begin(), generators.end());
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  auto elems = bfs_closure(*group, gens);
  return Subgroup(Subgroup::Trusted{}, group, std::move(elems), std::move(gens));
}

Subgroup intersection(const Subgroup& a, const Subgroup& b) {
  std::vector<Elem> elems;
  for (Elem x : a.elements())
    if (b.contains(x)) elems.push_back(x);
  return Subgroup(a.group_ptr(), std::move(elems));
}

Subgroup conjugate(const Subgroup& h, Elem g) {
  const FiniteGroup& G = h.group();
  std::vector<Elem> elems, gens;
  for (Elem x : h.elements()) elems.push_back(G.conj(g, x));
  for (Elem x : h.generators()) gens.push_back(G.conj(g, x));
  std::sort(elems.begin(), elems.end());
  return Subgroup(Subgroup::Trusted{}, h.group_ptr(), std::move(elems), std::move(gens));
}

Subgroup join(const Subgroup& a, const Subgroup& b) {
  std::vector<Elem> gens(a.generators().begin(), a.generators().end());
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return closure(a.group_ptr(), gens);
}

std::size_t product_size(const Subgroup& a, const Subgroup& b) {
  return a.order() * b.order() / intersection(a, b).order();
}

bool is_normal(const Subgroup& h, const Subgroup& k) {
  const FiniteGroup& G = h.group();
  for (Elem g : k.generators())
    for (Elem x : h.generators())
      if (!h.contains(G.conj(g, x))) return false;
  return true;
}

bool is_normal(const Subgroup& h) { return is_normal(h, Subgroup::whole(h.group_ptr())); }

Subgroup normal_closure(const Subgroup& k, std::span<const Elem> seeds) {
  const FiniteGroup& G = k.group();
  std::vector<Elem> gens(seeds.begin(), seeds.end());
  for (;;) {
    Subgroup s = closure(k.group_ptr(), gens);
    bool grew = false;
    for (Elem x : s.generators()) {
      for (Elem g : k.generators()) {
        const Elem y = G.conj(g, x);
        if (!s.contains(y)) {
          gens.push_back(y);
          grew = true;
        }
      }
    }
    if (!grew) return s;
  }
}

std::vector<std::vector<Elem>> conjugacy_classes(const Subgroup& k) {
  const FiniteGroup& G = k.group();
  std::vector<char> done(G.order(), 0);
  std::vector<std::vector<Elem>> classes;
  for (Elem x : k.elements()) {
    if (done[x]) continue;
    std::vector<Elem> cls{x};
    done[x] = 1;
    for (std::size_t head = 0; head < cls.size(); ++head)
      for (Elem g : k.generators()) {
        const Elem y = G.conj(g, cls[head]);
        if (!done[y]) {
          done[y] = 1;
          cls.push_back(y);
        }
      }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

std::vector<Subgroup> normal_subgroups(const Subgroup& k, std::size_t cap,
                                       const std::optional<Subgroup>& within) {
  std::vector<std::vector<Elem>> classes;
  for (auto& c : conjugacy_classes(k))
    if (!within || within->contains(c.front())) classes.push_back(std::move(c));

  std::vector<Subgroup> found{Subgroup::trivial(k.group_ptr())};
  std::set<std::vector<Elem>> seen{{k.group().identity()}};
  for (std::size_t head = 0; head < found.size(); ++head) {
    for (const auto& c : classes) {
      if (found[head].contains(c.front())) continue;
      std::vector<Elem> seeds(found[head].generators().begin(), found[head].generators().end());
      seeds.push_back(c.front());
      Subgroup m = normal_closure(k, seeds);
      std::vector<Elem> key(m.elements().begin(), m.elements().end());
      if (!seen.insert(std::move(key)).second) continue;
      if (found.size() == cap)
        throw CapExceeded("more than " + std::to_string(cap) + " normal subgroups");
      found.push_back(std::move(m));
    }
  }
  std::stable_sort(found.begin(), found.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return std::lexicographical_compare(a.elements().begin(), a.elements().end(),
                                        b.elements().begin(), b.elements().end());
  });
  return found;
}

Subgroup center(const Subgroup& k) {
  const FiniteGroup& G = k.group();
  std::vector<Elem> elems;
  for (Elem x : k.elements())
    if (std::all_of(k.generators().begin(), k.generators().end(),
                    [&](Elem g) { return G.mul(g, x) == G.mul(x, g); }))
      elems.push_back(x);
  return Subgroup(k.group_ptr(), std::move(elems));
}

std::vector<Subgroup> lower_central_series(const Subgroup& h) {
  const FiniteGroup& G = h.group();
  std::vector<Subgroup> series{h};
  for (;;) {
    const Subgroup& last = series.back();
    std::vector<Elem> seeds;
    for (Elem x : last.generators())
      for (Elem y : h.generators()) seeds.push_back(G.commutator(x, y));
    Subgroup next = normal_closure(h, seeds);
    if (next.order() == last.order()) return series;
    series.push_back(std::move(next));
  }
}

bool is_nilpotent(const Subgroup& h) { return lower_central_series(h).back().order() == 1; }

bool is_p_group(const Subgroup& h, int p) { return is_power_of(h.order(), p); }

Subgroup p_core(const Subgroup& h, int p) {
  const FiniteGroup& G = h.group();
  std::vector<Elem> seeds;
  for (const auto& c : conjugacy_classes(h)) {
    const Elem x = c.front();
    if (!is_power_of(static_cast<std::size_t>(G.element_order(x)), p)) continue;
    const Elem one[] = {x};
    if (is_p_group(normal_closure(h, one), p)) seeds.push_back(x);
  }
  Subgroup core = normal_closure(h, seeds);
  if (!is_p_group(core, p) || !is_normal(core, h))
    throw std::logic_error("p-core computation produced a non-normal or non-p subgroup");
  return core;
}

Subgroup fitting_subgroup(const Subgroup& h, std::size_t max_order) {
  if (h.order() > max_order)
    throw CapExceeded("Fitting subgroup: |H| = " + std::to_string(h.order()) + " exceeds " +
                      std::to_string(max_order));
  Subgroup fit = Subgroup::trivial(h.group_ptr());
  for (int p : prime_divisors(h.order())) fit = join(fit, p_core(h, p));
  return fit;
}

std::vector<Subgroup> nilpotent_normal_subgroups(const Subgroup& h, std::size_t max_order) {
  if (h.order() > max_order)
    throw CapExceeded("brute-force search: |H| = " + std::to_string(h.order()) + " exceeds " +
                      std::to_string(max_order));
  std::vector<Subgroup> out;
  for (auto& n : normal_subgroups(h))
    if (is_nilpotent(n)) out.push_back(std::move(n));
  return out;
}

Subgroup fitting_subgroup_bruteforce(const Subgroup& h, std::size_t max_order) {
  const auto candidates = nilpotent_normal_subgroups(h, max_order);
  Subgroup all = Subgroup::trivial(h.group_ptr());
  for (const auto& n : candidates) all = join(all, n);
  if (std::find(candidates.begin(), candidates.end(), all) == candidates.end())
    throw std::logic_error("join of nilpotent normal subgroups is not nilpotent");
  return all;
}

// --- matrix groups ---------------------------------------------------------

std::size_t sl_order(int n, int p) {
  constexpr auto kMax = std::numeric_limits<std::size_t>::max();
  unsigned __int128 order = 1;
  auto times = [&](unsigned __int128 f) {
    order *= f;
    if (order > kMax) order = kMax;
  };
  for (int i = 0; i < n * (n - 1) / 2; ++i) times(static_cast<unsigned>(p));
  for (int i = 2; i <= n; ++i) {
    unsigned __int128 pi = 1;
    for (int k = 0; k < i; ++k) pi = std::min<unsigned __int128>(pi * static_cast<unsigned>(p), kMax);
    times(pi - 1);
  }
  return static_cast<std::size_t>(order);
}

GroupPtr special_linear_group(int n, int p, std::size_t max_order) {
  const PrimeField field(p);
  const std::size_t expected = sl_order(n, p);
  const std::string name = "SL" + std::to_string(n) + "(F" + std::to_string(p) + ")";
  if (expected > max_order)
    throw GroupTooLarge(name + " has order " + std::to_string(expected) + " > " + std::to_string(max_order));
  auto law = std::make_shared<const MatrixLaw>(n, p, false);
  std::vector<Encoding> gens;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      Encoding t = law->identity();
      t[static_cast<std::size_t>(i * n + j)] = 1;
      gens.push_back(std::move(t));
    }
  auto g = FiniteGroup::generate(name, law, std::move(gens), max_order);
  if (g->order() != expected) throw std::logic_error(name + ": enumeration disagrees with order formula");
  return g;
}

GroupPtr central_quotient(const GroupPtr& group) {
  const MatrixLaw& law = require_matrix(*group);
  auto plaw = std::make_shared<const MatrixLaw>(law.dimension(), law.field().p(), true);
  std::vector<Encoding> gens;
  for (Elem s : group->generators()) gens.push_back(plaw->canonical(group->encoding(s)));
  return FiniteGroup::generate("P" + group->name(), plaw, std::move(gens), group->order());
}

GroupPtr affine_group(int p) {
  auto law = std::make_shared<const AffineLaw>(p);
  const auto g = static_cast<std::uint8_t>(law->field().primitive_root());
  std::vector<Encoding> gens{{1, 1}, {0, g}};
  return FiniteGroup::generate("Aff(F" + std::to_string(p) + ")", law, std::move(gens));
}

Subgroup upper_triangular_B(const GroupPtr& g) {
  const MatrixLaw& law = require_matrix(*g);
  const int n = law.dimension();
  return filter(g, [&](const Encoding& m) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < i; ++j)
        if (law.at(m, i, j) != 0) return false;
    return true;
  });
}

Subgroup monomial_N(const GroupPtr& g) {
  const FiniteGroup& G = *g;
  return filter(g, [&](const Encoding& m) { return !monomial_pattern(G, *G.find(m)).empty(); });
}

Subgroup unitriangular_U(const GroupPtr& g) {
  const MatrixLaw& law = require_matrix(*g);
  const int n = law.dimension();
  return filter(g, [&](const Encoding& m) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < i; ++j)
        if (law.at(m, i, j) != 0) return false;
      // In a projective group the diagonal is only constant, not 1.
      const int d = law.at(m, i, i);
      if (law.projective() ? d != law.at(m, 0, 0) : d != 1) return false;
    }
    return true;
  });
}

Subgroup diagonal_T(const GroupPtr& g) {
  const MatrixLaw& law = require_matrix(*g);
  const int n = law.dimension();
  return filter(g, [&](const Encoding& m) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j && law.at(m, i, j) != 0) return false;
    return true;
  });
}

std::vector<int> monomial_pattern(const FiniteGroup& g, Elem x) {
  const MatrixLaw& law = require_matrix(g);
  const int n = law.dimension();
  const Encoding& m = g.encoding(x);
  std::vector<int> pattern(static_cast<std::size_t>(n), -1);
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (law.at(m, i, j) == 0) continue;
      if (pattern[static_cast<std::size_t>(i)] >= 0 || used[static_cast<std::size_t>(j)]) return {};
      pattern[static_cast<std::size_t>(i)] = j;
      used[static_cast<std::size_t>(j)] = 1;
    }
  return pattern;
}

// --- actions -------------------------------------------------------------

GroupAction::GroupAction(GroupPtr group, std::vector<std::string> labels,
                         const std::function<std::size_t(Elem, std::size_t)>& apply)
    : group_(std::move(group)), labels_(std::move(labels)) {
  const std::size_t n = labels_.size();
  table_.resize(group_->order() * n);
  for (Elem g = 0; g < group_->order(); ++g)
    for (std::size_t x = 0; x < n; ++x) {
      const std::size_t y = apply(g, x);
      if (y >= n) throw std::out_of_range("action maps a point outside the point set");
      table_[static_cast<std::size_t>(g) * n + x] = static_cast<std::uint32_t>(y);
    }
}

std::vector<std::size_t> GroupAction::orbit(std::size_t x) const {
  std::vector<char> seen(num_points(), 0);
  std::vector<std::size_t> out{x};
  seen[x] = 1;
  for (std::size_t head = 0; head < out.size(); ++head)
    for (Elem g : group_->generators()) {
      const std::size_t y = apply(g, out[head]);
      if (!seen[y]) {
        seen[y] = 1;
        out.push_back(y);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<std::size_t>> GroupAction::orbits() const {
  std::vector<char> done(num_points(), 0);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t x = 0; x < num_points(); ++x) {
    if (done[x]) continue;
    out.push_back(orbit(x));
    for (std::size_t y : out.back()) done[y] = 1;
  }
  return out;
}

Subgroup GroupAction::stabilizer(std::size_t x) const {
  std::vector<Elem> elems;
  for (Elem g = 0; g < group_->order(); ++g)
    if (apply(g, x) == x) elems.push_back(g);
  return Subgroup(group_, std::move(elems));
}

Subgroup GroupAction::setwise_stabilizer(std::size_t x, std::size_t y) const {
  std::vector<Elem> elems;
  for (Elem g = 0; g < group_->order(); ++g) {
    const std::size_t gx = apply(g, x), gy = apply(g, y);
    if ((gx == x && gy == y) || (gx == y && gy == x)) elems.push_back(g);
  }
  return Subgroup(group_, std::move(elems));
}

bool GroupAction::is_transitive() const { return num_points() > 0 && orbit(0).size() == num_points(); }

bool GroupAction::is_2transitive() const {
  if (num_points() < 2 || !is_transitive()) return false;
  std::vector<char> hit(num_points(), 0);
  const Subgroup stab = stabilizer(0);
  for (Elem g : stab.elements()) hit[apply(g, 1)] = 1;
  return std::count(hit.begin(), hit.end(), char{1}) == static_cast<std::ptrdiff_t>(num_points() - 1);
}

bool GroupAction::is_valid_action() const {
  for (std::size_t x = 0; x < num_points(); ++x)
    if (apply(group_->identity(), x) != x) return false;
  for (Elem g = 0; g < group_->order(); ++g)
    for (Elem h : group_->generators())
      for (std::size_t x = 0; x < num_points(); ++x)
        if (apply(group_->mul(g, h), x) != apply(g, apply(h, x))) return false;
  return true;
}

GroupAction projective_space_action(const GroupPtr& group) {
  const MatrixLaw& law = require_matrix(*group);
  const int n = law.dimension();
  const int p = law.field().p();
  std::vector<std::vector<std::uint8_t>> points;
  std::map<std::vector<std::uint8_t>, std::size_t> index;
  std::vector<std::uint8_t> v(static_cast<std::size_t>(n), 0);
  for (;;) {
    auto first = std::find_if(v.begin(), v.end(), [](std::uint8_t x) { return x != 0; });
    if (first != v.end() && *first == 1) {
      index.emplace(v, points.size());
      points.push_back(v);
    }
    int k = n - 1;
    while (k >= 0 && v[static_cast<std::size_t>(k)] == p - 1) v[static_cast<std::size_t>(k--)] = 0;
    if (k < 0) break;
    ++v[static_cast<std::size_t>(k)];
  }
  std::vector<std::string> labels;
  for (const auto& pt : points) {
    std::string s = "[";
    for (std::size_t i = 0; i < pt.size(); ++i) s += (i ? ":" : "") + std::to_string(pt[i]);
    labels.push_back(s + "]");
  }
  const PrimeField& field = law.field();
  return GroupAction(group, std::move(labels), [&](Elem g, std::size_t x) {
    auto w = law.apply(group->encoding(g), points[x]);
    auto first = std::find_if(w.begin(), w.end(), [](std::uint8_t c) { return c != 0; });
    const int scale = field.inv(*first);
    for (auto& c : w) c = static_cast<std::uint8_t>(field.mul(c, scale));
    return index.at(w);
  });
}

GroupAction projective_space_action(int n, int p) {
  return projective_space_action(special_linear_group(n + 1, p));
}

GroupAction coset_action(const Subgroup& b) {
  const GroupPtr& g = b.group_ptr();
  constexpr auto kUnset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> coset_of(g->order(), kUnset);
  std::vector<Elem> reps;
  for (Elem x = 0; x < g->order(); ++x) {
    if (coset_of[x] != kUnset) continue;
    for (Elem y : b.elements()) coset_of[g->mul(x, y)] = reps.size();
    reps.push_back(x);
  }
  std::vector<std::string> labels;
  for (Elem r : reps) labels.push_back(g->format(r) + "B");
  return GroupAction(g, std::move(labels),
                     [&](Elem x, std::size_t c) { return coset_of[g->mul(x, reps[c])]; });
}

GroupAction affine_line_action(const GroupPtr& affine) {
  const auto* law = dynamic_cast<const AffineLaw*>(&affine->law());
  if (!law) throw InvalidSpec(affine->name() + " is not an affine group");
  const PrimeField& f = law->field();
  std::vector<std::string> labels;
  for (int y = 0; y < f.p(); ++y) labels.push_back(std::to_string(y));
  return GroupAction(affine, std::move(labels), [&](Elem g, std::size_t y) {
    const Encoding& e = affine->encoding(g);
    return static_cast<std::size_t>(f.add(e[0], f.mul(e[1], static_cast<int>(y))));
  });
}

GroupAction regular_action(const GroupPtr& group) {
  std::vector<std::string> labels;
  for (Elem x = 0; x < group->order(); ++x) labels.push_back(group->format(x));
  return GroupAction(group, std::move(labels), [&](Elem g, std::size_t h) {
    return static_cast<std::size_t>(group->mul(g, static_cast<Elem>(h)));
  });
}

}  // namespace weylbn
