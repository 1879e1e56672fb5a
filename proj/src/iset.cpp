#include "tame/iset.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

namespace tame {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

std::string tuple_name(const std::vector<Nat>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t j = 0; j < v.size(); ++j) os << (j ? "," : "") << v[j];
  os << ')';
  return os.str();
}

Nat max_value(const std::vector<Nat>& v) {
  return v.empty() ? 0 : *std::max_element(v.begin(), v.end());
}

// alpha o s_i (1-based i): swap positions i and i+1.
std::vector<Nat> swap_positions(std::vector<Nat> v, int i) {
  std::swap(v[static_cast<std::size_t>(i - 1)], v[static_cast<std::size_t>(i)]);
  return v;
}

// s_i o alpha: swap the values i and i+1.
std::vector<Nat> swap_values(std::vector<Nat> v, int i) {
  for (Nat& x : v) {
    if (x == i)
      x = i + 1;
    else if (x == i + 1)
      x = i;
  }
  return v;
}

std::string level_where(int m) { return "level " + std::to_string(m); }

}  // namespace

// ---------------------------------------------------------------------------

TruncatedISet::TruncatedISet(int truncation, int stable_from,
                             std::vector<std::vector<std::string>> names,
                             std::vector<std::vector<int>> incl,
                             std::vector<std::vector<std::vector<int>>> trans)
    : n_(truncation), stable_from_(stable_from), incl_(std::move(incl)) {
  if (n_ < 0 || stable_from_ < 0 || stable_from_ > n_)
    fail(ErrorKind::ValidationFailed, "need 0 <= stableFrom <= N", "stableFrom");
  const auto levels = static_cast<std::size_t>(n_) + 1;
  if (names.size() != levels || trans.size() != levels ||
      incl_.size() != levels - 1)
    fail(ErrorKind::ValidationFailed, "level data does not match N", "levels");
  for (int m = 0; m <= n_; ++m) {
    try {
      levels_.emplace_back(m, names[static_cast<std::size_t>(m)],
                           trans[static_cast<std::size_t>(m)]);
    } catch (const Error& e) {
      fail(e.kind(), level_where(m) + ": " + e.what(), e.invariant(),
           level_where(m) + " " + e.location());
    }
  }
  for (int m = 0; m < n_; ++m) {
    const auto& inc = incl_[static_cast<std::size_t>(m)];
    if (static_cast<int>(inc.size()) != size(m))
      fail(ErrorKind::ValidationFailed, "inclusion table has wrong size",
           "inclusion", level_where(m));
    for (int v : inc)
      if (v < 0 || v >= size(m + 1))
        fail(ErrorKind::ValidationFailed, "inclusion value out of range",
             "inclusion", level_where(m));
  }
  // Generating relations of I beyond the Coxeter relations.
  for (int m = 0; m < n_; ++m)
    for (int x = 0; x < size(m); ++x) {
      for (int i = 1; i < m; ++i)
        if (include(m, transpose(m, i, x)) != transpose(m + 1, i, include(m, x)))
          fail(ErrorKind::ValidationFailed,
               "inclusion does not commute with s" + std::to_string(i),
               "naturality", level_where(m));
      if (m + 2 <= n_) {
        int y = include(m + 1, include(m, x));
        if (transpose(m + 2, m + 1, y) != y)
          fail(ErrorKind::ValidationFailed,
               "s" + std::to_string(m + 1) +
                   " moves a doubly included element",
               "naturality", level_where(m));
      }
    }
  // Stability: above stableFrom every element comes from the level below.
  for (int m = stable_from_; m < n_; ++m) {
    std::vector<bool> hit(static_cast<std::size_t>(size(m + 1)), false);
    std::deque<int> queue;
    for (int x = 0; x < size(m); ++x) {
      int y = include(m, x);
      if (!hit[static_cast<std::size_t>(y)]) {
        hit[static_cast<std::size_t>(y)] = true;
        queue.push_back(y);
      }
    }
    while (!queue.empty()) {
      int y = queue.front();
      queue.pop_front();
      for (int i = 1; i <= m; ++i) {
        int z = transpose(m + 1, i, y);
        if (!hit[static_cast<std::size_t>(z)]) {
          hit[static_cast<std::size_t>(z)] = true;
          queue.push_back(z);
        }
      }
    }
    for (int y = 0; y < size(m + 1); ++y)
      if (!hit[static_cast<std::size_t>(y)])
        fail(ErrorKind::ValidationFailed,
             name(m + 1, y) + " is not in the image of level " +
                 std::to_string(m),
             "stability", level_where(m + 1));
  }
}

int TruncatedISet::include(int m, int x) const {
  if (m < 0 || m >= n_)
    fail(ErrorKind::TruncationExceeded,
         "inclusion out of " + level_where(m) + " beyond N = " +
             std::to_string(n_));
  return incl_[static_cast<std::size_t>(m)][static_cast<std::size_t>(x)];
}

int TruncatedISet::transpose(int m, int i, int x) const {
  return levels_.at(static_cast<std::size_t>(m)).apply_generator(i, x);
}

int TruncatedISet::apply(const IMorphism& alpha, int x) const {
  const int m = alpha.source;
  const int n = alpha.target;
  if (n > n_)
    fail(ErrorKind::TruncationExceeded,
         "injection into " + std::to_string(n) + " beyond N = " +
             std::to_string(n_));
  for (int k = m; k < n; ++k) x = include(k, x);
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  Permutation sigma(static_cast<std::size_t>(n));
  for (int j = 0; j < m; ++j) {
    Nat v = alpha.values[static_cast<std::size_t>(j)];
    sigma[static_cast<std::size_t>(j)] = static_cast<int>(v) - 1;
    used[static_cast<std::size_t>(v)] = true;
  }
  int next = m;
  for (int v = 1; v <= n; ++v)
    if (!used[static_cast<std::size_t>(v)])
      sigma[static_cast<std::size_t>(next++)] = v - 1;
  return levels_.at(static_cast<std::size_t>(n)).act(sigma, x);
}

std::vector<IMorphism> injections(int m, int n) {
  std::vector<IMorphism> out;
  if (m > n) return out;
  std::vector<Nat> cur;
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  std::function<void()> rec = [&]() {
    if (static_cast<int>(cur.size()) == m) {
      out.push_back(IMorphism{m, n, cur});
      return;
    }
    for (Nat v = 1; v <= n; ++v) {
      if (used[static_cast<std::size_t>(v)]) continue;
      used[static_cast<std::size_t>(v)] = true;
      cur.push_back(v);
      rec();
      cur.pop_back();
      used[static_cast<std::size_t>(v)] = false;
    }
  };
  rec();
  return out;
}

// ---------------------------------------------------------------------------

OmegaColimit::OmegaColimit(TruncatedISet x) : x_(std::move(x)) {
  const int n = x_.truncation();
  int total = 0;
  for (int m = 0; m <= n; ++m) {
    offset_.push_back(total);
    total += x_.size(m);
  }
  UnionFind uf(static_cast<std::size_t>(total));
  for (int m = 0; m < n; ++m)
    for (int e = 0; e < x_.size(m); ++e)
      uf.unite(static_cast<std::size_t>(offset_[m] + e),
               static_cast<std::size_t>(offset_[m + 1] + x_.include(m, e)));
  class_.resize(static_cast<std::size_t>(total));
  std::map<std::size_t, std::size_t> numbering;
  for (int m = 0; m <= n; ++m)
    for (int e = 0; e < x_.size(m); ++e) {
      auto g = static_cast<std::size_t>(offset_[m] + e);
      auto [it, fresh] = numbering.emplace(uf.find(g), reps_.size());
      if (fresh) reps_.emplace_back(m, e);
      class_[g] = it->second;
    }
  gen_.resize(reps_.size());
  std::vector<bool> have(reps_.size(), false);
  std::size_t found = 0;
  for (int m = 0; m <= x_.stable_from() && found < reps_.size(); ++m)
    for (int y = 0; y < x_.size(m); ++y)
      for (const IMorphism& a : injections(m, n)) {
        IMorphism tight{m, static_cast<int>(max_value(a.values)), a.values};
        std::size_t c = class_of(tight.target, x_.apply(tight, y));
        if (!have[c]) {
          have[c] = true;
          gen_[c] = {tight, y};
          ++found;
        }
      }
  if (found != reps_.size())
    fail(ErrorKind::ValidationFailed,
         "some class has no presentation from level " +
             std::to_string(x_.stable_from()),
         "stability");
}

std::size_t OmegaColimit::class_of(int m, int x) const {
  return class_.at(static_cast<std::size_t>(offset_.at(m) + x));
}

std::size_t OmegaColimit::act_on(const PartialInjection& f, int m,
                                 int x) const {
  std::vector<Nat> values;
  for (Nat j = 1; j <= m; ++j) {
    if (!f.defined_at(j))
      fail(ErrorKind::SupportNotCovered,
           "injection undefined at " + std::to_string(j), "support",
           std::to_string(j));
    values.push_back(f(j));
  }
  int n = static_cast<int>(max_value(values));
  if (n > x_.truncation())
    fail(ErrorKind::TruncationExceeded,
         "action needs level " + std::to_string(n) + " beyond N = " +
             std::to_string(x_.truncation()));
  return class_of(n, x_.apply(IMorphism{m, n, values}, x));
}

std::size_t OmegaColimit::act(const PartialInjection& f, std::size_t c) const {
  const auto& [alpha, y] = gen_.at(c);
  std::vector<Nat> values;
  for (Nat v : alpha.values) {
    if (!f.defined_at(v))
      fail(ErrorKind::SupportNotCovered,
           "injection undefined at " + std::to_string(v), "support",
           std::to_string(v));
    values.push_back(f(v));
  }
  int n = static_cast<int>(max_value(values));
  if (n > x_.truncation())
    fail(ErrorKind::TruncationExceeded,
         "action needs level " + std::to_string(n) + " beyond N = " +
             std::to_string(x_.truncation()));
  return class_of(n, x_.apply(IMorphism{alpha.source, n, values}, y));
}

NatSet OmegaColimit::support(std::size_t c) const {
  const IMorphism& alpha = gen_.at(c).first;
  const NatSet b(alpha.values.begin(), alpha.values.end());
  std::vector<Nat> fresh;
  for (Nat v = 1; v <= x_.truncation() && fresh.size() < b.size(); ++v)
    if (!b.count(v)) fresh.push_back(v);
  if (fresh.size() < b.size())
    fail(ErrorKind::TruncationExceeded,
         "support test for " + class_name(c) + " needs more levels");
  NatSet supp;
  for (Nat j : b) {
    std::map<Nat, Nat> m;
    for (Nat v : b) m.emplace(v, v == j ? fresh.front() : v);
    if (act(PartialInjection(std::move(m)), c) != c) supp.insert(j);
  }
  std::map<Nat, Nat> g;
  std::size_t k = 0;
  for (Nat v : b) g.emplace(v, supp.count(v) ? v : fresh[k++]);
  if (act(PartialInjection(std::move(g)), c) != c)
    fail(ErrorKind::NotTame,
         class_name(c) + " is not supported on " + to_string(supp), "support",
         class_name(c));
  return supp;
}

std::string OmegaColimit::class_name(std::size_t c) const {
  auto [m, x] = reps_.at(c);
  return std::to_string(m) + ":" + x_.name(m, x);
}

NatSet colim_support(const OmegaColimit& c, std::size_t cls) {
  int m = c.representative(cls).first;
  if (2 * m > c.iset().truncation())
    fail(ErrorKind::TruncationExceeded,
         "class " + c.class_name(cls) + " sits at level " + std::to_string(m) +
             " and needs N >= " + std::to_string(2 * m));
  return c.support(cls);
}

Decomposition canonicalize(const OmegaColimit& x) {
  const TruncatedISet& i = x.iset();
  if (i.truncation() < 2 * i.stable_from())
    fail(ErrorKind::TruncationExceeded,
         "canonical form needs N >= 2 * stableFrom = " +
             std::to_string(2 * i.stable_from()));
  TameTable t;
  t.size = x.class_count();
  t.known_support = [&](std::size_t c) {
    const auto& v = x.generator_map(c).values;
    return NatSet(v.begin(), v.end());
  };
  t.act = [&](const PartialInjection& f,
              std::size_t c) -> std::optional<std::size_t> {
    return x.act(f, c);
  };
  t.name = [&](std::size_t c) { return x.class_name(c); };
  return decompose_table(t, i.truncation());
}

CanonicalTameMSet canonicalize(const TruncatedISet& x) {
  return canonicalize(OmegaColimit(x)).mset;
}

int BulletISet::index_of(int m, const MElement& e) const {
  const auto& level = elements.at(static_cast<std::size_t>(m));
  auto it = std::lower_bound(level.begin(), level.end(), e);
  if (it == level.end() || *it != e) return -1;
  return static_cast<int>(it - level.begin());
}

BulletISet bullet_iset(const CanonicalTameMSet& w, int truncation) {
  if (w.max_level() > truncation)
    fail(ErrorKind::TruncationExceeded,
         "W has level " + std::to_string(w.max_level()) + " beyond N = " +
             std::to_string(truncation));
  BulletISet b;
  std::vector<std::vector<std::string>> names;
  for (int m = 0; m <= truncation; ++m) {
    b.elements.push_back(elements_up_to(w, m));
    std::vector<std::string> ns;
    for (const MElement& e : b.elements.back()) ns.push_back(to_string(w, e));
    names.push_back(std::move(ns));
  }
  std::vector<std::vector<int>> incl;
  std::vector<std::vector<std::vector<int>>> trans(
      static_cast<std::size_t>(truncation) + 1);
  for (int m = 0; m <= truncation; ++m) {
    const auto& level = b.elements[static_cast<std::size_t>(m)];
    if (m < truncation) {
      std::vector<int> inc;
      for (const MElement& e : level) inc.push_back(b.index_of(m + 1, e));
      incl.push_back(std::move(inc));
    }
    for (int i = 1; i < m; ++i) {
      std::map<Nat, Nat> f;
      for (Nat j = 1; j <= m; ++j) f.emplace(j, j);
      f[i] = i + 1;
      f[i + 1] = i;
      PartialInjection s(std::move(f));
      std::vector<int> table;
      for (const MElement& e : level) table.push_back(b.index_of(m, act(w, s, e)));
      trans[static_cast<std::size_t>(m)].push_back(std::move(table));
    }
  }
  b.iset = TruncatedISet(truncation, w.max_level(), std::move(names),
                         std::move(incl), std::move(trans));
  return b;
}

// ---------------------------------------------------------------------------

LevelwiseMap::LevelwiseMap(TruncatedISet source, TruncatedISet target,
                           std::vector<std::vector<int>> map)
    : source_(std::move(source)),
      target_(std::move(target)),
      map_(std::move(map)) {
  const int n = source_.truncation();
  if (target_.truncation() != n ||
      map_.size() != static_cast<std::size_t>(n) + 1)
    fail(ErrorKind::InvalidMorphism, "truncation levels differ", "levels");
  for (int m = 0; m <= n; ++m) {
    const auto& row = map_[static_cast<std::size_t>(m)];
    if (static_cast<int>(row.size()) != source_.size(m))
      fail(ErrorKind::InvalidMorphism, "map has wrong size", "levels",
           level_where(m));
    for (int v : row)
      if (v < 0 || v >= target_.size(m))
        fail(ErrorKind::InvalidMorphism, "map value out of range", "levels",
             level_where(m));
  }
  for (int m = 0; m <= n; ++m)
    for (int x = 0; x < source_.size(m); ++x) {
      int fx = (*this)(m, x);
      if (m < n && (*this)(m + 1, source_.include(m, x)) != target_.include(m, fx))
        fail(ErrorKind::InvalidMorphism, "map does not commute with inclusion",
             "naturality", level_where(m));
      for (int i = 1; i < m; ++i)
        if ((*this)(m, source_.transpose(m, i, x)) != target_.transpose(m, i, fx))
          fail(ErrorKind::InvalidMorphism,
               "map does not commute with s" + std::to_string(i),
               "naturality", level_where(m));
    }
}

bool LevelwiseMap::levelwise_injective() const {
  for (int m = 0; m <= source_.truncation(); ++m) {
    const auto& row = map_[static_cast<std::size_t>(m)];
    if (std::set<int>(row.begin(), row.end()).size() != row.size()) return false;
  }
  return true;
}

bool LevelwiseMap::levelwise_bijective() const {
  if (!levelwise_injective()) return false;
  for (int m = 0; m <= source_.truncation(); ++m)
    if (source_.size(m) != target_.size(m)) return false;
  return true;
}

bool n_iso_check(const LevelwiseMap& f) {
  OmegaColimit a(f.source());
  OmegaColimit b(f.target());
  std::vector<long> image(a.class_count(), -1);
  for (int m = 0; m <= f.source().truncation(); ++m)
    for (int x = 0; x < f.source().size(m); ++x) {
      auto c = a.class_of(m, x);
      long d = static_cast<long>(b.class_of(m, f(m, x)));
      if (image[c] == -1) image[c] = d;
      if (image[c] != d)
        fail(ErrorKind::InvalidMorphism, "map is not well defined on classes");
    }
  std::set<long> hit(image.begin(), image.end());
  return hit.size() == image.size() && hit.size() == b.class_count();
}

FlatReplacement flat_replace(const TruncatedISet& x) {
  OmegaColimit colim(x);
  Decomposition dec = canonicalize(colim);
  BulletISet flat = bullet_iset(dec.mset, x.truncation());
  std::vector<std::vector<int>> eta;
  for (int m = 0; m <= x.truncation(); ++m) {
    std::vector<int> row;
    for (int e = 0; e < x.size(m); ++e) {
      int v = flat.index_of(m, dec.element_of[colim.class_of(m, e)]);
      if (v < 0)
        fail(ErrorKind::NotTame,
             x.name(m, e) + " has a class not supported on {1.." +
                 std::to_string(m) + "}",
             "support", level_where(m));
      row.push_back(v);
    }
    eta.push_back(std::move(row));
  }
  TruncatedISet target = flat.iset;
  return FlatReplacement{std::move(flat),
                         LevelwiseMap(x, std::move(target), std::move(eta))};
}

bool counit_check(const CanonicalTameMSet& w, int truncation) {
  BulletISet b = bullet_iset(w, truncation);
  OmegaColimit colim(b.iset);
  std::vector<MElement> all = elements_up_to(w, truncation);
  std::vector<MElement> eps(colim.class_count());
  for (std::size_t c = 0; c < colim.class_count(); ++c) {
    auto [m, x] = colim.representative(c);
    eps[c] = b.elements[static_cast<std::size_t>(m)][static_cast<std::size_t>(x)];
  }
  std::set<MElement> hit(eps.begin(), eps.end());
  if (hit.size() != eps.size() ||
      hit != std::set<MElement>(all.begin(), all.end()))
    return false;
  // Equivariance on the transpositions of {1..N}.
  for (std::size_t c = 0; c < colim.class_count(); ++c) {
    for (int i = 1; i < truncation; ++i) {
      std::map<Nat, Nat> f;
      for (Nat j = 1; j <= truncation; ++j) f.emplace(j, j);
      f[i] = i + 1;
      f[i + 1] = i;
      PartialInjection g(std::move(f));
      if (eps[colim.act(g, c)] != act(w, g, eps[c])) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------

LatchingMap latching_map(const TruncatedISet& x, int n) {
  LatchingMap out;
  out.n = n;
  std::vector<std::pair<IMorphism, int>> objects;
  for (int m = 0; m < n; ++m)
    for (const IMorphism& a : injections(m, n))
      for (int e = 0; e < x.size(m); ++e) {
        out.index.emplace(std::make_pair(a.values, e), objects.size());
        objects.emplace_back(a, e);
      }
  UnionFind uf(objects.size());
  auto key = [&](const std::vector<Nat>& v, int e) {
    return out.index.at(std::make_pair(v, e));
  };
  // (alpha o beta, y) ~ (alpha, X(beta) y) for the generators beta of I.
  for (std::size_t o = 0; o < objects.size(); ++o) {
    const auto& [a, e] = objects[o];
    const int m = a.source;
    for (int i = 1; i < m; ++i)
      uf.unite(key(swap_positions(a.values, i), e), key(a.values, x.transpose(m, i, e)));
    if (m >= 1)
      for (int y = 0; y < x.size(m - 1); ++y) {
        std::vector<Nat> shorter(a.values.begin(), a.values.end() - 1);
        uf.unite(key(shorter, y), key(a.values, x.include(m - 1, y)));
      }
  }
  std::map<std::size_t, std::size_t> numbering;
  std::vector<std::size_t> class_of(objects.size());
  for (std::size_t o = 0; o < objects.size(); ++o) {
    auto [it, fresh] = numbering.emplace(uf.find(o), out.class_rep.size());
    if (fresh) {
      out.class_rep.push_back(objects[o]);
      out.value.push_back(x.apply(objects[o].first, objects[o].second));
    }
    class_of[o] = it->second;
  }
  for (auto& kv : out.index) kv.second = class_of[kv.second];
  out.latching_size = out.class_rep.size();
  return out;
}

namespace {

std::string describe(const TruncatedISet& x, const IMorphism& a, int e) {
  return "[" + tuple_name(a.values) + "," + x.name(a.source, e) + "]";
}

FlatResult flat_latching(const TruncatedISet& x) {
  for (int n = 1; n <= x.truncation(); ++n) {
    LatchingMap lm = latching_map(x, n);
    std::map<int, std::size_t> seen;
    for (std::size_t c = 0; c < lm.value.size(); ++c) {
      auto [it, fresh] = seen.emplace(lm.value[c], c);
      if (!fresh) {
        const auto& a = lm.class_rep[it->second];
        const auto& b = lm.class_rep[c];
        return FlatResult{false,
                          "latching map at level " + std::to_string(n) +
                              " sends " + describe(x, a.first, a.second) +
                              " and " + describe(x, b.first, b.second) +
                              " to " + x.name(n, lm.value[c]),
                          n};
      }
    }
  }
  return {};
}

FlatResult flat_direct(const TruncatedISet& x) {
  for (int m = 0; m < x.truncation(); ++m) {
    std::map<int, int> seen;
    for (int e = 0; e < x.size(m); ++e) {
      auto [it, fresh] = seen.emplace(x.include(m, e), e);
      if (!fresh)
        return FlatResult{false,
                          "inclusion at level " + std::to_string(m) +
                              " identifies " + x.name(m, it->second) + " and " +
                              x.name(m, e),
                          m + 1};
    }
  }
  // Pullback squares: by Sigma_n symmetry one leg can be the standard
  // inclusion of {1..a}.
  for (int n = 1; n <= x.truncation(); ++n)
    for (int a = 0; a <= n; ++a) {
      IMorphism alpha{a, n, {}};
      for (Nat j = 1; j <= a; ++j) alpha.values.push_back(j);
      for (int b = 0; b <= n; ++b)
        for (const IMorphism& beta : injections(b, n)) {
          IMorphism p{0, a, {}}, q{0, b, {}};
          for (int k = 0; k < b; ++k) {
            Nat v = beta.values[static_cast<std::size_t>(k)];
            if (v <= a) {
              p.values.push_back(v);
              q.values.push_back(k + 1);
            }
          }
          // Order the intersection by its position in {1..a}.
          std::vector<std::size_t> order(p.values.size());
          std::iota(order.begin(), order.end(), std::size_t{0});
          std::sort(order.begin(), order.end(), [&](std::size_t u, std::size_t v) {
            return p.values[u] < p.values[v];
          });
          IMorphism ps{0, a, {}}, qs{0, b, {}};
          for (std::size_t k : order) {
            ps.values.push_back(p.values[k]);
            qs.values.push_back(q.values[k]);
          }
          const int c = static_cast<int>(ps.values.size());
          ps.source = qs.source = c;
          std::set<std::pair<int, int>> fibre;
          std::vector<int> xa(static_cast<std::size_t>(x.size(a)));
          for (int u = 0; u < x.size(a); ++u)
            xa[static_cast<std::size_t>(u)] = x.apply(alpha, u);
          for (int v = 0; v < x.size(b); ++v) {
            int bv = x.apply(beta, v);
            for (int u = 0; u < x.size(a); ++u)
              if (xa[static_cast<std::size_t>(u)] == bv) fibre.emplace(u, v);
          }
          std::set<std::pair<int, int>> image;
          for (int z = 0; z < x.size(c); ++z)
            image.emplace(x.apply(ps, z), x.apply(qs, z));
          if (image != fibre || static_cast<int>(image.size()) != x.size(c))
            return FlatResult{false,
                              "square over " + tuple_name(alpha.values) +
                                  " and " + tuple_name(beta.values) +
                                  " into level " + std::to_string(n) +
                                  " is not a pullback: " +
                                  std::to_string(fibre.size()) +
                                  " fibre points, " + std::to_string(x.size(c)) +
                                  " elements at level " + std::to_string(c),
                              n};
        }
    }
  return {};
}

}  // namespace

FlatResult is_flat(const TruncatedISet& x, FlatMode mode) {
  return mode == FlatMode::Latching ? flat_latching(x) : flat_direct(x);
}

// ---------------------------------------------------------------------------

DayConvolution day_convolution(const TruncatedISet& x, const TruncatedISet& y) {
  const int n_max = x.truncation();
  if (y.truncation() != n_max)
    fail(ErrorKind::TruncationExceeded, "factors have different truncations");
  const int stable = x.stable_from() + y.stable_from();
  if (stable > n_max)
    fail(ErrorKind::TruncationExceeded,
         "box product is stable only from level " + std::to_string(stable) +
             " beyond N = " + std::to_string(n_max));

  struct Triple {
    int m1;
    std::vector<Nat> gamma;
    int a;
    int b;
    auto operator<=>(const Triple&) const = default;
  };
  std::vector<std::vector<Triple>> reps(static_cast<std::size_t>(n_max) + 1);
  std::vector<std::map<Triple, int>> cls(static_cast<std::size_t>(n_max) + 1);

  for (int n = 0; n <= n_max; ++n) {
    std::vector<Triple> objs;
    std::map<Triple, std::size_t> index;
    for (int k = 0; k <= n; ++k)
      for (int m1 = 0; m1 <= k; ++m1) {
        const int m2 = k - m1;
        for (const IMorphism& g : injections(k, n))
          for (int a = 0; a < x.size(m1); ++a)
            for (int b = 0; b < y.size(m2); ++b) {
              Triple t{m1, g.values, a, b};
              index.emplace(t, objs.size());
              objs.push_back(std::move(t));
            }
      }
    UnionFind uf(objs.size());
    for (const Triple& t : objs) {
      const int m1 = t.m1;
      const int m2 = static_cast<int>(t.gamma.size()) - m1;
      // (gamma o (alpha u beta), x, y) ~ (gamma, X(alpha) x, Y(beta) y) with
      // one of alpha, beta a generator and the other an identity. The
      // inclusion relations are emitted once per (gamma, other point).
      for (int i = 1; i < m1; ++i)
        uf.unite(index.at(Triple{m1, swap_positions(t.gamma, i), t.a, t.b}),
                 index.at(Triple{m1, t.gamma, x.transpose(m1, i, t.a), t.b}));
      for (int i = 1; i < m2; ++i)
        uf.unite(index.at(Triple{m1, swap_positions(t.gamma, m1 + i), t.a, t.b}),
                 index.at(Triple{m1, t.gamma, t.a, y.transpose(m2, i, t.b)}));
      if (m1 >= 1 && t.a == 0)
        for (int e = 0; e < x.size(m1 - 1); ++e) {
          std::vector<Nat> g = t.gamma;
          g.erase(g.begin() + (m1 - 1));
          uf.unite(index.at(Triple{m1 - 1, g, e, t.b}),
                   index.at(Triple{m1, t.gamma, x.include(m1 - 1, e), t.b}));
        }
      if (m2 >= 1 && t.b == 0)
        for (int e = 0; e < y.size(m2 - 1); ++e) {
          std::vector<Nat> g = t.gamma;
          g.pop_back();
          uf.unite(index.at(Triple{m1, g, t.a, e}),
                   index.at(Triple{m1, t.gamma, t.a, y.include(m2 - 1, e)}));
        }
    }
    std::map<std::size_t, int> numbering;
    for (std::size_t o = 0; o < objs.size(); ++o) {
      auto [it, fresh] = numbering.emplace(
          uf.find(o), static_cast<int>(reps[static_cast<std::size_t>(n)].size()));
      if (fresh) reps[static_cast<std::size_t>(n)].push_back(objs[o]);
      cls[static_cast<std::size_t>(n)].emplace(objs[o], it->second);
    }
  }

  std::vector<std::vector<std::string>> names;
  std::vector<std::vector<int>> incl;
  std::vector<std::vector<std::vector<int>>> trans;
  std::vector<std::vector<int>> q1, q2;
  for (int n = 0; n <= n_max; ++n) {
    const auto& level = reps[static_cast<std::size_t>(n)];
    std::vector<std::string> ns;
    std::vector<int> r1, r2;
    for (const Triple& t : level) {
      const int m1 = t.m1;
      const int m2 = static_cast<int>(t.gamma.size()) - m1;
      ns.push_back(tuple_name(t.gamma) + "|" + x.name(m1, t.a) + "|" +
                   y.name(m2, t.b));
      std::vector<Nat> g1(t.gamma.begin(), t.gamma.begin() + m1);
      std::vector<Nat> g2(t.gamma.begin() + m1, t.gamma.end());
      r1.push_back(x.apply(IMorphism{m1, n, g1}, t.a));
      r2.push_back(y.apply(IMorphism{m2, n, g2}, t.b));
    }
    names.push_back(std::move(ns));
    q1.push_back(std::move(r1));
    q2.push_back(std::move(r2));
    if (n < n_max) {
      std::vector<int> inc;
      for (const Triple& t : level)
        inc.push_back(cls[static_cast<std::size_t>(n) + 1].at(t));
      incl.push_back(std::move(inc));
    }
    std::vector<std::vector<int>> gens;
    for (int i = 1; i < n; ++i) {
      std::vector<int> row;
      for (const Triple& t : level)
        row.push_back(cls[static_cast<std::size_t>(n)].at(
            Triple{t.m1, swap_values(t.gamma, i), t.a, t.b}));
      gens.push_back(std::move(row));
    }
    trans.push_back(std::move(gens));
  }
  TruncatedISet box(n_max, stable, std::move(names), std::move(incl),
                    std::move(trans));
  LevelwiseMap p1(box, x, std::move(q1));
  LevelwiseMap p2(box, y, std::move(q2));
  return DayConvolution{std::move(box), std::move(p1), std::move(p2)};
}

// ---------------------------------------------------------------------------

TruncatedISet representable_iset(int m, int truncation) {
  std::vector<std::vector<std::string>> names;
  std::vector<std::vector<int>> incl;
  std::vector<std::vector<std::vector<int>>> trans;
  std::vector<std::map<std::vector<Nat>, int>> index;
  std::vector<std::vector<IMorphism>> levels;
  for (int n = 0; n <= truncation; ++n) {
    levels.push_back(injections(m, n));
    std::vector<std::string> ns;
    std::map<std::vector<Nat>, int> idx;
    for (const IMorphism& a : levels.back()) {
      idx.emplace(a.values, static_cast<int>(ns.size()));
      ns.push_back(tuple_name(a.values));
    }
    names.push_back(std::move(ns));
    index.push_back(std::move(idx));
  }
  for (int n = 0; n <= truncation; ++n) {
    const auto& level = levels[static_cast<std::size_t>(n)];
    if (n < truncation) {
      std::vector<int> inc;
      for (const IMorphism& a : level)
        inc.push_back(index[static_cast<std::size_t>(n) + 1].at(a.values));
      incl.push_back(std::move(inc));
    }
    std::vector<std::vector<int>> gens;
    for (int i = 1; i < n; ++i) {
      std::vector<int> row;
      for (const IMorphism& a : level)
        row.push_back(index[static_cast<std::size_t>(n)].at(swap_values(a.values, i)));
      gens.push_back(std::move(row));
    }
    trans.push_back(std::move(gens));
  }
  return TruncatedISet(truncation, std::min(m, truncation), std::move(names),
                       std::move(incl), std::move(trans));
}

TruncatedISet constant_iset(const std::vector<std::string>& points,
                            int truncation) {
  const int k = static_cast<int>(points.size());
  std::vector<int> id(static_cast<std::size_t>(k));
  std::iota(id.begin(), id.end(), 0);
  std::vector<std::vector<std::string>> names(
      static_cast<std::size_t>(truncation) + 1, points);
  std::vector<std::vector<int>> incl(static_cast<std::size_t>(truncation), id);
  std::vector<std::vector<std::vector<int>>> trans;
  for (int n = 0; n <= truncation; ++n)
    trans.emplace_back(static_cast<std::size_t>(std::max(n - 1, 0)), id);
  return TruncatedISet(truncation, 0, std::move(names), std::move(incl),
                       std::move(trans));
}

TruncatedISet quotient_iset(
    const TruncatedISet& x,
    const std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>>&
        pairs) {
  const int n_max = x.truncation();
  std::vector<int> offset;
  int total = 0;
  for (int m = 0; m <= n_max; ++m) {
    offset.push_back(total);
    total += x.size(m);
  }
  auto g = [&](int m, int e) { return static_cast<std::size_t>(offset[m] + e); };
  UnionFind uf(static_cast<std::size_t>(total));
  for (const auto& [p, q] : pairs) {
    if (p.first != q.first)
      fail(ErrorKind::PreconditionViolated,
           "identified elements must share a level");
    uf.unite(g(p.first, p.second), g(q.first, q.second));
  }
  // Close under the generator maps.
  for (bool changed = true; changed;) {
    changed = false;
    for (int m = 0; m <= n_max; ++m)
      for (int e = 0; e < x.size(m); ++e) {
        std::size_t root = uf.find(g(m, e));
        int r = static_cast<int>(root) - offset[m];
        if (r == e) continue;
        if (m < n_max)
          changed |= uf.unite(g(m + 1, x.include(m, e)), g(m + 1, x.include(m, r)));
        for (int i = 1; i < m; ++i)
          changed |= uf.unite(g(m, x.transpose(m, i, e)),
                              g(m, x.transpose(m, i, r)));
      }
  }
  std::vector<std::vector<std::string>> names(static_cast<std::size_t>(n_max) + 1);
  std::vector<std::map<std::size_t, int>> num(static_cast<std::size_t>(n_max) + 1);
  std::vector<std::vector<int>> reps(static_cast<std::size_t>(n_max) + 1);
  for (int m = 0; m <= n_max; ++m)
    for (int e = 0; e < x.size(m); ++e) {
      auto [it, fresh] = num[static_cast<std::size_t>(m)].emplace(
          uf.find(g(m, e)), static_cast<int>(reps[static_cast<std::size_t>(m)].size()));
      if (fresh) {
        reps[static_cast<std::size_t>(m)].push_back(e);
        names[static_cast<std::size_t>(m)].push_back(x.name(m, e));
      }
      (void)it;
    }
  auto cls = [&](int m, int e) {
    return num[static_cast<std::size_t>(m)].at(uf.find(g(m, e)));
  };
  std::vector<std::vector<int>> incl;
  std::vector<std::vector<std::vector<int>>> trans;
  for (int m = 0; m <= n_max; ++m) {
    const auto& r = reps[static_cast<std::size_t>(m)];
    if (m < n_max) {
      std::vector<int> inc;
      for (int e : r) inc.push_back(cls(m + 1, x.include(m, e)));
      incl.push_back(std::move(inc));
    }
    std::vector<std::vector<int>> gens;
    for (int i = 1; i < m; ++i) {
      std::vector<int> row;
      for (int e : r) row.push_back(cls(m, x.transpose(m, i, e)));
      gens.push_back(std::move(row));
    }
    trans.push_back(std::move(gens));
  }
  return TruncatedISet(n_max, x.stable_from(), std::move(names), std::move(incl),
                       std::move(trans));
}

TruncatedISet coequalizer_example(int truncation) {
  TruncatedISet i1 = representable_iset(1, truncation);
  std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> pairs;
  // alpha o d1 ~ alpha o d2 for every alpha: 2 -> n, i.e. all injections
  // 1 -> n are identified for n >= 2.
  for (int n = 2; n <= truncation; ++n)
    for (const IMorphism& a : injections(2, n)) {
      int u = static_cast<int>(a.values[0]) - 1;
      int v = static_cast<int>(a.values[1]) - 1;
      pairs.push_back({{n, u}, {n, v}});
    }
  return quotient_iset(i1, pairs);
}

bool mono_pushout_check(const LevelwiseMap& i, std::string* witness) {
  if (!i.levelwise_injective())
    fail(ErrorKind::PreconditionViolated, "map is not levelwise injective");
  const TruncatedISet& x = i.source();
  const TruncatedISet& y = i.target();
  for (int n = 0; n <= x.truncation(); ++n) {
    LatchingMap lx = latching_map(x, n);
    LatchingMap ly = latching_map(y, n);
    const std::size_t off = ly.latching_size;
    UnionFind uf(off + static_cast<std::size_t>(x.size(n)));
    for (std::size_t c = 0; c < lx.latching_size; ++c) {
      const auto& [a, e] = lx.class_rep[c];
      std::size_t into_y = ly.index.at({a.values, i(a.source, e)});
      uf.unite(into_y, off + static_cast<std::size_t>(lx.value[c]));
    }
    std::map<std::size_t, int> value;  // pushout class -> element of Y(n)
    std::map<int, std::size_t> seen;   // element of Y(n) -> pushout class
    auto check = [&](std::size_t node, int v) {
      std::size_t root = uf.find(node);
      value.emplace(root, v);
      auto [it, fresh] = seen.emplace(v, root);
      return fresh || it->second == root;
    };
    bool ok = true;
    for (std::size_t c = 0; c < ly.latching_size && ok; ++c)
      ok = check(c, ly.value[c]);
    for (int e = 0; e < x.size(n) && ok; ++e)
      ok = check(off + static_cast<std::size_t>(e), i(n, e));
    if (!ok) {
      if (witness)
        *witness = "pushout map at level " + std::to_string(n) +
                   " is not injective";
      return false;
    }
  }
  return true;
}

}  // namespace tame
