#include "tame/mset.hpp"

#include <algorithm>
#include <memory>
#include <numeric>
#include <set>
#include <sstream>

namespace tame {

namespace {

PartialInjection from_perm(const Permutation& sigma) {
  std::map<Nat, Nat> m;
  for (std::size_t j = 0; j < sigma.size(); ++j)
    m.emplace(static_cast<Nat>(j) + 1, static_cast<Nat>(sigma[j]) + 1);
  return PartialInjection(std::move(m));
}

std::vector<Nat> iota_tuple(int m) {
  std::vector<Nat> t(static_cast<std::size_t>(m));
  std::iota(t.begin(), t.end(), Nat{1});
  return t;
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

CanonicalTameMSet::CanonicalTameMSet(std::map<int, SigmaSet> levels) {
  for (auto& [m, a] : levels) {
    if (a.degree() != m)
      fail(ErrorKind::ValidationFailed,
           "level " + std::to_string(m) + " holds a Sigma-set of degree " +
               std::to_string(a.degree()),
           "degree", std::to_string(m));
    if (!a.empty()) levels_.emplace(m, std::move(a));
  }
}

CanonicalTameMSet CanonicalTameMSet::unit() {
  return CanonicalTameMSet({{0, SigmaSet::trivial(0, {"*"})}});
}

CanonicalTameMSet CanonicalTameMSet::representable(int m) {
  return CanonicalTameMSet({{m, SigmaSet::regular(m)}});
}

const SigmaSet* CanonicalTameMSet::level(int m) const {
  auto it = levels_.find(m);
  return it == levels_.end() ? nullptr : &it->second;
}

int CanonicalTameMSet::max_level() const {
  return levels_.empty() ? 0 : levels_.rbegin()->first;
}

MElement make_element(const CanonicalTameMSet& x, std::vector<Nat> alpha,
                      int point) {
  const int m = static_cast<int>(alpha.size());
  const SigmaSet* a = x.level(m);
  if (!a || point < 0 || point >= static_cast<int>(a->size()))
    fail(ErrorKind::ValidationFailed,
         "no point " + std::to_string(point) + " at level " +
             std::to_string(m),
         "point", std::to_string(m));
  std::vector<Nat> sorted = alpha;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() ||
      (m > 0 && sorted.front() < 1))
    fail(ErrorKind::ValidationFailed, "image entries must be distinct and >= 1",
         "image", std::to_string(m));
  // alpha = c o sigma with c the sorted tuple, and [c o sigma, a] = [c, sigma a].
  Permutation sigma(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j)
    sigma[static_cast<std::size_t>(j)] = static_cast<int>(
        std::lower_bound(sorted.begin(), sorted.end(),
                         alpha[static_cast<std::size_t>(j)]) -
        sorted.begin());
  return MElement{m, std::move(sorted), a->act(sigma, point)};
}

NatSet support_of(const MElement& x) {
  return NatSet(x.image.begin(), x.image.end());
}

MElement act(const CanonicalTameMSet& x, const PartialInjection& f,
             const MElement& e) {
  std::vector<Nat> alpha;
  alpha.reserve(e.image.size());
  for (Nat c : e.image) {
    if (!f.defined_at(c))
      fail(ErrorKind::SupportNotCovered,
           "injection undefined at support point " + std::to_string(c),
           "support", std::to_string(c));
    alpha.push_back(f(c));
  }
  return make_element(x, std::move(alpha), e.point);
}

std::string to_string(const CanonicalTameMSet& x, const MElement& e) {
  std::ostringstream os;
  os << '[';
  for (std::size_t j = 0; j < e.image.size(); ++j)
    os << (j ? "," : "") << e.image[j];
  os << ':';
  const SigmaSet* a = x.level(e.level);
  if (a && e.point >= 0 && e.point < static_cast<int>(a->size()))
    os << a->name(e.point);
  else
    os << '#' << e.point;
  os << ']';
  return os.str();
}

std::vector<MElement> elements_up_to(const CanonicalTameMSet& x, Nat n) {
  std::vector<MElement> out;
  for (auto& [m, a] : x.levels()) {
    if (m > n) break;
    for (const NatSet& t : subsets_of_size(static_cast<int>(n), m)) {
      std::vector<Nat> image(t.begin(), t.end());
      for (int p = 0; p < static_cast<int>(a.size()); ++p)
        out.push_back(MElement{m, image, p});
    }
  }
  return out;
}

bool iso_type_equal(const CanonicalTameMSet& a, const CanonicalTameMSet& b,
                    int degree_bound) {
  if (a.levels().size() != b.levels().size()) return false;
  for (auto& [m, s] : a.levels()) {
    const SigmaSet* t = b.level(m);
    if (!t || s.size() != t->size() ||
        sigma_iso_type(s, degree_bound) != sigma_iso_type(*t, degree_bound))
      return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

Decomposition decompose_table(const TameTable& table, Nat window) {
  Decomposition out;
  out.support.resize(table.size);
  out.element_of.resize(table.size);
  std::vector<NatSet> known(table.size);

  auto call = [&](const PartialInjection& f, std::size_t idx) {
    auto r = table.act(f, idx);
    if (!r)
      fail(ErrorKind::WindowTooSmall,
           "test injection leaves the table for " + table.name(idx), "window",
           table.name(idx));
    return *r;
  };

  for (std::size_t idx = 0; idx < table.size; ++idx) {
    const NatSet b = table.known_support(idx);
    known[idx] = b;
    std::vector<Nat> fresh;
    for (Nat v = 1; v <= window && fresh.size() < b.size(); ++v)
      if (!b.count(v)) fresh.push_back(v);
    if (fresh.size() < b.size())
      fail(ErrorKind::WindowTooSmall,
           "window " + std::to_string(window) + " cannot test support " +
               to_string(b),
           "window", table.name(idx));
    // j is outside the support iff moving j alone to a fresh point fixes x:
    // x is then supported on b and on b - {j}.
    NatSet supp;
    for (Nat j : b) {
      std::map<Nat, Nat> m;
      for (Nat c : b) m.emplace(c, c == j ? fresh.front() : c);
      if (call(PartialInjection(std::move(m)), idx) != idx) supp.insert(j);
    }
    std::map<Nat, Nat> g;
    std::size_t k = 0;
    for (Nat c : b) g.emplace(c, supp.count(c) ? c : fresh[k++]);
    if (call(PartialInjection(std::move(g)), idx) != idx)
      fail(ErrorKind::NotTame,
           table.name(idx) + " is not supported on " + to_string(supp),
           "support", table.name(idx));
    out.support[idx] = std::move(supp);
  }

  // s_m: elements supported exactly on {1..m}.
  std::map<int, std::vector<std::size_t>> base;
  std::map<std::size_t, int> position;
  for (std::size_t idx = 0; idx < table.size; ++idx) {
    const NatSet& s = out.support[idx];
    const int m = static_cast<int>(s.size());
    if (s.empty() || (*s.begin() == 1 && *s.rbegin() == m)) {
      position.emplace(idx, static_cast<int>(base[m].size()));
      base[m].push_back(idx);
    }
  }
  auto base_point = [&](std::size_t r, int m, const std::string& who) {
    auto it = position.find(r);
    if (it == position.end() || static_cast<int>(out.support[r].size()) != m)
      fail(ErrorKind::NotTame,
           "action does not preserve the support of " + who, "support", who);
    return it->second;
  };

  std::map<int, SigmaSet> levels;
  for (auto& [m, members] : base) {
    std::vector<std::string> names;
    for (std::size_t idx : members) names.push_back(table.name(idx));
    SigmaSet a = SigmaSet::from_action(m, names, [&](int i, int p) {
      std::size_t idx = members[static_cast<std::size_t>(p)];
      std::map<Nat, Nat> f;
      for (Nat c : known[idx]) f.emplace(c, c);
      for (Nat c = 1; c <= m; ++c) f[c] = c;
      f[i] = i + 1;
      f[i + 1] = i;
      return base_point(call(PartialInjection(std::move(f)), idx), m,
                        table.name(idx));
    });
    levels.emplace(m, std::move(a));
  }
  out.mset = CanonicalTameMSet(std::move(levels));

  // x = [a_1 < ... < a_m, h x] with h the order-preserving map supp -> {1..m}.
  for (std::size_t idx = 0; idx < table.size; ++idx) {
    const NatSet& s = out.support[idx];
    const int m = static_cast<int>(s.size());
    std::map<Nat, Nat> h;
    Nat next = 1;
    for (Nat c : s) h.emplace(c, next++);
    for (Nat c : known[idx])
      if (!s.count(c)) h.emplace(c, next++);
    std::size_t y = call(PartialInjection(std::move(h)), idx);
    out.element_of[idx] = MElement{m, std::vector<Nat>(s.begin(), s.end()),
                                   base_point(y, m, table.name(idx))};
  }
  return out;
}

TameTable element_table(const CanonicalTameMSet& x,
                        const std::vector<MElement>& elements) {
  auto index = std::make_shared<std::map<MElement, std::size_t>>();
  for (std::size_t i = 0; i < elements.size(); ++i) index->emplace(elements[i], i);
  TameTable t;
  t.size = elements.size();
  t.known_support = [&elements](std::size_t i) {
    return support_of(elements[i]);
  };
  t.act = [&x, &elements, index](const PartialInjection& f,
                                 std::size_t i) -> std::optional<std::size_t> {
    auto it = index->find(act(x, f, elements[i]));
    if (it == index->end()) return std::nullopt;
    return it->second;
  };
  t.name = [&x, &elements](std::size_t i) { return to_string(x, elements[i]); };
  return t;
}

// ---------------------------------------------------------------------------

BoxProduct::BoxProduct(const CanonicalTameMSet& x, const CanonicalTameMSet& y,
                       int degree_bound, int max_level)
    : x_(x), y_(y) {
  std::map<int, std::vector<int>> splits;  // k -> left levels m
  for (auto& lm : x.levels())
    for (auto& ln : y.levels())
      if (max_level < 0 || lm.first + ln.first <= max_level)
        splits[lm.first + ln.first].push_back(lm.first);
  std::map<int, SigmaSet> levels;
  for (auto& [k, ms] : splits) {
    if (k > degree_bound)
      fail(ErrorKind::DegreeTooLarge,
           "box product level " + std::to_string(k) + " exceeds bound " +
               std::to_string(degree_bound));
    std::sort(ms.begin(), ms.end());
    std::optional<SigmaSet> acc;
    auto& cells = cells_[k];
    for (int m : ms) {
      const SigmaSet& a = *x.level(m);
      const SigmaSet& b = *y.level(k - m);
      SigmaSet part = induce(a, b, degree_bound);
      for (const NatSet& t : subsets_of_size(k, m))
        for (int p = 0; p < static_cast<int>(a.size()); ++p)
          for (int q = 0; q < static_cast<int>(b.size()); ++q)
            cells.push_back(Cell{m, t, p, q});
      acc = acc ? disjoint_union(*acc, part) : part;
    }
    for (std::size_t i = 0; i < cells.size(); ++i)
      cell_index_[k].emplace(cells[i], static_cast<int>(i));
    levels.emplace(k, std::move(*acc));
  }
  box_ = CanonicalTameMSet(std::move(levels));
}

MElement BoxProduct::pair(const MElement& a, const MElement& b) const {
  NatSet sa = support_of(a);
  for (Nat c : b.image)
    if (sa.count(c))
      fail(ErrorKind::OverlappingSupports,
           "supports meet at " + std::to_string(c), "disjoint",
           std::to_string(c));
  std::vector<Nat> joint(a.image);
  joint.insert(joint.end(), b.image.begin(), b.image.end());
  std::sort(joint.begin(), joint.end());
  NatSet t;
  for (std::size_t j = 0; j < joint.size(); ++j)
    if (sa.count(joint[j])) t.insert(static_cast<Nat>(j) + 1);
  const int k = a.level + b.level;
  return MElement{k, std::move(joint),
                  cell_index_.at(k).at(Cell{a.level, t, a.point, b.point})};
}

std::pair<MElement, MElement> BoxProduct::project(const MElement& z) const {
  const Cell& c = cells_.at(z.level).at(static_cast<std::size_t>(z.point));
  MElement left{c.m, {}, c.left_point};
  MElement right{z.level - c.m, {}, c.right_point};
  for (std::size_t j = 0; j < z.image.size(); ++j)
    (c.subset.count(static_cast<Nat>(j) + 1) ? left : right)
        .image.push_back(z.image[j]);
  return {left, right};
}

CanonicalTameMSet box_canonical(const CanonicalTameMSet& x,
                                const CanonicalTameMSet& y, int degree_bound) {
  return BoxProduct(x, y, degree_bound).mset();
}

namespace {

void injective_tuples(int len, Nat window, std::vector<Nat>& cur,
                      std::vector<bool>& used,
                      const std::function<void(const std::vector<Nat>&)>& f) {
  if (static_cast<int>(cur.size()) == len) {
    f(cur);
    return;
  }
  for (Nat v = 1; v <= window; ++v) {
    if (used[static_cast<std::size_t>(v)]) continue;
    used[static_cast<std::size_t>(v)] = true;
    cur.push_back(v);
    injective_tuples(len, window, cur, used, f);
    cur.pop_back();
    used[static_cast<std::size_t>(v)] = false;
  }
}

void for_each_injection(int len, Nat window,
                        const std::function<void(const std::vector<Nat>&)>& f) {
  std::vector<Nat> cur;
  std::vector<bool> used(static_cast<std::size_t>(window) + 1, false);
  injective_tuples(len, window, cur, used, f);
}

}  // namespace

RhoWitness rho_iso(int m, int n, Nat window) {
  using Pair = std::pair<std::vector<Nat>, std::vector<Nat>>;
  std::set<Pair> images;
  RhoWitness w;
  for_each_injection(m + n, window, [&](const std::vector<Nat>& f) {
    ++w.injections;
    images.emplace(std::vector<Nat>(f.begin(), f.begin() + m),
                   std::vector<Nat>(f.begin() + m, f.end()));
  });
  std::set<Pair> pairs;
  for_each_injection(m, window, [&](const std::vector<Nat>& a) {
    NatSet sa(a.begin(), a.end());
    for_each_injection(n, window, [&](const std::vector<Nat>& b) {
      if (std::none_of(b.begin(), b.end(), [&](Nat v) { return sa.count(v); }))
        pairs.emplace(a, b);
    });
  });
  w.disjoint_pairs = pairs.size();
  w.bijective = images.size() == w.injections && images == pairs;
  return w;
}

std::pair<MElement, MElement> shift_bijection(const CanonicalTameMSet&,
                                              const MElement& a,
                                              const CanonicalTameMSet& y,
                                              const MElement& b) {
  QuasiAffine f = order_embed_avoiding(support_of(a));
  return {a, act(y, f.restrict_to(support_of(b)), b)};
}

// ---------------------------------------------------------------------------

MSetMorphism::MSetMorphism(CanonicalTameMSet source, CanonicalTameMSet target,
                           std::map<Key, MElement> assignment,
                           int degree_bound)
    : source_(std::move(source)), target_(std::move(target)) {
  std::size_t used = 0;
  for (auto& [m, a] : source_.levels()) {
    Orbits orb = orbits(a);
    for (int rep : orb.representative) {
      std::string where = std::to_string(m) + ":" + a.name(rep);
      auto it = assignment.find({m, rep});
      if (it == assignment.end())
        fail(ErrorKind::InvalidMorphism, "no value assigned to " + where,
             "assignment", where);
      ++used;
      const MElement& raw = it->second;
      for (Nat c : raw.image)
        if (c < 1 || c > m)
          fail(ErrorKind::InvalidMorphism,
               "value of " + where + " is not supported on {1.." +
                   std::to_string(m) + "}",
               "support", where);
      MElement u = make_element(target_, raw.image, raw.point);
      for (const Permutation& sigma : stabilizer(a, rep, degree_bound))
        if (act(target_, from_perm(sigma), u) != u)
          fail(ErrorKind::InvalidMorphism,
               "value of " + where + " is not fixed by its stabilizer",
               "equivariance", where);
      assign_.emplace(Key{m, rep}, u);
    }
    orbits_.emplace(m, std::move(orb));
  }
  if (used != assignment.size())
    fail(ErrorKind::InvalidMorphism,
         "assignment names points that are not orbit representatives",
         "assignment");
}

MSetMorphism MSetMorphism::identity(const CanonicalTameMSet& x) {
  std::map<Key, MElement> assign;
  for (auto& [m, a] : x.levels())
    for (int rep : orbits(a).representative)
      assign.emplace(Key{m, rep}, MElement{m, iota_tuple(m), rep});
  return MSetMorphism(x, x, std::move(assign));
}

MElement MSetMorphism::apply(const MElement& x) const {
  auto it = orbits_.find(x.level);
  if (it == orbits_.end())
    fail(ErrorKind::DomainMismatch, "element of an empty source level");
  const Orbits& orb = it->second;
  const std::size_t p = static_cast<std::size_t>(x.point);
  int rep = orb.representative[static_cast<std::size_t>(orb.orbit_of[p])];
  const Permutation& tau = orb.transporter[p];
  // [c, tau rep] = [c o tau, rep] = (c o tau) . [id, rep]
  std::map<Nat, Nat> f;
  for (std::size_t j = 0; j < tau.size(); ++j)
    f.emplace(static_cast<Nat>(j) + 1,
              x.image[static_cast<std::size_t>(tau[j])]);
  return act(target_, PartialInjection(std::move(f)),
             assign_.at(Key{x.level, rep}));
}

MSetMorphism box_morphism(const CanonicalTameMSet& x, const MSetMorphism& u,
                          int degree_bound) {
  BoxProduct src(x, u.source(), degree_bound);
  BoxProduct dst(x, u.target(), degree_bound);
  std::map<MSetMorphism::Key, MElement> assign;
  for (auto& [k, a] : src.mset().levels())
    for (int rep : orbits(a).representative) {
      auto [l, r] = src.project(MElement{k, iota_tuple(k), rep});
      assign.emplace(MSetMorphism::Key{k, rep}, dst.pair(l, u.apply(r)));
    }
  return MSetMorphism(src.mset(), dst.mset(), std::move(assign), degree_bound);
}

Quotient coequalize(const MSetMorphism& u, const MSetMorphism& v, Nat window) {
  const CanonicalTameMSet& target = u.target();
  Quotient q;
  q.target_table = elements_up_to(target, window);
  std::map<MElement, std::size_t> index;
  for (std::size_t i = 0; i < q.target_table.size(); ++i)
    index.emplace(q.target_table[i], i);
  UnionFind uf(q.target_table.size());
  for (const MElement& x : elements_up_to(u.source(), window))
    uf.unite(index.at(u.apply(x)), index.at(v.apply(x)));

  std::map<std::size_t, std::size_t> class_of_root;
  std::vector<std::size_t> rep;
  q.class_of.resize(q.target_table.size());
  for (std::size_t i = 0; i < q.target_table.size(); ++i) {
    auto [it, fresh] = class_of_root.emplace(uf.find(i), rep.size());
    if (fresh) rep.push_back(i);
    std::size_t c = it->second;
    q.class_of[i] = c;
    if (q.target_table[i].level < q.target_table[rep[c]].level) rep[c] = i;
  }

  TameTable t;
  t.size = rep.size();
  t.known_support = [&](std::size_t c) {
    return support_of(q.target_table[rep[c]]);
  };
  t.act = [&](const PartialInjection& f,
              std::size_t c) -> std::optional<std::size_t> {
    auto it = index.find(act(target, f, q.target_table[rep[c]]));
    if (it == index.end()) return std::nullopt;
    return q.class_of[it->second];
  };
  t.name = [&](std::size_t c) {
    return to_string(target, q.target_table[rep[c]]);
  };
  q.decomposition = decompose_table(t, window);
  return q;
}

std::vector<std::pair<int, std::string>> orbit_set(const CanonicalTameMSet& x) {
  std::vector<std::pair<int, std::string>> out;
  for (auto& [m, a] : x.levels())
    for (int rep : orbits(a).representative) out.emplace_back(m, a.name(rep));
  return out;
}

}  // namespace tame
