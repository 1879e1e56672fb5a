#include "tame/opalg.hpp"

#include <algorithm>
#include <memory>
#include <sstream>

#include "tame/error.hpp"

namespace tame {

namespace {

std::string rep_name(const CommMonoidPresentation::Rep& r) {
  return std::to_string(r.first) + ":" + std::to_string(r.second);
}

// The slot j |-> offset + j on {1..m}.
PartialInjection shift_on(int m, Nat offset) {
  std::map<Nat, Nat> f;
  for (Nat j = 1; j <= m; ++j) f[j] = offset + j;
  return PartialInjection(std::move(f));
}

std::vector<Nat> iota(int m, Nat offset) {
  std::vector<Nat> v;
  for (Nat j = 1; j <= m; ++j) v.push_back(offset + j);
  return v;
}

}  // namespace

CommMonoidPresentation::CommMonoidPresentation(CanonicalTameMSet carrier,
                                               int unit_point,
                                               std::map<Key, MElement> sums,
                                               int level_bound,
                                               int degree_bound)
    : carrier_(std::move(carrier)),
      unit_(unit_point),
      sums_(std::move(sums)),
      level_bound_(level_bound) {
  auto bad = [](const std::string& law, const std::string& msg,
                const std::string& where) {
    fail(ErrorKind::ValidationFailed, msg, law, where);
  };
  const SigmaSet* a0 = carrier_.level(0);
  if (!a0 || unit_ < 0 || unit_ >= static_cast<int>(a0->size()))
    bad("unit", "unit point is not an element of level 0", "0");

  std::vector<Rep> reps;
  for (auto& [m, a] : carrier_.levels()) {
    if (m > level_bound_) break;
    orbits_.emplace(m, orbits(a));
    for (int r : orbits_.at(m).representative) reps.emplace_back(m, r);
  }

  // Table shape.
  for (auto& [key, s] : sums_) {
    auto is_rep = [&](const Rep& r) {
      auto it = orbits_.find(r.first);
      if (it == orbits_.end()) return false;
      auto& rs = it->second.representative;
      return std::find(rs.begin(), rs.end(), r.second) != rs.end();
    };
    const std::string where = rep_name(key.first) + "+" + rep_name(key.second);
    if (!is_rep(key.first) || !is_rep(key.second) ||
        key.first.first + key.second.first > level_bound_)
      bad("table", "sum entry is not a pair of representatives within the bound",
          where);
    const SigmaSet* lvl = carrier_.level(s.level);
    if (!lvl || s.point < 0 || s.point >= static_cast<int>(lvl->size()) ||
        static_cast<int>(s.image.size()) != s.level ||
        !std::is_sorted(s.image.begin(), s.image.end()))
      bad("table", "sum value is not an element of the carrier", where);
    const Nat top = key.first.first + key.second.first;
    for (Nat c : s.image)
      if (c < 1 || c > top)
        bad("support", "sum value is not supported on {1..m+n}", where);
  }
  for (const Rep& x : reps)
    for (const Rep& y : reps)
      if (x.first + y.first <= level_bound_ && !sums_.count({x, y}))
        bad("table", "missing sum", rep_name(x) + "+" + rep_name(y));

  // Stabilizers of a and b must fix a +' b.
  for (auto& [key, s] : sums_) {
    const int m = key.first.first, n = key.second.first;
    const std::string where = rep_name(key.first) + "+" + rep_name(key.second);
    auto check = [&](int deg, int point, Nat offset) {
      for (const Permutation& sigma :
           stabilizer(*carrier_.level(deg), point, degree_bound)) {
        std::map<Nat, Nat> f;
        for (Nat j = 1; j <= m + n; ++j) f[j] = j;
        for (int j = 0; j < deg; ++j)
          f[offset + j + 1] = offset + sigma[static_cast<std::size_t>(j)] + 1;
        if (act(carrier_, PartialInjection(f), s) != s)
          bad("equivariance", "sum is not fixed by a stabilizer element", where);
      }
    };
    check(m, key.first.second, 0);
    check(n, key.second.second, m);
  }

  const MElement e = unit();
  for (const Rep& x : reps) {
    const MElement u{x.first, iota(x.first, 0), x.second};
    if (sum(e, u) != u || sum(u, e) != u)
      bad("unit", "unit law fails", rep_name(x));
  }

  for (const Rep& x : reps)
    for (const Rep& y : reps) {
      if (x.first + y.first > level_bound_) continue;
      const MElement u{x.first, iota(x.first, 0), x.second};
      const MElement v{y.first, iota(y.first, x.first), y.second};
      if (sum(u, v) != sum(v, u))
        bad("commutativity", "x + y differs from y + x",
            rep_name(x) + "+" + rep_name(y));
    }

  for (const Rep& x : reps)
    for (const Rep& y : reps)
      for (const Rep& z : reps) {
        if (x.first + y.first + z.first > level_bound_) continue;
        const MElement u{x.first, iota(x.first, 0), x.second};
        const MElement v{y.first, iota(y.first, x.first), y.second};
        const MElement w{z.first, iota(z.first, x.first + y.first), z.second};
        if (sum(sum(u, v), w) != sum(u, sum(v, w)))
          bad("associativity", "(x + y) + z differs from x + (y + z)",
              rep_name(x) + "+" + rep_name(y) + "+" + rep_name(z));
      }
}

MElement CommMonoidPresentation::sum(const MElement& x,
                                     const MElement& y) const {
  for (Nat c : x.image)
    if (std::binary_search(y.image.begin(), y.image.end(), c))
      fail(ErrorKind::OverlappingSupports,
           "summands share support point " + std::to_string(c), "disjoint",
           std::to_string(c));
  const int m = x.level, n = y.level;
  if (m + n > level_bound_)
    fail(ErrorKind::LevelBoundExceeded,
         "sum at level " + std::to_string(m + n) + " exceeds the bound " +
             std::to_string(level_bound_),
         "level-bound", std::to_string(m + n));
  auto ox = orbits_.find(m), oy = orbits_.find(n);
  if (ox == orbits_.end() || oy == orbits_.end())
    fail(ErrorKind::ValidationFailed, "summand is not an element of the carrier",
         "point", std::to_string(ox == orbits_.end() ? m : n));
  // x = [c o sigma_p, rep] and likewise for y.
  std::map<Nat, Nat> f;
  const Permutation& sp = ox->second.transporter.at(static_cast<std::size_t>(x.point));
  const Permutation& tq = oy->second.transporter.at(static_cast<std::size_t>(y.point));
  for (int j = 0; j < m; ++j)
    f[j + 1] = x.image[static_cast<std::size_t>(sp[static_cast<std::size_t>(j)])];
  for (int j = 0; j < n; ++j)
    f[m + j + 1] =
        y.image[static_cast<std::size_t>(tq[static_cast<std::size_t>(j)])];
  const Key key{{m, ox->second.representative[static_cast<std::size_t>(
                        ox->second.orbit_of[static_cast<std::size_t>(x.point)])]},
                {n, oy->second.representative[static_cast<std::size_t>(
                        oy->second.orbit_of[static_cast<std::size_t>(y.point)])]}};
  auto it = sums_.find(key);
  if (it == sums_.end())
    fail(ErrorKind::ValidationFailed, "missing sum", "table",
         rep_name(key.first) + "+" + rep_name(key.second));
  return act(carrier_, PartialInjection(std::move(f)), it->second);
}

AlgebraAction monoid_to_algebra(const CommMonoidPresentation& p) {
  auto shared = std::make_shared<const CommMonoidPresentation>(p);
  AlgebraAction out;
  out.carrier = p.carrier();
  out.action = [shared](const OperadElementP& phi,
                        const std::vector<MElement>& xs) {
    if (xs.size() != phi.arity())
      fail(ErrorKind::ArityMismatch,
           "operad element of arity " + std::to_string(phi.arity()) +
               " applied to " + std::to_string(xs.size()) + " elements",
           "arity");
    MElement acc = shared->unit();
    for (std::size_t j = 0; j < xs.size(); ++j)
      acc = shared->sum(acc, act(shared->carrier(), phi.slot(j + 1), xs[j]));
    return acc;
  };
  return out;
}

CommMonoidPresentation algebra_to_monoid(const AlgebraAction& a,
                                         int level_bound) {
  const MElement e = a.action(OperadElementP(), {});
  if (e.level != 0)
    fail(ErrorKind::ValidationFailed, "the nullary operation is not at level 0",
         "unit", std::to_string(e.level));
  std::vector<CommMonoidPresentation::Rep> reps;
  for (auto& [m, lvl] : a.carrier.levels()) {
    if (m > level_bound) break;
    for (int r : orbits(lvl).representative) reps.emplace_back(m, r);
  }
  std::map<CommMonoidPresentation::Key, MElement> sums;
  for (auto& x : reps)
    for (auto& y : reps) {
      if (x.first + y.first > level_bound) continue;
      const OperadElementP phi(
          {shift_on(x.first, 0), shift_on(y.first, x.first)});
      sums[{x, y}] = a.action(phi, {MElement{x.first, iota(x.first, 0), x.second},
                                    MElement{y.first, iota(y.first, 0), y.second}});
    }
  return CommMonoidPresentation(a.carrier, e.point, std::move(sums),
                                level_bound);
}

CommMonoidPresentation trivial_from_abelian(
    const std::vector<std::string>& names,
    const std::vector<std::vector<int>>& add, int unit) {
  const int k = static_cast<int>(names.size());
  auto bad = [](const std::string& law, const std::string& msg,
                const std::string& where) {
    fail(ErrorKind::NotAMonoid, msg, law, where);
  };
  if (k == 0) bad("nonempty", "a monoid has at least one element", "");
  if (static_cast<int>(add.size()) != k) bad("table", "table is not square", "");
  for (int i = 0; i < k; ++i) {
    if (static_cast<int>(add[static_cast<std::size_t>(i)].size()) != k)
      bad("table", "table is not square", std::to_string(i));
    for (int v : add[static_cast<std::size_t>(i)])
      if (v < 0 || v >= k) bad("closure", "entry outside the carrier", std::to_string(i));
  }
  if (unit < 0 || unit >= k) bad("unit", "unit is not an element", std::to_string(unit));
  auto op = [&](int i, int j) {
    return add[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  };
  auto pair_name = [&](int i, int j) { return names[static_cast<std::size_t>(i)] + "," + names[static_cast<std::size_t>(j)]; };
  for (int i = 0; i < k; ++i) {
    if (op(unit, i) != i || op(i, unit) != i)
      bad("unit", "unit law fails", names[static_cast<std::size_t>(i)]);
    for (int j = 0; j < k; ++j) {
      if (op(i, j) != op(j, i)) bad("commutativity", "a + b differs from b + a", pair_name(i, j));
      for (int l = 0; l < k; ++l)
        if (op(op(i, j), l) != op(i, op(j, l)))
          bad("associativity", "(a + b) + c differs from a + (b + c)",
              pair_name(i, j) + "," + names[static_cast<std::size_t>(l)]);
    }
  }
  std::map<int, SigmaSet> levels;
  levels.emplace(0, SigmaSet::trivial(0, names));
  CanonicalTameMSet carrier(std::move(levels));
  std::map<CommMonoidPresentation::Key, MElement> sums;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) sums[{{0, i}, {0, j}}] = MElement{0, {}, op(i, j)};
  return CommMonoidPresentation(std::move(carrier), unit, std::move(sums));
}

CommMonoidPresentation cyclic_group(int k) {
  if (k < 1)
    fail(ErrorKind::PreconditionViolated, "cyclic group order must be positive",
         "order", std::to_string(k));
  std::vector<std::string> names;
  std::vector<std::vector<int>> add(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    names.push_back(std::to_string(i));
    for (int j = 0; j < k; ++j) add[static_cast<std::size_t>(i)].push_back((i + j) % k);
  }
  return trivial_from_abelian(names, add, 0);
}

// ---------------------------------------------------------------------------
// X^infinity

namespace {

struct TupleLevels {
  std::vector<int> nonbase;  // digit -> point of X
  std::map<int, std::vector<std::vector<int>>> tuples;
  std::map<int, SigmaSet> levels;
};

TupleLevels tuple_levels(const std::vector<std::string>& names, int basepoint,
                         int level_bound) {
  TupleLevels out;
  for (int p = 0; p < static_cast<int>(names.size()); ++p)
    if (p != basepoint) out.nonbase.push_back(p);
  const int k = static_cast<int>(out.nonbase.size());
  for (int m = 0; m <= level_bound; ++m) {
    std::vector<std::vector<int>> ts{{}};
    for (int j = 0; j < m; ++j) {
      std::vector<std::vector<int>> next;
      for (auto& t : ts)
        for (int d : out.nonbase) {
          next.push_back(t);
          next.back().push_back(d);
        }
      ts = std::move(next);
    }
    if (ts.empty() || (m > 0 && k == 0)) break;
    std::vector<std::string> pts;
    std::map<std::vector<int>, int> index;
    for (std::size_t i = 0; i < ts.size(); ++i) {
      std::string s = "(";
      for (std::size_t j = 0; j < ts[i].size(); ++j)
        s += (j ? "," : "") + names[static_cast<std::size_t>(ts[i][j])];
      pts.push_back(s + ")");
      index[ts[i]] = static_cast<int>(i);
    }
    out.levels.emplace(m, SigmaSet::from_action(m, pts, [&](int i, int p) {
      std::vector<int> t = ts[static_cast<std::size_t>(p)];
      std::swap(t[static_cast<std::size_t>(i - 1)], t[static_cast<std::size_t>(i)]);
      return index.at(t);
    }));
    out.tuples.emplace(m, std::move(ts));
  }
  return out;
}

int tuple_index(const std::vector<int>& t, const std::vector<int>& nonbase) {
  int idx = 0;
  for (int v : t) {
    auto it = std::find(nonbase.begin(), nonbase.end(), v);
    if (it == nonbase.end())
      fail(ErrorKind::ValidationFailed, "basepoint or unknown value in a tuple",
           "value", std::to_string(v));
    idx = idx * static_cast<int>(nonbase.size()) +
          static_cast<int>(it - nonbase.begin());
  }
  return idx;
}

}  // namespace

std::map<Nat, int> XInfinity::to_function(const MElement& e) const {
  const auto& t = tuples.at(e.level).at(static_cast<std::size_t>(e.point));
  std::map<Nat, int> f;
  for (std::size_t j = 0; j < t.size(); ++j) f[e.image[j]] = t[j];
  return f;
}

MElement XInfinity::from_function(const std::map<Nat, int>& f) const {
  std::vector<int> nonbase;
  for (int p = 0; p < static_cast<int>(names.size()); ++p)
    if (p != basepoint) nonbase.push_back(p);
  std::vector<Nat> image;
  std::vector<int> t;
  for (auto& [i, v] : f) {
    if (v == basepoint) continue;
    image.push_back(i);
    t.push_back(v);
  }
  const int level = static_cast<int>(image.size());
  if (level > presentation.level_bound())
    fail(ErrorKind::LevelBoundExceeded,
         "function has " + std::to_string(level) + " non-basepoint values",
         "level-bound", std::to_string(level));
  return MElement{level, std::move(image), tuple_index(t, nonbase)};
}

XInfinity xinf(const std::vector<std::string>& names, int basepoint,
               int level_bound) {
  if (basepoint < 0 || basepoint >= static_cast<int>(names.size()))
    fail(ErrorKind::PreconditionViolated, "basepoint is not a point of X",
         "basepoint", std::to_string(basepoint));
  TupleLevels tl = tuple_levels(names, basepoint, level_bound);
  CanonicalTameMSet carrier(tl.levels);
  // a +' b is the concatenated tuple on {1..m+n}.
  std::map<CommMonoidPresentation::Key, MElement> sums;
  for (auto& [m, am] : carrier.levels())
    for (int a : orbits(am).representative)
      for (auto& [n, an] : carrier.levels()) {
        if (m + n > level_bound) break;
        for (int b : orbits(an).representative) {
          std::vector<int> t = tl.tuples.at(m)[static_cast<std::size_t>(a)];
          auto& tb = tl.tuples.at(n)[static_cast<std::size_t>(b)];
          t.insert(t.end(), tb.begin(), tb.end());
          sums[{{m, a}, {n, b}}] =
              MElement{m + n, iota(m + n, 0), tuple_index(t, tl.nonbase)};
        }
      }
  CommMonoidPresentation p(std::move(carrier), 0, std::move(sums), level_bound);
  return XInfinity{std::move(p), names, basepoint, std::move(tl.tuples)};
}

WedgeWitness wedge_iso(const std::vector<std::string>& x, int x_base,
                       const std::vector<std::string>& y, int y_base,
                       int level_bound) {
  const XInfinity xi = xinf(x, x_base, level_bound);
  const XInfinity yi = xinf(y, y_base, level_bound);
  // X v Y: the basepoint, then X \ *, then Y \ *.
  std::vector<std::string> w{x[static_cast<std::size_t>(x_base)]};
  std::vector<int> from_x(x.size(), 0), from_y(y.size(), 0);
  for (int p = 0; p < static_cast<int>(x.size()); ++p)
    if (p != x_base) {
      from_x[static_cast<std::size_t>(p)] = static_cast<int>(w.size());
      w.push_back("L." + x[static_cast<std::size_t>(p)]);
    }
  for (int p = 0; p < static_cast<int>(y.size()); ++p)
    if (p != y_base) {
      from_y[static_cast<std::size_t>(p)] = static_cast<int>(w.size());
      w.push_back("R." + y[static_cast<std::size_t>(p)]);
    }
  const XInfinity wi = xinf(w, 0, level_bound);
  const BoxProduct box(xi.presentation.carrier(), yi.presentation.carrier(),
                       kDefaultDegreeBound, level_bound);

  WedgeWitness out;
  out.isomorphism = out.equivariant = true;
  for (int k = 0; k <= level_bound; ++k) {
    const SigmaSet* bk = box.mset().level(k);
    const SigmaSet* wk = wi.presentation.carrier().level(k);
    out.box_counts.push_back(bk ? bk->size() : 0);
    out.wedge_counts.push_back(wk ? wk->size() : 0);
    if (!bk || !wk) {
      if (bk || wk) out.isomorphism = false;
      continue;
    }
    std::vector<int> map(bk->size(), -1);
    std::vector<char> hit(wk->size(), 0);
    for (int z = 0; z < static_cast<int>(bk->size()); ++z) {
      auto [a, b] = box.project(MElement{k, iota(k, 0), z});
      std::map<Nat, int> f;
      for (auto& [i, v] : xi.to_function(a)) f[i] = from_x[static_cast<std::size_t>(v)];
      for (auto& [i, v] : yi.to_function(b)) f[i] = from_y[static_cast<std::size_t>(v)];
      const MElement img = wi.from_function(f);
      if (img.level != k || img.image != iota(k, 0) ||
          hit[static_cast<std::size_t>(img.point)]) {
        out.isomorphism = false;
        continue;
      }
      hit[static_cast<std::size_t>(img.point)] = 1;
      map[static_cast<std::size_t>(z)] = img.point;
    }
    if (bk->size() != wk->size()) out.isomorphism = false;
    for (int i = 1; i < k; ++i)
      for (int z = 0; z < static_cast<int>(bk->size()); ++z) {
        const int lhs = map[static_cast<std::size_t>(bk->apply_generator(i, z))];
        const int mz = map[static_cast<std::size_t>(z)];
        if (lhs < 0 || mz < 0 || lhs != wk->apply_generator(i, mz))
          out.equivariant = false;
      }
  }
  return out;
}

std::pair<MElement, MElement> chi(const OperadElementP& psi,
                                  const CanonicalTameMSet& x,
                                  const MElement& a,
                                  const CanonicalTameMSet& y,
                                  const MElement& b) {
  if (psi.arity() != 2)
    fail(ErrorKind::ArityMismatch, "chi needs an element of arity 2", "arity",
         std::to_string(psi.arity()));
  return {act(x, psi.slot(1), a), act(y, psi.slot(2), b)};
}

OperadElementP chi_section(const MElement& a, const MElement& b) {
  const NatSet sa = support_of(a), sb = support_of(b);
  for (Nat c : sb)
    if (sa.count(c))
      fail(ErrorKind::OverlappingSupports,
           "supports meet at " + std::to_string(c), "disjoint",
           std::to_string(c));
  return OperadElementP(
      {PartialInjection::identity_on(sa), PartialInjection::identity_on(sb)});
}

}  // namespace tame
