#include "tame/random_gen.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "tame/error.hpp"

namespace tame {

Nat Rng::uniform(Nat lo, Nat hi) {
  if (hi < lo)
    fail(ErrorKind::PreconditionViolated, "empty range", "range",
         std::to_string(lo) + ".." + std::to_string(hi));
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<Nat>(next() % span);
}

namespace {

// Orbit states: "w<digits>" words, "+" / "-" for the sign, "p<a><b><c><d>"
// for a pairing {a,b},{c,d} of {1..4} with a < b, a < c < d.
std::string act_state(const std::string& s, int i) {
  if (s == "+") return "-";
  if (s == "-") return "+";
  std::string t = s;
  if (s[0] == 'w') {
    std::swap(t[static_cast<std::size_t>(i)], t[static_cast<std::size_t>(i + 1)]);
    return t;
  }
  // pairing: relabel i <-> i+1 and renormalize
  auto relabel = [&](char c) {
    if (c == '0' + i) return static_cast<char>('0' + i + 1);
    if (c == '0' + i + 1) return static_cast<char>('0' + i);
    return c;
  };
  std::pair<char, char> a{relabel(t[1]), relabel(t[2])}, b{relabel(t[3]), relabel(t[4])};
  if (a.first > a.second) std::swap(a.first, a.second);
  if (b.first > b.second) std::swap(b.first, b.second);
  if (b < a) std::swap(a, b);
  return std::string("p") + a.first + a.second + b.first + b.second;
}

std::vector<std::string> orbit_of(const std::string& seed, int m) {
  std::vector<std::string> out{seed};
  std::set<std::string> seen{seed};
  for (std::size_t k = 0; k < out.size(); ++k)
    for (int i = 1; i < m; ++i) {
      std::string t = act_state(out[k], i);
      if (seen.insert(t).second) out.push_back(t);
    }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

SigmaSet random_sigma_set(Rng& rng, int m, int max_points) {
  const int budget = max_points < 1 ? 0 : rng.uniform_int(1, max_points);
  std::vector<std::string> names;
  std::vector<std::string> states;
  int orbit_count = 0;
  for (int attempt = 0; attempt < 8 && static_cast<int>(names.size()) < budget; ++attempt) {
    std::string seed;
    const int type = rng.uniform_int(0, 3);
    if (type == 1 && m >= 2) {
      seed = "+";
    } else if (type == 2 && m == 4) {
      seed = "p1234";
    } else {
      seed = "w";
      const int letters = type == 0 ? 1 : rng.uniform_int(1, 3);
      for (int j = 0; j < m; ++j) seed += static_cast<char>('0' + rng.uniform_int(0, letters - 1));
    }
    const std::vector<std::string> orbit = orbit_of(seed, m);
    if (static_cast<int>(names.size() + orbit.size()) > budget) continue;
    const std::string prefix = "o" + std::to_string(orbit_count++) + ".";
    for (const std::string& s : orbit) {
      names.push_back(prefix + s);
      states.push_back(s);
    }
  }
  std::map<std::string, int> index;
  for (int p = 0; p < static_cast<int>(names.size()); ++p) index[names[static_cast<std::size_t>(p)]] = p;
  return SigmaSet::from_action(m, names, [&](int i, int p) {
    const std::string& name = names[static_cast<std::size_t>(p)];
    const std::string prefix = name.substr(0, name.find('.') + 1);
    return index.at(prefix + act_state(states[static_cast<std::size_t>(p)], i));
  });
}

CanonicalTameMSet random_mset(Rng& rng, int max_level, int max_points) {
  std::map<int, SigmaSet> levels;
  for (int m = 0; m <= max_level; ++m)
    if (rng.chance(2, 3)) {
      SigmaSet a = random_sigma_set(rng, m, max_points);
      if (!a.empty()) levels.emplace(m, std::move(a));
    }
  if (levels.empty()) levels.emplace(0, SigmaSet::trivial(0, {"o0.w"}));
  return CanonicalTameMSet(std::move(levels));
}

CanonicalTameMSet random_sub_mset(Rng& rng, const CanonicalTameMSet& x) {
  std::map<int, SigmaSet> levels;
  for (auto& [m, a] : x.levels()) {
    const Orbits o = orbits(a);
    std::vector<char> keep(o.count());
    for (auto& k : keep) k = rng.chance(1, 2);
    std::vector<std::string> names;
    std::vector<int> back;
    for (int p = 0; p < static_cast<int>(a.size()); ++p)
      if (keep[static_cast<std::size_t>(o.orbit_of[static_cast<std::size_t>(p)])]) {
        names.push_back(a.name(p));
        back.push_back(p);
      }
    if (names.empty()) continue;
    std::map<int, int> forward;
    for (int q = 0; q < static_cast<int>(back.size()); ++q) forward[back[static_cast<std::size_t>(q)]] = q;
    levels.emplace(m, SigmaSet::from_action(m, names, [&](int i, int q) {
      return forward.at(a.apply_generator(i, back[static_cast<std::size_t>(q)]));
    }));
  }
  return CanonicalTameMSet(std::move(levels));
}

MElement random_element(Rng& rng, const CanonicalTameMSet& x, Nat window,
                        int max_level) {
  std::vector<int> candidates;
  for (auto& [m, a] : x.levels())
    if (m <= window && (max_level < 0 || m <= max_level)) candidates.push_back(m);
  if (candidates.empty())
    fail(ErrorKind::PreconditionViolated, "no level fits the window", "window",
         std::to_string(window));
  const int m = rng.pick(candidates);
  std::vector<Nat> values(static_cast<std::size_t>(window));
  std::iota(values.begin(), values.end(), Nat{1});
  rng.shuffle(values);
  values.resize(static_cast<std::size_t>(m));
  const int p = rng.uniform_int(0, static_cast<int>(x.level(m)->size()) - 1);
  return make_element(x, std::move(values), p);
}

NatSet random_subset(Rng& rng, Nat max_value, int max_size) {
  const int size = rng.uniform_int(0, static_cast<int>(std::min<Nat>(max_size, max_value)));
  NatSet s;
  while (static_cast<int>(s.size()) < size) s.insert(rng.uniform(1, max_value));
  return s;
}

PartialInjection random_partial_injection(Rng& rng, const NatSet& domain,
                                          Nat value_max) {
  return random_operad_p(rng, {domain}, value_max).slot(1);
}

OperadElementP random_operad_p(Rng& rng, const std::vector<NatSet>& domains,
                               Nat value_max) {
  std::size_t total = 0;
  for (const NatSet& d : domains) total += d.size();
  if (static_cast<Nat>(total) > value_max)
    fail(ErrorKind::PreconditionViolated, "not enough values", "value-max",
         std::to_string(value_max));
  std::vector<Nat> values(static_cast<std::size_t>(value_max));
  std::iota(values.begin(), values.end(), Nat{1});
  rng.shuffle(values);
  std::vector<PartialInjection> slots;
  std::size_t next = 0;
  for (const NatSet& d : domains) {
    std::map<Nat, Nat> f;
    for (Nat k : d) f[k] = values[next++];
    slots.emplace_back(std::move(f));
  }
  return OperadElementP(std::move(slots));
}

namespace {

QuasiAffine basic_qa(Rng& rng) {
  switch (rng.uniform_int(0, 3)) {
    case 0:
      return QuasiAffine::affine(rng.uniform(1, 3), rng.uniform(0, 3));
    case 1:
      return order_embed_avoiding(random_subset(rng, 6, 3));
    case 2:
      // 4k |-> 2k, 4k+2 |-> 4k+1, odd i |-> 2i+1: mixed parity.
      return QuasiAffine::from_pieces({{1, std::nullopt, 4, 0, 1, 0, 2},
                                       {1, std::nullopt, 4, 2, 1, -1, 1},
                                       {1, std::nullopt, 2, 1, 2, 1, 1}});
    default: {
      const NatSet dom = random_subset(rng, 4, 3);
      return complete(random_partial_injection(rng, dom, 6));
    }
  }
}

}  // namespace

QuasiAffine random_qa(Rng& rng) {
  if (rng.chance(1, 3)) return compose(basic_qa(rng), basic_qa(rng));
  return basic_qa(rng);
}

OperadElementQ random_operad_q(Rng& rng, int n) {
  const QuasiAffine g = random_qa(rng);
  std::vector<QuasiAffine> slots;
  for (int k = 1; k <= n; ++k)
    slots.push_back(compose(g, compose(QuasiAffine::affine(n, k - n), random_qa(rng))));
  return OperadElementQ(std::move(slots));
}

namespace {

TruncatedISet basic_iset(Rng& rng, int truncation, int max_stable) {
  switch (rng.uniform_int(0, max_stable >= 1 ? 3 : 2)) {
    case 0:
      return representable_iset(rng.uniform_int(0, max_stable), truncation);
    case 1: {
      std::vector<std::string> pts;
      const int k = rng.uniform_int(1, 3);
      for (int i = 0; i < k; ++i) pts.push_back(std::string(1, static_cast<char>('a' + i)));
      return constant_iset(pts, truncation);
    }
    case 2:
      return bullet_iset(random_mset(rng, max_stable, 3), truncation).iset;
    default:
      return coequalizer_example(truncation);
  }
}

}  // namespace

TruncatedISet random_iset(Rng& rng, int truncation, int max_stable) {
  TruncatedISet x = basic_iset(rng, truncation, max_stable);
  if (!rng.chance(1, 3)) return x;
  std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> pairs;
  const int count = rng.uniform_int(1, 2);
  for (int k = 0; k < count; ++k) {
    // Relations above stableFrom would need levels past the truncation.
    const int m = rng.uniform_int(0, x.stable_from());
    if (x.size(m) < 2) continue;
    pairs.push_back({{m, rng.uniform_int(0, x.size(m) - 1)},
                     {m, rng.uniform_int(0, x.size(m) - 1)}});
  }
  return pairs.empty() ? x : quotient_iset(x, pairs);
}

LevelwiseMap random_flat_mono(Rng& rng, int truncation) {
  const CanonicalTameMSet w = random_mset(rng, 2, 3);
  CanonicalTameMSet sub = random_sub_mset(rng, w);
  if (sub.levels().empty()) sub = w;
  const BulletISet x = bullet_iset(sub, truncation);
  const BulletISet y = bullet_iset(w, truncation);
  std::vector<std::vector<int>> map(static_cast<std::size_t>(truncation + 1));
  for (int m = 0; m <= truncation; ++m)
    for (const MElement& e : x.elements[static_cast<std::size_t>(m)]) {
      const std::string& name = sub.level(e.level)->name(e.point);
      const MElement f{e.level, e.image, w.level(e.level)->index_of(name)};
      map[static_cast<std::size_t>(m)].push_back(y.index_of(m, f));
    }
  return LevelwiseMap(x.iset, y.iset, std::move(map));
}

}  // namespace tame
