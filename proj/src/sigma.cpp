#include "tame/sigma.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

namespace tame {

namespace {

std::string gen_name(int i) { return "s" + std::to_string(i); }

long factorial(int m) {
  long f = 1;
  for (int k = 2; k <= m; ++k) f *= k;
  return f;
}

}  // namespace

SigmaSet::SigmaSet(int degree, std::vector<std::string> points,
                   std::vector<std::vector<int>> gens)
    : degree_(degree), points_(std::move(points)), gens_(std::move(gens)) {
  if (degree_ < 0)
    fail(ErrorKind::ValidationFailed, "negative degree", "degree");
  std::size_t expected = degree_ > 0 ? static_cast<std::size_t>(degree_ - 1) : 0;
  if (gens_.size() != expected)
    fail(ErrorKind::ValidationFailed,
         "degree " + std::to_string(degree_) + " needs " +
             std::to_string(expected) + " generator tables",
         "generators");
  std::set<std::string> names(points_.begin(), points_.end());
  if (names.size() != points_.size())
    fail(ErrorKind::ValidationFailed, "repeated point name", "unique-points");
  const int n = static_cast<int>(points_.size());
  for (std::size_t g = 0; g < gens_.size(); ++g) {
    const auto& t = gens_[g];
    std::string where = gen_name(static_cast<int>(g) + 1);
    if (static_cast<int>(t.size()) != n)
      fail(ErrorKind::ValidationFailed, "generator table has wrong size",
           "bijection", where);
    std::vector<bool> hit(static_cast<std::size_t>(n), false);
    for (int v : t) {
      if (v < 0 || v >= n || hit[static_cast<std::size_t>(v)])
        fail(ErrorKind::ValidationFailed, "generator is not a bijection",
             "bijection", where);
      hit[static_cast<std::size_t>(v)] = true;
    }
    for (int p = 0; p < n; ++p)
      if (t[static_cast<std::size_t>(t[static_cast<std::size_t>(p)])] != p)
        fail(ErrorKind::ValidationFailed,
             where + " is not an involution at " + points_[p], "involution",
             where);
  }
  for (int i = 1; i < degree_; ++i) {
    for (int j = i + 2; j < degree_; ++j)
      for (int p = 0; p < n; ++p)
        if (apply_generator(i, apply_generator(j, p)) !=
            apply_generator(j, apply_generator(i, p)))
          fail(ErrorKind::ValidationFailed,
               gen_name(i) + " and " + gen_name(j) + " do not commute",
               "commute", gen_name(i));
    if (i + 1 < degree_)
      for (int p = 0; p < n; ++p) {
        int q = p;
        for (int r = 0; r < 3; ++r)
          q = apply_generator(i, apply_generator(i + 1, q));
        if (q != p)
          fail(ErrorKind::ValidationFailed,
               "braid relation fails for " + gen_name(i), "braid",
               gen_name(i));
      }
  }
}

SigmaSet SigmaSet::from_action(int degree, std::vector<std::string> points,
                               const std::function<int(int, int)>& s) {
  std::vector<std::vector<int>> gens;
  int n = static_cast<int>(points.size());
  for (int i = 1; i < degree; ++i) {
    std::vector<int> t(static_cast<std::size_t>(n));
    for (int p = 0; p < n; ++p) t[static_cast<std::size_t>(p)] = s(i, p);
    gens.push_back(std::move(t));
  }
  return SigmaSet(degree, std::move(points), std::move(gens));
}

SigmaSet SigmaSet::trivial(int degree, std::vector<std::string> points) {
  return from_action(degree, std::move(points), [](int, int p) { return p; });
}

SigmaSet SigmaSet::regular(int degree) {
  std::vector<Permutation> perms = all_permutations(degree);
  std::vector<std::string> names;
  std::map<Permutation, int> index;
  for (const Permutation& p : perms) {
    std::string s;
    for (int v : p) s += std::to_string(v + 1);
    names.push_back(s.empty() ? "id" : s);
    index.emplace(p, static_cast<int>(index.size()));
  }
  return from_action(degree, std::move(names), [&](int i, int p) {
    return index.at(compose_perm(transposition(degree, i),
                                 perms[static_cast<std::size_t>(p)]));
  });
}

int SigmaSet::index_of(const std::string& name) const {
  auto it = std::find(points_.begin(), points_.end(), name);
  return it == points_.end() ? -1 : static_cast<int>(it - points_.begin());
}

int SigmaSet::apply_generator(int i, int p) const {
  if (i < 1 || i >= degree_)
    fail(ErrorKind::IndexOutOfRange,
         gen_name(i) + " in degree " + std::to_string(degree_));
  return gens_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(p)];
}

int SigmaSet::act(const Permutation& sigma, int p) const {
  if (static_cast<int>(sigma.size()) != degree_)
    fail(ErrorKind::ArityMismatch, "permutation degree differs from set degree");
  for_each_transposition(sigma, [&](int a) { p = apply_generator(a, p); });
  return p;
}

void for_each_transposition(const Permutation& sigma,
                            const std::function<void(int)>& visit) {
  // Bubble sort: swapping positions a-1, a of the one-line form multiplies
  // on the right by s_a, so the swaps in order spell sigma from the right.
  Permutation arr = sigma;
  bool swapped = true;
  while (swapped) {
    swapped = false;
    for (std::size_t a = 0; a + 1 < arr.size(); ++a)
      if (arr[a] > arr[a + 1]) {
        std::swap(arr[a], arr[a + 1]);
        visit(static_cast<int>(a) + 1);
        swapped = true;
      }
  }
}

Permutation identity_permutation(int m) {
  Permutation p(static_cast<std::size_t>(m));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Permutation compose_perm(const Permutation& a, const Permutation& b) {
  Permutation c(b.size());
  for (std::size_t k = 0; k < b.size(); ++k)
    c[k] = a[static_cast<std::size_t>(b[k])];
  return c;
}

Permutation inverse_perm(const Permutation& a) {
  Permutation c(a.size());
  for (std::size_t k = 0; k < a.size(); ++k)
    c[static_cast<std::size_t>(a[k])] = static_cast<int>(k);
  return c;
}

Permutation transposition(int m, int i) {
  Permutation p = identity_permutation(m);
  std::swap(p[static_cast<std::size_t>(i - 1)], p[static_cast<std::size_t>(i)]);
  return p;
}

long perm_rank(const Permutation& p) {
  long rank = 0;
  const int m = static_cast<int>(p.size());
  for (int k = 0; k < m; ++k) {
    long smaller = 0;
    for (int j = k + 1; j < m; ++j)
      if (p[static_cast<std::size_t>(j)] < p[static_cast<std::size_t>(k)])
        ++smaller;
    rank += smaller * factorial(m - 1 - k);
  }
  return rank;
}

std::vector<Permutation> all_permutations(int m) {
  std::vector<Permutation> out;
  Permutation p = identity_permutation(m);
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

Orbits orbits(const SigmaSet& a) {
  const int n = static_cast<int>(a.size());
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x)
      x = parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  for (int i = 1; i < a.degree(); ++i)
    for (int p = 0; p < n; ++p)
      parent[static_cast<std::size_t>(find(p))] = find(a.apply_generator(i, p));

  std::map<int, int> least;  // root -> point with least name
  for (int p = 0; p < n; ++p) {
    auto [it, fresh] = least.emplace(find(p), p);
    if (!fresh && a.name(p) < a.name(it->second)) it->second = p;
  }
  std::vector<int> reps;
  for (auto& kv : least) reps.push_back(kv.second);
  std::sort(reps.begin(), reps.end(),
            [&](int x, int y) { return a.name(x) < a.name(y); });

  Orbits out;
  out.representative = reps;
  out.orbit_of.assign(static_cast<std::size_t>(n), -1);
  out.transporter.assign(static_cast<std::size_t>(n), Permutation{});
  for (std::size_t o = 0; o < reps.size(); ++o) {
    int rep = reps[o];
    std::deque<int> queue{rep};
    out.orbit_of[static_cast<std::size_t>(rep)] = static_cast<int>(o);
    out.transporter[static_cast<std::size_t>(rep)] =
        identity_permutation(a.degree());
    while (!queue.empty()) {
      int p = queue.front();
      queue.pop_front();
      for (int i = 1; i < a.degree(); ++i) {
        int q = a.apply_generator(i, p);
        if (out.orbit_of[static_cast<std::size_t>(q)] != -1) continue;
        out.orbit_of[static_cast<std::size_t>(q)] = static_cast<int>(o);
        out.transporter[static_cast<std::size_t>(q)] =
            compose_perm(transposition(a.degree(), i),
                         out.transporter[static_cast<std::size_t>(p)]);
        queue.push_back(q);
      }
    }
  }
  return out;
}

std::vector<Permutation> stabilizer(const SigmaSet& a, int p,
                                    int degree_bound) {
  const int m = a.degree();
  if (m > degree_bound)
    fail(ErrorKind::DegreeTooLarge,
         "degree " + std::to_string(m) + " exceeds bound " +
             std::to_string(degree_bound));
  std::unordered_map<long, int> seen;  // rank -> image of p
  std::deque<Permutation> queue{identity_permutation(m)};
  seen.emplace(0, p);
  std::vector<Permutation> out;
  while (!queue.empty()) {
    Permutation sigma = std::move(queue.front());
    queue.pop_front();
    int img = seen.at(perm_rank(sigma));
    if (img == p) out.push_back(sigma);
    for (int i = 1; i < m; ++i) {
      Permutation next = compose_perm(transposition(m, i), sigma);
      if (seen.emplace(perm_rank(next), a.apply_generator(i, img)).second)
        queue.push_back(std::move(next));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> sigma_iso_type(const SigmaSet& a, int degree_bound) {
  const int m = a.degree();
  if (m > degree_bound)
    fail(ErrorKind::DegreeTooLarge,
         "degree " + std::to_string(m) + " exceeds bound " +
             std::to_string(degree_bound));
  const long order = factorial(m);
  Orbits orb = orbits(a);
  std::vector<Permutation> group;
  std::map<std::vector<long>, std::string> cache;
  std::vector<std::string> labels;
  for (int rep : orb.representative) {
    std::vector<Permutation> h = stabilizer(a, rep, degree_bound);
    if (h.size() == 1) {
      labels.push_back("trivial");
      continue;
    }
    if (static_cast<long>(h.size()) == order) {
      labels.push_back("full");
      continue;
    }
    std::vector<long> ranks;
    for (const Permutation& x : h) ranks.push_back(perm_rank(x));
    std::sort(ranks.begin(), ranks.end());
    auto hit = cache.find(ranks);
    if (hit != cache.end()) {
      labels.push_back(hit->second);
      continue;
    }
    if (group.empty()) group = all_permutations(m);
    std::vector<long> best;
    for (const Permutation& g : group) {
      Permutation gi = inverse_perm(g);
      std::vector<long> conj;
      conj.reserve(h.size());
      for (const Permutation& x : h)
        conj.push_back(perm_rank(compose_perm(g, compose_perm(x, gi))));
      std::sort(conj.begin(), conj.end());
      if (best.empty() || conj < best) best = std::move(conj);
    }
    std::string label = "order" + std::to_string(h.size()) + ":";
    for (std::size_t k = 0; k < best.size(); ++k)
      label += (k ? "," : "") + std::to_string(best[k]);
    cache.emplace(ranks, label);
    labels.push_back(label);
  }
  std::sort(labels.begin(), labels.end());
  return labels;
}

std::vector<NatSet> subsets_of_size(int k, int m) {
  std::vector<NatSet> out;
  std::vector<bool> pick(static_cast<std::size_t>(k), false);
  std::fill(pick.begin(), pick.begin() + m, true);
  do {
    NatSet t;
    for (int j = 0; j < k; ++j)
      if (pick[static_cast<std::size_t>(j)]) t.insert(j + 1);
    out.push_back(std::move(t));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

std::string subset_label(const NatSet& t) { return to_string(t); }

SigmaSet induce(const SigmaSet& z, const SigmaSet& w, int degree_bound) {
  const int m = z.degree();
  const int n = w.degree();
  const int k = m + n;
  if (k > degree_bound)
    fail(ErrorKind::DegreeTooLarge,
         "induced degree " + std::to_string(k) + " exceeds bound " +
             std::to_string(degree_bound));
  std::vector<NatSet> subsets = subsets_of_size(k, m);
  std::map<NatSet, int> subset_index;
  for (std::size_t t = 0; t < subsets.size(); ++t)
    subset_index.emplace(subsets[t], static_cast<int>(t));
  const int nz = static_cast<int>(z.size());
  const int nw = static_cast<int>(w.size());
  auto encode = [&](int t, int a, int b) { return (t * nz + a) * nw + b; };

  std::vector<std::string> names;
  for (const NatSet& t : subsets)
    for (int a = 0; a < nz; ++a)
      for (int b = 0; b < nw; ++b)
        names.push_back(subset_label(t) + "|" + z.name(a) + "|" + w.name(b));

  return SigmaSet::from_action(k, std::move(names), [&](int i, int p) {
    int b = p % nw;
    int a = (p / nw) % nz;
    int t = p / (nw * nz);
    const NatSet& subset = subsets[static_cast<std::size_t>(t)];
    bool in_i = subset.count(i) != 0;
    bool in_next = subset.count(i + 1) != 0;
    if (in_i && in_next) {
      int pos = static_cast<int>(std::distance(subset.begin(), subset.find(i)));
      return encode(t, z.apply_generator(pos + 1, a), b);
    }
    if (!in_i && !in_next) {
      int below = static_cast<int>(
          std::distance(subset.begin(), subset.lower_bound(i)));
      int pos = i - below;  // position of i in the complement
      return encode(t, a, w.apply_generator(pos, b));
    }
    NatSet moved = subset;
    moved.erase(in_i ? i : i + 1);
    moved.insert(in_i ? i + 1 : i);
    return encode(subset_index.at(moved), a, b);
  });
}

SigmaSet disjoint_union(const SigmaSet& a, const SigmaSet& b) {
  if (a.degree() != b.degree())
    fail(ErrorKind::ArityMismatch, "disjoint union of different degrees");
  std::set<std::string> left(a.points().begin(), a.points().end());
  bool clash = std::any_of(b.points().begin(), b.points().end(),
                           [&](const std::string& s) { return left.count(s); });
  std::vector<std::string> names;
  for (const auto& s : a.points()) names.push_back(clash ? "L." + s : s);
  for (const auto& s : b.points()) names.push_back(clash ? "R." + s : s);
  const int na = static_cast<int>(a.size());
  return SigmaSet::from_action(a.degree(), std::move(names), [&](int i, int p) {
    return p < na ? a.apply_generator(i, p)
                  : na + b.apply_generator(i, p - na);
  });
}

}  // namespace tame
