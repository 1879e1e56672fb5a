#include "tame/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "tame/error.hpp"
#include "tame/iset.hpp"
#include "tame/certificate.hpp"
#include "tame/mset.hpp"
#include "tame/opalg.hpp"
#include "tame/random_gen.hpp"

namespace tame {

namespace {

constexpr std::size_t kKeptFailures = 5;

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) h = (h ^ c) * 0x100000001b3ull;
  return h;
}

class Runner {
 public:
  Runner(std::string name, const SelftestOptions& o, int default_cases)
      : opts_(o), start_(std::chrono::steady_clock::now()) {
    r_.name = std::move(name);
    cases_ = o.cases > 0 ? o.cases : default_cases;
  }

  int cases() const { return cases_; }
  const SelftestOptions& options() const { return opts_; }

  Rng rng_for(std::size_t k) const {
    return Rng(splitmix(opts_.seed ^ splitmix(fnv1a(r_.name) + k)));
  }

  void check(bool ok, const std::function<std::string()>& what) {
    if (ok) return;
    ++r_.failure_count;
    if (r_.failures.size() < kKeptFailures) r_.failures.push_back(prefix_ + what());
  }

  // Runs body(k, rng) for every case, counting an escaped error as a failure.
  void each(const std::function<void(std::size_t, Rng&)>& body) {
    each(static_cast<std::size_t>(cases_), body);
  }
  void each(std::size_t count, const std::function<void(std::size_t, Rng&)>& body) {
    for (std::size_t k = 0; k < count; ++k) {
      Rng rng = rng_for(k);
      prefix_ = "case " + std::to_string(k) + ": ";
      ++r_.cases;
      try {
        body(k, rng);
      } catch (const Error& e) {
        check(false, [&] {
          return std::string(to_string(e.kind())) + ": " + e.what() +
                 (e.invariant().empty() ? "" : " [" + e.invariant() + "]");
        });
      }
    }
    prefix_.clear();
  }

  void detail(std::string d) { r_.detail = std::move(d); }

  SuiteResult finish() {
    r_.elapsed_ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start_)
                        .count();
    return std::move(r_);
  }

 private:
  SelftestOptions opts_;
  std::chrono::steady_clock::time_point start_;
  SuiteResult r_;
  int cases_ = 0;
  std::string prefix_;
};

std::vector<Nat> iota_vec(int m) {
  std::vector<Nat> v;
  for (Nat j = 1; j <= m; ++j) v.push_back(j);
  return v;
}

// ---------------------------------------------------------------------------

SuiteResult decomposition_round_trip(const SelftestOptions& o) {
  Runner run("decomposition-round-trip", o, 100);
  const Nat w = o.window;
  run.each([&](std::size_t, Rng& rng) {
    const CanonicalTameMSet x = random_mset(rng, 4, 5);
    const std::vector<MElement> elems = elements_up_to(x, w);
    const Decomposition d = decompose_table(element_table(x, elems), w);
    run.check(iso_type_equal(d.mset, x), [] { return "decomposition not isomorphic"; });
    for (std::size_t i = 0; i < elems.size(); ++i)
      if (d.support[i] != support_of(elems[i])) {
        run.check(false, [&] { return "support of element " + std::to_string(i); });
        break;
      }
  });
  return run.finish();
}

SuiteResult box_oracle(const SelftestOptions& o) {
  Runner run("box-oracle", o, 50);
  constexpr Nat kWindow = 6;
  run.each([&](std::size_t, Rng& rng) {
    const CanonicalTameMSet x = random_mset(rng, 2, 3);
    const CanonicalTameMSet y = random_mset(rng, 2, 3);
    const BoxProduct box(x, y);
    // Brute force: all disjointly supported pairs in the window.
    std::set<MElement> hit;
    std::size_t pairs = 0;
    const auto ex = elements_up_to(x, kWindow), ey = elements_up_to(y, kWindow);
    for (const MElement& a : ex)
      for (const MElement& b : ey) {
        const NatSet sa = support_of(a);
        if (std::any_of(b.image.begin(), b.image.end(), [&](Nat c) { return sa.count(c); }))
          continue;
        ++pairs;
        const MElement z = box.pair(a, b);
        hit.insert(z);
        if (box.project(z) != std::make_pair(a, b))
          run.check(false, [&] { return "projection does not invert pairing"; });
      }
    const auto ez = elements_up_to(box.mset(), kWindow);
    run.check(hit.size() == pairs, [] { return "pairing is not injective"; });
    run.check(std::set<MElement>(ez.begin(), ez.end()) == hit, [&] {
      return "pairing image has " + std::to_string(hit.size()) + " elements, box has " +
             std::to_string(ez.size());
    });
    if (ez.empty()) return;
    for (int t = 0; t < 20; ++t) {
      const MElement z = rng.pick(ez);
      const PartialInjection f = random_partial_injection(rng, support_of(z), 12);
      const auto [a, b] = box.project(z);
      const auto lhs = box.project(act(box.mset(), f, z));
      run.check(lhs == std::make_pair(act(x, f, a), act(y, f, b)),
                [&] { return "projections do not commute with " + to_string(f); });
    }
  });
  return run.finish();
}

SuiteResult rho_isomorphism(const SelftestOptions& o) {
  Runner run("rho-iso", o, 0);
  std::vector<std::pair<int, int>> shapes;
  for (int m = 0; m <= 5; ++m)
    for (int n = 0; m + n <= 5; ++n) shapes.emplace_back(m, n);
  run.each(shapes.size(), [&](std::size_t k, Rng&) {
    const auto [m, n] = shapes[k];
    const RhoWitness w = rho_iso(m, n, 7);
    run.check(w.bijective && w.injections == w.disjoint_pairs, [&, m = m, n = n] {
      return "rho(" + std::to_string(m) + "," + std::to_string(n) + ") is not bijective";
    });
  });
  return run.finish();
}

SuiteResult day_vs_box(const SelftestOptions& o) {
  Runner run("day-vs-box", o, 20);
  constexpr int kN = 5;
  run.each([&](std::size_t, Rng& rng) {
    const TruncatedISet x = random_iset(rng, kN, 1);
    const TruncatedISet y = random_iset(rng, kN, 1);
    const DayConvolution day = day_convolution(x, y);
    const CanonicalTameMSet lhs = canonicalize(day.iset);
    const CanonicalTameMSet rhs = box_canonical(canonicalize(x), canonicalize(y));
    run.check(iso_type_equal(lhs, rhs), [] {
      return "canonical form of the Day convolution differs from the box product";
    });
  });
  return run.finish();
}

SuiteResult flatness_criteria(const SelftestOptions& o) {
  Runner run("flatness-criteria", o, 100);
  // Fixed instances first: the coequalizer and the representables.
  const TruncatedISet coeq = coequalizer_example(4);
  const FlatResult lat = is_flat(coeq, FlatMode::Latching);
  const FlatResult dir = is_flat(coeq, FlatMode::Direct);
  run.check(!lat.flat && lat.level == 2 && !dir.flat, [&] {
    return "coequalizer: latching flat=" + std::to_string(lat.flat) + " at level " +
           std::to_string(lat.level) + ", direct flat=" + std::to_string(dir.flat);
  });
  for (int m = 0; m <= 4; ++m) {
    const TruncatedISet r = representable_iset(m, 4);
    run.check(is_flat(r, FlatMode::Latching).flat && is_flat(r, FlatMode::Direct).flat,
              [&] { return "representable " + std::to_string(m) + " is not flat"; });
  }
  std::size_t flat = 0;
  run.each([&](std::size_t, Rng& rng) {
    const int n = rng.uniform_int(1, 4);
    const TruncatedISet x = random_iset(rng, n, std::min(n, 2));
    const FlatResult a = is_flat(x, FlatMode::Latching);
    const FlatResult b = is_flat(x, FlatMode::Direct);
    flat += a.flat;
    run.check(a.flat == b.flat, [&] {
      return "latching says " + std::string(a.flat ? "flat" : "not flat") +
             ", direct says " + (b.flat ? "flat" : "not flat: " + b.witness);
    });
  });
  run.detail(std::to_string(flat) + " random instances flat; coequalizer witness: " +
             lat.witness);
  return run.finish();
}

SuiteResult adjunction(const SelftestOptions& o) {
  Runner run("adjunction", o, 50);
  constexpr int kN = 4;
  run.each([&](std::size_t, Rng& rng) {
    const CanonicalTameMSet w = random_mset(rng, 2, 3);
    run.check(counit_check(w, kN), [] { return "counit is not a bijection"; });
    const TruncatedISet x = random_iset(rng, kN, 2);
    const FlatReplacement fr = flat_replace(x);
    run.check(n_iso_check(fr.unit), [] { return "unit is not an N-isomorphism"; });
    const bool flat = is_flat(x, FlatMode::Latching).flat;
    run.check(fr.unit.levelwise_bijective() == flat, [&] {
      return std::string("unit levelwise bijective=") +
             (fr.unit.levelwise_bijective() ? "yes" : "no") + " but flat=" +
             (flat ? "yes" : "no");
    });
  });
  return run.finish();
}

SuiteResult mono_pushout(const SelftestOptions& o) {
  Runner run("mono-pushout", o, 30);
  run.each([&](std::size_t, Rng& rng) {
    const LevelwiseMap i = random_flat_mono(rng, 4);
    run.check(i.levelwise_injective(), [] { return "map is not levelwise injective"; });
    run.check(is_flat(i.source(), FlatMode::Latching).flat &&
                  is_flat(i.target(), FlatMode::Latching).flat,
              [] { return "endpoints are not flat"; });
    std::string witness;
    run.check(mono_pushout_check(i, &witness), [&] { return witness; });
  });
  return run.finish();
}

SuiteResult agreeing_certificates(const SelftestOptions& o) {
  Runner run("agreeing-certificates", o, 50);
  std::size_t longest = 0, total = 0, count = 0;
  auto one = [&](Rng& rng, int n) {
    const OperadElementQ phi = random_operad_q(rng, n);
    std::vector<NatSet> a;
    for (int i = 0; i < n; ++i) a.push_back(random_subset(rng, 6, 3));
    const OperadElementQ psi = extend_agreeing(phi, a, random_operad_q(rng, n));
    const Certificate c = agreeing_chain(phi, psi, a);
    const Verification v = verify_certificate(c);
    run.check(v.ok, [&] {
      return "certificate rejected at step " + std::to_string(v.failing_step) + ": " + v.reason;
    });
    run.check(c.source == phi && c.target == psi, [] { return "endpoints differ"; });
    longest = std::max(longest, c.chain.size());
    total += c.chain.size();
    ++count;
  };
  run.each([&](std::size_t, Rng& rng) { one(rng, 2); });
  const std::size_t extra = o.cases > 0 ? std::max(1, o.cases / 5) : 10;
  Runner arity3("agreeing-certificates-n3", o, 0);
  run.each(extra, [&](std::size_t k, Rng&) {
    Rng rng = arity3.rng_for(k);
    one(rng, 3);
  });
  char mean[32];
  std::snprintf(mean, sizeof mean, "%.2f",
                count ? static_cast<double>(total) / static_cast<double>(count) : 0.0);
  run.detail(std::string("chain length mean ") + mean + ", max " + std::to_string(longest));
  return run.finish();
}

std::vector<MElement> disjoint_elements(Rng& rng, const CanonicalTameMSet& x,
                                        int count, int level_budget, Nat window) {
  std::vector<Nat> values(static_cast<std::size_t>(window));
  for (Nat v = 1; v <= window; ++v) values[static_cast<std::size_t>(v - 1)] = v;
  rng.shuffle(values);
  std::vector<MElement> out;
  std::size_t next = 0;
  for (int j = 0; j < count; ++j) {
    std::vector<int> levels;
    for (auto& [m, a] : x.levels())
      if (m <= level_budget && next + static_cast<std::size_t>(m) <= values.size())
        levels.push_back(m);
    if (levels.empty())
      fail(ErrorKind::PreconditionViolated, "no level fits the budget", "level-bound");
    const int m = rng.pick(levels);
    std::vector<Nat> image(values.begin() + static_cast<long>(next),
                           values.begin() + static_cast<long>(next) + m);
    next += static_cast<std::size_t>(m);
    level_budget -= m;
    out.push_back(make_element(
        x, image, rng.uniform_int(0, static_cast<int>(x.level(m)->size()) - 1)));
  }
  return out;
}

// An arity-n element whose slot j is injective on supp(xs[j]) plus a few
// extra points, images pairwise disjoint in {1..value_max}.
OperadElementP covering_element(Rng& rng, const std::vector<MElement>& xs,
                                Nat value_max) {
  std::vector<NatSet> domains;
  for (const MElement& x : xs) {
    NatSet d = support_of(x);
    if (rng.chance(1, 2)) d.insert(rng.uniform(1, 12));
    domains.push_back(std::move(d));
  }
  return random_operad_p(rng, domains, value_max);
}

SuiteResult algebra_round_trips(const SelftestOptions& o) {
  Runner run("algebra-round-trips", o, 100);
  // Table round trips and sampled action round trips on fixed instances.
  struct Instance {
    std::string name;
    CommMonoidPresentation p;
    std::optional<XInfinity> xi;
  };
  std::vector<Instance> instances;
  for (int k : {2, 3, 4}) instances.push_back({"Z/" + std::to_string(k), cyclic_group(k), {}});
  const std::vector<std::vector<std::string>> pointed{{"*"}, {"*", "a"}, {"*", "a", "b"}};
  for (const auto& pts : pointed) {
    XInfinity xi = xinf(pts, 0, 4);
    instances.push_back({"xinf|X|=" + std::to_string(pts.size()), xi.presentation, xi});
  }
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const Instance& in = instances[i];
    const AlgebraAction a = monoid_to_algebra(in.p);
    const CommMonoidPresentation back = algebra_to_monoid(a, in.p.level_bound());
    run.check(back.sums() == in.p.sums() && back.unit_point() == in.p.unit_point(),
              [&] { return in.name + ": presentation round trip differs"; });
    const AlgebraAction a2 = monoid_to_algebra(back);
    Rng rng = run.rng_for(1000 + i);
    for (int t = 0; t < 20; ++t) {
      const int n = rng.uniform_int(0, 3);
      const auto xs = disjoint_elements(rng, in.p.carrier(), n, in.p.level_bound(), 8);
      const OperadElementP phi = covering_element(rng, xs, 20);
      run.check(a.action(phi, xs) == a2.action(phi, xs),
                [&] { return in.name + ": action round trip differs"; });
      if (!in.xi) {
        // Trivial algebra: the sum of the points, whatever phi is.
        int s = 0;
        for (const MElement& x : xs) s += x.point;
        const int k = static_cast<int>(in.p.carrier().level(0)->size());
        run.check(a.action(phi, xs).point == s % k,
                  [&] { return in.name + ": action is not the monoid sum"; });
      }
    }
  }
  // The operad action on X^infinity against pointwise evaluation.
  run.each([&](std::size_t k, Rng& rng) {
    const Instance& in = instances[3 + k % 3];
    const XInfinity& xi = *in.xi;
    const AlgebraAction a = monoid_to_algebra(in.p);
    const int n = rng.uniform_int(0, 3);
    const auto xs = disjoint_elements(rng, in.p.carrier(), n, 4, 8);
    const OperadElementP phi = covering_element(rng, xs, 20);
    std::map<Nat, int> expected;
    for (std::size_t j = 0; j < xs.size(); ++j)
      for (auto& [i, v] : xi.to_function(xs[j])) expected[phi.slot(j + 1)(i)] = v;
    run.check(xi.to_function(a.action(phi, xs)) == expected,
              [&] { return in.name + ": action differs from pointwise evaluation"; });
  });
  return run.finish();
}

SuiteResult chi_isomorphism(const SelftestOptions& o) {
  Runner run("chi-iso", o, 20);
  constexpr Nat kWindow = 6;
  run.each([&](std::size_t, Rng& rng) {
    const CanonicalTameMSet x = random_mset(rng, 2, 3);
    const CanonicalTameMSet y = random_mset(rng, 2, 3);
    const BoxProduct box(x, y);
    for (const MElement& z : elements_up_to(box.mset(), kWindow)) {
      const auto [a, b] = box.project(z);
      const OperadElementP s = chi_section(a, b);
      run.check(chi(s, x, a, y, b) == std::make_pair(a, b) && box.pair(a, b) == z,
                [&] { return "section is not inverse to chi at " + to_string(box.mset(), z); });
    }
    // Probes: equivariance and compatibility with the M x M action.
    for (int t = 0; t < 5; ++t) {
      const MElement a = random_element(rng, x, 6);
      const MElement b = random_element(rng, y, 6);
      const PartialInjection u = random_partial_injection(rng, support_of(a), 8);
      const PartialInjection v = random_partial_injection(rng, support_of(b), 8);
      std::vector<NatSet> dom{u.image(), v.image()};
      for (NatSet& d : dom)
        if (rng.chance(1, 2)) d.insert(rng.uniform(1, 8));
      const OperadElementP psi = random_operad_p(rng, dom, 16);
      const OperadElementP psi_uv({compose(psi.slot(1), u), compose(psi.slot(2), v)});
      run.check(chi(psi_uv, x, a, y, b) == chi(psi, x, act(x, u, a), y, act(y, v, b)),
                [] { return "chi is not constant on the coequalizer"; });
      NatSet images = psi.slot(1).image();
      for (Nat c : psi.slot(2).image()) images.insert(c);
      const PartialInjection f = random_partial_injection(rng, images, 24);
      const OperadElementP fpsi({compose(f, psi_uv.slot(1)), compose(f, psi_uv.slot(2))});
      const auto [c1, c2] = chi(psi_uv, x, a, y, b);
      run.check(chi(fpsi, x, a, y, b) == std::make_pair(act(x, f, c1), act(y, f, c2)),
                [] { return "chi is not equivariant"; });
      box.pair(c1, c2);  // lands in the box product
    }
  });
  return run.finish();
}

SuiteResult sum_laws(const SelftestOptions& o) {
  Runner run("sum-laws", o, 200);
  std::vector<std::pair<std::string, CommMonoidPresentation>> instances;
  instances.emplace_back("Z/2", cyclic_group(2));
  instances.emplace_back("Z/3", cyclic_group(3));
  instances.emplace_back("max{0,1}", trivial_from_abelian({"0", "1"}, {{0, 1}, {1, 1}}, 0));
  instances.emplace_back("xinf{*,a}", xinf({"*", "a"}, 0, 6).presentation);
  instances.emplace_back("xinf{*,a,b}", xinf({"*", "a", "b"}, 0, 6).presentation);
  const auto per = static_cast<std::size_t>(run.cases());
  run.each(per * instances.size(), [&](std::size_t k, Rng& rng) {
    const auto& [name, p] = instances[k / per];
    const CanonicalTameMSet& x = p.carrier();
    auto law = [&](bool ok, const char* what) {
      run.check(ok, [&] { return name + ": " + what; });
    };
    const MElement zero = p.unit();
    auto q = disjoint_elements(rng, x, 4, p.level_bound(), 12);
    const MElement &a = q[0], &b = q[1], &c = q[2], &d = q[3];
    law(p.sum(a, zero) == a && p.sum(zero, a) == a, "unit");
    law(p.sum(a, b) == p.sum(b, a), "commutativity");
    law(p.sum(p.sum(a, b), c) == p.sum(a, p.sum(b, c)), "associativity");
    law(p.sum(p.sum(a, b), p.sum(c, d)) == p.sum(p.sum(a, c), p.sum(b, d)), "interchange");
    NatSet ab = support_of(a);
    for (Nat v : b.image) ab.insert(v);
    const PartialInjection f = random_partial_injection(rng, ab, 20);
    law(act(x, f, p.sum(a, b)) == p.sum(act(x, f, a), act(x, f, b)), "equivariance");
  });
  return run.finish();
}

SuiteResult wedge(const SelftestOptions& o) {
  Runner run("wedge-iso", o, 0);
  constexpr int kLevels = 5;
  run.each(1, [&](std::size_t, Rng&) {
    const WedgeWitness w = wedge_iso({"*", "a"}, 0, {"*", "b", "c"}, 0, kLevels);
    run.check(w.isomorphism, [] { return "wedge map is not a levelwise bijection"; });
    run.check(w.equivariant, [] { return "wedge map is not equivariant"; });
    for (int k = 0; k <= kLevels; ++k) {
      // sum_m C(k, m) 1^m 2^(k - m) = 3^k
      Nat expected = 0, binom = 1;
      for (int m = 0; m <= k; ++m) {
        expected += binom * (Nat{1} << (k - m));
        binom = binom * (k - m) / (m + 1);
      }
      const auto uk = static_cast<std::size_t>(k);
      run.check(w.box_counts[uk] == static_cast<std::size_t>(expected) &&
                    w.wedge_counts[uk] == static_cast<std::size_t>(expected),
                [&] {
                  return "level " + std::to_string(k) + ": box " +
                         std::to_string(w.box_counts[uk]) + ", wedge " +
                         std::to_string(w.wedge_counts[uk]) + ", expected " +
                         std::to_string(expected);
                });
    }
  });
  return run.finish();
}

SuiteResult orbit_product(const SelftestOptions& o) {
  Runner run("orbit-product", o, 50);
  for (int m = 0; m <= 5; ++m)
    run.check(orbit_set(CanonicalTameMSet::representable(m)).size() == 1,
              [&] { return "I_" + std::to_string(m) + " has more than one orbit"; });
  run.each([&](std::size_t, Rng& rng) {
    const CanonicalTameMSet x = random_mset(rng, 2, 3);
    const CanonicalTameMSet y = random_mset(rng, 2, 3);
    const BoxProduct box(x, y);
    auto orbit_key = [](const CanonicalTameMSet& s, const MElement& e) {
      const Orbits ob = orbits(*s.level(e.level));
      return std::make_pair(e.level, ob.representative[static_cast<std::size_t>(
                                         ob.orbit_of[static_cast<std::size_t>(e.point)])]);
    };
    std::set<std::pair<std::pair<int, int>, std::pair<int, int>>> image;
    std::size_t box_orbits = 0;
    for (auto& [k, a] : box.mset().levels())
      for (int r : orbits(a).representative) {
        ++box_orbits;
        const auto [p1, p2] = box.project(MElement{k, iota_vec(k), r});
        image.insert({orbit_key(x, p1), orbit_key(y, p2)});
      }
    const std::size_t nx = orbit_set(x).size(), ny = orbit_set(y).size();
    run.check(box_orbits == orbit_set(box.mset()).size() && image.size() == box_orbits &&
                  box_orbits == nx * ny,
              [&] {
                return std::to_string(box_orbits) + " box orbits, " +
                       std::to_string(image.size()) + " distinct images, " +
                       std::to_string(nx) + " x " + std::to_string(ny);
              });
  });
  return run.finish();
}

using SuiteFn = SuiteResult (*)(const SelftestOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r{
      {"decomposition-round-trip", decomposition_round_trip},
      {"box-oracle", box_oracle},
      {"rho-iso", rho_isomorphism},
      {"day-vs-box", day_vs_box},
      {"flatness-criteria", flatness_criteria},
      {"adjunction", adjunction},
      {"mono-pushout", mono_pushout},
      {"agreeing-certificates", agreeing_certificates},
      {"algebra-round-trips", algebra_round_trips},
      {"chi-iso", chi_isomorphism},
      {"sum-laws", sum_laws},
      {"wedge-iso", wedge},
      {"orbit-product", orbit_product},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (auto& [name, fn] : registry()) n.push_back(name);
    return n;
  }();
  return names;
}

SuiteResult run_suite(const std::string& name, const SelftestOptions& options) {
  for (auto& [n, fn] : registry())
    if (n == name) {
      try {
        return fn(options);
      } catch (const Error& e) {
        SuiteResult r;
        r.name = name;
        r.failure_count = 1;
        r.failures.push_back(std::string("setup: ") + to_string(e.kind()) + ": " + e.what());
        return r;
      }
    }
  fail(ErrorKind::UnknownCommand, "unknown suite \"" + name + "\"", "suite", name);
}

std::vector<SuiteResult> run_selftest(const SelftestOptions& options) {
  std::vector<SuiteResult> out;
  for (const std::string& name : suite_names()) out.push_back(run_suite(name, options));
  return out;
}

}  // namespace tame
