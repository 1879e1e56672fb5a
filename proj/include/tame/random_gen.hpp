#pragma once

// Seeded generators for the law suites. The stream is mt19937_64 and
// uniform(lo, hi) is lo + next() mod (hi - lo + 1), so a seed reproduces the
// same instances on any platform.

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "tame/inj.hpp"
#include "tame/iset.hpp"
#include "tame/mset.hpp"
#include "tame/sigma.hpp"

namespace tame {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Inclusive on both ends.
  Nat uniform(Nat lo, Nat hi);
  int uniform_int(int lo, int hi) {
    return static_cast<int>(uniform(lo, hi));
  }
  bool chance(int num, int den) { return uniform(0, den - 1) < num; }

  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(uniform(0, static_cast<Nat>(v.size()) - 1))];
  }
  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i)
      std::swap(v[i - 1], v[static_cast<std::size_t>(uniform(0, static_cast<Nat>(i) - 1))]);
  }

  /// An independent stream for case `id`.
  Rng fork(std::uint64_t id) { return Rng(next() ^ (id * 0x9E3779B97F4A7C15ull)); }

 private:
  std::mt19937_64 engine_;
};

/// A Sigma_m-set with at most max_points points built from coordinate
/// permutation orbits of words, the sign orbit and (m = 4) the pairings.
/// Empty only when no orbit fits.
SigmaSet random_sigma_set(Rng& rng, int m, int max_points);
CanonicalTameMSet random_mset(Rng& rng, int max_level, int max_points);
/// A union of orbits of x, itself a sub-M-set.
CanonicalTameMSet random_sub_mset(Rng& rng, const CanonicalTameMSet& x);

/// An element supported in {1..window}; x must be nonempty at some level
/// <= window.
MElement random_element(Rng& rng, const CanonicalTameMSet& x, Nat window,
                        int max_level = -1);

NatSet random_subset(Rng& rng, Nat max_value, int max_size);
PartialInjection random_partial_injection(Rng& rng, const NatSet& domain,
                                          Nat value_max);
/// Injective on the union of the domains, one slot per domain.
OperadElementP random_operad_p(Rng& rng, const std::vector<NatSet>& domains,
                               Nat value_max);

QuasiAffine random_qa(Rng& rng);
/// g o t o (a_1 + ... + a_n) with t(k, i) = n i - n + k.
OperadElementQ random_operad_q(Rng& rng, int n);

/// A truncated I-set with stableFrom <= max_stable: representables,
/// constants, bullets of random M-sets, the coequalizer example, and
/// quotients of these by relations at levels <= stableFrom.
TruncatedISet random_iset(Rng& rng, int truncation, int max_stable);

/// An inclusion bullet(W') -> bullet(W) of flat I-sets for a random
/// sub-M-set W' of a random W.
LevelwiseMap random_flat_mono(Rng& rng, int truncation);

}  // namespace tame
