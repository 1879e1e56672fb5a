#pragma once

// I-sets truncated at level N: functors on the injections between
// {1..m}, m <= N, presented by the inclusions iota: m -> m+1 and the
// adjacent transpositions.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tame/inj.hpp"
#include "tame/mset.hpp"
#include "tame/sigma.hpp"

namespace tame {

/// An injection m -> n as the tuple (alpha(1), ..., alpha(m)) with n given
/// separately.
struct IMorphism {
  int source = 0;
  int target = 0;
  std::vector<Nat> values;
};

class TruncatedISet {
 public:
  TruncatedISet() = default;
  /// incl[m][x] is iota(x) in X(m+1) for m < N; trans[m][i-1][x] is s_i(x).
  TruncatedISet(int truncation, int stable_from,
                std::vector<std::vector<std::string>> names,
                std::vector<std::vector<int>> incl,
                std::vector<std::vector<std::vector<int>>> trans);

  int truncation() const noexcept { return n_; }
  int stable_from() const noexcept { return stable_from_; }
  int size(int m) const { return static_cast<int>(levels_.at(m).size()); }
  const std::string& name(int m, int x) const { return levels_.at(m).name(x); }
  const SigmaSet& level(int m) const { return levels_.at(m); }
  int include(int m, int x) const;
  int transpose(int m, int i, int x) const;
  const std::vector<std::vector<int>>& inclusions() const noexcept {
    return incl_;
  }

  /// X(alpha): iota^{n-m} followed by the permutation of n that extends
  /// alpha increasingly on the complement of its image.
  int apply(const IMorphism& alpha, int x) const;

 private:
  int n_ = 0;
  int stable_from_ = 0;
  std::vector<SigmaSet> levels_;
  std::vector<std::vector<int>> incl_;
};

/// The ordered m-tuples of distinct values in {1..n}.
std::vector<IMorphism> injections(int m, int n);

// ---------------------------------------------------------------------------
// omega-colimit with its M-action

class OmegaColimit {
 public:
  explicit OmegaColimit(TruncatedISet x);

  const TruncatedISet& iset() const noexcept { return x_; }
  std::size_t class_count() const noexcept { return reps_.size(); }
  std::size_t class_of(int m, int x) const;
  /// Minimal-level member.
  std::pair<int, int> representative(std::size_t c) const { return reps_[c]; }
  /// A presentation [c] = [X(alpha) y] with y at a level <= stableFrom; the
  /// image of alpha is a set the class is supported on.
  const IMorphism& generator_map(std::size_t c) const { return gen_[c].first; }
  int generator_point(std::size_t c) const { return gen_[c].second; }

  /// f . [x] for x in X(m), f defined on {1..m}.
  std::size_t act_on(const PartialInjection& f, int m, int x) const;
  /// f . c, f defined on the image of the generator map of c.
  std::size_t act(const PartialInjection& f, std::size_t c) const;
  NatSet support(std::size_t c) const;
  std::string class_name(std::size_t c) const;

 private:
  TruncatedISet x_;
  std::vector<int> offset_;           // level -> first global index
  std::vector<std::size_t> class_;    // global index -> class
  std::vector<std::pair<int, int>> reps_;
  std::vector<std::pair<IMorphism, int>> gen_;
};

/// The support of a class, with the truncation contract of the minimal
/// representative: 2m <= N.
NatSet colim_support(const OmegaColimit& c, std::size_t cls);

/// Canonical form of X(omega); element_of is indexed by class.
Decomposition canonicalize(const OmegaColimit& x);
CanonicalTameMSet canonicalize(const TruncatedISet& x);

struct BulletISet {
  TruncatedISet iset;
  std::vector<std::vector<MElement>> elements;  // level m -> elements
  int index_of(int m, const MElement& e) const;
};
/// Level m holds the elements of W supported on {1..m}.
BulletISet bullet_iset(const CanonicalTameMSet& w, int truncation);

// ---------------------------------------------------------------------------
// Maps

class LevelwiseMap {
 public:
  /// map[m][x] in target level m; naturality is validated.
  LevelwiseMap(TruncatedISet source, TruncatedISet target,
               std::vector<std::vector<int>> map);
  const TruncatedISet& source() const noexcept { return source_; }
  const TruncatedISet& target() const noexcept { return target_; }
  int operator()(int m, int x) const { return map_.at(m).at(x); }
  bool levelwise_bijective() const;
  bool levelwise_injective() const;

 private:
  TruncatedISet source_, target_;
  std::vector<std::vector<int>> map_;
};

/// True iff the induced map of omega-colimits is a bijection.
bool n_iso_check(const LevelwiseMap& f);

struct FlatReplacement {
  BulletISet flat;
  LevelwiseMap unit;  // eta: X -> X^flat
};
FlatReplacement flat_replace(const TruncatedISet& x);

/// The counit (W^bullet)(omega) -> W as a table over the classes; returns
/// true iff it is a bijection compatible with the action.
bool counit_check(const CanonicalTameMSet& w, int truncation);

// ---------------------------------------------------------------------------
// Flatness

struct LatchingMap {
  int n = 0;
  std::size_t latching_size = 0;
  std::vector<int> value;  // latching class -> element of X(n)
  std::vector<std::pair<IMorphism, int>> class_rep;
  // (alpha values, x) -> latching class
  std::map<std::pair<std::vector<Nat>, int>, std::size_t> index;
};
LatchingMap latching_map(const TruncatedISet& x, int n);

enum class FlatMode { Latching, Direct };

struct FlatResult {
  bool flat = true;
  std::string witness;  // empty when flat
  int level = -1;
};
FlatResult is_flat(const TruncatedISet& x, FlatMode mode);

// ---------------------------------------------------------------------------
// Day convolution

struct DayConvolution {
  TruncatedISet iset;
  LevelwiseMap q1;  // X box Y -> X
  LevelwiseMap q2;  // X box Y -> Y
};
DayConvolution day_convolution(const TruncatedISet& x, const TruncatedISet& y);

/// I(m, -) truncated at N; level n holds the injections m -> n.
TruncatedISet representable_iset(int m, int truncation);
/// The constant I-set on the given points.
TruncatedISet constant_iset(const std::vector<std::string>& points,
                            int truncation);
/// Quotient of I(1,-) by alpha o d1 ~ alpha o d2 for the two maps
/// d1, d2: 1 -> 2: a single point at every level >= 1, empty at level 0.
TruncatedISet coequalizer_example(int truncation);

/// Quotient of x by the smallest congruence containing the given pairs of
/// elements at common levels. The truncation stays faithful when the pairs
/// lie at levels <= stableFrom, or when every relation up to N is listed.
TruncatedISet quotient_iset(const TruncatedISet& x,
                            const std::vector<std::pair<std::pair<int, int>,
                                                        std::pair<int, int>>>&
                                pairs);

/// For a levelwise injective map i: X -> Y, whether the induced map
/// L_n Y u_{L_n X} X(n) -> Y(n) is injective for every n <= N.
bool mono_pushout_check(const LevelwiseMap& i, std::string* witness = nullptr);

}  // namespace tame
