#pragma once

// Finite Sigma_m-sets presented by the action of the adjacent
// transpositions s_1, ..., s_{m-1}.

#include <functional>
#include <string>
#include <vector>

#include "tame/inj.hpp"

namespace tame {

inline constexpr int kDefaultDegreeBound = 7;

class SigmaSet {
 public:
  SigmaSet() = default;  // empty set of degree 0

  /// gens[i-1][p] is the index of s_i applied to point p. Validates that
  /// every generator is an involution and that the Coxeter relations hold.
  SigmaSet(int degree, std::vector<std::string> points,
           std::vector<std::vector<int>> gens);

  /// Builds the generator tables from a function (i, point) -> point.
  static SigmaSet from_action(int degree, std::vector<std::string> points,
                              const std::function<int(int, int)>& s);
  static SigmaSet trivial(int degree, std::vector<std::string> points);
  /// Sigma_m acting on itself by left multiplication; points are one-line
  /// notations such as "213" ("id" in degree 0).
  static SigmaSet regular(int degree);

  int degree() const noexcept { return degree_; }
  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }
  const std::vector<std::string>& points() const noexcept { return points_; }
  const std::string& name(int p) const { return points_.at(p); }
  const std::vector<std::vector<int>>& generators() const noexcept {
    return gens_;
  }
  /// -1 when absent.
  int index_of(const std::string& name) const;

  /// s_i applied to point p, 1 <= i < degree.
  int apply_generator(int i, int p) const;
  /// sigma . p for an arbitrary permutation, via a transposition word.
  int act(const Permutation& sigma, int p) const;

 private:
  int degree_ = 0;
  std::vector<std::string> points_;
  std::vector<std::vector<int>> gens_;
};

/// Calls visit(a) for the adjacent transpositions s_a whose successive
/// application to a point realizes sigma . p.
void for_each_transposition(const Permutation& sigma,
                            const std::function<void(int)>& visit);

Permutation identity_permutation(int m);
Permutation compose_perm(const Permutation& a, const Permutation& b);  // a o b
Permutation inverse_perm(const Permutation& a);
/// s_i as a permutation of {0..m-1} (1-based i).
Permutation transposition(int m, int i);
/// Index of the permutation in lexicographic order.
long perm_rank(const Permutation& p);
std::vector<Permutation> all_permutations(int m);

struct Orbits {
  std::vector<int> orbit_of;            // point -> orbit index
  std::vector<int> representative;      // orbit -> representative point
  std::vector<Permutation> transporter;  // point p -> sigma_p with sigma_p . rep = p
  std::size_t count() const { return representative.size(); }
};

/// Orbits with lexicographically least representatives, ordered by
/// representative name.
Orbits orbits(const SigmaSet& a);

/// Stabilizer of a point, by search over the Cayley graph of Sigma_m.
std::vector<Permutation> stabilizer(const SigmaSet& a, int p,
                                    int degree_bound = kDefaultDegreeBound);

/// Sorted list of stabilizer conjugacy-class labels, one per orbit. Two
/// Sigma_m-sets are isomorphic iff their types are equal.
std::vector<std::string> sigma_iso_type(
    const SigmaSet& a, int degree_bound = kDefaultDegreeBound);

/// Ind: points (T, z, w) with T an m-subset of {1..m+n}.
SigmaSet induce(const SigmaSet& z, const SigmaSet& w,
                int degree_bound = kDefaultDegreeBound);
std::string subset_label(const NatSet& t);
/// The m-subsets of {1..k} in lexicographic order; induce() lists its
/// points in this order, then by z, then by w.
std::vector<NatSet> subsets_of_size(int k, int m);

/// Disjoint union of two Sigma_m-sets of the same degree. When the name sets
/// collide every name gets an "L." or "R." prefix.
SigmaSet disjoint_union(const SigmaSet& a, const SigmaSet& b);

}  // namespace tame
