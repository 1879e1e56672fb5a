#pragma once

// Algebras over the injection operad on canonical tame M-sets, in the
// equivalent form of commutative monoids for the box product.

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "tame/inj.hpp"
#include "tame/mset.hpp"

namespace tame {

inline constexpr int kDefaultLevelBound = 6;

/// A commutative box-monoid given by its values on orbit representatives:
/// a +' b is the sum of [id, a] (support {1..m}) and b placed on
/// {m+1..m+n}. Sums whose levels add up beyond the level bound are not
/// stored.
class CommMonoidPresentation {
 public:
  using Rep = std::pair<int, int>;  // (level, representative point)
  using Key = std::pair<Rep, Rep>;

  /// Validates the table, equivariance on stabilizers, the unit,
  /// commutativity and associativity; failures raise ValidationFailed with
  /// the law as the invariant.
  CommMonoidPresentation(CanonicalTameMSet carrier, int unit_point,
                         std::map<Key, MElement> sums,
                         int level_bound = kDefaultLevelBound,
                         int degree_bound = kDefaultDegreeBound);

  const CanonicalTameMSet& carrier() const noexcept { return carrier_; }
  MElement unit() const { return MElement{0, {}, unit_}; }
  int unit_point() const noexcept { return unit_; }
  const std::map<Key, MElement>& sums() const noexcept { return sums_; }
  int level_bound() const noexcept { return level_bound_; }

  /// x + y for disjointly supported x, y.
  MElement sum(const MElement& x, const MElement& y) const;

 private:
  CanonicalTameMSet carrier_;
  int unit_ = 0;
  std::map<Key, MElement> sums_;
  int level_bound_;
  std::map<int, Orbits> orbits_;
};

/// The action phi_*(x_1, ..., x_n) of the operad on a carrier.
struct AlgebraAction {
  CanonicalTameMSet carrier;
  std::function<MElement(const OperadElementP&, const std::vector<MElement>&)>
      action;
};

AlgebraAction monoid_to_algebra(const CommMonoidPresentation& p);
CommMonoidPresentation algebra_to_monoid(const AlgebraAction& a,
                                         int level_bound = kDefaultLevelBound);

/// The trivial M-set on an abelian monoid: everything at level 0.
CommMonoidPresentation trivial_from_abelian(
    const std::vector<std::string>& names,
    const std::vector<std::vector<int>>& add, int unit);
CommMonoidPresentation cyclic_group(int k);

/// X^infinity truncated at the level bound, for a finite pointed set.
struct XInfinity {
  CommMonoidPresentation presentation;
  std::vector<std::string> names;  // points of X
  int basepoint = 0;
  std::map<int, std::vector<std::vector<int>>> tuples;  // level -> point -> tuple

  /// The finitely supported function omega -> X named by an element,
  /// listing only its non-basepoint values.
  std::map<Nat, int> to_function(const MElement& e) const;
  MElement from_function(const std::map<Nat, int>& f) const;
};
XInfinity xinf(const std::vector<std::string>& names, int basepoint,
               int level_bound = kDefaultLevelBound);

/// The map xinf(X) box xinf(Y) -> xinf(X v Y), checked levelwise.
struct WedgeWitness {
  bool isomorphism = false;
  bool equivariant = false;
  std::vector<std::size_t> box_counts;    // level k -> points
  std::vector<std::size_t> wedge_counts;  // level k -> points
};
WedgeWitness wedge_iso(const std::vector<std::string>& x, int x_base,
                       const std::vector<std::string>& y, int y_base,
                       int level_bound);

/// (psi^1 x, psi^2 y).
std::pair<MElement, MElement> chi(const OperadElementP& psi,
                                  const CanonicalTameMSet& x,
                                  const MElement& a,
                                  const CanonicalTameMSet& y,
                                  const MElement& b);
/// The arity-2 element with identity slots on the two supports.
OperadElementP chi_section(const MElement& a, const MElement& b);

}  // namespace tame
