#pragma once

// Tame M-sets in the normal form  coprod_m I_m x_{Sigma_m} A_m.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tame/inj.hpp"
#include "tame/sigma.hpp"

namespace tame {

class CanonicalTameMSet {
 public:
  CanonicalTameMSet() = default;  // the empty M-set
  /// Empty levels are dropped. Each SigmaSet must have degree equal to its
  /// level.
  explicit CanonicalTameMSet(std::map<int, SigmaSet> levels);

  static CanonicalTameMSet unit();            // A_0 = point
  static CanonicalTameMSet representable(int m);  // I_m

  const std::map<int, SigmaSet>& levels() const noexcept { return levels_; }
  /// nullptr for an empty level.
  const SigmaSet* level(int m) const;
  int max_level() const;

 private:
  std::map<int, SigmaSet> levels_;
};

/// The class [alpha, a] stored with alpha order-preserving, so `image` is
/// sorted and the pair is the unique canonical representative.
struct MElement {
  int level = 0;
  std::vector<Nat> image;
  int point = 0;  // index into A_level

  auto operator<=>(const MElement&) const = default;
};

/// [alpha, a] for an arbitrary injective tuple alpha.
MElement make_element(const CanonicalTameMSet& x, std::vector<Nat> alpha,
                      int point);
NatSet support_of(const MElement& x);
/// Throws SupportNotCovered unless f is defined on the support of x.
MElement act(const CanonicalTameMSet& x, const PartialInjection& f,
             const MElement& e);
std::string to_string(const CanonicalTameMSet& x, const MElement& e);

/// All elements with support in {1..n}, by level, image, then point.
std::vector<MElement> elements_up_to(const CanonicalTameMSet& x, Nat n);

/// Levelwise equality of the Sigma_m iso types.
bool iso_type_equal(const CanonicalTameMSet& a, const CanonicalTameMSet& b,
                    int degree_bound = kDefaultDegreeBound);

// ---------------------------------------------------------------------------
// Decomposition of an abstract element table

/// A finite table of elements of some M-set. Each element is known to be
/// supported on known_support(i); act is only called with injections
/// defined on that set and returns nullopt when the result is not in the
/// table.
struct TameTable {
  std::size_t size = 0;
  std::function<NatSet(std::size_t)> known_support;
  std::function<std::optional<std::size_t>(const PartialInjection&,
                                           std::size_t)>
      act;
  std::function<std::string(std::size_t)> name;
};

struct Decomposition {
  CanonicalTameMSet mset;
  std::vector<MElement> element_of;  // table index -> canonical element
  std::vector<NatSet> support;       // table index -> computed support
};

Decomposition decompose_table(const TameTable& table, Nat window);

/// A table over a list of elements of x with the M-action. The table
/// refers to x and elements, which must outlive it.
TameTable element_table(const CanonicalTameMSet& x,
                        const std::vector<MElement>& elements);

// ---------------------------------------------------------------------------
// Box product

class BoxProduct {
 public:
  /// Levels above max_level (when non-negative) are left out.
  BoxProduct(const CanonicalTameMSet& x, const CanonicalTameMSet& y,
             int degree_bound = kDefaultDegreeBound, int max_level = -1);

  const CanonicalTameMSet& mset() const noexcept { return box_; }
  const CanonicalTameMSet& left() const noexcept { return x_; }
  const CanonicalTameMSet& right() const noexcept { return y_; }

  /// The element of X box Y given by a disjointly supported pair.
  MElement pair(const MElement& x, const MElement& y) const;
  /// p1 and p2.
  std::pair<MElement, MElement> project(const MElement& z) const;

 private:
  struct Cell {
    int m;
    NatSet subset;
    int left_point;
    int right_point;
    auto operator<=>(const Cell&) const = default;
  };
  CanonicalTameMSet x_, y_, box_;
  std::map<int, std::vector<Cell>> cells_;          // level k -> point -> cell
  std::map<int, std::map<Cell, int>> cell_index_;   // level k -> cell -> point
};

CanonicalTameMSet box_canonical(const CanonicalTameMSet& x,
                                const CanonicalTameMSet& y,
                                int degree_bound = kDefaultDegreeBound);

/// f |-> (f o i1, f o i2) on injections {1..m+n} -> {1..n_window}.
struct RhoWitness {
  std::size_t injections = 0;
  std::size_t disjoint_pairs = 0;
  bool bijective = false;
};
RhoWitness rho_iso(int m, int n, Nat window);

/// (x, f y) with f the order-preserving bijection onto omega \ supp(x).
std::pair<MElement, MElement> shift_bijection(const CanonicalTameMSet& x,
                                              const MElement& a,
                                              const CanonicalTameMSet& y,
                                              const MElement& b);

// ---------------------------------------------------------------------------
// Morphisms and colimits

class MSetMorphism {
 public:
  using Key = std::pair<int, int>;  // (level, orbit representative point)

  MSetMorphism(CanonicalTameMSet source, CanonicalTameMSet target,
               std::map<Key, MElement> assignment,
               int degree_bound = kDefaultDegreeBound);

  static MSetMorphism identity(const CanonicalTameMSet& x);

  const CanonicalTameMSet& source() const noexcept { return source_; }
  const CanonicalTameMSet& target() const noexcept { return target_; }
  const std::map<Key, MElement>& assignment() const noexcept {
    return assign_;
  }

  MElement apply(const MElement& x) const;

 private:
  CanonicalTameMSet source_, target_;
  std::map<Key, MElement> assign_;
  std::map<int, Orbits> orbits_;
};

/// id_X box u : X box S -> X box T.
MSetMorphism box_morphism(const CanonicalTameMSet& x, const MSetMorphism& u,
                          int degree_bound = kDefaultDegreeBound);

struct Quotient {
  Decomposition decomposition;          // indexed by quotient class
  std::vector<MElement> target_table;  // elements_up_to(target, window)
  std::vector<std::size_t> class_of;   // target table index -> class
};

Quotient coequalize(const MSetMorphism& u, const MSetMorphism& v, Nat window);

/// The orbit set X/M as (level, representative point name) pairs.
std::vector<std::pair<int, std::string>> orbit_set(const CanonicalTameMSet& x);

}  // namespace tame
