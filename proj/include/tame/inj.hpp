#pragma once

// Finite representations of elements of the injection monoid M (injective
// self-maps of omega = {1, 2, 3, ...}) and of the operad sets M(n).

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tame/error.hpp"

namespace tame {

using Nat = std::int64_t;
using NatSet = std::set<Nat>;

std::string to_string(const NatSet& s);

/// An injective map between finite subsets of omega. Acting on an element
/// only needs the values on its support, so this is the everyday
/// representation of an element of M.
class PartialInjection {
 public:
  PartialInjection() = default;
  explicit PartialInjection(std::map<Nat, Nat> mapping);

  static PartialInjection identity_on(const NatSet& domain);

  const std::map<Nat, Nat>& mapping() const noexcept { return map_; }
  bool empty() const noexcept { return map_.empty(); }
  std::size_t size() const noexcept { return map_.size(); }
  bool defined_at(Nat i) const { return map_.count(i) != 0; }
  Nat operator()(Nat i) const;

  NatSet keys() const;
  NatSet image() const;
  bool covers(const NatSet& s) const;
  NatSet apply(const NatSet& s) const;
  PartialInjection restrict_to(const NatSet& s) const;

  bool operator==(const PartialInjection&) const = default;

 private:
  std::map<Nat, Nat> map_;
};

/// i |-> outer(inner(i)) on the keys of inner. Throws DomainMismatch when a
/// value of inner is not a key of outer.
PartialInjection compose(const PartialInjection& outer,
                         const PartialInjection& inner);

std::string to_string(const PartialInjection& f);

/// One arithmetic-progression piece of a quasi-affine map: on
/// {i : lo <= i <= hi, i = res mod mod} the map is i |-> (a*i + b) / div.
/// `div` is 1 for the plain affine pieces; larger values let a piece halve
/// the members of a progression exactly.
struct QaPiece {
  Nat lo = 1;
  std::optional<Nat> hi;
  Nat mod = 1;
  Nat res = 0;
  Nat a = 1;
  Nat b = 0;
  Nat div = 1;

  bool operator==(const QaPiece&) const = default;
};

/// A total injection omega -> omega that is affine on the classes of a
/// partition of omega into finitely many arithmetic progressions.
///
/// Stored in normal form: an explicit prefix f(1..threshold) and, for
/// i > threshold, one affine rule per residue class of i modulo the period.
/// The period and the threshold are both minimal, so two maps are equal iff
/// their normal forms are equal.
class QuasiAffine {
 public:
  // f(i) = (p*i + q) / period on one residue class past the threshold.
  struct Rule {
    Nat p = 1;
    Nat q = 0;
    bool operator==(const Rule&) const = default;
  };

  QuasiAffine();  // identity

  static QuasiAffine identity() { return QuasiAffine(); }
  static QuasiAffine affine(Nat a, Nat b);
  static QuasiAffine from_pieces(const std::vector<QaPiece>& pieces);

  /// Builds the map from a function that is known to be affine on each
  /// residue class mod `period` beyond `threshold`. The fit is checked on
  /// two further periods and the result is validated for injectivity.
  static QuasiAffine tabulate(Nat threshold, Nat period,
                              const std::function<Nat(Nat)>& fn);

  Nat operator()(Nat i) const;

  Nat threshold() const noexcept { return threshold_; }
  Nat period() const noexcept { return period_; }
  const std::vector<Nat>& prefix() const noexcept { return prefix_; }
  const std::vector<Rule>& rules() const noexcept { return rules_; }

  std::vector<QaPiece> pieces() const;
  PartialInjection restrict_to(const NatSet& s) const;

  /// The image as finitely many points plus infinite progressions
  /// {start + k*step : k >= 0}.
  struct Image {
    std::vector<Nat> points;
    std::vector<std::pair<Nat, Nat>> progressions;
    bool contains(Nat v) const;
  };
  Image image() const;

  bool operator==(const QuasiAffine&) const = default;

 private:
  QuasiAffine(Nat threshold, Nat period, std::vector<Nat> prefix,
              std::vector<Rule> rules);
  void normalize();
  void validate() const;
  Nat tail_value(Nat i) const;

  Nat threshold_ = 0;
  Nat period_ = 1;
  std::vector<Nat> prefix_;
  std::vector<Rule> rules_;
};

QuasiAffine compose(const QuasiAffine& outer, const QuasiAffine& inner);

/// The unique order-preserving bijection omega -> omega \ avoid.
QuasiAffine order_embed_avoiding(const NatSet& avoid);

/// Canonical completion: f on its keys, and the remaining arguments mapped
/// order-preservingly onto omega minus the image of f.
QuasiAffine complete(const PartialInjection& f);

bool images_disjoint(const QuasiAffine& f, const QuasiAffine& g);
bool images_disjoint(const PartialInjection& f, const PartialInjection& g);

std::string to_string(const QuasiAffine& f);

// ---------------------------------------------------------------------------
// Injection operad

using Permutation = std::vector<int>;  // 0-based: sigma(k) = perm[k]

/// An element of M(n): n slot injections phi(j, -) with pairwise disjoint
/// images. Slot is PartialInjection or QuasiAffine.
template <class Slot>
class OperadElement {
 public:
  OperadElement() = default;  // the unique element of M(0)
  explicit OperadElement(std::vector<Slot> slots);

  std::size_t arity() const noexcept { return slots_.size(); }
  /// 1-based, matching phi(j, -).
  const Slot& slot(std::size_t j) const;
  const std::vector<Slot>& slots() const noexcept { return slots_; }

  /// Right Sigma_n action (phi sigma)(k, i) = phi(sigma(k), i).
  OperadElement permuted(const Permutation& sigma) const;

  bool operator==(const OperadElement&) const = default;

 private:
  std::vector<Slot> slots_;
};

using OperadElementP = OperadElement<PartialInjection>;
using OperadElementQ = OperadElement<QuasiAffine>;

/// phi o (psi_1 + ... + psi_k): slot i in block m is phi(m, -) o psi_m(i', -).
template <class Slot>
OperadElement<Slot> operad_compose(const OperadElement<Slot>& phi,
                                   const std::vector<OperadElement<Slot>>& psis);

/// phi o (f_1 + ... + f_n) for arity-1 components.
template <class Slot>
OperadElement<Slot> precompose_slots(const OperadElement<Slot>& phi,
                                     const std::vector<Slot>& moves);

}  // namespace tame
