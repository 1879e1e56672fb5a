#include "tame/inj.hpp"

#include <sstream>

namespace tame {

std::string to_string(const NatSet& s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (Nat v : s) {
    if (!first) os << ',';
    os << v;
    first = false;
  }
  os << '}';
  return os.str();
}

PartialInjection::PartialInjection(std::map<Nat, Nat> mapping)
    : map_(std::move(mapping)) {
  NatSet seen;
  for (auto [k, v] : map_) {
    if (k < 1 || v < 1)
      fail(ErrorKind::NotInjective, "partial injection uses a value below 1",
           "positive", std::to_string(k));
    if (!seen.insert(v).second)
      fail(ErrorKind::NotInjective,
           "two keys map to " + std::to_string(v), "injective",
           std::to_string(k));
  }
}

PartialInjection PartialInjection::identity_on(const NatSet& domain) {
  std::map<Nat, Nat> m;
  for (Nat a : domain) m.emplace(a, a);
  return PartialInjection(std::move(m));
}

Nat PartialInjection::operator()(Nat i) const {
  auto it = map_.find(i);
  if (it == map_.end())
    fail(ErrorKind::DomainMismatch,
         "partial injection undefined at " + std::to_string(i));
  return it->second;
}

NatSet PartialInjection::keys() const {
  NatSet s;
  for (auto& kv : map_) s.insert(kv.first);
  return s;
}

NatSet PartialInjection::image() const {
  NatSet s;
  for (auto& kv : map_) s.insert(kv.second);
  return s;
}

bool PartialInjection::covers(const NatSet& s) const {
  for (Nat a : s)
    if (!defined_at(a)) return false;
  return true;
}

NatSet PartialInjection::apply(const NatSet& s) const {
  NatSet out;
  for (Nat a : s) out.insert((*this)(a));
  return out;
}

PartialInjection PartialInjection::restrict_to(const NatSet& s) const {
  std::map<Nat, Nat> m;
  for (Nat a : s) m.emplace(a, (*this)(a));
  return PartialInjection(std::move(m));
}

PartialInjection compose(const PartialInjection& outer,
                         const PartialInjection& inner) {
  std::map<Nat, Nat> m;
  for (auto [k, v] : inner.mapping()) {
    if (!outer.defined_at(v))
      fail(ErrorKind::DomainMismatch,
           "outer injection undefined at " + std::to_string(v),
           "composable", std::to_string(k));
    m.emplace(k, outer(v));
  }
  return PartialInjection(std::move(m));
}

std::string to_string(const PartialInjection& f) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (auto [k, v] : f.mapping()) {
    if (!first) os << ", ";
    os << k << "->" << v;
    first = false;
  }
  os << '}';
  return os.str();
}

bool images_disjoint(const PartialInjection& f, const PartialInjection& g) {
  for (auto& kv : f.mapping())
    for (auto& kw : g.mapping())
      if (kv.second == kw.second) return false;
  return true;
}

// ---------------------------------------------------------------------------

template <class Slot>
OperadElement<Slot>::OperadElement(std::vector<Slot> slots)
    : slots_(std::move(slots)) {
  for (std::size_t a = 0; a < slots_.size(); ++a)
    for (std::size_t b = a + 1; b < slots_.size(); ++b)
      if (!images_disjoint(slots_[a], slots_[b]))
        fail(ErrorKind::NotInjective,
             "slots " + std::to_string(a + 1) + " and " +
                 std::to_string(b + 1) + " have overlapping images",
             "disjoint-images", std::to_string(a + 1));
}

template <class Slot>
const Slot& OperadElement<Slot>::slot(std::size_t j) const {
  if (j < 1 || j > slots_.size())
    fail(ErrorKind::IndexOutOfRange,
         "slot " + std::to_string(j) + " of an arity-" +
             std::to_string(slots_.size()) + " element");
  return slots_[j - 1];
}

template <class Slot>
OperadElement<Slot> OperadElement<Slot>::permuted(
    const Permutation& sigma) const {
  if (sigma.size() != slots_.size())
    fail(ErrorKind::ArityMismatch, "permutation degree differs from arity");
  std::vector<Slot> out;
  out.reserve(sigma.size());
  for (int k : sigma) {
    if (k < 0 || static_cast<std::size_t>(k) >= slots_.size())
      fail(ErrorKind::IndexOutOfRange, "permutation entry out of range");
    out.push_back(slots_[k]);
  }
  return OperadElement(std::move(out));
}

template <class Slot>
OperadElement<Slot> operad_compose(
    const OperadElement<Slot>& phi,
    const std::vector<OperadElement<Slot>>& psis) {
  if (psis.size() != phi.arity())
    fail(ErrorKind::ArityMismatch,
         "composing an arity-" + std::to_string(phi.arity()) +
             " element with " + std::to_string(psis.size()) + " operands");
  std::vector<Slot> out;
  for (std::size_t m = 0; m < psis.size(); ++m)
    for (const Slot& s : psis[m].slots())
      out.push_back(compose(phi.slots()[m], s));
  return OperadElement<Slot>(std::move(out));
}

template <class Slot>
OperadElement<Slot> precompose_slots(const OperadElement<Slot>& phi,
                                     const std::vector<Slot>& moves) {
  if (moves.size() != phi.arity())
    fail(ErrorKind::ArityMismatch, "one move per slot expected");
  std::vector<Slot> out;
  for (std::size_t j = 0; j < moves.size(); ++j)
    out.push_back(compose(phi.slots()[j], moves[j]));
  return OperadElement<Slot>(std::move(out));
}

template class OperadElement<PartialInjection>;
template class OperadElement<QuasiAffine>;
template OperadElementP operad_compose(const OperadElementP&,
                                       const std::vector<OperadElementP>&);
template OperadElementQ operad_compose(const OperadElementQ&,
                                       const std::vector<OperadElementQ>&);
template OperadElementP precompose_slots(const OperadElementP&,
                                         const std::vector<PartialInjection>&);
template OperadElementQ precompose_slots(const OperadElementQ&,
                                         const std::vector<QuasiAffine>&);

}  // namespace tame
