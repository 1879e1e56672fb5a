#include <gtest/gtest.h>

#include "tame/mset.hpp"

using namespace tame;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::UnknownCommand;
}

PartialInjection pi(std::map<Nat, Nat> m) { return PartialInjection(std::move(m)); }

// Sigma_2 acting trivially on one point: unordered pairs.
CanonicalTameMSet unordered_pairs() {
  return CanonicalTameMSet({{2, SigmaSet::trivial(2, {"p"})}});
}

}  // namespace

TEST(MSet, ElementsAreCanonical) {
  const CanonicalTameMSet i2 = CanonicalTameMSet::representable(2);
  const MElement a = make_element(i2, {5, 2}, 0);
  EXPECT_EQ(a.image, (std::vector<Nat>{2, 5}));
  EXPECT_NE(a.point, 0);  // reordering moves the point within its orbit
  EXPECT_EQ(make_element(i2, {2, 5}, a.point), make_element(i2, {2, 5}, a.point));
  EXPECT_EQ(support_of(a), (NatSet{2, 5}));
  EXPECT_EQ(kind_of([&] { make_element(i2, {2, 2}, 0); }), ErrorKind::ValidationFailed);
  EXPECT_EQ(kind_of([&] { make_element(i2, {1}, 0); }), ErrorKind::ValidationFailed);
}

TEST(MSet, ActionComposes) {
  const CanonicalTameMSet i2 = CanonicalTameMSet::representable(2);
  const MElement a = make_element(i2, {1, 2}, 0);
  const PartialInjection f = pi({{1, 4}, {2, 3}});
  const PartialInjection g = pi({{3, 1}, {4, 7}});
  EXPECT_EQ(act(i2, g, act(i2, f, a)), act(i2, compose(g, f), a));
  EXPECT_EQ(act(i2, f, a).image, (std::vector<Nat>{3, 4}));
  EXPECT_EQ(kind_of([&] { act(i2, pi({{1, 1}}), a); }), ErrorKind::SupportNotCovered);
}

TEST(MSet, StabilizerIdentifiesOrders) {
  const CanonicalTameMSet u = unordered_pairs();
  EXPECT_EQ(make_element(u, {2, 1}, 0), make_element(u, {1, 2}, 0));
}

TEST(MSet, ElementsUpToCountsInjections) {
  // I_2 has one element per ordered pair in {1..4}.
  EXPECT_EQ(elements_up_to(CanonicalTameMSet::representable(2), 4).size(), 12u);
  EXPECT_EQ(elements_up_to(unordered_pairs(), 4).size(), 6u);
  EXPECT_EQ(elements_up_to(CanonicalTameMSet::unit(), 4).size(), 1u);
}

TEST(MSet, DecompositionRecoversTheInput) {
  const CanonicalTameMSet x({{1, SigmaSet::trivial(1, {"a", "b"})},
                             {2, SigmaSet::regular(2)},
                             {3, SigmaSet::trivial(3, {"t"})}});
  const std::vector<MElement> elems = elements_up_to(x, 6);
  const Decomposition d = decompose_table(element_table(x, elems), 6);
  EXPECT_TRUE(iso_type_equal(d.mset, x));
  for (std::size_t i = 0; i < elems.size(); ++i)
    EXPECT_EQ(d.support[i], support_of(elems[i]));
}

TEST(MSet, IsoTypeComparesLevelwise) {
  EXPECT_TRUE(iso_type_equal(CanonicalTameMSet::representable(2),
                             CanonicalTameMSet({{2, SigmaSet(2, {"x", "y"}, {{1, 0}})}})));
  EXPECT_FALSE(iso_type_equal(CanonicalTameMSet::representable(2), unordered_pairs()));
}

TEST(BoxProduct, RepresentablesAdd) {
  for (int m = 0; m <= 2; ++m)
    for (int n = 0; n <= 2; ++n)
      EXPECT_TRUE(iso_type_equal(box_canonical(CanonicalTameMSet::representable(m),
                                               CanonicalTameMSet::representable(n)),
                                 CanonicalTameMSet::representable(m + n)))
          << m << " " << n;
}

TEST(BoxProduct, UnitIsNeutral) {
  const CanonicalTameMSet x({{1, SigmaSet::trivial(1, {"a"})}, {2, SigmaSet::regular(2)}});
  EXPECT_TRUE(iso_type_equal(box_canonical(CanonicalTameMSet::unit(), x), x));
}

TEST(BoxProduct, PairAndProject) {
  const CanonicalTameMSet i1 = CanonicalTameMSet::representable(1);
  const CanonicalTameMSet u = unordered_pairs();
  const BoxProduct b(i1, u);
  const MElement x = make_element(i1, {3}, 0);
  const MElement y = make_element(u, {1, 5}, 0);
  const MElement z = b.pair(x, y);
  EXPECT_EQ(z.level, 3);
  EXPECT_EQ(support_of(z), (NatSet{1, 3, 5}));
  EXPECT_EQ(b.project(z), std::make_pair(x, y));
  EXPECT_EQ(kind_of([&] { b.pair(make_element(i1, {1}, 0), y); }),
            ErrorKind::OverlappingSupports);
}

TEST(BoxProduct, MaxLevelTruncates) {
  const CanonicalTameMSet i1 = CanonicalTameMSet::representable(1);
  const CanonicalTameMSet x({{1, SigmaSet::regular(1)}, {2, SigmaSet::regular(2)}});
  const BoxProduct b(x, i1, kDefaultDegreeBound, 2);
  EXPECT_EQ(b.mset().max_level(), 2);
  EXPECT_EQ(b.mset().level(3), nullptr);
}

TEST(Rho, BijectiveOnSmallLevels) {
  const RhoWitness w = rho_iso(1, 2, 5);
  EXPECT_TRUE(w.bijective);
  EXPECT_EQ(w.injections, w.disjoint_pairs);
}

TEST(OrbitSet, OneOrbitPerRepresentable) {
  for (int m = 0; m <= 4; ++m) EXPECT_EQ(orbit_set(CanonicalTameMSet::representable(m)).size(), 1u);
  const CanonicalTameMSet x({{1, SigmaSet::trivial(1, {"a", "b"})}, {2, SigmaSet::regular(2)}});
  EXPECT_EQ(orbit_set(x).size(), 3u);
}

TEST(MSetMorphism, IdentityAndValidation) {
  const CanonicalTameMSet i2 = CanonicalTameMSet::representable(2);
  const MSetMorphism id = MSetMorphism::identity(i2);
  const MElement a = make_element(i2, {4, 1}, 0);
  EXPECT_EQ(id.apply(a), a);
  // The regular point has trivial stabilizer, but sending it to the
  // unordered pair is fine; the converse is not equivariant.
  const CanonicalTameMSet u = unordered_pairs();
  EXPECT_NO_THROW(MSetMorphism(i2, u, {{{2, 0}, make_element(u, {1, 2}, 0)}}));
  EXPECT_EQ(kind_of([&] { MSetMorphism(u, i2, {{{2, 0}, make_element(i2, {1, 2}, 0)}}); }),
            ErrorKind::InvalidMorphism);
}

TEST(Coequalizer, IdentifiesTheTwoOrders) {
  // Coequalizing id and the swap on I_2 gives the unordered pairs.
  const CanonicalTameMSet i2 = CanonicalTameMSet::representable(2);
  const MSetMorphism id = MSetMorphism::identity(i2);
  const MSetMorphism swap(i2, i2, {{{2, 0}, make_element(i2, {2, 1}, 0)}});
  const Quotient q = coequalize(id, swap, 5);
  EXPECT_TRUE(iso_type_equal(q.decomposition.mset, unordered_pairs()));
}

TEST(MSet, SmallElementCounts) {
  EXPECT_EQ(elements_up_to(CanonicalTameMSet::representable(1), 3).size(), 3u);
  EXPECT_EQ(elements_up_to(CanonicalTameMSet::representable(2), 3).size(), 6u);
  for (Nat n = 0; n <= 5; ++n) EXPECT_EQ(elements_up_to(CanonicalTameMSet::unit(), n).size(), 1u);
}

TEST(MSet, DecomposeSmallTables) {
  const CanonicalTameMSet i1 = CanonicalTameMSet::representable(1);
  const std::vector<MElement> elems = elements_up_to(i1, 3);
  const Decomposition d = decompose_table(element_table(i1, elems), 3);
  EXPECT_TRUE(iso_type_equal(d.mset, i1));
  const CanonicalTameMSet pt = CanonicalTameMSet::unit();
  const std::vector<MElement> one = elements_up_to(pt, 2);
  EXPECT_TRUE(iso_type_equal(decompose_table(element_table(pt, one), 2).mset, pt));
}
