#include <gtest/gtest.h>

#include "tame/sigma.hpp"

using namespace tame;

namespace {

std::string invariant_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ValidationFailed);
    return e.invariant();
  }
  ADD_FAILURE() << "no error raised";
  return {};
}

}  // namespace

TEST(SigmaSet, ValidatesGenerators) {
  EXPECT_EQ(invariant_of([] { SigmaSet(2, {"a", "b"}, {{0, 0}}); }), "bijection");
  EXPECT_EQ(invariant_of([] { SigmaSet(2, {"a", "a"}, {{0, 1}}); }), "unique-points");
  EXPECT_EQ(invariant_of([] { SigmaSet(3, {"a"}, {{0}}); }), "generators");
  EXPECT_EQ(invariant_of([] { SigmaSet(2, {"a", "b", "c"}, {{1, 2, 0}}); }), "involution");
}

TEST(SigmaSet, BraidRelationIsChecked) {
  // s1 = (a b) and s2 = (c d) commute, so (s1 s2)^3 = s1 s2 != 1.
  EXPECT_EQ(invariant_of([] { SigmaSet(3, {"a", "b", "c", "d"}, {{1, 0, 2, 3}, {0, 1, 3, 2}}); }),
            "braid");
  EXPECT_NO_THROW(SigmaSet(3, {"a", "b", "c"}, {{1, 0, 2}, {0, 2, 1}}));
}

TEST(SigmaSet, RegularAction) {
  const SigmaSet r = SigmaSet::regular(3);
  EXPECT_EQ(r.size(), 6u);
  const Orbits o = orbits(r);
  EXPECT_EQ(o.count(), 1u);
  for (int p = 0; p < 6; ++p)
    EXPECT_EQ(r.act(o.transporter[p], o.representative[0]), p);
  EXPECT_EQ(stabilizer(r, 0).size(), 1u);
}

TEST(SigmaSet, TrivialAction) {
  const SigmaSet t = SigmaSet::trivial(3, {"x", "y"});
  EXPECT_EQ(orbits(t).count(), 2u);
  EXPECT_EQ(stabilizer(t, 1).size(), 6u);
  EXPECT_EQ(t.index_of("y"), 1);
  EXPECT_EQ(t.index_of("z"), -1);
}

TEST(SigmaSet, IsoTypeDistinguishesStabilizers) {
  const SigmaSet regular = SigmaSet::regular(2);
  const SigmaSet trivial = SigmaSet::trivial(2, {"a", "b"});
  EXPECT_NE(sigma_iso_type(regular), sigma_iso_type(trivial));
  const SigmaSet renamed = SigmaSet(2, {"u", "v"}, {{1, 0}});
  EXPECT_EQ(sigma_iso_type(regular), sigma_iso_type(renamed));
}

TEST(SigmaSet, IsoTypeSeesConjugacyNotSubgroups) {
  // Sigma_3 acting on {1,2,3} and on the 3 two-element subsets: both have
  // point stabilizers of order 2, conjugate to each other.
  const SigmaSet points = SigmaSet(3, {"1", "2", "3"}, {{1, 0, 2}, {0, 2, 1}});
  const SigmaSet pairs = SigmaSet(3, {"12", "13", "23"}, {{0, 2, 1}, {1, 0, 2}});
  EXPECT_EQ(sigma_iso_type(points), sigma_iso_type(pairs));
  EXPECT_NE(sigma_iso_type(points), sigma_iso_type(SigmaSet::regular(3)));
}

TEST(Permutations, Algebra) {
  const Permutation s = transposition(3, 1);
  EXPECT_EQ(compose_perm(s, s), identity_permutation(3));
  const Permutation c{1, 2, 0};
  EXPECT_EQ(compose_perm(c, inverse_perm(c)), identity_permutation(3));
  EXPECT_EQ(all_permutations(4).size(), 24u);
  EXPECT_EQ(perm_rank(identity_permutation(4)), 0);
  EXPECT_EQ(perm_rank({3, 2, 1, 0}), 23);
}

TEST(Induce, SizeIsBinomialTimesProduct) {
  const SigmaSet z = SigmaSet::trivial(1, {"z"});
  const SigmaSet w = SigmaSet::regular(2);
  const SigmaSet ind = induce(z, w);
  EXPECT_EQ(ind.degree(), 3);
  EXPECT_EQ(ind.size(), 3u * 2u);
  EXPECT_EQ(orbits(ind).count(), 1u);
  EXPECT_EQ(subsets_of_size(4, 2).size(), 6u);
}

TEST(DisjointUnion, PrefixesCollidingNames) {
  const SigmaSet a = SigmaSet::trivial(1, {"x"});
  const SigmaSet u = disjoint_union(a, a);
  EXPECT_EQ(u.size(), 2u);
  EXPECT_EQ(u.index_of("L.x"), 0);
  EXPECT_EQ(u.index_of("R.x"), 1);
}
