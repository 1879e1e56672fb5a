#include <gtest/gtest.h>

#include "tame/iset.hpp"

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

int falling(int n, int m) {
  int r = 1;
  for (int k = 0; k < m; ++k) r *= n - k;
  return r;
}

}  // namespace

TEST(ISet, RepresentableLevelSizes) {
  const TruncatedISet x = representable_iset(2, 4);
  for (int n = 0; n <= 4; ++n) EXPECT_EQ(x.size(n), n < 2 ? 0 : falling(n, 2));
  EXPECT_EQ(x.stable_from(), 2);
  EXPECT_EQ(injections(2, 4).size(), 12u);
}

TEST(ISet, ApplyInjection) {
  const TruncatedISet x = representable_iset(1, 3);
  // Level n of I(1,-) lists the injections 1 -> n by value.
  EXPECT_EQ(x.apply(IMorphism{1, 3, {3}}, 0), 2);
  EXPECT_EQ(x.apply(IMorphism{1, 3, {1}}, 0), 0);
  const TruncatedISet y = representable_iset(2, 3);
  const int e = y.apply(IMorphism{2, 3, {3, 1}}, 0);
  EXPECT_EQ(y.apply(IMorphism{3, 3, {1, 2, 3}}, e), e);
}

TEST(ISet, ValidatesPresentations) {
  EXPECT_EQ(kind_of([] { TruncatedISet(1, 0, {{"a"}, {"b"}}, {{0, 0}}, {{}, {}}); }),
            ErrorKind::ValidationFailed);
  EXPECT_EQ(kind_of([] { TruncatedISet(1, 2, {{"a"}, {"b"}}, {{0}}, {{}, {}}); }),
            ErrorKind::ValidationFailed);
  EXPECT_NO_THROW(TruncatedISet(1, 0, {{"a"}, {"b"}}, {{0}}, {{}, {}}));
}

TEST(OmegaColimit, RepresentableIsFree) {
  // Moving the class to support {3} needs a representative at level 3,
  // and its support needs N >= 6.
  const OmegaColimit c(representable_iset(1, 6));
  ASSERT_GE(c.class_count(), 1u);
  const std::size_t cls = c.class_of(1, 0);
  EXPECT_EQ(colim_support(c, cls), (NatSet{1}));
  const std::size_t moved = c.act(PartialInjection(std::map<Nat, Nat>{{1, 3}}), cls);
  EXPECT_EQ(colim_support(c, moved), (NatSet{3}));
}

TEST(OmegaColimit, CanonicalizeRepresentables) {
  for (int m = 0; m <= 2; ++m)
    EXPECT_TRUE(iso_type_equal(canonicalize(representable_iset(m, 2 * m + 1)),
                               CanonicalTameMSet::representable(m)));
}

TEST(OmegaColimit, CoequalizerExampleIsAPoint) {
  const CanonicalTameMSet c = canonicalize(coequalizer_example(4));
  EXPECT_TRUE(iso_type_equal(c, CanonicalTameMSet::unit()));
}

TEST(Flatness, RepresentablesAndConstantsAreFlat) {
  for (int m = 0; m <= 3; ++m) {
    const TruncatedISet x = representable_iset(m, 4);
    EXPECT_TRUE(is_flat(x, FlatMode::Latching).flat) << m;
    EXPECT_TRUE(is_flat(x, FlatMode::Direct).flat) << m;
  }
  EXPECT_TRUE(is_flat(constant_iset({"a", "b"}, 3), FlatMode::Latching).flat);
}

TEST(Flatness, CoequalizerExampleFailsAtLevelTwo) {
  const TruncatedISet x = coequalizer_example(4);
  const FlatResult lat = is_flat(x, FlatMode::Latching);
  const FlatResult dir = is_flat(x, FlatMode::Direct);
  EXPECT_FALSE(lat.flat);
  EXPECT_EQ(lat.level, 2);
  EXPECT_FALSE(lat.witness.empty());
  EXPECT_FALSE(dir.flat);
}

TEST(Bullet, LevelsHoldSupportedElements) {
  const CanonicalTameMSet w = CanonicalTameMSet::representable(1);
  const BulletISet b = bullet_iset(w, 3);
  for (int m = 0; m <= 3; ++m) EXPECT_EQ(b.iset.size(m), m);
  EXPECT_TRUE(is_flat(b.iset, FlatMode::Latching).flat);
  EXPECT_TRUE(counit_check(w, 4));
}

TEST(FlatReplacement, UnitIsAnNIsomorphism) {
  const TruncatedISet x = coequalizer_example(4);
  const FlatReplacement fr = flat_replace(x);
  EXPECT_TRUE(n_iso_check(fr.unit));
  EXPECT_FALSE(fr.unit.levelwise_bijective());
  EXPECT_TRUE(is_flat(fr.flat.iset, FlatMode::Direct).flat);

  const FlatReplacement fr2 = flat_replace(representable_iset(1, 4));
  EXPECT_TRUE(fr2.unit.levelwise_bijective());
}

TEST(LevelwiseMap, RejectsNonNaturalMaps) {
  const TruncatedISet x = constant_iset({"a", "b"}, 2);
  EXPECT_NO_THROW(LevelwiseMap(x, x, {{1, 0}, {1, 0}, {1, 0}}));
  EXPECT_EQ(kind_of([&] { LevelwiseMap(x, x, {{1, 0}, {0, 1}, {1, 0}}); }),
            ErrorKind::InvalidMorphism);
}

TEST(DayConvolution, RepresentablesAdd) {
  const DayConvolution d = day_convolution(representable_iset(1, 4), representable_iset(1, 4));
  EXPECT_TRUE(iso_type_equal(canonicalize(d.iset), CanonicalTameMSet::representable(2)));
}

TEST(Quotient, RelationsAreClosedUnderGenerators) {
  // Identify the two elements of I(1,-) at level 2: level 3 collapses too.
  const TruncatedISet q = quotient_iset(representable_iset(1, 3), {{{2, 0}, {2, 1}}});
  EXPECT_EQ(q.size(2), 1);
  EXPECT_EQ(q.size(3), 1);
  EXPECT_EQ(kind_of([] { quotient_iset(representable_iset(1, 3), {{{2, 0}, {3, 1}}}); }),
            ErrorKind::PreconditionViolated);
}

TEST(MonoPushout, InclusionOfFlatISets) {
  const CanonicalTameMSet w({{1, SigmaSet::regular(1)}, {2, SigmaSet::regular(2)}});
  const CanonicalTameMSet w1 = CanonicalTameMSet::representable(1);
  const BulletISet big = bullet_iset(w, 4);
  const BulletISet small = bullet_iset(w1, 4);
  std::vector<std::vector<int>> map;
  for (int m = 0; m <= 4; ++m) {
    std::vector<int> row;
    for (const MElement& e : small.elements[static_cast<std::size_t>(m)])
      row.push_back(big.index_of(m, e));
    map.push_back(std::move(row));
  }
  const LevelwiseMap i(small.iset, big.iset, map);
  std::string witness;
  EXPECT_TRUE(mono_pushout_check(i, &witness)) << witness;
}

TEST(OmegaColimit, SupportsOfSpecialClasses) {
  const OmegaColimit rep(representable_iset(2, 4));
  EXPECT_EQ(colim_support(rep, rep.class_of(2, 0)), (NatSet{1, 2}));
  const OmegaColimit pt(constant_iset({"*"}, 2));
  EXPECT_TRUE(colim_support(pt, pt.class_of(0, 0)).empty());
  // The only class has no level-0 representative but is fixed by M.
  const OmegaColimit coeq(coequalizer_example(4));
  ASSERT_EQ(coeq.class_count(), 1u);
  EXPECT_TRUE(colim_support(coeq, 0).empty());
}

TEST(OmegaColimit, CanonicalizeConstantSingleton) {
  EXPECT_TRUE(iso_type_equal(canonicalize(constant_iset({"*"}, 3)), CanonicalTameMSet::unit()));
}

TEST(NIso, IdentityIsAnNIsomorphism) {
  const TruncatedISet x = representable_iset(1, 3);
  std::vector<std::vector<int>> id;
  for (int m = 0; m <= 3; ++m) {
    id.emplace_back();
    for (int e = 0; e < x.size(m); ++e) id.back().push_back(e);
  }
  EXPECT_TRUE(n_iso_check(LevelwiseMap(x, x, id)));
}
