#include <gtest/gtest.h>

#include "tame/opalg.hpp"

using namespace tame;

namespace {

std::pair<ErrorKind, std::string> error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return {e.kind(), e.invariant()};
  }
  ADD_FAILURE() << "no error raised";
  return {ErrorKind::UnknownCommand, {}};
}

PartialInjection pi(std::map<Nat, Nat> m) { return PartialInjection(std::move(m)); }

}  // namespace

TEST(AbelianMonoid, ValidatesTheTable) {
  const std::vector<std::string> two{"0", "1"};
  EXPECT_NO_THROW(trivial_from_abelian(two, {{0, 1}, {1, 0}}, 0));
  EXPECT_EQ(error_of([&] { trivial_from_abelian(two, {{0, 1}, {1, 0}}, 1); }),
            std::make_pair(ErrorKind::NotAMonoid, std::string("unit")));
  EXPECT_EQ(error_of([&] { trivial_from_abelian(two, {{0, 1}, {0, 1}}, 0); }).second,
            "commutativity");
  EXPECT_EQ(error_of([&] { trivial_from_abelian(two, {{0, 2}, {2, 0}}, 0); }).second, "closure");
  EXPECT_EQ(error_of([&] { trivial_from_abelian({}, {}, 0); }).second, "nonempty");
  // 2 + 2 = 0 breaks (1 + 1) + 2 = 1 + (1 + 2).
  EXPECT_EQ(error_of([] {
              trivial_from_abelian({"0", "1", "2"}, {{0, 1, 2}, {1, 2, 0}, {2, 0, 0}}, 0);
            }).second,
            "associativity");
}

TEST(CyclicGroup, SumsAddModK) {
  const CommMonoidPresentation z3 = cyclic_group(3);
  const MElement two = MElement{0, {}, 2};
  EXPECT_EQ(z3.sum(two, two).point, 1);
  EXPECT_EQ(z3.sum(z3.unit(), two), two);
  EXPECT_EQ(error_of([] { cyclic_group(0); }).first, ErrorKind::PreconditionViolated);
}

TEST(XInfinity, LevelSizesArePowers) {
  const XInfinity x = xinf({"*", "a", "b"}, 0, 4);
  for (int k = 0; k <= 4; ++k) {
    const SigmaSet* a = x.presentation.carrier().level(k);
    std::size_t expected = 1;
    for (int j = 0; j < k; ++j) expected *= 2;
    ASSERT_NE(a, nullptr);
    EXPECT_EQ(a->size(), expected);
  }
}

TEST(XInfinity, SumsAreUnionsOfFunctions) {
  const XInfinity x = xinf({"*", "a", "b"}, 0, 4);
  const MElement f = x.from_function({{2, 1}, {5, 2}});
  const MElement g = x.from_function({{3, 2}});
  EXPECT_EQ(x.to_function(x.presentation.sum(f, g)),
            (std::map<Nat, int>{{2, 1}, {3, 2}, {5, 2}}));
  EXPECT_EQ(error_of([&] { x.presentation.sum(f, f); }).first, ErrorKind::OverlappingSupports);
  const MElement big = x.from_function({{1, 1}, {2, 1}, {3, 1}});
  EXPECT_EQ(error_of([&] { x.presentation.sum(big, x.from_function({{7, 1}, {8, 1}})); }).first,
            ErrorKind::LevelBoundExceeded);
}

TEST(Presentation, RejectsNonCommutativeTables) {
  // a + a lands on a free level-2 orbit, so swapping the summands moves it.
  const CanonicalTameMSet carrier({{0, SigmaSet::trivial(0, {"0"})},
                                   {1, SigmaSet::trivial(1, {"a"})},
                                   {2, SigmaSet::regular(2)}});
  std::map<CommMonoidPresentation::Key, MElement> sums;
  sums[{{0, 0}, {0, 0}}] = MElement{0, {}, 0};
  sums[{{0, 0}, {1, 0}}] = MElement{1, {1}, 0};
  sums[{{1, 0}, {0, 0}}] = MElement{1, {1}, 0};
  sums[{{0, 0}, {2, 0}}] = MElement{2, {1, 2}, 0};
  sums[{{2, 0}, {0, 0}}] = MElement{2, {1, 2}, 0};
  sums[{{1, 0}, {1, 0}}] = MElement{2, {1, 2}, 0};
  const auto e = error_of([&] { CommMonoidPresentation(carrier, 0, sums, 2); });
  EXPECT_EQ(e.first, ErrorKind::ValidationFailed);
  EXPECT_EQ(e.second, "commutativity");
}

TEST(AlgebraRoundTrip, MonoidToAlgebraAndBack) {
  const XInfinity x = xinf({"*", "a"}, 0, 4);
  const CommMonoidPresentation& p = x.presentation;
  const CommMonoidPresentation q = algebra_to_monoid(monoid_to_algebra(p), 4);
  EXPECT_EQ(q.sums(), p.sums());
}

TEST(AlgebraRoundTrip, ActionIsPushforwardAndSum) {
  const XInfinity x = xinf({"*", "a", "b"}, 0, 4);
  const AlgebraAction alg = monoid_to_algebra(x.presentation);
  const MElement f = x.from_function({{1, 1}});
  const MElement g = x.from_function({{1, 2}, {2, 1}});
  const OperadElementP phi({pi({{1, 4}}), pi({{1, 2}, {2, 6}})});
  EXPECT_EQ(x.to_function(alg.action(phi, {f, g})),
            (std::map<Nat, int>{{2, 2}, {4, 1}, {6, 1}}));
  EXPECT_EQ(error_of([&] { alg.action(phi, {f}); }).first, ErrorKind::ArityMismatch);
}

TEST(Wedge, CountsMatchAndMapIsIsomorphism) {
  const WedgeWitness w = wedge_iso({"*", "a"}, 0, {"*", "b", "c"}, 0, 4);
  EXPECT_TRUE(w.isomorphism);
  EXPECT_TRUE(w.equivariant);
  ASSERT_EQ(w.box_counts.size(), 5u);
  EXPECT_EQ(w.box_counts[2], 9u);
  EXPECT_EQ(w.box_counts, w.wedge_counts);
}

TEST(Chi, SectionInvertsChi) {
  const CanonicalTameMSet i1 = CanonicalTameMSet::representable(1);
  const CanonicalTameMSet i2 = CanonicalTameMSet::representable(2);
  const MElement a = make_element(i1, {4}, 0);
  const MElement b = make_element(i2, {2, 1}, 0);
  const OperadElementP s = chi_section(a, b);
  EXPECT_EQ(chi(s, i1, a, i2, b), std::make_pair(a, b));
  const OperadElementP psi({pi({{4, 7}}), pi({{1, 3}, {2, 5}})});
  const auto [u, v] = chi(psi, i1, a, i2, b);
  EXPECT_EQ(u.image, (std::vector<Nat>{7}));
  EXPECT_EQ(v, act(i2, pi({{1, 3}, {2, 5}}), b));
  EXPECT_EQ(error_of([&] { chi_section(a, make_element(i1, {4}, 0)); }).first,
            ErrorKind::OverlappingSupports);
}
