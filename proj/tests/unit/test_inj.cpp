#include <gtest/gtest.h>

#include "tame/inj.hpp"

using namespace tame;

namespace {

PartialInjection pi(std::map<Nat, Nat> m) { return PartialInjection(std::move(m)); }

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::UnknownCommand;
}

}  // namespace

TEST(PartialInjection, RejectsRepeatedValues) {
  EXPECT_EQ(kind_of([] { pi({{1, 3}, {2, 3}}); }), ErrorKind::NotInjective);
  EXPECT_EQ(kind_of([] { pi({{0, 1}}); }), ErrorKind::NotInjective);
}

TEST(PartialInjection, EvaluatesOnlyOnKeys) {
  const PartialInjection f = pi({{1, 5}, {4, 2}});
  EXPECT_EQ(f(1), 5);
  EXPECT_EQ(f(4), 2);
  EXPECT_EQ(kind_of([&] { f(2); }), ErrorKind::DomainMismatch);
  EXPECT_EQ(f.keys(), (NatSet{1, 4}));
  EXPECT_EQ(f.image(), (NatSet{2, 5}));
  EXPECT_TRUE(f.covers({1}));
  EXPECT_FALSE(f.covers({1, 2}));
  EXPECT_EQ(f.apply({1, 4}), (NatSet{2, 5}));
}

TEST(PartialInjection, ComposeAndRestrict) {
  const PartialInjection f = pi({{1, 2}, {2, 3}});
  const PartialInjection g = pi({{2, 7}, {3, 9}});
  EXPECT_EQ(compose(g, f), pi({{1, 7}, {2, 9}}));
  EXPECT_EQ(kind_of([&] { compose(f, g); }), ErrorKind::DomainMismatch);
  EXPECT_EQ(f.restrict_to({2}), pi({{2, 3}}));
  EXPECT_EQ(kind_of([&] { f.restrict_to({2, 5}); }), ErrorKind::DomainMismatch);
  EXPECT_EQ(PartialInjection::identity_on({3, 4}), pi({{3, 3}, {4, 4}}));
}

TEST(PartialInjection, DisjointImages) {
  EXPECT_TRUE(images_disjoint(pi({{1, 1}}), pi({{1, 2}})));
  EXPECT_FALSE(images_disjoint(pi({{1, 1}}), pi({{2, 1}})));
}

TEST(OperadElement, SlotsNeedDisjointImages) {
  EXPECT_EQ(kind_of([] { OperadElementP({pi({{1, 1}}), pi({{1, 1}})}); }),
            ErrorKind::NotInjective);
  const OperadElementP phi({pi({{1, 1}}), pi({{1, 2}})});
  EXPECT_EQ(phi.arity(), 2u);
  EXPECT_EQ(phi.slot(2), pi({{1, 2}}));
  EXPECT_EQ(kind_of([&] { phi.slot(3); }), ErrorKind::IndexOutOfRange);
}

TEST(OperadElement, PermutedActsOnSlots) {
  const OperadElementP phi({pi({{1, 1}}), pi({{1, 2}}), pi({{1, 3}})});
  const OperadElementP p = phi.permuted({2, 0, 1});
  EXPECT_EQ(p.slot(1), pi({{1, 3}}));
  EXPECT_EQ(p.slot(2), pi({{1, 1}}));
  EXPECT_EQ(kind_of([&] { phi.permuted({0, 1}); }), ErrorKind::ArityMismatch);
}

TEST(OperadElement, CompositionConcatenatesBlocks) {
  const OperadElementQ phi({QuasiAffine::affine(2, -1), QuasiAffine::affine(2, 0)});
  const OperadElementQ id({QuasiAffine::identity()});
  const OperadElementQ split({QuasiAffine::affine(2, -1), QuasiAffine::affine(2, 0)});
  const OperadElementQ c = operad_compose(phi, {split, id});
  ASSERT_EQ(c.arity(), 3u);
  EXPECT_EQ(c.slot(1)(1), 1);
  EXPECT_EQ(c.slot(2)(1), 3);
  EXPECT_EQ(c.slot(3)(1), 2);
  EXPECT_EQ(kind_of([&] { operad_compose(phi, {id}); }), ErrorKind::ArityMismatch);
}

TEST(OperadElement, PrecomposeSlots) {
  const OperadElementQ phi({QuasiAffine::affine(2, -1), QuasiAffine::affine(2, 0)});
  const OperadElementQ r =
      precompose_slots(phi, {QuasiAffine::affine(1, 1), QuasiAffine::identity()});
  EXPECT_EQ(r.slot(1)(1), 3);
  EXPECT_EQ(r.slot(2)(1), 2);
}

TEST(OperadElement, ComposingWithTheNullaryElement) {
  const OperadElementQ phi({QuasiAffine::affine(2, -1), QuasiAffine::affine(2, 0)});
  const OperadElementQ c = operad_compose(phi, {OperadElementQ(), OperadElementQ({QuasiAffine()})});
  ASSERT_EQ(c.arity(), 1u);
  for (Nat j = 1; j <= 20; ++j) EXPECT_EQ(c.slot(1)(j), phi.slot(2)(j));
  EXPECT_EQ(operad_compose(phi, {OperadElementQ({QuasiAffine()}), OperadElementQ({QuasiAffine()})}),
            phi);
}
