#include <gtest/gtest.h>

#include "tame/inj.hpp"

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

}  // namespace

TEST(QuasiAffine, IdentityAndAffine) {
  const QuasiAffine id;
  EXPECT_EQ(id(7), 7);
  const QuasiAffine f = QuasiAffine::affine(3, 2);
  EXPECT_EQ(f(1), 5);
  EXPECT_EQ(f(10), 32);
  EXPECT_EQ(kind_of([&] { f(0); }), ErrorKind::IndexOutOfRange);
  EXPECT_EQ(kind_of([] { QuasiAffine::affine(1, -1); }), ErrorKind::NotInjective);
}

TEST(QuasiAffine, NormalFormIsCanonical) {
  // The same map given with a redundant period and threshold.
  const QuasiAffine a = QuasiAffine::affine(2, 1);
  const QuasiAffine b = QuasiAffine::tabulate(5, 4, [](Nat i) { return 2 * i + 1; });
  EXPECT_EQ(a, b);
  EXPECT_EQ(b.threshold(), 0);
  EXPECT_EQ(b.period(), 1);
}

TEST(QuasiAffine, FromPiecesSwap) {
  // Swap 1 and 2, identity elsewhere.
  const QuasiAffine f = QuasiAffine::from_pieces(
      {{1, 1, 1, 0, 1, 1}, {2, 2, 1, 0, 1, -1}, {3, std::nullopt, 1, 0, 1, 0}});
  EXPECT_EQ(f(1), 2);
  EXPECT_EQ(f(2), 1);
  EXPECT_EQ(f(3), 3);
  EXPECT_EQ(f.threshold(), 2);
  EXPECT_EQ(compose(f, f), QuasiAffine::identity());
}

TEST(QuasiAffine, FromPiecesWithDivisor) {
  // 2k -> 3k and 2k+1 -> 6k+4.
  const QuasiAffine f = QuasiAffine::from_pieces(
      {{1, std::nullopt, 2, 0, 3, 0, 2}, {1, std::nullopt, 2, 1, 3, 1, 1}});
  EXPECT_EQ(f(2), 3);
  EXPECT_EQ(f(4), 6);
  EXPECT_EQ(f(1), 4);
  EXPECT_EQ(f(3), 10);
  EXPECT_EQ(kind_of([] {
              QuasiAffine::from_pieces({{1, std::nullopt, 2, 1, 1, 0, 2},
                                        {1, std::nullopt, 2, 0, 1, 0, 1}});
            }),
            ErrorKind::NotCovering);
}

TEST(QuasiAffine, FromPiecesRejectsGapsAndOverlaps) {
  EXPECT_EQ(kind_of([] { QuasiAffine::from_pieces({{2, std::nullopt, 1, 0, 1, 0}}); }),
            ErrorKind::NotCovering);
  EXPECT_EQ(kind_of([] {
              QuasiAffine::from_pieces({{1, std::nullopt, 1, 0, 1, 0}, {1, 1, 1, 0, 1, 5}});
            }),
            ErrorKind::NotCovering);
  EXPECT_EQ(kind_of([] { QuasiAffine::from_pieces({}); }), ErrorKind::NotCovering);
}

TEST(QuasiAffine, ComposeMatchesPointwise) {
  const QuasiAffine f = QuasiAffine::affine(2, 0);
  const QuasiAffine g = order_embed_avoiding({1, 4});
  const QuasiAffine h = compose(f, g);
  for (Nat i = 1; i <= 40; ++i) EXPECT_EQ(h(i), f(g(i)));
}

TEST(QuasiAffine, OrderEmbedAvoiding) {
  const QuasiAffine e = order_embed_avoiding({1, 3});
  EXPECT_EQ(e(1), 2);
  EXPECT_EQ(e(2), 4);
  EXPECT_EQ(e(3), 5);
  const auto img = e.image();
  EXPECT_FALSE(img.contains(1));
  EXPECT_FALSE(img.contains(3));
  EXPECT_TRUE(img.contains(100));
}

TEST(QuasiAffine, CompleteExtendsPartialInjection) {
  const PartialInjection f(std::map<Nat, Nat>{{1, 3}, {2, 1}});
  const QuasiAffine c = complete(f);
  EXPECT_EQ(c(1), 3);
  EXPECT_EQ(c(2), 1);
  EXPECT_EQ(c(3), 2);
  EXPECT_EQ(c(4), 4);
  EXPECT_EQ(c.restrict_to({1, 2}), f);
}

TEST(QuasiAffine, ImagesDisjoint) {
  EXPECT_TRUE(images_disjoint(QuasiAffine::affine(2, -1), QuasiAffine::affine(2, 0)));
  EXPECT_FALSE(images_disjoint(QuasiAffine::affine(2, 0), QuasiAffine::affine(4, 0)));
  EXPECT_FALSE(images_disjoint(QuasiAffine::affine(3, 0), QuasiAffine::affine(2, 0)));
}

TEST(QuasiAffine, PiecesRoundTrip) {
  const QuasiAffine f = compose(order_embed_avoiding({2}), QuasiAffine::affine(3, 1));
  EXPECT_EQ(QuasiAffine::from_pieces(f.pieces()), f);
}

TEST(QuasiAffine, AffineComposition) {
  const QuasiAffine f = compose(QuasiAffine::affine(2, 0), QuasiAffine::affine(1, 1));
  EXPECT_EQ(f, QuasiAffine::affine(2, 2));
  EXPECT_EQ(f.pieces().size(), 1u);
}

TEST(QuasiAffine, HalvingAfterQuadrupling) {
  // A total injection that halves multiples of 4: i -> i/2 on 0 mod 4,
  // i -> i - 1 on 2 mod 4, i -> 2i + 1 on odd i.
  const QuasiAffine h = QuasiAffine::from_pieces({{1, std::nullopt, 4, 0, 1, 0, 2},
                                                  {1, std::nullopt, 4, 2, 1, -1, 1},
                                                  {1, std::nullopt, 2, 1, 2, 1, 1}});
  const QuasiAffine c = compose(h, QuasiAffine::affine(4, 0));
  EXPECT_EQ(c, QuasiAffine::affine(2, 0));
  for (Nat i = 1; i <= 1000; ++i) EXPECT_EQ(c(i), 2 * i);
}
