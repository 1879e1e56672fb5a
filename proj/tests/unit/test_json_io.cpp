#include <gtest/gtest.h>

#include "tame/json_io.hpp"
#include "tame/random_gen.hpp"

using namespace tame;
using json_io::Json;

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

std::string wrap(const std::string& kind, const Json& payload) {
  return json_io::serialize(json_io::make_document(kind, payload));
}

}  // namespace

TEST(JsonIo, EnvelopeErrors) {
  EXPECT_EQ(error_of([] { json_io::parse_document("{"); }).first, ErrorKind::ParseError);
  EXPECT_EQ(error_of([] { json_io::parse_document(R"({"kind":"mset","formatVersion":2,"payload":{}})"); })
                .second,
            "formatVersion");
  EXPECT_EQ(error_of([] { json_io::parse_document(R"({"kind":"nope","formatVersion":1,"payload":{}})"); })
                .second,
            "kind");
  EXPECT_EQ(error_of([] { json_io::parse_document(R"({"formatVersion":1,"payload":{}})"); }).first,
            ErrorKind::ParseError);
}

TEST(JsonIo, PartialInjectionRoundTrip) {
  const PartialInjection f(std::map<Nat, Nat>{{1, 4}, {3, 2}});
  const json_io::Document d = json_io::parse_document(wrap("partial-injection", json_io::to_json(f)));
  EXPECT_EQ(json_io::partial_injection_from(d.payload), f);
  EXPECT_EQ(error_of([] { json_io::partial_injection_from(Json::parse(R"({"map":{"1":2,"2":2}})")); })
                .first,
            ErrorKind::NotInjective);
}

TEST(JsonIo, QuasiAffineRoundTrip) {
  Rng rng(3);
  for (int k = 0; k < 30; ++k) {
    const QuasiAffine f = random_qa(rng);
    EXPECT_EQ(json_io::quasi_affine_from(json_io::to_json(f)), f) << to_string(f);
  }
  EXPECT_EQ(error_of([] {
              json_io::quasi_affine_from(Json::parse(R"({"pieces":[{"lo":2,"mod":1,"res":0,"a":1,"b":0}]})"));
            }).first,
            ErrorKind::NotCovering);
}

TEST(JsonIo, OperadElementsRoundTrip) {
  Rng rng(5);
  const OperadElementQ q = random_operad_q(rng, 3);
  EXPECT_EQ(json_io::operad_element_q_from(json_io::to_json(q)), q);
  const OperadElementP p = random_operad_p(rng, {{1, 2}, {1}}, 10);
  EXPECT_EQ(json_io::operad_element_p_from(json_io::to_json(p)), p);
  // The document kind is shared; the slot shape decides the parser.
  EXPECT_NO_THROW(json_io::parse_document(wrap("operad-element", json_io::to_json(q))));
  EXPECT_NO_THROW(json_io::parse_document(wrap("operad-element", json_io::to_json(p))));
  Json bad = json_io::to_json(p);
  bad["arity"] = 3;
  EXPECT_EQ(error_of([&] { json_io::operad_element_p_from(bad); }).first, ErrorKind::ArityMismatch);
}

TEST(JsonIo, MSetAndElementRoundTrip) {
  Rng rng(11);
  for (int k = 0; k < 20; ++k) {
    const CanonicalTameMSet x = random_mset(rng, 3, 4);
    const CanonicalTameMSet y = json_io::mset_from(json_io::to_json(x));
    EXPECT_EQ(json_io::to_json(y), json_io::to_json(x));
    if (x.levels().empty()) continue;
    const MElement e = random_element(rng, x, 6);
    EXPECT_EQ(json_io::element_from(x, json_io::element_to_json(x, e)), e);
  }
}

TEST(JsonIo, ElementValidation) {
  const CanonicalTameMSet i2 = CanonicalTameMSet::representable(2);
  const std::string p0 = i2.level(2)->name(0);
  EXPECT_EQ(error_of([&] {
              json_io::element_from(i2, Json{{"level", 2}, {"image", {1}}, {"point", p0}});
            }).second,
            "level");
  EXPECT_EQ(error_of([&] {
              json_io::element_from(i2, Json{{"level", 2}, {"image", {1, 2}}, {"point", "zz"}});
            }).first,
            ErrorKind::ValidationFailed);
  // An unsorted image is normalized.
  const MElement e = json_io::element_from(i2, Json{{"level", 2}, {"image", {5, 3}}, {"point", p0}});
  EXPECT_EQ(e.image, (std::vector<Nat>{3, 5}));
}

TEST(JsonIo, SigmaSetValidation) {
  const Json bad = Json::parse(R"({"m":2,"points":["a","b","c"],"s":[{"a":"b","b":"c","c":"a"}]})");
  EXPECT_EQ(error_of([&] { json_io::sigma_set_from(bad); }).second, "involution");
}

TEST(JsonIo, ISetRoundTrip) {
  Rng rng(13);
  for (int k = 0; k < 10; ++k) {
    const TruncatedISet x = random_iset(rng, 4, 2);
    const Json j = json_io::to_json(x);
    EXPECT_EQ(json_io::to_json(json_io::iset_from(j)), j);
  }
  const Json j = json_io::to_json(representable_iset(1, 2));
  Json short_levels = j;
  short_levels["levels"].erase(2);
  EXPECT_EQ(error_of([&] { json_io::iset_from(short_levels); }).second, "levels");
}

TEST(JsonIo, MorphismRoundTrip) {
  Rng rng(17);
  const LevelwiseMap f = random_flat_mono(rng, 3);
  const Json j = json_io::to_json(f);
  EXPECT_EQ(json_io::to_json(json_io::levelwise_map_from(j)), j);
}

TEST(JsonIo, MonoidRoundTrip) {
  const XInfinity x = xinf({"*", "a"}, 0, 3);
  const CommMonoidPresentation p = json_io::monoid_from(json_io::to_json(x.presentation));
  EXPECT_EQ(p.sums(), x.presentation.sums());
  EXPECT_EQ(p.level_bound(), 3);
  Json broken = json_io::to_json(cyclic_group(2));
  broken["sums"].erase(0);
  EXPECT_EQ(error_of([&] { json_io::monoid_from(broken); }).first, ErrorKind::ValidationFailed);
}

TEST(JsonIo, CertificateRoundTrip) {
  Rng rng(19);
  const OperadElementQ phi = random_operad_q(rng, 2);
  const std::vector<NatSet> a{{1, 3}, {2}};
  const OperadElementQ psi = extend_agreeing(phi, a, random_operad_q(rng, 2));
  const Certificate c = agreeing_chain(phi, psi, a);
  const Certificate d = json_io::certificate_from(json_io::to_json(c));
  EXPECT_EQ(json_io::to_json(d), json_io::to_json(c));
  EXPECT_TRUE(verify_certificate(d).ok);
}
