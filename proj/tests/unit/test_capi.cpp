#include <gtest/gtest.h>

#include <string>

#include "tame/tame.h"

namespace {

// Takes ownership of a string returned by the library.
std::string take(char* s) {
  std::string out = s ? s : "";
  tame_free_string(s);
  return out;
}

const char* kI1 =
    R"js({"kind":"mset","formatVersion":1,"payload":{"levels":{"1":{"m":1,"points":["1"],"s":[]}},"maxLevel":1}})js";

}  // namespace

TEST(CApi, StatusNames) {
  EXPECT_STREQ(tame_status_name(TAME_OK), "Ok");
  EXPECT_STREQ(tame_status_name(TAME_PARSE_ERROR), "ParseError");
  EXPECT_STREQ(tame_status_name(TAME_UNKNOWN_COMMAND), "UnknownCommand");
  EXPECT_STREQ(tame_status_name(TAME_DOMAIN_MISMATCH), "DomainMismatch");
  EXPECT_STREQ(tame_status_name(TAME_NULL_ARGUMENT), "NullArgument");
  EXPECT_STRNE(tame_version(), "");
}

TEST(CApi, MSetLifecycle) {
  tame_mset* x = nullptr;
  ASSERT_EQ(tame_mset_from_json(kI1, &x), TAME_OK);
  tame_mset* y = nullptr;
  ASSERT_EQ(tame_mset_box(x, x, &y), TAME_OK);
  size_t n = 0;
  ASSERT_EQ(tame_mset_level_size(y, 2, &n), TAME_OK);
  EXPECT_EQ(n, 2u);
  ASSERT_EQ(tame_mset_level_size(y, 1, &n), TAME_OK);
  EXPECT_EQ(n, 0u);
  char* json = nullptr;
  ASSERT_EQ(tame_mset_to_json(y, &json), TAME_OK);
  EXPECT_NE(take(json).find("\"mset\""), std::string::npos);
  ASSERT_EQ(tame_mset_support(x, R"js({"level":1,"image":[3],"point":"1"})js", &json), TAME_OK);
  EXPECT_EQ(take(json), "[3]");
  tame_mset_free(y);
  tame_mset_free(x);
}

TEST(CApi, ErrorsAreReported) {
  tame_mset* x = nullptr;
  EXPECT_EQ(tame_mset_from_json("{", &x), TAME_PARSE_ERROR);
  EXPECT_EQ(x, nullptr);
  EXPECT_STRNE(tame_last_error_message(), "");
  EXPECT_EQ(tame_mset_from_json(nullptr, &x), TAME_NULL_ARGUMENT);
  EXPECT_STREQ(tame_last_error_location(), "json");
  const char* bad =
      R"js({"kind":"mset","formatVersion":1,"payload":{"levels":{"2":{"m":2,"points":["a","b","c"],"s":[{"a":"b","b":"c","c":"a"}]}},"maxLevel":2}})js";
  EXPECT_EQ(tame_mset_from_json(bad, &x), TAME_VALIDATION_FAILED);
  EXPECT_STREQ(tame_last_error_invariant(), "involution");
  tame_mset* i1 = nullptr;
  ASSERT_EQ(tame_mset_representable(1, &i1), TAME_OK);
  EXPECT_STREQ(tame_last_error_message(), "");
  char* out = nullptr;
  EXPECT_EQ(tame_mset_support(i1, R"js({"level":2,"image":[1,2],"point":"1"})js", &out),
            TAME_VALIDATION_FAILED);
  tame_mset_free(i1);
}

TEST(CApi, ISets) {
  tame_mset* i1 = nullptr;
  ASSERT_EQ(tame_mset_representable(1, &i1), TAME_OK);
  tame_mset_free(i1);
  const char* rep1 =
      R"js({"kind":"iset","formatVersion":1,"payload":{"N":2,"stableFrom":1,"levels":[[],["1"],["1","2"]],"incl":[{},{"1":"1"}],"s":[[],[],[{"1":"2","2":"1"}]]}})js";
  tame_iset* x = nullptr;
  ASSERT_EQ(tame_iset_from_json(rep1, &x), TAME_OK) << tame_last_error_message();
  int flat = 0;
  ASSERT_EQ(tame_iset_is_flat(x, 0, &flat), TAME_OK);
  EXPECT_EQ(flat, 1);
  EXPECT_EQ(tame_iset_is_flat(x, 5, &flat), TAME_INDEX_OUT_OF_RANGE);
  tame_mset* c = nullptr;
  ASSERT_EQ(tame_iset_canonicalize(x, &c), TAME_OK);
  size_t n = 0;
  tame_mset_level_size(c, 1, &n);
  EXPECT_EQ(n, 1u);
  tame_mset_free(c);
  tame_iset* d = nullptr;
  ASSERT_EQ(tame_iset_day(x, x, &d), TAME_OK);
  char* json = nullptr;
  ASSERT_EQ(tame_iset_to_json(d, &json), TAME_OK);
  EXPECT_NE(take(json).find("\"iset\""), std::string::npos);
  tame_iset_free(d);
  tame_iset_free(x);
}

TEST(CApi, Monoids) {
  tame_monoid* z = nullptr;
  ASSERT_EQ(tame_monoid_cyclic(3, &z), TAME_OK);
  char* out = nullptr;
  ASSERT_EQ(tame_monoid_sum(z, R"js({"level":0,"image":[],"point":"2"})js",
                            R"js({"level":0,"image":[],"point":"2"})js", &out),
            TAME_OK)
      << tame_last_error_message();
  EXPECT_NE(take(out).find("\"1\""), std::string::npos);
  tame_monoid_free(z);

  tame_monoid* x = nullptr;
  ASSERT_EQ(tame_monoid_xinf(2, 3, &x), TAME_OK);
  EXPECT_EQ(tame_monoid_sum(x, R"js({"level":1,"image":[1],"point":"(a1)"})js",
                            R"js({"level":1,"image":[1],"point":"(a1)"})js", &out),
            TAME_OVERLAPPING_SUPPORTS);
  ASSERT_EQ(tame_monoid_to_json(x, &out), TAME_OK);
  const std::string doc = take(out);
  tame_monoid* y = nullptr;
  EXPECT_EQ(tame_monoid_from_json(doc.c_str(), &y), TAME_OK);
  tame_monoid_free(y);
  tame_monoid_free(x);
}

TEST(CApi, Certificates) {
  const char* phi =
      R"js({"arity":2,"slots":[{"pieces":[{"lo":1,"hi":null,"mod":2,"res":1,"a":2,"b":-1},{"lo":1,"hi":null,"mod":2,"res":0,"a":2,"b":-1}]},{"pieces":[{"lo":1,"hi":null,"mod":1,"res":0,"a":2,"b":0}]}]})js";
  const char* psi =
      R"js({"arity":2,"slots":[{"pieces":[{"lo":1,"hi":null,"mod":1,"res":0,"a":4,"b":-3}]},{"pieces":[{"lo":1,"hi":null,"mod":1,"res":0,"a":2,"b":0}]}]})js";
  tame_certificate* c = nullptr;
  ASSERT_EQ(tame_agreeing_chain(phi, psi, "[[1],[3]]", &c), TAME_OK) << tame_last_error_message();
  size_t len = 0;
  ASSERT_EQ(tame_certificate_length(c, &len), TAME_OK);
  EXPECT_GT(len, 0u);
  int ok = 0, step = 99;
  ASSERT_EQ(tame_certificate_verify(c, &ok, &step), TAME_OK);
  EXPECT_EQ(ok, 1);
  EXPECT_EQ(step, -1);
  char* json = nullptr;
  ASSERT_EQ(tame_certificate_to_json(c, &json), TAME_OK);
  const std::string doc = take(json);
  tame_certificate* d = nullptr;
  ASSERT_EQ(tame_certificate_from_json(doc.c_str(), &d), TAME_OK);
  ASSERT_EQ(tame_certificate_verify(d, &ok, nullptr), TAME_OK);
  EXPECT_EQ(ok, 1);
  tame_certificate_free(d);
  tame_certificate_free(c);
  EXPECT_EQ(tame_agreeing_chain(phi, psi, "[[2],[3]]", &c), TAME_PRECONDITION_VIOLATED);
  EXPECT_STREQ(tame_last_error_invariant(), "agree");
}

TEST(CApi, RunCommand) {
  const char* argv[] = {"box", kI1, kI1};
  char* report = nullptr;
  int code = -1;
  ASSERT_EQ(tame_run_command(3, argv, &report, &code), TAME_OK);
  EXPECT_EQ(code, 0);
  EXPECT_NE(take(report).find("\"outcome\": \"value\""), std::string::npos);
  const char* bad[] = {"nope"};
  ASSERT_EQ(tame_run_command(1, bad, &report, &code), TAME_OK);
  EXPECT_EQ(code, 2);
  tame_free_string(report);
  EXPECT_EQ(tame_run_command(1, bad, nullptr, &code), TAME_NULL_ARGUMENT);
}
