#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>

#include "tame/commands.hpp"
#include "tame/json_io.hpp"

using namespace tame;
using json_io::Json;

namespace {

struct Outcome {
  int exit_code;
  Json report;
};

Outcome run(std::vector<std::string> args) {
  const CommandOutput out = run_command(args);
  return {out.exit_code, Json::parse(out.report)};
}

std::string doc(const std::string& kind, const Json& payload) {
  return json_io::serialize(json_io::make_document(kind, payload));
}

std::string i1() { return doc("mset", json_io::to_json(CanonicalTameMSet::representable(1))); }

}  // namespace

TEST(Commands, UnknownCommandIsAnInputError) {
  const Outcome r = run({"frobnicate"});
  EXPECT_EQ(r.exit_code, kExitInputError);
  EXPECT_EQ(r.report["outcome"], "error");
  EXPECT_EQ(r.report["error"]["kind"], "UnknownCommand");
  EXPECT_EQ(run({}).exit_code, kExitInputError);
}

TEST(Commands, BadOptionsAreParseErrors) {
  const Outcome r = run({"box", i1()});
  EXPECT_EQ(r.exit_code, kExitInputError);
  EXPECT_EQ(r.report["error"]["kind"], "ParseError");
  EXPECT_EQ(run({"box", i1(), i1(), "--window", "99"}).exit_code, kExitInputError);
}

TEST(Commands, BoxOfRepresentables) {
  const Outcome r = run({"box", i1(), i1()});
  ASSERT_EQ(r.exit_code, kExitPass) << r.report.dump();
  EXPECT_EQ(r.report["outcome"], "value");
  const CanonicalTameMSet z = json_io::mset_from(r.report["value"]["payload"]);
  EXPECT_TRUE(iso_type_equal(z, CanonicalTameMSet::representable(2)));
  EXPECT_EQ(r.report["inputsDigest"].get<std::string>().size(), 16u);
  EXPECT_FALSE(r.report.contains("elapsedMs"));
  EXPECT_TRUE(run({"--timing", "box", i1(), i1()}).report.is_object());
}

TEST(Commands, DigestDependsOnInputs) {
  const std::string i2 = doc("mset", json_io::to_json(CanonicalTameMSet::representable(2)));
  EXPECT_EQ(run({"box", i1(), i1()}).report["inputsDigest"],
            run({"box", i1(), i1()}).report["inputsDigest"]);
  EXPECT_NE(run({"box", i1(), i1()}).report["inputsDigest"],
            run({"box", i1(), i2}).report["inputsDigest"]);
}

TEST(Commands, FilesAndInlineJson) {
  const std::string path = ::testing::TempDir() + "tame_i1.json";
  {
    std::ofstream out(path);
    out << i1();
  }
  const Outcome r = run({"box", path, i1()});
  EXPECT_EQ(r.exit_code, kExitPass);
  EXPECT_EQ(run({"box", path + ".missing", i1()}).report["error"]["kind"], "ParseError");
  std::remove(path.c_str());
}

TEST(Commands, WrongDocumentKind) {
  const std::string iset = doc("iset", json_io::to_json(representable_iset(1, 2)));
  const Outcome r = run({"box", iset, i1()});
  EXPECT_EQ(r.exit_code, kExitInputError);
  EXPECT_EQ(r.report["error"]["invariant"], "kind");
}

TEST(Commands, SupportAndAct) {
  const std::string e = R"js({"level":1,"image":[4],"point":"1"})js";
  const Outcome s = run({"support", i1(), "--element", e});
  ASSERT_EQ(s.exit_code, kExitPass) << s.report.dump();
  EXPECT_EQ(s.report["value"]["support"], Json::array({4}));
  const Outcome a = run({"act", i1(), "--element", e, "--map", R"({"map":{"4":9}})"});
  ASSERT_EQ(a.exit_code, kExitPass) << a.report.dump();
  EXPECT_EQ(a.report["value"]["element"]["image"], Json::array({9}));
  const Outcome bad = run({"act", i1(), "--element", e, "--map", R"({"map":{"1":9}})"});
  EXPECT_EQ(bad.report["error"]["kind"], "SupportNotCovered");
}

TEST(Commands, FlatCheckFailureIsALawFailure) {
  const std::string coeq = doc("iset", json_io::to_json(coequalizer_example(4)));
  const Outcome r = run({"flat-check", coeq});
  EXPECT_EQ(r.exit_code, kExitLawFailure);
  EXPECT_EQ(r.report["outcome"], "fail");
  EXPECT_EQ(r.report["value"]["latching"]["level"], 2);
  EXPECT_EQ(r.report["value"]["agree"], true);
  const std::string rep = doc("iset", json_io::to_json(representable_iset(2, 4)));
  EXPECT_EQ(run({"flat-check", rep, "--mode", "direct"}).exit_code, kExitPass);
}

TEST(Commands, FlattenAndNIso) {
  const std::string coeq = doc("iset", json_io::to_json(coequalizer_example(3)));
  const Outcome r = run({"flatten", coeq});
  ASSERT_EQ(r.exit_code, kExitPass) << r.report.dump();
  EXPECT_EQ(r.report["value"]["unitNIso"], true);
  EXPECT_EQ(r.report["value"]["unitLevelwiseBijective"], false);
  const Outcome n = run({"n-iso", r.report["value"]["unit"].dump()});
  EXPECT_EQ(n.exit_code, kExitPass) << n.report.dump();
}

TEST(Commands, DayAndCanonicalize) {
  const std::string x = doc("iset", json_io::to_json(representable_iset(1, 4)));
  const Outcome d = run({"day", x, x});
  ASSERT_EQ(d.exit_code, kExitPass) << d.report.dump();
  const Outcome c = run({"canonicalize", d.report["value"].dump()});
  ASSERT_EQ(c.exit_code, kExitPass) << c.report.dump();
  EXPECT_TRUE(iso_type_equal(json_io::mset_from(c.report["value"]["payload"]),
                             CanonicalTameMSet::representable(2)));
}

TEST(Commands, DecomposeAndOrbitSet) {
  const std::string i2 = doc("mset", json_io::to_json(CanonicalTameMSet::representable(2)));
  EXPECT_EQ(run({"decompose", i2, "--window", "5"}).exit_code, kExitPass);
  EXPECT_EQ(run({"orbit-set", i2}).report["value"]["count"], 1);
}

TEST(Commands, MonoidCommands) {
  const Outcome x = run({"xinf", "--points", "3", "--level", "3"});
  ASSERT_EQ(x.exit_code, kExitPass) << x.report.dump();
  EXPECT_EQ(x.report["value"]["counts"], Json::array({1, 2, 4, 8}));
  const std::string m = x.report["value"]["monoid"].dump();
  const Outcome s = run({"sum", m, "--x", R"js({"level":1,"image":[2],"point":"(a1)"})js", "--y",
                     R"js({"level":1,"image":[1],"point":"(a2)"})js"});
  ASSERT_EQ(s.exit_code, kExitPass) << s.report.dump();
  EXPECT_EQ(s.report["value"]["element"]["image"], Json::array({1, 2}));
  EXPECT_EQ(s.report["value"]["element"]["point"], "(a2,a1)");
  EXPECT_EQ(run({"to-algebra", m}).exit_code, kExitPass);
  const Outcome t = run({"to-monoid", R"({"names":["0","1"],"add":[[0,1],[1,0]],"unit":0})"});
  EXPECT_EQ(t.exit_code, kExitPass) << t.report.dump();
  const Outcome bad = run({"to-monoid", R"({"names":["0","1"],"add":[[0,1],[1,1]],"unit":1})"});
  EXPECT_EQ(bad.report["error"]["kind"], "NotAMonoid");
  const Outcome w = run({"wedge-iso", "--x", "2", "--y", "3", "--level", "3"});
  EXPECT_EQ(w.exit_code, kExitPass) << w.report.dump();
  EXPECT_EQ(w.report["value"]["boxCounts"][2], 9);
}

TEST(Commands, OperadActAndChi) {
  const std::string m = run({"xinf", "--points", "2", "--level", "3"}).report["value"]["monoid"].dump();
  const std::string phi = R"js({"arity":2,"slots":[{"map":{"1":5}},{"map":{"1":2}}]})js";
  const std::string xs = R"js([{"level":1,"image":[1],"point":"(a1)"},{"level":1,"image":[1],"point":"(a1)"}])js";
  const Outcome r = run({"operad-act", m, "--phi", phi, "--elements", xs});
  ASSERT_EQ(r.exit_code, kExitPass) << r.report.dump();
  EXPECT_EQ(r.report["value"]["element"]["image"], Json::array({2, 5}));
  const Outcome c = run({"chi", i1(), i1(), "--psi", phi, "--x-element",
                     R"js({"level":1,"image":[1],"point":"1"})js", "--y-element",
                     R"({"level":1,"image":[1],"point":"1"})"});
  ASSERT_EQ(c.exit_code, kExitPass) << c.report.dump();
  EXPECT_EQ(c.report["value"]["x"]["image"], Json::array({5}));
}

TEST(Commands, CertificateRoundTrip) {
  const std::string phi =
      doc("operad-element", json_io::to_json(OperadElementQ({QuasiAffine::affine(2, -1),
                                                              QuasiAffine::affine(2, 0)})));
  const std::string psi =
      doc("operad-element", json_io::to_json(OperadElementQ({QuasiAffine::affine(4, -3),
                                                              QuasiAffine::affine(2, 0)})));
  const Outcome r = run({"a3", "--phi", phi, "--psi", psi, "--constraints", "[[1],[2]]"});
  ASSERT_EQ(r.exit_code, kExitPass) << r.report.dump();
  const Json cert = r.report["value"]["certificate"];
  EXPECT_EQ(run({"verify-cert", cert.dump()}).exit_code, kExitPass);
  Json tampered = cert;
  tampered["payload"]["chain"][0]["move"][0] =
      json_io::to_json(QuasiAffine::affine(1, 1));
  const Outcome v = run({"verify-cert", tampered.dump()});
  EXPECT_EQ(v.exit_code, kExitLawFailure);
  EXPECT_EQ(v.report["counterexample"]["step"], 0);
  const Outcome bad = run({"a3", "--phi", phi, "--psi", psi, "--constraints", "[[2],[2]]"});
  EXPECT_EQ(bad.report["error"]["invariant"], "agree");
}

TEST(Commands, SelftestSingleSuite) {
  const Outcome r = run({"selftest", "--suite", "rho-iso", "--seed", "3"});
  ASSERT_EQ(r.exit_code, kExitPass) << r.report.dump();
  EXPECT_EQ(r.report["value"]["seed"], 3);
  EXPECT_EQ(r.report["value"]["suites"][0]["name"], "rho-iso");
  EXPECT_EQ(run({"selftest", "--suite", "nope"}).report["error"]["kind"], "UnknownCommand");
}

TEST(Commands, NamesAreListed) {
  const auto& names = command_names();
  EXPECT_NE(std::find(names.begin(), names.end(), "selftest"), names.end());
  EXPECT_EQ(names.size(), 20u);
}
