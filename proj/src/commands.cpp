#include "tame/commands.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "tame/error.hpp"
#include "tame/iset.hpp"
#include "tame/json_io.hpp"
#include "tame/certificate.hpp"
#include "tame/mset.hpp"
#include "tame/opalg.hpp"
#include "tame/selftest.hpp"

namespace tame {

namespace {

using json_io::Json;

struct Globals {
  Nat window = 8;
  int degree_bound = kDefaultDegreeBound;
  int level_bound = kDefaultLevelBound;
  bool timing = false;
};

// Inputs seen by a command, hashed into the report digest.
class Context {
 public:
  explicit Context(const std::vector<std::string>& args) {
    for (const std::string& a : args) mix(a);
  }

  std::string read(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
      fail(ErrorKind::ParseError, "cannot read \"" + path + "\"", "file", path);
    std::ostringstream os;
    os << in.rdbuf();
    mix(os.str());
    return os.str();
  }

  // A file path or inline JSON.
  Json value(const std::string& arg) {
    const std::size_t first = arg.find_first_not_of(" \t\r\n");
    const bool inline_json =
        first != std::string::npos && (arg[first] == '{' || arg[first] == '[');
    const std::string text = inline_json ? arg : read(arg);
    try {
      return Json::parse(text);
    } catch (const Json::parse_error& e) {
      fail(ErrorKind::ParseError, e.what(), "json", arg);
    }
  }

  json_io::Document document(const std::string& arg, const std::string& kind) {
    const Json j = value(arg);
    json_io::Document d = json_io::parse_document(j.dump());
    if (!kind.empty() && d.kind != kind)
      fail(ErrorKind::ParseError,
           "expected a " + kind + " document, got " + d.kind, "kind", arg);
    return d;
  }

  std::string digest() const {
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << hash_;
    return os.str();
  }

  Globals globals;
  int exit_code = kExitPass;

 private:
  void mix(const std::string& s) {
    for (unsigned char c : s) hash_ = (hash_ ^ c) * 0x100000001b3ull;
    hash_ = (hash_ ^ 0xff) * 0x100000001b3ull;  // separator
  }
  std::uint64_t hash_ = 0xcbf29ce484222325ull;
};

Json value_outcome(Json value) { return {{"outcome", "value"}, {"value", std::move(value)}}; }

Json law_outcome(Context& ctx, bool ok, Json value = nullptr,
                 Json counterexample = nullptr) {
  Json out = {{"outcome", ok ? "pass" : "fail"}};
  if (!value.is_null()) out["value"] = std::move(value);
  if (!ok) {
    ctx.exit_code = kExitLawFailure;
    if (!counterexample.is_null()) out["counterexample"] = std::move(counterexample);
  }
  return out;
}

Json mset_doc(const CanonicalTameMSet& x) {
  return {{"kind", "mset"}, {"formatVersion", json_io::kFormatVersion},
          {"payload", json_io::to_json(x)}};
}

Json doc(const std::string& kind, Json payload) {
  return {{"kind", kind}, {"formatVersion", json_io::kFormatVersion},
          {"payload", std::move(payload)}};
}

Json natset_json(const NatSet& s) { return std::vector<Nat>(s.begin(), s.end()); }

// Subcommand registry: name -> (set up options, run).
struct Command {
  std::string help;
  std::function<std::function<Json(Context&)>(CLI::App&)> setup;
};

std::map<std::string, Command>& registry();

// ---------------------------------------------------------------------------
// M-set commands

std::function<Json(Context&)> setup_support(CLI::App& app) {
  struct S { std::string input, element; int level = -1; std::string point; };
  auto s = std::make_shared<S>();
  app.add_option("input", s->input, "mset or iset document")->required();
  app.add_option("--element", s->element, "element of an mset");
  app.add_option("--level", s->level, "level of an iset element");
  app.add_option("--point", s->point, "point name of an iset element");
  return [s](Context& ctx) {
    const json_io::Document d = ctx.document(s->input, "");
    if (d.kind == "mset") {
      if (s->element.empty())
        fail(ErrorKind::ParseError, "support of an mset element needs --element", "element");
      const CanonicalTameMSet x = json_io::mset_from(d.payload);
      return value_outcome({{"support", natset_json(support_of(json_io::element_from(x, ctx.value(s->element))))}});
    }
    if (d.kind != "iset")
      fail(ErrorKind::ParseError, "expected an mset or iset document", "kind", d.kind);
    const TruncatedISet x = json_io::iset_from(d.payload);
    if (s->level < 0 || s->level > x.truncation())
      fail(ErrorKind::ParseError, "support of an iset element needs --level and --point", "level");
    const int p = x.level(s->level).index_of(s->point);
    const OmegaColimit c(x);
    return value_outcome({{"support", natset_json(colim_support(c, c.class_of(s->level, p)))}});
  };
}

std::function<Json(Context&)> setup_act(CLI::App& app) {
  struct S { std::string input, element, map; };
  auto s = std::make_shared<S>();
  app.add_option("input", s->input, "mset document")->required();
  app.add_option("--element", s->element, "element")->required();
  app.add_option("--map", s->map, "partial injection {\"map\": ...}")->required();
  return [s](Context& ctx) {
    const CanonicalTameMSet x = json_io::mset_from(ctx.document(s->input, "mset").payload);
    const MElement e = json_io::element_from(x, ctx.value(s->element));
    Json f = ctx.value(s->map);
    if (f.contains("payload")) f = f["payload"];
    const MElement r = act(x, json_io::partial_injection_from(f), e);
    return value_outcome({{"element", json_io::element_to_json(x, r)}});
  };
}

std::function<Json(Context&)> setup_box(CLI::App& app) {
  struct S { std::string x, y; };
  auto s = std::make_shared<S>();
  app.add_option("x", s->x, "mset document")->required();
  app.add_option("y", s->y, "mset document")->required();
  return [s](Context& ctx) {
    const CanonicalTameMSet x = json_io::mset_from(ctx.document(s->x, "mset").payload);
    const CanonicalTameMSet y = json_io::mset_from(ctx.document(s->y, "mset").payload);
    return value_outcome(mset_doc(box_canonical(x, y, ctx.globals.degree_bound)));
  };
}

std::function<Json(Context&)> setup_decompose(CLI::App& app) {
  struct S { std::string input; };
  auto s = std::make_shared<S>();
  app.add_option("input", s->input, "mset document")->required();
  return [s](Context& ctx) {
    const CanonicalTameMSet x = json_io::mset_from(ctx.document(s->input, "mset").payload);
    const Nat w = ctx.globals.window;
    const std::vector<MElement> elems = elements_up_to(x, w);
    const Decomposition d = decompose_table(element_table(x, elems), w);
    const bool ok = iso_type_equal(d.mset, x, ctx.globals.degree_bound);
    return law_outcome(ctx, ok, {{"mset", mset_doc(d.mset)}, {"elements", elems.size()}},
                       Json("decomposition is not isomorphic to the input"));
  };
}

std::function<Json(Context&)> setup_orbit_set(CLI::App& app) {
  struct S { std::string input; };
  auto s = std::make_shared<S>();
  app.add_option("input", s->input, "mset document")->required();
  return [s](Context& ctx) {
    const CanonicalTameMSet x = json_io::mset_from(ctx.document(s->input, "mset").payload);
    Json orbs = Json::array();
    for (auto& [m, name] : orbit_set(x)) orbs.push_back({{"level", m}, {"representative", name}});
    return value_outcome({{"orbits", orbs}, {"count", orbs.size()}});
  };
}

// ---------------------------------------------------------------------------
// I-set commands

std::function<Json(Context&)> setup_flat_check(CLI::App& app) {
  struct S { std::string input, mode = "both"; };
  auto s = std::make_shared<S>();
  app.add_option("input", s->input, "iset document")->required();
  app.add_option("--mode", s->mode, "latching, direct or both")
      ->check(CLI::IsMember({"latching", "direct", "both"}));
  return [s](Context& ctx) {
    const TruncatedISet x = json_io::iset_from(ctx.document(s->input, "iset").payload);
    Json value = Json::object();
    std::optional<bool> lat, dir;
    Json witness = nullptr;
    auto run = [&](FlatMode mode, const char* name) {
      const FlatResult r = is_flat(x, mode);
      value[name] = {{"flat", r.flat}};
      if (!r.flat) {
        value[name]["level"] = r.level;
        value[name]["witness"] = r.witness;
        if (witness.is_null()) witness = {{"mode", name}, {"level", r.level}, {"witness", r.witness}};
      }
      return r.flat;
    };
    if (s->mode != "direct") lat = run(FlatMode::Latching, "latching");
    if (s->mode != "latching") dir = run(FlatMode::Direct, "direct");
    if (lat && dir) value["agree"] = *lat == *dir;
    const bool flat = lat.value_or(true) && dir.value_or(true);
    if (lat && dir && *lat != *dir) witness = "the two criteria disagree";
    return law_outcome(ctx, flat && (!lat || !dir || *lat == *dir), value, witness);
  };
}

std::function<Json(Context&)> setup_flatten(CLI::App& app) {
  struct S { std::string input; };
  auto s = std::make_shared<S>();
  app.add_option("input", s->input, "iset document")->required();
  return [s](Context& ctx) {
    const TruncatedISet x = json_io::iset_from(ctx.document(s->input, "iset").payload);
    const FlatReplacement fr = flat_replace(x);
    return value_outcome({{"flat", doc("iset", json_io::to_json(fr.flat.iset))},
                          {"unit", doc("morphism", json_io::to_json(fr.unit))},
                          {"unitLevelwiseBijective", fr.unit.levelwise_bijective()},
                          {"unitNIso", n_iso_check(fr.unit)}});
  };
}

std::function<Json(Context&)> setup_day(CLI::App& app) {
  struct S { std::string x, y; };
  auto s = std::make_shared<S>();
  app.add_option("x", s->x, "iset document")->required();
  app.add_option("y", s->y, "iset document")->required();
  return [s](Context& ctx) {
    const TruncatedISet x = json_io::iset_from(ctx.document(s->x, "iset").payload);
    const TruncatedISet y = json_io::iset_from(ctx.document(s->y, "iset").payload);
    const DayConvolution d = day_convolution(x, y);
    return value_outcome(doc("iset", json_io::to_json(d.iset)));
  };
}

std::function<Json(Context&)> setup_canonicalize(CLI::App& app) {
  struct S { std::string input; };
  auto s = std::make_shared<S>();
  app.add_option("input", s->input, "iset document")->required();
  return [s](Context& ctx) {
    const TruncatedISet x = json_io::iset_from(ctx.document(s->input, "iset").payload);
    return value_outcome(mset_doc(canonicalize(x)));
  };
}

std::function<Json(Context&)> setup_n_iso(CLI::App& app) {
  struct S { std::string input; };
  auto s = std::make_shared<S>();
  app.add_option("input", s->input, "morphism document")->required();
  return [s](Context& ctx) {
    const LevelwiseMap f = json_io::levelwise_map_from(ctx.document(s->input, "morphism").payload);
    return law_outcome(ctx, n_iso_check(f), Json{{"levelwiseBijective", f.levelwise_bijective()}},
                       Json("the induced map of colimits is not a bijection"));
  };
}

// ---------------------------------------------------------------------------
// Operad algebra commands

Json unwrap(Json j) { return j.contains("payload") ? j["payload"] : j; }

std::vector<std::string> pointed_names(int k) {
  std::vector<std::string> names{"*"};
  for (int i = 1; i < k; ++i) names.push_back("a" + std::to_string(i));
  return names;
}

std::function<Json(Context&)> setup_sum(CLI::App& app) {
  struct S { std::string input, x, y; };
  auto s = std::make_shared<S>();
  app.add_option("input", s->input, "monoid document")->required();
  app.add_option("--x", s->x, "first summand")->required();
  app.add_option("--y", s->y, "second summand")->required();
  return [s](Context& ctx) {
    const CommMonoidPresentation p = json_io::monoid_from(ctx.document(s->input, "monoid").payload);
    const CanonicalTameMSet& c = p.carrier();
    const MElement r = p.sum(json_io::element_from(c, ctx.value(s->x)),
                             json_io::element_from(c, ctx.value(s->y)));
    return value_outcome({{"element", json_io::element_to_json(c, r)}});
  };
}

std::function<Json(Context&)> setup_operad_act(CLI::App& app) {
  struct S { std::string input, phi, elements; };
  auto s = std::make_shared<S>();
  app.add_option("input", s->input, "monoid document")->required();
  app.add_option("--phi", s->phi, "operad element with partial injection slots")->required();
  app.add_option("--elements", s->elements, "array of elements, one per slot")->required();
  return [s](Context& ctx) {
    const CommMonoidPresentation p = json_io::monoid_from(ctx.document(s->input, "monoid").payload);
    const OperadElementP phi = json_io::operad_element_p_from(unwrap(ctx.value(s->phi)));
    const Json list = ctx.value(s->elements);
    if (!list.is_array()) fail(ErrorKind::ParseError, "--elements must be an array", "schema", "elements");
    std::vector<MElement> xs;
    for (const Json& e : list) xs.push_back(json_io::element_from(p.carrier(), e));
    const MElement r = monoid_to_algebra(p).action(phi, xs);
    return value_outcome({{"element", json_io::element_to_json(p.carrier(), r)}});
  };
}

// Monoid -> algebra -> monoid reproduces the sum table.
std::function<Json(Context&)> setup_to_algebra(CLI::App& app) {
  struct S { std::string input; };
  auto s = std::make_shared<S>();
  app.add_option("input", s->input, "monoid document")->required();
  return [s](Context& ctx) {
    const CommMonoidPresentation p = json_io::monoid_from(ctx.document(s->input, "monoid").payload);
    const CommMonoidPresentation q = algebra_to_monoid(monoid_to_algebra(p), p.level_bound());
    Json diff = nullptr;
    for (const auto& [key, v] : p.sums()) {
      auto it = q.sums().find(key);
      if (it == q.sums().end() || it->second != v) {
        diff = {{"a", {key.first.first, p.carrier().level(key.first.first)->name(key.first.second)}},
                {"b", {key.second.first, p.carrier().level(key.second.first)->name(key.second.second)}}};
        break;
      }
    }
    const bool ok = diff.is_null() && q.sums().size() == p.sums().size();
    if (!ok && diff.is_null()) diff = "the round trip changed the size of the sum table";
    return law_outcome(ctx, ok, Json{{"sums", p.sums().size()}}, diff);
  };
}

// From an abelian monoid table, the trivial box-monoid and its round trip.
std::function<Json(Context&)> setup_to_monoid(CLI::App& app) {
  struct S { std::string abelian; };
  auto s = std::make_shared<S>();
  app.add_option("abelian", s->abelian, "{\"names\", \"add\", \"unit\"}")->required();
  return [s](Context& ctx) {
    const Json t = ctx.value(s->abelian);
    std::vector<std::string> names;
    std::vector<std::vector<int>> add;
    int unit = 0;
    try {
      names = t.at("names").get<std::vector<std::string>>();
      add = t.at("add").get<std::vector<std::vector<int>>>();
      unit = t.at("unit").get<int>();
    } catch (const Json::exception& e) {
      fail(ErrorKind::ParseError, e.what(), "schema", "abelian");
    }
    const CommMonoidPresentation p = trivial_from_abelian(names, add, unit);
    const CommMonoidPresentation q = algebra_to_monoid(monoid_to_algebra(p), p.level_bound());
    return law_outcome(ctx, q.sums() == p.sums(), doc("monoid", json_io::to_json(p)),
                       Json("the round trip changed the sum table"));
  };
}

std::function<Json(Context&)> setup_xinf(CLI::App& app) {
  struct S { int points = 2; int level = 4; };
  auto s = std::make_shared<S>();
  app.add_option("--points", s->points, "size of X, basepoint included")->check(CLI::Range(1, 6));
  app.add_option("--level", s->level, "level bound")->check(CLI::Range(0, 8));
  return [s](Context&) {
    const XInfinity x = xinf(pointed_names(s->points), 0, s->level);
    Json counts = Json::array();
    for (int k = 0; k <= s->level; ++k) {
      const SigmaSet* a = x.presentation.carrier().level(k);
      counts.push_back(a ? a->size() : 0);
    }
    return value_outcome({{"monoid", doc("monoid", json_io::to_json(x.presentation))},
                          {"counts", counts}});
  };
}

std::function<Json(Context&)> setup_wedge_iso(CLI::App& app) {
  struct S { int x = 2, y = 2, level = 4; };
  auto s = std::make_shared<S>();
  app.add_option("--x", s->x, "size of X, basepoint included")->check(CLI::Range(1, 5));
  app.add_option("--y", s->y, "size of Y, basepoint included")->check(CLI::Range(1, 5));
  app.add_option("--level", s->level, "level bound")->check(CLI::Range(0, 6));
  return [s](Context& ctx) {
    std::vector<std::string> ys{"*"};
    for (int i = 1; i < s->y; ++i) ys.push_back("b" + std::to_string(i));
    const WedgeWitness w = wedge_iso(pointed_names(s->x), 0, ys, 0, s->level);
    const bool ok = w.isomorphism && w.equivariant;
    return law_outcome(ctx, ok,
                       Json{{"boxCounts", w.box_counts}, {"wedgeCounts", w.wedge_counts},
                            {"equivariant", w.equivariant}},
                       Json{{"isomorphism", w.isomorphism}, {"equivariant", w.equivariant}});
  };
}

std::function<Json(Context&)> setup_chi(CLI::App& app) {
  struct S { std::string x, y, psi, a, b; };
  auto s = std::make_shared<S>();
  app.add_option("x", s->x, "mset document")->required();
  app.add_option("y", s->y, "mset document")->required();
  app.add_option("--psi", s->psi, "arity-2 operad element")->required();
  app.add_option("--x-element", s->a, "element of X")->required();
  app.add_option("--y-element", s->b, "element of Y")->required();
  return [s](Context& ctx) {
    const CanonicalTameMSet x = json_io::mset_from(ctx.document(s->x, "mset").payload);
    const CanonicalTameMSet y = json_io::mset_from(ctx.document(s->y, "mset").payload);
    const OperadElementP psi = json_io::operad_element_p_from(unwrap(ctx.value(s->psi)));
    const MElement a = json_io::element_from(x, ctx.value(s->a));
    const MElement b = json_io::element_from(y, ctx.value(s->b));
    const auto [u, v] = chi(psi, x, a, y, b);
    return value_outcome({{"x", json_io::element_to_json(x, u)},
                          {"y", json_io::element_to_json(y, v)}});
  };
}

// ---------------------------------------------------------------------------
// Certificates

std::function<Json(Context&)> setup_chain(CLI::App& app) {
  struct S { std::string phi, psi, constraints, emit; };
  auto s = std::make_shared<S>();
  app.add_option("--phi", s->phi, "source operad element")->required();
  app.add_option("--psi", s->psi, "target operad element")->required();
  app.add_option("--constraints", s->constraints, "array of the finite sets A_i")->required();
  app.add_option("--emit", s->emit, "also write the certificate document to this path");
  return [s](Context& ctx) {
    const OperadElementQ phi = json_io::operad_element_q_from(unwrap(ctx.value(s->phi)));
    const OperadElementQ psi = json_io::operad_element_q_from(unwrap(ctx.value(s->psi)));
    std::vector<NatSet> a;
    try {
      for (const Json& set : ctx.value(s->constraints)) {
        const auto values = set.get<std::vector<Nat>>();
        a.emplace_back(values.begin(), values.end());
      }
    } catch (const Json::exception& e) {
      fail(ErrorKind::ParseError, e.what(), "schema", "constraints");
    }
    const Certificate c = agreeing_chain(phi, psi, a);
    const Json d = doc("certificate", json_io::to_json(c));
    if (!s->emit.empty()) {
      std::ofstream out(s->emit, std::ios::binary);
      if (!out) fail(ErrorKind::ParseError, "cannot write \"" + s->emit + "\"", "file", s->emit);
      out << d.dump(2) << '\n';
    }
    return value_outcome({{"certificate", d}, {"chainLength", c.chain.size()}});
  };
}

std::function<Json(Context&)> setup_verify_cert(CLI::App& app) {
  struct S { std::string input; };
  auto s = std::make_shared<S>();
  app.add_option("input", s->input, "certificate document")->required();
  return [s](Context& ctx) {
    const Certificate c = json_io::certificate_from(ctx.document(s->input, "certificate").payload);
    const Verification v = verify_certificate(c);
    return law_outcome(ctx, v.ok, Json{{"chainLength", c.chain.size()}},
                       Json{{"step", v.failing_step}, {"reason", v.reason}});
  };
}

// ---------------------------------------------------------------------------
// Law suites

std::function<Json(Context&)> setup_selftest(CLI::App& app) {
  struct S { std::uint64_t seed = 42; int cases = 0; std::vector<std::string> suites; };
  auto s = std::make_shared<S>();
  app.add_option("--seed", s->seed, "random seed");
  app.add_option("--cases", s->cases, "cases per suite (0: suite defaults)")->check(CLI::NonNegativeNumber);
  app.add_option("--suite", s->suites, "run only these suites");
  return [s](Context& ctx) {
    SelftestOptions o;
    o.seed = s->seed;
    o.cases = s->cases;
    o.window = ctx.globals.window;
    std::vector<SuiteResult> results;
    if (s->suites.empty()) {
      results = run_selftest(o);
    } else {
      for (const std::string& name : s->suites) results.push_back(run_suite(name, o));
    }
    Json suites = Json::array();
    Json failing = Json::array();
    for (const SuiteResult& r : results) {
      Json j = {{"name", r.name}, {"cases", r.cases}, {"failures", r.failures},
                {"failureCount", r.failure_count}, {"passed", r.passed()}};
      if (!r.detail.empty()) j["detail"] = r.detail;
      if (ctx.globals.timing) j["elapsedMs"] = r.elapsed_ms;
      if (!r.passed()) failing.push_back(r.name);
      suites.push_back(std::move(j));
    }
    return law_outcome(ctx, failing.empty(), Json{{"seed", s->seed}, {"suites", suites}},
                       Json{{"failingSuites", failing}});
  };
}

std::map<std::string, Command>& registry() {
  static std::map<std::string, Command> r = {
      {"support", {"support of an element", setup_support}},
      {"act", {"act on an element by a partial injection", setup_act}},
      {"box", {"box product of two M-sets", setup_box}},
      {"decompose", {"decompose an element table and compare with the input", setup_decompose}},
      {"orbit-set", {"orbit representatives by level", setup_orbit_set}},
      {"flat-check", {"latching and direct flatness criteria", setup_flat_check}},
      {"flatten", {"flat replacement and its unit", setup_flatten}},
      {"day", {"Day convolution of two I-sets", setup_day}},
      {"canonicalize", {"canonical form of the omega-colimit", setup_canonicalize}},
      {"n-iso", {"whether a map of I-sets is an N-isomorphism", setup_n_iso}},
      {"sum", {"sum of two disjointly supported elements", setup_sum}},
      {"operad-act", {"operad action on a box-monoid", setup_operad_act}},
      {"to-algebra", {"monoid to algebra round trip", setup_to_algebra}},
      {"to-monoid", {"trivial box-monoid of an abelian monoid", setup_to_monoid}},
      {"xinf", {"the box-monoid X^infinity", setup_xinf}},
      {"wedge-iso", {"xinf(X) box xinf(Y) against xinf(X v Y)", setup_wedge_iso}},
      {"chi", {"the map chi on a disjointly supported pair", setup_chi}},
      {"a3", {"certificate chain between agreeing operad elements", setup_chain}},
      {"verify-cert", {"check a certificate chain", setup_verify_cert}},
      {"selftest", {"run the law suites", setup_selftest}},
  };
  return r;
}

Json error_json(const Error& e) {
  Json j = {{"kind", to_string(e.kind())}, {"message", e.what()}};
  if (!e.invariant().empty()) j["invariant"] = e.invariant();
  if (!e.location().empty()) j["location"] = e.location();
  return j;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, c] : registry()) v.push_back(name);
    return v;
  }();
  return names;
}

CommandOutput run_command(const std::vector<std::string>& args) {
  const auto start = std::chrono::steady_clock::now();
  Context ctx(args);
  const std::string name = args.empty() ? std::string() : args.front();
  if (name == "help" || name == "--help" || name == "-h") {
    std::ostringstream os;
    os << "usage: tame-cli <command> [options]\n\ncommands:\n";
    for (const auto& [n, c] : registry()) os << "  " << std::left << std::setw(14) << n << c.help << '\n';
    os << "\n<command> --help lists the options of a command.\n";
    return {kExitPass, os.str()};
  }
  Json report = {{"command", name}};
  try {
    auto it = registry().find(name);
    if (it == registry().end())
      fail(ErrorKind::UnknownCommand,
           name.empty() ? "no command given" : "unknown command \"" + name + "\"", "", name);

    CLI::App app(it->second.help, name);
    app.add_option("--window", ctx.globals.window, "support window for enumerations")
        ->check(CLI::Range(1, 12));
    app.add_option("--degree-bound", ctx.globals.degree_bound, "largest level for Sigma_m iso types")
        ->check(CLI::Range(0, 9));
    app.add_option("--level-bound", ctx.globals.level_bound, "level bound of box-monoids")
        ->check(CLI::Range(0, 9));
    app.add_flag("--timing", ctx.globals.timing, "report elapsed time");
    const std::function<Json(Context&)> body = it->second.setup(app);

    std::vector<std::string> rest(args.rbegin(), args.rend() - 1);
    try {
      app.parse(rest);
    } catch (const CLI::CallForHelp&) {
      return {kExitPass, app.help() };
    } catch (const CLI::ParseError& e) {
      fail(ErrorKind::ParseError, e.what(), "arguments", name);
    }

    Json out = body(ctx);
    report.update(out);
  } catch (const Error& e) {
    report["outcome"] = "error";
    report["error"] = error_json(e);
    ctx.exit_code = kExitInputError;
  } catch (const std::exception& e) {
    report["outcome"] = "error";
    report["error"] = {{"kind", "InternalError"}, {"message", e.what()}};
    ctx.exit_code = kExitInputError;
  }
  report["inputsDigest"] = ctx.digest();
  if (ctx.globals.timing) {
    const std::chrono::duration<double, std::milli> ms = std::chrono::steady_clock::now() - start;
    report["elapsedMs"] = ms.count();
  }
  return {ctx.exit_code, report.dump(2) + "\n"};
}

}  // namespace tame
