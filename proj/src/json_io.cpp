#include "tame/json_io.hpp"

#include <algorithm>

#include "tame/error.hpp"

namespace tame::json_io {

namespace {

[[noreturn]] void parse_fail(const std::string& msg, const std::string& where) {
  fail(ErrorKind::ParseError, msg, "schema", where);
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) parse_fail("expected an object", key);
  auto it = j.find(key);
  if (it == j.end()) parse_fail(std::string("missing field \"") + key + "\"", key);
  return *it;
}

Nat nat_of(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) parse_fail("expected an integer", where);
  return j.get<Nat>();
}

int int_of(const Json& j, const std::string& where) {
  return static_cast<int>(nat_of(j, where));
}

const std::string& string_of(const Json& j, const std::string& where) {
  if (!j.is_string()) parse_fail("expected a string", where);
  return j.get_ref<const std::string&>();
}

const Json& array_of(const Json& j, const std::string& where) {
  if (!j.is_array()) parse_fail("expected an array", where);
  return j;
}

Nat key_nat(const std::string& k) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(k, &used);
    if (used != k.size()) parse_fail("expected a numeric key", k);
    return v;
  } catch (const std::logic_error&) {
    parse_fail("expected a numeric key", k);
  }
}

NatSet natset_of(const Json& j, const std::string& where) {
  NatSet s;
  for (const Json& v : array_of(j, where)) s.insert(nat_of(v, where));
  return s;
}

int point_index(const SigmaSet& a, const Json& name, const std::string& where) {
  const std::string& n = string_of(name, where);
  const auto& pts = a.points();
  auto it = std::find(pts.begin(), pts.end(), n);
  if (it == pts.end())
    fail(ErrorKind::ValidationFailed, "unknown point \"" + n + "\"", "point", where);
  return static_cast<int>(it - pts.begin());
}

int name_index(const std::vector<std::string>& names, const Json& name,
               const std::string& where) {
  const std::string& n = string_of(name, where);
  auto it = std::find(names.begin(), names.end(), n);
  if (it == names.end())
    fail(ErrorKind::ValidationFailed, "unknown point \"" + n + "\"", "point", where);
  return static_cast<int>(it - names.begin());
}

// {"x": "y", ...} over a list of names, as an index table.
std::vector<int> name_map(const Json& j, const std::vector<std::string>& from,
                          const std::vector<std::string>& to,
                          const std::string& where) {
  if (!j.is_object()) parse_fail("expected a map of point names", where);
  std::vector<int> out(from.size(), -1);
  for (auto& [k, v] : j.items()) {
    const int x = name_index(from, Json(k), where);
    out[static_cast<std::size_t>(x)] = name_index(to, v, where);
  }
  for (std::size_t x = 0; x < out.size(); ++x)
    if (out[x] < 0)
      fail(ErrorKind::ValidationFailed, "map misses point \"" + from[x] + "\"",
           "total", where);
  return out;
}

Json name_map_json(const std::vector<int>& map, const std::vector<std::string>& from,
                   const std::vector<std::string>& to) {
  Json j = Json::object();
  for (std::size_t x = 0; x < map.size(); ++x)
    j[from[x]] = to[static_cast<std::size_t>(map[x])];
  return j;
}

}  // namespace

// ---------------------------------------------------------------------------
// Envelope

Document make_document(std::string kind, Json payload) {
  return Document{std::move(kind), kFormatVersion, std::move(payload)};
}

Document parse_document(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    fail(ErrorKind::ParseError, e.what(), "json", std::to_string(e.byte));
  }
  Document d;
  d.kind = string_of(field(j, "kind"), "kind");
  d.format_version = int_of(field(j, "formatVersion"), "formatVersion");
  if (d.format_version != kFormatVersion)
    fail(ErrorKind::ParseError,
         "unsupported format version " + std::to_string(d.format_version),
         "formatVersion", std::to_string(d.format_version));
  d.payload = field(j, "payload");
  const Json& p = d.payload;
  if (d.kind == "partial-injection") partial_injection_from(p);
  else if (d.kind == "qa-injection") quasi_affine_from(p);
  else if (d.kind == "operad-element") {
    const Json& slots = array_of(field(p, "slots"), "slots");
    if (!slots.empty() && slots.front().contains("pieces"))
      operad_element_q_from(p);
    else
      operad_element_p_from(p);
  } else if (d.kind == "sigma-set") sigma_set_from(p);
  else if (d.kind == "mset") mset_from(p);
  else if (d.kind == "iset") iset_from(p);
  else if (d.kind == "morphism") levelwise_map_from(p);
  else if (d.kind == "monoid") monoid_from(p);
  else if (d.kind == "certificate") certificate_from(p);
  else
    fail(ErrorKind::ParseError, "unknown document kind \"" + d.kind + "\"",
         "kind", d.kind);
  return d;
}

std::string serialize(const Document& d) {
  Json j = {{"kind", d.kind}, {"formatVersion", d.format_version},
            {"payload", d.payload}};
  return j.dump(2);
}

// ---------------------------------------------------------------------------
// Injections and operad elements

Json to_json(const PartialInjection& f) {
  Json m = Json::object();
  for (auto& [k, v] : f.mapping()) m[std::to_string(k)] = v;
  return {{"map", m}};
}

PartialInjection partial_injection_from(const Json& j) {
  const Json& m = field(j, "map");
  if (!m.is_object()) parse_fail("expected an object", "map");
  std::map<Nat, Nat> out;
  for (auto& [k, v] : m.items()) out[key_nat(k)] = nat_of(v, k);
  return PartialInjection(std::move(out));
}

Json to_json(const QuasiAffine& f) {
  Json pieces = Json::array();
  for (const QaPiece& p : f.pieces()) {
    Json q = {{"lo", p.lo}, {"mod", p.mod}, {"res", p.res}, {"a", p.a}, {"b", p.b}};
    q["hi"] = p.hi ? Json(*p.hi) : Json(nullptr);
    if (p.div != 1) q["div"] = p.div;
    pieces.push_back(std::move(q));
  }
  return {{"pieces", pieces}};
}

QuasiAffine quasi_affine_from(const Json& j) {
  std::vector<QaPiece> pieces;
  std::size_t idx = 0;
  for (const Json& q : array_of(field(j, "pieces"), "pieces")) {
    const std::string where = "pieces[" + std::to_string(idx++) + "]";
    QaPiece p;
    p.lo = nat_of(field(q, "lo"), where);
    if (q.contains("hi") && !q["hi"].is_null()) p.hi = nat_of(q["hi"], where);
    p.mod = nat_of(field(q, "mod"), where);
    p.res = nat_of(field(q, "res"), where);
    p.a = nat_of(field(q, "a"), where);
    p.b = nat_of(field(q, "b"), where);
    if (q.contains("div")) p.div = nat_of(q["div"], where);
    pieces.push_back(p);
  }
  return QuasiAffine::from_pieces(pieces);
}

namespace {
template <class Slot>
Json operad_json(const OperadElement<Slot>& phi) {
  Json slots = Json::array();
  for (const Slot& s : phi.slots()) slots.push_back(to_json(s));
  return {{"arity", phi.arity()}, {"slots", slots}};
}

template <class Slot, class Parse>
OperadElement<Slot> operad_from(const Json& j, Parse parse) {
  const Nat arity = nat_of(field(j, "arity"), "arity");
  std::vector<Slot> slots;
  for (const Json& s : array_of(field(j, "slots"), "slots")) slots.push_back(parse(s));
  if (static_cast<Nat>(slots.size()) != arity)
    fail(ErrorKind::ArityMismatch,
         "arity " + std::to_string(arity) + " with " +
             std::to_string(slots.size()) + " slots",
         "arity", "slots");
  return OperadElement<Slot>(std::move(slots));
}
}  // namespace

Json to_json(const OperadElementP& phi) { return operad_json(phi); }
Json to_json(const OperadElementQ& phi) { return operad_json(phi); }
OperadElementP operad_element_p_from(const Json& j) {
  return operad_from<PartialInjection>(j, partial_injection_from);
}
OperadElementQ operad_element_q_from(const Json& j) {
  return operad_from<QuasiAffine>(j, quasi_affine_from);
}

// ---------------------------------------------------------------------------
// Sigma-sets and M-sets

Json to_json(const SigmaSet& a) {
  Json s = Json::array();
  for (const auto& g : a.generators()) s.push_back(name_map_json(g, a.points(), a.points()));
  return {{"m", a.degree()}, {"points", a.points()}, {"s", s}};
}

SigmaSet sigma_set_from(const Json& j) {
  const int m = int_of(field(j, "m"), "m");
  std::vector<std::string> points;
  for (const Json& p : array_of(field(j, "points"), "points"))
    points.push_back(string_of(p, "points"));
  std::vector<std::vector<int>> gens;
  std::size_t i = 0;
  for (const Json& g : array_of(field(j, "s"), "s")) {
    ++i;
    gens.push_back(name_map(g, points, points, "s" + std::to_string(i)));
  }
  return SigmaSet(m, std::move(points), std::move(gens));
}

Json to_json(const CanonicalTameMSet& x) {
  Json levels = Json::object();
  for (auto& [m, a] : x.levels()) levels[std::to_string(m)] = to_json(a);
  return {{"levels", levels}, {"maxLevel", x.max_level()}};
}

CanonicalTameMSet mset_from(const Json& j) {
  const Json& levels = field(j, "levels");
  if (!levels.is_object()) parse_fail("expected an object", "levels");
  std::map<int, SigmaSet> out;
  for (auto& [k, v] : levels.items()) {
    const int m = static_cast<int>(key_nat(k));
    SigmaSet a = sigma_set_from(v);
    if (a.degree() != m)
      fail(ErrorKind::ValidationFailed,
           "level " + k + " holds a set of degree " + std::to_string(a.degree()),
           "degree", k);
    out.emplace(m, std::move(a));
  }
  return CanonicalTameMSet(std::move(out));
}

Json element_to_json(const CanonicalTameMSet& x, const MElement& e) {
  const SigmaSet* a = x.level(e.level);
  return {{"level", e.level}, {"image", e.image},
          {"point", a ? Json(a->name(e.point)) : Json(e.point)}};
}

MElement element_from(const CanonicalTameMSet& x, const Json& j) {
  const int level = int_of(field(j, "level"), "level");
  std::vector<Nat> image;
  for (const Json& v : array_of(field(j, "image"), "image")) image.push_back(nat_of(v, "image"));
  if (static_cast<int>(image.size()) != level)
    fail(ErrorKind::ValidationFailed, "image length differs from the level",
         "level", std::to_string(level));
  const SigmaSet* a = x.level(level);
  if (!a)
    fail(ErrorKind::ValidationFailed, "no points at level " + std::to_string(level),
         "point", std::to_string(level));
  return make_element(x, std::move(image), point_index(*a, field(j, "point"), "point"));
}

// ---------------------------------------------------------------------------
// I-sets

Json to_json(const TruncatedISet& x) {
  Json levels = Json::array(), incl = Json::array(), s = Json::array();
  for (int m = 0; m <= x.truncation(); ++m) {
    const auto& names = x.level(m).points();
    levels.push_back(names);
    if (m < x.truncation())
      incl.push_back(name_map_json(x.inclusions()[static_cast<std::size_t>(m)], names,
                                   x.level(m + 1).points()));
    Json gens = Json::array();
    for (const auto& g : x.level(m).generators()) gens.push_back(name_map_json(g, names, names));
    s.push_back(std::move(gens));
  }
  return {{"N", x.truncation()}, {"stableFrom", x.stable_from()},
          {"levels", levels}, {"incl", incl}, {"s", s}};
}

TruncatedISet iset_from(const Json& j) {
  const int n = int_of(field(j, "N"), "N");
  const int stable = int_of(field(j, "stableFrom"), "stableFrom");
  std::vector<std::vector<std::string>> names;
  for (const Json& lvl : array_of(field(j, "levels"), "levels")) {
    names.emplace_back();
    for (const Json& p : array_of(lvl, "levels")) names.back().push_back(string_of(p, "levels"));
  }
  if (static_cast<int>(names.size()) != n + 1)
    fail(ErrorKind::ValidationFailed, "expected N + 1 levels", "levels",
         std::to_string(names.size()));
  const Json& incl_j = array_of(field(j, "incl"), "incl");
  const Json& s_j = array_of(field(j, "s"), "s");
  if (static_cast<int>(incl_j.size()) != n || static_cast<int>(s_j.size()) != n + 1)
    fail(ErrorKind::ValidationFailed, "expected N inclusions and N + 1 generator lists",
         "levels");
  std::vector<std::vector<int>> incl;
  std::vector<std::vector<std::vector<int>>> trans;
  for (int m = 0; m <= n; ++m) {
    const auto um = static_cast<std::size_t>(m);
    if (m < n)
      incl.push_back(name_map(incl_j[um], names[um], names[um + 1],
                              "incl" + std::to_string(m)));
    trans.emplace_back();
    int i = 0;
    for (const Json& g : array_of(s_j[um], "s")) {
      ++i;
      trans.back().push_back(name_map(g, names[um], names[um],
                                      "level " + std::to_string(m) + " s" + std::to_string(i)));
    }
  }
  return TruncatedISet(n, stable, std::move(names), std::move(incl), std::move(trans));
}

Json to_json(const LevelwiseMap& f) {
  Json map = Json::array();
  for (int m = 0; m <= f.source().truncation(); ++m) {
    std::vector<int> row;
    for (int x = 0; x < f.source().size(m); ++x) row.push_back(f(m, x));
    map.push_back(name_map_json(row, f.source().level(m).points(), f.target().level(m).points()));
  }
  return {{"source", to_json(f.source())}, {"target", to_json(f.target())}, {"map", map}};
}

LevelwiseMap levelwise_map_from(const Json& j) {
  TruncatedISet src = iset_from(field(j, "source"));
  TruncatedISet tgt = iset_from(field(j, "target"));
  const Json& map_j = array_of(field(j, "map"), "map");
  if (static_cast<int>(map_j.size()) != src.truncation() + 1)
    fail(ErrorKind::ValidationFailed, "expected one map per level", "map");
  std::vector<std::vector<int>> map;
  for (int m = 0; m <= src.truncation(); ++m)
    map.push_back(name_map(map_j[static_cast<std::size_t>(m)], src.level(m).points(),
                           tgt.level(m).points(), "map" + std::to_string(m)));
  return LevelwiseMap(std::move(src), std::move(tgt), std::move(map));
}

// ---------------------------------------------------------------------------
// Monoids and certificates

Json to_json(const CommMonoidPresentation& p) {
  const CanonicalTameMSet& x = p.carrier();
  Json sums = Json::array();
  for (auto& [key, s] : p.sums()) {
    auto rep = [&](const CommMonoidPresentation::Rep& r) {
      return Json::array({r.first, x.level(r.first)->name(r.second)});
    };
    sums.push_back({{"a", rep(key.first)}, {"b", rep(key.second)},
                    {"result", element_to_json(x, s)}});
  }
  return {{"carrier", to_json(x)},
          {"unit", x.level(0)->name(p.unit_point())},
          {"levelBound", p.level_bound()},
          {"sums", sums}};
}

CommMonoidPresentation monoid_from(const Json& j) {
  CanonicalTameMSet x = mset_from(field(j, "carrier"));
  const SigmaSet* a0 = x.level(0);
  if (!a0) fail(ErrorKind::ValidationFailed, "carrier has no level 0", "unit", "0");
  const int unit = point_index(*a0, field(j, "unit"), "unit");
  const int bound = j.contains("levelBound") ? int_of(j["levelBound"], "levelBound")
                                             : kDefaultLevelBound;
  std::map<CommMonoidPresentation::Key, MElement> sums;
  std::size_t idx = 0;
  for (const Json& e : array_of(field(j, "sums"), "sums")) {
    const std::string where = "sums[" + std::to_string(idx++) + "]";
    auto rep = [&](const Json& r) -> CommMonoidPresentation::Rep {
      if (!r.is_array() || r.size() != 2) parse_fail("expected [level, point]", where);
      const int m = int_of(r[0], where);
      const SigmaSet* a = x.level(m);
      if (!a)
        fail(ErrorKind::ValidationFailed, "no points at level " + std::to_string(m),
             "point", where);
      return {m, point_index(*a, r[1], where)};
    };
    sums[{rep(field(e, "a")), rep(field(e, "b"))}] = element_from(x, field(e, "result"));
  }
  return CommMonoidPresentation(std::move(x), unit, std::move(sums), bound);
}

Json to_json(const Certificate& c) {
  Json a = Json::array(), chain = Json::array();
  for (const NatSet& s : c.constraints) a.push_back(std::vector<Nat>(s.begin(), s.end()));
  for (const CertStep& st : c.chain) {
    Json move = Json::array();
    for (const QuasiAffine& f : st.move) move.push_back(to_json(f));
    chain.push_back({{"elem", to_json(st.current)}, {"move", move},
                     {"dir", st.direction == StepDirection::Forward ? "fwd" : "bwd"}});
  }
  return {{"n", c.n}, {"A", a}, {"source", to_json(c.source)},
          {"target", to_json(c.target)}, {"chain", chain}};
}

Certificate certificate_from(const Json& j) {
  Certificate c;
  c.n = static_cast<std::size_t>(nat_of(field(j, "n"), "n"));
  for (const Json& s : array_of(field(j, "A"), "A")) c.constraints.push_back(natset_of(s, "A"));
  c.source = operad_element_q_from(field(j, "source"));
  c.target = operad_element_q_from(field(j, "target"));
  std::size_t idx = 0;
  for (const Json& st : array_of(field(j, "chain"), "chain")) {
    const std::string where = "chain[" + std::to_string(idx++) + "]";
    CertStep step;
    step.current = operad_element_q_from(field(st, "elem"));
    for (const Json& f : array_of(field(st, "move"), where))
      step.move.push_back(quasi_affine_from(f));
    const std::string& dir = string_of(field(st, "dir"), where);
    if (dir == "fwd") step.direction = StepDirection::Forward;
    else if (dir == "bwd") step.direction = StepDirection::Backward;
    else parse_fail("direction must be \"fwd\" or \"bwd\"", where);
    c.chain.push_back(std::move(step));
  }
  return c;
}

}  // namespace tame::json_io
