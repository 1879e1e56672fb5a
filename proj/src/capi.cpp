#include "tame/tame.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "tame/commands.hpp"
#include "tame/error.hpp"
#include "tame/iset.hpp"
#include "tame/json_io.hpp"
#include "tame/certificate.hpp"
#include "tame/mset.hpp"
#include "tame/opalg.hpp"

struct tame_mset {
  tame::CanonicalTameMSet value;
};
struct tame_iset {
  tame::TruncatedISet value;
};
struct tame_monoid {
  tame::CommMonoidPresentation value;
};
struct tame_certificate {
  tame::Certificate value;
};

namespace {

using tame::json_io::Json;

struct LastError {
  std::string message, invariant, location;
};
thread_local LastError last_error;

tame_status status_of(tame::ErrorKind k) {
  return static_cast<tame_status>(static_cast<int>(k) + 1);
}

struct NullArgument {
  const char* name;
};

void require(const void* p, const char* name) {
  if (!p) throw NullArgument{name};
}

// Runs body, translating exceptions into a status and the last error.
template <class F>
tame_status guard(F&& body) {
  last_error = {};
  try {
    body();
    return TAME_OK;
  } catch (const tame::Error& e) {
    last_error = {e.what(), e.invariant(), e.location()};
    return status_of(e.kind());
  } catch (const NullArgument& e) {
    last_error = {std::string(e.name) + " is NULL", "", e.name};
    return TAME_NULL_ARGUMENT;
  } catch (const std::bad_alloc&) {
    last_error.message = "out of memory";
  } catch (const std::exception& e) {
    last_error.message = e.what();
  } catch (...) {
    last_error.message = "unknown exception";
  }
  return TAME_INTERNAL_ERROR;
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

Json parse_json(const char* text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    tame::fail(tame::ErrorKind::ParseError, e.what(), "json");
  }
}

Json payload_of(const char* text, const char* kind) {
  const tame::json_io::Document d = tame::json_io::parse_document(text);
  if (d.kind != kind)
    tame::fail(tame::ErrorKind::ParseError, std::string("expected a ") + kind + " document",
               "kind", d.kind);
  return d.payload;
}

// A document of the given kind or a bare payload.
Json loose_payload(const char* text) {
  Json j = parse_json(text);
  return j.contains("payload") ? j["payload"] : j;
}

std::string document(const char* kind, Json payload) {
  return tame::json_io::serialize(tame::json_io::make_document(kind, std::move(payload)));
}

}  // namespace

#define TAME_REQUIRE(p) require(p, #p)

extern "C" {

const char* tame_version(void) { return "0.1.0"; }

const char* tame_status_name(tame_status status) {
  switch (status) {
    case TAME_OK: return "Ok";
    case TAME_NULL_ARGUMENT: return "NullArgument";
    case TAME_INTERNAL_ERROR: return "InternalError";
    default: break;
  }
  const int k = static_cast<int>(status) - 1;
  if (k < 0 || k > static_cast<int>(tame::ErrorKind::UnknownCommand)) return "Unknown";
  return tame::to_string(static_cast<tame::ErrorKind>(k));
}

const char* tame_last_error_message(void) { return last_error.message.c_str(); }
const char* tame_last_error_invariant(void) { return last_error.invariant.c_str(); }
const char* tame_last_error_location(void) { return last_error.location.c_str(); }
void tame_free_string(char* s) { std::free(s); }

// M-sets

tame_status tame_mset_from_json(const char* json, tame_mset** out) {
  return guard([&] {
    TAME_REQUIRE(json);
    TAME_REQUIRE(out);
    *out = new tame_mset{tame::json_io::mset_from(payload_of(json, "mset"))};
  });
}

tame_status tame_mset_representable(int m, tame_mset** out) {
  return guard([&] {
    TAME_REQUIRE(out);
    if (m < 0) tame::fail(tame::ErrorKind::IndexOutOfRange, "negative level", "level");
    *out = new tame_mset{tame::CanonicalTameMSet::representable(m)};
  });
}

tame_status tame_mset_to_json(const tame_mset* x, char** out) {
  return guard([&] {
    TAME_REQUIRE(x);
    TAME_REQUIRE(out);
    *out = copy_string(document("mset", tame::json_io::to_json(x->value)));
  });
}

tame_status tame_mset_level_size(const tame_mset* x, int level, size_t* out) {
  return guard([&] {
    TAME_REQUIRE(x);
    TAME_REQUIRE(out);
    const tame::SigmaSet* a = x->value.level(level);
    *out = a ? a->size() : 0;
  });
}

tame_status tame_mset_box(const tame_mset* x, const tame_mset* y, tame_mset** out) {
  return guard([&] {
    TAME_REQUIRE(x);
    TAME_REQUIRE(y);
    TAME_REQUIRE(out);
    *out = new tame_mset{tame::box_canonical(x->value, y->value)};
  });
}

tame_status tame_mset_support(const tame_mset* x, const char* element_json, char** out) {
  return guard([&] {
    TAME_REQUIRE(x);
    TAME_REQUIRE(element_json);
    TAME_REQUIRE(out);
    const tame::MElement e = tame::json_io::element_from(x->value, parse_json(element_json));
    const tame::NatSet s = tame::support_of(e);
    *out = copy_string(Json(std::vector<tame::Nat>(s.begin(), s.end())).dump());
  });
}

void tame_mset_free(tame_mset* x) { delete x; }

// I-sets

tame_status tame_iset_from_json(const char* json, tame_iset** out) {
  return guard([&] {
    TAME_REQUIRE(json);
    TAME_REQUIRE(out);
    *out = new tame_iset{tame::json_io::iset_from(payload_of(json, "iset"))};
  });
}

tame_status tame_iset_to_json(const tame_iset* x, char** out) {
  return guard([&] {
    TAME_REQUIRE(x);
    TAME_REQUIRE(out);
    *out = copy_string(document("iset", tame::json_io::to_json(x->value)));
  });
}

tame_status tame_iset_is_flat(const tame_iset* x, int mode, int* flat) {
  return guard([&] {
    TAME_REQUIRE(x);
    TAME_REQUIRE(flat);
    if (mode != 0 && mode != 1)
      tame::fail(tame::ErrorKind::IndexOutOfRange, "mode must be 0 or 1", "mode");
    const auto m = mode == 0 ? tame::FlatMode::Latching : tame::FlatMode::Direct;
    *flat = tame::is_flat(x->value, m).flat ? 1 : 0;
  });
}

tame_status tame_iset_canonicalize(const tame_iset* x, tame_mset** out) {
  return guard([&] {
    TAME_REQUIRE(x);
    TAME_REQUIRE(out);
    *out = new tame_mset{tame::canonicalize(x->value)};
  });
}

tame_status tame_iset_day(const tame_iset* x, const tame_iset* y, tame_iset** out) {
  return guard([&] {
    TAME_REQUIRE(x);
    TAME_REQUIRE(y);
    TAME_REQUIRE(out);
    *out = new tame_iset{tame::day_convolution(x->value, y->value).iset};
  });
}

void tame_iset_free(tame_iset* x) { delete x; }

// Box-monoids

tame_status tame_monoid_from_json(const char* json, tame_monoid** out) {
  return guard([&] {
    TAME_REQUIRE(json);
    TAME_REQUIRE(out);
    *out = new tame_monoid{tame::json_io::monoid_from(payload_of(json, "monoid"))};
  });
}

tame_status tame_monoid_cyclic(int k, tame_monoid** out) {
  return guard([&] {
    TAME_REQUIRE(out);
    *out = new tame_monoid{tame::cyclic_group(k)};
  });
}

tame_status tame_monoid_xinf(int points, int level_bound, tame_monoid** out) {
  return guard([&] {
    TAME_REQUIRE(out);
    if (points < 1) tame::fail(tame::ErrorKind::IndexOutOfRange, "X needs a basepoint", "points");
    std::vector<std::string> names{"*"};
    for (int i = 1; i < points; ++i) names.push_back("a" + std::to_string(i));
    *out = new tame_monoid{tame::xinf(names, 0, level_bound).presentation};
  });
}

tame_status tame_monoid_to_json(const tame_monoid* p, char** out) {
  return guard([&] {
    TAME_REQUIRE(p);
    TAME_REQUIRE(out);
    *out = copy_string(document("monoid", tame::json_io::to_json(p->value)));
  });
}

tame_status tame_monoid_sum(const tame_monoid* p, const char* x_json, const char* y_json,
                            char** out) {
  return guard([&] {
    TAME_REQUIRE(p);
    TAME_REQUIRE(x_json);
    TAME_REQUIRE(y_json);
    TAME_REQUIRE(out);
    const tame::CanonicalTameMSet& c = p->value.carrier();
    const tame::MElement r = p->value.sum(tame::json_io::element_from(c, parse_json(x_json)),
                                          tame::json_io::element_from(c, parse_json(y_json)));
    *out = copy_string(tame::json_io::element_to_json(c, r).dump());
  });
}

void tame_monoid_free(tame_monoid* p) { delete p; }

// Certificates

tame_status tame_agreeing_chain(const char* phi_json, const char* psi_json,
                          const char* constraints_json, tame_certificate** out) {
  return guard([&] {
    TAME_REQUIRE(phi_json);
    TAME_REQUIRE(psi_json);
    TAME_REQUIRE(constraints_json);
    TAME_REQUIRE(out);
    const tame::OperadElementQ phi = tame::json_io::operad_element_q_from(loose_payload(phi_json));
    const tame::OperadElementQ psi = tame::json_io::operad_element_q_from(loose_payload(psi_json));
    std::vector<tame::NatSet> a;
    try {
      for (const Json& set : parse_json(constraints_json)) {
        const auto values = set.get<std::vector<tame::Nat>>();
        a.emplace_back(values.begin(), values.end());
      }
    } catch (const Json::exception& e) {
      tame::fail(tame::ErrorKind::ParseError, e.what(), "schema", "constraints");
    }
    *out = new tame_certificate{tame::agreeing_chain(phi, psi, a)};
  });
}

tame_status tame_certificate_from_json(const char* json, tame_certificate** out) {
  return guard([&] {
    TAME_REQUIRE(json);
    TAME_REQUIRE(out);
    *out = new tame_certificate{tame::json_io::certificate_from(payload_of(json, "certificate"))};
  });
}

tame_status tame_certificate_to_json(const tame_certificate* c, char** out) {
  return guard([&] {
    TAME_REQUIRE(c);
    TAME_REQUIRE(out);
    *out = copy_string(document("certificate", tame::json_io::to_json(c->value)));
  });
}

tame_status tame_certificate_length(const tame_certificate* c, size_t* out) {
  return guard([&] {
    TAME_REQUIRE(c);
    TAME_REQUIRE(out);
    *out = c->value.chain.size();
  });
}

tame_status tame_certificate_verify(const tame_certificate* c, int* ok, int* failing_step) {
  return guard([&] {
    TAME_REQUIRE(c);
    TAME_REQUIRE(ok);
    const tame::Verification v = tame::verify_certificate(c->value);
    *ok = v.ok ? 1 : 0;
    if (failing_step) *failing_step = v.failing_step;
    if (!v.ok) last_error.message = v.reason;
  });
}

void tame_certificate_free(tame_certificate* c) { delete c; }

tame_status tame_run_command(int argc, const char* const* argv, char** report, int* exit_code) {
  return guard([&] {
    TAME_REQUIRE(report);
    TAME_REQUIRE(exit_code);
    if (argc > 0) TAME_REQUIRE(argv);
    std::vector<std::string> args;
    for (int i = 0; i < argc; ++i) {
      TAME_REQUIRE(argv[i]);
      args.emplace_back(argv[i]);
    }
    const tame::CommandOutput r = tame::run_command(args);
    *report = copy_string(r.report);
    *exit_code = r.exit_code;
  });
}

}  // extern "C"
