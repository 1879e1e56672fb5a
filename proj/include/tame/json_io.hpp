#pragma once

// JSON documents {"kind", "formatVersion", "payload"} for every value type.
// Payloads are validated by constructing the value; failures are tame::Error
// with the violated invariant and its location.

#include <string>
#include <string_view>

#include <json.hpp>

#include "tame/inj.hpp"
#include "tame/iset.hpp"
#include "tame/certificate.hpp"
#include "tame/mset.hpp"
#include "tame/opalg.hpp"
#include "tame/sigma.hpp"

namespace tame::json_io {

using Json = nlohmann::json;

inline constexpr int kFormatVersion = 1;

struct Document {
  std::string kind;
  int format_version = kFormatVersion;
  Json payload;
};

/// ParseError for malformed JSON or envelopes; the payload is validated
/// against its kind.
Document parse_document(std::string_view text);
std::string serialize(const Document& d);
Document make_document(std::string kind, Json payload);

Json to_json(const PartialInjection& f);
PartialInjection partial_injection_from(const Json& j);

Json to_json(const QuasiAffine& f);
QuasiAffine quasi_affine_from(const Json& j);

Json to_json(const OperadElementP& phi);
Json to_json(const OperadElementQ& phi);
OperadElementP operad_element_p_from(const Json& j);
OperadElementQ operad_element_q_from(const Json& j);

Json to_json(const SigmaSet& a);
SigmaSet sigma_set_from(const Json& j);

Json to_json(const CanonicalTameMSet& x);
CanonicalTameMSet mset_from(const Json& j);
Json element_to_json(const CanonicalTameMSet& x, const MElement& e);
/// The image may be any injective tuple; the result is canonical.
MElement element_from(const CanonicalTameMSet& x, const Json& j);

Json to_json(const TruncatedISet& x);
TruncatedISet iset_from(const Json& j);

/// {"source": iset, "target": iset, "map": [{"x": "y"}, ...]}.
Json to_json(const LevelwiseMap& f);
LevelwiseMap levelwise_map_from(const Json& j);

Json to_json(const CommMonoidPresentation& p);
CommMonoidPresentation monoid_from(const Json& j);

Json to_json(const Certificate& c);
Certificate certificate_from(const Json& j);

}  // namespace tame::json_io
