#pragma once

// JSON encodings. Rationals travel as "p/q" strings, ordinals in their ASCII
// syntax, finite sets as sorted integer arrays.
//
//   IntStream   {"prefix":[...],"start":k,"step":s}  (or "naturals", "odds",
//               "evens", "tail:k")
//   FamilySpec  {"kind":"schreier","xi":"w^2"}, {"kind":"singletons"},
//               {"kind":"convolution","outer":F2,"inner":F1},
//               {"kind":"plus","base":F}, {"kind":"restrict","base":F,"stream":M},
//               {"kind":"explicit","sets":[[...],...]}
//   Vector      {"entries":{"3":"1/2",...}}; a node function adds
//               "enumeration":"antilex-v1"
//   NormOracle  {"kind":"sup"|"ell1"}, {"kind":"schreier","fam":F},
//               {"kind":"node_sup","fam":F,"window":W}

#include <json.hpp>

#include <string>
#include <string_view>

#include "skit/averages.hpp"
#include "skit/largeness.hpp"
#include "skit/seqspace.hpp"

namespace skit {

using Json = nlohmann::json;

inline constexpr std::string_view kLibraryVersion = "skit 1.0.0";

// ParseError carrying the byte position for malformed text; `what` names the
// argument in messages.
Json parse_json(std::string_view text, std::string_view what);

Ordinal ordinal_from_json(const Json& j);
FiniteSet set_from_json(const Json& j);
IntStream stream_from_json(const Json& j);
FamilySpec family_from_json(const Json& j);
Rational rational_from_json(const Json& j);
Vector vector_from_json(const Json& j);
// Vector JSON whose "enumeration" field, when present, must match.
Vector node_function_from_json(const Json& j);
std::vector<Block> blocks_from_json(const Json& j);
std::vector<Rational> rationals_from_json(const Json& j);
NormOracle oracle_from_json(const Json& j);
Decomposition decomposition_from_json(const Json& j);

Json to_json(const Ordinal& a);
Json to_json(const FiniteSet& s);
Json to_json(const IntStream& m);
Json to_json(const FamilySpec& f);
Json to_json(const Rational& q);
Json to_json(const Vector& v);
Json node_function_to_json(const Vector& coefficients);
Json to_json(const std::vector<Block>& blocks);
Json to_json(const std::vector<Rational>& qs);
Json to_json(const AverageNode& node);
Json to_json(const Decomposition& d);
// NormOracle; UnsupportedSpec for custom oracles.
Json oracle_to_json(const NormOracle& oracle);

// Lowercase hex SHA-256 of the compact serialization.
std::string digest(const Json& j);

struct Certificate {
  std::string operation;
  Json inputs = Json::object();
  Json parameters = Json::object();
  bool verdict = true;
  Json result = Json::object();
};

// Adds the inputs digest, library version and enumeration fingerprints.
Json to_json(const Certificate& c);

}  // namespace skit
