#include "skit/json_io.hpp"

#include <openssl/evp.h>

#include <cstdio>

#include "skit/error.hpp"

namespace skit {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw ParseError(std::string("expected an object with \"") + key + "\"");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field \"") + key + "\"");
  return *it;
}

Index index_from_json(const Json& j) {
  if (!j.is_number_integer()) throw ParseError("expected an integer, got " + j.dump());
  return j.get<Index>();
}

std::shared_ptr<const NodeModel> model_for(const Json& j) {
  const Index window = index_from_json(field(j, "window"));
  return std::make_shared<const NodeModel>(family_from_json(field(j, "fam")), window);
}

}  // namespace

Json parse_json(std::string_view text, std::string_view what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError("malformed JSON in " + std::string(what) + " at byte " + std::to_string(e.byte) +
                     ": " + e.what());
  }
}

Ordinal ordinal_from_json(const Json& j) {
  if (j.is_string()) return Ordinal::parse(j.get<std::string>());
  if (j.is_number_unsigned() || (j.is_number_integer() && j.get<std::int64_t>() >= 0)) {
    return Ordinal(j.get<std::uint64_t>());
  }
  throw ParseError("expected an ordinal string, got " + j.dump());
}

FiniteSet set_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an integer array, got " + j.dump());
  std::vector<Index> xs;
  for (const Json& x : j) xs.push_back(index_from_json(x));
  return FiniteSet(std::move(xs));
}

IntStream stream_from_json(const Json& j) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "naturals") return IntStream::naturals();
    if (s == "odds") return IntStream::odds();
    if (s == "evens") return IntStream::evens();
    if (s.rfind("tail:", 0) == 0) {
      try {
        std::size_t used = 0;
        const long long k = std::stoll(s.substr(5), &used);
        if (used == s.size() - 5) return IntStream::tail_from(k);
      } catch (const std::logic_error&) {
      }
    }
    throw ParseError("unknown stream \"" + s + "\"");
  }
  FiniteSet prefix;
  if (j.is_object() && j.contains("prefix")) prefix = set_from_json(j["prefix"]);
  return IntStream(std::move(prefix), index_from_json(field(j, "start")), index_from_json(field(j, "step")));
}

FamilySpec family_from_json(const Json& j) {
  const Json& kind = field(j, "kind");
  if (!kind.is_string()) throw ParseError("family kind must be a string");
  const std::string k = kind.get<std::string>();
  if (k == "singletons") return FamilySpec::singletons();
  if (k == "schreier") return FamilySpec::schreier(ordinal_from_json(field(j, "xi")));
  if (k == "convolution") {
    return FamilySpec::convolution(family_from_json(field(j, "outer")), family_from_json(field(j, "inner")));
  }
  if (k == "plus") return FamilySpec::plus(family_from_json(field(j, "base")));
  if (k == "restrict") {
    return FamilySpec::restrict(family_from_json(field(j, "base")), stream_from_json(field(j, "stream")));
  }
  if (k == "explicit") {
    const Json& sets = field(j, "sets");
    if (!sets.is_array()) throw ParseError("explicit family needs an array of sets");
    std::vector<FiniteSet> gens;
    for (const Json& s : sets) gens.push_back(set_from_json(s));
    return FamilySpec::explicit_family(std::move(gens));
  }
  throw ParseError("unknown family kind \"" + k + "\"");
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(std::to_string(j.get<std::int64_t>()));
  throw ParseError("expected a rational string \"p/q\", got " + j.dump());
}

Vector vector_from_json(const Json& j) {
  const Json& entries = field(j, "entries");
  if (!entries.is_object()) throw ParseError("vector entries must be an object");
  Vector v;
  for (const auto& [key, value] : entries.items()) {
    std::size_t used = 0;
    Index i = 0;
    try {
      i = std::stoll(key, &used);
    } catch (const std::logic_error&) {
      used = 0;
    }
    if (used != key.size() || i < 1) throw ParseError("vector index \"" + key + "\" is not a positive integer");
    v.add_to(i, rational_from_json(value));
  }
  return v;
}

Vector node_function_from_json(const Json& j) {
  if (j.is_object() && j.contains("enumeration")) {
    const Json& e = j["enumeration"];
    if (!e.is_string() || e.get<std::string>() != kNodeEnumeration) {
      throw UnsupportedSpec("node function enumeration " + e.dump() + " is not " +
                            std::string(kNodeEnumeration));
    }
  }
  return vector_from_json(j);
}

std::vector<Block> blocks_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array of vectors");
  std::vector<Block> out;
  for (const Json& b : j) out.push_back(node_function_from_json(b));
  return out;
}

std::vector<Rational> rationals_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array of rationals");
  std::vector<Rational> out;
  for (const Json& q : j) out.push_back(rational_from_json(q));
  return out;
}

NormOracle oracle_from_json(const Json& j) {
  const Json& kind = j.is_string() ? j : field(j, "kind");
  if (!kind.is_string()) throw ParseError("oracle kind must be a string");
  const std::string k = kind.get<std::string>();
  if (k == "sup") return NormOracle::sup();
  if (k == "ell1") return NormOracle::ell1();
  if (k == "schreier") return NormOracle::schreier(family_from_json(field(j, "fam")));
  if (k == "node_sup") return NormOracle::node_sup(model_for(j));
  throw ParseError("unknown oracle kind \"" + k + "\"");
}

Decomposition decomposition_from_json(const Json& j) {
  Decomposition d;
  d.parent = vector_from_json(field(j, "parent"));
  d.parts = blocks_from_json(field(j, "parts"));
  d.lambdas = rationals_from_json(field(j, "lambdas"));
  d.core = set_from_json(field(j, "core"));
  d.eps = rational_from_json(field(j, "eps"));
  d.alpha = ordinal_from_json(field(j, "alpha"));
  d.beta = ordinal_from_json(field(j, "beta"));
  return d;
}

Json to_json(const Ordinal& a) { return a.to_string(); }

Json to_json(const FiniteSet& s) { return Json(s.elements()); }

Json to_json(const IntStream& m) {
  return {{"prefix", to_json(m.prefix())}, {"start", m.tail_start()}, {"step", m.tail_step()}};
}

Json to_json(const FamilySpec& f) {
  return std::visit(
      [](const auto& n) -> Json {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, FamilySpec::Singletons>) {
          return {{"kind", "singletons"}};
        } else if constexpr (std::is_same_v<T, FamilySpec::Schreier>) {
          return {{"kind", "schreier"}, {"xi", to_json(n.xi)}};
        } else if constexpr (std::is_same_v<T, FamilySpec::Convolution>) {
          return {{"kind", "convolution"}, {"outer", to_json(*n.outer)}, {"inner", to_json(*n.inner)}};
        } else if constexpr (std::is_same_v<T, FamilySpec::Plus>) {
          return {{"kind", "plus"}, {"base", to_json(*n.base)}};
        } else if constexpr (std::is_same_v<T, FamilySpec::Restrict>) {
          return {{"kind", "restrict"}, {"base", to_json(*n.base)}, {"stream", to_json(n.stream)}};
        } else {
          Json sets = Json::array();
          for (const FiniteSet& g : n.generators) sets.push_back(to_json(g));
          return {{"kind", "explicit"}, {"sets", sets}};
        }
      },
      f.node());
}

Json to_json(const Rational& q) { return format_rational(q); }

Json to_json(const Vector& v) {
  Json entries = Json::object();
  for (const auto& [i, q] : v.entries()) entries[std::to_string(i)] = format_rational(q);
  return {{"entries", entries}};
}

Json node_function_to_json(const Vector& coefficients) {
  Json j = to_json(coefficients);
  j["enumeration"] = std::string(kNodeEnumeration);
  return j;
}

Json to_json(const std::vector<Block>& blocks) {
  Json out = Json::array();
  for (const Block& b : blocks) out.push_back(to_json(b));
  return out;
}

Json to_json(const std::vector<Rational>& qs) {
  Json out = Json::array();
  for (const Rational& q : qs) out.push_back(to_json(q));
  return out;
}

Json to_json(const AverageNode& node) {
  Json j = {{"ordinal", to_json(node.ordinal)},
            {"n", node.index_n},
            {"normalizer", to_json(node.normalizer)},
            {"vector", to_json(node.vector)}};
  if (node.ordinal.is_zero()) {
    j["basis_index"] = node.basis_index;
  } else {
    Json children = Json::array();
    for (const AverageNode& c : node.children) children.push_back(to_json(c));
    j["children"] = children;
    j["coefficients"] = to_json(node.coefficients);
  }
  return j;
}

Json to_json(const Decomposition& d) {
  return {{"parent", to_json(d.parent)}, {"parts", to_json(d.parts)}, {"lambdas", to_json(d.lambdas)},
          {"core", to_json(d.core)},     {"eps", to_json(d.eps)},     {"alpha", to_json(d.alpha)},
          {"beta", to_json(d.beta)}};
}

Json oracle_to_json(const NormOracle& oracle) {
  switch (oracle.kind()) {
    case NormOracle::Kind::sup:
      return {{"kind", "sup"}};
    case NormOracle::Kind::ell1:
      return {{"kind", "ell1"}};
    case NormOracle::Kind::schreier:
      return {{"kind", "schreier"}, {"fam", to_json(oracle.family())}};
    case NormOracle::Kind::node_sup:
      return {{"kind", "node_sup"}, {"fam", to_json(oracle.model().family())}, {"window", oracle.model().window()}};
    case NormOracle::Kind::custom:
      break;
  }
  throw UnsupportedSpec("custom oracle " + oracle.to_string() + " has no JSON form");
}

std::string digest(const Json& j) {
  const std::string text = j.dump();
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(text.data(), text.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    throw Error("SHA-256 failed");
  }
  std::string hex;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", md[i]);
    hex += buf;
  }
  return hex;
}

Json to_json(const Certificate& c) {
  return {{"operation", c.operation},
          {"inputs_digest", digest(c.inputs)},
          {"inputs", c.inputs},
          {"parameters", c.parameters},
          {"verdict", c.verdict ? "pass" : "fail"},
          {"result", c.result},
          {"meta",
           {{"version", std::string(kLibraryVersion)},
            {"fundamental_sequence_scheme", std::string(kFundamentalSequenceScheme)},
            {"node_enumeration", std::string(kNodeEnumeration)}}}};
}

}  // namespace skit
