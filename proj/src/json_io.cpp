#include "toricdp/json_io.hpp"

#include <limits>

#include <json.hpp>

namespace toricdp {

using Json = nlohmann::ordered_json;

namespace {

Json parse_document(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::Parse, std::string("malformed JSON: ") + e.what());
  }
}

const Json& require_array(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key) || !doc.at(key).is_array()) {
    throw Error(ErrorKind::Parse,
                std::string("expected an object with array \"") + key + "\"");
  }
  return doc.at(key);
}

Integer require_integer(const Json& v) {
  if (!v.is_number_integer()) {
    throw Error(ErrorKind::Parse, "expected an integer, got " + v.dump());
  }
  if (v.is_number_unsigned() &&
      v.get<std::uint64_t>() >
          static_cast<std::uint64_t>(std::numeric_limits<Integer>::max())) {
    throw Error(ErrorKind::Parse, "integer out of range: " + v.dump());
  }
  return v.get<Integer>();
}

Json vector_json(const LatticeVector& u) { return Json::array({u.x, u.y}); }

Json vectors_json(const std::vector<LatticeVector>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(vector_json(v));
  return out;
}

Json optional_index(const std::optional<std::size_t>& i) {
  return i ? Json(*i) : Json(nullptr);
}

Json counterexample_json(const Counterexample& c) {
  return Json{{"fan", c.fan_key.values},
              {"rays", vectors_json(c.rays)},
              {"delta", c.delta.indices()},
              {"expected_ample", c.expected_ample},
              {"observed_ample", c.observed_ample},
              {"kleiman", c.kleiman},
              {"witness", optional_index(c.witness)},
              {"note", c.note}};
}

}  // namespace

std::vector<LatticeVector> parse_rays_json(std::string_view text) {
  const Json doc = parse_document(text);
  std::vector<LatticeVector> rays;
  for (const Json& r : require_array(doc, "rays")) {
    if (!r.is_array() || r.size() != 2) {
      throw Error(ErrorKind::Parse, "ray must be a pair [x, y], got " + r.dump());
    }
    rays.push_back({require_integer(r[0]), require_integer(r[1])});
  }
  return rays;
}

std::vector<Integer> parse_coeffs_json(std::string_view text) {
  const Json doc = parse_document(text);
  std::vector<Integer> coeffs;
  for (const Json& a : require_array(doc, "coeffs")) {
    coeffs.push_back(require_integer(a));
  }
  return coeffs;
}

SupportSet parse_delta_json(std::string_view text, std::size_t n) {
  const Json doc = parse_document(text);
  std::vector<std::size_t> indices;
  for (const Json& i : require_array(doc, "delta")) {
    const Integer v = require_integer(i);
    if (v < 0) throw Error(ErrorKind::Parse, "negative support index");
    indices.push_back(static_cast<std::size_t>(v));
  }
  return SupportSet::from_indices(n, indices);
}

std::string fan_to_json(const CompleteSmoothFan& fan) {
  return Json{{"rays", vectors_json(fan.rays())}}.dump();
}

std::string divisor_to_json(const InvariantDivisor& divisor) {
  return Json{{"coeffs", divisor.coeffs()}}.dump();
}

std::string delta_to_json(const SupportSet& delta) {
  return Json{{"delta", delta.indices()}}.dump();
}

std::string polytope_to_json(const DivisorPolytope& polytope) {
  return Json{{"vertices", vectors_json(polytope.vertices)},
              {"facet_volumes", polytope.facet_volumes}}
      .dump();
}

std::string classification_to_json(
    const CompleteSmoothFan& fan,
    const std::vector<ClassificationRecord>& records) {
  Json rows = Json::array();
  for (const ClassificationRecord& rec : records) {
    rows.push_back(Json{{"delta", rec.delta.indices()},
                        {"ample", rec.ample},
                        {"kleiman", rec.kleiman},
                        {"witness", optional_index(rec.witness)}});
  }
  return Json{{"fan", canonical_key(fan).values},
              {"bound", fan.gammas().max_abs()},
              {"rays", vectors_json(fan.rays())},
              {"records", std::move(rows)}}
      .dump();
}

std::string enumeration_to_json(std::size_t n, Integer gamma_bound,
                                const std::vector<GammaSequence>& keys) {
  Json list = Json::array();
  for (const GammaSequence& k : keys) list.push_back(k.values);
  return Json{{"rays", n},
              {"gamma_bound", gamma_bound},
              {"count", keys.size()},
              {"keys", std::move(list)}}
      .dump();
}

std::string report_to_json(const VerificationReport& report) {
  return Json{{"suite", report.suite},
              {"pass", report.pass},
              {"verdicts_checked", report.verdicts_checked},
              {"fans_examined", report.fans_examined},
              {"scope", report.scope},
              {"counterexample", report.counterexample
                                     ? counterexample_json(*report.counterexample)
                                     : Json(nullptr)}}
      .dump();
}

}  // namespace toricdp
