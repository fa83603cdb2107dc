#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "toricdp/classify.hpp"
#include "toricdp/polytope.hpp"

namespace toricdp {

// Interchange documents:
//   fan      {"rays": [[x0,y0], [x1,y1], ...]}
//   divisor  {"coeffs": [a0, ..., a_{n-1}]}
//   support  {"delta": [i, ...]}
//   polytope {"vertices": [[x,y],...], "facet_volumes": [...]}
// Malformed documents raise Error(Parse). Serialization is deterministic.

std::vector<LatticeVector> parse_rays_json(std::string_view text);
std::vector<Integer> parse_coeffs_json(std::string_view text);
SupportSet parse_delta_json(std::string_view text, std::size_t n);

std::string fan_to_json(const CompleteSmoothFan& fan);
std::string divisor_to_json(const InvariantDivisor& divisor);
std::string delta_to_json(const SupportSet& delta);
std::string polytope_to_json(const DivisorPolytope& polytope);

/// {"fan": key, "bound": g, "rays": [...], "records": [...]}
std::string classification_to_json(
    const CompleteSmoothFan& fan,
    const std::vector<ClassificationRecord>& records);

/// {"rays": n, "gamma_bound": g, "count": k, "keys": [[...], ...]}
std::string enumeration_to_json(std::size_t n, Integer gamma_bound,
                                const std::vector<GammaSequence>& keys);

std::string report_to_json(const VerificationReport& report);

}  // namespace toricdp
