#include "toricdp/toricdp.h"

#include <cstring>
#include <string>

#include "toricdp/classify.hpp"
#include "toricdp/json_io.hpp"
#include "toricdp/polytope.hpp"

struct toricdp_fan {
  toricdp::CompleteSmoothFan fan;
};

struct toricdp_polytope {
  toricdp::DivisorPolytope polytope;
};

namespace {

using namespace toricdp;

thread_local std::string last_error;

toricdp_status status_of(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Overflow: return TORICDP_ERR_OVERFLOW;
    case ErrorKind::InvalidArgument: return TORICDP_ERR_INVALID_ARGUMENT;
    case ErrorKind::NotUnimodular: return TORICDP_ERR_NOT_UNIMODULAR;
    case ErrorKind::InvalidFan: return TORICDP_ERR_INVALID_FAN;
    case ErrorKind::ClosureFailure: return TORICDP_ERR_CLOSURE;
    case ErrorKind::NotAmple: return TORICDP_ERR_NOT_AMPLE;
    case ErrorKind::TooLarge: return TORICDP_ERR_TOO_LARGE;
    case ErrorKind::Parse: return TORICDP_ERR_PARSE;
    case ErrorKind::Internal: return TORICDP_ERR_INTERNAL;
  }
  return TORICDP_ERR_INTERNAL;
}

toricdp_status fail(toricdp_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs body and converts any escaping exception into a status code.
template <typename Body>
toricdp_status guarded(Body&& body) {
  try {
    return body();
  } catch (const Error& e) {
    return fail(status_of(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(TORICDP_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(TORICDP_ERR_INTERNAL, e.what());
  }
}

toricdp_status null_argument() {
  return fail(TORICDP_ERR_INVALID_ARGUMENT, "null argument");
}

char* duplicate(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

toricdp_status copy_out(const std::vector<Integer>& values, int64_t* out,
                        std::size_t capacity) {
  if (!out) return null_argument();
  if (capacity < values.size()) {
    return fail(TORICDP_ERR_BUFFER_TOO_SMALL,
                "need room for " + std::to_string(values.size()) + " values");
  }
  std::copy(values.begin(), values.end(), out);
  return TORICDP_OK;
}

toricdp_status emit_fan(CompleteSmoothFan fan, toricdp_fan** out) {
  *out = new toricdp_fan{std::move(fan)};
  return TORICDP_OK;
}

InvariantDivisor make_divisor(const toricdp_fan* fan, const int64_t* coeffs,
                              std::size_t n) {
  return InvariantDivisor(fan->fan, std::vector<Integer>(coeffs, coeffs + n));
}

toricdp_status emit_report(const VerificationReport& report, char** out,
                           int* pass) {
  *out = duplicate(report_to_json(report));
  *pass = report.pass ? 1 : 0;
  return TORICDP_OK;
}

}  // namespace

extern "C" {

const char* toricdp_version(void) { return "1.0.0"; }

const char* toricdp_status_name(toricdp_status status) {
  switch (status) {
    case TORICDP_OK: return "ok";
    case TORICDP_ERR_INVALID_ARGUMENT: return "invalid argument";
    case TORICDP_ERR_OVERFLOW: return "overflow";
    case TORICDP_ERR_NOT_UNIMODULAR: return "not unimodular";
    case TORICDP_ERR_INVALID_FAN: return "invalid fan";
    case TORICDP_ERR_CLOSURE: return "closure failure";
    case TORICDP_ERR_NOT_AMPLE: return "not ample";
    case TORICDP_ERR_TOO_LARGE: return "too large";
    case TORICDP_ERR_PARSE: return "parse error";
    case TORICDP_ERR_BUFFER_TOO_SMALL: return "buffer too small";
    case TORICDP_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* toricdp_last_error(void) { return last_error.c_str(); }

void toricdp_string_free(char* s) { delete[] s; }

toricdp_status toricdp_fan_create(const int64_t* xy, size_t n_rays,
                                  toricdp_fan** out) {
  if (!out || (!xy && n_rays)) return null_argument();
  return guarded([&] {
    std::vector<LatticeVector> rays(n_rays);
    for (std::size_t i = 0; i < n_rays; ++i) rays[i] = {xy[2 * i], xy[2 * i + 1]};
    return emit_fan(CompleteSmoothFan::validate(std::move(rays)), out);
  });
}

toricdp_status toricdp_fan_from_json(const char* text, toricdp_fan** out) {
  if (!text || !out) return null_argument();
  return guarded([&] {
    return emit_fan(CompleteSmoothFan::validate(parse_rays_json(text)), out);
  });
}

toricdp_status toricdp_fan_from_gammas(const int64_t* gammas, size_t n,
                                       toricdp_fan** out) {
  if (!out || (!gammas && n)) return null_argument();
  return guarded([&] {
    GammaSequence g{std::vector<Integer>(gammas, gammas + n)};
    return emit_fan(from_gamma_sequence(g), out);
  });
}

toricdp_status toricdp_fan_projective_plane(toricdp_fan** out) {
  if (!out) return null_argument();
  return guarded([&] { return emit_fan(projective_plane(), out); });
}

toricdp_status toricdp_fan_hirzebruch(int64_t r, toricdp_fan** out) {
  if (!out) return null_argument();
  return guarded([&] { return emit_fan(hirzebruch(r), out); });
}

toricdp_status toricdp_fan_blowup(const toricdp_fan* fan, size_t i,
                                  toricdp_fan** out) {
  if (!fan || !out) return null_argument();
  return guarded([&] { return emit_fan(blowup(fan->fan, i), out); });
}

toricdp_status toricdp_fan_blowdown(const toricdp_fan* fan, size_t i,
                                    toricdp_fan** out) {
  if (!fan || !out) return null_argument();
  return guarded([&] { return emit_fan(blowdown(fan->fan, i), out); });
}

void toricdp_fan_free(toricdp_fan* fan) { delete fan; }

size_t toricdp_fan_size(const toricdp_fan* fan) {
  return fan ? fan->fan.size() : 0;
}

int64_t toricdp_fan_picard_rank(const toricdp_fan* fan) {
  return fan ? picard_rank(fan->fan) : -1;
}

toricdp_status toricdp_fan_ray(const toricdp_fan* fan, size_t i, int64_t* x,
                               int64_t* y) {
  if (!fan || !x || !y) return null_argument();
  if (i >= fan->fan.size()) {
    return fail(TORICDP_ERR_INVALID_ARGUMENT, "ray index out of range");
  }
  *x = fan->fan.rays()[i].x;
  *y = fan->fan.rays()[i].y;
  return TORICDP_OK;
}

toricdp_status toricdp_fan_gammas(const toricdp_fan* fan, int64_t* out,
                                  size_t capacity) {
  if (!fan) return null_argument();
  return copy_out(fan->fan.gammas().values, out, capacity);
}

toricdp_status toricdp_fan_canonical_key(const toricdp_fan* fan, int64_t* out,
                                         size_t capacity) {
  if (!fan) return null_argument();
  return copy_out(canonical_key(fan->fan).values, out, capacity);
}

toricdp_status toricdp_fan_intersection_matrix(const toricdp_fan* fan,
                                               int64_t* out, size_t capacity) {
  if (!fan) return null_argument();
  return guarded([&] {
    std::vector<Integer> flat;
    for (const auto& row : intersection_matrix(fan->fan)) {
      flat.insert(flat.end(), row.begin(), row.end());
    }
    return copy_out(flat, out, capacity);
  });
}

toricdp_status toricdp_fan_to_json(const toricdp_fan* fan, char** out) {
  if (!fan || !out) return null_argument();
  return guarded([&] {
    *out = duplicate(fan_to_json(fan->fan));
    return TORICDP_OK;
  });
}

toricdp_status toricdp_divisor_kleiman(const toricdp_fan* fan,
                                       const int64_t* coeffs, size_t n,
                                       int64_t* kleiman, int* ample,
                                       int64_t* witness) {
  if (!fan || !coeffs || !ample || !witness) return null_argument();
  return guarded([&] {
    const AmplenessVerdict v = is_ample(make_divisor(fan, coeffs, n));
    if (kleiman) {
      if (auto s = copy_out(v.kleiman, kleiman, n); s != TORICDP_OK) return s;
    }
    *ample = v.ample ? 1 : 0;
    *witness = v.witness ? static_cast<int64_t>(*v.witness) : -1;
    return TORICDP_OK;
  });
}

toricdp_status toricdp_divisor_linearly_equivalent(const toricdp_fan* fan,
                                                   const int64_t* lhs,
                                                   const int64_t* rhs,
                                                   size_t n, int* equivalent,
                                                   int64_t* mx, int64_t* my) {
  if (!fan || !lhs || !rhs || !equivalent || !mx || !my) {
    return null_argument();
  }
  return guarded([&] {
    const auto m = linearly_equivalent(make_divisor(fan, lhs, n),
                                       make_divisor(fan, rhs, n));
    *equivalent = m ? 1 : 0;
    *mx = m ? m->x : 0;
    *my = m ? m->y : 0;
    return TORICDP_OK;
  });
}

toricdp_status toricdp_polytope_create(const toricdp_fan* fan,
                                       const int64_t* coeffs, size_t n,
                                       toricdp_polytope** out) {
  if (!fan || !coeffs || !out) return null_argument();
  return guarded([&] {
    *out = new toricdp_polytope{polytope_of(make_divisor(fan, coeffs, n))};
    return TORICDP_OK;
  });
}

void toricdp_polytope_free(toricdp_polytope* polytope) { delete polytope; }

size_t toricdp_polytope_size(const toricdp_polytope* polytope) {
  return polytope ? polytope->polytope.vertices.size() : 0;
}

toricdp_status toricdp_polytope_vertex(const toricdp_polytope* polytope,
                                       size_t i, int64_t* x, int64_t* y) {
  if (!polytope || !x || !y) return null_argument();
  if (i >= polytope->polytope.vertices.size()) {
    return fail(TORICDP_ERR_INVALID_ARGUMENT, "vertex index out of range");
  }
  *x = polytope->polytope.vertices[i].x;
  *y = polytope->polytope.vertices[i].y;
  return TORICDP_OK;
}

toricdp_status toricdp_polytope_facet_volume(const toricdp_polytope* polytope,
                                             size_t i, int64_t* out) {
  if (!polytope || !out) return null_argument();
  return guarded([&] {
    *out = facet_volume(polytope->polytope, i);
    return TORICDP_OK;
  });
}

toricdp_status toricdp_polytope_lattice_point_count(
    const toricdp_polytope* polytope, size_t* out) {
  if (!polytope || !out) return null_argument();
  return guarded([&] {
    *out = lattice_points(polytope->polytope.divisor).size();
    return TORICDP_OK;
  });
}

toricdp_status toricdp_polytope_to_json(const toricdp_polytope* polytope,
                                        char** out) {
  if (!polytope || !out) return null_argument();
  return guarded([&] {
    *out = duplicate(polytope_to_json(polytope->polytope));
    return TORICDP_OK;
  });
}

toricdp_status toricdp_enumerate_json(size_t n_rays, int64_t gamma_bound,
                                      char** out) {
  if (!out) return null_argument();
  return guarded([&] {
    *out = duplicate(enumeration_to_json(n_rays, gamma_bound,
                                         enumerate_fans(n_rays, gamma_bound)));
    return TORICDP_OK;
  });
}

toricdp_status toricdp_classify_json(const toricdp_fan* fan, char** out) {
  if (!fan || !out) return null_argument();
  return guarded([&] {
    *out = duplicate(classification_to_json(fan->fan, classify_pairs(fan->fan)));
    return TORICDP_OK;
  });
}

toricdp_status toricdp_verify_t1_json(const size_t* ray_counts, size_t count,
                                      int64_t gamma_bound, char** out,
                                      int* pass) {
  if (!ray_counts || !out || !pass) return null_argument();
  return guarded([&] {
    const std::set<std::size_t> n_set(ray_counts, ray_counts + count);
    return emit_report(verify_theorem_1(n_set, gamma_bound), out, pass);
  });
}

toricdp_status toricdp_verify_t2_json(char** out, int* pass) {
  if (!out || !pass) return null_argument();
  return guarded([&] { return emit_report(verify_theorem_2(), out, pass); });
}

toricdp_status toricdp_verify_t3_json(int64_t r_max, char** out, int* pass) {
  if (!out || !pass) return null_argument();
  return guarded(
      [&] { return emit_report(verify_theorem_3(r_max), out, pass); });
}

toricdp_status toricdp_verify_volumes_json(size_t samples, uint64_t seed,
                                           char** out, int* pass) {
  if (!out || !pass) return null_argument();
  return guarded([&] {
    VolumeCheckOptions options;
    options.samples = samples;
    options.seed = seed;
    return emit_report(verify_volumes(options), out, pass);
  });
}

}  // extern "C"
