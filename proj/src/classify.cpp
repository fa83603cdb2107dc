#include "toricdp/classify.hpp"

#include <random>
#include <sstream>

#include "toricdp/polytope.hpp"

namespace toricdp {

namespace {

std::string mask_string(const SupportSet& delta) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (std::size_t i : delta.indices()) {
    if (!first) os << ',';
    os << i;
    first = false;
  }
  os << '}';
  return os.str();
}

Counterexample make_counterexample(const CompleteSmoothFan& fan,
                                   const ClassificationRecord& record,
                                   bool expected, std::string note) {
  return Counterexample{canonical_key(fan), fan.rays(),    record.delta,
                        expected,           record.ample, record.kleiman,
                        record.witness,     std::move(note)};
}

}  // namespace

std::vector<ClassificationRecord> classify_pairs(const CompleteSmoothFan& fan) {
  const std::size_t n = fan.size();
  if (n > kMaxClassifyRays) {
    throw Error(ErrorKind::TooLarge,
                "refusing to classify 2^" + std::to_string(n) +
                    " supports (limit 2^" + std::to_string(kMaxClassifyRays) +
                    ")");
  }
  std::vector<ClassificationRecord> records;
  records.reserve(std::size_t{1} << n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const SupportSet delta(n, mask);
    AmplenessVerdict v = is_ample(log_anticanonical(fan, delta));
    records.push_back(
        {delta, v.ample, std::move(v.kleiman), v.witness});
  }
  return records;
}

std::set<std::uint64_t> theorem_2_expected() {
  return {0b000, 0b001, 0b010, 0b100, 0b011, 0b101, 0b110};
}

bool theorem_3_expected(Integer r, std::uint64_t mask) {
  switch (mask) {
    case 0b0000:  // -K
    case 0b0001:  // D_0
      return r == 0 || r == 1;
    case 0b0010:  // D_1
    case 0b1000:  // D_3
    case 0b0011:  // D_0 + D_1
    case 0b1001:  // D_0 + D_3
      return r == 0;
    case 0b0100:  // D_2
    case 0b0110:  // D_2 + D_1
    case 0b1100:  // D_2 + D_3
      return true;
    default:  // D_0 + D_2, D_1 + D_3, and every support of size >= 3
      return false;
  }
}

VerificationReport verify_theorem_2(const std::set<std::uint64_t>& expected) {
  VerificationReport report;
  report.suite = "t2";
  report.scope.push_back("surface: P^2, rays (-1,-1),(1,0),(0,1)");
  report.scope.push_back("expected ample: empty support and "
                         "{0},{1},{2},{0,1},{0,2},{1,2}");
  const CompleteSmoothFan fan = projective_plane();
  report.fans_examined = 1;
  for (const ClassificationRecord& rec : classify_pairs(fan)) {
    ++report.verdicts_checked;
    const bool want = expected.contains(rec.delta.mask());
    if (rec.ample != want && !report.counterexample) {
      report.counterexample = make_counterexample(
          fan, rec, want, "verdict differs for delta " + mask_string(rec.delta));
    }
  }
  report.pass = !report.counterexample && report.verdicts_checked == 8;
  return report;
}

VerificationReport verify_theorem_3(Integer r_max) {
  if (r_max < 2) {
    throw Error(ErrorKind::InvalidArgument, "r_max must be >= 2");
  }
  VerificationReport report;
  report.suite = "t3";
  report.scope.push_back("surfaces: F_r for r = 0.." + std::to_string(r_max));
  report.scope.push_back("rays u_0=(0,-1), u_1=(1,0), u_2=(0,1), u_3=(-1,r)");
  for (Integer r = 0; r <= r_max; ++r) {
    const CompleteSmoothFan fan = hirzebruch(r);
    ++report.fans_examined;
    for (const ClassificationRecord& rec : classify_pairs(fan)) {
      ++report.verdicts_checked;
      const bool want = theorem_3_expected(r, rec.delta.mask());
      if (rec.ample != want && !report.counterexample) {
        report.counterexample = make_counterexample(
            fan, rec, want,
            "r = " + std::to_string(r) + ", delta " + mask_string(rec.delta));
      }
    }
  }
  report.pass = !report.counterexample;
  return report;
}

VerificationReport verify_theorem_1(const std::set<std::size_t>& n_set,
                                    Integer gamma_bound) {
  if (n_set.empty() || *n_set.begin() < 5) {
    throw Error(ErrorKind::InvalidArgument,
                "Picard rank >= 3 needs at least 5 rays");
  }
  if (gamma_bound < 1) {
    throw Error(ErrorKind::InvalidArgument, "gamma bound must be >= 1");
  }
  VerificationReport report;
  report.suite = "t1";
  {
    std::ostringstream os;
    os << "rays n in {";
    bool first = true;
    for (std::size_t n : n_set) {
      os << (first ? "" : ",") << n;
      first = false;
    }
    os << "}, max |gamma_i| <= " << gamma_bound
       << " (bounded exhaustive search, not a proof)";
    report.scope.push_back(os.str());
  }
  report.scope.push_back(
      "reading: reduced divisors D are nonempty; the empty support is the "
      "del Pezzo case and is not covered");

  for (std::size_t n : n_set) {
    for (const GammaSequence& key : enumerate_fans(n, gamma_bound)) {
      const CompleteSmoothFan fan = from_gamma_sequence(key);
      ++report.fans_examined;
      for (const ClassificationRecord& rec : classify_pairs(fan)) {
        if (rec.delta.empty()) continue;
        ++report.verdicts_checked;
        if (rec.ample && !report.counterexample) {
          report.counterexample = make_counterexample(
              fan, rec, false,
              "nonempty support " + mask_string(rec.delta) + " is ample");
        }
      }
    }
  }

  // Supports of size >= 3 fail on every fan, including Picard rank 1 and 2.
  std::uint64_t small_fans = 0;
  for (std::size_t n : {std::size_t{3}, std::size_t{4}}) {
    for (const GammaSequence& key : enumerate_fans(n, gamma_bound)) {
      const CompleteSmoothFan fan = from_gamma_sequence(key);
      ++small_fans;
      for (const ClassificationRecord& rec : classify_pairs(fan)) {
        if (rec.delta.cardinality() < 3) continue;
        ++report.verdicts_checked;
        if (rec.ample && !report.counterexample) {
          report.counterexample = make_counterexample(
              fan, rec, false,
              "support of size >= 3 " + mask_string(rec.delta) + " is ample");
        }
      }
    }
  }
  report.scope.push_back("|delta| >= 3 also checked on " +
                         std::to_string(small_fans) +
                         " fans with 3 or 4 rays");
  report.pass = !report.counterexample;
  return report;
}

VerificationReport verify_volumes(const VolumeCheckOptions& options) {
  VerificationReport report;
  report.suite = "volumes";
  {
    std::ostringstream os;
    os << options.samples << " ample divisors, |a_i| <= "
       << options.coeff_bound << ", fans with 3.." << options.max_rays
       << " rays and max |gamma_i| <= " << options.gamma_bound << ", seed "
       << options.seed;
    report.scope.push_back(os.str());
  }

  std::vector<CompleteSmoothFan> fans;
  for (std::size_t n = 3; n <= options.max_rays; ++n) {
    for (const GammaSequence& key : enumerate_fans(n, options.gamma_bound)) {
      fans.push_back(from_gamma_sequence(key));
    }
  }
  report.fans_examined = fans.size();
  if (fans.empty()) return report;

  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<std::size_t> pick_fan(0, fans.size() - 1);
  std::uniform_int_distribution<Integer> pick_coeff(-options.coeff_bound,
                                                    options.coeff_bound);
  const std::uint64_t max_attempts = 100000 * (options.samples + 1);
  std::uint64_t accepted = 0;
  for (std::uint64_t attempt = 0;
       attempt < max_attempts && accepted < options.samples; ++attempt) {
    const CompleteSmoothFan& fan = fans[pick_fan(rng)];
    std::vector<Integer> coeffs(fan.size());
    for (Integer& a : coeffs) a = pick_coeff(rng);
    const InvariantDivisor divisor(fan, std::move(coeffs));
    const AmplenessVerdict verdict = is_ample(divisor);
    if (!verdict.ample) continue;
    ++accepted;

    std::string failure;
    try {
      const DivisorPolytope p = polytope_of(divisor);
      for (std::size_t i = 0; i < fan.size() && failure.empty(); ++i) {
        const Integer kleiman = verdict.kleiman[i];
        const Integer closed = facet_volume(p, i);
        const Integer by_gcd = p.facet_volumes[i];
        const Integer brute =
            static_cast<Integer>(facet_lattice_count(divisor, i)) - 1;
        ++report.verdicts_checked;
        if (closed != kleiman || by_gcd != kleiman || brute != kleiman) {
          std::ostringstream os;
          os << "facet " << i << ": L.D_i = " << kleiman << ", closed form "
             << closed << ", gcd " << by_gcd << ", brute force " << brute;
          failure = os.str();
        }
      }
    } catch (const Error& e) {
      failure = e.what();
    }
    if (!failure.empty() && !report.counterexample) {
      Counterexample c;
      c.fan_key = canonical_key(fan);
      c.rays = fan.rays();
      c.delta = SupportSet(fan.size(), 0);
      c.expected_ample = true;
      c.observed_ample = true;
      c.kleiman = verdict.kleiman;
      c.note = failure + "; coeffs " + [&] {
        std::ostringstream os;
        os << GammaSequence{divisor.coeffs()};
        return os.str();
      }();
      report.counterexample = std::move(c);
    }
  }
  if (accepted < options.samples && !report.counterexample) {
    Counterexample c;
    c.note = "only " + std::to_string(accepted) + " ample samples found";
    c.delta = SupportSet(0, 0);
    report.counterexample = std::move(c);
  }
  report.pass = !report.counterexample;
  return report;
}

}  // namespace toricdp
