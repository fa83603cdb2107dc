#include <doctest.h>

#include "oracles.hpp"
#include "toricdp/classify.hpp"

using namespace toricdp;

namespace {

std::set<std::uint64_t> ample_masks(const CompleteSmoothFan& fan) {
  std::set<std::uint64_t> out;
  for (const auto& rec : classify_pairs(fan)) {
    if (rec.ample) out.insert(rec.delta.mask());
  }
  return out;
}

std::uint64_t mask(std::initializer_list<int> idx) {
  std::uint64_t m = 0;
  for (int i : idx) m |= std::uint64_t{1} << i;
  return m;
}

}  // namespace

TEST_CASE("classify_pairs on P^2") {
  const auto records = classify_pairs(projective_plane());
  CHECK(records.size() == 8);
  for (std::size_t i = 0; i < records.size(); ++i) {
    CHECK(records[i].delta.mask() == i);
  }
  CHECK(records[0].pure_del_pezzo());
  CHECK(ample_masks(projective_plane()) ==
        std::set<std::uint64_t>{0, mask({0}), mask({1}), mask({2}),
                                mask({0, 1}), mask({0, 2}), mask({1, 2})});
  CHECK_FALSE(records[0b111].ample);
  CHECK(records[0b111].kleiman == std::vector<Integer>{0, 0, 0});
}

TEST_CASE("classify_pairs on F_1 and F_0") {
  CHECK(ample_masks(hirzebruch(1)) ==
        std::set<std::uint64_t>{0, mask({0}), mask({2}), mask({1, 2}),
                                mask({2, 3})});
  CHECK(ample_masks(hirzebruch(0)) ==
        std::set<std::uint64_t>{0, mask({0}), mask({1}), mask({2}), mask({3}),
                                mask({0, 1}), mask({0, 3}), mask({1, 2}),
                                mask({2, 3})});
}

TEST_CASE("classification records are self-consistent") {
  for (std::size_t n = 3; n <= 7; ++n) {
    for (const auto& key : enumerate_fans(n, 3)) {
      const auto fan = from_gamma_sequence(key);
      const auto records = classify_pairs(fan);
      CHECK(records.size() == (std::size_t{1} << n));
      const auto again = classify_pairs(fan);
      for (std::size_t k = 0; k < records.size(); ++k) {
        CHECK(again[k].kleiman == records[k].kleiman);
      }
      for (const auto& rec : records) {
        const bool positive = oracle::all_positive(rec.kleiman);
        CHECK(rec.ample == positive);
        CHECK(rec.witness.has_value() == !rec.ample);
        if (rec.witness) CHECK(rec.kleiman[*rec.witness] <= 0);
        std::vector<Integer> a(n);
        for (std::size_t i = 0; i < n; ++i) a[i] = rec.delta.contains(i) ? 0 : 1;
        CHECK(rec.kleiman == oracle::kleiman_by_matrix(fan.rays(), a));
      }
    }
  }
}

TEST_CASE("classify_pairs refuses more than 20 rays") {
  CompleteSmoothFan fan = projective_plane();
  while (fan.size() <= kMaxClassifyRays) fan = blowup(fan, 0);
  try {
    classify_pairs(fan);
    FAIL("expected refusal");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::TooLarge);
  }
}

TEST_CASE("Hirzebruch table agrees with the ampleness inequalities") {
  for (Integer r = 0; r <= 30; ++r) {
    for (std::uint64_t m = 0; m < 16; ++m) {
      CAPTURE(r);
      CAPTURE(m);
      CHECK(theorem_3_expected(r, m) == oracle::hirzebruch_ample(r, m));
    }
  }
  CHECK(theorem_3_expected(0, mask({0, 3})));
  CHECK_FALSE(theorem_3_expected(5, mask({1, 3})));
}

TEST_CASE("verify_theorem_2") {
  const auto report = verify_theorem_2();
  CHECK(report.pass);
  CHECK(report.verdicts_checked == 8);
  CHECK_FALSE(report.counterexample.has_value());

  auto mutated = theorem_2_expected();
  mutated.erase(mask({0, 2}));
  const auto bad = verify_theorem_2(mutated);
  CHECK_FALSE(bad.pass);
  REQUIRE(bad.counterexample.has_value());
  CHECK(bad.counterexample->delta.mask() == mask({0, 2}));
  CHECK(bad.counterexample->observed_ample);
  CHECK_FALSE(bad.counterexample->expected_ample);
}

TEST_CASE("verify_theorem_3") {
  const auto report = verify_theorem_3(20);
  CHECK(report.pass);
  CHECK(report.verdicts_checked == 21 * 16);
  CHECK(report.fans_examined == 21);
  CHECK_THROWS_AS(verify_theorem_3(1), Error);

  CHECK(classify_pairs(hirzebruch(0))[mask({0, 3})].ample);
  CHECK_FALSE(classify_pairs(hirzebruch(5))[mask({1, 3})].ample);
}

TEST_CASE("verify_theorem_1") {
  const auto report = verify_theorem_1({5, 6, 7}, 6);
  CHECK(report.pass);
  CHECK(report.fans_examined == 56);
  CHECK_THROWS_AS(verify_theorem_1({4, 5}, 6), Error);

  // The empty support is ample on some rank-3 surfaces, so it is excluded.
  const auto b = blowup(hirzebruch(0), 0);
  CHECK(b.size() == 5);
  CHECK(classify_pairs(b)[0].ample);
}

TEST_CASE("supports of size >= 3 are never ample") {
  for (std::size_t n = 3; n <= 7; ++n) {
    for (const auto& key : enumerate_fans(n, 5)) {
      for (const auto& rec : classify_pairs(from_gamma_sequence(key))) {
        if (rec.delta.cardinality() >= 3) CHECK_FALSE(rec.ample);
      }
    }
  }
}

TEST_CASE("verify_volumes") {
  VolumeCheckOptions small;
  small.samples = 200;
  const auto report = verify_volumes(small);
  CHECK(report.pass);
  CHECK(report.verdicts_checked >= 200 * 3);
}
