#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <random>

#include "oracles.hpp"
#include "toricdp/polytope.hpp"

using namespace toricdp;

namespace {

InvariantDivisor div_on(const CompleteSmoothFan& fan, std::vector<Integer> a) {
  return InvariantDivisor(fan, std::move(a));
}

}  // namespace

TEST_CASE("polytope of -K on P^2") {
  const auto p = polytope_of(div_on(projective_plane(), {1, 1, 1}));
  CHECK(p.vertices ==
        std::vector<LatticeVector>{{-1, 2}, {-1, -1}, {2, -1}});
  CHECK(p.facet_volumes == std::vector<Integer>{3, 3, 3});
  CHECK(facet_volume(p, 1) == 3);
  CHECK(lattice_points(p.divisor).size() == 10);
}

TEST_CASE("polytope on F_1") {
  const auto L = div_on(hirzebruch(1), {1, 2, 0, 1});
  const auto p = polytope_of(L);
  REQUIRE(p.vertices.size() == 4);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(facet_volume(p, i) > 0);
    CHECK(facet_volume(p, i) == intersect_curve(L, i));
  }
  // Vertices m_i lie on facets P_i and P_{i+1}.
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(pairing(p.vertices[i], L.fan().ray(i)) == -L.coeff(i));
    CHECK(pairing(p.vertices[i], L.fan().ray(i + 1)) == -L.coeff(i + 1));
  }
}

TEST_CASE("F_r facet P_2 has length a_1 + a_3 - r a_2") {
  for (Integer r = 0; r <= 5; ++r) {
    const auto L = div_on(hirzebruch(r), {1, 1 + r, 1, 1});
    REQUIRE(is_ample(L).ample);
    const auto p = polytope_of(L);
    CHECK(facet_volume(p, 2) == (1 + r) + 1 - r * 1);
  }
}

TEST_CASE("polytope_of rejects non-ample divisors") {
  try {
    polytope_of(div_on(projective_plane(), {0, 0, 0}));
    FAIL("expected rejection");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAmple);
    CHECK(std::string(e.what()).find("witness 0") != std::string::npos);
  }
  CHECK_THROWS_AS(lattice_points(div_on(hirzebruch(2), {0, 1, 0, 1})), Error);
}

TEST_CASE("lattice points of -K on F_0") {
  const auto pts = lattice_points(div_on(hirzebruch(0), {1, 1, 1, 1}));
  CHECK(pts.size() == 9);
  for (const auto& m : pts) {
    CHECK(std::abs(m.x) <= 1);
    CHECK(std::abs(m.y) <= 1);
  }
}

TEST_CASE("edge lattice counts match facet volumes") {
  const std::vector<InvariantDivisor> divisors{
      div_on(projective_plane(), {1, 1, 1}),
      div_on(hirzebruch(0), {1, 1, 1, 1}),
      div_on(hirzebruch(1), {1, 2, 0, 1}),
      div_on(hirzebruch(3), {2, 5, 1, 0})};
  for (const auto& L : divisors) {
    REQUIRE(is_ample(L).ample);
    const auto p = polytope_of(L);
    for (std::size_t i = 0; i < L.size(); ++i) {
      CHECK(static_cast<Integer>(facet_lattice_count(L, i)) ==
            facet_volume(p, i) + 1);
      CHECK(oracle::segment_points(p.vertices[(i + L.size() - 1) % L.size()],
                                   p.vertices[i]) == facet_volume(p, i) + 1);
    }
  }
}

TEST_CASE("facet occupancy of a non-ample -(K + D)") {
  // |Delta| = 3 on P^2: -(K + D) = 0, P = {0}, every facet passes through 0.
  const auto zero = div_on(projective_plane(), {0, 0, 0});
  CHECK(lattice_points_any(zero) == std::vector<LatticeVector>{{0, 0}});
  CHECK(facet_occupancy(zero) == std::vector<bool>{true, true, true});

  // F_2 with Delta = {0, 1, 2}: coefficient 1 on D_3 only.
  const auto L = div_on(hirzebruch(2), {0, 0, 0, 1});
  const auto occupied = facet_occupancy(L);
  CHECK(occupied[0]);
  CHECK(occupied[1]);
  CHECK(occupied[2]);
  const auto pts = lattice_points_any(L);
  CHECK(std::find(pts.begin(), pts.end(), LatticeVector{0, 0}) != pts.end());

  // Empty polytope: a strictly negative multiple of -K.
  CHECK(lattice_points_any(div_on(projective_plane(), {-1, -1, -1})).empty());
}

TEST_CASE("ample polytopes: convex, counterclockwise, volumes = L.D_i") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<Integer> pick(-4, 4);
  int checked = 0;
  for (std::size_t n = 3; n <= 6; ++n) {
    for (const auto& key : enumerate_fans(n, 3)) {
      const auto fan = from_gamma_sequence(key);
      for (int t = 0; t < 400; ++t) {
        std::vector<Integer> a(n);
        for (auto& x : a) x = pick(rng);
        const auto L = div_on(fan, a);
        if (!is_ample(L).ample) continue;
        const auto p = polytope_of(L);
        ++checked;
        for (std::size_t i = 0; i < n; ++i) {
          const auto& prev = p.vertices[(i + n - 1) % n];
          const auto& cur = p.vertices[i];
          const auto& next = p.vertices[(i + 1) % n];
          CHECK(det2(cur - prev, next - cur) > 0);
          CHECK(cur != next);
          CHECK(facet_volume(p, i) == intersect_curve(L, i));
          for (std::size_t j = 0; j < n; ++j) {
            CHECK(pairing(cur, fan.ray(j)) >= -a[j]);
          }
        }
      }
    }
  }
  CHECK(checked > 100);
}
