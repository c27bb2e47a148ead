#include <doctest.h>

#include <cmath>
#include <random>

#include "lqc/nerve.hpp"

using namespace lqc;

namespace {

CellComplex single_edge() { return CellComplex::from_simplices(2, {{0, 1}}, std::vector<Point>{{0, 0}, {1, 0}}); }

CellComplex filled_triangle() {
  return CellComplex::from_simplices(3, {{0, 1, 2}}, std::vector<Point>{{0, 0}, {1, 0}, {0.5, std::sqrt(3.0) / 2}});
}

CellComplex two_cycles() {
  std::vector<Point> c;
  for (int t = 0; t < 2; ++t)
    for (int j = 0; j < 3; ++j)
      c.push_back({10.0 * t + std::cos(2 * M_PI * j / 3) / std::sqrt(3.0), std::sin(2 * M_PI * j / 3) / std::sqrt(3.0)});
  return CellComplex::from_simplices(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}}, c);
}

double sum(const NerveMapPoint& w) {
  double s = 0;
  for (auto [i, v] : w.weights) s += v;
  return s;
}

}  // namespace

TEST_CASE("star covers") {
  auto hex = star_cover(cycle_complex(6));
  CHECK(hex.sets.size() == 6);
  CHECK(hex.multiplicity == 2);
  CHECK(hex.radius <= 2.0);
  CHECK(hex.depth >= 1.0 / 8);

  auto e = star_cover(single_edge());
  CHECK(e.sets.size() == 2);
  CHECK(e.multiplicity == 2);

  auto d = star_cover(two_cycles());
  CHECK(d.multiplicity == 2);
  CHECK(d.radius <= 2.0);

  auto t = star_cover(filled_triangle());
  CHECK(t.multiplicity == 3);
  CHECK(t.multiplicity <= t.base.degree());

  CHECK_THROWS_AS(star_cover(CellComplex::from_simplices(2, {{0, 1}})), NoCoordinates);
  CHECK_THROWS_AS(make_cover(single_edge(), {{{0, 0}}}), InvalidCover);
}

TEST_CASE("partition of unity on reference points") {
  auto c = star_cover(single_edge());
  auto at0 = partition_of_unity(c, ComplexPoint{1, 0, {1.0, 0.0}});
  REQUIRE(at0.weights.size() == 1);
  CHECK(at0.weights[0].first == 0);
  CHECK(at0.weights[0].second == doctest::Approx(1.0));
  auto mid = partition_of_unity(c, ComplexPoint{1, 0, {0.5, 0.5}});
  REQUIRE(mid.weights.size() == 2);
  CHECK(mid.weights[0].second == doctest::Approx(0.5));
  CHECK(mid.weights[1].second == doctest::Approx(0.5));
  auto amb = partition_of_unity(c, Point{0.5, 0.0});
  CHECK(amb.weights[0].second == doctest::Approx(0.5));
  CHECK_THROWS_AS(partition_of_unity(c, Point{0.5, 1.0}), PointOutsideComplex);
  CHECK_THROWS_AS(partition_of_unity(c, ComplexPoint{1, 0, {0.7, 0.7}}), PointOutsideComplex);

  auto hex = star_cover(cycle_complex(6));
  auto nerve = nerve_complex(hex);
  for (Index v = 0; v < 6; ++v) {
    auto p = nerve_map(hex, nerve, locate(hex.base, (*hex.base.coords())[v]));
    CHECK(p.dim == 0);
    CHECK(nerve.simplex(0, p.simplex) == Simplex{v});
  }
}

TEST_CASE("partition of unity invariants on random points") {
  for (const auto& x : {cycle_complex(6), filled_triangle(), two_cycles()}) {
    auto c = star_cover(x);
    auto nerve = nerve_complex(c);
    std::mt19937_64 rng(5);
    for (int t = 0; t < 1000; ++t) {
      auto p = random_point(c.base, rng);
      auto w = partition_of_unity(c, p);
      CHECK(sum(w) == doctest::Approx(1.0).epsilon(1e-12));
      const Simplex& s = c.base.simplex(p.dim, p.simplex);
      for (auto [i, v] : w.weights) {
        CHECK(v > 0);
        CHECK(v <= 1.0 + 1e-12);
        // p lies in the open star of i: i must be a vertex of the facet with positive weight
        auto it = std::find(s.begin(), s.end(), i);
        REQUIRE(it != s.end());
        CHECK(p.weights[static_cast<std::size_t>(it - s.begin())] > 0);
      }
      CHECK(nerve.find(w.support()));
      auto np = nerve_map(c, nerve, p);
      CHECK(np.weights.size() == w.weights.size());
    }
  }
}

TEST_CASE("nerve complexes") {
  auto hex = nerve_complex(star_cover(cycle_complex(6)));
  CHECK(hex.cell_counts() == std::vector<std::size_t>{6, 6});
  CHECK(hex.degree() == 2);
  auto tri = nerve_complex(star_cover(filled_triangle()));
  CHECK(tri.dims() == 2);
  CHECK(tri.cells(2) == 1);

  auto iso = CellComplex::from_simplices(3, {{0}, {1}, {2}}, std::vector<Point>{{0.0}, {5.0}, {9.0}});
  auto disjoint = star_cover(iso);
  CHECK(nerve_complex(disjoint).dims() == 0);
  CHECK(disjoint.multiplicity == 1);

  for (const auto& x : {cycle_complex(12), filled_triangle(), two_cycles(), triangulated_torus(3)}) {
    if (!x.coords()) continue;
    auto c = star_cover(x);
    CHECK(nerve_complex(c).dims() < static_cast<int>(c.multiplicity));
  }
}

TEST_CASE("sampled Lipschitz constant and hit simplices") {
  for (const auto& x : {cycle_complex(6), filled_triangle(), two_cycles()}) {
    auto c = star_cover(x);
    auto est = sample_lipschitz(c, 10000, 1e-3, 9);
    CHECK(est.pairs == 10000);
    CHECK(est.max_ratio <= kNerveLipschitz);
    CHECK(est.max_ratio > 0);
    auto nerve = nerve_complex(c);
    CHECK(unhit_nerve_simplices(c, nerve, 2000, 1).empty());
  }
}
