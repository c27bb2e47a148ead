#include <doctest.h>

#include <cmath>
#include <random>

#include "lqc/geometry.hpp"

using namespace lqc;

namespace {

std::vector<const Point*> ptrs(const std::vector<Point>& v) {
  std::vector<const Point*> out;
  for (const auto& p : v) out.push_back(&p);
  return out;
}

// Dense sampling oracle: min distance over a barycentric grid on both simplices.
double sampled_distance(const std::vector<Point>& a, const std::vector<Point>& b, int steps) {
  auto samples = [steps](const std::vector<Point>& s) {
    std::vector<Point> out;
    const std::size_t n = s[0].size();
    if (s.size() == 1) return s;
    if (s.size() == 2) {
      for (int i = 0; i <= steps; ++i) {
        double t = double(i) / steps;
        Point p(n);
        for (std::size_t r = 0; r < n; ++r) p[r] = (1 - t) * s[0][r] + t * s[1][r];
        out.push_back(p);
      }
      return out;
    }
    for (int i = 0; i <= steps; ++i)
      for (int j = 0; i + j <= steps; ++j) {
        double u = double(i) / steps, v = double(j) / steps;
        Point p(n);
        for (std::size_t r = 0; r < n; ++r) p[r] = (1 - u - v) * s[0][r] + u * s[1][r] + v * s[2][r];
        out.push_back(p);
      }
    return out;
  };
  double best = 1e300;
  for (const auto& p : samples(a))
    for (const auto& q : samples(b)) best = std::min(best, distance(p, q));
  return best;
}

}  // namespace

TEST_CASE("cells met by points, segments and triangles") {
  std::vector<Point> v{{0.5, 0.5}};
  CHECK(cells_meeting(ptrs(v)).size() == 1);
  std::vector<Point> seg{{0.5, 0.5}, {10.5, 0.5}};
  CHECK(cells_meeting(ptrs(seg)).size() == 11);
  std::vector<Point> diag{{0.5, 0.5}, {2.5, 2.5}};
  CHECK(cells_meeting(ptrs(diag)).size() == 3);
  std::vector<Point> lattice{{0.0, 0.0}, {1.0, 0.0}};
  CHECK(cells_meeting(ptrs(lattice)).size() == 2);
  std::vector<Point> tri{{0.1, 0.1}, {2.8, 0.1}, {0.1, 2.8}};
  CHECK(cells_meeting(ptrs(tri)).size() == 6);
}

TEST_CASE("box test agrees with sampling") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-2, 2);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Point> tri{{u(rng), u(rng)}, {u(rng), u(rng)}, {u(rng), u(rng)}};
    std::vector<double> lo{-0.5, -0.5}, hi{0.5, 0.5};
    bool hit = false;
    const int steps = 200;
    for (int i = 0; i <= steps && !hit; ++i)
      for (int j = 0; i + j <= steps && !hit; ++j) {
        double a = double(i) / steps, b = double(j) / steps;
        double x = (1 - a - b) * tri[0][0] + a * tri[1][0] + b * tri[2][0];
        double y = (1 - a - b) * tri[0][1] + a * tri[1][1] + b * tri[2][1];
        hit = std::abs(x) <= 0.5 && std::abs(y) <= 0.5;
      }
    if (hit) CHECK(simplex_meets_box(ptrs(tri), lo, hi));
    std::vector<double> lo2{-0.45, -0.45}, hi2{0.45, 0.45};
    if (!hit) CHECK_FALSE(simplex_meets_box(ptrs(tri), lo2, hi2));
  }
}

TEST_CASE("simplex distances") {
  std::vector<Point> a{{0, 0, 0}, {1, 0, 0}}, b{{0.5, 1, 0.2}, {0.5, -1, 0.2}};
  CHECK(simplex_distance(ptrs(a), ptrs(b)) == doctest::Approx(0.2));
  std::vector<Point> par{{0, 1, 0}, {1, 1, 0}};
  CHECK(simplex_distance(ptrs(a), ptrs(par)) == doctest::Approx(1.0));
  Point p{2, 0, 0};
  CHECK(point_simplex_distance(p, ptrs(a)) == doctest::Approx(1.0));

  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Point> s{{u(rng), u(rng), u(rng)}, {u(rng), u(rng), u(rng)}, {u(rng), u(rng), u(rng)}};
    std::vector<Point> t{{u(rng) + 1, u(rng), u(rng)}, {u(rng) + 1, u(rng), u(rng)}};
    double exact = simplex_distance(ptrs(s), ptrs(t));
    double sampled = sampled_distance(s, t, 60);
    CHECK(exact <= sampled + 1e-9);
    CHECK(exact >= sampled - 0.08);
  }
}

TEST_CASE("bilipschitz distortion") {
  std::vector<Point> eq{{0, 0}, {1, 0}, {0.5, std::sqrt(3.0) / 2}};
  CHECK(bilipschitz_distortion(ptrs(eq)) == doctest::Approx(1.0));
  std::vector<Point> big{{0, 0}, {2, 0}, {1, std::sqrt(3.0)}};
  CHECK(bilipschitz_distortion(ptrs(big)) == doctest::Approx(2.0));
  std::vector<Point> flat{{0, 0}, {1, 0}, {2, 0}};
  CHECK(std::isinf(bilipschitz_distortion(ptrs(flat))));
  std::vector<Point> seg{{0, 0, 0}, {0, 0, 0.25}};
  CHECK(bilipschitz_distortion(ptrs(seg)) == doctest::Approx(4.0));
}
