#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "lqc/complex.hpp"

namespace lqc {

/// Integer unit-grid cell [k, k+1)^n, n <= 8.
struct GridCell {
  std::array<std::int32_t, 8> c{};

  friend bool operator==(const GridCell&, const GridCell&) = default;
  friend auto operator<=>(const GridCell&, const GridCell&) = default;
};

struct GridCellHash {
  std::size_t operator()(const GridCell& g) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (auto v : g.c) h = (h ^ static_cast<std::uint32_t>(v)) * 0x100000001b3ull;
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

constexpr int kMaxAmbient = 8;

/// Closed half-open slack used when testing against a unit cell: the cell
/// [k, k+1) is represented by the closed box [k, k+1-eta].
constexpr double kCellEta = 1e-9;

double distance(const Point& a, const Point& b);

/// Exact intersection test of a simplex (up to dimension 2) with a closed
/// axis-aligned box, by clipping in barycentric parameter space.
bool simplex_meets_box(const std::vector<const Point*>& verts, const std::vector<double>& lo,
                       const std::vector<double>& hi);

/// Unit cells met by a simplex (dimension <= 2), sorted.
std::vector<GridCell> cells_meeting(const std::vector<const Point*>& verts);

/// Euclidean distance between two simplices given by their vertices.
double simplex_distance(const std::vector<const Point*>& a, const std::vector<const Point*>& b);

/// Euclidean distance from p to the closed simplex.
double point_simplex_distance(const Point& p, const std::vector<const Point*>& verts);

/// Linear-map distortion of a simplex image against the standard simplex of
/// side `side`: max(sigma_max, 1/sigma_min) of the affine map. Infinity when
/// the image is degenerate; 1 for a vertex.
double bilipschitz_distortion(const std::vector<const Point*>& verts, double side = 1.0);

}  // namespace lqc
