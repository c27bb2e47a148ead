#pragma once

#include <cstdint>
#include <random>
#include <unordered_map>
#include <vector>

#include "lqc/complex.hpp"

namespace lqc {

class NoCoordinates : public ComplexError {
 public:
  NoCoordinates() : ComplexError("complex has no vertex coordinates") {}
};
class PointOutsideComplex : public ComplexError {
 public:
  using ComplexError::ComplexError;
};
class InvalidCover : public ComplexError {
 public:
  using ComplexError::ComplexError;
};

using CellRef = std::pair<int, Index>;  // (dimension, index)

/// Point of a simplicial complex: a simplex and barycentric weights on its
/// (sorted) vertices.
struct ComplexPoint {
  int dim = 0;
  Index simplex = 0;
  std::vector<double> weights;
};

/// Cover of a simplicial complex by open regions, each a union of open cells.
/// Depths (distance to the region boundary) are precomputed on the vertices of
/// the 4-fold edgewise subdivision, using its edge graph with edges of length
/// 1/4 in the metric making every simplex a standard unit simplex.
struct Cover {
  CellComplex base;
  std::vector<std::vector<CellRef>> sets;  // sorted cell lists
  std::vector<Index> centers;              // vertex per set, or empty
  std::size_t multiplicity = 0;
  std::vector<double> margins;  // per set: max depth reached inside the set
  double radius = 0.0;          // every set lies in a ball of this radius about one of its vertices
  double depth = 0.0;           // every subdivision vertex has depth >= this in some set
  double distance_error = 0.25;

  // Lookup data built by make_cover.
  Subdivision fine;
  std::vector<std::vector<Index>> cell_sets;  // per global cell id: sets containing it
  std::vector<std::size_t> cell_offset;       // global id = cell_offset[dim] + index
  std::vector<std::vector<std::pair<Index, double>>> vertex_depth;  // per fine vertex: (set, depth > 0)
  std::unordered_map<Simplex, Index, SimplexHash> fine_lookup;      // encoded carrier key -> fine vertex

  const std::vector<Index>& sets_containing(int dim, Index cell) const {
    return cell_sets[cell_offset[static_cast<std::size_t>(dim)] + cell];
  }
};

/// Builds a cover from explicit cell sets. Throws InvalidCover if some cell is
/// not covered or a set names a cell that does not exist.
Cover make_cover(CellComplex base, std::vector<std::vector<CellRef>> sets, std::vector<Index> centers = {});

/// One set per vertex: its open star.
Cover star_cover(const CellComplex& x);

struct NerveMapPoint {
  std::vector<std::pair<Index, double>> weights;  // sorted by set, values > 0

  Simplex support() const;
};

NerveMapPoint partition_of_unity(const Cover& c, const ComplexPoint& p);
NerveMapPoint partition_of_unity(const Cover& c, const Point& p);

/// Intersection nerve: a simplex for every family of sets sharing a cell.
/// Vertex coordinates are the set centers when available, otherwise the mean
/// of the set's vertices.
CellComplex nerve_complex(const Cover& c);

/// Partition of unity viewed as a point of the nerve. Throws ComplexError if
/// the support is not a simplex of `nerve`.
ComplexPoint nerve_map(const Cover& c, const CellComplex& nerve, const ComplexPoint& p);

struct LipschitzEstimate {
  double max_ratio = 0.0;
  std::size_t pairs = 0;
};

/// Sampled max of |rho(p) - rho(q)|_1 / dist(p, q) over nearby pairs inside
/// common facets, with the standard-simplex metric.
LipschitzEstimate sample_lipschitz(const Cover& c, std::size_t pairs, double step, std::uint64_t seed);

/// Simplices of the nerve that are not a face of the support of any sampled
/// image point.
std::vector<Simplex> unhit_nerve_simplices(const Cover& c, const CellComplex& nerve, std::size_t samples,
                                           std::uint64_t seed);

/// Uniform facet, then a uniform point in it.
ComplexPoint random_point(const CellComplex& x, std::mt19937_64& rng);

Point ambient(const CellComplex& x, const ComplexPoint& p);

/// Finds a facet containing an ambient point. Throws PointOutsideComplex.
ComplexPoint locate(const CellComplex& x, const Point& p);

/// Sampled Lipschitz bound met by star covers of the shipped examples.
constexpr double kNerveLipschitz = 4.0;

}  // namespace lqc
