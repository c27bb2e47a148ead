#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "lqc/complex.hpp"
#include "lqc/geometry.hpp"
#include "lqc/graph.hpp"

namespace lqc {

class DimensionError : public ComplexError {
 public:
  using ComplexError::ComplexError;
};
class InfeasibleCaps : public ComplexError {
 public:
  using ComplexError::ComplexError;
};
class ResourceLimitExceeded : public ComplexError {
 public:
  ResourceLimitExceeded(const std::string& what, double predicted, double limit)
      : ComplexError(what), predicted(predicted), limit(limit) {}
  double predicted;
  double limit;
};
class ResampleBudgetExhausted : public ComplexError {
 public:
  ResampleBudgetExhausted(int stage, GridCell worst_cell, std::size_t worst_count, std::size_t resamples)
      : ComplexError("resample budget exhausted in stage " + std::to_string(stage)),
        stage(stage),
        worst_cell(worst_cell),
        worst_count(worst_count),
        resamples(resamples) {}
  int stage;
  GridCell worst_cell;
  std::size_t worst_count;
  std::size_t resamples;
};
class CompositionBoundViolated : public ComplexError {
 public:
  using ComplexError::ComplexError;
};

struct EmbedParams {
  int n = 3;
  double delta = 0.125;
  double log_floor = 2.0;
  double c1 = 8.0;
  std::optional<std::size_t> a_max;          // default (n+1)(degree+1)*4
  std::optional<std::size_t> max_resamples;  // default 10 V max(ln V, log_floor)
  std::uint64_t seed = 1;
  double min_sep_fraction = 0.05;
  double bilipschitz_bound = 16.0;
  double max_simplices = 2e7;
};

/// Target cells for backward counts: a single half-open unit cell, or the 3^n
/// block of cells around it.
enum class Neighborhood { Cell, Block };

/// Coarseness constants of a piecewise-linear map into R^n, measured against
/// half-open unit cells. forward: max over facets of the number of cells its
/// image meets. backward: max over cells of the number of facets whose image
/// meets the cell (or its block).
struct CoarseCertificate {
  std::size_t forward = 0;
  std::size_t backward = 0;
  Neighborhood neighborhood = Neighborhood::Cell;
  double bilipschitz_ratio = 1.0;
  double radius = 0.0;  // max vertex norm
  bool exhaustive = true;
  GridCell worst_cell;
};

struct StageTrace {
  std::size_t rounds = 0;
  std::size_t resampled_vertices = 0;
  std::vector<double> violated_fraction;  // per round: violated events / events checked
  std::size_t worst_count = 0;            // max cell count at acceptance
  std::size_t distortion_events = 0;      // facets resampled for distortion
  std::size_t final_events = 0;           // rounds rejected by the final backward check
  std::size_t threshold = 0;
};

struct EmbedTrace {
  StageTrace stage1;
  StageTrace stage3;
  std::size_t colors_vertices = 0;  // A + 1 used
  std::size_t colors_facets = 0;    // stage-1 facet colors
  std::size_t colors_mid_vertices = 0;  // A'
  std::size_t colors_mid_facets = 0;    // A''
  std::size_t tuple_events = 0;  // (cell, color) pairs met by >= n+1 same-color stage-3 simplices
  std::size_t total_resamples() const { return stage1.resampled_vertices + stage3.resampled_vertices; }
};

struct EmbeddedComplex {
  CellComplex base;         // the input complex
  Subdivision subdivision;  // X' = edgewise_subdivide(base, r_total()) with carriers
  std::vector<Point> coords;
  CoarseCertificate certificate;
  EmbedTrace trace;
  EmbedParams params;  // with defaults resolved
  double volume = 0;
  double log_term = 0;  // max(ln V, log_floor)
  double rho0 = 0;      // V^(1/(n-m))
  double s = 0;
  double R = 0;
  std::uint32_t r_mid = 1;
  std::uint32_t r_fin = 1;
  bool accepted = false;  // certificate.backward <= a_max and bilipschitz within bound

  std::uint32_t r_total() const { return r_mid * r_fin; }
  const CellComplex& complex() const { return subdivision.complex; }
};

// ---- coloring and caps ---------------------------------------------------

/// Greedy proper coloring in vertex order; uses at most max_degree + 1 colors.
std::vector<std::uint32_t> greedy_color(const Graph& g);
std::size_t color_count(const std::vector<std::uint32_t>& colors);

/// 1-skeleton of a simplicial complex.
Graph vertex_graph(const CellComplex& x);
/// Vertices within distance 2 in the 1-skeleton are adjacent.
Graph square_graph(const Graph& g);
/// Facets sharing a vertex are adjacent; node i is facet i of x.facets().
Graph facet_graph(const CellComplex& x);

struct Cap {
  Point center;  // on the sphere
  double angle = 0;  // angular radius
};

/// `count` disjoint caps on the sphere of the given radius in R^n with total
/// area a quarter of the sphere. Throws InfeasibleCaps unless every two caps
/// are at least min_sep_fraction * radius apart.
std::vector<Cap> place_caps(int n, double radius, std::size_t count, double min_sep_fraction);

/// Distance between two caps on a sphere of the given radius.
double cap_distance(const Cap& a, const Cap& b, double radius);

/// Uniform point of a cap on the sphere of the given radius.
Point sample_in_cap(const Cap& cap, double radius, std::mt19937_64& rng);

/// Fraction of the sphere S^(n-1) covered by a cap of angular radius theta.
double cap_fraction(int n, double theta);

// ---- certificates --------------------------------------------------------

/// Exact certificate by a spatial-hash sweep; facets of dimension <= 2.
CoarseCertificate certify_coarse(const CellComplex& x, const std::vector<Point>& coords,
                                 Neighborhood nb = Neighborhood::Cell);
/// Same sweep without threads.
CoarseCertificate certify_coarse_serial(const CellComplex& x, const std::vector<Point>& coords,
                                        Neighborhood nb = Neighborhood::Cell);

/// Cells met by the images of more than `limit` facets, sorted.
std::vector<GridCell> overloaded_cells(const CellComplex& x, const std::vector<Point>& coords, std::size_t limit);

/// Certificate of a simplicial map f: m -> y. forward: max over facets of m of
/// the number of facets of y containing a vertex of f(facet). backward: max
/// over facets of y of the number of facets of m with a vertex mapped into it.
CoarseCertificate certify_simplicial(const CellComplex& m, const std::vector<Index>& f, const CellComplex& y);

struct CompositionCheck {
  std::size_t forward_bound = 0;
  std::size_t backward_bound = 0;
  double forward_ratio = 0;   // measured / bound
  double backward_ratio = 0;
};

CompositionCheck compose_certificates(const CoarseCertificate& a, const CoarseCertificate& b,
                                      const CoarseCertificate& measured);

// ---- embedding -----------------------------------------------------------

EmbedParams resolve_params(const CellComplex& x, EmbedParams p);

EmbeddedComplex gg_embed(const CellComplex& x, const EmbedParams& params);

/// Moves every vertex by at most 1/100 so that simplices without a common
/// vertex end up at least `sep` apart, resampling the vertices of violating
/// pairs. Uses params.seed and params.max_resamples (default 1000 * vertices).
std::vector<Point> perturb_general_position(const CellComplex& y, const std::vector<Point>& coords, int ambient_dim,
                                            double sep, const EmbedParams& params);

/// Seeded stream for one stage and resampling round.
std::mt19937_64 stream(std::uint64_t seed, std::uint64_t stage, std::uint64_t round);

}  // namespace lqc
