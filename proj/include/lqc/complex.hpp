#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "lqc/code.hpp"
#include "lqc/f2.hpp"

namespace lqc {

enum class CellKind { Simplicial, Cubical, General };

std::string to_string(CellKind kind);
CellKind cell_kind_from_string(const std::string& s);

class ComplexError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class DimensionOutOfRange : public ComplexError {
 public:
  using ComplexError::ComplexError;
};
class NotSimplicial : public ComplexError {
 public:
  NotSimplicial() : ComplexError("operation requires a simplicial complex") {}
};
class UnsupportedDimension : public ComplexError {
 public:
  using ComplexError::ComplexError;
};
class NotClosedManifold : public ComplexError {
 public:
  using ComplexError::ComplexError;
};
class NotSimplicialMap : public ComplexError {
 public:
  using ComplexError::ComplexError;
};

using Simplex = std::vector<Index>;  // sorted vertex ids
using Point = std::vector<double>;

struct SimplexHash {
  std::size_t operator()(const Simplex& s) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (Index v : s) h = (h ^ v) * 0x100000001b3ull;
    return h;
  }
};

/// Cell complex graded by dimension. boundary(k) maps k-cells to (k-1)-cells
/// (rows are (k-1)-cells, columns are k-cells); boundary(0) is the empty map.
/// Everything is mod 2, so there are no orientations.
///
/// Simplicial complexes additionally keep their vertex lists, sorted
/// lexicographically within each dimension, and optional vertex coordinates.
class CellComplex {
 public:
  CellComplex() = default;
  CellComplex(std::vector<BitMatrix> boundary, CellKind kind);

  /// Closes `facets` under taking faces. Vertex ids must be < num_vertices.
  static CellComplex from_simplices(std::size_t num_vertices, const std::vector<Simplex>& facets,
                                    std::optional<std::vector<Point>> coords = std::nullopt);

  int dims() const { return static_cast<int>(boundary_.size()) - 1; }
  std::size_t cells(int k) const;
  std::vector<std::size_t> cell_counts() const;
  const BitMatrix& boundary(int k) const { return boundary_.at(static_cast<std::size_t>(k)); }
  const std::vector<BitMatrix>& boundaries() const { return boundary_; }
  BitMatrix coboundary(int k) const;  // delta^k : k-cochains -> (k+1)-cochains
  CellKind kind() const { return kind_; }
  bool simplicial() const { return kind_ == CellKind::Simplicial; }

  /// vol = number of top-dimensional cells.
  std::size_t volume() const { return cells(dims()); }

  const std::vector<Simplex>& simplices(int k) const;
  const Simplex& simplex(int k, Index i) const { return simplices(k)[i]; }
  std::optional<Index> find(const Simplex& s) const;  // s sorted

  /// Maximal simplices (not a face of any other simplex), as (dim, index).
  std::vector<std::pair<int, Index>> facets() const;

  const std::optional<std::vector<Point>>& coords() const { return coords_; }
  void set_coords(std::vector<Point> coords);

  /// Max number of simplices of positive dimension containing a vertex.
  std::size_t degree() const;

  /// Chain condition on every consecutive pair of boundary maps.
  bool chain_condition_holds() const;

  friend bool operator==(const CellComplex& a, const CellComplex& b) {
    return a.kind_ == b.kind_ && a.boundary_ == b.boundary_ && a.simplices_ == b.simplices_ && a.coords_ == b.coords_;
  }

 private:
  void index_simplices();

  std::vector<BitMatrix> boundary_;
  CellKind kind_ = CellKind::General;
  std::vector<std::vector<Simplex>> simplices_;
  std::vector<std::unordered_map<Simplex, Index, SimplexHash>> lookup_;
  std::optional<std::vector<Point>> coords_;
};

/// k-chain (or cochain) on a complex.
struct ChainVector {
  int dim = 0;
  BitVector vector;
};

// ---- generators ----------------------------------------------------------

/// L-periodic cubical n-torus. k-cells are ordered by direction set
/// (lexicographic on the sorted direction list), then by base coordinate
/// (first axis most significant).
CellComplex cubical_torus(int n, int L);

/// Description of a cubical-torus cell: directions spanned and base point.
struct CubicalCell {
  std::vector<int> directions;
  std::vector<int> base;
};
std::vector<CubicalCell> cubical_cells(int n, int L, int k);

/// L x L periodic grid with each square cut along its main diagonal (L >= 3).
CellComplex triangulated_torus(int L);
/// Boundary of the octahedron (a triangulated 2-sphere).
CellComplex octahedron_sphere();
/// n-cycle with vertices on a circle, unit edge length.
CellComplex cycle_complex(std::size_t n);
/// Seeded random connected 2-complex: a strip-grown surface patch with the
/// given number of triangles and max vertex degree bound (counting edges and
/// triangles).
CellComplex random_connected_2complex(std::size_t triangles, std::size_t max_degree, std::uint64_t seed);

// ---- homology and codes --------------------------------------------------

CssCode code_from_complex(const CellComplex& x, int k);
std::size_t homology_dim(const CellComplex& x, int k);

/// Systole / cosystole. A trivial (empty) homology group yields an empty
/// weight; value() applies the sys = 0 convention.
struct SystoleResult {
  std::optional<std::size_t> weight;
  ChainVector witness;
  bool exact = true;

  bool trivial() const { return !weight.has_value(); }
  std::size_t value() const { return weight.value_or(0); }
};

SystoleResult systole(const CellComplex& x, int k, const SearchBudget& budget = {});
SystoleResult cosystole(const CellComplex& x, int k, const SearchBudget& budget = {});

/// True if `cycle` (a k-chain) is a boundary in x.
bool is_boundary(const CellComplex& x, const ChainVector& cycle);

// ---- subdivisions --------------------------------------------------------

/// Position of a subdivision vertex inside the parent complex, as integer
/// barycentric numerators over a common denominator on parent vertices.
struct Carrier {
  std::vector<Index> vertices;
  std::vector<std::uint32_t> numerators;
  std::uint32_t denominator = 1;

  friend bool operator==(const Carrier&, const Carrier&) = default;
};

struct Subdivision {
  CellComplex complex;
  std::uint32_t factor = 1;  // edgewise factor (1 for barycentric)
  std::vector<Carrier> carriers;  // per new vertex

  /// Smallest parent simplex containing a new cell, given its vertices.
  Simplex carrier_simplex(const Simplex& cell) const;
};

Subdivision barycentric_subdivide(const CellComplex& x);
Subdivision edgewise_subdivide(const CellComplex& x, std::uint32_t r);

/// Integer points of the r-fold edgewise subdivision of a d-simplex with
/// ordered vertices, as barycentric numerator tuples, and its top simplices.
std::vector<std::vector<std::vector<std::uint32_t>>> edgewise_pieces(int d, std::uint32_t r);

/// Locates a point given by barycentric coordinates on a parent simplex of
/// dimension d within the r-fold edgewise subdivision. Returns the piece's
/// vertex numerator tuples and the barycentric weights on them.
struct PieceLocation {
  std::vector<std::vector<std::uint32_t>> vertices;
  std::vector<double> weights;
};
PieceLocation locate_in_edgewise(const std::vector<double>& barycentric, std::uint32_t r);

// ---- manifolds and duality -----------------------------------------------

/// Combinatorial closed-manifold check: every (d-1)-cell lies in exactly two
/// d-cells and (for d <= 3) every vertex link is connected.
bool is_closed_manifold(const CellComplex& x, std::string* why = nullptr);

/// Dual cell structure of a closed triangulated d-manifold. The dual p-cell
/// with index i is dual to the primal (d-p)-simplex with index i. Incidence
/// is derived from vertex-set containment.
class DualStructure {
 public:
  explicit DualStructure(const CellComplex& x);

  int dims() const { return d_; }
  std::size_t cells(int p) const;
  const BitMatrix& boundary(int p) const { return boundary_.at(static_cast<std::size_t>(p)); }

 private:
  int d_;
  std::vector<BitMatrix> boundary_;
};

/// D(z): the dual (d-k)-chain crossing the support of a k-cochain z.
ChainVector dual_chain(const CellComplex& x, const ChainVector& cochain);

/// Geometric comparison of primal and dual chains inside the barycentric
/// subdivision, where both structures are subcomplexes.
class SubdivisionChains {
 public:
  explicit SubdivisionChains(const CellComplex& x);

  const Subdivision& subdivision() const { return sd_; }
  /// Chain of sd(x) carried by a primal chain.
  BitVector primal(const ChainVector& c) const;
  /// Chain of sd(x) carried by a dual chain of dimension p.
  BitVector dual(int p, const BitVector& w) const;
  /// Index in sd(x) of the vertex standing for the barycenter of a simplex.
  Index barycenter(int dim, Index simplex) const { return bary_.at(static_cast<std::size_t>(dim)).at(simplex); }
  const CellComplex& base() const { return x_; }

 private:
  const CellComplex& x_;
  Subdivision sd_;
  std::vector<std::vector<Index>> bary_;
};

/// Projection of a dual cycle onto the primal triangulation.
struct Projection {
  ChainVector chain;   // primal (d-k)-chain
  double volume_ratio = 0.0;  // vol(P) / vol(w), 0 when w is empty
};

/// Pushes a dual (d-k)-cycle off the interiors of all simplices of dimension
/// > d-k, highest dimension first, replacing each interior piece cone(b, rho)
/// by a minimal filling of rho in the subdivided boundary sphere. The result
/// is homologous to w inside sd(x).
Projection project_to_triangulation(const CellComplex& x, int dual_dim, const BitVector& w);

// ---- pullback --------------------------------------------------------------

struct Pullback {
  CellComplex complex;
  std::vector<Index> map;  // vertex map into the subdivided target
};

/// Pulls the edgewise subdivision of x back along a simplicial map f: m -> x.
/// `f` maps vertices of m to vertices of x; m has dimension <= 2.
Pullback subdivide_pullback(const CellComplex& m, const std::vector<Index>& f, const CellComplex& x,
                            const Subdivision& x_subdivided);

/// Checks that a vertex map sends every simplex of `from` onto a simplex of `to`.
bool is_simplicial_map(const CellComplex& from, const std::vector<Index>& f, const CellComplex& to);

}  // namespace lqc
