#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "lqc/code.hpp"
#include "lqc/complex.hpp"
#include "lqc/embed.hpp"

namespace lqc {

class LatticeExhausted : public ComplexError {
 public:
  using ComplexError::ComplexError;
};
class CubeTooSmall : public ComplexError {
 public:
  using ComplexError::ComplexError;
};

using LatticePoint = std::vector<std::int64_t>;

/// Per-qubit lattice points in Z^n.
struct Placement {
  int n = 0;
  std::vector<LatticePoint> points;

  friend bool operator==(const Placement&, const Placement&) = default;
};

struct LocalityCertificate {
  bool injective = true;
  std::size_t check_constant = 0;  // max l1 distance over check-sharing qubit pairs
  double cube_constant = 0.0;      // max l1 norm / size^(1/n)
  std::int64_t max_norm = 0;
  bool cube_flagged = false;  // cube_constant above the limit
  int n = 0;
  std::size_t size = 0;
  std::pair<Index, Index> worst_pair{0, 0};
};

/// Code on the k-cells of x for 0 < k <= dims: code_from_complex when k <
/// dims, otherwise the boundary map with no second check matrix.
CssCode cell_code(const CellComplex& x, int k);

/// Coordinatewise fold |x - L/2| of a point of the L-periodic torus.
std::vector<double> fold_point(const std::vector<double>& x, int L);

/// Fold placement of toric_code(n, L, k). A k-cell with base b and direction
/// set S sits at doubled coordinates c = 2b + [j in S] on the 2L-periodic
/// circle, and is placed at p_j = 2|c_j - L| + [c_j >= L].
Placement fold_torus(int n, int L, int k = 1);

/// Snaps image barycenters of qubits to an eps-lattice, taking the nearest
/// unoccupied point in qubit order. Qubits are the k-simplices of the
/// subdivision e.complex() when c has that many qubits, otherwise the
/// k-simplices of the base complex x, whose image barycenter is the mean of
/// the images of the subdivision vertices they carry. Points are returned in
/// units of eps. Throws LatticeExhausted when no free point lies within
/// distance 1 of a barycenter, after one retry with eps / 2.
Placement placement_from_embedding(const CssCode& c, const CellComplex& x, int k, const EmbeddedComplex& e,
                                   double eps = 0.25);

/// Direct sum of c with a path block (qubits on the edges of a path, checks
/// on its vertices, so no logical qubits) bringing the size to target_volume.
/// Pad qubits follow a serpentine through the slab of the cube [0, side)^n
/// beyond the existing points, side = ceil(2 target_volume^(1/n)).
std::pair<CssCode, Placement> pad_code(const CssCode& c, const Placement& p, std::size_t target_volume);

/// The path block alone.
CssCode path_block(std::size_t qubits);

LocalityCertificate certify_local(const CssCode& c, const Placement& p, double cube_limit = 8.0);
LocalityCertificate certify_local_serial(const CssCode& c, const Placement& p, double cube_limit = 8.0);

}  // namespace lqc
