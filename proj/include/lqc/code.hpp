#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lqc/f2.hpp"
#include "lqc/graph.hpp"

namespace lqc {

/// CSS code as a three-term chain complex C2 -> C1 -> C0.
///
/// `h1` (m0 x q) is the boundary map C1 -> C0. `h2` (m2 x q) is stored in
/// check-matrix orientation: its rows are the distinguished generators of
/// C2, so the chain map C2 -> C1 is transpose(h2). The chain condition reads
/// h1 * transpose(h2) = 0.
struct CssCode {
  BitMatrix h1;
  BitMatrix h2;
  std::vector<std::string> labels;

  std::size_t size() const { return h1.cols(); }
};

struct ChainViolation {
  enum class Kind { ShapeMismatch, ChainCondition } kind = Kind::ChainCondition;
  std::size_t h1_row = 0;
  std::size_t h2_row = 0;
  std::string message;
};

class ChainConditionViolated : public std::runtime_error {
 public:
  explicit ChainConditionViolated(const ChainViolation& v) : std::runtime_error(v.message), violation(v) {}
  ChainViolation violation;
};

/// Returns the first offending (h1 row, h2 row) pair in row-major order, or
/// nullopt when the code is a valid chain complex.
std::optional<ChainViolation> validate(const CssCode& c);
void require_valid(const CssCode& c);

struct CodeReport {
  std::size_t size = 0;
  std::size_t dim = 0;
  std::optional<std::size_t> d_x;  // empty = infinity (no logical operators)
  std::optional<std::size_t> d_z;
  std::optional<std::size_t> d;
  std::size_t ldpc_degree = 0;
  bool d_x_exact = true;
  bool d_z_exact = true;
  BitVector x_witness;
  BitVector z_witness;

  bool exact() const { return d_x_exact && d_z_exact; }
};

CodeReport report(const CssCode& c, const SearchBudget& budget = {});

/// Two qubits are adjacent when some row of h1 or h2 touches both.
Graph check_graph(const CssCode& c);

/// Toric code on the L-periodic cubical n-torus with qubits on k-cells.
CssCode toric_code(int n, int L, int k = 1);

/// Hypergraph product of two classical parity-check matrices.
CssCode hypergraph_product(const BitMatrix& a, const BitMatrix& b);

/// Direct sum (block-diagonal) of two codes.
CssCode direct_sum(const CssCode& a, const CssCode& b);

// Classical generators used as pipeline inputs.
BitMatrix repetition_checks(std::size_t n);  // (n-1) x n path checks
BitMatrix cycle_checks(std::size_t n);       // n x n cyclic checks
BitMatrix hamming_checks(std::size_t r);     // r x (2^r - 1), column j = binary(j+1)

}  // namespace lqc
