#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace lqc {

using Index = std::uint32_t;

class F2Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Image span is not a subspace of the kernel span handed to a coset search.
class ImageNotContained : public F2Error {
 public:
  ImageNotContained() : F2Error("image span is not contained in kernel span") {}
};

/// Sparse vector over the two-element field. The support is kept strictly
/// sorted; that sorted list is the canonical interchange form.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t len) : len_(len) {}
  BitVector(std::size_t len, std::vector<Index> support);

  static BitVector from_words(std::size_t len, std::span<const std::uint64_t> words);

  std::size_t len() const { return len_; }
  std::size_t weight() const { return support_.size(); }
  bool empty() const { return support_.empty(); }
  const std::vector<Index>& support() const { return support_; }
  bool test(Index i) const;

  std::vector<std::uint64_t> to_words() const;

  BitVector operator^(const BitVector& other) const;
  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  std::size_t len_ = 0;
  std::vector<Index> support_;
};

/// Sparse matrix over the two-element field stored as per-row sorted supports.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);
  BitMatrix(std::size_t rows, std::size_t cols, std::vector<std::vector<Index>> row_support);

  static BitMatrix identity(std::size_t n);
  static BitMatrix from_rows(std::size_t cols, std::span<const BitVector> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::vector<Index>& row(std::size_t i) const { return row_support_[i]; }
  const std::vector<std::vector<Index>>& row_support() const { return row_support_; }
  BitVector row_vector(std::size_t i) const { return BitVector(cols_, row_support_[i]); }
  std::vector<BitVector> row_vectors() const;
  bool get(std::size_t i, Index j) const;
  std::size_t nnz() const;

  BitMatrix transpose() const;
  BitVector operator*(const BitVector& v) const;
  BitMatrix operator*(const BitMatrix& other) const;
  bool is_zero() const { return nnz() == 0; }

  std::size_t max_row_weight() const;
  std::size_t max_col_weight() const;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::vector<Index>> row_support_;
};

std::size_t rank(const BitMatrix& m);
std::size_t rank(std::span<const BitVector> vectors);
std::vector<BitVector> nullspace_basis(const BitMatrix& m);

/// True when every vector of `sub` lies in span(`super`).
bool span_contains(std::span<const BitVector> super, std::span<const BitVector> sub);

/// Solves m·x = b. Returns nullopt when b is not in the column space.
std::optional<BitVector> solve(const BitMatrix& m, const BitVector& b);

struct SearchBudget {
  /// Exact enumeration runs when the quotient dimension is at most this.
  std::size_t exact_qubits = 24;
  /// ...and when the full enumeration (kernel dimension) has at most 2^exact_log2 elements.
  std::size_t exact_log2 = 32;
  /// Information-set rounds in heuristic mode.
  std::size_t heuristic_iterations = 400;
  std::uint64_t seed = 1;
  bool parallel = true;
};

/// Result of a minimum-weight coset search. `weight` is empty when the
/// quotient is trivial (the "infinity" marker).
struct CosetWeight {
  std::optional<std::size_t> weight;
  BitVector witness;
  bool exact = true;
  std::size_t quotient_dim = 0;

  bool infinite() const { return !weight.has_value(); }
};

/// Minimum Hamming weight over span(kernel) \ span(image). Ties are broken by
/// the lexicographically smallest support. Uses the OpenMP kernel when
/// budget.parallel is set; results are identical either way.
CosetWeight min_coset_weight(std::span<const BitVector> kernel_basis,
                             std::span<const BitVector> image_basis,
                             const SearchBudget& budget = {});

/// Single-threaded reference for the exact enumeration, kept for testing and
/// benchmarking. Throws if the instance exceeds the exact budget.
CosetWeight min_coset_weight_serial(std::span<const BitVector> kernel_basis,
                                    std::span<const BitVector> image_basis,
                                    const SearchBudget& budget = {});

/// Lexicographic order on supports (for equal-weight tie-breaking).
bool support_less(const BitVector& a, const BitVector& b);

}  // namespace lqc
