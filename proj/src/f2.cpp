#include "lqc/f2.hpp"

#include <algorithm>

#include "lqc/detail/packed.hpp"

namespace lqc {

using detail::Words;

BitVector::BitVector(std::size_t len, std::vector<Index> support) : len_(len), support_(std::move(support)) {
  std::sort(support_.begin(), support_.end());
  if (std::adjacent_find(support_.begin(), support_.end()) != support_.end())
    throw F2Error("BitVector support has duplicate indices");
  if (!support_.empty() && support_.back() >= len_) throw F2Error("BitVector index out of range");
}

BitVector BitVector::from_words(std::size_t len, std::span<const std::uint64_t> words) {
  BitVector v(len);
  for (std::size_t w = 0; w < words.size(); ++w) {
    std::uint64_t x = words[w];
    while (x) {
      auto b = static_cast<std::size_t>(std::countr_zero(x));
      std::size_t i = w * 64 + b;
      if (i < len) v.support_.push_back(static_cast<Index>(i));
      x &= x - 1;
    }
  }
  return v;
}

bool BitVector::test(Index i) const { return std::binary_search(support_.begin(), support_.end(), i); }

std::vector<std::uint64_t> BitVector::to_words() const {
  Words w(detail::word_count(len_), 0);
  for (Index i : support_) detail::flip_bit(w, i);
  return w;
}

BitVector BitVector::operator^(const BitVector& other) const {
  if (other.len_ != len_) throw F2Error("BitVector length mismatch");
  BitVector out(len_);
  std::set_symmetric_difference(support_.begin(), support_.end(), other.support_.begin(), other.support_.end(),
                                std::back_inserter(out.support_));
  return out;
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), row_support_(rows) {}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols, std::vector<std::vector<Index>> row_support)
    : rows_(rows), cols_(cols), row_support_(std::move(row_support)) {
  if (row_support_.size() != rows_) throw F2Error("BitMatrix row count mismatch");
  for (auto& r : row_support_) {
    std::sort(r.begin(), r.end());
    if (std::adjacent_find(r.begin(), r.end()) != r.end()) throw F2Error("BitMatrix row has duplicate column");
    if (!r.empty() && r.back() >= cols_) throw F2Error("BitMatrix column index out of range");
  }
}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.row_support_[i].push_back(static_cast<Index>(i));
  return m;
}

BitMatrix BitMatrix::from_rows(std::size_t cols, std::span<const BitVector> rows) {
  BitMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].len() != cols) throw F2Error("row length mismatch");
    m.row_support_[i] = rows[i].support();
  }
  return m;
}

std::vector<BitVector> BitMatrix::row_vectors() const {
  std::vector<BitVector> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row_vector(i));
  return out;
}

bool BitMatrix::get(std::size_t i, Index j) const {
  const auto& r = row_support_[i];
  return std::binary_search(r.begin(), r.end(), j);
}

std::size_t BitMatrix::nnz() const {
  std::size_t n = 0;
  for (const auto& r : row_support_) n += r.size();
  return n;
}

BitMatrix BitMatrix::transpose() const {
  BitMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (Index j : row_support_[i]) t.row_support_[j].push_back(static_cast<Index>(i));
  return t;
}

BitVector BitMatrix::operator*(const BitVector& v) const {
  if (v.len() != cols_) throw F2Error("matrix-vector shape mismatch");
  Words w = v.to_words();
  std::vector<Index> out;
  for (std::size_t i = 0; i < rows_; ++i) {
    bool bit = false;
    for (Index j : row_support_[i]) bit ^= detail::test_bit(w, j);
    if (bit) out.push_back(static_cast<Index>(i));
  }
  return BitVector(rows_, std::move(out));
}

BitMatrix BitMatrix::operator*(const BitMatrix& other) const {
  if (cols_ != other.rows_) throw F2Error("matrix-matrix shape mismatch");
  BitMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Words acc(detail::word_count(other.cols_), 0);
    for (Index k : row_support_[i])
      for (Index j : other.row_support_[k]) detail::flip_bit(acc, j);
    out.row_support_[i] = BitVector::from_words(other.cols_, acc).support();
  }
  return out;
}

std::size_t BitMatrix::max_row_weight() const {
  std::size_t w = 0;
  for (const auto& r : row_support_) w = std::max(w, r.size());
  return w;
}

std::size_t BitMatrix::max_col_weight() const {
  std::vector<std::size_t> c(cols_, 0);
  for (const auto& r : row_support_)
    for (Index j : r) ++c[j];
  return c.empty() ? 0 : *std::max_element(c.begin(), c.end());
}

namespace {

std::vector<Words> pack_rows(const BitMatrix& m, std::size_t extra_bits = 0) {
  std::vector<Words> rows;
  rows.reserve(m.rows());
  const std::size_t nw = detail::word_count(m.cols() + extra_bits);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Words w(nw, 0);
    for (Index j : m.row(i)) detail::flip_bit(w, j);
    rows.push_back(std::move(w));
  }
  return rows;
}

// Reduced row echelon form in place over the first `cols` columns; returns pivot columns.
std::vector<std::size_t> rref(std::vector<Words>& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && !detail::test_bit(rows[p], c)) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != r && detail::test_bit(rows[i], c)) detail::xor_into(rows[i], rows[r]);
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const BitMatrix& m) {
  detail::Echelon e(m.cols());
  for (auto& w : pack_rows(m)) e.insert(std::move(w));
  return e.rank();
}

std::size_t rank(std::span<const BitVector> vectors) {
  if (vectors.empty()) return 0;
  detail::Echelon e(vectors.front().len());
  for (const auto& v : vectors) e.insert(v.to_words());
  return e.rank();
}

std::vector<BitVector> nullspace_basis(const BitMatrix& m) {
  auto rows = pack_rows(m);
  auto pivots = rref(rows, m.cols());
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<BitVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Index> supp{static_cast<Index>(f)};
    for (std::size_t i = 0; i < pivots.size(); ++i)
      if (detail::test_bit(rows[i], f)) supp.push_back(static_cast<Index>(pivots[i]));
    basis.emplace_back(m.cols(), std::move(supp));
  }
  return basis;
}

bool span_contains(std::span<const BitVector> super, std::span<const BitVector> sub) {
  if (sub.empty()) return true;
  detail::Echelon e(sub.front().len());
  for (const auto& v : super) e.insert(v.to_words());
  for (const auto& v : sub) {
    Words w = v.to_words();
    if (!e.reduce(w)) return false;
  }
  return true;
}

std::optional<BitVector> solve(const BitMatrix& m, const BitVector& b) {
  if (b.len() != m.rows()) throw F2Error("solve: rhs length mismatch");
  // Work on the transpose system rows = equations with an augmented column.
  auto rows = pack_rows(m, 1);
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (b.test(static_cast<Index>(i))) detail::flip_bit(rows[i], m.cols());
  auto pivots = rref(rows, m.cols());
  for (std::size_t i = pivots.size(); i < rows.size(); ++i)
    if (detail::test_bit(rows[i], m.cols())) return std::nullopt;
  std::vector<Index> x;
  for (std::size_t i = 0; i < pivots.size(); ++i)
    if (detail::test_bit(rows[i], m.cols())) x.push_back(static_cast<Index>(pivots[i]));
  return BitVector(m.cols(), std::move(x));
}

bool support_less(const BitVector& a, const BitVector& b) {
  return std::lexicographical_compare(a.support().begin(), a.support().end(), b.support().begin(),
                                      b.support().end());
}

}  // namespace lqc
