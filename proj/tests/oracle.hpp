#pragma once

// Independent reference computations for tests: dense 0/1 matrices, plain
// Gaussian elimination and exhaustive enumeration. Nothing here calls into
// the library's linear algebra.

#include <cstdint>
#include <optional>
#include <vector>

#include "lqc/f2.hpp"

namespace oracle {

using Dense = std::vector<std::vector<int>>;

inline Dense dense(const lqc::BitMatrix& m) {
  Dense d(m.rows(), std::vector<int>(m.cols(), 0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (auto j : m.row(i)) d[i][j] = 1;
  return d;
}

inline std::size_t rank(Dense a) {
  std::size_t r = 0;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && !a[p][c]) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = 0; i < a.size(); ++i)
      if (i != r && a[i][c])
        for (std::size_t k = 0; k < cols; ++k) a[i][k] ^= a[r][k];
    ++r;
  }
  return r;
}

inline std::vector<int> bits(std::uint64_t x, std::size_t n) {
  std::vector<int> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = (x >> i) & 1u;
  return v;
}

inline bool in_kernel(const Dense& h, const std::vector<int>& v) {
  for (const auto& row : h) {
    int s = 0;
    for (std::size_t j = 0; j < v.size(); ++j) s ^= row[j] & v[j];
    if (s) return false;
  }
  return true;
}

inline bool in_rowspace(const Dense& g, const std::vector<int>& v) {
  Dense a = g;
  std::size_t r0 = rank(a);
  a.push_back(v);
  return rank(a) == r0;
}

/// Min weight of v with h v = 0 and v outside rowspace(g); nullopt if none.
/// Exhaustive over all 2^q vectors.
inline std::optional<std::size_t> min_logical(const lqc::BitMatrix& h, const lqc::BitMatrix& g) {
  const std::size_t q = h.cols();
  Dense hd = dense(h), gd = dense(g);
  std::optional<std::size_t> best;
  for (std::uint64_t x = 1; x < (std::uint64_t{1} << q); ++x) {
    auto w = static_cast<std::size_t>(__builtin_popcountll(x));
    if (best && w >= *best) continue;
    auto v = bits(x, q);
    if (in_kernel(hd, v) && !in_rowspace(gd, v)) best = w;
  }
  return best;
}

/// Dimension of ker(h)/rowspace(g) by explicit enumeration of the kernel.
inline std::size_t quotient_dim(const lqc::BitMatrix& h, const lqc::BitMatrix& g) {
  const std::size_t q = h.cols();
  Dense hd = dense(h);
  Dense basis = dense(g);
  std::size_t r0 = rank(basis);
  std::size_t kernel_count = 0;
  Dense kernel_vecs;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << q); ++x) {
    auto v = bits(x, q);
    if (in_kernel(hd, v)) {
      ++kernel_count;
      kernel_vecs.push_back(v);
    }
  }
  Dense all = basis;
  for (auto& v : kernel_vecs) all.push_back(v);
  return rank(all) - r0;
}

}  // namespace oracle
