#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "lqc/f2.hpp"

namespace lqc::detail {

using Words = std::vector<std::uint64_t>;

inline std::size_t word_count(std::size_t bits) { return (bits + 63) / 64; }

inline Words pack(const BitVector& v) { return v.to_words(); }

inline bool test_bit(const Words& w, std::size_t i) { return (w[i >> 6] >> (i & 63)) & 1u; }
inline void flip_bit(Words& w, std::size_t i) { w[i >> 6] ^= std::uint64_t{1} << (i & 63); }

inline void xor_into(Words& dst, const Words& src) {
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] ^= src[i];
}

inline std::size_t popcount(const Words& w) {
  std::size_t c = 0;
  for (auto x : w) c += static_cast<std::size_t>(std::popcount(x));
  return c;
}

inline bool is_zero(const Words& w) {
  for (auto x : w)
    if (x) return false;
  return true;
}

inline long lowest_bit(const Words& w) {
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i]) return static_cast<long>(i * 64 + std::countr_zero(w[i]));
  return -1;
}

/// Equal-weight tie-break: the vector owning the lowest differing bit wins.
inline bool lex_less(const Words& a, const Words& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::uint64_t d = a[i] ^ b[i];
    if (d) return (a[i] >> std::countr_zero(d)) & 1u;
  }
  return false;
}

/// Incrementally built echelon basis. Rows are reduced against all earlier
/// rows, so sequential reduction in insertion order is exact.
class Echelon {
 public:
  explicit Echelon(std::size_t bits) : words_(word_count(bits)) {}

  /// Reduces v in place; returns true if v ends up zero.
  bool reduce(Words& v) const {
    for (std::size_t k = 0; k < rows_.size(); ++k)
      if (test_bit(v, pivots_[k])) xor_into(v, rows_[k]);
    return is_zero(v);
  }

  /// Adds v if independent. Returns true when the rank grew.
  bool insert(Words v) {
    if (reduce(v)) return false;
    pivots_.push_back(static_cast<std::size_t>(lowest_bit(v)));
    rows_.push_back(std::move(v));
    return true;
  }

  std::size_t rank() const { return rows_.size(); }
  const std::vector<Words>& rows() const { return rows_; }
  std::size_t words() const { return words_; }

 private:
  std::size_t words_;
  std::vector<Words> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace lqc::detail
