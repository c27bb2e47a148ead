// Minimum-weight search over a quotient space span(K) / span(I).
//
// The kernel is re-based as [image echelon rows | quotient representatives].
// Walking combined indices i in [2^r, 2^(r+t)) in Gray-code order visits every
// element of span(K) \ span(I) exactly once, because the quotient coordinates
// of gray(i) are gray(i >> r), which vanish only for i < 2^r.

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <random>

#include <omp.h>

#include "lqc/detail/packed.hpp"
#include "lqc/f2.hpp"

namespace lqc {

using detail::Words;

namespace {

struct Prepared {
  std::size_t bits = 0;
  std::vector<Words> basis;  // image rows first, then quotient reps
  std::size_t r = 0;         // image rank
  std::size_t t = 0;         // quotient dimension
  detail::Echelon image{0};
};

Prepared prepare(std::span<const BitVector> kernel, std::span<const BitVector> image) {
  Prepared p;
  if (!kernel.empty())
    p.bits = kernel.front().len();
  else if (!image.empty())
    p.bits = image.front().len();
  for (const auto& v : kernel)
    if (v.len() != p.bits) throw F2Error("coset search: vector length mismatch");
  for (const auto& v : image)
    if (v.len() != p.bits) throw F2Error("coset search: vector length mismatch");

  detail::Echelon kern(p.bits);
  for (const auto& v : kernel) kern.insert(v.to_words());
  p.image = detail::Echelon(p.bits);
  for (const auto& v : image) {
    Words w = v.to_words();
    if (!kern.reduce(w)) throw ImageNotContained();
    p.image.insert(v.to_words());
  }
  p.r = p.image.rank();
  p.basis = p.image.rows();
  detail::Echelon running = p.image;
  for (const auto& v : kernel)
    if (running.insert(v.to_words())) p.basis.push_back(v.to_words());
  p.t = p.basis.size() - p.r;
  return p;
}

struct Best {
  std::size_t weight = static_cast<std::size_t>(-1);
  Words words;

  void offer(std::size_t w, const Words& v) {
    if (w < weight || (w == weight && detail::lex_less(v, words))) {
      weight = w;
      words = v;
    }
  }
  void merge(const Best& o) {
    if (o.weight != static_cast<std::size_t>(-1)) offer(o.weight, o.words);
  }
};

bool exact_feasible(const Prepared& p, const SearchBudget& b) {
  return p.t <= b.exact_qubits && p.r + p.t <= b.exact_log2 && p.r + p.t < 63;
}

template <std::size_t NW>
Best scan_chunk_fixed(const Prepared& p, std::uint64_t begin, std::uint64_t end) {
  std::vector<std::array<std::uint64_t, NW>> basis(p.basis.size());
  for (std::size_t k = 0; k < p.basis.size(); ++k)
    for (std::size_t w = 0; w < NW; ++w) basis[k][w] = p.basis[k][w];

  std::array<std::uint64_t, NW> v{};
  std::uint64_t g = begin ^ (begin >> 1);
  for (std::size_t k = 0; g; ++k, g >>= 1)
    if (g & 1u)
      for (std::size_t w = 0; w < NW; ++w) v[w] ^= basis[k][w];

  std::size_t best_w = static_cast<std::size_t>(-1);
  std::array<std::uint64_t, NW> best{};
  auto consider = [&]() {
    std::size_t wt = 0;
    for (std::size_t w = 0; w < NW; ++w) wt += static_cast<std::size_t>(std::popcount(v[w]));
    if (wt > best_w) return;
    if (wt == best_w) {
      bool less = false;
      for (std::size_t w = 0; w < NW; ++w) {
        std::uint64_t d = v[w] ^ best[w];
        if (d) {
          less = (v[w] >> std::countr_zero(d)) & 1u;
          break;
        }
      }
      if (!less) return;
    }
    best_w = wt;
    best = v;
  };
  consider();
  for (std::uint64_t i = begin + 1; i < end; ++i) {
    const auto& b = basis[static_cast<std::size_t>(std::countr_zero(i))];
    for (std::size_t w = 0; w < NW; ++w) v[w] ^= b[w];
    consider();
  }
  Best out;
  if (best_w != static_cast<std::size_t>(-1)) {
    out.weight = best_w;
    out.words.assign(best.begin(), best.end());
  }
  return out;
}

Best scan_chunk_dynamic(const Prepared& p, std::uint64_t begin, std::uint64_t end) {
  const std::size_t nw = detail::word_count(p.bits);
  Words v(nw, 0);
  std::uint64_t g = begin ^ (begin >> 1);
  for (std::size_t k = 0; g; ++k, g >>= 1)
    if (g & 1u) detail::xor_into(v, p.basis[k]);
  Best best;
  best.offer(detail::popcount(v), v);
  for (std::uint64_t i = begin + 1; i < end; ++i) {
    detail::xor_into(v, p.basis[static_cast<std::size_t>(std::countr_zero(i))]);
    best.offer(detail::popcount(v), v);
  }
  return best;
}

Best scan_chunk(const Prepared& p, std::uint64_t begin, std::uint64_t end) {
  switch (detail::word_count(p.bits)) {
    case 1: return scan_chunk_fixed<1>(p, begin, end);
    case 2: return scan_chunk_fixed<2>(p, begin, end);
    case 3: return scan_chunk_fixed<3>(p, begin, end);
    case 4: return scan_chunk_fixed<4>(p, begin, end);
    default: return scan_chunk_dynamic(p, begin, end);
  }
}

Best exact_parallel(const Prepared& p) {
  const std::uint64_t lo = std::uint64_t{1} << p.r;
  const std::uint64_t hi = std::uint64_t{1} << (p.r + p.t);
  const std::uint64_t total = hi - lo;
  const std::uint64_t chunk = std::max<std::uint64_t>(std::uint64_t{1} << 14, total / 4096);
  const auto nchunks = static_cast<std::int64_t>((total + chunk - 1) / chunk);
  std::vector<Best> partial(static_cast<std::size_t>(nchunks));
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t c = 0; c < nchunks; ++c) {
    std::uint64_t b = lo + static_cast<std::uint64_t>(c) * chunk;
    std::uint64_t e = std::min(hi, b + chunk);
    partial[static_cast<std::size_t>(c)] = scan_chunk(p, b, e);
  }
  Best best;
  for (const auto& b : partial) best.merge(b);
  return best;
}

// Reference: every element rebuilt from its coefficient vector.
Best exact_serial(const Prepared& p) {
  const std::size_t nw = detail::word_count(p.bits);
  Best best;
  for (std::uint64_t c = 1; c < (std::uint64_t{1} << p.t); ++c) {
    for (std::uint64_t j = 0; j < (std::uint64_t{1} << p.r); ++j) {
      Words v(nw, 0);
      for (std::size_t k = 0; k < p.r; ++k)
        if ((j >> k) & 1u) detail::xor_into(v, p.basis[k]);
      for (std::size_t k = 0; k < p.t; ++k)
        if ((c >> k) & 1u) detail::xor_into(v, p.basis[p.r + k]);
      best.offer(detail::popcount(v), v);
    }
  }
  return best;
}

std::vector<std::size_t> rref_in_order(std::vector<Words>& rows, const std::vector<std::size_t>& order) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c : order) {
    if (r == rows.size()) break;
    std::size_t p = r;
    while (p < rows.size() && !detail::test_bit(rows[p], c)) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != r && detail::test_bit(rows[i], c)) detail::xor_into(rows[i], rows[r]);
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

// Randomized information-set search: each round row-reduces the kernel basis
// under a random column order and keeps rows (and pairwise sums) outside the image.
Best heuristic(const Prepared& p, const SearchBudget& budget) {
  Best best;
  auto offer = [&](const Words& v) {
    Words w = v;
    if (p.image.reduce(w)) return;
    best.offer(detail::popcount(v), v);
  };
  for (std::size_t k = p.r; k < p.basis.size(); ++k) offer(p.basis[k]);

  std::vector<std::size_t> order(p.bits);
  std::iota(order.begin(), order.end(), 0);
  for (std::size_t it = 0; it < budget.heuristic_iterations; ++it) {
    std::seed_seq seq{budget.seed, static_cast<std::uint64_t>(it), std::uint64_t{0x5eed}};
    std::mt19937_64 rng(seq);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<Words> rows = p.basis;
    rref_in_order(rows, order);
    for (const auto& v : rows) offer(v);
    if (rows.size() <= 96) {
      for (std::size_t a = 0; a < rows.size(); ++a)
        for (std::size_t b = a + 1; b < rows.size(); ++b) {
          Words v = rows[a];
          detail::xor_into(v, rows[b]);
          offer(v);
        }
    }
  }
  return best;
}

CosetWeight finish(const Prepared& p, const Best& best, bool exact) {
  CosetWeight out;
  out.exact = exact;
  out.quotient_dim = p.t;
  out.weight = best.weight;
  out.witness = BitVector::from_words(p.bits, best.words);
  return out;
}

CosetWeight trivial(const Prepared& p) {
  CosetWeight out;
  out.witness = BitVector(p.bits);
  out.quotient_dim = 0;
  return out;
}

}  // namespace

CosetWeight min_coset_weight(std::span<const BitVector> kernel_basis, std::span<const BitVector> image_basis,
                             const SearchBudget& budget) {
  Prepared p = prepare(kernel_basis, image_basis);
  if (p.t == 0) return trivial(p);
  if (!exact_feasible(p, budget)) return finish(p, heuristic(p, budget), false);
  if (!budget.parallel) {
    const std::uint64_t lo = std::uint64_t{1} << p.r;
    return finish(p, scan_chunk(p, lo, std::uint64_t{1} << (p.r + p.t)), true);
  }
  return finish(p, exact_parallel(p), true);
}

CosetWeight min_coset_weight_serial(std::span<const BitVector> kernel_basis, std::span<const BitVector> image_basis,
                                    const SearchBudget& budget) {
  Prepared p = prepare(kernel_basis, image_basis);
  if (p.t == 0) return trivial(p);
  if (!exact_feasible(p, budget)) throw F2Error("serial reference: instance exceeds exact budget");
  return finish(p, exact_serial(p), true);
}

}  // namespace lqc
