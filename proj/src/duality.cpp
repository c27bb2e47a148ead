#include <algorithm>
#include <map>
#include <set>

#include "lqc/complex.hpp"

namespace lqc {

namespace {

void require_manifold(const CellComplex& x) {
  std::string why;
  if (!is_closed_manifold(x, &why)) throw NotClosedManifold("not a closed manifold: " + why);
}

}  // namespace

DualStructure::DualStructure(const CellComplex& x) : d_(x.dims()) {
  require_manifold(x);
  // Dual p-cell i <-> primal (d-p)-simplex i; its boundary is the set of
  // dual (p-1)-cells whose primal simplex has one more vertex and contains it.
  boundary_.emplace_back(0, x.cells(d_));
  for (int p = 1; p <= d_; ++p) {
    const int k = d_ - p;  // primal dim of dual p-cells
    std::vector<std::vector<Index>> rows(x.cells(k + 1));
    for (Index j = 0; j < x.cells(k + 1); ++j) {
      const Simplex& big = x.simplex(k + 1, j);
      for (std::size_t drop = 0; drop < big.size(); ++drop) {
        Simplex face;
        for (std::size_t i = 0; i < big.size(); ++i)
          if (i != drop) face.push_back(big[i]);
        rows[j].push_back(*x.find(face));
      }
    }
    boundary_.emplace_back(x.cells(k + 1), x.cells(k), std::move(rows));
  }
}

std::size_t DualStructure::cells(int p) const {
  if (p < 0 || p > d_) return 0;
  return boundary_[static_cast<std::size_t>(p)].cols();
}

ChainVector dual_chain(const CellComplex& x, const ChainVector& cochain) {
  const int d = x.dims();
  if (cochain.vector.empty() && cochain.dim >= 0 && cochain.dim <= d)
    return ChainVector{d - cochain.dim, BitVector(x.cells(cochain.dim))};
  require_manifold(x);
  if (cochain.dim <= 0 || cochain.dim >= d) throw DimensionOutOfRange("dual_chain needs 0 < k < d");
  if (cochain.vector.len() != x.cells(cochain.dim)) throw ComplexError("cochain length mismatch");
  return ChainVector{d - cochain.dim, cochain.vector};
}

// ---- chains inside the barycentric subdivision ----------------------------

SubdivisionChains::SubdivisionChains(const CellComplex& x) : x_(x), sd_(barycentric_subdivide(x)) {
  Index next = 0;
  for (int k = 0; k <= x.dims(); ++k) {
    bary_.emplace_back(x.cells(k));
    for (auto& b : bary_.back()) b = next++;
  }
}

namespace {

// All sd simplices given by full flags from `bottom` up to `top` (bottom may be empty).
void full_flags(const CellComplex& x, const std::vector<std::vector<Index>>& bary, const Simplex& bottom,
                const Simplex& top, const CellComplex& sd, std::vector<Index>& out) {
  Simplex extra;
  std::set_difference(top.begin(), top.end(), bottom.begin(), bottom.end(), std::back_inserter(extra));
  std::sort(extra.begin(), extra.end());
  do {
    Simplex face = bottom;
    Simplex cell;
    if (!face.empty()) cell.push_back(bary[face.size() - 1][*x.find(face)]);
    for (Index v : extra) {
      face.insert(std::upper_bound(face.begin(), face.end(), v), v);
      cell.push_back(bary[face.size() - 1][*x.find(face)]);
    }
    std::sort(cell.begin(), cell.end());
    out.push_back(*sd.find(cell));
  } while (std::next_permutation(extra.begin(), extra.end()));
}

BitVector toggle_list(std::size_t len, std::vector<Index> ids) {
  std::sort(ids.begin(), ids.end());
  std::vector<Index> odd;
  for (std::size_t i = 0; i < ids.size();) {
    std::size_t j = i;
    while (j < ids.size() && ids[j] == ids[i]) ++j;
    if ((j - i) % 2) odd.push_back(ids[i]);
    i = j;
  }
  return BitVector(len, std::move(odd));
}

// Top-dimensional simplices containing simplex (k, i).
std::vector<Index> tops_containing(const CellComplex& x, int k, Index i) {
  std::set<Index> cur{i};
  for (int j = k; j < x.dims(); ++j) {
    std::set<Index> next;
    for (Index c : cur)
      for (Index up : x.boundary(j + 1).row(c)) next.insert(up);
    cur = std::move(next);
  }
  return {cur.begin(), cur.end()};
}

}  // namespace

BitVector SubdivisionChains::primal(const ChainVector& c) const {
  std::vector<Index> ids;
  for (Index i : c.vector.support()) full_flags(x_, bary_, {}, x_.simplex(c.dim, i), sd_.complex, ids);
  return toggle_list(sd_.complex.cells(c.dim), std::move(ids));
}

BitVector SubdivisionChains::dual(int p, const BitVector& w) const {
  const int k = x_.dims() - p;
  std::vector<Index> ids;
  for (Index i : w.support()) {
    const Simplex& tau = x_.simplex(k, i);
    for (Index t : tops_containing(x_, k, i)) {
      // Flags from tau (its barycenter first) up to the top simplex.
      const Simplex& top = x_.simplex(x_.dims(), t);
      Simplex extra;
      std::set_difference(top.begin(), top.end(), tau.begin(), tau.end(), std::back_inserter(extra));
      do {
        Simplex face = tau;
        Simplex cell{bary_[static_cast<std::size_t>(k)][i]};
        for (Index v : extra) {
          face.insert(std::upper_bound(face.begin(), face.end(), v), v);
          cell.push_back(bary_[face.size() - 1][*x_.find(face)]);
        }
        std::sort(cell.begin(), cell.end());
        ids.push_back(*sd_.complex.find(cell));
      } while (std::next_permutation(extra.begin(), extra.end()));
    }
  }
  return toggle_list(sd_.complex.cells(p), std::move(ids));
}

// ---- projection --------------------------------------------------------------

namespace {

// Local data for sd(boundary of sigma) in dimension p: sd simplex ids of the
// p- and (p-1)-simplices and the boundary matrix between them.
struct SphereChains {
  std::vector<Index> cols;  // sd p-simplices
  std::vector<Index> rows;  // sd (p-1)-simplices
  BitMatrix boundary;
};

SphereChains sphere_chains(const CellComplex& x, const std::vector<std::vector<Index>>& bary, const CellComplex& sd,
                           const Simplex& sigma, int p) {
  // Proper faces of sigma, as sd vertex ids, with containment by bitmask.
  const std::size_t n = sigma.size();
  std::vector<std::uint32_t> masks;
  std::vector<Index> ids;
  for (std::uint32_t m = 1; m + 1 < (1u << n); ++m) {
    Simplex f;
    for (std::size_t i = 0; i < n; ++i)
      if ((m >> i) & 1u) f.push_back(sigma[i]);
    masks.push_back(m);
    ids.push_back(bary[f.size() - 1][*x.find(f)]);
  }
  std::vector<std::vector<Index>> chains_p, chains_q;
  std::vector<std::size_t> stack;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    const int len = static_cast<int>(stack.size());
    if (len == p || len == p + 1) {
      Simplex cell;
      for (auto s : stack) cell.push_back(ids[s]);
      std::sort(cell.begin(), cell.end());
      (len == p + 1 ? chains_p : chains_q).push_back(cell);
      if (len == p + 1) return;
    }
    for (std::size_t j = start; j < masks.size(); ++j) {
      if (!stack.empty()) {
        auto last = masks[stack.back()];
        if ((last & masks[j]) != last || last == masks[j]) continue;
      }
      stack.push_back(j);
      self(self, 0);
      stack.pop_back();
    }
  };
  // Chains are built bottom-up (each face strictly contains the previous).
  rec(rec, 0);
  auto uniq = [](std::vector<std::vector<Index>>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  };
  uniq(chains_p);
  uniq(chains_q);
  SphereChains sc;
  std::map<Simplex, Index> row_of;
  for (const auto& c : chains_q) {
    row_of[c] = static_cast<Index>(sc.rows.size());
    sc.rows.push_back(*sd.find(c));
  }
  std::vector<std::vector<Index>> rows(chains_q.size());
  for (std::size_t j = 0; j < chains_p.size(); ++j) {
    sc.cols.push_back(*sd.find(chains_p[j]));
    if (p == 0) continue;
    for (std::size_t drop = 0; drop < chains_p[j].size(); ++drop) {
      Simplex f;
      for (std::size_t i = 0; i < chains_p[j].size(); ++i)
        if (i != drop) f.push_back(chains_p[j][i]);
      rows[row_of.at(f)].push_back(static_cast<Index>(j));
    }
  }
  sc.boundary = BitMatrix(chains_q.size(), chains_p.size(), std::move(rows));
  return sc;
}

}  // namespace

Projection project_to_triangulation(const CellComplex& x, int dual_dim, const BitVector& w) {
  const int d = x.dims();
  const int p = dual_dim;
  Projection out;
  if (w.empty()) {
    out.chain = ChainVector{p, BitVector(p >= 0 && p <= d ? x.cells(p) : 0)};
    return out;
  }
  require_manifold(x);
  if (p <= 0 || p >= d) throw DimensionOutOfRange("projection needs 0 < dual dimension < d");
  DualStructure dual(x);
  if (!(dual.boundary(p) * w).empty()) throw ComplexError("projection requires a dual cycle");

  SubdivisionChains sc(x);
  const CellComplex& sd = sc.subdivision().complex;
  BitVector c = sc.dual(p, w);

  // sd vertex id -> (dim, simplex) of the primal simplex it stands for.
  std::vector<std::pair<int, Index>> owner(sd.cells(0));
  for (int k = 0; k <= d; ++k)
    for (Index i = 0; i < x.cells(k); ++i) owner[sc.barycenter(k, i)] = {k, i};

  std::vector<char> in(sd.cells(p), 0);
  std::vector<std::vector<Index>> bucket(sd.cells(0));
  auto push = [&](Index s) {
    in[s] ^= 1;
    bucket[sd.simplex(p, s).back()].push_back(s);
  };
  for (Index s : c.support()) push(s);

  std::vector<std::vector<Index>> bary_ids(static_cast<std::size_t>(d) + 1);
  for (int j = 0; j <= d; ++j)
    for (Index i = 0; i < x.cells(j); ++i) bary_ids[static_cast<std::size_t>(j)].push_back(sc.barycenter(j, i));

  SearchBudget budget;
  for (Index top = static_cast<Index>(sd.cells(0)); top-- > 0;) {
    auto [k, idx] = owner[top];
    if (k <= p) break;
    std::set<Index> live;
    for (Index s : bucket[top])
      if (in[s]) live.insert(s);
    bucket[top].clear();
    if (live.empty()) continue;

    const Simplex& sigma = x.simplex(k, idx);
    SphereChains local = sphere_chains(x, bary_ids, sd, sigma, p);
    std::map<Index, Index> local_row;
    for (std::size_t r = 0; r < local.rows.size(); ++r) local_row[local.rows[r]] = static_cast<Index>(r);

    std::vector<Index> rho;
    for (Index s : live) {
      Simplex face;
      for (Index v : sd.simplex(p, s))
        if (v != top) face.push_back(v);
      Index f = *sd.find(face);
      rho.push_back(local_row.at(f));
      in[s] = 0;
    }
    BitVector rho_v = toggle_list(local.rows.size(), rho);
    auto f0 = solve(local.boundary, rho_v);
    if (!f0) throw ComplexError("projection: interior piece has no filling in the boundary sphere");
    auto kernel = nullspace_basis(local.boundary);
    BitVector best = *f0;
    if (!kernel.empty()) {
      std::vector<BitVector> with_f0 = kernel;
      with_f0.push_back(*f0);
      auto res = min_coset_weight(with_f0, kernel, budget);
      if (res.weight) best = res.witness;
    }
    for (Index j : best.support()) push(local.cols[j]);
  }

  // What remains lives on sd of the p-skeleton: whole primal simplices.
  std::vector<Index> prim;
  std::map<Index, std::size_t> count;
  for (Index s = 0; s < in.size(); ++s)
    if (in[s]) ++count[sd.simplex(p, s).back()];
  const std::size_t full = [&] {
    std::size_t f = 1;
    for (int i = 2; i <= p + 1; ++i) f *= static_cast<std::size_t>(i);
    return f;
  }();
  for (auto [top, cnt] : count) {
    auto [k, idx] = owner[top];
    if (k != p || cnt != full) throw ComplexError("projection left a partial simplex");
    prim.push_back(idx);
  }
  out.chain = ChainVector{p, BitVector(x.cells(p), prim)};
  out.volume_ratio = static_cast<double>(prim.size()) / static_cast<double>(w.weight());
  return out;
}

}  // namespace lqc
