#include "lqc/code.hpp"

#include <algorithm>
#include <cstdint>

#include "lqc/complex.hpp"

namespace lqc {

std::size_t Graph::max_degree() const {
  std::size_t d = 0;
  for (const auto& a : adj) d = std::max(d, a.size());
  return d;
}

std::vector<std::pair<Index, Index>> Graph::edges() const {
  std::vector<std::pair<Index, Index>> out;
  for (Index i = 0; i < adj.size(); ++i)
    for (Index j : adj[i])
      if (i < j) out.emplace_back(i, j);
  return out;
}

void Graph::add_edge(Index a, Index b) {
  if (a == b) return;
  adj[a].push_back(b);
  adj[b].push_back(a);
}

void Graph::normalize() {
  for (auto& a : adj) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
  }
}

std::optional<ChainViolation> validate(const CssCode& c) {
  if (c.h1.cols() != c.h2.cols()) {
    ChainViolation v;
    v.kind = ChainViolation::Kind::ShapeMismatch;
    v.message = "h1 has " + std::to_string(c.h1.cols()) + " columns but h2 has " + std::to_string(c.h2.cols());
    return v;
  }
  if (!c.labels.empty() && c.labels.size() != c.size()) {
    ChainViolation v;
    v.kind = ChainViolation::Kind::ShapeMismatch;
    v.message = "label count does not match code size";
    return v;
  }
  BitMatrix prod = c.h1 * c.h2.transpose();
  for (std::size_t i = 0; i < prod.rows(); ++i)
    if (!prod.row(i).empty()) {
      ChainViolation v;
      v.h1_row = i;
      v.h2_row = prod.row(i).front();
      v.message = "chain condition violated at h1 row " + std::to_string(i) + ", h2 row " +
                  std::to_string(v.h2_row);
      return v;
    }
  return std::nullopt;
}

void require_valid(const CssCode& c) {
  if (auto v = validate(c)) throw ChainConditionViolated(*v);
}

namespace {

CodeReport report_connected(const CssCode& c, const SearchBudget& budget) {
  CodeReport r;
  r.size = c.size();
  r.dim = r.size - rank(c.h1) - rank(c.h2);
  auto rows1 = c.h1.row_vectors();
  auto rows2 = c.h2.row_vectors();
  auto dx = min_coset_weight(nullspace_basis(c.h1), rows2, budget);
  auto dz = min_coset_weight(nullspace_basis(c.h2), rows1, budget);
  r.d_x = dx.weight;
  r.d_z = dz.weight;
  r.d_x_exact = dx.exact;
  r.d_z_exact = dz.exact;
  r.x_witness = dx.witness.len() ? dx.witness : BitVector(r.size);
  r.z_witness = dz.witness.len() ? dz.witness : BitVector(r.size);
  return r;
}

// Qubit components of the Tanner graph, numbered by smallest qubit.
std::vector<std::size_t> components(const CssCode& c, std::size_t& count) {
  std::vector<std::size_t> parent(c.size());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const BitMatrix* m : {&c.h1, &c.h2})
    for (std::size_t i = 0; i < m->rows(); ++i) {
      const auto& row = m->row(i);
      for (std::size_t a = 1; a < row.size(); ++a) {
        auto x = find(row[0]), y = find(row[a]);
        if (x != y) parent[std::max(x, y)] = std::min(x, y);
      }
    }
  std::vector<std::size_t> label(c.size());
  std::vector<std::size_t> id(c.size(), SIZE_MAX);
  count = 0;
  for (std::size_t v = 0; v < c.size(); ++v) {
    auto root = find(v);
    if (id[root] == SIZE_MAX) id[root] = count++;
    label[v] = id[root];
  }
  return label;
}

BitMatrix restrict_rows(const BitMatrix& m, const std::vector<std::size_t>& label, std::size_t comp,
                        const std::vector<Index>& local, std::size_t cols) {
  std::vector<std::vector<Index>> rows;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const auto& row = m.row(i);
    if (row.empty() || label[row[0]] != comp) continue;
    std::vector<Index> r;
    for (Index q : row) r.push_back(local[q]);
    rows.push_back(std::move(r));
  }
  const std::size_t n = rows.size();
  return BitMatrix(n, cols, std::move(rows));
}

void keep_min(std::optional<std::size_t>& best, BitVector& witness, bool& exact, const std::optional<std::size_t>& w,
              const BitVector& local_witness, bool local_exact, const std::vector<Index>& qubits) {
  if (!w) return;
  exact = exact && local_exact;
  if (best && *best <= *w) return;
  best = w;
  std::vector<Index> support;
  for (Index j : local_witness.support()) support.push_back(qubits[j]);
  witness = BitVector(witness.len(), support);
}

}  // namespace

CodeReport report(const CssCode& c, const SearchBudget& budget) {
  require_valid(c);
  std::size_t count = 0;
  auto label = components(c, count);
  CodeReport r;
  if (count <= 1) {
    r = report_connected(c, budget);
  } else {
    // Block-diagonal codes: distances are minima over blocks with logical qubits.
    r.size = c.size();
    r.x_witness = BitVector(r.size);
    r.z_witness = BitVector(r.size);
    std::vector<std::vector<Index>> qubits(count);
    std::vector<Index> local(c.size());
    for (Index q = 0; q < c.size(); ++q) {
      local[q] = static_cast<Index>(qubits[label[q]].size());
      qubits[label[q]].push_back(q);
    }
    for (std::size_t k = 0; k < count; ++k) {
      CssCode part;
      part.h1 = restrict_rows(c.h1, label, k, local, qubits[k].size());
      part.h2 = restrict_rows(c.h2, label, k, local, qubits[k].size());
      auto pr = report_connected(part, budget);
      r.dim += pr.dim;
      keep_min(r.d_x, r.x_witness, r.d_x_exact, pr.d_x, pr.x_witness, pr.d_x_exact, qubits[k]);
      keep_min(r.d_z, r.z_witness, r.d_z_exact, pr.d_z, pr.z_witness, pr.d_z_exact, qubits[k]);
    }
  }
  r.ldpc_degree = std::max({c.h1.max_row_weight(), c.h1.max_col_weight(), c.h2.max_row_weight(),
                            c.h2.max_col_weight()});
  if (r.d_x && r.d_z)
    r.d = std::min(*r.d_x, *r.d_z);
  else
    r.d = r.d_x ? r.d_x : r.d_z;
  return r;
}

Graph check_graph(const CssCode& c) {
  Graph g(c.size());
  for (const BitMatrix* m : {&c.h1, &c.h2})
    for (std::size_t i = 0; i < m->rows(); ++i) {
      const auto& row = m->row(i);
      for (std::size_t a = 0; a < row.size(); ++a)
        for (std::size_t b = a + 1; b < row.size(); ++b) g.add_edge(row[a], row[b]);
    }
  g.normalize();
  return g;
}

CssCode toric_code(int n, int L, int k) {
  if (n < 2 || L < 2 || k <= 0 || k >= n) throw DimensionOutOfRange("toric_code needs n >= 2, L >= 2, 0 < k < n");
  return code_from_complex(cubical_torus(n, L), k);
}

CssCode hypergraph_product(const BitMatrix& a, const BitMatrix& b) {
  const std::size_t ma = a.rows(), na = a.cols(), mb = b.rows(), nb = b.cols();
  const std::size_t left = na * nb;
  const std::size_t q = left + ma * mb;
  auto q_left = [&](std::size_t i, std::size_t j) { return static_cast<Index>(i * nb + j); };
  auto q_right = [&](std::size_t r, std::size_t c) { return static_cast<Index>(left + r * mb + c); };
  BitMatrix at = a.transpose(), bt = b.transpose();

  // h1 rows (i, c): i in [na], c in [mb].
  std::vector<std::vector<Index>> r1(na * mb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t c = 0; c < mb; ++c) {
      auto& row = r1[i * mb + c];
      for (Index j : b.row(c)) row.push_back(q_left(i, j));
      for (Index r : at.row(i)) row.push_back(q_right(r, c));
    }
  // h2 rows (r, j): r in [ma], j in [nb].
  std::vector<std::vector<Index>> r2(ma * nb);
  for (std::size_t r = 0; r < ma; ++r)
    for (std::size_t j = 0; j < nb; ++j) {
      auto& row = r2[r * nb + j];
      for (Index i : a.row(r)) row.push_back(q_left(i, j));
      for (Index c : bt.row(j)) row.push_back(q_right(r, c));
    }
  CssCode out;
  out.h1 = BitMatrix(na * mb, q, std::move(r1));
  out.h2 = BitMatrix(ma * nb, q, std::move(r2));
  return out;
}

namespace {

BitMatrix block_diag(const BitMatrix& a, const BitMatrix& b) {
  std::vector<std::vector<Index>> rows = a.row_support();
  for (std::size_t i = 0; i < b.rows(); ++i) {
    std::vector<Index> r;
    for (Index j : b.row(i)) r.push_back(static_cast<Index>(j + a.cols()));
    rows.push_back(std::move(r));
  }
  return BitMatrix(a.rows() + b.rows(), a.cols() + b.cols(), std::move(rows));
}

}  // namespace

CssCode direct_sum(const CssCode& a, const CssCode& b) {
  CssCode out;
  out.h1 = block_diag(a.h1, b.h1);
  out.h2 = block_diag(a.h2, b.h2);
  if (!a.labels.empty() || !b.labels.empty()) {
    for (std::size_t i = 0; i < a.size(); ++i)
      out.labels.push_back(a.labels.empty() ? "a" + std::to_string(i) : a.labels[i]);
    for (std::size_t i = 0; i < b.size(); ++i)
      out.labels.push_back(b.labels.empty() ? "b" + std::to_string(i) : b.labels[i]);
  }
  return out;
}

BitMatrix repetition_checks(std::size_t n) {
  if (n == 0) return BitMatrix(0, 0);
  std::vector<std::vector<Index>> rows;
  for (Index i = 0; i + 1 < n; ++i) rows.push_back({i, i + 1});
  return BitMatrix(n - 1, n, std::move(rows));
}

BitMatrix cycle_checks(std::size_t n) {
  std::vector<std::vector<Index>> rows;
  for (Index i = 0; i < n; ++i) {
    Index j = static_cast<Index>((i + 1) % n);
    if (i == j)
      rows.push_back({});
    else
      rows.push_back({i, j});
  }
  return BitMatrix(n, n, std::move(rows));
}

BitMatrix hamming_checks(std::size_t r) {
  const std::size_t n = (std::size_t{1} << r) - 1;
  std::vector<std::vector<Index>> rows(r);
  for (Index j = 0; j < n; ++j)
    for (std::size_t b = 0; b < r; ++b)
      if (((j + 1) >> b) & 1u) rows[b].push_back(j);
  return BitMatrix(r, n, std::move(rows));
}

}  // namespace lqc
