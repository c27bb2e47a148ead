#include "lqc/complex.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <set>

namespace lqc {

std::string to_string(CellKind kind) {
  switch (kind) {
    case CellKind::Simplicial: return "simplicial";
    case CellKind::Cubical: return "cubical";
    default: return "general";
  }
}

CellKind cell_kind_from_string(const std::string& s) {
  if (s == "simplicial") return CellKind::Simplicial;
  if (s == "cubical") return CellKind::Cubical;
  if (s == "general") return CellKind::General;
  throw ComplexError("unknown cell kind '" + s + "'");
}

CellComplex::CellComplex(std::vector<BitMatrix> boundary, CellKind kind) : boundary_(std::move(boundary)), kind_(kind) {
  if (boundary_.empty()) throw ComplexError("complex needs at least a vertex map");
  if (boundary_[0].rows() != 0) throw ComplexError("boundary[0] must have zero rows");
  for (std::size_t k = 1; k < boundary_.size(); ++k)
    if (boundary_[k].rows() != boundary_[k - 1].cols())
      throw ComplexError("boundary[" + std::to_string(k) + "] rows do not match (k-1)-cell count");
  if (kind_ == CellKind::Simplicial) {
    // Recover vertex lists from the boundary maps.
    simplices_.resize(boundary_.size());
    for (Index v = 0; v < boundary_[0].cols(); ++v) simplices_[0].push_back({v});
    for (std::size_t k = 1; k < boundary_.size(); ++k) {
      BitMatrix cols = boundary_[k].transpose();
      for (std::size_t j = 0; j < cols.rows(); ++j) {
        std::set<Index> verts;
        for (Index f : cols.row(j))
          for (Index v : simplices_[k - 1][f]) verts.insert(v);
        if (verts.size() != k + 1 || cols.row(j).size() != k + 1)
          throw ComplexError("boundary data is not simplicial");
        simplices_[k].emplace_back(verts.begin(), verts.end());
      }
    }
    index_simplices();
  }
}

void CellComplex::index_simplices() {
  lookup_.assign(simplices_.size(), {});
  for (std::size_t k = 0; k < simplices_.size(); ++k) {
    lookup_[k].reserve(simplices_[k].size());
    for (std::size_t i = 0; i < simplices_[k].size(); ++i)
      if (!lookup_[k].emplace(simplices_[k][i], static_cast<Index>(i)).second)
        throw ComplexError("duplicate simplex");
  }
}

CellComplex CellComplex::from_simplices(std::size_t num_vertices, const std::vector<Simplex>& facets,
                                        std::optional<std::vector<Point>> coords) {
  int top = 0;
  for (const auto& f : facets) {
    if (f.empty()) throw ComplexError("empty simplex");
    top = std::max(top, static_cast<int>(f.size()) - 1);
  }
  std::vector<std::vector<Simplex>> by_dim(static_cast<std::size_t>(top) + 1);
  for (Index v = 0; v < num_vertices; ++v) by_dim[0].push_back({v});
  for (auto f : facets) {
    std::sort(f.begin(), f.end());
    if (std::adjacent_find(f.begin(), f.end()) != f.end()) throw ComplexError("simplex with repeated vertex");
    if (f.back() >= num_vertices) throw ComplexError("simplex vertex out of range");
    const std::size_t n = f.size();
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      if (std::popcount(mask) < 2) continue;
      Simplex face;
      for (std::size_t i = 0; i < n; ++i)
        if ((mask >> i) & 1u) face.push_back(f[i]);
      by_dim[face.size() - 1].push_back(std::move(face));
    }
  }
  for (auto& list : by_dim) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }

  CellComplex x;
  x.kind_ = CellKind::Simplicial;
  x.simplices_ = std::move(by_dim);
  x.index_simplices();
  x.boundary_.resize(x.simplices_.size());
  x.boundary_[0] = BitMatrix(0, x.simplices_[0].size());
  for (std::size_t k = 1; k < x.simplices_.size(); ++k) {
    std::vector<std::vector<Index>> rows(x.simplices_[k - 1].size());
    for (std::size_t j = 0; j < x.simplices_[k].size(); ++j) {
      const auto& s = x.simplices_[k][j];
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        Simplex face;
        face.reserve(s.size() - 1);
        for (std::size_t i = 0; i < s.size(); ++i)
          if (i != drop) face.push_back(s[i]);
        rows[x.lookup_[k - 1].at(face)].push_back(static_cast<Index>(j));
      }
    }
    x.boundary_[k] = BitMatrix(x.simplices_[k - 1].size(), x.simplices_[k].size(), std::move(rows));
  }
  if (coords) x.set_coords(std::move(*coords));
  return x;
}

std::size_t CellComplex::cells(int k) const {
  if (k < 0 || k > dims()) return 0;
  return boundary_[static_cast<std::size_t>(k)].cols();
}

std::vector<std::size_t> CellComplex::cell_counts() const {
  std::vector<std::size_t> out;
  for (int k = 0; k <= dims(); ++k) out.push_back(cells(k));
  return out;
}

BitMatrix CellComplex::coboundary(int k) const {
  if (k >= dims()) return BitMatrix(0, cells(k));
  return boundary(k + 1).transpose();
}

const std::vector<Simplex>& CellComplex::simplices(int k) const {
  if (!simplicial()) throw NotSimplicial();
  return simplices_.at(static_cast<std::size_t>(k));
}

std::optional<Index> CellComplex::find(const Simplex& s) const {
  if (!simplicial() || s.empty()) return std::nullopt;
  std::size_t k = s.size() - 1;
  if (k >= lookup_.size()) return std::nullopt;
  auto it = lookup_[k].find(s);
  if (it == lookup_[k].end()) return std::nullopt;
  return it->second;
}

std::vector<std::pair<int, Index>> CellComplex::facets() const {
  std::vector<std::pair<int, Index>> out;
  for (int k = 0; k <= dims(); ++k) {
    if (k == dims()) {
      for (Index i = 0; i < cells(k); ++i) out.emplace_back(k, i);
      break;
    }
    const BitMatrix& up = boundary(k + 1);  // rows: k-cells
    for (Index i = 0; i < cells(k); ++i)
      if (up.row(i).empty()) out.emplace_back(k, i);
  }
  return out;
}

void CellComplex::set_coords(std::vector<Point> coords) {
  if (coords.size() != cells(0)) throw ComplexError("coordinate count does not match vertex count");
  if (!coords.empty()) {
    auto n = coords.front().size();
    for (const auto& p : coords)
      if (p.size() != n) throw ComplexError("inconsistent coordinate dimension");
  }
  coords_ = std::move(coords);
}

std::size_t CellComplex::degree() const {
  std::vector<std::size_t> count(cells(0), 0);
  if (simplicial()) {
    for (int k = 1; k <= dims(); ++k)
      for (const auto& s : simplices(k))
        for (Index v : s) ++count[v];
  } else {
    // Vertices of a cell = vertices reachable through the boundary maps.
    std::vector<std::vector<Index>> verts(cells(0));
    for (Index v = 0; v < cells(0); ++v) verts[v] = {v};
    std::vector<std::vector<Index>> prev = verts;
    for (int k = 1; k <= dims(); ++k) {
      BitMatrix cols = boundary(k).transpose();
      std::vector<std::vector<Index>> cur(cells(k));
      for (Index j = 0; j < cells(k); ++j) {
        std::set<Index> vs;
        for (Index f : cols.row(j)) vs.insert(prev[f].begin(), prev[f].end());
        cur[j].assign(vs.begin(), vs.end());
        for (Index v : cur[j]) ++count[v];
      }
      prev = std::move(cur);
    }
  }
  return count.empty() ? 0 : *std::max_element(count.begin(), count.end());
}

bool CellComplex::chain_condition_holds() const {
  for (int k = 2; k <= dims(); ++k)
    if (!(boundary(k - 1) * boundary(k)).is_zero()) return false;
  return true;
}

// ---- generators ----------------------------------------------------------

namespace {

std::vector<std::vector<int>> combinations(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

std::size_t ipow(std::size_t b, int e) {
  std::size_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

std::vector<CubicalCell> cubical_cells(int n, int L, int k) {
  std::vector<CubicalCell> out;
  const std::size_t nc = ipow(static_cast<std::size_t>(L), n);
  for (const auto& dirs : combinations(n, k)) {
    for (std::size_t c = 0; c < nc; ++c) {
      CubicalCell cell{dirs, std::vector<int>(static_cast<std::size_t>(n))};
      std::size_t rem = c;
      for (int a = n - 1; a >= 0; --a) {
        cell.base[static_cast<std::size_t>(a)] = static_cast<int>(rem % static_cast<std::size_t>(L));
        rem /= static_cast<std::size_t>(L);
      }
      out.push_back(std::move(cell));
    }
  }
  return out;
}

CellComplex cubical_torus(int n, int L) {
  if (n < 1 || L < 2) throw ComplexError("cubical torus needs n >= 1 and L >= 2");
  const std::size_t nc = ipow(static_cast<std::size_t>(L), n);
  std::vector<std::map<std::vector<int>, std::size_t>> dir_index(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    auto combos = combinations(n, k);
    for (std::size_t i = 0; i < combos.size(); ++i) dir_index[static_cast<std::size_t>(k)][combos[i]] = i;
  }
  auto coord_index = [&](const std::vector<int>& x) {
    std::size_t idx = 0;
    for (int v : x) idx = idx * static_cast<std::size_t>(L) + static_cast<std::size_t>(v);
    return idx;
  };
  std::vector<BitMatrix> boundary;
  boundary.emplace_back(0, nc);
  for (int k = 1; k <= n; ++k) {
    auto cells_k = cubical_cells(n, L, k);
    std::vector<std::vector<Index>> rows(dir_index[static_cast<std::size_t>(k) - 1].size() * nc);
    for (std::size_t j = 0; j < cells_k.size(); ++j) {
      const auto& c = cells_k[j];
      for (std::size_t drop = 0; drop < c.directions.size(); ++drop) {
        std::vector<int> fd;
        for (std::size_t i = 0; i < c.directions.size(); ++i)
          if (i != drop) fd.push_back(c.directions[i]);
        std::size_t base_dir = dir_index[static_cast<std::size_t>(k) - 1].at(fd) * nc;
        std::vector<int> x = c.base;
        rows[base_dir + coord_index(x)].push_back(static_cast<Index>(j));
        auto a = static_cast<std::size_t>(c.directions[drop]);
        x[a] = (x[a] + 1) % L;
        rows[base_dir + coord_index(x)].push_back(static_cast<Index>(j));
      }
    }
    boundary.emplace_back(rows.size(), cells_k.size(), std::move(rows));
  }
  return CellComplex(std::move(boundary), CellKind::Cubical);
}

CellComplex triangulated_torus(int L) {
  if (L < 3) throw ComplexError("triangulated torus needs L >= 3");
  auto id = [L](int i, int j) { return static_cast<Index>(((i % L + L) % L) * L + ((j % L + L) % L)); };
  std::vector<Simplex> tris;
  for (int i = 0; i < L; ++i)
    for (int j = 0; j < L; ++j) {
      tris.push_back({id(i, j), id(i + 1, j), id(i + 1, j + 1)});
      tris.push_back({id(i, j), id(i, j + 1), id(i + 1, j + 1)});
    }
  return CellComplex::from_simplices(static_cast<std::size_t>(L * L), tris);
}

CellComplex octahedron_sphere() {
  std::vector<Simplex> tris;
  for (Index a : {0u, 1u})
    for (Index b : {2u, 3u})
      for (Index c : {4u, 5u}) tris.push_back({a, b, c});
  std::vector<Point> coords{{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
  for (auto& p : coords)
    for (auto& c : p) c *= std::numbers::sqrt2 / 2.0;
  return CellComplex::from_simplices(6, tris, coords);
}

CellComplex cycle_complex(std::size_t n) {
  if (n < 3) throw ComplexError("cycle needs at least 3 vertices");
  std::vector<Simplex> edges;
  std::vector<Point> coords;
  const double radius = 0.5 / std::sin(std::numbers::pi / static_cast<double>(n));
  for (std::size_t i = 0; i < n; ++i) {
    edges.push_back({static_cast<Index>(i), static_cast<Index>((i + 1) % n)});
    double a = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n);
    coords.push_back({radius * std::cos(a), radius * std::sin(a)});
  }
  return CellComplex::from_simplices(n, edges, coords);
}

CellComplex random_connected_2complex(std::size_t triangles, std::size_t max_degree, std::uint64_t seed) {
  if (triangles == 0) throw ComplexError("need at least one triangle");
  if (max_degree < 5) throw ComplexError("max_degree must be at least 5");
  std::mt19937_64 rng(seed);
  std::vector<Simplex> tris{{0, 1, 2}};
  std::vector<std::pair<Index, Index>> edges{{0, 1}, {0, 2}, {1, 2}};
  std::vector<std::size_t> deg{3, 3, 3};
  Index next = 3;
  while (tris.size() < triangles) {
    std::vector<std::size_t> open;
    for (std::size_t e = 0; e < edges.size(); ++e)
      if (deg[edges[e].first] + 2 <= max_degree && deg[edges[e].second] + 2 <= max_degree) open.push_back(e);
    if (!open.empty()) {
      auto [u, v] = edges[open[std::uniform_int_distribution<std::size_t>(0, open.size() - 1)(rng)]];
      Index w = next++;
      tris.push_back({u, v, w});
      edges.emplace_back(u, w);
      edges.emplace_back(v, w);
      deg[u] += 2;
      deg[v] += 2;
      deg.push_back(3);
    } else {
      std::vector<Index> free;
      for (Index v = 0; v < deg.size(); ++v)
        if (deg[v] + 3 <= max_degree) free.push_back(v);
      Index w = free[std::uniform_int_distribution<std::size_t>(0, free.size() - 1)(rng)];
      Index a = next++, b = next++;
      tris.push_back({w, a, b});
      edges.emplace_back(w, a);
      edges.emplace_back(w, b);
      edges.emplace_back(a, b);
      deg[w] += 3;
      deg.push_back(3);
      deg.push_back(3);
    }
  }
  return CellComplex::from_simplices(next, tris);
}

// ---- homology and codes --------------------------------------------------

CssCode code_from_complex(const CellComplex& x, int k) {
  if (k <= 0 || k >= x.dims())
    throw DimensionOutOfRange("code_from_complex needs 0 < k < dims (k=" + std::to_string(k) +
                              ", dims=" + std::to_string(x.dims()) + ")");
  CssCode c;
  c.h1 = x.boundary(k);
  c.h2 = x.boundary(k + 1).transpose();
  return c;
}

std::size_t homology_dim(const CellComplex& x, int k) {
  if (k < 0 || k > x.dims()) return 0;
  std::size_t r_k = k == 0 ? 0 : rank(x.boundary(k));
  std::size_t r_k1 = k == x.dims() ? 0 : rank(x.boundary(k + 1));
  return x.cells(k) - r_k - r_k1;
}

namespace {

std::vector<BitVector> standard_basis(std::size_t n) {
  std::vector<BitVector> out;
  out.reserve(n);
  for (Index i = 0; i < n; ++i) out.emplace_back(n, std::vector<Index>{i});
  return out;
}

SystoleResult wrap(int k, const CosetWeight& w) {
  SystoleResult r;
  r.weight = w.weight;
  r.exact = w.exact;
  r.witness = ChainVector{k, w.witness};
  return r;
}

}  // namespace

SystoleResult systole(const CellComplex& x, int k, const SearchBudget& budget) {
  if (k < 0 || k > x.dims()) throw DimensionOutOfRange("systole dimension out of range");
  auto kernel = k == 0 ? standard_basis(x.cells(0)) : nullspace_basis(x.boundary(k));
  std::vector<BitVector> image;
  if (k < x.dims()) image = x.boundary(k + 1).transpose().row_vectors();
  auto r = wrap(k, min_coset_weight(kernel, image, budget));
  if (r.witness.vector.len() == 0) r.witness.vector = BitVector(x.cells(k));
  return r;
}

SystoleResult cosystole(const CellComplex& x, int k, const SearchBudget& budget) {
  if (k < 0 || k > x.dims()) throw DimensionOutOfRange("cosystole dimension out of range");
  auto kernel = k == x.dims() ? standard_basis(x.cells(k)) : nullspace_basis(x.coboundary(k));
  std::vector<BitVector> image;
  if (k > 0) image = x.boundary(k).row_vectors();
  auto r = wrap(k, min_coset_weight(kernel, image, budget));
  if (r.witness.vector.len() == 0) r.witness.vector = BitVector(x.cells(k));
  return r;
}

bool is_boundary(const CellComplex& x, const ChainVector& cycle) {
  if (cycle.vector.empty()) return true;
  if (cycle.dim >= x.dims()) return false;
  return solve(x.boundary(cycle.dim + 1), cycle.vector).has_value();
}

// ---- manifold check --------------------------------------------------------

bool is_closed_manifold(const CellComplex& x, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (!x.simplicial()) return fail("not simplicial");
  const int d = x.dims();
  if (d < 1) return fail("dimension must be at least 1");
  const BitMatrix& top = x.boundary(d);
  for (std::size_t f = 0; f < top.rows(); ++f)
    if (top.row(f).size() != 2)
      return fail("(d-1)-simplex " + std::to_string(f) + " lies in " + std::to_string(top.row(f).size()) +
                  " top simplices");
  for (int k = 0; k < d; ++k) {
    const BitMatrix& up = x.boundary(k + 1);
    for (std::size_t i = 0; i < up.rows(); ++i)
      if (up.row(i).empty()) return fail("simplex of dim " + std::to_string(k) + " is not in any top simplex");
  }
  if (d >= 2 && d <= 3) {
    // Vertex links: connectivity of the graph on link vertices joined by link edges.
    const std::size_t nv = x.cells(0);
    std::vector<std::vector<std::pair<Index, Index>>> link_edges(nv);
    std::vector<std::set<Index>> link_verts(nv);
    for (const auto& t : x.simplices(2)) {
      for (std::size_t i = 0; i < 3; ++i) {
        Index v = t[i];
        Index a = t[(i + 1) % 3], b = t[(i + 2) % 3];
        link_edges[v].emplace_back(a, b);
      }
    }
    for (const auto& e : x.simplices(1)) {
      link_verts[e[0]].insert(e[1]);
      link_verts[e[1]].insert(e[0]);
    }
    for (Index v = 0; v < nv; ++v) {
      std::map<Index, Index> parent;
      for (Index u : link_verts[v]) parent[u] = u;
      auto root = [&](Index u) {
        while (parent[u] != u) u = parent[u] = parent[parent[u]];
        return u;
      };
      for (auto [a, b] : link_edges[v]) parent[root(a)] = root(b);
      std::set<Index> roots;
      for (Index u : link_verts[v]) roots.insert(root(u));
      if (roots.size() != 1) return fail("link of vertex " + std::to_string(v) + " is disconnected");
    }
  }
  return true;
}

}  // namespace lqc
