#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <unordered_set>

#include "lqc/locality.hpp"

namespace lqc {

namespace {

struct LatticeHash {
  std::size_t operator()(const LatticePoint& p) const {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (auto v : p) h = (h ^ static_cast<std::uint64_t>(v)) * 0x100000001b3ull;
    return static_cast<std::size_t>(h);
  }
};

using Occupancy = std::unordered_set<LatticePoint, LatticeHash>;

std::int64_t l1(const LatticePoint& a, const LatticePoint& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::abs(a[i] - b[i]);
  return s;
}

// Lattice points at l-infinity distance exactly t from q, in lexicographic order.
std::vector<LatticePoint> ring(const LatticePoint& q, std::int64_t t) {
  std::vector<LatticePoint> out;
  const std::size_t n = q.size();
  LatticePoint off(n, -t);
  for (;;) {
    bool on = false;
    for (auto v : off) on |= std::abs(v) == t;
    if (on) {
      LatticePoint p(n);
      for (std::size_t i = 0; i < n; ++i) p[i] = q[i] + off[i];
      out.push_back(std::move(p));
    }
    std::size_t j = n;
    while (j > 0 && off[j - 1] == t) off[--j] = -t;
    if (j == 0) break;
    ++off[j - 1];
  }
  return out;
}

LatticePoint snap(const Point& b, double eps, Occupancy& used) {
  const std::size_t n = b.size();
  Point s(n);
  LatticePoint q(n);
  for (std::size_t i = 0; i < n; ++i) {
    s[i] = b[i] / eps;
    q[i] = static_cast<std::int64_t>(std::llround(s[i]));
  }
  const double reach = 1.0 / eps;
  double best = std::numeric_limits<double>::infinity();
  LatticePoint pick;
  for (std::int64_t t = 0; double(t) - 0.5 <= std::min(best, reach); ++t)
    for (auto& p : ring(q, t)) {
      if (used.count(p)) continue;
      double d = 0;
      for (std::size_t i = 0; i < n; ++i) d += (double(p[i]) - s[i]) * (double(p[i]) - s[i]);
      d = std::sqrt(d);
      if (d < best) {
        best = d;
        pick = p;
      }
    }
  if (best > reach) throw LatticeExhausted("no free lattice point within unit distance of a barycenter");
  used.insert(pick);
  return pick;
}

std::vector<Point> qubit_barycenters(const CssCode& c, const CellComplex& x, int k, const EmbeddedComplex& e) {
  const CellComplex& fine = e.complex();
  const std::size_t un = e.coords.empty() ? 0 : e.coords[0].size();
  std::vector<Point> out;
  auto mean = [&](const std::vector<Index>& verts) {
    Point p(un, 0.0);
    for (Index v : verts)
      for (std::size_t a = 0; a < un; ++a) p[a] += e.coords[v][a];
    for (double& v : p) v /= double(verts.size());
    return p;
  };
  if (fine.dims() >= k && c.size() == fine.cells(k)) {
    for (const auto& s : fine.simplices(k)) out.push_back(mean(s));
    return out;
  }
  if (x.dims() < k || c.size() != x.cells(k))
    throw ComplexError("code size matches neither the subdivision nor the base k-simplices");
  std::map<Simplex, std::vector<Index>> by_support;
  for (Index v = 0; v < e.subdivision.carriers.size(); ++v) {
    Simplex s = e.subdivision.carriers[v].vertices;
    std::sort(s.begin(), s.end());
    by_support[s].push_back(v);
  }
  for (const auto& s : x.simplices(k)) {
    std::vector<Index> verts;
    for (std::uint32_t mask = 1; mask < (1u << s.size()); ++mask) {
      Simplex face;
      for (std::size_t i = 0; i < s.size(); ++i)
        if (mask >> i & 1u) face.push_back(s[i]);
      auto it = by_support.find(face);
      if (it != by_support.end()) verts.insert(verts.end(), it->second.begin(), it->second.end());
    }
    out.push_back(mean(verts));
  }
  return out;
}

LocalityCertificate certify(const CssCode& c, const Placement& p, double cube_limit, bool parallel) {
  if (p.points.size() != c.size()) throw ComplexError("one lattice point per qubit required");
  LocalityCertificate cert;
  cert.n = p.n;
  cert.size = c.size();
  Occupancy seen;
  for (const auto& q : p.points) {
    if (q.size() != static_cast<std::size_t>(p.n)) throw ComplexError("lattice point of wrong dimension");
    if (!seen.insert(q).second) cert.injective = false;
    std::int64_t norm = 0;
    for (auto v : q) norm += std::abs(v);
    cert.max_norm = std::max(cert.max_norm, norm);
  }
  Graph g = check_graph(c);
  std::vector<std::int64_t> worst(g.size(), -1);
  std::vector<Index> partner(g.size(), 0);
#pragma omp parallel for schedule(dynamic, 256) if (parallel)
  for (std::size_t v = 0; v < g.size(); ++v)
    for (Index u : g.adj[v])
      if (u > v) {
        auto d = l1(p.points[v], p.points[u]);
        if (d > worst[v]) {
          worst[v] = d;
          partner[v] = u;
        }
      }
  std::int64_t best = -1;
  for (Index v = 0; v < g.size(); ++v)
    if (worst[v] > best) {
      best = worst[v];
      cert.worst_pair = {v, partner[v]};
    }
  cert.check_constant = best < 0 ? 0 : static_cast<std::size_t>(best);
  cert.cube_constant =
      c.size() ? double(cert.max_norm) / std::pow(double(c.size()), 1.0 / std::max(1, p.n)) : 0.0;
  cert.cube_flagged = cert.cube_constant > cube_limit;
  return cert;
}

}  // namespace

CssCode cell_code(const CellComplex& x, int k) {
  if (k > 0 && k == x.dims()) {
    CssCode c;
    c.h1 = x.boundary(k);
    c.h2 = BitMatrix(0, x.cells(k));
    return c;
  }
  return code_from_complex(x, k);
}

std::vector<double> fold_point(const std::vector<double>& x, int L) {
  std::vector<double> out;
  for (double v : x) out.push_back(std::abs(v - L / 2.0));
  return out;
}

Placement fold_torus(int n, int L, int k) {
  if (n < 2 || L < 2 || k <= 0 || k >= n) throw DimensionOutOfRange("fold_torus needs n >= 2, L >= 2, 0 < k < n");
  Placement out;
  out.n = n;
  for (const auto& cell : cubical_cells(n, L, k)) {
    LatticePoint p(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
      std::int64_t c = 2 * cell.base[static_cast<std::size_t>(j)];
      if (std::find(cell.directions.begin(), cell.directions.end(), j) != cell.directions.end()) ++c;
      p[static_cast<std::size_t>(j)] = 2 * std::abs(c - L) + (c >= L ? 1 : 0);
    }
    out.points.push_back(std::move(p));
  }
  return out;
}

Placement placement_from_embedding(const CssCode& c, const CellComplex& x, int k, const EmbeddedComplex& e,
                                   double eps) {
  if (!(eps > 0)) throw ComplexError("lattice spacing must be positive");
  auto bary = qubit_barycenters(c, x, k, e);
  for (int attempt = 0;; ++attempt) {
    try {
      Placement out;
      out.n = e.params.n;
      Occupancy used;
      for (const auto& b : bary) out.points.push_back(snap(b, eps, used));
      return out;
    } catch (const LatticeExhausted&) {
      if (attempt == 1) throw;
      eps /= 2;
    }
  }
}

CssCode path_block(std::size_t qubits) {
  std::vector<std::vector<Index>> rows(qubits + 1);
  for (Index q = 0; q < qubits; ++q) {
    rows[q].push_back(q);
    rows[q + 1].push_back(q);
  }
  CssCode out;
  out.h1 = BitMatrix(qubits + 1, qubits, std::move(rows));
  out.h2 = BitMatrix(0, qubits);
  return out;
}

std::pair<CssCode, Placement> pad_code(const CssCode& c, const Placement& p, std::size_t target_volume) {
  if (p.points.size() != c.size()) throw ComplexError("one lattice point per qubit required");
  if (p.n < 1) throw ComplexError("placement dimension must be positive");
  if (target_volume < c.size()) throw ComplexError("target volume below the code size");
  if (target_volume == c.size()) return {c, p};
  const std::size_t n = static_cast<std::size_t>(p.n);
  const auto side = static_cast<std::int64_t>(std::ceil(2.0 * std::pow(double(target_volume), 1.0 / p.n)));
  std::int64_t start = 0;
  for (const auto& q : p.points)
    for (auto v : q) {
      if (v < 0 || v >= side) throw CubeTooSmall("existing placement leaves the cube");
      start = std::max(start, q[0] + 1);
    }
  const std::size_t pad = target_volume - c.size();
  double room = double(side - start);
  for (std::size_t a = 1; a < n; ++a) room *= double(side);
  if (room < double(pad)) throw CubeTooSmall("cube cannot host the padding path");

  Placement out = p;
  LatticePoint cur(n, 0);
  cur[0] = start;
  std::vector<int> dir(n, 1);
  for (std::size_t i = 0; i < pad; ++i) {
    out.points.push_back(cur);
    // Serpentine step: advance the fastest axis, bouncing off the cube walls.
    for (std::size_t j = n; j-- > 0;) {
      std::int64_t next = cur[j] + dir[j];
      if (next >= (j == 0 ? start : 0) && next < side) {
        cur[j] = next;
        break;
      }
      dir[j] = -dir[j];
    }
  }
  return {direct_sum(c, path_block(pad)), out};
}

LocalityCertificate certify_local(const CssCode& c, const Placement& p, double cube_limit) {
  return certify(c, p, cube_limit, true);
}

LocalityCertificate certify_local_serial(const CssCode& c, const Placement& p, double cube_limit) {
  return certify(c, p, cube_limit, false);
}

}  // namespace lqc
