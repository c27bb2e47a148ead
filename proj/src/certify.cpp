#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "lqc/embed.hpp"

namespace lqc {

namespace {

std::vector<GridCell> block_around(const std::vector<GridCell>& cells, std::size_t n, Neighborhood nb) {
  if (nb == Neighborhood::Cell) return cells;
  std::vector<GridCell> out;
  std::size_t block = 1;
  for (std::size_t a = 0; a < n; ++a) block *= 3;
  out.reserve(cells.size() * block);
  for (const auto& c : cells)
    for (std::size_t code = 0; code < block; ++code) {
      GridCell g = c;
      std::size_t rest = code;
      for (std::size_t a = 0; a < n; ++a) {
        g.c[a] += static_cast<std::int32_t>(rest % 3) - 1;
        rest /= 3;
      }
      out.push_back(g);
    }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

using CellCounts = std::unordered_map<GridCell, std::size_t, GridCellHash>;

CoarseCertificate sweep(const CellComplex& x, const std::vector<Point>& coords, bool parallel, Neighborhood nb,
                        CellCounts* counts = nullptr) {
  if (coords.size() != x.cells(0)) throw ComplexError("one coordinate per vertex required");
  CoarseCertificate cert;
  cert.neighborhood = nb;
  if (coords.empty()) return cert;
  const std::size_t n = coords[0].size();
  for (const auto& p : coords) {
    double s = 0;
    for (double v : p) {
      if (!std::isfinite(v)) throw ComplexError("non-finite coordinate");
      s += v * v;
    }
    cert.radius = std::max(cert.radius, std::sqrt(s));
  }
  auto facets = x.facets();
  for (auto [k, i] : facets)
    if (k > 2) throw UnsupportedDimension("certificates support simplices of dimension <= 2");
  std::vector<std::vector<GridCell>> blocks(facets.size());
  std::vector<std::size_t> forward(facets.size());
  std::vector<double> distortion(facets.size(), 1.0);
#pragma omp parallel for schedule(dynamic, 64) if (parallel)
  for (std::size_t f = 0; f < facets.size(); ++f) {
    const Simplex& s = x.simplex(facets[f].first, facets[f].second);
    std::vector<const Point*> verts;
    for (Index v : s) verts.push_back(&coords[v]);
    auto cells = cells_meeting(verts);
    forward[f] = cells.size();
    blocks[f] = block_around(cells, n, nb);
    if (s.size() > 1) distortion[f] = bilipschitz_distortion(verts);
  }
  CellCounts local;
  CellCounts& count = counts ? *counts : local;
  for (const auto& b : blocks)
    for (const auto& c : b) ++count[c];
  for (std::size_t f = 0; f < facets.size(); ++f) {
    cert.forward = std::max(cert.forward, forward[f]);
    cert.bilipschitz_ratio = std::max(cert.bilipschitz_ratio, distortion[f]);
  }
  for (const auto& [c, k] : count)
    if (k > cert.backward || (k == cert.backward && c < cert.worst_cell)) {
      cert.backward = k;
      cert.worst_cell = c;
    }
  return cert;
}

}  // namespace

CoarseCertificate certify_coarse(const CellComplex& x, const std::vector<Point>& coords, Neighborhood nb) {
  return sweep(x, coords, true, nb);
}

CoarseCertificate certify_coarse_serial(const CellComplex& x, const std::vector<Point>& coords, Neighborhood nb) {
  return sweep(x, coords, false, nb);
}

std::vector<GridCell> overloaded_cells(const CellComplex& x, const std::vector<Point>& coords, std::size_t limit) {
  CellCounts counts;
  sweep(x, coords, true, Neighborhood::Cell, &counts);
  std::vector<GridCell> out;
  for (const auto& [c, k] : counts)
    if (k > limit) out.push_back(c);
  std::sort(out.begin(), out.end());
  return out;
}

CoarseCertificate certify_simplicial(const CellComplex& m, const std::vector<Index>& f, const CellComplex& y) {
  if (!is_simplicial_map(m, f, y)) throw NotSimplicialMap("vertex map is not simplicial");
  auto target = y.facets();
  std::vector<std::vector<Index>> at_vertex(y.cells(0));
  for (Index t = 0; t < target.size(); ++t)
    for (Index v : y.simplex(target[t].first, target[t].second)) at_vertex[v].push_back(t);
  CoarseCertificate cert;
  std::vector<std::size_t> back(target.size(), 0);
  for (auto [k, i] : m.facets()) {
    std::vector<Index> touched;
    for (Index v : m.simplex(k, i)) touched.insert(touched.end(), at_vertex[f[v]].begin(), at_vertex[f[v]].end());
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    cert.forward = std::max(cert.forward, touched.size());
    for (Index t : touched) cert.backward = std::max(cert.backward, ++back[t]);
  }
  return cert;
}

CompositionCheck compose_certificates(const CoarseCertificate& a, const CoarseCertificate& b,
                                      const CoarseCertificate& measured) {
  if (!a.exhaustive || !b.exhaustive || !measured.exhaustive)
    throw ComplexError("composition check needs exhaustive certificates");
  CompositionCheck out;
  out.forward_bound = a.forward * b.forward;
  out.backward_bound = a.backward * b.backward;
  out.forward_ratio = out.forward_bound ? static_cast<double>(measured.forward) / out.forward_bound : 0.0;
  out.backward_ratio = out.backward_bound ? static_cast<double>(measured.backward) / out.backward_bound : 0.0;
  if (measured.forward > out.forward_bound || measured.backward > out.backward_bound)
    throw CompositionBoundViolated("measured composition exceeds the product of constants");
  return out;
}

}  // namespace lqc
