#include <algorithm>
#include <cmath>
#include <set>
#include <unordered_map>

#include "lqc/embed.hpp"

namespace lqc {

namespace {

struct ColoredCell {
  GridCell cell;
  std::uint32_t color = 0;
  friend bool operator==(const ColoredCell&, const ColoredCell&) = default;
};
struct ColoredCellHash {
  std::size_t operator()(const ColoredCell& c) const noexcept { return GridCellHash{}(c.cell) * 31 + c.color; }
};

struct CellCheck {
  std::vector<std::vector<GridCell>> cells;  // per facet, sorted
  std::vector<Index> bad_facets;             // facets counted in some violated event
  std::size_t events = 0;
  std::size_t violated = 0;
  std::size_t worst = 0;
  GridCell worst_cell;
  std::size_t tuple_events = 0;
};

// Counts, for every unit cell and facet color, the facets whose image meets
// the cell. With per_color = false all colors are pooled for the threshold.
CellCheck check_cells(const CellComplex& x, const std::vector<std::pair<int, Index>>& facets,
                      const std::vector<std::uint32_t>& color, const std::vector<Point>& coords, bool per_color,
                      std::size_t threshold, std::size_t tuple_size) {
  CellCheck out;
  out.cells.resize(facets.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::size_t f = 0; f < facets.size(); ++f) {
    std::vector<const Point*> verts;
    for (Index v : x.simplex(facets[f].first, facets[f].second)) verts.push_back(&coords[v]);
    out.cells[f] = cells_meeting(verts);
  }
  std::unordered_map<ColoredCell, std::size_t, ColoredCellHash> count, colored;
  for (std::size_t f = 0; f < facets.size(); ++f)
    for (const auto& c : out.cells[f]) {
      ++count[ColoredCell{c, per_color ? color[f] : 0u}];
      if (!per_color) ++colored[ColoredCell{c, color[f]}];
    }
  out.events = count.size();
  std::unordered_map<ColoredCell, char, ColoredCellHash> bad;
  for (const auto& [key, k] : count) {
    if (k > out.worst || (k == out.worst && key.cell < out.worst_cell)) {
      out.worst = k;
      out.worst_cell = key.cell;
    }
    if (k > threshold) {
      ++out.violated;
      bad.emplace(key, 1);
    }
  }
  for (const auto& [key, k] : per_color ? count : colored)
    if (k >= tuple_size) ++out.tuple_events;
  if (!bad.empty())
    for (Index f = 0; f < facets.size(); ++f)
      for (const auto& c : out.cells[f])
        if (bad.count(ColoredCell{c, per_color ? color[f] : 0u})) {
          out.bad_facets.push_back(f);
          break;
        }
  return out;
}

double max_edge_length(const CellComplex& x, const std::vector<Point>& coords) {
  double best = 0;
  if (x.dims() >= 1)
    for (const auto& e : x.simplices(1)) best = std::max(best, distance(coords[e[0]], coords[e[1]]));
  return best;
}

Simplex encode(const Carrier& c) {
  Simplex key;
  for (std::size_t j = 0; j < c.vertices.size(); ++j) {
    key.push_back(c.vertices[j]);
    key.push_back(c.numerators[j]);
  }
  return key;
}

std::vector<Index> facet_vertices(const CellComplex& x, const std::vector<std::pair<int, Index>>& facets,
                                  const std::vector<Index>& chosen) {
  std::vector<Index> out;
  for (Index f : chosen)
    for (Index v : x.simplex(facets[f].first, facets[f].second)) out.push_back(v);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

double predicted_count(const CellComplex& x, double r) {
  double total = 0;
  for (auto [k, i] : x.facets()) total += std::pow(r, k);
  return total;
}

}  // namespace

EmbedParams resolve_params(const CellComplex& x, EmbedParams p) {
  const double v = std::max<double>(1.0, static_cast<double>(x.volume()));
  const double l = std::max(std::log(v), p.log_floor);
  if (!p.a_max) p.a_max = static_cast<std::size_t>(p.n + 1) * (x.degree() + 1) * 4;
  if (!p.max_resamples) p.max_resamples = static_cast<std::size_t>(std::ceil(10.0 * v * l));
  return p;
}

EmbeddedComplex gg_embed(const CellComplex& x, const EmbedParams& params_in) {
  if (!x.simplicial()) throw NotSimplicial();
  const int m = x.dims();
  if (m < 0) throw DimensionError("empty complex");
  if (params_in.n <= m) throw DimensionError("target dimension must exceed the complex dimension");
  if (params_in.n < 2) throw DimensionError("target dimension must be at least 2");
  if (params_in.delta <= 0 || params_in.log_floor < 2) throw ComplexError("invalid embedding parameters");
  if (m > 2) throw UnsupportedDimension("embedding supports complexes of dimension <= 2");

  EmbeddedComplex out;
  out.base = x;
  out.params = resolve_params(x, params_in);
  const EmbedParams& p = out.params;
  const int n = p.n;
  const auto un = static_cast<std::size_t>(n);
  out.volume = std::max<double>(1.0, static_cast<double>(x.volume()));
  out.log_term = std::max(std::log(out.volume), p.log_floor);
  out.rho0 = std::pow(out.volume, 1.0 / (n - m));
  out.s = p.delta * std::pow(out.log_term, n + 1);
  out.R = out.rho0 * std::pow(out.log_term, n + 1);

  if (x.volume() <= 1 && x.cells(0) <= un) {
    std::vector<Point> coords(x.cells(0), Point(un, 0.0));
    for (Index v = 0; v < x.cells(0); ++v) coords[v][v] = 1.0 / std::sqrt(2.0);
    out.subdivision = edgewise_subdivide(x, 1);
    out.coords = coords;
    out.certificate = certify_coarse(out.subdivision.complex, out.coords);
    out.accepted = out.certificate.backward <= *p.a_max && out.certificate.bilipschitz_ratio <= p.bilipschitz_bound;
    return out;
  }

  const double predicted = predicted_count(x, out.rho0 * out.s);
  if (predicted > p.max_simplices)
    throw ResourceLimitExceeded("predicted final subdivision too large", predicted, p.max_simplices);

  const std::size_t budget = *p.max_resamples;
  std::size_t spent = 0;

  // Stage 0: vertices to random points of colored caps on the sphere of radius rho0.
  auto vcolor = greedy_color(vertex_graph(x));
  out.trace.colors_vertices = color_count(vcolor);
  auto caps = place_caps(n, out.rho0, out.trace.colors_vertices, p.min_sep_fraction);
  std::vector<Point> coords(x.cells(0));
  {
    auto rng = stream(p.seed, 1, 0);
    for (Index v = 0; v < x.cells(0); ++v) coords[v] = sample_in_cap(caps[vcolor[v]], out.rho0, rng);
  }

  // Stage 1: same-color facets meeting any unit cell stay below c1 * log.
  auto facets = x.facets();
  auto fcolor = greedy_color(facet_graph(x));
  out.trace.colors_facets = color_count(fcolor);
  out.trace.stage1.threshold = static_cast<std::size_t>(std::floor(p.c1 * out.log_term));
  for (std::size_t round = 0;; ++round) {
    auto chk = check_cells(x, facets, fcolor, coords, true, out.trace.stage1.threshold, un + 1);
    out.trace.stage1.violated_fraction.push_back(chk.events ? double(chk.violated) / double(chk.events) : 0.0);
    out.trace.stage1.worst_count = chk.worst;
    if (chk.violated == 0) break;
    auto redo = facet_vertices(x, facets, chk.bad_facets);
    spent += redo.size();
    if (spent > budget) throw ResampleBudgetExhausted(1, chk.worst_cell, chk.worst, spent);
    auto rng = stream(p.seed, 1, round + 1);
    for (Index v : redo) coords[v] = sample_in_cap(caps[vcolor[v]], out.rho0, rng);
    out.trace.stage1.rounds = round + 1;
    out.trace.stage1.resampled_vertices += redo.size();
  }

  // Stage 2: scale by s and subdivide so every piece has image diameter <= s.
  for (auto& c : coords)
    for (double& v : c) v *= out.s;
  out.r_mid = static_cast<std::uint32_t>(std::max(1.0, std::ceil(max_edge_length(x, coords) / out.s)));
  if (predicted_count(x, out.r_mid) > p.max_simplices)
    throw ResourceLimitExceeded("intermediate subdivision too large", predicted_count(x, out.r_mid), p.max_simplices);
  CellComplex placed = x;
  placed.set_coords(coords);
  Subdivision mid = edgewise_subdivide(placed, out.r_mid);
  const CellComplex& xm = mid.complex;
  const std::vector<Point> base = *xm.coords();

  // Stage 3: perturb at scale s inside caps of the radius-s sphere.
  auto mcolor = greedy_color(square_graph(vertex_graph(xm)));
  out.trace.colors_mid_vertices = color_count(mcolor);
  auto caps3 = place_caps(n, out.s, out.trace.colors_mid_vertices, p.min_sep_fraction);
  std::vector<Point> shift(xm.cells(0));
  {
    auto rng = stream(p.seed, 3, 0);
    for (Index v = 0; v < xm.cells(0); ++v) shift[v] = sample_in_cap(caps3[mcolor[v]], out.s, rng);
  }
  auto mfacets = xm.facets();
  auto mfcolor = greedy_color(facet_graph(xm));
  out.trace.colors_mid_facets = color_count(mfcolor);
  out.trace.stage3.threshold = (un + 1) * out.trace.colors_mid_facets;
  std::unordered_map<Simplex, Index, SimplexHash> mid_lookup;
  for (Index v = 0; v < mid.carriers.size(); ++v) mid_lookup.emplace(encode(mid.carriers[v]), v);
  std::vector<Point> i3(xm.cells(0));
  std::uint32_t built = 0;
  for (std::size_t round = 0;; ++round) {
    for (Index v = 0; v < xm.cells(0); ++v) {
      i3[v] = base[v];
      for (std::size_t a = 0; a < un; ++a) i3[v][a] += shift[v][a];
    }
    auto chk = check_cells(xm, mfacets, mfcolor, i3, false, out.trace.stage3.threshold, un + 1);
    out.trace.stage3.violated_fraction.push_back(chk.events ? double(chk.violated) / double(chk.events) : 0.0);
    out.trace.stage3.worst_count = chk.worst;
    out.trace.tuple_events = chk.tuple_events;
    std::vector<Index> bad = chk.bad_facets;

    // Final pieces are images of edgewise pieces of side 1/r_fin, so their
    // distortion is that of the parent image measured at side r_fin.
    out.r_fin = static_cast<std::uint32_t>(std::max(1.0, std::ceil(max_edge_length(xm, i3))));
    for (Index f = 0; f < mfacets.size(); ++f) {
      const Simplex& sf = xm.simplex(mfacets[f].first, mfacets[f].second);
      if (sf.size() < 2) continue;
      std::vector<const Point*> verts;
      for (Index v : sf) verts.push_back(&i3[v]);
      if (bilipschitz_distortion(verts, out.r_fin) > p.bilipschitz_bound) {
        bad.push_back(f);
        ++out.trace.stage3.distortion_events;
      }
    }

    if (bad.empty()) {
      // A finer edgewise subdivision refines the intermediate one, so I3 stays
      // affine on every final piece.
      const double final_count = predicted_count(x, double(out.r_total()));
      if (final_count > p.max_simplices)
        throw ResourceLimitExceeded("final subdivision too large", final_count, p.max_simplices);
      if (built != out.r_total()) {
        out.subdivision = edgewise_subdivide(x, out.r_total());
        built = out.r_total();
      }
      const auto& fc = out.subdivision.carriers;
      out.coords.assign(fc.size(), Point(un, 0.0));
#pragma omp parallel for schedule(static)
      for (std::size_t v = 0; v < fc.size(); ++v) {
        const Carrier& c = fc[v];
        std::vector<double> lambda;
        for (auto a : c.numerators) lambda.push_back(double(a) / double(c.denominator));
        auto loc = locate_in_edgewise(lambda, out.r_mid);
        for (std::size_t j = 0; j < loc.vertices.size(); ++j) {
          if (loc.weights[j] == 0) continue;
          Carrier key;
          for (std::size_t t = 0; t < c.vertices.size(); ++t)
            if (loc.vertices[j][t]) {
              key.vertices.push_back(c.vertices[t]);
              key.numerators.push_back(loc.vertices[j][t]);
            }
          const Point& q = i3[mid_lookup.at(encode(key))];
          for (std::size_t a = 0; a < un; ++a) out.coords[v][a] += loc.weights[j] * q[a];
        }
      }
      out.certificate = certify_coarse(out.subdivision.complex, out.coords);
      if (out.certificate.backward <= *p.a_max) break;
      ++out.trace.stage3.final_events;
      auto over = overloaded_cells(out.subdivision.complex, out.coords, *p.a_max);
      for (Index f = 0; f < mfacets.size(); ++f)
        for (const auto& c : chk.cells[f])
          if (std::binary_search(over.begin(), over.end(), c)) {
            bad.push_back(f);
            break;
          }
    }
    std::sort(bad.begin(), bad.end());
    bad.erase(std::unique(bad.begin(), bad.end()), bad.end());
    auto redo = facet_vertices(xm, mfacets, bad);
    spent += redo.size();
    if (spent > budget) throw ResampleBudgetExhausted(3, chk.worst_cell, chk.worst, spent);
    auto rng = stream(p.seed, 3, round + 1);
    for (Index v : redo) shift[v] = sample_in_cap(caps3[mcolor[v]], out.s, rng);
    out.trace.stage3.rounds = round + 1;
    out.trace.stage3.resampled_vertices += redo.size();
  }
  out.accepted = out.certificate.backward <= *p.a_max && out.certificate.bilipschitz_ratio <= p.bilipschitz_bound;
  return out;
}

std::vector<Point> perturb_general_position(const CellComplex& y, const std::vector<Point>& coords, int ambient_dim,
                                            double sep, const EmbedParams& params) {
  if (2 * y.dims() > ambient_dim - 1) throw DimensionError("complex dimension too large for general position");
  if (coords.size() != y.cells(0)) throw ComplexError("one coordinate per vertex required");
  std::vector<std::pair<int, Index>> cells;
  for (int k = 0; k <= y.dims(); ++k)
    for (Index i = 0; i < y.cells(k); ++i) cells.emplace_back(k, i);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < cells.size(); ++a)
    for (std::size_t b = a + 1; b < cells.size(); ++b) {
      const Simplex& sa = y.simplex(cells[a].first, cells[a].second);
      const Simplex& sb = y.simplex(cells[b].first, cells[b].second);
      bool share = std::any_of(sa.begin(), sa.end(),
                               [&](Index v) { return std::binary_search(sb.begin(), sb.end(), v); });
      if (!share) pairs.emplace_back(a, b);
    }
  const std::size_t budget = params.max_resamples.value_or(1000 * std::max<std::size_t>(1, coords.size()));
  const double step = 0.01 * (1.0 - 1e-9);
  const auto un = static_cast<std::size_t>(ambient_dim);
  std::vector<Point> out = coords;
  std::size_t spent = 0;
  for (std::uint64_t round = 0;; ++round) {
    std::vector<char> bad_pair(pairs.size(), 0);
#pragma omp parallel for schedule(dynamic, 64)
    for (std::size_t t = 0; t < pairs.size(); ++t) {
      std::vector<const Point*> a, b;
      for (Index v : y.simplex(cells[pairs[t].first].first, cells[pairs[t].first].second)) a.push_back(&out[v]);
      for (Index v : y.simplex(cells[pairs[t].second].first, cells[pairs[t].second].second)) b.push_back(&out[v]);
      bad_pair[t] = simplex_distance(a, b) < sep;
    }
    std::set<Index> redo;
    for (std::size_t t = 0; t < pairs.size(); ++t)
      if (bad_pair[t]) {
        for (Index v : y.simplex(cells[pairs[t].first].first, cells[pairs[t].first].second)) redo.insert(v);
        for (Index v : y.simplex(cells[pairs[t].second].first, cells[pairs[t].second].second)) redo.insert(v);
      }
    if (redo.empty()) return out;
    spent += redo.size();
    if (spent > budget) throw ResampleBudgetExhausted(4, GridCell{}, redo.size(), spent);
    auto rng = stream(params.seed, 4, round);
    std::normal_distribution<double> gauss;
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (Index v : redo) {
      Point dir(un);
      double norm = 0;
      for (double& d : dir) {
        d = gauss(rng);
        norm += d * d;
      }
      norm = std::sqrt(norm);
      double r = step * std::pow(unit(rng), 1.0 / ambient_dim);
      for (std::size_t a = 0; a < un; ++a) out[v][a] = coords[v][a] + r * dir[a] / norm;
    }
  }
}

}  // namespace lqc
