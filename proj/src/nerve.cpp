#include "lqc/nerve.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <set>

#include <Eigen/Dense>

#include "lqc/geometry.hpp"

namespace lqc {

namespace {

constexpr std::uint32_t kFine = 4;

Simplex encode(const std::vector<Index>& vertices, const std::vector<std::uint32_t>& numerators) {
  Simplex key;
  for (std::size_t j = 0; j < vertices.size(); ++j) {
    key.push_back(vertices[j]);
    key.push_back(numerators[j]);
  }
  return key;
}

bool close_to_barycentric(const std::vector<double>& w) {
  double s = 0;
  for (double v : w) {
    if (v < -1e-9 || !std::isfinite(v)) return false;
    s += v;
  }
  return std::abs(s - 1.0) < 1e-7;
}

}  // namespace

Simplex NerveMapPoint::support() const {
  Simplex s;
  for (auto [i, w] : weights) s.push_back(i);
  return s;
}

Cover make_cover(CellComplex base, std::vector<std::vector<CellRef>> sets, std::vector<Index> centers) {
  if (!base.simplicial()) throw NotSimplicial();
  if (!base.coords()) throw NoCoordinates();
  if (!centers.empty() && centers.size() != sets.size()) throw InvalidCover("one center per set required");
  Cover c;
  c.base = std::move(base);
  c.sets = std::move(sets);
  c.centers = std::move(centers);
  const CellComplex& x = c.base;

  c.cell_offset.assign(static_cast<std::size_t>(x.dims()) + 2, 0);
  for (int k = 0; k <= x.dims(); ++k)
    c.cell_offset[static_cast<std::size_t>(k) + 1] = c.cell_offset[static_cast<std::size_t>(k)] + x.cells(k);
  c.cell_sets.assign(c.cell_offset.back(), {});
  for (Index i = 0; i < c.sets.size(); ++i) {
    auto& s = c.sets[i];
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (auto [k, idx] : s) {
      if (k < 0 || k > x.dims() || idx >= x.cells(k)) throw InvalidCover("set names a missing cell");
      c.cell_sets[c.cell_offset[static_cast<std::size_t>(k)] + idx].push_back(i);
    }
  }
  for (const auto& cs : c.cell_sets) {
    if (cs.empty()) throw InvalidCover("cover misses a cell");
    c.multiplicity = std::max(c.multiplicity, cs.size());
  }

  c.fine = edgewise_subdivide(x, kFine);
  const auto& carriers = c.fine.carriers;
  const std::size_t nv = carriers.size();
  for (Index v = 0; v < nv; ++v) c.fine_lookup.emplace(encode(carriers[v].vertices, carriers[v].numerators), v);

  std::vector<std::vector<Index>> members(c.sets.size());  // fine vertices in each open set
  std::vector<std::vector<Index>> vertex_sets(nv);
  for (Index v = 0; v < nv; ++v) {
    const auto& cv = carriers[v].vertices;
    int k = static_cast<int>(cv.size()) - 1;
    auto idx = x.find(cv);
    if (!idx) throw ComplexError("subdivision vertex without a parent cell");
    vertex_sets[v] = c.sets_containing(k, *idx);
    for (Index i : vertex_sets[v]) members[i].push_back(v);
  }
  std::vector<std::vector<Index>> adj(nv);
  if (c.fine.complex.dims() >= 1)
    for (const auto& e : c.fine.complex.simplices(1)) {
      adj[e[0]].push_back(e[1]);
      adj[e[1]].push_back(e[0]);
    }

  c.vertex_depth.assign(nv, {});
  c.margins.assign(c.sets.size(), 0.0);
  std::vector<int> hops(nv, -1);
  std::vector<char> inside(nv, 0);
  for (Index i = 0; i < c.sets.size(); ++i) {
    for (Index v : members[i]) inside[v] = 1;
    std::deque<Index> queue;
    for (Index v : members[i])
      for (Index u : adj[v])
        if (!inside[u] && hops[u] < 0) {
          hops[u] = 0;
          queue.push_back(u);
        }
    std::vector<Index> touched(queue.begin(), queue.end());
    while (!queue.empty()) {
      Index v = queue.front();
      queue.pop_front();
      for (Index u : adj[v])
        if (inside[u] && hops[u] < 0) {
          hops[u] = hops[v] + 1;
          touched.push_back(u);
          queue.push_back(u);
        }
    }
    for (Index v : members[i]) {
      double d = hops[v] < 0 ? 1.0 : static_cast<double>(hops[v]) / kFine;
      c.vertex_depth[v].emplace_back(i, d);
      c.margins[i] = std::max(c.margins[i], d);
    }
    for (Index v : touched) hops[v] = -1;
    for (Index v : members[i]) inside[v] = 0;
  }

  c.depth = std::numeric_limits<double>::infinity();
  for (const auto& vd : c.vertex_depth) {
    double best = 0;
    for (auto [i, d] : vd) best = std::max(best, d);
    c.depth = std::min(c.depth, best);
  }
  if (nv == 0) c.depth = 0;

  const auto& coords = *x.coords();
  for (Index i = 0; i < c.sets.size(); ++i) {
    std::set<Index> verts;
    for (auto [k, idx] : c.sets[i])
      for (Index v : x.simplex(k, idx)) verts.insert(v);
    double best = std::numeric_limits<double>::infinity();
    for (Index a : verts) {
      double far = 0;
      for (Index b : verts) far = std::max(far, distance(coords[a], coords[b]));
      best = std::min(best, far);
    }
    if (!verts.empty()) c.radius = std::max(c.radius, best);
  }
  return c;
}

Cover star_cover(const CellComplex& x) {
  if (!x.simplicial()) throw NotSimplicial();
  if (!x.coords()) throw NoCoordinates();
  std::vector<std::vector<CellRef>> sets(x.cells(0));
  for (int k = 0; k <= x.dims(); ++k)
    for (Index i = 0; i < x.cells(k); ++i)
      for (Index v : x.simplex(k, i)) sets[v].emplace_back(k, i);
  std::vector<Index> centers(x.cells(0));
  for (Index v = 0; v < centers.size(); ++v) centers[v] = v;
  return make_cover(x, std::move(sets), std::move(centers));
}

NerveMapPoint partition_of_unity(const Cover& c, const ComplexPoint& p) {
  const CellComplex& x = c.base;
  if (p.dim < 0 || p.dim > x.dims() || p.simplex >= x.cells(p.dim) ||
      p.weights.size() != static_cast<std::size_t>(p.dim) + 1 || !close_to_barycentric(p.weights))
    throw PointOutsideComplex("point does not lie on the complex");
  const Simplex& s = x.simplex(p.dim, p.simplex);
  std::vector<double> w = p.weights;
  double total = 0;
  for (double& v : w) {
    if (v < 1e-12) v = 0.0;
    total += v;
  }
  for (double& v : w) v /= total;

  auto loc = locate_in_edgewise(w, kFine);
  std::vector<std::pair<Index, double>> acc;
  for (std::size_t j = 0; j < loc.vertices.size(); ++j) {
    if (loc.weights[j] <= 0) continue;
    std::vector<Index> cv;
    std::vector<std::uint32_t> num;
    for (std::size_t t = 0; t < s.size(); ++t)
      if (loc.vertices[j][t]) {
        cv.push_back(s[t]);
        num.push_back(loc.vertices[j][t]);
      }
    Index fv = c.fine_lookup.at(encode(cv, num));
    for (auto [i, d] : c.vertex_depth[fv]) acc.emplace_back(i, loc.weights[j] * d);
  }
  std::sort(acc.begin(), acc.end());
  NerveMapPoint out;
  double sum = 0;
  for (auto [i, v] : acc) {
    if (!out.weights.empty() && out.weights.back().first == i)
      out.weights.back().second += v;
    else
      out.weights.emplace_back(i, v);
    sum += v;
  }
  std::erase_if(out.weights, [](const auto& e) { return e.second <= 0; });
  if (sum <= 0) {
    // Every nearby subdivision vertex sits on a set boundary: fall back to
    // equal weights on the sets containing the open cell of p.
    Simplex face;
    for (std::size_t t = 0; t < s.size(); ++t)
      if (w[t] > 0) face.push_back(s[t]);
    const auto& sets = c.sets_containing(static_cast<int>(face.size()) - 1, *x.find(face));
    out.weights.clear();
    for (Index i : sets) out.weights.emplace_back(i, 1.0 / static_cast<double>(sets.size()));
    return out;
  }
  for (auto& e : out.weights) e.second /= sum;
  return out;
}

NerveMapPoint partition_of_unity(const Cover& c, const Point& p) { return partition_of_unity(c, locate(c.base, p)); }

CellComplex nerve_complex(const Cover& c) {
  std::set<Simplex> simplices;
  for (const auto& cs : c.cell_sets) simplices.insert(cs);
  std::vector<Simplex> facets(simplices.begin(), simplices.end());
  std::vector<Point> coords;
  if (c.base.coords()) {
    const auto& bc = *c.base.coords();
    for (Index i = 0; i < c.sets.size(); ++i) {
      if (!c.centers.empty()) {
        coords.push_back(bc[c.centers[i]]);
        continue;
      }
      std::set<Index> verts;
      for (auto [k, idx] : c.sets[i])
        for (Index v : c.base.simplex(k, idx)) verts.insert(v);
      Point m(bc.empty() ? 0 : bc[0].size(), 0.0);
      for (Index v : verts)
        for (std::size_t a = 0; a < m.size(); ++a) m[a] += bc[v][a] / static_cast<double>(verts.size());
      coords.push_back(std::move(m));
    }
  }
  return CellComplex::from_simplices(c.sets.size(), facets,
                                     coords.empty() ? std::nullopt : std::optional<std::vector<Point>>(coords));
}

ComplexPoint nerve_map(const Cover& c, const CellComplex& nerve, const ComplexPoint& p) {
  auto w = partition_of_unity(c, p);
  Simplex s = w.support();
  auto idx = nerve.find(s);
  if (!idx) throw ComplexError("nerve map support is not a nerve simplex");
  ComplexPoint out;
  out.dim = static_cast<int>(s.size()) - 1;
  out.simplex = *idx;
  for (auto [i, v] : w.weights) out.weights.push_back(v);
  return out;
}

ComplexPoint random_point(const CellComplex& x, std::mt19937_64& rng) {
  auto facets = x.facets();
  if (facets.empty()) throw PointOutsideComplex("empty complex");
  std::uniform_int_distribution<std::size_t> pick(0, facets.size() - 1);
  auto [k, i] = facets[pick(rng)];
  std::exponential_distribution<double> ex(1.0);
  ComplexPoint p{k, i, {}};
  double s = 0;
  for (int t = 0; t <= k; ++t) {
    p.weights.push_back(ex(rng));
    s += p.weights.back();
  }
  for (double& v : p.weights) v /= s;
  return p;
}

Point ambient(const CellComplex& x, const ComplexPoint& p) {
  if (!x.coords()) throw NoCoordinates();
  const auto& coords = *x.coords();
  const Simplex& s = x.simplex(p.dim, p.simplex);
  Point out(coords[s[0]].size(), 0.0);
  for (std::size_t j = 0; j < s.size(); ++j)
    for (std::size_t a = 0; a < out.size(); ++a) out[a] += p.weights[j] * coords[s[j]][a];
  return out;
}

ComplexPoint locate(const CellComplex& x, const Point& p) {
  if (!x.coords()) throw NoCoordinates();
  const auto& coords = *x.coords();
  for (auto [k, i] : x.facets()) {
    const Simplex& s = x.simplex(k, i);
    const Point& v0 = coords[s[0]];
    if (v0.size() != p.size()) throw PointOutsideComplex("point has the wrong ambient dimension");
    std::vector<double> w(s.size());
    if (k == 0) {
      if (distance(v0, p) > 1e-9) continue;
      w[0] = 1.0;
    } else {
      Eigen::MatrixXd m(p.size(), k);
      Eigen::VectorXd rhs(p.size());
      for (std::size_t a = 0; a < p.size(); ++a) {
        for (int j = 0; j < k; ++j) m(a, j) = coords[s[static_cast<std::size_t>(j) + 1]][a] - v0[a];
        rhs(a) = p[a] - v0[a];
      }
      Eigen::VectorXd sol = m.colPivHouseholderQr().solve(rhs);
      if ((m * sol - rhs).norm() > 1e-9) continue;
      double rest = 1.0;
      for (int j = 0; j < k; ++j) {
        w[static_cast<std::size_t>(j) + 1] = sol(j);
        rest -= sol(j);
      }
      w[0] = rest;
      if (std::any_of(w.begin(), w.end(), [](double v) { return v < -1e-9; })) continue;
    }
    return ComplexPoint{k, i, std::move(w)};
  }
  throw PointOutsideComplex("no simplex contains the point");
}

LipschitzEstimate sample_lipschitz(const Cover& c, std::size_t pairs, double step, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<std::pair<ComplexPoint, ComplexPoint>> samples;
  samples.reserve(pairs);
  while (samples.size() < pairs) {
    ComplexPoint p = random_point(c.base, rng);
    if (p.dim == 0) continue;
    ComplexPoint q = p;
    double mean = 0;
    std::vector<double> dir(p.weights.size());
    for (double& v : dir) {
      v = gauss(rng);
      mean += v / static_cast<double>(dir.size());
    }
    double norm = 0;
    for (double& v : dir) {
      v -= mean;
      norm += v * v;
    }
    norm = std::sqrt(norm);
    if (norm == 0) continue;
    bool ok = true;
    for (std::size_t j = 0; j < dir.size(); ++j) {
      q.weights[j] += step * dir[j] / norm;
      ok = ok && q.weights[j] >= 0;
    }
    if (ok) samples.emplace_back(std::move(p), std::move(q));
  }
  std::vector<double> ratio(samples.size());
#pragma omp parallel for schedule(static)
  for (std::size_t t = 0; t < samples.size(); ++t) {
    const auto& [p, q] = samples[t];
    double d = 0;
    for (std::size_t j = 0; j < p.weights.size(); ++j) d += (p.weights[j] - q.weights[j]) * (p.weights[j] - q.weights[j]);
    d = std::sqrt(d / 2.0);
    auto a = partition_of_unity(c, p).weights, b = partition_of_unity(c, q).weights;
    double diff = 0;
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].first < b[j].first))
        diff += a[i++].second;
      else if (i == a.size() || b[j].first < a[i].first)
        diff += b[j++].second;
      else
        diff += std::abs(a[i++].second - b[j++].second);
    }
    ratio[t] = diff / d;
  }
  LipschitzEstimate est;
  est.pairs = samples.size();
  for (double r : ratio) est.max_ratio = std::max(est.max_ratio, r);
  return est;
}

std::vector<Simplex> unhit_nerve_simplices(const Cover& c, const CellComplex& nerve, std::size_t samples,
                                           std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::set<Simplex> hit;
  for (std::size_t t = 0; t < samples; ++t) hit.insert(partition_of_unity(c, random_point(c.base, rng)).support());
  std::vector<Simplex> out;
  for (int k = 0; k <= nerve.dims(); ++k)
    for (const auto& s : nerve.simplices(k)) {
      bool covered = std::any_of(hit.begin(), hit.end(), [&](const Simplex& h) {
        return std::includes(h.begin(), h.end(), s.begin(), s.end());
      });
      if (!covered) out.push_back(s);
    }
  return out;
}

}  // namespace lqc
