#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <Eigen/Dense>
#include <boost/math/special_functions/beta.hpp>

#include "lqc/embed.hpp"

namespace lqc {

std::mt19937_64 stream(std::uint64_t seed, std::uint64_t stage, std::uint64_t round) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stage), static_cast<std::uint32_t>(round),
                    static_cast<std::uint32_t>(round >> 32)};
  return std::mt19937_64(seq);
}

std::vector<std::uint32_t> greedy_color(const Graph& g) {
  constexpr auto kNone = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> color(g.size(), kNone);
  std::vector<char> used;
  for (Index v = 0; v < g.size(); ++v) {
    used.assign(g.adj[v].size() + 1, 0);
    for (Index u : g.adj[v])
      if (color[u] != kNone && color[u] < used.size()) used[color[u]] = 1;
    std::uint32_t c = 0;
    while (used[c]) ++c;
    color[v] = c;
  }
  return color;
}

std::size_t color_count(const std::vector<std::uint32_t>& colors) {
  std::size_t k = 0;
  for (auto c : colors) k = std::max<std::size_t>(k, c + 1);
  return k;
}

Graph vertex_graph(const CellComplex& x) {
  Graph g(x.cells(0));
  if (x.dims() >= 1)
    for (const auto& e : x.simplices(1)) g.add_edge(e[0], e[1]);
  g.normalize();
  return g;
}

Graph square_graph(const Graph& g) {
  Graph out(g.size());
  for (Index v = 0; v < g.size(); ++v)
    for (Index u : g.adj[v]) {
      out.add_edge(v, u);
      for (Index w : g.adj[u])
        if (w > v) out.add_edge(v, w);
    }
  out.normalize();
  return out;
}

Graph facet_graph(const CellComplex& x) {
  auto facets = x.facets();
  std::vector<std::vector<Index>> at_vertex(x.cells(0));
  for (Index f = 0; f < facets.size(); ++f)
    for (Index v : x.simplex(facets[f].first, facets[f].second)) at_vertex[v].push_back(f);
  Graph g(facets.size());
  for (const auto& list : at_vertex)
    for (std::size_t a = 0; a < list.size(); ++a)
      for (std::size_t b = a + 1; b < list.size(); ++b) g.add_edge(list[a], list[b]);
  g.normalize();
  return g;
}

double cap_fraction(int n, double theta) {
  if (n < 2) throw DimensionError("caps need n >= 2");
  theta = std::clamp(theta, 0.0, std::numbers::pi);
  double s = std::sin(std::min(theta, std::numbers::pi - theta));
  double half = 0.5 * boost::math::ibeta((n - 1) / 2.0, 0.5, s * s);
  return theta <= std::numbers::pi / 2 ? half : 1.0 - half;
}

namespace {

double angle_between(const Point& a, const Point& b) {
  double dot = 0, na = 0, nb = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    dot += a[i] * b[i];
    na += a[i] * a[i];
    nb += b[i] * b[i];
  }
  return std::acos(std::clamp(dot / std::sqrt(na * nb), -1.0, 1.0));
}

std::vector<Point> simplex_layout(int n, std::size_t k) {
  if (k == 1) {
    Point p(static_cast<std::size_t>(n), 0.0);
    p[0] = 1;
    return {p};
  }
  Eigen::MatrixXd a = Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k)) -
                      Eigen::MatrixXd::Constant(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k), 1.0 / k);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
  // Eigenvalues ascend: the first is 0 (the all-ones direction), the rest 1.
  Eigen::MatrixXd coords = a * es.eigenvectors().rightCols(static_cast<Eigen::Index>(k) - 1);
  std::vector<Point> out;
  for (std::size_t i = 0; i < k; ++i) {
    Point p(static_cast<std::size_t>(n), 0.0);
    double norm = coords.row(static_cast<Eigen::Index>(i)).norm();
    for (std::size_t j = 0; j + 1 < k; ++j) p[j] = coords(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) / norm;
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<Point> center_layout(int n, std::size_t k) {
  const auto un = static_cast<std::size_t>(n);
  std::vector<Point> out;
  if (n == 2) {
    for (std::size_t i = 0; i < k; ++i) {
      double a = 2 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(k);
      out.push_back({std::cos(a), std::sin(a)});
    }
    return out;
  }
  if (k <= un + 1) return simplex_layout(n, k);
  if (k <= 2 * un) {
    for (std::size_t i = 0; i < k; ++i) {
      Point p(un, 0.0);
      p[i / 2] = i % 2 ? -1.0 : 1.0;
      out.push_back(std::move(p));
    }
    return out;
  }
  if (n == 3) {
    const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
    for (std::size_t i = 0; i < k; ++i) {
      double z = 1.0 - 2.0 * (static_cast<double>(i) + 0.5) / static_cast<double>(k);
      double r = std::sqrt(1.0 - z * z);
      double a = golden * static_cast<double>(i);
      out.push_back({r * std::cos(a), r * std::sin(a), z});
    }
    return out;
  }
  // Farthest-point selection from a fixed candidate cloud.
  std::mt19937_64 rng(0x5eed);
  std::normal_distribution<double> gauss;
  std::vector<Point> cand(4096, Point(un));
  for (auto& p : cand) {
    double s = 0;
    for (double& v : p) {
      v = gauss(rng);
      s += v * v;
    }
    for (double& v : p) v /= std::sqrt(s);
  }
  std::vector<double> best(cand.size(), std::numeric_limits<double>::infinity());
  std::size_t pick = 0;
  for (std::size_t i = 0; i < k; ++i) {
    out.push_back(cand[pick]);
    std::size_t next = 0;
    for (std::size_t c = 0; c < cand.size(); ++c) {
      best[c] = std::min(best[c], angle_between(cand[c], cand[pick]));
      if (best[c] > best[next]) next = c;
    }
    pick = next;
  }
  return out;
}

}  // namespace

double cap_distance(const Cap& a, const Cap& b, double radius) {
  double gap = angle_between(a.center, b.center) - a.angle - b.angle;
  return gap <= 0 ? 0.0 : 2.0 * radius * std::sin(gap / 2.0);
}

std::vector<Cap> place_caps(int n, double radius, std::size_t count, double min_sep_fraction) {
  if (n < 2) throw DimensionError("caps need n >= 2");
  if (count == 0) throw InfeasibleCaps("no caps requested");
  const double fraction = 0.25 / static_cast<double>(count);
  double s2 = boost::math::ibeta_inv((n - 1) / 2.0, 0.5, 2.0 * fraction);
  double theta = std::asin(std::sqrt(s2));
  std::vector<Cap> caps;
  for (auto& c : center_layout(n, count)) {
    for (double& v : c) v *= radius;
    caps.push_back(Cap{std::move(c), theta});
  }
  for (std::size_t i = 0; i < caps.size(); ++i)
    for (std::size_t j = i + 1; j < caps.size(); ++j)
      if (cap_distance(caps[i], caps[j], radius) < min_sep_fraction * radius)
        throw InfeasibleCaps("caps closer than the requested separation");
  return caps;
}

Point sample_in_cap(const Cap& cap, double radius, std::mt19937_64& rng) {
  const std::size_t n = cap.center.size();
  if (n == 2) {
    std::uniform_real_distribution<double> u(-cap.angle, cap.angle);
    double base = std::atan2(cap.center[1], cap.center[0]) + u(rng);
    return {radius * std::cos(base), radius * std::sin(base)};
  }
  std::normal_distribution<double> gauss;
  Point p(n);
  for (;;) {
    double s = 0;
    for (double& v : p) {
      v = gauss(rng);
      s += v * v;
    }
    s = std::sqrt(s);
    for (double& v : p) v *= radius / s;
    if (angle_between(p, cap.center) <= cap.angle) return p;
  }
}

}  // namespace lqc
