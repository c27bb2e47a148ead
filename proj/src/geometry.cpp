#include "lqc/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Dense>

namespace lqc {

double distance(const Point& a, const Point& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

namespace {

using Poly = std::vector<std::array<double, 2>>;

// Keeps the part of a convex polygon with c0 + c1*x + c2*y >= 0.
Poly clip(const Poly& in, double c0, double c1, double c2) {
  Poly out;
  const std::size_t n = in.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& p = in[i];
    const auto& q = in[(i + 1) % n];
    double fp = c0 + c1 * p[0] + c2 * p[1];
    double fq = c0 + c1 * q[0] + c2 * q[1];
    if (fp >= 0) out.push_back(p);
    if ((fp >= 0) != (fq >= 0)) {
      double t = fp / (fp - fq);
      out.push_back({p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])});
    }
  }
  return out;
}

constexpr double kTol = 1e-12;

}  // namespace

bool simplex_meets_box(const std::vector<const Point*>& verts, const std::vector<double>& lo,
                       const std::vector<double>& hi) {
  const std::size_t n = lo.size();
  const Point& v0 = *verts[0];
  if (verts.size() == 1) {
    for (std::size_t a = 0; a < n; ++a)
      if (v0[a] < lo[a] - kTol || v0[a] > hi[a] + kTol) return false;
    return true;
  }
  if (verts.size() == 2) {
    double t0 = 0, t1 = 1;
    const Point& v1 = *verts[1];
    for (std::size_t a = 0; a < n; ++a) {
      double d = v1[a] - v0[a];
      if (std::abs(d) < 1e-300) {
        if (v0[a] < lo[a] - kTol || v0[a] > hi[a] + kTol) return false;
        continue;
      }
      double ta = (lo[a] - v0[a]) / d, tb = (hi[a] - v0[a]) / d;
      if (ta > tb) std::swap(ta, tb);
      t0 = std::max(t0, ta);
      t1 = std::min(t1, tb);
      if (t0 > t1 + kTol) return false;
    }
    return true;
  }
  if (verts.size() != 3) throw UnsupportedDimension("box test supports simplices of dimension <= 2");
  const Point& v1 = *verts[1];
  const Point& v2 = *verts[2];
  Poly poly{{0, 0}, {1, 0}, {0, 1}};
  for (std::size_t a = 0; a < n && !poly.empty(); ++a) {
    double d1 = v1[a] - v0[a], d2 = v2[a] - v0[a];
    // lo <= v0 + l1 d1 + l2 d2 <= hi
    poly = clip(poly, v0[a] - lo[a] + kTol, d1, d2);
    if (poly.empty()) break;
    poly = clip(poly, hi[a] - v0[a] + kTol, -d1, -d2);
  }
  return !poly.empty();
}

std::vector<GridCell> cells_meeting(const std::vector<const Point*>& verts) {
  const std::size_t n = verts[0]->size();
  if (n > static_cast<std::size_t>(kMaxAmbient)) throw UnsupportedDimension("ambient dimension above 8");
  std::array<std::int32_t, kMaxAmbient> lo{}, hi{};
  for (std::size_t a = 0; a < n; ++a) {
    double mn = std::numeric_limits<double>::infinity(), mx = -mn;
    for (const Point* p : verts) {
      mn = std::min(mn, (*p)[a]);
      mx = std::max(mx, (*p)[a]);
    }
    lo[a] = static_cast<std::int32_t>(std::floor(mn));
    hi[a] = static_cast<std::int32_t>(std::floor(mx));
  }
  std::vector<GridCell> out;
  GridCell cur;
  for (std::size_t a = 0; a < n; ++a) cur.c[a] = lo[a];
  std::vector<double> blo(n), bhi(n);
  const bool single = verts.size() == 1;
  for (;;) {
    for (std::size_t a = 0; a < n; ++a) {
      blo[a] = cur.c[a];
      bhi[a] = cur.c[a] + 1.0 - kCellEta;
    }
    if (single || simplex_meets_box(verts, blo, bhi)) out.push_back(cur);
    std::size_t a = 0;
    while (a < n) {
      if (++cur.c[a] <= hi[a]) break;
      cur.c[a] = lo[a];
      ++a;
    }
    if (a == n) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Min distance between the affine hulls of two point sets restricted to
// nonnegative barycentric weights; returns infinity when the unconstrained
// minimizer falls outside either simplex.
double face_pair_distance(const std::vector<const Point*>& a, const std::vector<const Point*>& b) {
  const std::size_t n = a[0]->size();
  const std::size_t ka = a.size() - 1, kb = b.size() - 1;
  Eigen::MatrixXd m(n, ka + kb);
  Eigen::VectorXd rhs(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t i = 0; i < ka; ++i) m(r, i) = (*a[i + 1])[r] - (*a[0])[r];
    for (std::size_t j = 0; j < kb; ++j) m(r, ka + j) = -((*b[j + 1])[r] - (*b[0])[r]);
    rhs(r) = (*b[0])[r] - (*a[0])[r];
  }
  Eigen::VectorXd x = Eigen::VectorXd::Zero(ka + kb);
  if (ka + kb > 0) x = m.completeOrthogonalDecomposition().solve(rhs);
  const double tol = 1e-10;
  double sa = 0, sb = 0;
  for (std::size_t i = 0; i < ka; ++i) {
    if (x(i) < -tol) return std::numeric_limits<double>::infinity();
    sa += x(i);
  }
  for (std::size_t j = 0; j < kb; ++j) {
    if (x(ka + j) < -tol) return std::numeric_limits<double>::infinity();
    sb += x(ka + j);
  }
  if (sa > 1 + tol || sb > 1 + tol) return std::numeric_limits<double>::infinity();
  return (m * x - rhs).norm();
}

std::vector<std::vector<const Point*>> faces(const std::vector<const Point*>& s) {
  std::vector<std::vector<const Point*>> out;
  for (std::uint32_t mask = 1; mask < (1u << s.size()); ++mask) {
    std::vector<const Point*> f;
    for (std::size_t i = 0; i < s.size(); ++i)
      if ((mask >> i) & 1u) f.push_back(s[i]);
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace

double simplex_distance(const std::vector<const Point*>& a, const std::vector<const Point*>& b) {
  double best = std::numeric_limits<double>::infinity();
  auto fa = faces(a), fb = faces(b);
  for (const auto& f : fa)
    for (const auto& g : fb) best = std::min(best, face_pair_distance(f, g));
  return best;
}

double point_simplex_distance(const Point& p, const std::vector<const Point*>& verts) {
  return simplex_distance({&p}, verts);
}

double bilipschitz_distortion(const std::vector<const Point*>& verts, double side) {
  const std::size_t k = verts.size() - 1;
  if (k == 0) return 1.0;
  const std::size_t n = verts[0]->size();
  Eigen::MatrixXd e(n, k);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t r = 0; r < n; ++r) e(r, j) = ((*verts[j + 1])[r] - (*verts[0])[r]) / side;
  Eigen::MatrixXd g = e.transpose() * e;
  Eigen::MatrixXd g0 = Eigen::MatrixXd::Constant(k, k, 0.5);
  g0.diagonal().setOnes();
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> es(g, g0);
  double lo = es.eigenvalues().minCoeff(), hi = es.eigenvalues().maxCoeff();
  if (lo <= 1e-18) return std::numeric_limits<double>::infinity();
  return std::max(std::sqrt(hi), 1.0 / std::sqrt(lo));
}

}  // namespace lqc
