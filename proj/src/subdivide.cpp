#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_map>

#include "lqc/complex.hpp"

namespace lqc {

namespace {

using Key = std::vector<std::pair<Index, std::uint32_t>>;  // (parent vertex, numerator), numerator > 0

struct KeyHash {
  std::size_t operator()(const Key& k) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (auto [v, a] : k) h = (h ^ (static_cast<std::size_t>(v) << 20 ^ a)) * 0x100000001b3ull;
    return h;
  }
};

// Assigns ids to subdivision vertices; parent vertices keep their own ids.
class VertexTable {
 public:
  VertexTable(std::size_t parent_vertices, std::uint32_t denominator) : denom_(denominator) {
    for (Index v = 0; v < parent_vertices; ++v) id(Key{{v, denom_}});
  }

  Index id(const Key& k) {
    auto [it, inserted] = ids_.emplace(k, static_cast<Index>(keys_.size()));
    if (inserted) keys_.push_back(k);
    return it->second;
  }

  std::vector<Carrier> carriers() const {
    std::vector<Carrier> out;
    out.reserve(keys_.size());
    for (const auto& k : keys_) {
      Carrier c;
      c.denominator = denom_;
      for (auto [v, a] : k) {
        c.vertices.push_back(v);
        c.numerators.push_back(a);
      }
      out.push_back(std::move(c));
    }
    return out;
  }

  std::size_t size() const { return keys_.size(); }

 private:
  std::uint32_t denom_;
  std::unordered_map<Key, Index, KeyHash> ids_;
  std::vector<Key> keys_;
};

std::optional<std::vector<Point>> carrier_coords(const CellComplex& x, const std::vector<Carrier>& carriers) {
  if (!x.coords()) return std::nullopt;
  const auto& pc = *x.coords();
  const std::size_t n = pc.empty() ? 0 : pc.front().size();
  std::vector<Point> out;
  out.reserve(carriers.size());
  for (const auto& c : carriers) {
    Point p(n, 0.0);
    for (std::size_t i = 0; i < c.vertices.size(); ++i) {
      double w = static_cast<double>(c.numerators[i]) / static_cast<double>(c.denominator);
      for (std::size_t a = 0; a < n; ++a) p[a] += w * pc[c.vertices[i]][a];
    }
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<std::uint32_t> y_to_a(const std::vector<std::uint32_t>& y, std::uint32_t r) {
  // y holds y_1..y_d; y_0 = r, y_{d+1} = 0.
  const std::size_t d = y.size();
  std::vector<std::uint32_t> a(d + 1);
  for (std::size_t j = 0; j <= d; ++j) {
    std::uint32_t hi = j == 0 ? r : y[j - 1];
    std::uint32_t lo = j == d ? 0 : y[j];
    a[j] = hi - lo;
  }
  return a;
}

}  // namespace

Simplex Subdivision::carrier_simplex(const Simplex& cell) const {
  Simplex out;
  for (Index v : cell) out.insert(out.end(), carriers.at(v).vertices.begin(), carriers.at(v).vertices.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Subdivision barycentric_subdivide(const CellComplex& x) {
  if (!x.simplicial()) throw NotSimplicial();
  std::vector<std::size_t> offset(static_cast<std::size_t>(x.dims()) + 2, 0);
  for (int k = 0; k <= x.dims(); ++k) offset[static_cast<std::size_t>(k) + 1] = offset[static_cast<std::size_t>(k)] + x.cells(k);

  Subdivision sd;
  sd.factor = 1;
  for (int k = 0; k <= x.dims(); ++k)
    for (const auto& s : x.simplices(k)) {
      Carrier c;
      c.vertices = s;
      c.numerators.assign(s.size(), 1);
      c.denominator = static_cast<std::uint32_t>(s.size());
      sd.carriers.push_back(std::move(c));
    }

  std::vector<Simplex> flags;
  for (auto [k, i] : x.facets()) {
    Simplex perm = x.simplex(k, i);
    do {
      Simplex flag;
      Simplex face;
      for (Index v : perm) {
        face.insert(std::upper_bound(face.begin(), face.end(), v), v);
        auto f = x.find(face);
        flag.push_back(static_cast<Index>(offset[face.size() - 1] + *f));
      }
      flags.push_back(std::move(flag));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  std::optional<std::vector<Point>> coords;
  if (x.coords()) {
    coords.emplace();
    const auto& pc = *x.coords();
    for (const auto& c : sd.carriers) {
      Point p(pc.empty() ? 0 : pc.front().size(), 0.0);
      for (Index v : c.vertices)
        for (std::size_t a = 0; a < p.size(); ++a) p[a] += pc[v][a] / static_cast<double>(c.vertices.size());
      coords->push_back(std::move(p));
    }
  }
  sd.complex = CellComplex::from_simplices(sd.carriers.size(), flags, std::move(coords));
  return sd;
}

std::vector<std::vector<std::vector<std::uint32_t>>> edgewise_pieces(int d, std::uint32_t r) {
  if (d < 0 || d > 3) throw UnsupportedDimension("edgewise subdivision supports dimension <= 3");
  if (r == 0) throw ComplexError("subdivision factor must be positive");
  std::vector<std::vector<std::vector<std::uint32_t>>> out;
  if (d == 0) {
    out.push_back({{r}});
    return out;
  }
  const auto du = static_cast<std::size_t>(d);
  std::vector<std::size_t> perm(du);
  std::vector<std::uint32_t> base(du, 0);
  auto in_region = [&](const std::vector<std::uint32_t>& y) {
    if (y[0] > r) return false;
    for (std::size_t j = 1; j < du; ++j)
      if (y[j] > y[j - 1]) return false;
    return true;
  };
  for (;;) {
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::vector<std::vector<std::uint32_t>> piece;
      std::vector<std::uint32_t> y = base;
      bool ok = in_region(y);
      piece.push_back(y_to_a(y, r));
      for (std::size_t s = 0; s < du && ok; ++s) {
        ++y[perm[s]];
        ok = in_region(y);
        piece.push_back(y_to_a(y, r));
      }
      if (ok) out.push_back(std::move(piece));
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::size_t a = du;
    while (a > 0) {
      --a;
      if (++base[a] < r) break;
      base[a] = 0;
      if (a == 0) return out;
    }
  }
}

Subdivision edgewise_subdivide(const CellComplex& x, std::uint32_t r) {
  if (!x.simplicial()) throw NotSimplicial();
  if (x.dims() > 3) throw UnsupportedDimension("edgewise subdivision supports dimension <= 3");
  if (r == 0) throw ComplexError("subdivision factor must be positive");

  std::vector<std::vector<std::vector<std::vector<std::uint32_t>>>> pieces;
  for (int d = 0; d <= x.dims(); ++d) pieces.push_back(edgewise_pieces(d, r));

  VertexTable table(x.cells(0), r);
  std::vector<Simplex> out;
  for (auto [k, i] : x.facets()) {
    const Simplex& s = x.simplex(k, i);
    for (const auto& piece : pieces[static_cast<std::size_t>(k)]) {
      Simplex cell;
      for (const auto& a : piece) {
        Key key;
        for (std::size_t j = 0; j < a.size(); ++j)
          if (a[j]) key.emplace_back(s[j], a[j]);
        cell.push_back(table.id(key));
      }
      std::sort(cell.begin(), cell.end());
      out.push_back(std::move(cell));
    }
  }
  Subdivision sd;
  sd.factor = r;
  sd.carriers = table.carriers();
  sd.complex = CellComplex::from_simplices(table.size(), out, carrier_coords(x, sd.carriers));
  return sd;
}

PieceLocation locate_in_edgewise(const std::vector<double>& barycentric, std::uint32_t r) {
  if (barycentric.empty()) throw ComplexError("empty barycentric coordinates");
  const std::size_t d = barycentric.size() - 1;
  const double rr = static_cast<double>(r);
  std::vector<double> y(d);
  double acc = 0.0;
  for (std::size_t j = d; j >= 1; --j) {
    acc += barycentric[j];
    y[j - 1] = std::clamp(acc * rr, 0.0, rr);
  }
  for (std::size_t j = 1; j < d; ++j) y[j] = std::min(y[j], y[j - 1]);
  std::vector<std::uint32_t> base(d);
  std::vector<double> frac(d);
  for (std::size_t j = 0; j < d; ++j) {
    double f = std::floor(y[j]);
    f = std::clamp(f, 0.0, rr - 1.0);
    base[j] = static_cast<std::uint32_t>(f);
    frac[j] = y[j] - f;
  }
  std::vector<std::size_t> order(d);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return frac[a] > frac[b]; });

  PieceLocation loc;
  std::vector<std::uint32_t> cur = base;
  loc.vertices.push_back(y_to_a(cur, r));
  loc.weights.push_back(1.0 - (d ? frac[order[0]] : 0.0));
  for (std::size_t s = 0; s < d; ++s) {
    ++cur[order[s]];
    loc.vertices.push_back(y_to_a(cur, r));
    loc.weights.push_back(frac[order[s]] - (s + 1 < d ? frac[order[s + 1]] : 0.0));
  }
  return loc;
}

}  // namespace lqc
