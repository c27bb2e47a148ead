#include <algorithm>
#include <map>
#include <unordered_map>

#include "lqc/complex.hpp"

namespace lqc {

bool is_simplicial_map(const CellComplex& from, const std::vector<Index>& f, const CellComplex& to) {
  if (!from.simplicial() || !to.simplicial()) throw NotSimplicial();
  if (f.size() != from.cells(0)) return false;
  for (Index v : f)
    if (v >= to.cells(0)) return false;
  for (auto [k, i] : from.facets()) {
    Simplex img;
    for (Index v : from.simplex(k, i)) img.push_back(f[v]);
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());
    if (!to.find(img)) return false;
  }
  return true;
}

namespace {

using Key = std::vector<std::pair<Index, std::uint32_t>>;

struct KeyHash {
  std::size_t operator()(const Key& k) const noexcept {
    std::size_t h = 0x84222325cbf29ce4ull;
    for (auto [v, a] : k) h = (h ^ (static_cast<std::size_t>(v) * 131 + a)) * 0x100000001b3ull;
    return h;
  }
};

Key normalize(Key k) {
  std::sort(k.begin(), k.end());
  Key out;
  for (auto [v, a] : k) {
    if (!a) continue;
    if (!out.empty() && out.back().first == v)
      out.back().second += a;
    else
      out.emplace_back(v, a);
  }
  return out;
}

}  // namespace

Pullback subdivide_pullback(const CellComplex& m, const std::vector<Index>& f, const CellComplex& x,
                            const Subdivision& x_subdivided) {
  if (!m.simplicial() || !x.simplicial()) throw NotSimplicial();
  if (m.dims() > 2) throw UnsupportedDimension("pullback supports source dimension <= 2");
  if (!is_simplicial_map(m, f, x)) throw NotSimplicialMap("vertex map is not simplicial");
  const std::uint32_t r = x_subdivided.factor;
  if (x_subdivided.carriers.size() != x_subdivided.complex.cells(0))
    throw ComplexError("subdivision carriers do not match its vertices");
  for (const auto& c : x_subdivided.carriers)
    if (c.denominator != r) throw ComplexError("pullback needs an edgewise subdivision of the target");

  std::unordered_map<Key, Index, KeyHash> target;
  for (Index v = 0; v < x_subdivided.carriers.size(); ++v) {
    const auto& c = x_subdivided.carriers[v];
    Key k;
    for (std::size_t i = 0; i < c.vertices.size(); ++i) k.emplace_back(c.vertices[i], c.numerators[i]);
    target.emplace(normalize(k), v);
  }

  std::unordered_map<Key, Index, KeyHash> ids;
  std::vector<Key> keys;
  auto vertex = [&](Key k) {
    k = normalize(std::move(k));
    auto [it, inserted] = ids.emplace(k, static_cast<Index>(keys.size()));
    if (inserted) keys.push_back(k);
    return it->second;
  };
  for (Index v = 0; v < m.cells(0); ++v) vertex(Key{{v, r}});

  const auto pieces1 = edgewise_pieces(1, r);
  const auto pieces2 = edgewise_pieces(2, r);
  std::vector<Simplex> cells;
  auto emit = [&](Simplex s) {
    std::sort(s.begin(), s.end());
    cells.push_back(std::move(s));
  };

  for (auto [k, i] : m.facets()) {
    Simplex s = m.simplex(k, i);
    // Order the simplex by its image so the subdivision matches the target's.
    std::stable_sort(s.begin(), s.end(), [&](Index a, Index b) { return f[a] < f[b]; });
    std::size_t distinct = 1;
    for (std::size_t j = 1; j < s.size(); ++j)
      if (f[s[j]] != f[s[j - 1]]) ++distinct;

    if (k == 0 || distinct == 1) {
      emit(m.simplex(k, i));
    } else if (static_cast<int>(distinct) == k + 1) {
      const auto& pieces = k == 1 ? pieces1 : pieces2;
      for (const auto& piece : pieces) {
        Simplex cell;
        for (const auto& a : piece) {
          Key key;
          for (std::size_t j = 0; j < a.size(); ++j) key.emplace_back(s[j], a[j]);
          cell.push_back(vertex(key));
        }
        emit(cell);
      }
    } else {
      // Triangle folded onto an edge: s = (u, v, w) with f(u) = f(v) != f(w),
      // or f(u) != f(v) = f(w). Cut into strips along the level sets of the image.
      Index u, v, w;
      if (f[s[0]] == f[s[1]]) {
        u = s[0], v = s[1], w = s[2];
      } else {
        u = s[1], v = s[2], w = s[0];
      }
      auto left = [&](std::uint32_t lvl) { return vertex(Key{{u, r - lvl}, {w, lvl}}); };
      auto right = [&](std::uint32_t lvl) { return vertex(Key{{v, r - lvl}, {w, lvl}}); };
      for (std::uint32_t lvl = 0; lvl < r; ++lvl) {
        if (lvl + 1 == r) {
          emit({left(lvl), right(lvl), w});
        } else {
          emit({left(lvl), right(lvl), right(lvl + 1)});
          emit({left(lvl), right(lvl + 1), left(lvl + 1)});
        }
      }
    }
  }

  // Edges collapsed to a point stay whole; every other edge is split r ways,
  // which is what the emitted cells already encode.
  Pullback out;
  out.complex = CellComplex::from_simplices(keys.size(), cells);
  out.map.resize(keys.size());
  for (std::size_t v = 0; v < keys.size(); ++v) {
    Key img;
    for (auto [src, a] : keys[v]) img.emplace_back(f[src], a);
    auto it = target.find(normalize(img));
    if (it == target.end()) throw ComplexError("pullback vertex has no image in the subdivided target");
    out.map[v] = it->second;
  }
  if (!is_simplicial_map(out.complex, out.map, x_subdivided.complex))
    throw NotSimplicialMap("pulled-back map is not simplicial");
  return out;
}

}  // namespace lqc
