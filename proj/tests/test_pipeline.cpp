#include <doctest.h>

#include "lqc/pipeline.hpp"

using namespace lqc;

TEST_CASE("nerve embedding of the hexagon") {
  auto hex = cycle_complex(6);
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    EmbedParams p;
    p.n = 2;
    p.delta = 1.0;
    p.seed = seed;
    auto r = nerve_embedding(hex, p);
    CHECK(r.nerve.cells(0) == 6);
    CHECK(r.nerve.cells(1) == 6);
    // Original vertices land on their own star.
    for (Index v = 0; v < r.f.size(); ++v)
      if (r.fine.carriers[v].vertices.size() == 1) CHECK(r.f[v] == r.cover.centers[r.fine.carriers[v].vertices[0]]);
    CHECK(is_simplicial_map(r.fine.complex, r.f, r.nerve));
    CHECK(is_simplicial_map(r.pullback.complex, r.pullback.map, r.g.complex()));
    CHECK(homology_dim(r.pullback.complex, 1) == 1);
    CHECK(r.g.accepted);
    CHECK(r.within_bound);
    CHECK(r.measured.forward <= r.check.forward_bound);
    CHECK(r.measured.backward <= r.check.backward_bound);
    auto serial = certify_coarse_serial(r.pullback.complex, r.coords);
    CHECK(serial.backward == r.measured.backward);
    CHECK(serial.forward == r.measured.forward);
  }
  EmbedParams p;
  p.n = 2;
  p.delta = 1.0;
  auto a = nerve_embedding(hex, p), b = nerve_embedding(hex, p);
  CHECK(a.coords == b.coords);
  CHECK(a.measured.backward == b.measured.backward);
}
