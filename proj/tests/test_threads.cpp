#include <doctest.h>
#include <omp.h>

#include <type_traits>

#include "lqc/io.hpp"

using namespace lqc;

namespace {

struct ThreadCount {
  int saved = omp_get_max_threads();
  explicit ThreadCount(int n) { omp_set_num_threads(n); }
  ~ThreadCount() { omp_set_num_threads(saved); }
};

template <class F>
std::string under(int threads, F&& f) {
  ThreadCount tc(threads);
  auto x = f();
  if constexpr (std::is_same_v<decltype(x), Json>)
    return dump(x);
  else
    return dump(to_json(x));
}

}  // namespace

TEST_CASE("results do not depend on thread count") {
  auto c = toric_code(2, 4);
  auto kernel = nullspace_basis(c.h1);
  auto image = c.h2.row_vectors();
  auto coset = [&] {
    auto w = min_coset_weight(kernel, image);
    return Json{{"weight", w.weight.value_or(0)}, {"witness", to_json(w.witness)}, {"exact", w.exact}};
  };
  SearchBudget heuristic;
  heuristic.exact_qubits = 0;
  auto big = toric_code(2, 9);
  auto heur = [&] { return report(big, heuristic); };

  auto p = fold_torus(2, 16);
  auto t16 = toric_code(2, 16);
  auto local = [&] { return certify_local(t16, p); };

  EmbedParams ep;
  ep.n = 2;
  ep.delta = 1.0;
  ep.seed = 11;
  auto embed = [&] { return gg_embed(cycle_complex(6), ep); };
  auto e = embed();
  auto coarse = [&] { return certify_coarse(e.complex(), e.coords); };

  for (int threads : {2, 4}) {
    CHECK(under(1, coset) == under(threads, coset));
    CHECK(under(1, heur) == under(threads, heur));
    CHECK(under(1, local) == under(threads, local));
    CHECK(under(1, coarse) == under(threads, coarse));
    CHECK(under(1, embed) == under(threads, embed));
  }
}
