#include <doctest.h>

#include <cmath>
#include <set>

#include "lqc/bounds.hpp"
#include "oracle.hpp"

using namespace lqc;

namespace {

// Max l1 distance over qubit pairs sharing a check row, from dense matrices.
std::int64_t brute_check_constant(const CssCode& c, const Placement& p) {
  std::int64_t best = 0;
  for (const auto& h : {oracle::dense(c.h1), oracle::dense(c.h2)})
    for (const auto& row : h)
      for (std::size_t a = 0; a < row.size(); ++a)
        for (std::size_t b = a + 1; b < row.size(); ++b)
          if (row[a] && row[b]) {
            std::int64_t d = 0;
            for (int j = 0; j < p.n; ++j) d += std::abs(p.points[a][j] - p.points[b][j]);
            best = std::max(best, d);
          }
  return best;
}

bool all_distinct(const Placement& p) {
  std::set<LatticePoint> s(p.points.begin(), p.points.end());
  return s.size() == p.points.size();
}

EmbeddedComplex hexagon_embedding() {
  EmbedParams p;
  p.n = 2;
  p.delta = 1.0;
  p.seed = 3;
  return gg_embed(cycle_complex(6), p);
}

}  // namespace

TEST_CASE("folding") {
  CHECK(fold_point({0, 0}, 4) == std::vector<double>{2, 2});
  CHECK(fold_point({2, 2}, 4) == std::vector<double>{0, 0});

  for (int L = 3; L <= 6; ++L) {
    auto p = fold_torus(2, L);
    auto cells = cubical_cells(2, L, 1);
    REQUIRE(p.points.size() == cells.size());
    for (std::size_t q = 0; q < cells.size(); ++q)
      for (int j = 0; j < 2; ++j) {
        double c = 2 * cells[q].base[j] + (cells[q].directions[0] == j ? 1 : 0);
        std::int64_t bit = c >= L ? 1 : 0;
        // Four times the fold of the point c / 2, plus the side bit.
        CHECK(double(p.points[q][j] - bit) == doctest::Approx(4 * fold_point({c / 2}, L)[0]));
      }
  }

  for (int L = 3; L <= 16; ++L) {
    auto c = toric_code(2, L);
    auto p = fold_torus(2, L);
    auto cert = certify_local(c, p);
    CHECK(cert.injective);
    CHECK(all_distinct(p));
    CHECK(cert.check_constant <= 8);
    CHECK(std::int64_t(cert.check_constant) == brute_check_constant(c, p));
    auto serial = certify_local_serial(c, p);
    CHECK(serial.check_constant == cert.check_constant);
    CHECK(serial.worst_pair == cert.worst_pair);
    CHECK(serial.cube_constant == cert.cube_constant);
  }
  for (int L : {3, 4}) {
    auto c = toric_code(3, L, 1);
    auto cert = certify_local(c, fold_torus(3, L, 1));
    CHECK(cert.injective);
    CHECK(std::int64_t(cert.check_constant) == brute_check_constant(c, fold_torus(3, L, 1)));
  }
  CHECK_THROWS_AS(fold_torus(2, 4, 2), DimensionOutOfRange);
}

TEST_CASE("locality certificates") {
  auto c = toric_code(2, 3);
  auto p = fold_torus(2, 3);
  p.points[1] = p.points[0];
  CHECK_FALSE(certify_local(c, p).injective);

  CssCode free;
  free.h1 = BitMatrix(0, 100);
  free.h2 = BitMatrix(0, 100);
  Placement spread;
  spread.n = 2;
  for (std::int64_t i = 0; i < 100; ++i) spread.points.push_back({i % 10, i / 10});
  spread.points[99] = {1000000, 0};
  auto cert = certify_local(free, spread);
  CHECK(cert.cube_constant == doctest::Approx(1e6 / 10.0));
  CHECK(cert.cube_flagged);
  CHECK(cert.check_constant == 0);

  auto a = certify_local(c, fold_torus(2, 3));
  auto b = certify_local(c, fold_torus(2, 3));
  CHECK(a.check_constant == b.check_constant);
  CHECK(a.cube_constant == b.cube_constant);
}

TEST_CASE("placements from embeddings") {
  auto edge = CellComplex::from_simplices(2, {{0, 1}});
  EmbedParams p;
  p.n = 2;
  auto e = gg_embed(edge, p);
  auto one = placement_from_embedding(cell_code(edge, 1), edge, 1, e);
  REQUIRE(one.points.size() == 1);
  for (int j = 0; j < 2; ++j) {
    double mid = (e.coords[0][j] + e.coords[1][j]) / 2 / 0.25;
    CHECK(std::abs(double(one.points[0][j]) - mid) <= 0.5);
  }

  auto hex = hexagon_embedding();
  auto x = cycle_complex(6);
  auto fine = cell_code(hex.complex(), 1);
  auto pl = placement_from_embedding(fine, x, 1, hex);
  auto cert = certify_local(fine, pl);
  CHECK(cert.injective);
  CHECK(double(cert.check_constant) <= 2 * 4.0 * double(hex.certificate.backward + hex.certificate.forward));
  CHECK(std::int64_t(cert.check_constant) == brute_check_constant(fine, pl));

  auto coarse = cell_code(x, 1);
  auto pc = placement_from_embedding(coarse, x, 1, hex);
  CHECK(pc.points.size() == 6);
  CHECK(certify_local(coarse, pc).injective);

  // Two edges with the same image.
  auto twin = CellComplex::from_simplices(4, {{0, 1}, {2, 3}});
  EmbeddedComplex t;
  t.subdivision = edgewise_subdivide(twin, 1);
  t.coords = {{0, 0}, {1, 0}, {0, 0}, {1, 0}};
  t.params.n = 2;
  auto tp = placement_from_embedding(cell_code(twin, 1), twin, 1, t);
  CHECK(tp.points[0] != tp.points[1]);
  CHECK(std::abs(tp.points[0][0] - tp.points[1][0]) + std::abs(tp.points[0][1] - tp.points[1][1]) >= 1);

  // Far more coincident qubits than lattice points within reach.
  std::vector<Simplex> many;
  for (Index i = 0; i < 1500; ++i) many.push_back({2 * i, 2 * i + 1});
  auto crowd = CellComplex::from_simplices(3000, many);
  EmbeddedComplex ce;
  ce.subdivision = edgewise_subdivide(crowd, 1);
  for (Index i = 0; i < 1500; ++i) {
    ce.coords.push_back({0, 0});
    ce.coords.push_back({1, 0});
  }
  ce.params.n = 2;
  CHECK_THROWS_AS(placement_from_embedding(cell_code(crowd, 1), crowd, 1, ce), LatticeExhausted);
}

TEST_CASE("padding") {
  auto c = toric_code(2, 3);
  auto p = fold_torus(2, 3);
  auto same = pad_code(c, p, c.size());
  CHECK(same.second == p);
  CHECK(same.first.h1 == c.h1);

  auto base = report(c);
  auto base_cert = certify_local(c, p);
  for (std::size_t target : {50u, 100u}) {
    auto [pc, pp] = pad_code(c, p, target);
    CHECK(pc.size() >= target / 2);
    CHECK(pc.size() <= 2 * target);
    auto r = report(pc);
    CHECK(r.exact());
    CHECK(r.dim == base.dim);
    CHECK(r.d_x == base.d_x);
    CHECK(r.d_z == base.d_z);
    auto cert = certify_local(pc, pp);
    CHECK(cert.injective);
    CHECK(cert.check_constant == std::max<std::size_t>(base_cert.check_constant, 2));
    CHECK(std::int64_t(cert.check_constant) == brute_check_constant(pc, pp));
  }

  CssCode empty;
  empty.h1 = BitMatrix(0, 0);
  empty.h2 = BitMatrix(0, 0);
  Placement none;
  none.n = 2;
  auto [block, bp] = pad_code(empty, none, 30);
  auto br = report(block);
  CHECK(block.size() == 30);
  CHECK(br.dim == 0);
  CHECK_FALSE(br.d.has_value());
  CHECK(certify_local(block, bp).check_constant == 1);

  auto far = p;
  far.points[0] = {1000, 0};
  CHECK_THROWS_AS(pad_code(c, far, 50), CubeTooSmall);
  CHECK_THROWS_AS(pad_code(c, p, 10), ComplexError);
}

TEST_CASE("block-diagonal reports") {
  auto a = toric_code(2, 3);
  auto b = hypergraph_product(repetition_checks(4), repetition_checks(4));
  auto sum = report(direct_sum(a, b));
  auto ra = report(a), rb = report(b);
  CHECK(sum.dim == ra.dim + rb.dim);
  CHECK(sum.d_x == std::min(*ra.d_x, *rb.d_x));
  CHECK(sum.d_z == std::min(*ra.d_z, *rb.d_z));
  CHECK(sum.exact());
  CHECK(sum.x_witness.support().size() == *sum.d_x);
  auto pb = report(path_block(7));
  CHECK(pb.dim == 0);
  CHECK_FALSE(pb.d_x.has_value());
}

TEST_CASE("bound checks") {
  for (int L = 3; L <= 5; ++L) {
    auto c = toric_code(2, L);
    auto b = check_bounds(c, certify_local(c, fold_torus(2, L)));
    REQUIRE(b.d.has_value());
    CHECK(*b.d == std::size_t(L));
    CHECK(b.exact);
    CHECK(std::abs(b.distance_ratio - 1 / std::sqrt(2.0)) < 1e-9);
    CHECK(std::abs(b.tradeoff_ratio - 1.0) < 1e-9);
    CHECK(b.pass());
  }
  auto block = path_block(20);
  Placement line;
  line.n = 2;
  for (std::int64_t i = 0; i < 20; ++i) line.points.push_back({i, 0});
  auto vac = check_bounds(block, certify_local(block, line));
  CHECK(vac.vacuous);
  CHECK(vac.pass());

  auto c = toric_code(2, 3);
  auto p = fold_torus(2, 3);
  p.points[2] = p.points[3];
  CHECK_FALSE(check_bounds(c, certify_local(c, p)).pass());

  CodeReport fake;
  fake.size = 100;
  fake.dim = 4;
  fake.d = 60;
  fake.d_x_exact = false;
  LocalityCertificate ok;
  ok.n = 2;
  auto bad = check_bounds(fake, ok);
  CHECK(bad.distance_ratio == doctest::Approx(6.0));
  CHECK_FALSE(bad.distance_pass);
  CHECK(bad.upper_bound_only);
  ok.n = 1;
  CHECK_THROWS_AS(check_bounds(fake, ok), DimensionOutOfRange);
}

TEST_CASE("frontier survey") {
  SurveySpec s;
  for (int L = 3; L <= 16; ++L) s.params.push_back(L);
  auto rows = frontier_survey(s);
  CHECK(rows.size() == 14);
  for (const auto& r : rows) {
    CHECK(r.bounds.pass());
    CHECK(r.bounds.d == std::size_t(r.param));
  }
  auto csv = survey_csv(rows);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 15);
  CHECK(csv == survey_csv(frontier_survey(s)));

  SurveySpec empty;
  auto header = survey_csv(frontier_survey(empty));
  CHECK(std::count(header.begin(), header.end(), '\n') == 1);

  SurveySpec h;
  h.family = Family::Hgp;
  h.n = 3;
  h.params = {3, 9};
  h.budget.exact_qubits = 4;
  auto hr = frontier_survey(h);
  CHECK(hr[0].bounds.exact);
  CHECK(hr[1].bounds.upper_bound_only);
  CHECK(survey_csv(hr).find("upper_bound_only") != std::string::npos);
  for (const auto& r : hr) CHECK(r.bounds.pass());

  CHECK_THROWS_AS(parse_family("moebius"), std::invalid_argument);
  CHECK(parse_family("padded") == Family::Padded);
}
