#include "lqc/io.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace lqc {

namespace {

const Json& at(const Json& j, const char* key) {
  if (!j.is_object()) throw ParseError(std::string("expected an object holding '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field '") + key + "'");
  return *it;
}

template <class T>
T get(const Json& j, const char* key) {
  const Json& v = at(j, key);
  try {
    return v.get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("field '") + key + "': " + e.what());
  }
}

// Runs a nested parser, prefixing failures with the field name.
template <class F>
auto field(const Json& j, const char* key, F parse) {
  const Json& v = at(j, key);
  try {
    return parse(v);
  } catch (const ParseError& e) {
    throw ParseError(std::string(key) + "." + e.what());
  }
}

Json number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

double number_from(const Json& v, const char* key) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) {
    auto s = v.get<std::string>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  }
  throw ParseError(std::string("field '") + key + "': expected a number");
}

double get_number(const Json& j, const char* key) { return number_from(at(j, key), key); }

template <class T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

template <class T>
std::optional<T> get_optional(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return std::nullopt;
  return get<T>(j, key);
}

Json points_json(const std::vector<Point>& pts) {
  Json out = Json::array();
  for (const auto& p : pts) {
    Json row = Json::array();
    for (double x : p) row.push_back(number(x));
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<Point> points_from(const Json& v) {
  if (!v.is_array()) throw ParseError("expected an array of points");
  std::vector<Point> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_array()) throw ParseError("point " + std::to_string(i) + " is not an array");
    Point p;
    for (const auto& x : v[i]) p.push_back(number_from(x, "coords"));
    out.push_back(std::move(p));
  }
  return out;
}

Json trace_json(const StageTrace& s) {
  Json v = Json::array();
  for (double x : s.violated_fraction) v.push_back(number(x));
  return {{"rounds", s.rounds},
          {"resampled_vertices", s.resampled_vertices},
          {"violated_fraction", v},
          {"worst_count", s.worst_count},
          {"distortion_events", s.distortion_events},
          {"final_events", s.final_events},
          {"threshold", s.threshold}};
}

StageTrace stage_from(const Json& j) {
  StageTrace s;
  s.rounds = get<std::size_t>(j, "rounds");
  s.resampled_vertices = get<std::size_t>(j, "resampled_vertices");
  for (const auto& x : at(j, "violated_fraction")) s.violated_fraction.push_back(number_from(x, "violated_fraction"));
  s.worst_count = get<std::size_t>(j, "worst_count");
  s.distortion_events = get<std::size_t>(j, "distortion_events");
  s.final_events = get<std::size_t>(j, "final_events");
  s.threshold = get<std::size_t>(j, "threshold");
  return s;
}

}  // namespace

Json to_json(const BitVector& v) { return {{"len", v.len()}, {"support", v.support()}}; }

BitVector bitvector_from_json(const Json& j) {
  auto len = get<std::size_t>(j, "len");
  auto support = get<std::vector<Index>>(j, "support");
  for (Index i : support)
    if (i >= len) throw ParseError("support index " + std::to_string(i) + " out of range " + std::to_string(len));
  try {
    return BitVector(len, std::move(support));
  } catch (const F2Error& e) {
    throw ParseError(std::string("support: ") + e.what());
  }
}

Json to_json(const BitMatrix& m) {
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"row_support", m.row_support()}};
}

BitMatrix matrix_from_json(const Json& j) {
  auto rows = get<std::size_t>(j, "rows");
  auto cols = get<std::size_t>(j, "cols");
  auto support = get<std::vector<std::vector<Index>>>(j, "row_support");
  if (support.size() != rows)
    throw ParseError("row_support has " + std::to_string(support.size()) + " rows, expected " + std::to_string(rows));
  for (std::size_t i = 0; i < rows; ++i)
    for (Index c : support[i])
      if (c >= cols) throw ParseError("row " + std::to_string(i) + ": column " + std::to_string(c) + " out of range");
  try {
    return BitMatrix(rows, cols, std::move(support));
  } catch (const F2Error& e) {
    throw ParseError(std::string("row_support: ") + e.what());
  }
}

Json to_json(const CssCode& c) {
  return {{"h1", to_json(c.h1)}, {"h2", to_json(c.h2)}, {"labels", c.labels}};
}

CssCode code_from_json(const Json& j) {
  CssCode c;
  c.h1 = field(j, "h1", matrix_from_json);
  c.h2 = field(j, "h2", matrix_from_json);
  if (j.contains("labels")) c.labels = get<std::vector<std::string>>(j, "labels");
  return c;
}

Json to_json(const CellComplex& x) {
  Json b = Json::array();
  for (const auto& m : x.boundaries()) b.push_back(to_json(m));
  Json out = {{"dims", x.dims()}, {"cells", x.cell_counts()}, {"boundary", b}, {"kind", to_string(x.kind())}};
  if (x.simplicial()) {
    Json s = Json::array();
    for (int k = 0; k <= x.dims(); ++k) s.push_back(x.simplices(k));
    out["simplices"] = s;
  }
  if (x.coords()) out["coords"] = points_json(*x.coords());
  return out;
}

CellComplex complex_from_json(const Json& j) {
  auto dims = get<int>(j, "dims");
  auto counts = get<std::vector<std::size_t>>(j, "cells");
  CellKind kind;
  try {
    kind = cell_kind_from_string(get<std::string>(j, "kind"));
  } catch (const std::exception& e) {
    throw ParseError(std::string("field 'kind': ") + e.what());
  }
  std::vector<BitMatrix> boundary;
  const Json& b = at(j, "boundary");
  if (!b.is_array() || b.size() != static_cast<std::size_t>(dims + 1))
    throw ParseError("boundary must hold dims + 1 matrices");
  for (std::size_t k = 0; k < b.size(); ++k) {
    try {
      boundary.push_back(matrix_from_json(b[k]));
    } catch (const ParseError& e) {
      throw ParseError("boundary[" + std::to_string(k) + "]." + e.what());
    }
  }
  if (counts.size() != boundary.size()) throw ParseError("cells must hold dims + 1 counts");
  for (std::size_t k = 0; k < counts.size(); ++k)
    if (boundary[k].cols() != counts[k])
      throw ParseError("boundary[" + std::to_string(k) + "] has " + std::to_string(boundary[k].cols()) +
                       " columns but cells[" + std::to_string(k) + "] = " + std::to_string(counts[k]));
  std::optional<std::vector<Point>> coords;
  if (j.contains("coords") && !j["coords"].is_null()) coords = field(j, "coords", points_from);

  CellComplex x;
  if (kind == CellKind::Simplicial) {
    auto per_dim = get<std::vector<std::vector<Simplex>>>(j, "simplices");
    std::vector<Simplex> all;
    for (auto& s : per_dim)
      for (auto& v : s) all.push_back(std::move(v));
    try {
      x = CellComplex::from_simplices(counts.empty() ? 0 : counts[0], all, coords);
    } catch (const std::exception& e) {
      throw ParseError(std::string("simplices: ") + e.what());
    }
    if (x.boundaries() != boundary) throw ParseError("boundary does not match the simplices");
  } else {
    try {
      x = CellComplex(std::move(boundary), kind);
      if (coords) x.set_coords(std::move(*coords));
    } catch (const ComplexError& e) {
      throw ParseError(e.what());
    }
  }
  if (!x.chain_condition_holds()) throw ParseError("boundary maps violate the chain condition");
  return x;
}

Json to_json(const Subdivision& s) {
  Json carriers = Json::array();
  for (const auto& c : s.carriers) carriers.push_back({c.vertices, c.numerators, c.denominator});
  return {{"complex", to_json(s.complex)}, {"factor", s.factor}, {"carriers", carriers}};
}

Subdivision subdivision_from_json(const Json& j) {
  Subdivision s;
  s.complex = field(j, "complex", complex_from_json);
  s.factor = get<std::uint32_t>(j, "factor");
  const Json& cs = at(j, "carriers");
  for (std::size_t i = 0; i < cs.size(); ++i) {
    const Json& c = cs[i];
    if (!c.is_array() || c.size() != 3) throw ParseError("carriers[" + std::to_string(i) + "] must be a triple");
    Carrier car;
    try {
      car.vertices = c[0].get<std::vector<Index>>();
      car.numerators = c[1].get<std::vector<std::uint32_t>>();
      car.denominator = c[2].get<std::uint32_t>();
    } catch (const nlohmann::json::exception& e) {
      throw ParseError("carriers[" + std::to_string(i) + "]: " + e.what());
    }
    s.carriers.push_back(std::move(car));
  }
  if (s.carriers.size() != s.complex.cells(0)) throw ParseError("one carrier per vertex required");
  return s;
}

Json to_json(const CoarseCertificate& c) {
  return {{"forward", c.forward},
          {"backward", c.backward},
          {"neighborhood", c.neighborhood == Neighborhood::Cell ? "cell" : "block"},
          {"bilipschitz_ratio", number(c.bilipschitz_ratio)},
          {"radius", number(c.radius)},
          {"exhaustive", c.exhaustive},
          {"worst_cell", c.worst_cell.c}};
}

CoarseCertificate certificate_from_json(const Json& j) {
  CoarseCertificate c;
  c.forward = get<std::size_t>(j, "forward");
  c.backward = get<std::size_t>(j, "backward");
  auto nb = get<std::string>(j, "neighborhood");
  if (nb != "cell" && nb != "block") throw ParseError("field 'neighborhood': expected cell or block");
  c.neighborhood = nb == "cell" ? Neighborhood::Cell : Neighborhood::Block;
  c.bilipschitz_ratio = get_number(j, "bilipschitz_ratio");
  c.radius = get_number(j, "radius");
  c.exhaustive = get<bool>(j, "exhaustive");
  c.worst_cell.c = get<std::array<std::int32_t, 8>>(j, "worst_cell");
  return c;
}

Json to_json(const EmbedParams& p) {
  return {{"n", p.n},
          {"delta", number(p.delta)},
          {"log_floor", number(p.log_floor)},
          {"c1", number(p.c1)},
          {"a_max", optional_json(p.a_max)},
          {"max_resamples", optional_json(p.max_resamples)},
          {"seed", p.seed},
          {"min_sep_fraction", number(p.min_sep_fraction)},
          {"bilipschitz_bound", number(p.bilipschitz_bound)},
          {"max_simplices", number(p.max_simplices)}};
}

// Missing fields keep their defaults so partial parameter files are accepted.
EmbedParams params_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("params must be an object");
  EmbedParams p;
  if (j.contains("n")) p.n = get<int>(j, "n");
  if (j.contains("delta")) p.delta = get_number(j, "delta");
  if (j.contains("log_floor")) p.log_floor = get_number(j, "log_floor");
  if (j.contains("c1")) p.c1 = get_number(j, "c1");
  p.a_max = get_optional<std::size_t>(j, "a_max");
  p.max_resamples = get_optional<std::size_t>(j, "max_resamples");
  if (j.contains("seed")) p.seed = get<std::uint64_t>(j, "seed");
  if (j.contains("min_sep_fraction")) p.min_sep_fraction = get_number(j, "min_sep_fraction");
  if (j.contains("bilipschitz_bound")) p.bilipschitz_bound = get_number(j, "bilipschitz_bound");
  if (j.contains("max_simplices")) p.max_simplices = get_number(j, "max_simplices");
  return p;
}

Json to_json(const EmbedTrace& t) {
  return {{"stage1", trace_json(t.stage1)},
          {"stage3", trace_json(t.stage3)},
          {"colors_vertices", t.colors_vertices},
          {"colors_facets", t.colors_facets},
          {"colors_mid_vertices", t.colors_mid_vertices},
          {"colors_mid_facets", t.colors_mid_facets},
          {"tuple_events", t.tuple_events},
          {"total_resamples", t.total_resamples()}};
}

EmbedTrace trace_from_json(const Json& j) {
  EmbedTrace t;
  t.stage1 = field(j, "stage1", stage_from);
  t.stage3 = field(j, "stage3", stage_from);
  t.colors_vertices = get<std::size_t>(j, "colors_vertices");
  t.colors_facets = get<std::size_t>(j, "colors_facets");
  t.colors_mid_vertices = get<std::size_t>(j, "colors_mid_vertices");
  t.colors_mid_facets = get<std::size_t>(j, "colors_mid_facets");
  t.tuple_events = get<std::size_t>(j, "tuple_events");
  return t;
}

// With a base complex the subdivision is regenerated on load instead of stored.
Json to_json(const EmbeddedComplex& e) {
  Json out = {{"coords", points_json(e.coords)},
          {"certificate", to_json(e.certificate)},
          {"trace", to_json(e.trace)},
          {"params", to_json(e.params)},
          {"volume", number(e.volume)},
          {"log_term", number(e.log_term)},
          {"rho0", number(e.rho0)},
          {"s", number(e.s)},
          {"R", number(e.R)},
          {"r_mid", e.r_mid},
          {"r_fin", e.r_fin},
          {"r_total", e.r_total()},
          {"accepted", e.accepted}};
  if (e.base.cells(0) > 0) {
    out["complex"] = to_json(e.base);
    out["factor"] = e.subdivision.factor;
  } else {
    out["subdivision"] = to_json(e.subdivision);
  }
  return out;
}

EmbeddedComplex embedded_from_json(const Json& j) {
  EmbeddedComplex e;
  if (j.contains("complex")) {
    e.base = field(j, "complex", complex_from_json);
    auto factor = get<std::uint32_t>(j, "factor");
    if (factor == 0) throw ParseError("field 'factor' must be positive");
    try {
      e.subdivision = edgewise_subdivide(e.base, factor);
    } catch (const ComplexError& err) {
      throw ParseError(std::string("complex: ") + err.what());
    }
  } else {
    e.subdivision = field(j, "subdivision", subdivision_from_json);
  }
  e.coords = field(j, "coords", points_from);
  if (e.coords.size() != e.complex().cells(0)) throw ParseError("one coordinate per subdivision vertex required");
  e.certificate = field(j, "certificate", certificate_from_json);
  e.trace = field(j, "trace", trace_from_json);
  e.params = field(j, "params", params_from_json);
  e.volume = get_number(j, "volume");
  e.log_term = get_number(j, "log_term");
  e.rho0 = get_number(j, "rho0");
  e.s = get_number(j, "s");
  e.R = get_number(j, "R");
  e.r_mid = get<std::uint32_t>(j, "r_mid");
  e.r_fin = get<std::uint32_t>(j, "r_fin");
  e.accepted = get<bool>(j, "accepted");
  return e;
}

Json to_json(const CodeReport& r) {
  return {{"size", r.size},
          {"dim", r.dim},
          {"d_x", optional_json(r.d_x)},
          {"d_z", optional_json(r.d_z)},
          {"d", optional_json(r.d)},
          {"ldpc_degree", r.ldpc_degree},
          {"d_x_exact", r.d_x_exact},
          {"d_z_exact", r.d_z_exact},
          {"x_witness", to_json(r.x_witness)},
          {"z_witness", to_json(r.z_witness)}};
}

CodeReport report_from_json(const Json& j) {
  CodeReport r;
  r.size = get<std::size_t>(j, "size");
  r.dim = get<std::size_t>(j, "dim");
  r.d_x = get_optional<std::size_t>(j, "d_x");
  r.d_z = get_optional<std::size_t>(j, "d_z");
  r.d = get_optional<std::size_t>(j, "d");
  r.ldpc_degree = get<std::size_t>(j, "ldpc_degree");
  r.d_x_exact = get<bool>(j, "d_x_exact");
  r.d_z_exact = get<bool>(j, "d_z_exact");
  r.x_witness = field(j, "x_witness", bitvector_from_json);
  r.z_witness = field(j, "z_witness", bitvector_from_json);
  return r;
}

Json to_json(const Placement& p) { return {{"n", p.n}, {"points", p.points}}; }

Placement placement_from_json(const Json& j) {
  Placement p;
  p.n = get<int>(j, "n");
  p.points = get<std::vector<LatticePoint>>(j, "points");
  for (std::size_t i = 0; i < p.points.size(); ++i)
    if (p.points[i].size() != static_cast<std::size_t>(p.n))
      throw ParseError("points[" + std::to_string(i) + "] has " + std::to_string(p.points[i].size()) +
                       " coordinates, expected " + std::to_string(p.n));
  return p;
}

Json to_json(const LocalityCertificate& c) {
  return {{"injective", c.injective},
          {"check_constant", c.check_constant},
          {"cube_constant", number(c.cube_constant)},
          {"max_norm", c.max_norm},
          {"cube_flagged", c.cube_flagged},
          {"n", c.n},
          {"size", c.size},
          {"worst_pair", {c.worst_pair.first, c.worst_pair.second}}};
}

LocalityCertificate locality_from_json(const Json& j) {
  LocalityCertificate c;
  c.injective = get<bool>(j, "injective");
  c.check_constant = get<std::size_t>(j, "check_constant");
  c.cube_constant = get_number(j, "cube_constant");
  c.max_norm = get<std::int64_t>(j, "max_norm");
  c.cube_flagged = get<bool>(j, "cube_flagged");
  c.n = get<int>(j, "n");
  c.size = get<std::size_t>(j, "size");
  c.worst_pair = get<std::pair<Index, Index>>(j, "worst_pair");
  return c;
}

Json to_json(const BoundReport& b) {
  return {{"size", b.size},
          {"n", b.n},
          {"d", optional_json(b.d)},
          {"dim", b.dim},
          {"distance_ratio", number(b.distance_ratio)},
          {"tradeoff_ratio", number(b.tradeoff_ratio)},
          {"distance_pass", b.distance_pass},
          {"tradeoff_pass", b.tradeoff_pass},
          {"vacuous", b.vacuous},
          {"exact", b.exact},
          {"upper_bound_only", b.upper_bound_only},
          {"injective", b.injective},
          {"pass", b.pass()},
          {"certificate", to_json(b.certificate)}};
}

BoundReport bounds_from_json(const Json& j) {
  BoundReport b;
  b.size = get<std::size_t>(j, "size");
  b.n = get<int>(j, "n");
  b.d = get_optional<std::size_t>(j, "d");
  b.dim = get<std::size_t>(j, "dim");
  b.distance_ratio = get_number(j, "distance_ratio");
  b.tradeoff_ratio = get_number(j, "tradeoff_ratio");
  b.distance_pass = get<bool>(j, "distance_pass");
  b.tradeoff_pass = get<bool>(j, "tradeoff_pass");
  b.vacuous = get<bool>(j, "vacuous");
  b.exact = get<bool>(j, "exact");
  b.upper_bound_only = get<bool>(j, "upper_bound_only");
  b.injective = get<bool>(j, "injective");
  b.certificate = field(j, "certificate", locality_from_json);
  return b;
}

Json to_json(const Cover& c) {
  Json sets = Json::array();
  for (const auto& s : c.sets) {
    Json set = Json::array();
    for (const auto& [dim, idx] : s) set.push_back({dim, idx});
    sets.push_back(std::move(set));
  }
  Json per_set = Json::array();
  for (double m : c.margins) per_set.push_back(number(m));
  return {{"base", to_json(c.base)},
          {"sets", sets},
          {"centers", c.centers},
          {"multiplicity", c.multiplicity},
          {"margins",
           {{"per_set", per_set},
            {"radius", number(c.radius)},
            {"depth", number(c.depth)},
            {"distance_error", number(c.distance_error)}}}};
}

Cover cover_from_json(const Json& j) {
  auto base = field(j, "base", complex_from_json);
  auto sets = get<std::vector<std::vector<CellRef>>>(j, "sets");
  std::vector<Index> centers;
  if (j.contains("centers")) centers = get<std::vector<Index>>(j, "centers");
  try {
    return make_cover(std::move(base), std::move(sets), std::move(centers));
  } catch (const ComplexError& e) {
    throw ParseError(std::string("sets: ") + e.what());
  }
}

Json to_json(const SurveyRow& r) {
  return {{"family", r.family},
          {"n", r.n},
          {"param", r.param},
          {"seed", r.seed},
          {"bounds", to_json(r.bounds)},
          {"runtime_ms", r.runtime_ms ? number(*r.runtime_ms) : Json(nullptr)}};
}

Json to_json(const std::vector<SurveyRow>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) out.push_back(to_json(r));
  return {{"format_version", kSurveyFormatVersion}, {"rows", out}};
}

Json to_json(const SearchBudget& b) {
  return {{"exact_qubits", b.exact_qubits},
          {"exact_log2", b.exact_log2},
          {"heuristic_iterations", b.heuristic_iterations},
          {"seed", b.seed},
          {"parallel", b.parallel}};
}

SearchBudget budget_from_json(const Json& j) {
  SearchBudget b;
  b.exact_qubits = get<std::size_t>(j, "exact_qubits");
  b.exact_log2 = get<std::size_t>(j, "exact_log2");
  b.heuristic_iterations = get<std::size_t>(j, "heuristic_iterations");
  b.seed = get<std::uint64_t>(j, "seed");
  b.parallel = get<bool>(j, "parallel");
  return b;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError("JSON syntax error at line " + std::to_string(line) + ", column " + std::to_string(col) + ": " +
                     e.what());
  }
}

BitMatrix read_alist(std::istream& in) {
  std::vector<std::vector<long>> lines;
  std::vector<std::size_t> numbers;
  std::string text;
  for (std::size_t no = 1; std::getline(in, text); ++no) {
    std::istringstream ls(text);
    std::vector<long> vals;
    std::string tok;
    while (ls >> tok) {
      try {
        std::size_t used = 0;
        vals.push_back(std::stol(tok, &used));
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw ParseError("alist line " + std::to_string(no) + ": not an integer '" + tok + "'");
      }
    }
    if (vals.empty()) continue;
    lines.push_back(std::move(vals));
    numbers.push_back(no);
  }
  auto fail = [&](std::size_t i, const std::string& what) -> ParseError {
    std::size_t no = i < numbers.size() ? numbers[i] : (numbers.empty() ? 0 : numbers.back());
    return ParseError("alist line " + std::to_string(no) + ": " + what);
  };
  auto expect = [&](std::size_t i, std::size_t count) {
    if (i >= lines.size()) throw fail(i, "unexpected end of input");
    if (lines[i].size() < count)
      throw fail(i, "expected " + std::to_string(count) + " values, found " + std::to_string(lines[i].size()));
  };
  expect(0, 2);
  if (lines[0][0] < 0 || lines[0][1] < 0) throw fail(0, "negative dimensions");
  const auto n = static_cast<std::size_t>(lines[0][0]);
  const auto m = static_cast<std::size_t>(lines[0][1]);
  expect(1, 2);
  expect(2, n);
  expect(3, m);
  std::vector<std::vector<Index>> rows(m), cols(n);
  auto read_list = [&](std::size_t i, long weight, std::size_t limit, std::vector<Index>& out) {
    expect(i, 0);
    std::size_t nonzero = 0;
    for (long v : lines[i]) {
      if (v == 0) continue;
      if (v < 0 || static_cast<std::size_t>(v) > limit) throw fail(i, "index " + std::to_string(v) + " out of range");
      out.push_back(static_cast<Index>(v - 1));
      ++nonzero;
    }
    if (static_cast<long>(nonzero) != weight)
      throw fail(i, "weight " + std::to_string(nonzero) + " does not match declared " + std::to_string(weight));
  };
  for (std::size_t c = 0; c < n; ++c) read_list(4 + c, lines[2][c], m, cols[c]);
  for (std::size_t r = 0; r < m; ++r) read_list(4 + n + r, lines[3][r], n, rows[r]);
  BitMatrix h;
  try {
    h = BitMatrix(m, n, rows);
  } catch (const F2Error& e) {
    throw fail(4 + n, e.what());
  }
  std::vector<std::vector<Index>> from_cols(m);
  for (std::size_t c = 0; c < n; ++c)
    for (Index r : cols[c]) from_cols[r].push_back(static_cast<Index>(c));
  if (BitMatrix(m, n, std::move(from_cols)) != h) throw fail(4, "column and row lists disagree");
  return h;
}

std::string dump(const Json& j) { return j.dump() + "\n"; }

}  // namespace lqc
