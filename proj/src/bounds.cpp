#include <chrono>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "lqc/bounds.hpp"

namespace lqc {

BoundReport check_bounds(const CodeReport& r, const LocalityCertificate& cert, const BoundThresholds& t) {
  if (cert.n < 2) throw DimensionOutOfRange("bound checks need n >= 2");
  BoundReport out;
  out.size = r.size;
  out.n = cert.n;
  out.d = r.d;
  out.dim = r.dim;
  out.exact = r.exact();
  out.upper_bound_only = !out.exact;
  out.injective = cert.injective;
  out.certificate = cert;
  const double n = cert.n;
  const double V = static_cast<double>(r.size);
  if (r.dim == 0 || !r.d) {
    out.vacuous = true;
  } else {
    const double d = static_cast<double>(*r.d);
    out.distance_ratio = d / std::pow(V, (n - 1) / n);
    out.tradeoff_ratio = static_cast<double>(r.dim) * std::pow(d, 2.0 / (n - 1)) / V;
  }
  out.distance_pass = cert.injective && out.distance_ratio <= t.distance;
  out.tradeoff_pass = cert.injective && out.tradeoff_ratio <= t.tradeoff;
  return out;
}

BoundReport check_bounds(const CssCode& c, const LocalityCertificate& cert, const BoundThresholds& t,
                         const SearchBudget& budget) {
  return check_bounds(report(c, budget), cert, t);
}

Family parse_family(const std::string& s) {
  if (s == "toric") return Family::Toric;
  if (s == "padded") return Family::Padded;
  if (s == "hgp") return Family::Hgp;
  if (s == "embedded") return Family::Embedded;
  throw std::invalid_argument("unknown family '" + s + "' (toric, padded, hgp, embedded)");
}

std::string family_name(Family f) {
  switch (f) {
    case Family::Toric:
      return "toric";
    case Family::Padded:
      return "padded";
    case Family::Hgp:
      return "hgp";
    case Family::Embedded:
      return "embedded";
  }
  return "";
}

Placement hgp_placement(std::size_t a, std::size_t b, int n) {
  if (n != 2 && n != 3) throw DimensionOutOfRange("product placements exist for n = 2 and n = 3");
  if (a < 2 || b < 2) throw ComplexError("repetition codes need length >= 2");
  Placement out;
  out.n = n;
  auto at = [&](std::int64_t x, std::int64_t y, std::int64_t layer) {
    return n == 2 ? LatticePoint{2 * x + layer, 2 * y + layer} : LatticePoint{x, y, layer};
  };
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j) out.points.push_back(at(std::int64_t(i), std::int64_t(j), 0));
  for (std::size_t r = 0; r + 1 < a; ++r)
    for (std::size_t c = 0; c + 1 < b; ++c) out.points.push_back(at(std::int64_t(r), std::int64_t(c), 1));
  return out;
}

namespace {

BoundReport survey_row(const SurveySpec& spec, int param) {
  switch (spec.family) {
    case Family::Toric: {
      auto c = toric_code(spec.n, param, 1);
      auto p = fold_torus(spec.n, param, 1);
      return check_bounds(c, certify_local_serial(c, p), {}, spec.budget);
    }
    case Family::Padded: {
      auto c = toric_code(spec.n, param, 1);
      auto target = static_cast<std::size_t>(std::ceil(spec.pad_factor * double(c.size())));
      auto [pc, pp] = pad_code(c, fold_torus(spec.n, param, 1), target);
      return check_bounds(pc, certify_local_serial(pc, pp), {}, spec.budget);
    }
    case Family::Hgp: {
      auto rep = repetition_checks(static_cast<std::size_t>(param));
      auto c = hypergraph_product(rep, rep);
      auto p = hgp_placement(static_cast<std::size_t>(param), static_cast<std::size_t>(param), spec.n);
      return check_bounds(c, certify_local_serial(c, p), {}, spec.budget);
    }
    case Family::Embedded: {
      EmbedParams ep;
      ep.n = spec.n;
      ep.delta = spec.delta;
      ep.seed = spec.seed;
      auto x = cycle_complex(static_cast<std::size_t>(param));
      auto e = gg_embed(x, ep);
      auto c = cell_code(e.complex(), 1);
      auto p = placement_from_embedding(c, x, 1, e);
      return check_bounds(c, certify_local_serial(c, p), {}, spec.budget);
    }
  }
  throw std::logic_error("unhandled family");
}

}  // namespace

std::vector<SurveyRow> frontier_survey(const SurveySpec& spec) {
  std::vector<SurveyRow> rows(spec.params.size());
  std::vector<std::string> errors(spec.params.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t i = 0; i < spec.params.size(); ++i) {
    auto t0 = std::chrono::steady_clock::now();
    try {
      rows[i].bounds = survey_row(spec, spec.params[i]);
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
    rows[i].family = family_name(spec.family);
    rows[i].n = spec.n;
    rows[i].param = spec.params[i];
    rows[i].seed = spec.seed;
    if (spec.timing)
      rows[i].runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  }
  for (std::size_t i = 0; i < errors.size(); ++i)
    if (!errors[i].empty())
      throw std::runtime_error("survey row " + std::to_string(i) + " (param " + std::to_string(spec.params[i]) +
                               "): " + errors[i]);
  return rows;
}

std::string survey_csv(const std::vector<SurveyRow>& rows) {
  std::ostringstream os;
  os.precision(17);
  os << "format_version,family,n,param,size,dim,d,d_exact,distance_ratio,tradeoff_ratio,distance_pass,"
        "tradeoff_pass,vacuous,injective,check_constant,cube_constant,runtime_ms,seed\n";
  for (const auto& r : rows) {
    const auto& b = r.bounds;
    os << kSurveyFormatVersion << ',' << r.family << ',' << r.n << ',' << r.param << ',' << b.size << ',' << b.dim
       << ',';
    if (b.d)
      os << *b.d;
    else
      os << "inf";
    os << ',' << (b.exact ? "exact" : "upper_bound_only") << ',' << b.distance_ratio << ',' << b.tradeoff_ratio << ','
       << b.distance_pass << ',' << b.tradeoff_pass << ',' << b.vacuous << ',' << b.injective << ','
       << b.certificate.check_constant << ',' << b.certificate.cube_constant << ',';
    if (r.runtime_ms)
      os << *r.runtime_ms;
    else
      os << "NA";
    os << ',' << r.seed << '\n';
  }
  return os.str();
}

}  // namespace lqc
