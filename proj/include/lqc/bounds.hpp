#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lqc/code.hpp"
#include "lqc/locality.hpp"

namespace lqc {

struct BoundThresholds {
  double distance = 4.0;  // on d / V^((n-1)/n)
  double tradeoff = 4.0;  // on dim d^(2/(n-1)) / V
};

struct BoundReport {
  std::size_t size = 0;
  int n = 0;
  std::optional<std::size_t> d;
  std::size_t dim = 0;
  double distance_ratio = 0.0;
  double tradeoff_ratio = 0.0;
  bool distance_pass = false;
  bool tradeoff_pass = false;
  bool vacuous = false;           // no logical qubits
  bool exact = true;              // d from exact searches
  bool upper_bound_only = false;  // d is a heuristic upper bound
  bool injective = false;
  LocalityCertificate certificate;

  bool pass() const { return injective && distance_pass && tradeoff_pass; }
};

/// Both ratios from an existing report; requires n >= 2. A non-injective
/// placement fails both checks.
BoundReport check_bounds(const CodeReport& r, const LocalityCertificate& cert, const BoundThresholds& t = {});
BoundReport check_bounds(const CssCode& c, const LocalityCertificate& cert, const BoundThresholds& t = {},
                         const SearchBudget& budget = {});

enum class Family { Toric, Padded, Hgp, Embedded };

Family parse_family(const std::string& s);
std::string family_name(Family f);

struct SurveySpec {
  Family family = Family::Toric;
  int n = 2;
  std::vector<int> params;  // torus side, repetition length or cycle length per row
  double pad_factor = 2.0;  // padded: target volume = pad_factor * size
  double delta = 0.5;       // embedded: scale constant
  std::uint64_t seed = 1;
  SearchBudget budget;
  bool timing = false;  // record wall-clock milliseconds (breaks byte-identical output)
};

struct SurveyRow {
  std::string family;
  int n = 0;
  int param = 0;
  std::uint64_t seed = 0;
  BoundReport bounds;
  std::optional<double> runtime_ms;
};

/// One row per parameter, computed in parallel, returned in sweep order.
/// Families: toric fold; toric fold padded to pad_factor * size; hypergraph
/// product of two repetition codes (n = 2 interleaved, n = 3 two layers);
/// cycle complex embedded with gg_embed, qubits on subdivision edges (cell_code).
std::vector<SurveyRow> frontier_survey(const SurveySpec& spec);

/// Placement of hypergraph_product(repetition_checks(a), repetition_checks(b)).
Placement hgp_placement(std::size_t a, std::size_t b, int n);

inline constexpr int kSurveyFormatVersion = 1;

std::string survey_csv(const std::vector<SurveyRow>& rows);

}  // namespace lqc
