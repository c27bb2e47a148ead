#pragma once

#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "lqc/bounds.hpp"
#include "lqc/code.hpp"
#include "lqc/complex.hpp"
#include "lqc/embed.hpp"
#include "lqc/locality.hpp"
#include "lqc/nerve.hpp"

namespace lqc {

using Json = nlohmann::json;

inline constexpr const char* kVersion = "0.1.0";

/// Interchange parse failure; the message names the line or field.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json to_json(const BitVector& v);
Json to_json(const BitMatrix& m);
Json to_json(const CssCode& c);
Json to_json(const CellComplex& x);
Json to_json(const Subdivision& s);
Json to_json(const CoarseCertificate& c);
Json to_json(const EmbedParams& p);
Json to_json(const EmbedTrace& t);
Json to_json(const EmbeddedComplex& e);
Json to_json(const CodeReport& r);
Json to_json(const Placement& p);
Json to_json(const LocalityCertificate& c);
Json to_json(const BoundReport& b);
Json to_json(const Cover& c);
Json to_json(const SurveyRow& r);
Json to_json(const std::vector<SurveyRow>& rows);
Json to_json(const SearchBudget& b);

BitVector bitvector_from_json(const Json& j);
BitMatrix matrix_from_json(const Json& j);
CssCode code_from_json(const Json& j);
CellComplex complex_from_json(const Json& j);
Subdivision subdivision_from_json(const Json& j);
CoarseCertificate certificate_from_json(const Json& j);
EmbedParams params_from_json(const Json& j);
EmbedTrace trace_from_json(const Json& j);
EmbeddedComplex embedded_from_json(const Json& j);
CodeReport report_from_json(const Json& j);
Placement placement_from_json(const Json& j);
LocalityCertificate locality_from_json(const Json& j);
BoundReport bounds_from_json(const Json& j);
Cover cover_from_json(const Json& j);
SearchBudget budget_from_json(const Json& j);

/// Parses JSON text, reporting syntax errors by line and column.
Json parse_json(const std::string& text);

/// Classical alist parity-check format (1-based indices, zero padding allowed).
BitMatrix read_alist(std::istream& in);

/// Stable compact text form: sorted keys, trailing newline.
std::string dump(const Json& j);

}  // namespace lqc
