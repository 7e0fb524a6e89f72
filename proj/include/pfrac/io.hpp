#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "pfrac/arrangement.hpp"
#include "pfrac/decomposer.hpp"
#include "pfrac/verifier.hpp"

namespace pfrac::io {

using json = nlohmann::ordered_json;

/// Parses {"dimension": n, "forms": [{"vector": [...], "mu": "..."}]} and
/// validates it. Schema problems throw Error(Parse) naming the form index.
ArrangementInput parse_input(std::string_view text);
json input_to_json(const ArrangementInput& input);

json rational_list(const std::vector<Rational>& values);
json point_to_json(const ArrangementPoint& p);
json points_to_json(const std::vector<ArrangementPoint>& points);
json poly_to_json(const MultiPoly& p);
MultiPoly poly_from_json(const json& j, std::size_t n_vars);
json genericity_to_json(const GenericityReport& r);
json decomposition_to_json(const Decomposition& d, const std::vector<PointPolynomial>& cps);
json report_to_json(const VerificationReport& r);

struct LoadedDecomposition {
  Decomposition decomposition;
  /// Empty when the document carries no "point_polynomials".
  std::vector<PointPolynomial> point_polynomials;
};

/// Reads a decomposition document against the input it claims to decompose.
/// Structural problems (bad indices, malformed rationals) throw Error(Parse).
LoadedDecomposition parse_decomposition(std::string_view text, const ArrangementInput& input);

std::string format_form(const AffineForm& f);
std::string format_coords(const RatVector& v);
std::string format_index_set(const IndexSet& s);
/// "1/(x0) - 1/(x0 + 1)".
std::string format_sum(const Decomposition& d);

std::string points_text(const ArrangementInput& input, const std::vector<ArrangementPoint>& points,
                        std::size_t max_xp);
std::string genericity_text(const ArrangementInput& input, const GenericityReport& r);
std::string decomposition_text(const Decomposition& d, const std::vector<PointPolynomial>& cps,
                               std::size_t max_xp = kDefaultMaxXp);
std::string report_text(const VerificationReport& r);

/// Serialized JSON, two-space indent, trailing newline.
std::string dump(const json& j);

}  // namespace pfrac::io
