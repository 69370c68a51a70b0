#pragma once

// JSON encodings. Integers and rationals are always written as decimal
// strings ("p/q", or "p" when q = 1); on input plain JSON integers are also
// accepted. Objects use sorted keys, so dumps are byte-stable.

#include "chowcheck/delzant.hpp"
#include "chowcheck/ehrhart.hpp"
#include "chowcheck/git_weights.hpp"
#include "chowcheck/hilbert.hpp"
#include "chowcheck/obstruction.hpp"

#include <json.hpp>

#include <stdexcept>

namespace chowcheck {

using Json = nlohmann::json;

/// Malformed JSON input.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Json to_json(const Integer& z);
Json to_json(const Rational& q);
Json to_json(const IntVector& v);
Json to_json(const RatVector& v);

Integer integer_from_json(const Json& j);
Rational rational_from_json(const Json& j);
IntVector int_vector_from_json(const Json& j);

/// {"dim": n, "vertices": [[...]], "facets": [{"normal": [...], "offset": k}]}
Json to_json(const LatticePolytope& p);
/// Either "vertices" or "facets" may be omitted; when both are present they
/// must describe the same polytope.
LatticePolytope polytope_from_json(const Json& j);

Json to_json(const DilationData& d);
Json to_json(const EhrhartPolynomial& e);
Json to_json(const SumPolynomial& s);
Json to_json(const MeasureData& m);
Json to_json(const DelzantVerdict& v);
Json to_json(const ObstructionReport& r);
Json to_json(const HilbertTruncation& t, const SeriesCheck& check);
Json to_json(const WeightSet& w);
Json to_json(const DiagonalResult& d);

/// Either a bare list of weights or {"weights": [...]}.
WeightSet weights_from_json(const Json& j);

}  // namespace chowcheck
