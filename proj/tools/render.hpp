#pragma once

// Plain-text renderings of the CLI reports.

#include "chowcheck/delzant.hpp"
#include "chowcheck/ehrhart.hpp"
#include "chowcheck/git_weights.hpp"
#include "chowcheck/hilbert.hpp"
#include "chowcheck/measure.hpp"
#include "chowcheck/obstruction.hpp"

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace chowcheck::render {

std::string vec(const RatVector& v);
std::string vec(const IntVector& v);
std::string polynomial(const EhrhartPolynomial& e);
std::string polynomial(const SumPolynomial& s);

void measure(std::ostream& os, const MeasureData& m);
void report(std::ostream& os, const ObstructionReport& r);
void ehrhart(std::ostream& os, const EhrhartPolynomial& e, const SumPolynomial& s, const MeasureData& m,
             const std::optional<ValidationReport>& validation, const std::optional<bool>& reciprocity);
void hilbert(std::ostream& os, const HilbertTruncation& t, const SeriesCheck& c);
void delzant(std::ostream& os, const LatticePolytope& p, const DelzantVerdict& v);
void weights(std::ostream& os, const WeightSet& w, bool semistable, const std::optional<WeightSet>& projected,
             const DiagonalResult& d);

// Left-aligned columns separated by two spaces, with a rule under the header.
void table(std::ostream& os, const std::vector<std::string>& header,
           const std::vector<std::vector<std::string>>& rows);

}  // namespace chowcheck::render
