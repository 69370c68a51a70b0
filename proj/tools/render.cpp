#include "render.hpp"

#include <algorithm>

namespace chowcheck::render {

std::string vec(const RatVector& v) {
  std::string s = "(";
  for (std::size_t c = 0; c < v.size(); ++c) s += (c ? ", " : "") + to_string(v[c]);
  return s + ")";
}

std::string vec(const IntVector& v) {
  std::string s = "(";
  for (std::size_t c = 0; c < v.size(); ++c) s += (c ? ", " : "") + v[c].get_str();
  return s + ")";
}

namespace {

std::string power(std::size_t j) {
  if (j == 0) return "";
  if (j == 1) return "t";
  return "t^" + std::to_string(j);
}

std::string join(const std::vector<long>& xs) {
  std::string s;
  for (std::size_t k = 0; k < xs.size(); ++k) s += (k ? ", " : "") + std::to_string(xs[k]);
  return s;
}

}  // namespace

std::string polynomial(const EhrhartPolynomial& e) {
  std::string s;
  for (std::size_t j = 0; j < e.coefficients().size(); ++j) {
    const Rational& c = e.coefficients()[j];
    if (c == 0) continue;
    if (!s.empty()) s += c < 0 ? " - " : " + ";
    else if (c < 0) s += "-";
    const Rational a = abs(c);
    if (j == 0) s += to_string(a);
    else s += (a == 1 ? "" : to_string(a) + " ") + power(j);
  }
  return s.empty() ? "0" : s;
}

std::string polynomial(const SumPolynomial& s) {
  std::string out;
  for (std::size_t j = 1; j <= s.degree(); ++j) {
    const RatVector c = s.coefficient(j);
    if (is_zero(c)) continue;
    out += (out.empty() ? "" : " + ") + vec(c) + " " + power(j);
  }
  return out.empty() ? "0" : out;
}

void table(std::ostream& os, const std::vector<std::string>& header,
           const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& r : rows) {
    for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
  }
  auto line = [&](const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      s += cells[c];
      if (c + 1 < cells.size()) s += std::string(width[c] - cells[c].size() + 2, ' ');
    }
    os << "  " << s << "\n";
  };
  line(header);
  std::size_t total = 0;
  for (auto w : width) total += w;
  os << "  " << std::string(total + 2 * (width.size() - 1), '-') << "\n";
  for (const auto& r : rows) line(r);
}

void measure(std::ostream& os, const MeasureData& m) {
  os << "volume:      " << to_string(m.volume) << "\n";
  os << "moment:      " << vec(m.moment) << "\n";
  os << "barycenter:  " << vec(m.barycenter) << "\n";
}

void report(std::ostream& os, const ObstructionReport& r) {
  if (!r.polytope_id.empty()) os << "polytope:    " << r.polytope_id << "\n";
  os << "dimension:   " << r.dim << "\n";
  os << "reflexive:   " << (r.reflexive ? "yes" : "no") << "\n";
  measure(os, r.measure);
  os << "E(t) =       " << polynomial(r.ehrhart) << "\n";
  os << "s(t) =       " << polynomial(r.sum) << "\n";
  os << "\nobstruction vectors F_j = vol*s_j - E_(j-1)*moment:\n";
  for (std::size_t j = 0; j < r.vectors.size(); ++j) os << "  F_" << j + 1 << " = " << vec(r.vectors[j]) << "\n";
  os << "  span rank " << r.span_rank << "\n";

  os << "\nresidual R(i) = vol*s(i) - i*E(i)*moment:\n";
  std::vector<std::vector<std::string>> rows;
  for (const auto& l : r.levels) {
    rows.push_back({std::to_string(l.level), l.count.get_str(), vec(l.sum), vec(l.residual)});
  }
  table(os, {"i", "E(i)", "s(i)", "R(i)"}, rows);

  os << "\nverdict:     " << to_string(r.verdict);
  if (r.verdict == VerdictKind::ChowUnstableAt) os << " " << join(r.unstable_levels);
  os << "\n";
  os << "R(i) is a polynomial of degree at most " << r.dim + 1
     << " with no constant term, so levels 1.." << r.dim + 1 << " decide every i.\n";
  switch (r.verdict) {
    case VerdictKind::ObstructionVanishes:
      os << "The necessary condition holds at every level; semistability is not decided.\n";
      break;
    case VerdictKind::ChowUnstableAt:
      os << "Chow unstable at the listed levels.\n";
      break;
    case VerdictKind::ReflexiveSemistable:
      os << "Reflexive with vanishing sums and moment: asymptotically Chow semistable.\n";
      break;
    case VerdictKind::ReflexiveUnstable:
      os << "Reflexive, residuals vanish but the moment or the sums do not.\n";
      break;
  }
}

void ehrhart(std::ostream& os, const EhrhartPolynomial& e, const SumPolynomial& s, const MeasureData& m,
             const std::optional<ValidationReport>& validation, const std::optional<bool>& reciprocity) {
  os << "E(t) = " << polynomial(e) << "\n";
  os << "s(t) = " << polynomial(s) << "\n";
  os << "leading coefficients: " << to_string(e.coefficient(e.degree())) << " (volume " << to_string(m.volume)
     << "), " << vec(s.coefficient(s.degree())) << " (moment " << vec(m.moment) << ")\n";
  if (validation) os << "validation: " << (validation->ok() ? "ok" : "MISMATCH\n" + validation->describe()) << "\n";
  if (reciprocity) os << "reciprocity (-1)^n E(-1) = interior points: " << (*reciprocity ? "holds" : "FAILS") << "\n";
}

void hilbert(std::ostream& os, const HilbertTruncation& t, const SeriesCheck& c) {
  os << "derivative series sum s(i) t^i against (sum i E(i) t^i) * moment / vol, to order " << t.order << ":\n";
  std::vector<std::vector<std::string>> rows;
  for (std::size_t k = 0; k < t.per_degree.size(); ++k) {
    const bool equal = t.derivative_series[k] == t.expected_series[k];
    rows.push_back({std::to_string(t.per_degree[k].level), t.per_degree[k].count.get_str(),
                    vec(t.derivative_series[k]), vec(t.expected_series[k]), equal ? "=" : "!="});
  }
  table(os, {"i", "E(i)", "s(i)", "expected", ""}, rows);
  if (c.reflexive) os << "reflexive: every coefficient must vanish\n";
  if (c.passes) {
    os << "passes through order " << t.order << "\n";
  } else {
    os << "fails; first failing degree " << *c.first_failing_degree << "\n";
  }
}

void delzant(std::ostream& os, const LatticePolytope& p, const DelzantVerdict& v) {
  os << "vertices: " << p.vertices().size() << ", facets: " << p.facets().inequalities.size() << "\n";
  os << "Delzant: " << (v.is_delzant() ? "yes" : "no") << "\n";
  for (const auto& f : v.failures) {
    os << "  vertex " << vec(f.vertex) << ": " << to_string(f.reason);
    if (f.reason == DelzantFailureReason::NotUnimodular) os << ", det " << to_string(f.determinant);
    os << "\n";
    for (const auto& e : f.edge_directions) os << "    edge " << vec(e) << "\n";
  }
}

void weights(std::ostream& os, const WeightSet& w, bool semistable, const std::optional<WeightSet>& projected,
             const DiagonalResult& d) {
  os << "weights (" << w.weights().size() << " in Z^" << w.ambient_dim() << "):\n";
  for (const auto& x : w.weights()) os << "  " << vec(x) << "\n";
  os << "origin in hull: " << (semistable ? "yes (semistable)" : "no (unstable)") << "\n";
  if (projected) {
    os << "projected to the subtorus:";
    for (const auto& x : projected->weights()) os << " " << vec(x);
    os << "\n";
    os << "origin in projected hull: " << (is_torus_semistable(*projected) ? "yes" : "no") << "\n";
  }
  os << "diagonal point in affine hull: ";
  switch (d.kind) {
    case DiagonalKind::None:
      os << "none\n";
      break;
    case DiagonalKind::Unique:
      os << "t = " << to_string(d.t) << "\n";
      break;
    case DiagonalKind::WholeDiagonal:
      os << "the whole diagonal\n";
      break;
  }
}

}  // namespace chowcheck::render
