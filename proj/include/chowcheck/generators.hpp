#pragma once

// Named polytopes for the CLI and the tests.

#include "chowcheck/polytope.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace chowcheck {

/// Unknown generator name or bad parameters.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// conv{(0,0), (0,1), (1,1), (k,0)}, k ≥ 2; its toric surface is the
/// (k−1)-th Hirzebruch surface.
LatticePolytope hirzebruch(long k);

/// conv{0, e_1, ..., e_n}.
LatticePolytope standard_simplex(std::size_t n);

/// [0,1]^n.
LatticePolytope unit_cube(std::size_t n);

/// {x : <x, ±e_i> ≥ −1} = [−1,1]^n: the reflexive Delzant polytope whose
/// facet normals are the vertices of the cross-polytope, i.e. (P^1)^n with
/// its anticanonical polarization.
LatticePolytope cross(std::size_t n);

/// conv{±e_1, ..., ±e_n} itself (reflexive, but not Delzant for n ≥ 2).
LatticePolytope cross_polytope(std::size_t n);

/// [a, b] ⊂ R, a < b.
LatticePolytope segment(long a, long b);

/// Columns v_1..v_12 of the 7 × 12 normal matrix; the polytope is
/// {x ∈ R^7 : <x, v_i> ≥ −1}.
const std::array<std::array<int, 12>, 7>& nill_paffenholz_normals();
LatticePolytope nill_paffenholz();

/// Dispatch by name: "hirzebruch k", "simplex n", "cube n", "cross n",
/// "cross-polytope n", "nill-paffenholz", "segment a b".
LatticePolytope generate(const std::string& name, const std::vector<std::string>& args);

/// "name arg1 arg2 ..." as used in reports.
std::string generator_id(const std::string& name, const std::vector<std::string>& args);

}  // namespace chowcheck
