#pragma once

// Full-dimensional lattice polytopes in both vertex and halfspace form.
//
// Inequality convention throughout: <normal, x> + offset >= 0 with a primitive
// integer normal, the facet being the equality locus. With this convention a
// reflexive polytope is literally "every offset equals 1".

#include "chowcheck/exact_linalg.hpp"

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace chowcheck {

/// Input that does not describe a bounded full-dimensional lattice polytope.
class GeometryError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Inequality {
  IntVector normal;
  Integer offset;

  /// <normal, x> + offset
  Integer slack(const IntVector& x) const { return dot(normal, x) + offset; }
  Rational slack(const RatVector& x) const { return dot(normal, x) + Rational(offset); }

  friend bool operator==(const Inequality&, const Inequality&) = default;
};

bool operator<(const Inequality& a, const Inequality& b);

struct HalfspaceRep {
  std::size_t dim = 0;
  std::vector<Inequality> inequalities;

  friend bool operator==(const HalfspaceRep&, const HalfspaceRep&) = default;
};

struct Simplex {
  std::vector<IntVector> vertices;  // dim + 1 affinely independent points

  /// Euclidean volume |det(v_k - v_0)| / n!.
  Rational volume() const;
};

class LatticePolytope {
 public:
  /// Convex hull of the given lattice points. Points that are not extreme are
  /// dropped; the hull must be full-dimensional in Z^dim.
  static LatticePolytope from_points(std::size_t dim, std::vector<IntVector> points);

  /// Solution set of the inequalities; must be bounded, full-dimensional and
  /// have integral vertices. Redundant inequalities are discarded.
  static LatticePolytope from_halfspaces(const HalfspaceRep& h);

  std::size_t dim() const { return dim_; }
  /// Sorted lexicographically.
  const std::vector<IntVector>& vertices() const { return vertices_; }
  /// Irredundant, primitive normals, sorted.
  const HalfspaceRep& facets() const { return facets_; }
  /// For each facet, indices of the vertices lying on it.
  const std::vector<std::vector<std::size_t>>& facet_vertices() const { return facet_vertices_; }
  /// For each vertex, indices of the facets containing it.
  const std::vector<std::vector<std::size_t>>& vertex_facets() const { return vertex_facets_; }

  friend bool operator==(const LatticePolytope& a, const LatticePolytope& b) {
    return a.vertices_ == b.vertices_ && a.facets_ == b.facets_;
  }

 private:
  LatticePolytope(std::size_t dim, std::vector<IntVector> vertices, HalfspaceRep facets);
  // Caller guarantees that vertices and facets describe the same polytope.
  static LatticePolytope from_halfspaces_unchecked(std::size_t dim, std::vector<IntVector> vertices,
                                                   HalfspaceRep facets);

  friend LatticePolytope hrep_to_vrep(const HalfspaceRep& h);
  friend LatticePolytope dilate(const LatticePolytope& p, const Integer& factor);
  friend LatticePolytope translate(const LatticePolytope& p, const IntVector& t);

  std::size_t dim_ = 0;
  std::vector<IntVector> vertices_;
  HalfspaceRep facets_;
  std::vector<std::vector<std::size_t>> facet_vertices_;
  std::vector<std::vector<std::size_t>> vertex_facets_;
};

/// Irredundant halfspace description of conv(points).
HalfspaceRep vrep_to_hrep(std::size_t dim, const std::vector<IntVector>& points);
HalfspaceRep vrep_to_hrep(const LatticePolytope& p);

/// The candidates that are facets of conv(points): those whose equality locus
/// holds an affinely (dim-1)-dimensional subset of the points. Each is rescaled
/// to a primitive normal and duplicates collapse. Candidates must be valid
/// inequalities for every point.
HalfspaceRep supporting_facets(std::size_t dim, const std::vector<IntVector>& points,
                               const std::vector<Inequality>& candidates);

/// Exact (rational) vertices of a bounded full-dimensional halfspace system,
/// sorted and deduplicated.
std::vector<RatVector> halfspace_vertices(const HalfspaceRep& h);

/// Lattice polytope described by h; throws GeometryError on unbounded, empty,
/// lower-dimensional or non-integral input.
LatticePolytope hrep_to_vrep(const HalfspaceRep& h);

bool contains(const HalfspaceRep& h, const RatVector& x);
/// Every inequality holds strictly.
bool contains_strictly(const HalfspaceRep& h, const RatVector& x);

LatticePolytope dilate(const LatticePolytope& p, const Integer& factor);
LatticePolytope translate(const LatticePolytope& p, const IntVector& t);
/// x ↦ m·x for an integer matrix m (rows given); m must be invertible.
LatticePolytope linear_image(const LatticePolytope& p, const std::vector<IntVector>& m);

/// Primitive directions of the edges at vertex v, pointing away from it.
std::vector<IntVector> vertex_edge_directions(const LatticePolytope& p, std::size_t v);

enum class ApexRule { LexSmallest, LexLargest };

/// Star triangulation: cone from the apex vertex over the recursively
/// triangulated facets that do not contain it.
std::vector<Simplex> triangulate(const LatticePolytope& p, ApexRule rule = ApexRule::LexSmallest);

/// Dimension of the affine hull of the points (-1 for an empty set).
long affine_dimension(std::span<const IntVector> points);

}  // namespace chowcheck
