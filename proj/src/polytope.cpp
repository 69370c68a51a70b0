#include "chowcheck/polytope.hpp"

#include "combinations.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

namespace chowcheck {

bool operator<(const Inequality& a, const Inequality& b) {
  if (a.normal != b.normal) return a.normal < b.normal;
  return a.offset < b.offset;
}

Rational Simplex::volume() const {
  if (vertices.empty()) throw DimensionError("Simplex: no vertices");
  const std::size_t n = vertices.size() - 1;
  RatMatrix edges(n, n);
  Integer fact = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    fact *= static_cast<unsigned long>(k);
    if (vertices[k].size() != n) throw DimensionError("Simplex: vertex length mismatch");
    for (std::size_t c = 0; c < n; ++c) edges(k - 1, c) = vertices[k][c] - vertices[0][c];
  }
  return abs(determinant(edges)) / Rational(fact);
}

long affine_dimension(std::span<const IntVector> points) {
  if (points.empty()) return -1;
  const std::size_t n = points.front().size();
  RatMatrix diffs(points.size() - 1, n);
  for (std::size_t i = 1; i < points.size(); ++i) {
    for (std::size_t c = 0; c < n; ++c) diffs(i - 1, c) = points[i][c] - points[0][c];
  }
  return static_cast<long>(rank(diffs));
}

namespace {

std::vector<IntVector> select(const std::vector<IntVector>& pts, const std::vector<std::size_t>& idx) {
  std::vector<IntVector> out;
  out.reserve(idx.size());
  for (auto i : idx) out.push_back(pts[i]);
  return out;
}

RatMatrix normal_matrix(const HalfspaceRep& h, const std::vector<std::size_t>& rows) {
  RatMatrix m(rows.size(), h.dim);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < h.dim; ++c) m(r, c) = h.inequalities[rows[r]].normal[c];
  }
  return m;
}

void check_points(std::size_t dim, const std::vector<IntVector>& points) {
  if (dim == 0) throw GeometryError("polytope dimension must be at least 1");
  for (const auto& p : points) {
    if (p.size() != dim) throw DimensionError("point has wrong length");
  }
}

}  // namespace

HalfspaceRep supporting_facets(std::size_t dim, const std::vector<IntVector>& points,
                                const std::vector<Inequality>& candidates) {
  std::set<Inequality> facets;
  for (const auto& ineq : candidates) {
    std::vector<IntVector> tight;
    for (const auto& p : points) {
      if (ineq.slack(p) == 0) tight.push_back(p);
    }
    if (tight.size() < dim || affine_dimension(tight) != static_cast<long>(dim) - 1) continue;
    Inequality f;
    f.normal = primitive(ineq.normal);
    f.offset = -dot(f.normal, tight.front());
    facets.insert(std::move(f));
  }
  return HalfspaceRep{dim, {facets.begin(), facets.end()}};
}

HalfspaceRep vrep_to_hrep(std::size_t dim, const std::vector<IntVector>& input) {
  check_points(dim, input);
  std::vector<IntVector> points = input;
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (affine_dimension(points) != static_cast<long>(dim)) {
    throw GeometryError("points are not full-dimensional");
  }

  std::set<Inequality> found;
  for_each_combination(points.size(), dim, [&](const std::vector<std::size_t>& idx) {
    // Hyperplane <a, x> + c = 0 through the chosen points: kernel of [p | 1].
    RatMatrix m(dim, dim + 1);
    for (std::size_t r = 0; r < dim; ++r) {
      for (std::size_t c = 0; c < dim; ++c) m(r, c) = points[idx[r]][c];
      m(r, dim) = 1;
    }
    const auto kernel = nullspace(m);
    if (kernel.size() != 1) return;
    const IntVector ac = primitive_integer_multiple(kernel.front());
    Inequality ineq{IntVector(ac.begin(), ac.begin() + static_cast<long>(dim)), ac[dim]};
    bool has_pos = false;
    bool has_neg = false;
    for (const auto& p : points) {
      const int s = sgn(ineq.slack(p));
      has_pos |= s > 0;
      has_neg |= s < 0;
      if (has_pos && has_neg) return;
    }
    if (has_neg) {
      for (auto& x : ineq.normal) x = -x;
      ineq.offset = -ineq.offset;
    }
    found.insert(std::move(ineq));
  });
  return supporting_facets(dim, points, {found.begin(), found.end()});
}

HalfspaceRep vrep_to_hrep(const LatticePolytope& p) { return vrep_to_hrep(p.dim(), p.vertices()); }

std::vector<RatVector> halfspace_vertices(const HalfspaceRep& h) {
  const std::size_t n = h.dim;
  if (n == 0) throw GeometryError("polytope dimension must be at least 1");
  for (const auto& ineq : h.inequalities) {
    if (ineq.normal.size() != n) throw DimensionError("inequality normal has wrong length");
  }
  const std::size_t m = h.inequalities.size();

  std::vector<std::size_t> all(m);
  for (std::size_t i = 0; i < m; ++i) all[i] = i;
  if (m == 0 || rank(normal_matrix(h, all)) < n) {
    throw GeometryError("halfspace system is unbounded (normals do not span)");
  }
  // Pointed cone {d : N d >= 0}; any extreme ray makes the set unbounded.
  for_each_combination(m, n - 1, [&](const std::vector<std::size_t>& idx) {
    const auto kernel = nullspace(normal_matrix(h, idx));
    if (kernel.size() != 1) return;
    for (int sign : {1, -1}) {
      const RatVector d = Rational(sign) * kernel.front();
      bool ray = true;
      for (const auto& ineq : h.inequalities) {
        if (dot(ineq.normal, d) < 0) {
          ray = false;
          break;
        }
      }
      if (ray) throw GeometryError("halfspace system is unbounded");
    }
  });

  std::set<RatVector> vertices;
  for_each_combination(m, n, [&](const std::vector<std::size_t>& idx) {
    RatVector rhs(n);
    for (std::size_t r = 0; r < n; ++r) rhs[r] = -h.inequalities[idx[r]].offset;
    const auto x = solve(normal_matrix(h, idx), rhs);
    if (!x) return;
    for (const auto& ineq : h.inequalities) {
      if (ineq.slack(*x) < 0) return;
    }
    vertices.insert(*x);
  });
  if (vertices.empty()) throw GeometryError("halfspace system is empty");
  return {vertices.begin(), vertices.end()};
}

LatticePolytope hrep_to_vrep(const HalfspaceRep& h) {
  const auto rational_vertices = halfspace_vertices(h);
  std::vector<IntVector> vertices;
  vertices.reserve(rational_vertices.size());
  for (const auto& v : rational_vertices) {
    if (!is_integral(v)) throw GeometryError("polytope has a non-integral vertex");
    vertices.push_back(to_integer(v));
  }
  if (affine_dimension(vertices) != static_cast<long>(h.dim)) {
    throw GeometryError("halfspace system is not full-dimensional");
  }
  auto facets = supporting_facets(h.dim, vertices, h.inequalities);
  return LatticePolytope::from_halfspaces_unchecked(h.dim, std::move(vertices), std::move(facets));
}

bool contains(const HalfspaceRep& h, const RatVector& x) {
  if (x.size() != h.dim) throw DimensionError("contains: point has wrong length");
  return std::all_of(h.inequalities.begin(), h.inequalities.end(),
                     [&](const Inequality& f) { return f.slack(x) >= 0; });
}

bool contains_strictly(const HalfspaceRep& h, const RatVector& x) {
  if (x.size() != h.dim) throw DimensionError("contains: point has wrong length");
  return std::all_of(h.inequalities.begin(), h.inequalities.end(),
                     [&](const Inequality& f) { return f.slack(x) > 0; });
}

// --- LatticePolytope ---------------------------------------------------------

LatticePolytope::LatticePolytope(std::size_t dim, std::vector<IntVector> vertices, HalfspaceRep facets)
    : dim_(dim), vertices_(std::move(vertices)), facets_(std::move(facets)) {
  std::sort(vertices_.begin(), vertices_.end());
  std::sort(facets_.inequalities.begin(), facets_.inequalities.end());
  facet_vertices_.assign(facets_.inequalities.size(), {});
  vertex_facets_.assign(vertices_.size(), {});
  for (std::size_t f = 0; f < facets_.inequalities.size(); ++f) {
    for (std::size_t v = 0; v < vertices_.size(); ++v) {
      if (facets_.inequalities[f].slack(vertices_[v]) == 0) {
        facet_vertices_[f].push_back(v);
        vertex_facets_[v].push_back(f);
      }
    }
  }
}

LatticePolytope LatticePolytope::from_halfspaces_unchecked(std::size_t dim, std::vector<IntVector> vertices,
                                                           HalfspaceRep facets) {
  return LatticePolytope(dim, std::move(vertices), std::move(facets));
}

LatticePolytope LatticePolytope::from_points(std::size_t dim, std::vector<IntVector> points) {
  HalfspaceRep facets = vrep_to_hrep(dim, points);
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  std::vector<IntVector> vertices;
  for (auto& p : points) {
    std::vector<std::size_t> tight;
    for (std::size_t f = 0; f < facets.inequalities.size(); ++f) {
      if (facets.inequalities[f].slack(p) == 0) tight.push_back(f);
    }
    if (tight.size() >= dim && rank(normal_matrix(facets, tight)) == dim) vertices.push_back(std::move(p));
  }
  return LatticePolytope(dim, std::move(vertices), std::move(facets));
}

LatticePolytope LatticePolytope::from_halfspaces(const HalfspaceRep& h) { return hrep_to_vrep(h); }

LatticePolytope dilate(const LatticePolytope& p, const Integer& factor) {
  if (factor <= 0) throw std::invalid_argument("dilation factor must be positive");
  std::vector<IntVector> vertices;
  for (const auto& v : p.vertices()) vertices.push_back(factor * v);
  HalfspaceRep facets = p.facets();
  for (auto& f : facets.inequalities) f.offset *= factor;
  return LatticePolytope::from_halfspaces_unchecked(p.dim(), std::move(vertices), std::move(facets));
}

LatticePolytope translate(const LatticePolytope& p, const IntVector& t) {
  if (t.size() != p.dim()) throw DimensionError("translate: vector has wrong length");
  std::vector<IntVector> vertices;
  for (const auto& v : p.vertices()) vertices.push_back(v + t);
  HalfspaceRep facets = p.facets();
  for (auto& f : facets.inequalities) f.offset -= dot(f.normal, t);
  return LatticePolytope::from_halfspaces_unchecked(p.dim(), std::move(vertices), std::move(facets));
}

LatticePolytope linear_image(const LatticePolytope& p, const std::vector<IntVector>& m) {
  if (m.size() != p.dim()) throw DimensionError("linear_image: matrix has wrong shape");
  if (determinant(RatMatrix::from_rows(m)) == 0) throw std::invalid_argument("linear_image: singular matrix");
  std::vector<IntVector> image;
  for (const auto& v : p.vertices()) {
    IntVector w(p.dim());
    for (std::size_t r = 0; r < p.dim(); ++r) w[r] = dot(m[r], v);
    image.push_back(std::move(w));
  }
  return LatticePolytope::from_points(p.dim(), std::move(image));
}

std::vector<IntVector> vertex_edge_directions(const LatticePolytope& p, std::size_t v) {
  if (v >= p.vertices().size()) throw std::out_of_range("vertex index out of range");
  const std::size_t n = p.dim();
  const auto& vf = p.vertex_facets();
  std::vector<IntVector> directions;
  for (std::size_t u = 0; u < p.vertices().size(); ++u) {
    if (u == v) continue;
    std::vector<std::size_t> common;
    std::set_intersection(vf[v].begin(), vf[v].end(), vf[u].begin(), vf[u].end(),
                          std::back_inserter(common));
    if (common.size() + 1 < n) continue;
    if (rank(normal_matrix(p.facets(), common)) != n - 1) continue;
    // The face cut out by the common facets must be exactly the segment [v, u].
    std::size_t on_face = 0;
    for (std::size_t w = 0; w < p.vertices().size(); ++w) {
      if (std::includes(vf[w].begin(), vf[w].end(), common.begin(), common.end())) ++on_face;
    }
    if (on_face != 2) continue;
    directions.push_back(primitive(p.vertices()[u] - p.vertices()[v]));
  }
  std::sort(directions.begin(), directions.end());
  return directions;
}

namespace {

using Face = std::vector<std::size_t>;

class Triangulator {
 public:
  Triangulator(const LatticePolytope& p, ApexRule rule) : p_(p), rule_(rule) {}

  const std::vector<Face>& cells(const Face& face, std::size_t d) {
    if (auto it = memo_.find(face); it != memo_.end()) return it->second;
    std::vector<Face> out;
    if (face.size() == d + 1) {
      out.push_back(face);
    } else {
      const std::size_t apex = rule_ == ApexRule::LexSmallest ? face.front() : face.back();
      std::set<Face> ridges;
      for (const auto& fv : p_.facet_vertices()) {
        Face ridge;
        std::set_intersection(face.begin(), face.end(), fv.begin(), fv.end(), std::back_inserter(ridge));
        if (ridge.size() < d || std::binary_search(ridge.begin(), ridge.end(), apex)) continue;
        if (affine_dimension(select(p_.vertices(), ridge)) != static_cast<long>(d) - 1) continue;
        ridges.insert(std::move(ridge));
      }
      for (const auto& ridge : ridges) {
        for (Face cell : cells(ridge, d - 1)) {
          cell.insert(std::lower_bound(cell.begin(), cell.end(), apex), apex);
          out.push_back(std::move(cell));
        }
      }
    }
    return memo_.emplace(face, std::move(out)).first->second;
  }

 private:
  const LatticePolytope& p_;
  ApexRule rule_;
  std::map<Face, std::vector<Face>> memo_;
};

}  // namespace

std::vector<Simplex> triangulate(const LatticePolytope& p, ApexRule rule) {
  Face all(p.vertices().size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  Triangulator t(p, rule);
  std::vector<Simplex> simplices;
  for (const auto& cell : t.cells(all, p.dim())) simplices.push_back(Simplex{select(p.vertices(), cell)});
  return simplices;
}

}  // namespace chowcheck
