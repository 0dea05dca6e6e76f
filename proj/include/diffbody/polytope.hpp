#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "diffbody/linalg.hpp"

namespace diffbody {

// Closed halfspace normal.x <= offset. Normals are primitive integer vectors
// (content 1) so equal hyperplanes compare equal componentwise.
struct Halfspace {
    Vec normal;
    Rat offset;

    Rat eval(const Vec& x) const { return dot(normal, x) - offset; }
};

// A facet of a polytope: supporting halfspace plus the sorted indices of the
// vertices lying on it.
struct Facet {
    Halfspace hs;
    std::vector<int> vertices;
};

// Star triangulation: each d-simplex is {vertices[apex]} together with one
// base tuple of d vertex indices. The apex is the lexicographically least
// vertex (index 0); base tuples are boundary simplices not containing it.
struct Triangulation {
    int apex = 0;
    std::vector<std::vector<int>> bases;
};

// Full-dimensional convex polytope over Q^d in vertex representation, with
// facets, a triangulation and the exact volume computed at construction.
// Immutable after construction; vertices are lexicographically sorted and
// irredundant.
class Polytope {
  public:
    static Polytope hull(const std::vector<Vec>& points);

    int dim() const { return dim_; }
    const std::vector<Vec>& vertices() const { return vertices_; }
    const std::vector<Facet>& facets() const { return facets_; }
    const Triangulation& triangulation() const { return tri_; }
    const Rat& volume() const { return volume_; }

    bool contains(const Vec& x) const;          // closed membership
    bool strictly_contains(const Vec& x) const;  // interior membership
    Vec vertex_centroid() const;
    std::pair<Vec, Vec> bounding_box() const;   // (lo, hi) componentwise
    Rat support(const Vec& direction) const;    // max over vertices of <dir, v>

    bool same_vertex_set(const Polytope& other) const;

  private:
    Polytope() = default;

    int dim_ = 0;
    std::vector<Vec> vertices_;
    std::vector<Facet> facets_;
    Triangulation tri_;
    Rat volume_;
};

Polytope convex_hull(const std::vector<Vec>& points);

inline const Rat& volume(const Polytope& p) { return p.volume(); }

Polytope minkowski_sum(const Polytope& p, const Polytope& q);

// x -> scale * (x or -x) + shift. scale must be nonzero.
Polytope affine_map(const Polytope& p, const Rat& scale, bool negate, const Vec& shift);
Polytope negate(const Polytope& p);
Polytope translate(const Polytope& p, const Vec& shift);

// Polar body {y : y.x <= 1 for all x in p}; requires 0 strictly interior.
Polytope polar(const Polytope& p);

struct Intersection {
    enum class Kind { Full, Degenerate, Empty };
    Kind kind = Kind::Empty;
    std::optional<Polytope> body;  // set iff Full
    std::optional<Vec> witness;    // a point of the intersection, set unless Empty

    // volume as seen by measure-theoretic callers: 0 unless Full
    Rat volume() const { return body ? body->volume() : Rat(0); }
};

Intersection intersect(const Polytope& p, const Polytope& q);

// Vertex enumeration of a bounded H-representation.
Intersection polytope_from_halfspaces(const std::vector<Halfspace>& hrep, int dim);

}  // namespace diffbody
