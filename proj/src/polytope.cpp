#include <algorithm>
#include <cstddef>

#include "diffbody/errors.hpp"
#include "diffbody/lp.hpp"
#include "diffbody/polytope.hpp"

namespace diffbody {

bool Polytope::contains(const Vec& x) const {
    if (static_cast<int>(x.size()) != dim_) throw DimensionMismatch("contains: point dimension");
    return std::all_of(facets_.begin(), facets_.end(),
                       [&](const Facet& f) { return f.hs.eval(x) <= 0; });
}

bool Polytope::strictly_contains(const Vec& x) const {
    if (static_cast<int>(x.size()) != dim_) throw DimensionMismatch("contains: point dimension");
    return std::all_of(facets_.begin(), facets_.end(),
                       [&](const Facet& f) { return f.hs.eval(x) < 0; });
}

Vec Polytope::vertex_centroid() const {
    Vec c = zero_vec(dim_);
    for (const Vec& v : vertices_) c = add(c, v);
    return scaled(c, rat(1, static_cast<long>(vertices_.size())));
}

std::pair<Vec, Vec> Polytope::bounding_box() const {
    Vec lo = vertices_[0];
    Vec hi = vertices_[0];
    for (const Vec& v : vertices_) {
        for (int i = 0; i < dim_; ++i) {
            const auto k = static_cast<std::size_t>(i);
            if (v[k] < lo[k]) lo[k] = v[k];
            if (v[k] > hi[k]) hi[k] = v[k];
        }
    }
    return {lo, hi};
}

Rat Polytope::support(const Vec& direction) const {
    Rat best = dot(direction, vertices_[0]);
    for (std::size_t i = 1; i < vertices_.size(); ++i) {
        Rat v = dot(direction, vertices_[i]);
        if (v > best) best = v;
    }
    return best;
}

bool Polytope::same_vertex_set(const Polytope& other) const {
    return dim_ == other.dim_ && vertices_ == other.vertices_;
}

Polytope minkowski_sum(const Polytope& p, const Polytope& q) {
    if (p.dim() != q.dim()) throw DimensionMismatch("minkowski_sum: dimensions differ");
    std::vector<Vec> sums;
    sums.reserve(p.vertices().size() * q.vertices().size());
    for (const Vec& v : p.vertices())
        for (const Vec& w : q.vertices()) sums.push_back(add(v, w));
    return Polytope::hull(sums);
}

Polytope affine_map(const Polytope& p, const Rat& scale, bool neg, const Vec& shift) {
    if (scale == 0) throw DegenerateInput("affine_map: zero scale");
    if (static_cast<int>(shift.size()) != p.dim())
        throw DimensionMismatch("affine_map: shift dimension");
    std::vector<Vec> mapped;
    mapped.reserve(p.vertices().size());
    for (const Vec& v : p.vertices()) {
        Vec m(v.size());
        for (std::size_t i = 0; i < v.size(); ++i)
            m[i] = scale * (neg ? -v[i] : v[i]) + shift[i];
        mapped.push_back(std::move(m));
    }
    return Polytope::hull(mapped);
}

Polytope negate(const Polytope& p) { return affine_map(p, 1, true, zero_vec(p.dim())); }

Polytope translate(const Polytope& p, const Vec& shift) {
    return affine_map(p, 1, false, shift);
}

Polytope polar(const Polytope& p) {
    std::vector<Vec> duals;
    duals.reserve(p.facets().size());
    for (const Facet& f : p.facets()) {
        if (f.hs.offset <= 0)
            throw OriginNotInterior("polar: origin not strictly interior");
        duals.push_back(scaled(f.hs.normal, 1 / f.hs.offset));
    }
    return Polytope::hull(duals);
}

Intersection polytope_from_halfspaces(const std::vector<Halfspace>& hrep, int dim) {
    const auto d = static_cast<std::size_t>(dim);
    // Chebyshev-style interior LP: maximize t subject to a.x + t*|a|_1 <= b,
    // free variables split into differences of nonnegatives.
    const std::size_t nv = 2 * d + 2;
    std::vector<LpRow> rows;
    rows.reserve(hrep.size());
    for (const Halfspace& hs : hrep) {
        Rat s = 0;
        for (const Rat& c : hs.normal) s += abs(c);
        if (s == 0) throw Error("halfspace with zero normal");
        LpRow row;
        row.a.assign(nv, Rat(0));
        for (std::size_t i = 0; i < d; ++i) {
            row.a[i] = hs.normal[i];
            row.a[d + i] = -hs.normal[i];
        }
        row.a[2 * d] = s;
        row.a[2 * d + 1] = -s;
        row.rel = Rel::LE;
        row.b = hs.offset;
        rows.push_back(std::move(row));
    }
    Vec c(nv, Rat(0));
    c[2 * d] = -1;
    c[2 * d + 1] = 1;
    LpResult lp = lp_solve_min(rows, c);
    if (lp.status == LpStatus::Unbounded)
        throw Error("polytope_from_halfspaces: unbounded region");
    if (lp.status != LpStatus::Optimal) throw Error("interior LP failed");

    const Rat t = -lp.objective;
    Vec center(d);
    for (std::size_t i = 0; i < d; ++i) center[i] = lp.x[i] - lp.x[d + i];

    Intersection out;
    if (t < 0) {
        out.kind = Intersection::Kind::Empty;
        return out;
    }
    out.witness = center;
    if (t == 0) {
        out.kind = Intersection::Kind::Degenerate;
        return out;
    }

    // Dualize about the interior point, hull, and dualize back: the facets of
    // conv{a_i / (b_i - a_i.center)} are exactly the vertices of the region.
    std::vector<Vec> dual_pts;
    dual_pts.reserve(hrep.size());
    for (const Halfspace& hs : hrep) {
        const Rat margin = hs.offset - dot(hs.normal, center);
        dual_pts.push_back(scaled(hs.normal, 1 / margin));
    }
    Polytope dual = Polytope::hull(dual_pts);
    std::vector<Vec> verts;
    verts.reserve(dual.facets().size());
    for (const Facet& f : dual.facets()) {
        if (f.hs.offset <= 0) throw Error("internal: dual hull without interior origin");
        verts.push_back(add(center, scaled(f.hs.normal, 1 / f.hs.offset)));
    }
    out.kind = Intersection::Kind::Full;
    out.body = Polytope::hull(verts);
    return out;
}

Intersection intersect(const Polytope& p, const Polytope& q) {
    if (p.dim() != q.dim()) throw DimensionMismatch("intersect: dimensions differ");
    std::vector<Halfspace> hrep;
    hrep.reserve(p.facets().size() + q.facets().size());
    for (const Facet& f : p.facets()) hrep.push_back(f.hs);
    for (const Facet& f : q.facets()) hrep.push_back(f.hs);
    return polytope_from_halfspaces(hrep, p.dim());
}

}  // namespace diffbody
