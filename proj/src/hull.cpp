#include <algorithm>
#include <cstddef>
#include <map>
#include <utility>

#include "diffbody/errors.hpp"
#include "diffbody/polytope.hpp"

namespace diffbody {

namespace {

constexpr int kMaxDim = 8;

// Simplicial facet of the incremental hull: d sorted vertex indices plus the
// outward supporting halfspace with primitive integer normal.
struct SFacet {
    std::vector<int> vs;
    Vec a;
    Rat b;
};

struct HalfspaceLess {
    bool operator()(const std::pair<Vec, Rat>& u, const std::pair<Vec, Rat>& v) const {
        for (std::size_t i = 0; i < u.first.size(); ++i) {
            if (u.first[i] < v.first[i]) return true;
            if (u.first[i] > v.first[i]) return false;
        }
        return u.second < v.second;
    }
};

// Outward halfspace through the points indexed by vs. The interior reference
// point must be strictly off the hyperplane.
void outward_halfspace(const std::vector<Vec>& pts, const std::vector<int>& vs,
                       const Vec& interior, Vec& a, Rat& b) {
    std::vector<Vec> face_pts;
    face_pts.reserve(vs.size());
    for (int i : vs) face_pts.push_back(pts[static_cast<std::size_t>(i)]);
    a = hyperplane_normal(face_pts);
    if (is_zero(a)) throw Error("internal: degenerate facet simplex");
    b = dot(a, face_pts[0]);
    const Rat side = dot(a, interior) - b;
    if (side > 0) {
        a = negated(a);
        b = -b;
    } else if (side == 0) {
        throw Error("internal: interior reference on facet hyperplane");
    }
}

struct Complex {
    std::vector<SFacet> facets;
    Vec interior;
};

// Incremental (beneath-beyond) hull over exact rationals. Points must be
// deduplicated and affinely full-dimensional; insertion follows the given
// order. Strict visibility: points on a supporting hyperplane are beneath.
Complex run_incremental(const std::vector<Vec>& pts, int d) {
    const std::size_t n = pts.size();

    // Greedy affinely independent start set.
    std::vector<int> init{0};
    std::vector<Vec> init_pts{pts[0]};
    std::vector<bool> used(n, false);
    used[0] = true;
    for (std::size_t i = 1; i < n && init.size() < static_cast<std::size_t>(d) + 1; ++i) {
        init_pts.push_back(pts[i]);
        if (affine_rank(init_pts) == static_cast<int>(init.size())) {
            init.push_back(static_cast<int>(i));
            used[i] = true;
        } else {
            init_pts.pop_back();
        }
    }
    if (init.size() != static_cast<std::size_t>(d) + 1)
        throw DegenerateInput("convex_hull: affine rank below ambient dimension");

    Complex cx;
    cx.interior = zero_vec(d);
    for (const Vec& p : init_pts) cx.interior = add(cx.interior, p);
    cx.interior = scaled(cx.interior, rat(1, d + 1));

    for (std::size_t skip = 0; skip < init.size(); ++skip) {
        SFacet f;
        for (std::size_t i = 0; i < init.size(); ++i)
            if (i != skip) f.vs.push_back(init[i]);
        std::sort(f.vs.begin(), f.vs.end());
        outward_halfspace(pts, f.vs, cx.interior, f.a, f.b);
        cx.facets.push_back(std::move(f));
    }

    std::vector<char> visible;
    for (std::size_t xi = 0; xi < n; ++xi) {
        if (used[xi]) continue;
        const Vec& x = pts[xi];

        visible.assign(cx.facets.size(), 0);
        bool any = false;
        for (std::size_t fi = 0; fi < cx.facets.size(); ++fi) {
            if (dot(cx.facets[fi].a, x) > cx.facets[fi].b) {
                visible[fi] = 1;
                any = true;
            }
        }
        if (!any) continue;  // x inside or on the current hull

        // Horizon ridges: appear in exactly one visible facet.
        std::map<std::vector<int>, int> ridge_count;
        std::vector<int> ridge(static_cast<std::size_t>(d) - 1);
        for (std::size_t fi = 0; fi < cx.facets.size(); ++fi) {
            if (!visible[fi]) continue;
            const auto& vs = cx.facets[fi].vs;
            for (int k = 0; k < d; ++k) {
                ridge.clear();
                for (int j = 0; j < d; ++j)
                    if (j != k) ridge.push_back(vs[static_cast<std::size_t>(j)]);
                ++ridge_count[ridge];
            }
        }

        std::vector<SFacet> kept;
        kept.reserve(cx.facets.size());
        for (std::size_t fi = 0; fi < cx.facets.size(); ++fi)
            if (!visible[fi]) kept.push_back(std::move(cx.facets[fi]));
        cx.facets = std::move(kept);

        for (auto& [r, count] : ridge_count) {
            if (count != 1) continue;
            SFacet f;
            f.vs = r;
            f.vs.push_back(static_cast<int>(xi));
            std::sort(f.vs.begin(), f.vs.end());
            outward_halfspace(pts, f.vs, cx.interior, f.a, f.b);
            cx.facets.push_back(std::move(f));
        }
    }
    return cx;
}

// Candidate complex vertices that are genuine extreme points: the supporting
// hyperplanes active at the point must span the ambient space.
std::vector<int> extreme_indices(const Complex& cx, const std::vector<Vec>& pts, int d) {
    std::map<std::pair<Vec, Rat>, char, HalfspaceLess> planes;
    for (const SFacet& f : cx.facets) planes.emplace(std::make_pair(f.a, f.b), 0);

    std::vector<char> candidate(pts.size(), 0);
    for (const SFacet& f : cx.facets)
        for (int v : f.vs) candidate[static_cast<std::size_t>(v)] = 1;

    std::vector<int> out;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (!candidate[i]) continue;
        Mat active;
        for (const auto& [hs, unused] : planes) {
            if (dot(hs.first, pts[i]) == hs.second) active.push_back(hs.first);
        }
        if (static_cast<int>(active.size()) >= d && rank(std::move(active)) == d)
            out.push_back(static_cast<int>(i));
    }
    return out;
}

}  // namespace

Polytope Polytope::hull(const std::vector<Vec>& points) {
    if (points.empty()) throw EmptyInput("convex_hull: no points");
    const int d = static_cast<int>(points[0].size());
    if (d < 1) throw DegenerateInput("convex_hull: zero-dimensional points");
    if (d > kMaxDim) throw DimensionTooLarge("convex_hull: dimension above 8");
    for (const Vec& p : points)
        if (static_cast<int>(p.size()) != d)
            throw DimensionMismatch("convex_hull: mixed point dimensions");

    std::vector<Vec> pts = points;
    std::sort(pts.begin(), pts.end(), lex_less);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < static_cast<std::size_t>(d) + 1)
        throw DegenerateInput("convex_hull: affine rank below ambient dimension");

    Complex cx = run_incremental(pts, d);
    std::vector<int> extreme = extreme_indices(cx, pts, d);

    // Rebuild over extreme points only, so the boundary complex references
    // genuine vertices and nothing else.
    if (extreme.size() != pts.size()) {
        std::vector<Vec> vpts;
        vpts.reserve(extreme.size());
        for (int i : extreme) vpts.push_back(std::move(pts[static_cast<std::size_t>(i)]));
        pts = std::move(vpts);
        cx = run_incremental(pts, d);
    }

    Polytope p;
    p.dim_ = d;
    p.vertices_ = std::move(pts);

    // Merge coplanar simplicial facets into true facets.
    std::map<std::pair<Vec, Rat>, char, HalfspaceLess> planes;
    for (const SFacet& f : cx.facets) planes.emplace(std::make_pair(f.a, f.b), 0);
    for (const auto& [hs, unused] : planes) {
        Facet facet;
        facet.hs = Halfspace{hs.first, hs.second};
        for (std::size_t v = 0; v < p.vertices_.size(); ++v) {
            const Rat ev = dot(hs.first, p.vertices_[v]) - hs.second;
            if (ev > 0) throw Error("internal: vertex beyond facet after hull");
            if (ev == 0) facet.vertices.push_back(static_cast<int>(v));
        }
        p.facets_.push_back(std::move(facet));
    }

    // Star triangulation from the lexicographically least vertex.
    p.tri_.apex = 0;
    for (const SFacet& f : cx.facets) {
        if (std::find(f.vs.begin(), f.vs.end(), 0) != f.vs.end()) continue;
        p.tri_.bases.push_back(f.vs);
    }
    std::sort(p.tri_.bases.begin(), p.tri_.bases.end());

    const Vec& apex = p.vertices_[0];
    Rat vol = 0;
    for (const auto& base : p.tri_.bases) {
        Mat rows;
        rows.reserve(base.size());
        for (int v : base) rows.push_back(sub(p.vertices_[static_cast<std::size_t>(v)], apex));
        vol += abs(det(std::move(rows)));
    }
    p.volume_ = vol / Rat(factorial(static_cast<unsigned>(d)));
    return p;
}

Polytope convex_hull(const std::vector<Vec>& points) { return Polytope::hull(points); }

}  // namespace diffbody
