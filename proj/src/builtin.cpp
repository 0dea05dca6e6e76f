#include "diffbody/builtin.hpp"

#include "diffbody/errors.hpp"

namespace diffbody {

namespace {

void check_dim(int n) {
    if (n < 1 || n > 8) throw DimensionTooLarge("builtin body: dimension must be 1..8");
}

}  // namespace

Polytope make_simplex(int n) {
    check_dim(n);
    std::vector<Vec> pts;
    pts.push_back(zero_vec(n));
    for (int i = 0; i < n; ++i) {
        Vec e = zero_vec(n);
        e[static_cast<std::size_t>(i)] = 1;
        pts.push_back(std::move(e));
    }
    return Polytope::hull(pts);
}

Polytope make_cube(int n) {
    check_dim(n);
    std::vector<Vec> pts;
    pts.reserve(1u << n);
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        Vec p(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = (mask >> i) & 1u;
        pts.push_back(std::move(p));
    }
    return Polytope::hull(pts);
}

Polytope make_crosspoly(int n) {
    check_dim(n);
    std::vector<Vec> pts;
    pts.reserve(2 * static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        Vec e = zero_vec(n);
        e[static_cast<std::size_t>(i)] = 1;
        pts.push_back(e);
        e[static_cast<std::size_t>(i)] = -1;
        pts.push_back(std::move(e));
    }
    return Polytope::hull(pts);
}

Polytope make_centered_cube(int n) {
    check_dim(n);
    std::vector<Vec> pts;
    pts.reserve(1u << n);
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        Vec p(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = ((mask >> i) & 1u) ? 1 : -1;
        pts.push_back(std::move(p));
    }
    return Polytope::hull(pts);
}

Polytope make_builtin(const std::string& name, int n) {
    if (name == "simplex") return make_simplex(n);
    if (name == "cube") return make_cube(n);
    if (name == "crosspoly") return make_crosspoly(n);
    throw ParseError("unknown builtin body: \"" + name + "\"");
}

}  // namespace diffbody
