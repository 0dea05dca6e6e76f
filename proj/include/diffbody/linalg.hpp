#pragma once

#include <vector>

#include "diffbody/rat.hpp"

namespace diffbody {

// A point or direction in Q^d. Dimension is the vector length.
using Vec = std::vector<Rat>;
using Mat = std::vector<Vec>;

Rat dot(const Vec& a, const Vec& b);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scaled(const Vec& a, const Rat& s);
Vec negated(const Vec& a);
Vec zero_vec(int d);
bool is_zero(const Vec& a);
bool lex_less(const Vec& a, const Vec& b);

std::string vec_str(const Vec& v);

// Exact determinant of a square rational matrix. Rows are scaled to integers
// and the integer determinant is taken fraction-free (Bareiss), then the row
// scales are divided back out.
Rat det(Mat m);

// Fraction-free integer determinant (Bareiss). Destroys its argument.
Int det_int(std::vector<std::vector<Int>> m);

// Rank of a rational matrix by Gaussian elimination.
int rank(Mat m);

// Affine rank of a point set (dimension of its affine hull).
int affine_rank(const std::vector<Vec>& points);

// Normal of the hyperplane through d affinely independent points in Q^d,
// with integer coordinates and content 1. Returns the zero vector when the
// points are affinely dependent. The sign is not specified.
Vec hyperplane_normal(const std::vector<Vec>& points);

// Solves a square system m x = rhs exactly; empty result if singular.
std::vector<Rat> solve_linear(Mat m, Vec rhs);

}  // namespace diffbody
