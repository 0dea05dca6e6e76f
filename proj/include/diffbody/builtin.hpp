#pragma once

#include <string>

#include "diffbody/polytope.hpp"

namespace diffbody {

// conv{0, e_1, ..., e_n}, volume 1/n!
Polytope make_simplex(int n);

// [0,1]^n
Polytope make_cube(int n);

// conv{+-e_i}, volume 2^n/n!
Polytope make_crosspoly(int n);

// [-1,1]^n (origin interior; used for polar-side constructions)
Polytope make_centered_cube(int n);

// name in {"simplex", "cube", "crosspoly"}
Polytope make_builtin(const std::string& name, int n);

}  // namespace diffbody
