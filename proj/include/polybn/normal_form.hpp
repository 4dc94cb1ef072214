#pragma once

#include <string>

#include "polybn/polygon.hpp"

namespace polybn {

// Canonical representative of the affine unimodular equivalence class
// of `p` (GL2(Z) together with integer translations). Two polygons are
// equivalent exactly when their normal forms compare equal. The
// representative of a point is the origin, of a segment the horizontal
// segment from the origin of the same lattice length; a two-dimensional
// class is pinned down by rotating a width-realizing direction to
// vertical and minimising over the residual shear/flip/translation.
Polygon normal_form(const Polygon& p);

bool equivalent(const Polygon& p, const Polygon& q);

// "x,y x,y ..." over the canonical vertex order; "-" for the empty
// polygon. Stable dictionary key for a polygon (pair it with
// normal_form for a class key).
std::string vertex_key(const Polygon& p);

}  // namespace polybn
