#pragma once

#include <vector>

#include "contact_atlas/divisor.hpp"
#include "contact_atlas/fan.hpp"
#include "contact_atlas/numeric.hpp"

namespace contact_atlas {

// Presentation of Z^{#rays} / image(character lattice), computed from the
// Smith decomposition of the ray matrix. Class coordinates are stored with
// the torsion coordinates first (one per invariant factor, reduced modulo
// that factor) followed by the free coordinates.
struct ClassGroupPresentation {
    int free_rank = 0;
    std::vector<Int> torsion;
    std::vector<IntVec> ray_to_class;  // one coordinate vector per ray
};

ClassGroupPresentation class_group(const Fan& f);

// Coordinates of the class of a divisor with the given ray coefficients.
IntVec divisor_class(const ClassGroupPresentation& cg, const IntVec& coeffs);

// True iff the class of d lies in k * Cl: each free coordinate divisible by
// k, each torsion coordinate y_j divisible by gcd(k, d_j).
bool is_divisible_in_class_group(const ToricDivisor& d, const Int& k);

}  // namespace contact_atlas
