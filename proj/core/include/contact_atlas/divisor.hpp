#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "contact_atlas/fan.hpp"
#include "contact_atlas/numeric.hpp"

namespace contact_atlas {

// A torus-invariant divisor sum(coeffs[i] * D_i) over the rays of a fan. The
// fan is referenced, not owned.
struct ToricDivisor {
    const Fan* fan = nullptr;
    IntVec coeffs;
};

ToricDivisor make_divisor(const Fan& f, IntVec coeffs);

// Per-maximal-cone linear functionals m with <m, ray> = -coeff(ray) on each
// ray of the cone; aligned with fan.max_cones.
struct SupportFunction {
    std::vector<RatVec> cone_functionals;
};

// K = -sum D_rho.
ToricDivisor canonical_divisor(const Fan& f);

// Integral support function when one exists. Requires a complete simplicial
// fan.
std::optional<SupportFunction> is_cartier(const ToricDivisor& d);

// Rational support function; always exists on a simplicial fan.
SupportFunction q_cartier_support_function(const ToricDivisor& d);

// Value of the support function at a point of the fan's support.
Rat support_value(const Fan& f, const SupportFunction& sf, const RatVec& point);

// Checks that `fine` refines `coarse` (containment cone by cone plus an exact
// facet-matching tiling check inside every coarse cone), then returns, for
// each ray of `fine` that is not a ray of `coarse`, the discrepancy
// phi(v) - 1, where phi is linear on each coarse cone and takes the value 1
// on every coarse ray generator.
std::vector<std::pair<IntVec, Rat>> discrepancies(const Fan& coarse, const Fan& fine);

bool is_nef(const ToricDivisor& d);
bool is_ample(const ToricDivisor& d);
bool is_fano(const Fan& f);

}  // namespace contact_atlas
