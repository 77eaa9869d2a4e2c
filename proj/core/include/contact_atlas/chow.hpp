#pragma once

#include <array>
#include <string>
#include <utility>

#include "contact_atlas/numeric.hpp"

namespace contact_atlas {

// Ruled surface S over a genus-g curve, normalized with invariant e. Genus 0
// requires e >= 0 (the Hirzebruch range; e = 0 is the product surface).
struct RuledSurfaceParams {
    int g = 0;
    int e = 0;
};

void validate_params(const RuledSurfaceParams& p);

// True for parameters outside the range the relations were normalized in
// (e < 0); the formulas stay polynomial in e, so computation proceeds, but
// callers may want to warn.
bool outside_normalized_range(const RuledSurfaceParams& p);

// Element of A(S) over the basis {1, l, B0, pt}: fiber class l, distinguished
// section B0, point class pt. Relations: l*l = 0, l*B0 = pt, B0*B0 = -e*pt.
// `truncated` is set (and sticky) when a product drops terms beyond the top
// degree.
struct SurfaceClass {
    Rat c0, cl, cb, cpt;
    bool truncated = false;

    bool is_zero() const { return c0 == 0 && cl == 0 && cb == 0 && cpt == 0; }
    bool operator==(const SurfaceClass& o) const {
        return c0 == o.c0 && cl == o.cl && cb == o.cb && cpt == o.cpt;
    }
};

SurfaceClass surface_unit();
SurfaceClass surface_l(const Rat& c = 1);
SurfaceClass surface_b0(const Rat& c = 1);
SurfaceClass surface_pt(const Rat& c = 1);
SurfaceClass surface_add(const SurfaceClass& x, const SurfaceClass& y);
SurfaceClass surface_scale(const Rat& c, const SurfaceClass& x);
SurfaceClass surface_mul(const SurfaceClass& x, const SurfaceClass& y,
                         const RuledSurfaceParams& p);

// c1 = 2*B0 + (2 - 2g + e)*l and c2 = 4(1-g)*pt for the tangent bundle TS.
std::pair<SurfaceClass, SurfaceClass> chern_classes(const RuledSurfaceParams& p);

// Element a + b*xi of A(P(TS)) as a free A(S)-module with basis {1, xi}.
// Products reduce by xi^2 = xi*c1 - c2 (pullbacks implicit).
struct BundleClass {
    SurfaceClass a, b;

    bool truncated() const { return a.truncated || b.truncated; }
    bool operator==(const BundleClass& o) const { return a == o.a && b == o.b; }
};

BundleClass bundle_unit();
BundleClass bundle_xi();
BundleClass bundle_pullback(const SurfaceClass& s);
BundleClass bundle_add(const BundleClass& x, const BundleClass& y);
BundleClass bundle_scale(const Rat& c, const BundleClass& x);
BundleClass bundle_mul(const BundleClass& x, const BundleClass& y, const RuledSurfaceParams& p);

// Coefficient of xi * pt for a class homogeneous of degree 3; throws on
// inhomogeneous input. Pure pullbacks of top surface degree contribute 0.
Rat degree3(const BundleClass& x);

// Curve class in the basis (pushed-forward fiber, pushed-forward section,
// fiber of the projectivization).
struct CurveClass {
    Rat s_l, s_b, c_pi;
};

// Divisor class in the basis (pullback of l, pullback of B0, xi).
struct DivisorClassP {
    Rat d_l, d_b, d_xi;
};

// Rows (pullback l, pullback B0, xi) x columns (section_* l, section_* B0,
// fiber): [[0,1,0],[1,-e,0],[0,2-2g,1]].
std::array<std::array<Rat, 3>, 3> pairing_table(const RuledSurfaceParams& p);

Rat pair(const DivisorClassP& d, const CurveClass& c, const RuledSurfaceParams& p);

struct ShokurovReport {
    bool threshold_ok = false;
    std::array<Rat, 3> pairings;        // against the three basis curve classes
    Rat top_self_intersection;
};

// Analyzes D_a = a * (pullback of l) + xi: threshold a > 3*max(2g-2, e),
// basis pairings, and D_a^3.
ShokurovReport shokurov_threshold_check(const RuledSurfaceParams& p, long long a);

struct CpExampleReport {
    Rat xi_cubed;
    std::array<Rat, 3> minus_k_pairings;
    std::array<Rat, 3> d_pairings;
    // The basis identification of the contracted section class is ambiguous;
    // all three pairings are reported instead of asserting which one vanishes.
    bool identification_ambiguous = true;
};

// Numerics of the trivial ruled surface over an elliptic curve (g = 1,
// e = 0): xi^3, the pairings of -K = 2*xi, and the pairings of
// D = pullback(B0) + pullback(l) + 2*xi.
CpExampleReport cp_example_numbers();

}  // namespace contact_atlas
