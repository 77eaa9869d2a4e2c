#include "contact_atlas/chow.hpp"

#include <algorithm>
#include <stdexcept>

namespace contact_atlas {

void validate_params(const RuledSurfaceParams& p) {
    if (p.g < 0) throw std::invalid_argument("ruled surface: genus must be nonnegative");
    if (p.g == 0 && p.e < 0)
        throw std::invalid_argument("ruled surface: genus 0 requires e >= 0");
}

bool outside_normalized_range(const RuledSurfaceParams& p) { return p.e < 0; }

SurfaceClass surface_unit() { return {1, 0, 0, 0, false}; }
SurfaceClass surface_l(const Rat& c) { return {0, c, 0, 0, false}; }
SurfaceClass surface_b0(const Rat& c) { return {0, 0, c, 0, false}; }
SurfaceClass surface_pt(const Rat& c) { return {0, 0, 0, c, false}; }

SurfaceClass surface_add(const SurfaceClass& x, const SurfaceClass& y) {
    return {x.c0 + y.c0, x.cl + y.cl, x.cb + y.cb, x.cpt + y.cpt,
            x.truncated || y.truncated};
}

SurfaceClass surface_scale(const Rat& c, const SurfaceClass& x) {
    return {c * x.c0, c * x.cl, c * x.cb, c * x.cpt, x.truncated};
}

SurfaceClass surface_mul(const SurfaceClass& x, const SurfaceClass& y,
                         const RuledSurfaceParams& p) {
    validate_params(p);
    SurfaceClass r;
    r.c0 = x.c0 * y.c0;
    r.cl = x.c0 * y.cl + x.cl * y.c0;
    r.cb = x.c0 * y.cb + x.cb * y.c0;
    // Degree-2 products: l*l = 0, l*B0 = pt, B0*B0 = -e*pt.
    r.cpt = x.c0 * y.cpt + x.cpt * y.c0 + x.cl * y.cb + x.cb * y.cl
            - Rat(p.e) * x.cb * y.cb;
    // Anything multiplying pt by a positive-degree class lands past the top
    // degree and is dropped.
    const bool x_pos = x.cl != 0 || x.cb != 0 || x.cpt != 0;
    const bool y_pos = y.cl != 0 || y.cb != 0 || y.cpt != 0;
    r.truncated = x.truncated || y.truncated || (x.cpt != 0 && y_pos) ||
                  (y.cpt != 0 && x_pos);
    return r;
}

std::pair<SurfaceClass, SurfaceClass> chern_classes(const RuledSurfaceParams& p) {
    validate_params(p);
    SurfaceClass c1 = surface_add(surface_b0(2), surface_l(Rat(2 - 2 * p.g + p.e)));
    SurfaceClass c2 = surface_pt(Rat(4 * (1 - p.g)));
    return {c1, c2};
}

BundleClass bundle_unit() { return {surface_unit(), {0, 0, 0, 0, false}}; }
BundleClass bundle_xi() { return {{0, 0, 0, 0, false}, surface_unit()}; }

BundleClass bundle_pullback(const SurfaceClass& s) {
    return {s, {0, 0, 0, 0, false}};
}

BundleClass bundle_add(const BundleClass& x, const BundleClass& y) {
    return {surface_add(x.a, y.a), surface_add(x.b, y.b)};
}

BundleClass bundle_scale(const Rat& c, const BundleClass& x) {
    return {surface_scale(c, x.a), surface_scale(c, x.b)};
}

BundleClass bundle_mul(const BundleClass& x, const BundleClass& y,
                       const RuledSurfaceParams& p) {
    auto [c1, c2] = chern_classes(p);
    // (a1 + b1 xi)(a2 + b2 xi) with xi^2 = c1 xi - c2.
    SurfaceClass bb = surface_mul(x.b, y.b, p);
    SurfaceClass a = surface_add(surface_mul(x.a, y.a, p),
                                 surface_scale(-1, surface_mul(bb, c2, p)));
    SurfaceClass b = surface_add(surface_add(surface_mul(x.a, y.b, p),
                                             surface_mul(x.b, y.a, p)),
                                 surface_mul(bb, c1, p));
    return {a, b};
}

Rat degree3(const BundleClass& x) {
    // Degree 3 lives entirely in pt * xi: the pullback part would need a
    // degree-3 surface class, and there is none.
    if (!x.a.is_zero() || x.b.c0 != 0 || x.b.cl != 0 || x.b.cb != 0)
        throw std::invalid_argument("degree3: class is not homogeneous of degree 3");
    return x.b.cpt;
}

std::array<std::array<Rat, 3>, 3> pairing_table(const RuledSurfaceParams& p) {
    validate_params(p);
    return {{{Rat(0), Rat(1), Rat(0)},
             {Rat(1), Rat(-p.e), Rat(0)},
             {Rat(0), Rat(2 - 2 * p.g), Rat(1)}}};
}

Rat pair(const DivisorClassP& d, const CurveClass& c, const RuledSurfaceParams& p) {
    auto t = pairing_table(p);
    const Rat dv[3] = {d.d_l, d.d_b, d.d_xi};
    const Rat cv[3] = {c.s_l, c.s_b, c.c_pi};
    Rat acc = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) acc += dv[i] * t[i][j] * cv[j];
    return acc;
}

ShokurovReport shokurov_threshold_check(const RuledSurfaceParams& p, long long a) {
    validate_params(p);
    ShokurovReport rep;
    rep.threshold_ok = Rat(a) > Rat(3 * std::max(2 * p.g - 2, p.e));

    DivisorClassP d{Rat(a), 0, 1};
    const CurveClass basis[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    for (int j = 0; j < 3; ++j) rep.pairings[j] = pair(d, basis[j], p);

    BundleClass da = bundle_add(bundle_pullback(surface_l(Rat(a))), bundle_xi());
    rep.top_self_intersection = degree3(bundle_mul(bundle_mul(da, da, p), da, p));
    return rep;
}

CpExampleReport cp_example_numbers() {
    const RuledSurfaceParams p{1, 0};
    CpExampleReport rep;

    BundleClass xi = bundle_xi();
    rep.xi_cubed = degree3(bundle_mul(bundle_mul(xi, xi, p), xi, p));

    const CurveClass basis[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    DivisorClassP minus_k{0, 0, 2};
    DivisorClassP d{1, 1, 2};
    for (int j = 0; j < 3; ++j) {
        rep.minus_k_pairings[j] = pair(minus_k, basis[j], p);
        rep.d_pairings[j] = pair(d, basis[j], p);
    }
    rep.identification_ambiguous = true;
    return rep;
}

}  // namespace contact_atlas
