#include "contact_atlas/divisor.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "contact_atlas/rational_linalg.hpp"

namespace contact_atlas {

namespace {

// Functional with prescribed values on the rays of one cone; free directions
// (for lower-dimensional cones) are set to zero.
RatVec cone_functional(const Fan& f, const std::vector<int>& cone, const RatVec& values) {
    RationalMatrix A(static_cast<int>(cone.size()), f.rank);
    for (std::size_t i = 0; i < cone.size(); ++i)
        for (int j = 0; j < f.rank; ++j) A.at(static_cast<int>(i), j) = Rat(f.rays[cone[i]][j]);
    auto m = solve_linear(A, values);
    if (!m)
        throw std::logic_error("cone_functional: inconsistent system on independent rays");
    return *m;
}

Rat dot(const RatVec& a, const RatVec& b) {
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

RatVec to_rat(const IntVec& v) {
    RatVec q(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) q[i] = Rat(v[i]);
    return q;
}

}  // namespace

ToricDivisor make_divisor(const Fan& f, IntVec coeffs) {
    if (coeffs.size() != f.rays.size())
        throw std::invalid_argument("make_divisor: one coefficient per ray required");
    return ToricDivisor{&f, std::move(coeffs)};
}

ToricDivisor canonical_divisor(const Fan& f) {
    return ToricDivisor{&f, IntVec(f.rays.size(), Int(-1))};
}

SupportFunction q_cartier_support_function(const ToricDivisor& d) {
    const Fan& f = *d.fan;
    SupportFunction sf;
    sf.cone_functionals.reserve(f.max_cones.size());
    for (const auto& cone : f.max_cones) {
        RatVec values(cone.size());
        for (std::size_t i = 0; i < cone.size(); ++i) values[i] = Rat(-d.coeffs[cone[i]]);
        sf.cone_functionals.push_back(cone_functional(f, cone, values));
    }
    return sf;
}

std::optional<SupportFunction> is_cartier(const ToricDivisor& d) {
    const Fan& f = *d.fan;
    if (!fan_is_complete(f)) throw std::invalid_argument("is_cartier: fan must be complete");
    SupportFunction sf = q_cartier_support_function(d);
    for (const RatVec& m : sf.cone_functionals)
        for (const Rat& x : m)
            if (!is_integer(x)) return std::nullopt;
    return sf;
}

Rat support_value(const Fan& f, const SupportFunction& sf, const RatVec& point) {
    for (std::size_t ci = 0; ci < f.max_cones.size(); ++ci)
        if (cone_contains(f, f.max_cones[ci], point))
            return dot(sf.cone_functionals[ci], point);
    throw std::invalid_argument("support_value: point outside the fan support");
}

std::vector<std::pair<IntVec, Rat>> discrepancies(const Fan& coarse, const Fan& fine) {
    if (coarse.rank != fine.rank)
        throw std::invalid_argument("discrepancies: fans live in different lattices");
    for (const auto& cone : coarse.max_cones)
        if (static_cast<int>(cone.size()) != coarse.rank)
            throw std::invalid_argument("discrepancies: coarse maximal cone not full-dimensional");
    for (const auto& cone : fine.max_cones)
        if (static_cast<int>(cone.size()) != fine.rank)
            throw std::invalid_argument("discrepancies: fine maximal cone not full-dimensional");

    // Assign each fine cone to a coarse cone containing it.
    std::vector<int> assignment(fine.max_cones.size(), -1);
    for (std::size_t fi = 0; fi < fine.max_cones.size(); ++fi) {
        for (std::size_t ci = 0; ci < coarse.max_cones.size(); ++ci) {
            bool inside = true;
            for (int ray : fine.max_cones[fi])
                if (!cone_contains(coarse, coarse.max_cones[ci], to_rat(fine.rays[ray]))) {
                    inside = false;
                    break;
                }
            if (inside) {
                assignment[fi] = static_cast<int>(ci);
                break;
            }
        }
        if (assignment[fi] < 0)
            throw std::invalid_argument("discrepancies: fine fan does not refine the coarse fan");
    }

    // Exact tiling check inside each coarse cone: every facet of a fine cone
    // either lies on a facet hyperplane of the coarse cone or is shared with
    // exactly one other fine cone assigned to the same coarse cone. A gap or
    // overlap would leave an unmatched interior facet.
    for (std::size_t ci = 0; ci < coarse.max_cones.size(); ++ci) {
        const auto& ccone = coarse.max_cones[ci];
        std::vector<RatVec> facet_functionals;
        for (std::size_t j = 0; j < ccone.size(); ++j) {
            RatVec values(ccone.size(), Rat(0));
            values[j] = 1;
            facet_functionals.push_back(cone_functional(coarse, ccone, values));
        }
        std::map<std::vector<int>, int> interior_facets;
        bool any = false;
        for (std::size_t fi = 0; fi < fine.max_cones.size(); ++fi) {
            if (assignment[fi] != static_cast<int>(ci)) continue;
            any = true;
            const auto& fcone = fine.max_cones[fi];
            for (std::size_t drop = 0; drop < fcone.size(); ++drop) {
                std::vector<int> facet;
                for (std::size_t k = 0; k < fcone.size(); ++k)
                    if (k != drop) facet.push_back(fcone[k]);
                bool on_boundary = false;
                for (const RatVec& func : facet_functionals) {
                    bool vanishes = true;
                    for (int ray : facet)
                        if (dot(func, to_rat(fine.rays[ray])) != 0) {
                            vanishes = false;
                            break;
                        }
                    if (vanishes) {
                        on_boundary = true;
                        break;
                    }
                }
                if (!on_boundary) ++interior_facets[facet];
            }
        }
        if (!any)
            throw std::invalid_argument("discrepancies: coarse cone not covered by the fine fan");
        for (const auto& [facet, count] : interior_facets)
            if (count != 2)
                throw std::invalid_argument(
                    "discrepancies: fine fan does not tile the coarse fan");
    }

    // phi takes the value 1 on each coarse ray; discrepancy of a new ray v is
    // phi(v) - 1.
    SupportFunction phi;
    for (const auto& cone : coarse.max_cones)
        phi.cone_functionals.push_back(
            cone_functional(coarse, cone, RatVec(cone.size(), Rat(1))));

    std::set<IntVec> coarse_rays(coarse.rays.begin(), coarse.rays.end());
    std::vector<std::pair<IntVec, Rat>> out;
    for (const IntVec& v : fine.rays) {
        if (coarse_rays.count(v)) continue;
        out.emplace_back(v, support_value(coarse, phi, to_rat(v)) - 1);
    }
    return out;
}

namespace {

// Wall-crossing convexity: for every facet shared by two maximal cones, the
// functional of one cone evaluated on the opposite ray of the other must not
// exceed the support function there; equality on some wall means nef but not
// ample.
bool convex_support(const ToricDivisor& d, bool strict) {
    const Fan& f = *d.fan;
    if (!fan_is_complete(f))
        throw std::invalid_argument("nef/ample test: fan must be complete");
    SupportFunction sf = q_cartier_support_function(d);
    for (const auto& [facet, cones] : facet_incidence(f)) {
        for (int side = 0; side < 2; ++side) {
            int c_this = cones[side];
            int c_other = cones[1 - side];
            int opposite = -1;
            for (int ray : f.max_cones[c_other])
                if (!std::binary_search(facet.begin(), facet.end(), ray)) opposite = ray;
            Rat lhs = dot(sf.cone_functionals[c_this], to_rat(f.rays[opposite]));
            Rat rhs = Rat(-d.coeffs[opposite]);
            if (strict ? !(lhs > rhs) : !(lhs >= rhs)) return false;
        }
    }
    return true;
}

}  // namespace

bool is_nef(const ToricDivisor& d) { return convex_support(d, false); }

bool is_ample(const ToricDivisor& d) { return convex_support(d, true); }

bool is_fano(const Fan& f) {
    ToricDivisor k = canonical_divisor(f);
    IntVec minus_k(k.coeffs.size());
    for (std::size_t i = 0; i < k.coeffs.size(); ++i) minus_k[i] = -k.coeffs[i];
    ToricDivisor anticanonical{&f, std::move(minus_k)};
    return is_ample(anticanonical);
}

}  // namespace contact_atlas
