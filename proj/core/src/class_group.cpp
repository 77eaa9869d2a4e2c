#include "contact_atlas/class_group.hpp"

#include <stdexcept>

#include "contact_atlas/lattice.hpp"
#include "contact_atlas/rational_linalg.hpp"

namespace contact_atlas {

namespace {

Int mod_positive(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}

}  // namespace

ClassGroupPresentation class_group(const Fan& f) {
    const int n_rays = static_cast<int>(f.rays.size());
    IntegerMatrix B(n_rays, f.rank);
    for (int i = 0; i < n_rays; ++i)
        for (int j = 0; j < f.rank; ++j) B.at(i, j) = f.rays[i][j];
    if (rank(B) != f.rank)
        throw std::invalid_argument("class_group: rays do not span the lattice");
    if (!fan_is_complete(f)) throw std::invalid_argument("class_group: fan must be complete");

    // Cl = Z^{#rays} / B * Z^rank; with U*B*V = D the class of y is read off
    // U*y: coordinate i modulo d_i while d_i > 1, dropped while d_i = 1, free
    // past the rank.
    SmithDecomposition snf = smith_normal_form(B);
    ClassGroupPresentation cg;
    std::vector<int> torsion_rows;
    for (int i = 0; i < f.rank; ++i) {
        if (snf.D.at(i, i) > 1) {
            cg.torsion.push_back(snf.D.at(i, i));
            torsion_rows.push_back(i);
        } else if (snf.D.at(i, i) == 0) {
            throw std::logic_error("class_group: ray matrix lost rank in Smith form");
        }
    }
    cg.free_rank = n_rays - f.rank;
    for (int r = 0; r < n_rays; ++r) {
        IntVec cls;
        for (std::size_t t = 0; t < torsion_rows.size(); ++t)
            cls.push_back(mod_positive(snf.U.at(torsion_rows[t], r), cg.torsion[t]));
        for (int i = f.rank; i < n_rays; ++i) cls.push_back(snf.U.at(i, r));
        cg.ray_to_class.push_back(std::move(cls));
    }
    return cg;
}

IntVec divisor_class(const ClassGroupPresentation& cg, const IntVec& coeffs) {
    if (coeffs.size() != cg.ray_to_class.size())
        throw std::invalid_argument("divisor_class: one coefficient per ray required");
    const std::size_t width = cg.torsion.size() + static_cast<std::size_t>(cg.free_rank);
    IntVec cls(width, Int(0));
    for (std::size_t r = 0; r < coeffs.size(); ++r)
        for (std::size_t i = 0; i < width; ++i) cls[i] += coeffs[r] * cg.ray_to_class[r][i];
    for (std::size_t t = 0; t < cg.torsion.size(); ++t) cls[t] = mod_positive(cls[t], cg.torsion[t]);
    return cls;
}

bool is_divisible_in_class_group(const ToricDivisor& d, const Int& k) {
    if (k <= 0) throw std::invalid_argument("is_divisible_in_class_group: k must be positive");
    ClassGroupPresentation cg = class_group(*d.fan);
    IntVec cls = divisor_class(cg, d.coeffs);
    for (std::size_t t = 0; t < cg.torsion.size(); ++t) {
        Int g = gcd(k, cg.torsion[t]);
        if (cls[t] % g != 0) return false;
    }
    for (std::size_t i = cg.torsion.size(); i < cls.size(); ++i)
        if (cls[i] % k != 0) return false;
    return true;
}

}  // namespace contact_atlas
