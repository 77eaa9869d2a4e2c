#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "contact_atlas/matrix.hpp"
#include "contact_atlas/numeric.hpp"

namespace contact_atlas {

// Deterministic sampling recipe: rational coordinates with numerator in
// [-coordinate_range, coordinate_range] and denominator in
// [1, coordinate_range], drawn from a fixed 64-bit seed.
struct SamplePlan {
    long long sample_count = 1000;
    std::uint64_t seed = 0;
    int coordinate_range = 10;
};

void validate_plan(const SamplePlan& plan);

// x in C^{2n+2} maps to n+1 traceless 2x2 blocks; block i is
// [[x_i*x_{i+n+1}, x_i^2], [-x_{i+n+1}^2, -x_i*x_{i+n+1}]], a point of the
// sl2 nilpotent cone.
std::vector<RationalMatrix> psi_map(int n, const RatVec& x);

// x in C^6 maps to (4x4, 2x2): the rank-one sp4 element
// (x_0, x_2, -x_5, -x_3)^T (x_5, x_3, x_0, x_2) together with the sl2 block
// built from (x_1, x_4).
std::pair<RationalMatrix, RationalMatrix> phi_map(const RatVec& x);

// Quadratic map bundled with its input dimension so sampling verifiers can
// draw points of the right size.
struct QuadraticMap {
    int input_dim;
    std::function<std::vector<RationalMatrix>(const RatVec&)> eval;
};

QuadraticMap psi_quadratic_map(int n);
QuadraticMap phi_quadratic_map();

struct ImagePropertyReport {
    bool traceless = false;
    bool algebra_membership = false;  // trace 0 for 2x2, the J' identity for 4x4
    bool rank_le_1 = false;           // every 2x2 minor vanishes
    bool nilpotent = false;           // square is the zero matrix

    bool all() const { return traceless && algebra_membership && rank_le_1 && nilpotent; }
};

// Exact predicates over every component matrix of a map output.
ImagePropertyReport verify_image_properties(const std::vector<RationalMatrix>& components);

// Conjunction of verify_image_properties over seeded sample points.
bool verify_image_properties_sampled(const QuadraticMap& map, const SamplePlan& plan);

// True when map(g.x) = map(x) exactly for every sampled x and every sign
// pattern g (entries +-1, one per input coordinate).
bool verify_invariance(const QuadraticMap& map,
                       const std::vector<std::vector<int>>& sign_patterns,
                       const SamplePlan& plan);

// True when map(t.x) = t^2 map(x) exactly for sampled rational t and x.
bool verify_homogeneity(const QuadraticMap& map, const SamplePlan& plan);

// Boolean lattice on sign vectors in {0,1}^k: an orbit generator has the
// elementary nilpotent E_12 in the marked components and zero elsewhere, and
// closure order is componentwise <=. Orbit dimension is 2*(number of marked
// components); its projectivization has dimension one less (empty for the
// zero orbit).
struct OrbitPoset {
    int k;

    std::uint32_t size() const { return std::uint32_t{1} << k; }
    int weight(std::uint32_t mask) const;
    int orbit_dim(std::uint32_t mask) const { return 2 * weight(mask); }
    int projectivized_dim(std::uint32_t mask) const {
        return mask == 0 ? -1 : 2 * weight(mask) - 1;
    }
    bool leq(std::uint32_t a, std::uint32_t b) const { return (a & ~b) == 0; }
    std::vector<std::uint32_t> lower_covers(std::uint32_t mask) const;
    std::vector<int> bits(std::uint32_t mask) const;
};

// k must lie in [1, 20].
OrbitPoset orbit_poset(int k);

// Generator tuple for a signature mask: E_12 where the bit is set, zero
// elsewhere (k blocks of size 2x2).
std::vector<RationalMatrix> signature_generator(int k, std::uint32_t mask);

// Verifies that every closure codimension between projectivized orbit
// closures is even: covering steps drop the dimension by exactly 2, and
// comparable pairs differ by 2*(weight difference).
bool stratification_parity(int k);

struct KkReport {
    double constant = 0.0;      // measured proportionality between the two forms
    double max_residual = 0.0;  // against the measured constant
    long long samples_used = 0;
    long long samples_skipped = 0;
    long long pair_count = 0;
};

struct KkSampleResult {
    double kk = 0.0;     // sum over blocks of tr(mu [xi, eta])
    double omega = 0.0;  // standard symplectic pairing of the tangent vectors
    bool realized = false;
};

// Pushes tangent vectors v, w forward along psi at x (exact Jacobian,
// evaluated in doubles), realizes them as commutator directions [xi_i, mu_i]
// per block, and evaluates the orbit pairing sum tr(mu_i [xi_i, eta_i]).
// realized is false when some block with mu_i = 0 receives a nonzero
// pushforward demand or a realization system is inconsistent.
KkSampleResult kk_pairing_at(int n, const RatVec& x, const RatVec& v, const RatVec& w);

// Samples points and tangent pairs (the n+1 coordinate symplectic pairs plus
// three random pairs per point), fits the best proportionality constant
// between the orbit pairing and the standard one, and reports the maximum
// absolute residual. Points with a vanishing coordinate pair are skipped and
// counted.
KkReport kk_pullback_check(int n, const SamplePlan& plan);

}  // namespace contact_atlas
