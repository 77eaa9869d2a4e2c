#pragma once

#include <optional>
#include <string>
#include <vector>

#include "contact_atlas/matrix.hpp"
#include "contact_atlas/numeric.hpp"

namespace contact_atlas {

// Ambient C^{2n+2} carrying the standard symplectic pairing
// J = [[0, I], [-I, 0]] in the coordinate order (x_0..x_n, x_{n+1}..x_{2n+1});
// the contact 1-form on P^{2n+1} is theta_x(v) = <x, J v>.
struct SymplecticAmbient {
    int n;
    IntegerMatrix J;

    int dim() const { return 2 * n + 2; }
};

SymplecticAmbient make_ambient(int n);

enum class OmegaClass { Preserves, Negates, Other, NonScalar };

struct OmegaTransform {
    OmegaClass kind = OmegaClass::NonScalar;
    Rat scale;  // 1, -1, or the scalar c for Other; 0 for NonScalar
};

std::string omega_class_name(const OmegaTransform& t);

// Classifies g^T J g relative to J.
OmegaTransform omega_transform(const RationalMatrix& g, const SymplecticAmbient& amb);

// For linear g, pulling back theta_x(v) = <x, J v> gives <gx, J gv>, so theta
// is invariant exactly when g^T J g = J.
bool theta_invariant(const RationalMatrix& g, const SymplecticAmbient& amb);

// Finite group of invertible linear maps, stored as the full multiplication
// closure of the generators (breadth-first, identity first).
struct LinearContactAction {
    int n;
    std::vector<RationalMatrix> generators;
    std::vector<RationalMatrix> elements;
};

inline constexpr int kClosureCap = 10000;

LinearContactAction make_action(int n, std::vector<RationalMatrix> generators,
                                int element_cap = kClosureCap);

// Exact root of unity zeta_order^power with power in [0, order) coprime to
// order; (1,0) is 1 and (2,1) is -1.
struct RootOfUnity {
    int order = 1;
    int power = 0;

    bool operator==(const RootOfUnity&) const = default;
};

RootOfUnity make_root(int order, int power);
RootOfUnity root_mul(const RootOfUnity& x, const RootOfUnity& y);
RootOfUnity root_inverse(const RootOfUnity& x);
std::string root_to_string(const RootOfUnity& x);

// Projectivized eigenspace of a finite-order element: P(E_lambda) inside
// P^{2n+1}, with projective_dimension + codimension = 2n+1.
struct FixedComponentRecord {
    int group_element = -1;  // index into LinearContactAction::elements, or -1
    RootOfUnity eigenvalue;
    int projective_dimension = 0;
    int codimension = 0;
};

// Exact order of g under repeated multiplication; throws when the bound is
// exceeded (the input is then not plausibly of finite order).
int matrix_order(const RationalMatrix& g, int bound = kClosureCap);

// One record per distinct eigenvalue, ordered by angle. Eigenvalue
// multiplicities are computed as exact kernel dimensions, over Q for +-1 and
// over the quadratic cyclotomic fields for orders 3, 4, 6; other orders are
// rejected.
std::vector<FixedComponentRecord> fixed_components(const RationalMatrix& g,
                                                   int element_index = -1);

// Minimum codimension of a fixed component over all non-identity elements.
// Requires a nontrivial group whose elements all rescale the symplectic
// pairing (so the contact distribution is invariant).
int min_fixed_codimension(const LinearContactAction& action);

struct EigenvalueRelationReport {
    Rat lambda_v;              // eigenvalue at the chosen coordinate axis
    RatVec tangent_weights;    // lambda_j / lambda_v for j != axis, coordinate order
    Rat xi0;                   // weight on the contact line bundle: lambda_v^{-2}
    bool xi0_present = false;  // xi0 occurs among the tangent weights
    bool multiset_ok = false;  // remaining weights match their xi0-reciprocals
    bool product_applicable = false;  // xi0 == 1
    bool product_ok = false;
    bool passed = false;
};

// At a coordinate fixed point of a diagonal finite-order g, checks that the
// tangent weights contain xi0 = lambda_v^{-2} and that the remaining 2n
// weights are permuted by w -> xi0 / w; when xi0 = 1 also checks that the
// product of all weights is 1.
EigenvalueRelationReport eigenvalue_relation_check(const RationalMatrix& g,
                                                   const SymplecticAmbient& amb,
                                                   int fixed_axis);

struct QuotientVerdict {
    bool induced = false;
    int violating_generator = -1;        // meaningful when !induced
    OmegaTransform violating_transform;  // meaningful when !induced
    // The stabilizer-triviality condition over the singular locus holds
    // vacuously on a smooth ambient space; recorded, never evaluated.
    bool smooth_ambient_condition_vacuous = true;
};

// The quotient of P^{2n+1} by the action carries an induced contact
// structure exactly when every generator leaves theta invariant. Requires
// ambient projective dimension 2n+1 >= 3.
QuotientVerdict quotient_verdict(const LinearContactAction& action);

}  // namespace contact_atlas
