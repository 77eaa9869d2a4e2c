#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "contact_atlas/matrix.hpp"
#include "contact_atlas/numeric.hpp"

namespace contact_atlas {

// U * A * V = D with U, V unimodular and D diagonal, nonnegative, each
// diagonal entry dividing the next.
struct SmithDecomposition {
    IntegerMatrix U;
    IntegerMatrix D;
    IntegerMatrix V;
};

// A homomorphism of lattices acting on column vectors: Z^source -> Z^target,
// v |-> matrix * v. matrix is target_rank x source_rank.
struct LatticeMap {
    IntegerMatrix matrix;
    int source_rank = 0;
    int target_rank = 0;
};

LatticeMap make_lattice_map(IntegerMatrix m);

// Row-style Hermite normal form: returns (H, U) with U unimodular and
// U * A = H. Pivots are positive, entries above each pivot lie in
// [0, pivot), zero rows sink to the bottom.
std::pair<IntegerMatrix, IntegerMatrix> hermite_normal_form(const IntegerMatrix& A);

SmithDecomposition smith_normal_form(const IntegerMatrix& A);

// Exact determinant (Bareiss fraction-free elimination).
Int det(const IntegerMatrix& A);

// |det| of a full-rank inclusion; throws for singular or non-square input.
Int sublattice_index(const LatticeMap& inclusion);

// Invariant factors > 1 of coker(inclusion), read off the Smith diagonal.
std::vector<Int> cokernel_invariants(const LatticeMap& inclusion);

// v divided by the (positive) gcd of its entries; throws on the zero vector.
IntVec primitivize(IntVec v);

// Does A x = b have an integer solution? If so and out != nullptr, one
// solution is written to *out.
bool solve_integer(const IntegerMatrix& A, const IntVec& b, IntVec* out = nullptr);

}  // namespace contact_atlas
