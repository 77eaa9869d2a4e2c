#pragma once

#include <optional>
#include <vector>

#include "contact_atlas/matrix.hpp"
#include "contact_atlas/numeric.hpp"

namespace contact_atlas {

int rank(const RationalMatrix& A);
int rank(const IntegerMatrix& A);

// One solution of A x = b (free variables set to 0), or nullopt when the
// system is inconsistent.
std::optional<RatVec> solve_linear(const RationalMatrix& A, const RatVec& b);

// A homogeneous linear constraint <a, x> rel 0.
struct LinearConstraint {
    enum class Rel { Eq, Ge, Gt };
    RatVec a;
    Rel rel = Rel::Ge;
};

// Exact Fourier-Motzkin feasibility for a system of homogeneous constraints
// (equalities, weak and strict inequalities) in n variables.
bool homogeneous_feasible(std::vector<LinearConstraint> constraints, int nvars);

}  // namespace contact_atlas
