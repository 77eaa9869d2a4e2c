#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "contact_atlas/json_io.hpp"
#include "contact_atlas/nilpotent.hpp"

namespace contact_atlas {

struct CheckResult {
    std::string name;
    std::string claim;  // one-line statement of what the check certifies
    std::string expected;
    std::string actual;
    bool pass = false;
};

struct PipelineReport {
    std::string pipeline;
    std::vector<std::pair<std::string, std::string>> inputs;
    std::vector<CheckResult> checks;
    std::vector<std::pair<std::string, std::string>> artifacts;  // name -> JSON text

    bool all_passed() const;
    const CheckResult* first_failure() const;
};

// Quotient of P^{2n+1} by the coordinate sign-flip group: sublattice index
// and invariants, quotient fan against the closed-form ray list, minimal
// singular cones, crepant resolution, smoothness, anticanonical divisibility
// by n+1, Fano check, and the bundle structure over (P^1)^{n+1}. Requires
// 1 <= n <= 6.
PipelineReport fav_pipeline(int n);

// Quotient of P^5 by the single sign flip of coordinates 1 and 4: fixed
// components of dimensions 3 and 1, the two minimal singular cones, the
// non-crepant full resolution, the divisibility-by-3 failure, and the
// crepant partial resolution.
PipelineReport p5_action_pipeline();

// Intersection numbers on the projectivized tangent bundle of the ruled
// surface with invariants (g, e), and the divisor a*(pullback of l) + xi.
PipelineReport threefold_pipeline(int g, int e, long long a);

// Group-action analysis: omega classification per generator, fixed
// components, eigenvalue relations at coordinate fixed points, minimum fixed
// codimension, and the contact-quotient verdict.
PipelineReport quotient_check_pipeline(const ActionInput& input);

// Orbit poset checks for k components and/or sampled map verification plus
// the numeric pairing comparison for the 2n+2-variable map. At least one of
// k, n must be given.
PipelineReport nilpotent_pipeline(std::optional<int> k, std::optional<int> n,
                                  const SamplePlan& plan);

// Evaluates an expression in the intersection ring for surface parameters
// (g, e); reports the class and, when it is homogeneous of top degree, its
// degree.
PipelineReport chow_pipeline(int g, int e, const std::string& expression);

// Byte-deterministic JSON rendering with a top-level "schema": "1".
std::string report_to_json(const PipelineReport& report);

void print_report(const PipelineReport& report, std::ostream& out);

}  // namespace contact_atlas
