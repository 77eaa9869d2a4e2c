#pragma once

#include <optional>
#include <vector>

#include "contact_atlas/lattice.hpp"
#include "contact_atlas/matrix.hpp"
#include "contact_atlas/numeric.hpp"

namespace contact_atlas {

// A simplicial fan: primitive ray generators plus the ray-index sets of the
// maximal cones. Cones are stored with sorted indices and the cone list is
// kept lexicographically sorted, so equal fans have equal representations.
struct Fan {
    int rank = 0;
    std::vector<IntVec> rays;
    std::vector<std::vector<int>> max_cones;
};

enum class FanCheck {
    basic,  // primitivity, simpliciality, index hygiene
    full,   // basic + pairwise cones-meet-in-a-common-face
};

// Throws std::invalid_argument when the data does not describe a valid
// simplicial fan. The full check verifies, for every pair of maximal cones,
// that a linear functional vanishes on the shared rays and strictly
// separates the rest; for simplicial cones this is equivalent to the pair
// intersecting in a common face.
Fan make_fan(int rank, std::vector<IntVec> rays, std::vector<std::vector<int>> max_cones,
             FanCheck level = FanCheck::full);

void validate_fan(const Fan& f, FanCheck level = FanCheck::full);

// True when every facet of every maximal cone is shared by exactly one other
// maximal cone and all maximal cones are full-dimensional; for a valid
// simplicial fan this happens exactly when the support is the whole space.
bool fan_is_complete(const Fan& f);

// The fan of P^d: rays e_1, ..., e_d, -e_1 - ... - e_d; every proper subset
// of the rays spans a cone.
Fan projective_space_fan(int d);

// Pushes f forward along a lattice map, primitivizing ray images and carrying
// the cone structure over by index. Throws when the map collapses a cone.
Fan image_fan(const Fan& f, const LatticeMap& map);

// True iff the rays of the cone extend to a lattice basis (Smith diagonal of
// the ray matrix is all ones). The cone must be a face of some maximal cone.
bool is_smooth_cone(const Fan& f, const std::vector<int>& cone);

// Minimal singular cones (every proper face smooth), as sorted ray-index
// sets in lexicographic order.
std::vector<std::vector<int>> singular_cones(const Fan& f);

// True when every maximal cone is smooth (faces of smooth cones are smooth).
bool fan_is_smooth(const Fan& f);

// Iterated stellar subdivision at each new ray in the order given. Each ray
// is primitivized and must lie in the relative interior of a cone of the
// current fan that is not itself a ray.
Fan subdivide_with_rays(const Fan& f, const std::vector<IntVec>& new_rays);

// Membership of a rational point in the cone spanned by the given rays.
bool cone_contains(const Fan& f, const std::vector<int>& cone, const RatVec& point);

// Barycentric coordinates of `point` in the simplicial cone, if the point
// lies in the cone's span.
std::optional<RatVec> cone_coordinates(const Fan& f, const std::vector<int>& cone,
                                       const RatVec& point);

// True iff the image of every cone of f under proj lands inside some cone of
// `expected` and the primitivized nonzero ray images cover every ray of
// `expected`.
bool lattice_projection_check(const Fan& f, const LatticeMap& proj, const Fan& expected);

// Indices of the rays of f killed by proj.
std::vector<int> kernel_ray_indices(const Fan& f, const LatticeMap& proj);

// Facets (as sorted ray-index sets) together with the indices of the maximal
// cones containing them. Requires all maximal cones full-dimensional.
std::vector<std::pair<std::vector<int>, std::vector<int>>> facet_incidence(const Fan& f);

}  // namespace contact_atlas
