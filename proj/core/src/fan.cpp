#include "contact_atlas/fan.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "contact_atlas/rational_linalg.hpp"

namespace contact_atlas {

namespace {

IntegerMatrix ray_matrix(const Fan& f, const std::vector<int>& cone) {
    IntegerMatrix m(static_cast<int>(cone.size()), f.rank);
    for (std::size_t i = 0; i < cone.size(); ++i)
        for (int j = 0; j < f.rank; ++j) m.at(static_cast<int>(i), j) = f.rays[cone[i]][j];
    return m;
}

bool is_subset(const std::vector<int>& a, const std::vector<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// Strict separation: a functional vanishing on the shared rays, positive on
// the rest of sigma, negative on the rest of tau. For simplicial cones this
// exists iff the two cones intersect exactly in the face spanned by their
// shared rays.
bool cones_meet_in_common_face(const Fan& f, const std::vector<int>& sigma,
                               const std::vector<int>& tau) {
    std::vector<int> shared;
    std::set_intersection(sigma.begin(), sigma.end(), tau.begin(), tau.end(),
                          std::back_inserter(shared));
    std::vector<LinearConstraint> cs;
    auto add = [&](int ray, LinearConstraint::Rel rel, bool negate) {
        LinearConstraint c;
        c.rel = rel;
        c.a.resize(f.rank);
        for (int j = 0; j < f.rank; ++j) {
            c.a[j] = Rat(f.rays[ray][j]);
            if (negate) c.a[j] = -c.a[j];
        }
        cs.push_back(std::move(c));
    };
    for (int i : shared) add(i, LinearConstraint::Rel::Eq, false);
    for (int i : sigma)
        if (!std::binary_search(shared.begin(), shared.end(), i))
            add(i, LinearConstraint::Rel::Gt, false);
    for (int i : tau)
        if (!std::binary_search(shared.begin(), shared.end(), i))
            add(i, LinearConstraint::Rel::Gt, true);
    return homogeneous_feasible(std::move(cs), f.rank);
}

}  // namespace

void validate_fan(const Fan& f, FanCheck level) {
    if (f.rank < 1) throw std::invalid_argument("fan: rank must be at least 1");
    if (f.rays.empty()) throw std::invalid_argument("fan: no rays");
    if (f.max_cones.empty()) throw std::invalid_argument("fan: no maximal cones");
    for (const IntVec& r : f.rays) {
        if (static_cast<int>(r.size()) != f.rank)
            throw std::invalid_argument("fan: ray length does not match rank");
        Int g = 0;
        for (const Int& x : r) g = gcd(g, x);
        if (g == 0) throw std::invalid_argument("fan: zero ray");
        if (g != 1) throw std::invalid_argument("fan: ray is not primitive");
    }
    for (std::size_t i = 0; i < f.rays.size(); ++i)
        for (std::size_t j = i + 1; j < f.rays.size(); ++j)
            if (f.rays[i] == f.rays[j]) throw std::invalid_argument("fan: duplicate ray");
    for (const auto& cone : f.max_cones) {
        if (cone.empty()) throw std::invalid_argument("fan: empty maximal cone");
        for (std::size_t i = 0; i < cone.size(); ++i) {
            if (cone[i] < 0 || cone[i] >= static_cast<int>(f.rays.size()))
                throw std::invalid_argument("fan: cone ray index out of range");
            if (i > 0 && cone[i] <= cone[i - 1])
                throw std::invalid_argument("fan: cone indices must be strictly increasing");
        }
        if (static_cast<int>(cone.size()) > f.rank)
            throw std::invalid_argument("fan: cone has more rays than the lattice rank");
        if (rank(ray_matrix(f, cone)) != static_cast<int>(cone.size()))
            throw std::invalid_argument("fan: maximal cone rays are linearly dependent");
    }
    for (std::size_t i = 0; i < f.max_cones.size(); ++i)
        for (std::size_t j = 0; j < f.max_cones.size(); ++j) {
            if (i == j) continue;
            if (is_subset(f.max_cones[i], f.max_cones[j]))
                throw std::invalid_argument("fan: maximal cone contained in another");
        }
    if (level == FanCheck::full) {
        for (std::size_t i = 0; i < f.max_cones.size(); ++i)
            for (std::size_t j = i + 1; j < f.max_cones.size(); ++j)
                if (!cones_meet_in_common_face(f, f.max_cones[i], f.max_cones[j]))
                    throw std::invalid_argument(
                        "fan: maximal cones do not intersect in a common face");
    }
}

Fan make_fan(int rank, std::vector<IntVec> rays, std::vector<std::vector<int>> max_cones,
             FanCheck level) {
    Fan f;
    f.rank = rank;
    f.rays = std::move(rays);
    f.max_cones = std::move(max_cones);
    for (auto& cone : f.max_cones) std::sort(cone.begin(), cone.end());
    std::sort(f.max_cones.begin(), f.max_cones.end());
    validate_fan(f, level);
    return f;
}

std::vector<std::pair<std::vector<int>, std::vector<int>>> facet_incidence(const Fan& f) {
    std::map<std::vector<int>, std::vector<int>> facets;
    for (std::size_t ci = 0; ci < f.max_cones.size(); ++ci) {
        const auto& cone = f.max_cones[ci];
        if (static_cast<int>(cone.size()) != f.rank)
            throw std::invalid_argument("facet_incidence: maximal cone is not full-dimensional");
        for (std::size_t drop = 0; drop < cone.size(); ++drop) {
            std::vector<int> facet;
            facet.reserve(cone.size() - 1);
            for (std::size_t i = 0; i < cone.size(); ++i)
                if (i != drop) facet.push_back(cone[i]);
            facets[facet].push_back(static_cast<int>(ci));
        }
    }
    std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
    out.reserve(facets.size());
    for (auto& kv : facets) out.emplace_back(kv.first, kv.second);
    return out;
}

bool fan_is_complete(const Fan& f) {
    for (const auto& cone : f.max_cones)
        if (static_cast<int>(cone.size()) != f.rank) return false;
    for (const auto& [facet, cones] : facet_incidence(f))
        if (cones.size() != 2) return false;
    return true;
}

Fan projective_space_fan(int d) {
    if (d < 1) throw std::invalid_argument("projective_space_fan: dimension must be at least 1");
    std::vector<IntVec> rays;
    for (int i = 0; i < d; ++i) {
        IntVec e(d, Int(0));
        e[i] = 1;
        rays.push_back(std::move(e));
    }
    rays.push_back(IntVec(d, Int(-1)));
    std::vector<std::vector<int>> cones;
    for (int omit = 0; omit <= d; ++omit) {
        std::vector<int> cone;
        for (int i = 0; i <= d; ++i)
            if (i != omit) cone.push_back(i);
        cones.push_back(std::move(cone));
    }
    // Valid by construction; skip the pairwise separation pass.
    return make_fan(d, std::move(rays), std::move(cones), FanCheck::basic);
}

Fan image_fan(const Fan& f, const LatticeMap& map) {
    if (map.source_rank != f.rank)
        throw std::invalid_argument("image_fan: map source rank does not match fan rank");
    std::vector<IntVec> rays;
    rays.reserve(f.rays.size());
    for (const IntVec& r : f.rays) {
        IntVec img = map.matrix * r;
        bool zero = true;
        for (const Int& x : img) if (x != 0) zero = false;
        if (zero)
            throw std::invalid_argument("image_fan: cone collapse - construction not supported");
        rays.push_back(primitivize(std::move(img)));
    }
    for (std::size_t i = 0; i < rays.size(); ++i)
        for (std::size_t j = i + 1; j < rays.size(); ++j)
            if (rays[i] == rays[j])
                throw std::invalid_argument(
                    "image_fan: cone collapse - construction not supported");
    Fan out;
    out.rank = map.target_rank;
    out.rays = std::move(rays);
    out.max_cones = f.max_cones;
    for (const auto& cone : out.max_cones)
        if (rank(ray_matrix(out, cone)) != static_cast<int>(cone.size()))
            throw std::invalid_argument("image_fan: cone collapse - construction not supported");
    // A square nonsingular map is injective over Q, so it carries a valid fan
    // to a valid fan; otherwise re-run the pairwise face check.
    bool injective = map.matrix.rows == map.matrix.cols && det(map.matrix) != 0;
    validate_fan(out, injective ? FanCheck::basic : FanCheck::full);
    return out;
}

bool is_smooth_cone(const Fan& f, const std::vector<int>& cone) {
    std::vector<int> sorted = cone;
    std::sort(sorted.begin(), sorted.end());
    bool found = false;
    for (const auto& mc : f.max_cones)
        if (is_subset(sorted, mc)) {
            found = true;
            break;
        }
    if (!found) throw std::invalid_argument("is_smooth_cone: not a face of any maximal cone");
    SmithDecomposition snf = smith_normal_form(ray_matrix(f, sorted));
    for (std::size_t i = 0; i < sorted.size(); ++i)
        if (snf.D.at(static_cast<int>(i), static_cast<int>(i)) != 1) return false;
    return true;
}

bool fan_is_smooth(const Fan& f) {
    for (const auto& cone : f.max_cones)
        if (!is_smooth_cone(f, cone)) return false;
    return true;
}

std::vector<std::vector<int>> singular_cones(const Fan& f) {
    std::vector<const std::vector<int>*> smooth_max, singular_max;
    for (const auto& cone : f.max_cones) {
        if (is_smooth_cone(f, cone))
            smooth_max.push_back(&cone);
        else
            singular_max.push_back(&cone);
    }
    std::vector<std::vector<int>> minimal;
    if (singular_max.empty()) return minimal;

    auto inside_smooth_max = [&](const std::vector<int>& face) {
        for (const auto* mc : smooth_max)
            if (is_subset(face, *mc)) return true;
        return false;
    };

    // Faces are enumerated level by level inside the singular maximal cones.
    // Singularity is upward-closed in the face order, so a face whose proper
    // faces are all smooth is a minimal singular cone, and anything above a
    // singular face can be pruned.
    std::set<std::vector<int>> smooth_level;
    for (const auto* mc : singular_max)
        for (int i : *mc) smooth_level.insert({i});  // primitive rays are smooth

    while (!smooth_level.empty()) {
        std::set<std::vector<int>> candidates;
        for (const auto& face : smooth_level)
            for (const auto* mc : singular_max) {
                if (!is_subset(face, *mc)) continue;
                for (int extra : *mc) {
                    if (extra <= face.back()) continue;
                    std::vector<int> cand = face;
                    cand.push_back(extra);
                    candidates.insert(std::move(cand));
                }
            }
        std::set<std::vector<int>> next_smooth;
        for (const auto& cand : candidates) {
            bool facets_smooth = true;
            for (std::size_t drop = 0; drop < cand.size() && facets_smooth; ++drop) {
                std::vector<int> facet;
                for (std::size_t i = 0; i < cand.size(); ++i)
                    if (i != drop) facet.push_back(cand[i]);
                if (!smooth_level.count(facet)) facets_smooth = false;
            }
            if (!facets_smooth) continue;  // contains a singular face; not minimal
            if (inside_smooth_max(cand) || is_smooth_cone(f, cand))
                next_smooth.insert(cand);
            else
                minimal.push_back(cand);
        }
        smooth_level = std::move(next_smooth);
    }
    std::sort(minimal.begin(), minimal.end());
    return minimal;
}

std::optional<RatVec> cone_coordinates(const Fan& f, const std::vector<int>& cone,
                                       const RatVec& point) {
    if (static_cast<int>(point.size()) != f.rank)
        throw std::invalid_argument("cone_coordinates: point length does not match rank");
    RationalMatrix A(f.rank, static_cast<int>(cone.size()));
    for (int i = 0; i < f.rank; ++i)
        for (std::size_t j = 0; j < cone.size(); ++j)
            A.at(i, static_cast<int>(j)) = Rat(f.rays[cone[j]][i]);
    return solve_linear(A, point);
}

bool cone_contains(const Fan& f, const std::vector<int>& cone, const RatVec& point) {
    auto coords = cone_coordinates(f, cone, point);
    if (!coords) return false;
    for (const Rat& c : *coords)
        if (c < 0) return false;
    return true;
}

Fan subdivide_with_rays(const Fan& f, const std::vector<IntVec>& new_rays) {
    Fan cur = f;
    for (const IntVec& raw : new_rays) {
        IntVec v = primitivize(raw);
        RatVec vq(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) vq[i] = Rat(v[i]);

        // Find the unique cone with v in its relative interior: in any
        // containing maximal cone its support is the set of positive
        // barycentric coordinates.
        std::vector<int> face;
        for (const auto& mc : cur.max_cones) {
            auto coords = cone_coordinates(cur, mc, vq);
            if (!coords) continue;
            bool nonneg = true;
            for (const Rat& c : *coords)
                if (c < 0) nonneg = false;
            if (!nonneg) continue;
            for (std::size_t i = 0; i < mc.size(); ++i)
                if ((*coords)[i] > 0) face.push_back(mc[i]);
            break;
        }
        if (face.empty())
            throw std::invalid_argument("subdivide_with_rays: ray lies outside the fan support");
        if (face.size() == 1)
            throw std::invalid_argument("subdivide_with_rays: ray lies on an existing ray");

        int new_index = static_cast<int>(cur.rays.size());
        cur.rays.push_back(v);
        std::vector<std::vector<int>> cones;
        for (const auto& mc : cur.max_cones) {
            if (!is_subset(face, mc)) {
                cones.push_back(mc);
                continue;
            }
            // Stellar subdivision: drop one ray of the located face at a
            // time, adding v instead.
            for (int dropped : face) {
                std::vector<int> cone;
                for (int i : mc)
                    if (i != dropped) cone.push_back(i);
                cone.push_back(new_index);
                std::sort(cone.begin(), cone.end());
                cones.push_back(std::move(cone));
            }
        }
        std::sort(cones.begin(), cones.end());
        cur.max_cones = std::move(cones);
    }
    // Stellar subdivision of a valid fan is valid; re-check basic hygiene only.
    validate_fan(cur, FanCheck::basic);
    return cur;
}

std::vector<int> kernel_ray_indices(const Fan& f, const LatticeMap& proj) {
    if (proj.source_rank != f.rank)
        throw std::invalid_argument("kernel_ray_indices: map source rank does not match fan rank");
    std::vector<int> out;
    for (std::size_t i = 0; i < f.rays.size(); ++i) {
        IntVec img = proj.matrix * f.rays[i];
        bool zero = true;
        for (const Int& x : img)
            if (x != 0) zero = false;
        if (zero) out.push_back(static_cast<int>(i));
    }
    return out;
}

bool lattice_projection_check(const Fan& f, const LatticeMap& proj, const Fan& expected) {
    if (proj.source_rank != f.rank)
        throw std::invalid_argument("lattice_projection_check: map source rank mismatch");
    if (proj.target_rank != expected.rank)
        throw std::invalid_argument("lattice_projection_check: map target rank mismatch");
    if (rank(proj.matrix) != proj.target_rank)
        throw std::invalid_argument("lattice_projection_check: projection is not surjective");

    // Primitivized nonzero ray images must cover every ray of the target fan.
    std::set<IntVec> images;
    for (const IntVec& r : f.rays) {
        IntVec img = proj.matrix * r;
        bool zero = true;
        for (const Int& x : img)
            if (x != 0) zero = false;
        if (!zero) images.insert(primitivize(std::move(img)));
    }
    for (const IntVec& r : expected.rays)
        if (!images.count(r)) return false;

    // The image of every cone must land inside a single cone of the target.
    for (const auto& mc : f.max_cones) {
        std::vector<RatVec> imgs;
        for (int i : mc) {
            IntVec img = proj.matrix * f.rays[i];
            RatVec q(img.size());
            for (std::size_t k = 0; k < img.size(); ++k) q[k] = Rat(img[k]);
            imgs.push_back(std::move(q));
        }
        bool found = false;
        for (const auto& target : expected.max_cones) {
            bool all_in = true;
            for (const auto& img : imgs)
                if (!cone_contains(expected, target, img)) {
                    all_in = false;
                    break;
                }
            if (all_in) {
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

}  // namespace contact_atlas
