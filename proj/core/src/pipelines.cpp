#include "contact_atlas/pipelines.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "contact_atlas/chow.hpp"
#include "contact_atlas/chow_parse.hpp"
#include "contact_atlas/class_group.hpp"
#include "contact_atlas/contact.hpp"
#include "contact_atlas/divisor.hpp"
#include "contact_atlas/fan.hpp"
#include "contact_atlas/lattice.hpp"

namespace contact_atlas {
namespace {

using nlohmann::json;

std::string vec_to_string(const IntVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += v[i].str();
    }
    return s + ")";
}

std::string rays_to_string(std::vector<IntVec> rays) {
    std::sort(rays.begin(), rays.end());
    std::string s = "{";
    for (std::size_t i = 0; i < rays.size(); ++i) {
        if (i) s += ", ";
        s += vec_to_string(rays[i]);
    }
    return s + "}";
}

std::string cones_to_string(const std::vector<std::vector<int>>& cones) {
    std::string s = "[";
    for (std::size_t i = 0; i < cones.size(); ++i) {
        if (i) s += ", ";
        s += "[";
        for (std::size_t j = 0; j < cones[i].size(); ++j) {
            if (j) s += ", ";
            s += std::to_string(cones[i][j]);
        }
        s += "]";
    }
    return s + "]";
}

std::string invariants_to_string(const std::vector<Int>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += v[i].str();
    }
    return s + "]";
}

void add_check(PipelineReport& rep, std::string name, std::string claim,
               std::string expected, std::string actual, bool pass) {
    rep.checks.push_back({std::move(name), std::move(claim), std::move(expected),
                          std::move(actual), pass});
}

// Pass iff the rendered values agree.
void add_eq(PipelineReport& rep, std::string name, std::string claim,
            std::string expected, std::string actual) {
    bool pass = expected == actual;
    add_check(rep, std::move(name), std::move(claim), std::move(expected),
              std::move(actual), pass);
}

void add_bool(PipelineReport& rep, std::string name, std::string claim,
              bool expected, bool actual) {
    add_eq(rep, std::move(name), std::move(claim), expected ? "true" : "false",
           actual ? "true" : "false");
}

std::string discrepancies_to_string(const std::vector<std::pair<IntVec, Rat>>& discs) {
    std::string s;
    for (const auto& [ray, a] : discs) {
        if (!s.empty()) s += ", ";
        s += vec_to_string(ray) + " -> " + rat_to_string(a);
    }
    return s.empty() ? "(none)" : s;
}

IntVec unit_vector(int rank, int pos, const Int& value = 1) {
    IntVec v(rank, Int(0));
    v[pos] = value;
    return v;
}

ToricDivisor anticanonical(const Fan& f) {
    return make_divisor(f, IntVec(f.rays.size(), Int(1)));
}

// Product fan of k copies of the P^1 fan: rays +-e_i, one maximal cone per
// sign choice.
Fan p1_product_fan(int k) {
    std::vector<IntVec> rays;
    for (int i = 0; i < k; ++i) rays.push_back(unit_vector(k, i));
    for (int i = 0; i < k; ++i) rays.push_back(unit_vector(k, i, -1));
    std::vector<std::vector<int>> cones;
    for (int mask = 0; mask < (1 << k); ++mask) {
        std::vector<int> cone;
        for (int i = 0; i < k; ++i) cone.push_back(mask & (1 << i) ? k + i : i);
        cones.push_back(std::move(cone));
    }
    return make_fan(k, std::move(rays), std::move(cones), FanCheck::basic);
}

RationalMatrix diagonal_action(const std::vector<int>& signs) {
    RationalMatrix m(static_cast<int>(signs.size()), static_cast<int>(signs.size()));
    for (std::size_t i = 0; i < signs.size(); ++i) m.at(i, i) = signs[i];
    return m;
}

bool is_diagonal(const RationalMatrix& m) {
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c)
            if (r != c && m.at(r, c) != 0) return false;
    return true;
}

json surface_class_to_json(const SurfaceClass& s) {
    return {{"1", rat_to_string(s.c0)},
            {"l", rat_to_string(s.cl)},
            {"B0", rat_to_string(s.cb)},
            {"pt", rat_to_string(s.cpt)}};
}

}  // namespace

bool PipelineReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.pass; });
}

const CheckResult* PipelineReport::first_failure() const {
    for (const auto& c : checks)
        if (!c.pass) return &c;
    return nullptr;
}

PipelineReport fav_pipeline(int n) {
    if (n < 1 || n > 6)
        throw std::invalid_argument("fav: n must be between 1 and 6");
    PipelineReport rep;
    rep.pipeline = "fav";
    rep.inputs = {{"n", std::to_string(n)}};

    // Characters invariant under the n sign flips: x_i +- x_{i+n+1} together
    // with x_{n+1}, written in the coordinates of P^{2n+1}'s lattice.
    const int rank = 2 * n + 1;
    IntegerMatrix a(rank, rank);
    for (int r = 0; r < n; ++r) {
        a.at(r, r) = 1;
        a.at(r, r + n + 1) = 1;
        a.at(r + n + 1, r) = 1;
        a.at(r + n + 1, r + n + 1) = -1;
    }
    a.at(n, n) = 1;
    LatticeMap iota = make_lattice_map(a);

    Int index = sublattice_index(iota);
    add_eq(rep, "sublattice_index", "invariant characters form a sublattice of index 2^n",
           (Int(1) << n).str(), index.str());

    std::vector<Int> expected_invariants(n, Int(2));
    add_eq(rep, "cokernel_invariants", "the quotient group is (Z/2)^n",
           invariants_to_string(expected_invariants),
           invariants_to_string(cokernel_invariants(iota)));

    Fan pspace = projective_space_fan(rank);
    Fan quotient = image_fan(pspace, iota);

    std::vector<IntVec> expected_rays;
    for (int i = 0; i < n; ++i) {
        IntVec v = unit_vector(rank, i);
        v[i + n + 1] = 1;
        expected_rays.push_back(std::move(v));
    }
    expected_rays.push_back(unit_vector(rank, n));
    for (int i = 0; i < n; ++i) {
        IntVec v = unit_vector(rank, i);
        v[i + n + 1] = -1;
        expected_rays.push_back(std::move(v));
    }
    IntVec rho0(rank, Int(0));
    for (int i = 0; i < n; ++i) rho0[i] = -2;
    rho0[n] = -1;
    expected_rays.push_back(std::move(rho0));
    add_eq(rep, "quotient_rays", "quotient fan rays match the closed-form list",
           rays_to_string(expected_rays), rays_to_string(quotient.rays));

    auto singular = singular_cones(quotient);
    add_eq(rep, "minimal_singular_cone_count",
           "there are exactly n+1 minimal singular cones", std::to_string(n + 1),
           std::to_string(singular.size()));

    std::vector<std::vector<int>> expected_singular;
    for (int i = 0; i < n; ++i) expected_singular.push_back({i, i + n + 1});
    expected_singular.push_back({n, 2 * n + 1});
    std::sort(expected_singular.begin(), expected_singular.end());
    add_eq(rep, "minimal_singular_cones",
           "each singular stratum comes from a 2-dimensional cone pairing a ray with its partner",
           cones_to_string(expected_singular), cones_to_string(singular));

    std::vector<IntVec> subdivision_rays;
    for (int i = 0; i < n; ++i) subdivision_rays.push_back(unit_vector(rank, i));
    IntVec last(rank, Int(0));
    for (int i = 0; i < n; ++i) last[i] = -1;
    subdivision_rays.push_back(std::move(last));
    Fan resolved = subdivide_with_rays(quotient, subdivision_rays);

    auto discs = discrepancies(quotient, resolved);
    bool all_zero = std::all_of(discs.begin(), discs.end(),
                                [](const auto& d) { return d.second == 0; });
    add_check(rep, "resolution_crepant", "every exceptional ray has discrepancy 0",
              "all discrepancies 0", discrepancies_to_string(discs), all_zero);

    add_bool(rep, "resolved_fan_smooth", "the subdivided fan is smooth", true,
             fan_is_smooth(resolved));

    add_bool(rep, "anticanonical_divisible",
             "the anticanonical class is divisible by n+1 in the class group", true,
             is_divisible_in_class_group(anticanonical(quotient), Int(n + 1)));

    add_bool(rep, "quotient_fano", "the quotient's anticanonical divisor is ample", true,
             is_fano(quotient));

    IntegerMatrix p(n + 1, rank);
    for (int r = 0; r <= n; ++r) p.at(r, n + r) = 1;
    LatticeMap proj = make_lattice_map(p);
    Fan product = p1_product_fan(n + 1);
    add_bool(rep, "projection_bundle",
             "restriction to the last n+1 coordinates maps the resolved fan onto the (P^1)^{n+1} fan",
             true, lattice_projection_check(resolved, proj, product));

    std::vector<IntVec> fiber_rays;
    for (int idx : kernel_ray_indices(resolved, proj))
        fiber_rays.push_back(IntVec(resolved.rays[idx].begin(),
                                    resolved.rays[idx].begin() + n));
    Fan pn = projective_space_fan(n);
    add_eq(rep, "projection_fiber", "the projection kernel rays form a P^n fan",
           rays_to_string(pn.rays), rays_to_string(fiber_rays));

    rep.artifacts.emplace_back("quotient_fan", fan_to_json_text(quotient));
    rep.artifacts.emplace_back("resolved_fan", fan_to_json_text(resolved));
    rep.artifacts.emplace_back("anticanonical_divisor",
                               divisor_to_json_text(anticanonical(quotient)));
    return rep;
}

PipelineReport p5_action_pipeline() {
    PipelineReport rep;
    rep.pipeline = "p5";

    // Characters invariant under the sign flip of coordinates 1 and 4 of P^5:
    // m_1 + m_4 even, with basis x_1 +- x_4 and the remaining coordinates.
    IntegerMatrix a(5, 5);
    a.at(0, 0) = 1;
    a.at(0, 3) = 1;
    a.at(1, 1) = 1;
    a.at(2, 2) = 1;
    a.at(3, 0) = 1;
    a.at(3, 3) = -1;
    a.at(4, 4) = 1;
    LatticeMap iota = make_lattice_map(a);

    add_eq(rep, "sublattice_index", "invariant characters form a sublattice of index 2",
           "2", sublattice_index(iota).str());

    RationalMatrix gen = diagonal_action({1, -1, 1, 1, -1, 1});
    auto fixed = fixed_components(gen, 1);
    std::vector<int> dims;
    for (const auto& rec : fixed) dims.push_back(rec.projective_dimension);
    std::sort(dims.begin(), dims.end());
    std::string dims_str = "[";
    for (std::size_t i = 0; i < dims.size(); ++i)
        dims_str += (i ? ", " : "") + std::to_string(dims[i]);
    dims_str += "]";
    add_eq(rep, "fixed_component_dimensions",
           "the action fixes a projective 3-space and a projective line", "[1, 3]",
           dims_str);

    LinearContactAction action = make_action(2, {gen});
    QuotientVerdict verdict = quotient_verdict(action);
    add_bool(rep, "quotient_contact_structure",
             "the quotient carries the induced contact structure", true, verdict.induced);

    Fan pspace = projective_space_fan(5);
    Fan quotient = image_fan(pspace, iota);

    std::vector<IntVec> expected_rays = {
        {1, 0, 0, 1, 0},  {0, 1, 0, 0, 0},  {0, 0, 1, 0, 0},
        {1, 0, 0, -1, 0}, {0, 0, 0, 0, 1},  {-2, -1, -1, 0, -1}};
    add_eq(rep, "quotient_rays", "quotient fan rays match the closed-form list",
           rays_to_string(expected_rays), rays_to_string(quotient.rays));

    auto singular = singular_cones(quotient);
    add_eq(rep, "minimal_singular_cones",
           "the singular locus has two components, of codimensions 2 and 4",
           "[[0, 3], [1, 2, 4, 5]]", cones_to_string(singular));

    std::string locus_dims = "[";
    for (std::size_t i = 0; i < singular.size(); ++i)
        locus_dims += (i ? ", " : "") +
                      std::to_string(5 - static_cast<int>(singular[i].size()));
    locus_dims += "]";
    add_eq(rep, "singular_locus_dimensions",
           "singular strata dimensions agree with the fixed component dimensions",
           "[3, 1]", locus_dims);

    const IntVec big_center{1, 0, 0, 0, 0};
    const IntVec small_center{-1, 0, 0, 0, 0};
    Fan full_res = subdivide_with_rays(quotient, {big_center, small_center});
    auto discs_full = discrepancies(quotient, full_res);

    bool has_positive = std::any_of(discs_full.begin(), discs_full.end(),
                                    [](const auto& d) { return d.second > 0; });
    add_check(rep, "full_resolution_noncrepant",
              "the blow-up of the small component has strictly positive discrepancy",
              "some discrepancy positive", discrepancies_to_string(discs_full),
              has_positive);
    add_bool(rep, "full_resolution_smooth", "the two blow-ups resolve all singularities",
             true, fan_is_smooth(full_res));
    add_bool(rep, "anticanonical_not_divisible_by_3",
             "the full resolution's anticanonical class is not divisible by 3", false,
             is_divisible_in_class_group(anticanonical(full_res), Int(3)));

    Fan partial = subdivide_with_rays(quotient, {big_center});
    auto discs_partial = discrepancies(quotient, partial);
    bool partial_crepant = std::all_of(discs_partial.begin(), discs_partial.end(),
                                       [](const auto& d) { return d.second == 0; });
    add_check(rep, "partial_resolution_crepant",
              "blowing up only the big component is crepant", "all discrepancies 0",
              discrepancies_to_string(discs_partial), partial_crepant);
    add_bool(rep, "partial_resolution_smooth",
             "the partial resolution still has the small singular component", false,
             fan_is_smooth(partial));

    ActionInput echo{2, {gen}};
    rep.artifacts.emplace_back("action", action_to_json_text(echo));
    rep.artifacts.emplace_back("quotient_fan", fan_to_json_text(quotient));
    rep.artifacts.emplace_back("full_resolution_fan", fan_to_json_text(full_res));
    rep.artifacts.emplace_back("partial_resolution_fan", fan_to_json_text(partial));
    return rep;
}

PipelineReport threefold_pipeline(int g, int e, long long a) {
    RuledSurfaceParams params{g, e};
    validate_params(params);

    PipelineReport rep;
    rep.pipeline = "threefold";
    rep.inputs = {{"a", std::to_string(a)},
                  {"e", std::to_string(e)},
                  {"g", std::to_string(g)}};

    BundleClass xi = bundle_xi();
    Rat xi3 = degree3(bundle_mul(bundle_mul(xi, xi, params), xi, params));
    add_eq(rep, "xi_cubed", "the top self-intersection of xi is 4(1-g)",
           Rat(4 * (1 - g)).str(), xi3.str());

    auto table = pairing_table(params);
    add_eq(rep, "section_pairing", "xi meets the pushed-forward section in 2-2g",
           Rat(2 - 2 * g).str(), table[2][1].str());
    add_eq(rep, "section_self_pairing",
           "the pulled-back section meets the pushed-forward section in -e",
           Rat(-e).str(), table[1][1].str());

    ShokurovReport shok = shokurov_threshold_check(params, a);
    add_eq(rep, "da_cube", "the top self-intersection of D_a is 6a + 4(1-g)",
           Rat(6 * a + 4 * (1 - g)).str(), shok.top_self_intersection.str());
    add_eq(rep, "da_pushed_fiber_pairing", "D_a contracts the pushed-forward fiber",
           "0", shok.pairings[0].str());
    add_eq(rep, "da_fiber_pairing", "D_a meets the projectivization fiber once", "1",
           shok.pairings[2].str());
    if (shok.threshold_ok) {
        add_check(rep, "da_section_pairing_positive",
                  "above the threshold D_a meets the pushed-forward section positively",
                  "positive", shok.pairings[1].str(), shok.pairings[1] > 0);
        add_check(rep, "da_cube_positive",
                  "above the threshold the top self-intersection is positive", "positive",
                  shok.top_self_intersection.str(), shok.top_self_intersection > 0);
    }

    json table_json = json::array();
    for (const auto& row : table) {
        json r = json::array();
        for (const auto& v : row) r.push_back(rat_to_string(v));
        table_json.push_back(std::move(r));
    }
    rep.artifacts.emplace_back("pairing_table", table_json.dump(2));

    json shok_json = {{"threshold_ok", shok.threshold_ok},
                      {"threshold_bound", std::to_string(3 * std::max(2 * g - 2, e))},
                      {"pairings",
                       {rat_to_string(shok.pairings[0]), rat_to_string(shok.pairings[1]),
                        rat_to_string(shok.pairings[2])}},
                      {"top_self_intersection", rat_to_string(shok.top_self_intersection)}};
    rep.artifacts.emplace_back("divisor_analysis", shok_json.dump(2));
    return rep;
}

PipelineReport quotient_check_pipeline(const ActionInput& input) {
    if (input.generators.empty())
        throw std::invalid_argument("trivial group: the action has no generators");
    LinearContactAction action = make_action(input.n, input.generators);
    if (action.elements.size() <= 1)
        throw std::invalid_argument("trivial group: the generators generate only the identity");

    PipelineReport rep;
    rep.pipeline = "quotient-check";
    rep.inputs = {{"generators", std::to_string(input.generators.size())},
                  {"n", std::to_string(input.n)}};

    QuotientVerdict verdict = quotient_verdict(action);
    SymplecticAmbient amb = make_ambient(input.n);

    json omega_table = json::array();
    bool all_scalar = true;
    for (std::size_t i = 0; i < input.generators.size(); ++i) {
        OmegaTransform t = omega_transform(input.generators[i], amb);
        omega_table.push_back({{"generator", i}, {"classification", omega_class_name(t)}});
        if (t.kind == OmegaClass::NonScalar) all_scalar = false;
    }
    add_check(rep, "generators_scale_omega",
              "every generator rescales the symplectic pairing", "all scalar",
              all_scalar ? "all scalar" : "some generator is non-scalar", all_scalar);

    json components = json::array();
    long long relations_checked = 0, relations_passed = 0, nondiagonal = 0;
    int min_codim = 2 * input.n + 2;
    if (all_scalar) {
        for (std::size_t i = 1; i < action.elements.size(); ++i) {
            const RationalMatrix& el = action.elements[i];
            for (const auto& rec : fixed_components(el, static_cast<int>(i))) {
                components.push_back({{"element", rec.group_element},
                                      {"eigenvalue", root_to_string(rec.eigenvalue)},
                                      {"projective_dimension", rec.projective_dimension},
                                      {"codimension", rec.codimension}});
                min_codim = std::min(min_codim, rec.codimension);
            }
            if (is_diagonal(el)) {
                for (int axis = 0; axis < el.rows; ++axis) {
                    ++relations_checked;
                    if (eigenvalue_relation_check(el, amb, axis).passed) ++relations_passed;
                }
            } else {
                ++nondiagonal;
            }
        }
        add_check(rep, "min_fixed_codimension",
                  "no non-identity element fixes a divisor", "at least 2",
                  std::to_string(min_codim), min_codim >= 2);
        std::string actual = std::to_string(relations_passed) + " of " +
                             std::to_string(relations_checked) + " hold";
        if (nondiagonal > 0)
            actual += " (" + std::to_string(nondiagonal) + " non-diagonal elements skipped)";
        add_check(rep, "eigenvalue_relations",
                  "tangent weights at every coordinate fixed point pair up through the contact weight",
                  "all hold", actual, relations_passed == relations_checked);
    } else {
        add_check(rep, "min_fixed_codimension", "no non-identity element fixes a divisor",
                  "at least 2", "not evaluated: non-scalar generator", false);
    }

    json verdict_json = {
        {"induced", verdict.induced},
        {"violating_generator", verdict.violating_generator},
        {"classification",
         verdict.induced ? "preserves omega" : omega_class_name(verdict.violating_transform)},
        {"smooth_ambient_condition", "vacuous"}};
    rep.artifacts.emplace_back("verdict", verdict_json.dump(2));
    rep.artifacts.emplace_back("omega_classification", omega_table.dump(2));
    rep.artifacts.emplace_back("fixed_components", components.dump(2));
    rep.artifacts.emplace_back("group_order", json(action.elements.size()).dump(2));
    return rep;
}

PipelineReport nilpotent_pipeline(std::optional<int> k, std::optional<int> n,
                                  const SamplePlan& plan) {
    if (!k && !n)
        throw std::invalid_argument("nilpotent: provide a component count k or a map size n");
    validate_plan(plan);

    PipelineReport rep;
    rep.pipeline = "nilpotent";
    if (k) rep.inputs.emplace_back("k", std::to_string(*k));
    if (n) rep.inputs.emplace_back("n", std::to_string(*n));
    rep.inputs.emplace_back("samples", std::to_string(plan.sample_count));
    rep.inputs.emplace_back("seed", std::to_string(plan.seed));

    if (k) {
        OrbitPoset poset = orbit_poset(*k);
        add_eq(rep, "poset_size", "orbit signatures form the Boolean lattice of size 2^k",
               std::to_string(std::uint64_t{1} << *k), std::to_string(poset.size()));
        add_bool(rep, "stratification_parity",
                 "all closure codimensions between projectivized orbits are even", true,
                 stratification_parity(*k));

        // Each orbit generator is hit by the quadratic map at the indicator
        // point of its signature.
        std::uint32_t masks_to_check =
            *k <= 12 ? poset.size() : std::uint32_t{1} << 12;
        bool hits = true;
        for (std::uint32_t mask = 0; mask < masks_to_check && hits; ++mask) {
            RatVec x(2 * *k, Rat(0));
            for (int b = 0; b < *k; ++b)
                if (mask & (std::uint32_t{1} << b)) x[b] = 1;
            hits = psi_map(*k - 1, x) == signature_generator(*k, mask);
        }
        add_bool(rep, "orbit_generators_hit",
                 "the quadratic map reaches every orbit generator", true, hits);
    }

    if (n) {
        QuadraticMap psi = psi_quadratic_map(*n);
        add_bool(rep, "psi_image_properties",
                 "sampled psi values are traceless rank-1 nilpotent algebra elements", true,
                 verify_image_properties_sampled(psi, plan));

        std::vector<std::vector<int>> flips;
        for (int i = 1; i <= *n; ++i) {
            std::vector<int> f(2 * *n + 2, 1);
            f[i] = -1;
            f[i + *n + 1] = -1;
            flips.push_back(std::move(f));
        }
        add_bool(rep, "psi_invariance", "psi is constant on sign-flip orbits", true,
                 verify_invariance(psi, flips, plan));
        add_bool(rep, "psi_homogeneity", "psi scales quadratically", true,
                 verify_homogeneity(psi, plan));

        QuadraticMap phi = phi_quadratic_map();
        add_bool(rep, "phi_image_properties",
                 "sampled phi values are traceless rank-1 nilpotent algebra elements", true,
                 verify_image_properties_sampled(phi, plan));
        std::vector<int> phi_flip(6, 1);
        phi_flip[1] = -1;
        phi_flip[4] = -1;
        add_bool(rep, "phi_invariance", "phi is constant on the sign-flip orbit", true,
                 verify_invariance(phi, {phi_flip}, plan));
        add_bool(rep, "phi_homogeneity", "phi scales quadratically", true,
                 verify_homogeneity(phi, plan));

        if (*n >= 1) {
            KkReport kk = kk_pullback_check(*n, plan);
            std::ostringstream actual;
            actual.precision(3);
            actual << std::scientific << kk.max_residual;
            add_check(rep, "kk_residual",
                      "the orbit pairing is proportional to the standard pairing",
                      "max residual < 1e-09", actual.str(), kk.max_residual < 1e-9);

            json kk_json = {{"constant", kk.constant},
                            {"max_residual", kk.max_residual},
                            {"samples_used", kk.samples_used},
                            {"samples_skipped", kk.samples_skipped},
                            {"pair_count", kk.pair_count}};
            rep.artifacts.emplace_back("kk_pairing", kk_json.dump(2));
        }
    }
    return rep;
}

PipelineReport chow_pipeline(int g, int e, const std::string& expression) {
    RuledSurfaceParams params{g, e};
    validate_params(params);
    BundleClass value = parse_chow_expression(expression, params);

    PipelineReport rep;
    rep.pipeline = "chow";
    rep.inputs = {{"e", std::to_string(e)},
                  {"expression", expression},
                  {"g", std::to_string(g)}};

    json value_json = {{"a", surface_class_to_json(value.a)},
                       {"b", surface_class_to_json(value.b)},
                       {"truncated", value.truncated()}};
    rep.artifacts.emplace_back("value", value_json.dump(2));

    try {
        rep.artifacts.emplace_back("degree3", json(rat_to_string(degree3(value))).dump(2));
    } catch (const std::invalid_argument&) {
        // Not homogeneous of top degree; the class itself is still reported.
    }
    return rep;
}

std::string report_to_json(const PipelineReport& report) {
    json j;
    j["schema"] = "1";
    j["pipeline"] = report.pipeline;
    json inputs = json::object();
    for (const auto& [key, value] : report.inputs) inputs[key] = value;
    j["inputs"] = std::move(inputs);

    json checks = json::array();
    for (const auto& c : report.checks)
        checks.push_back({{"name", c.name},
                          {"claim", c.claim},
                          {"expected", c.expected},
                          {"actual", c.actual},
                          {"pass", c.pass}});
    j["checks"] = std::move(checks);

    json artifacts = json::object();
    for (const auto& [name, text] : report.artifacts) artifacts[name] = json::parse(text);
    j["artifacts"] = std::move(artifacts);
    j["all_passed"] = report.all_passed();
    return j.dump(2);
}

void print_report(const PipelineReport& report, std::ostream& out) {
    out << "pipeline: " << report.pipeline << "\n";
    for (const auto& [key, value] : report.inputs)
        out << "  " << key << " = " << value << "\n";
    for (const auto& c : report.checks) {
        out << (c.pass ? "  [pass] " : "  [FAIL] ") << c.name << ": " << c.claim
            << " (expected " << c.expected << ", actual " << c.actual << ")\n";
    }
    std::size_t passed = 0;
    for (const auto& c : report.checks)
        if (c.pass) ++passed;
    if (report.checks.empty())
        out << "no checks; report only\n";
    else if (report.all_passed())
        out << "all " << report.checks.size() << " checks passed\n";
    else
        out << passed << " of " << report.checks.size()
            << " checks passed; first failing check: " << report.first_failure()->name
            << "\n";
}

}  // namespace contact_atlas
