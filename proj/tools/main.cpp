#include <cstdint>
#include <cstdlib>
#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "contact_atlas/json_io.hpp"
#include "contact_atlas/nilpotent.hpp"
#include "contact_atlas/pipelines.hpp"

namespace {

// --seed wins; otherwise the CONTACT_ATLAS_SEED environment variable;
// otherwise 0.
std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("CONTACT_ATLAS_SEED")) {
        try {
            std::size_t used = 0;
            std::uint64_t value = std::stoull(env, &used);
            if (used == std::string(env).size()) return value;
        } catch (const std::exception&) {
        }
        throw std::invalid_argument("CONTACT_ATLAS_SEED is not an unsigned integer: " +
                                    std::string(env));
    }
    return 0;
}

int emit(const contact_atlas::PipelineReport& rep, bool as_json) {
    if (as_json)
        std::cout << contact_atlas::report_to_json(rep) << "\n";
    else
        contact_atlas::print_report(rep, std::cout);
    if (const contact_atlas::CheckResult* failed = rep.first_failure()) {
        std::cerr << "check failed: " << failed->name << "\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite quotients of projective space: toric, intersection-theoretic, "
                 "and contact checks"};
    app.require_subcommand(1);

    bool as_json = false;

    int fav_n = 1;
    CLI::App* fav = app.add_subcommand(
        "fav", "sign-flip quotient of P^(2n+1): fan, resolution, and bundle structure");
    fav->add_option("-n,--n", fav_n, "number of commuting sign flips (1..6)")->required();
    fav->add_flag("--json", as_json, "emit the report as JSON");

    CLI::App* p5 = app.add_subcommand(
        "p5", "involution quotient of P^5: singularities, resolutions, contact check");
    p5->add_flag("--json", as_json, "emit the report as JSON");

    int tf_g = 0, tf_e = 0;
    long long tf_a = 0;
    CLI::App* three = app.add_subcommand(
        "threefold", "intersection numbers on the projectivized tangent bundle of a "
                     "ruled surface");
    three->add_option("-g,--g", tf_g, "base curve genus")->required();
    three->add_option("-e,--e", tf_e, "ruled surface invariant")->required();
    three->add_option("-a,--a", tf_a, "coefficient of the pulled-back fiber class")
        ->required();
    three->add_flag("--json", as_json, "emit the report as JSON");

    std::string action_path;
    CLI::App* qc = app.add_subcommand(
        "quotient-check", "analyze a finite linear action given as a JSON file");
    qc->add_option("--action", action_path, "path to the action JSON file")->required();
    qc->add_flag("--json", as_json, "emit the report as JSON");

    std::optional<int> nil_k, nil_n;
    long long samples = 1000;
    std::optional<std::uint64_t> seed_flag;
    int range = 10;
    CLI::App* nil = app.add_subcommand(
        "nilpotent", "orbit poset and sampled checks for the quadratic maps into the "
                     "nilpotent cone");
    nil->add_option("-k,--k", nil_k, "number of sl2 components for the poset checks");
    nil->add_option("-n,--n", nil_n, "map size: input dimension is 2n+2");
    nil->add_option("--samples", samples, "sample count for the randomized checks");
    nil->add_option("--seed", seed_flag, "RNG seed (overrides CONTACT_ATLAS_SEED)");
    nil->add_option("--coordinate-range", range, "bound on sampled numerators");
    nil->add_flag("--json", as_json, "emit the report as JSON");

    int ch_g = 0, ch_e = 0;
    std::string expression;
    CLI::App* chow = app.add_subcommand(
        "chow", "evaluate an expression in the intersection ring of the projectivized "
                "tangent bundle");
    chow->add_option("-g,--g", ch_g, "base curve genus")->required();
    chow->add_option("-e,--e", ch_e, "ruled surface invariant")->required();
    chow->add_option("--expr", expression, "expression in xi, l, B0, pt, K")->required();
    chow->add_flag("--json", as_json, "emit the report as JSON");

    CLI11_PARSE(app, argc, argv);

    try {
        contact_atlas::PipelineReport rep;
        if (app.got_subcommand(fav)) {
            rep = contact_atlas::fav_pipeline(fav_n);
        } else if (app.got_subcommand(p5)) {
            rep = contact_atlas::p5_action_pipeline();
        } else if (app.got_subcommand(three)) {
            rep = contact_atlas::threefold_pipeline(tf_g, tf_e, tf_a);
        } else if (app.got_subcommand(qc)) {
            rep = contact_atlas::quotient_check_pipeline(
                contact_atlas::load_action_file(action_path));
        } else if (app.got_subcommand(nil)) {
            contact_atlas::SamplePlan plan;
            plan.sample_count = samples;
            plan.seed = resolve_seed(seed_flag);
            plan.coordinate_range = range;
            rep = contact_atlas::nilpotent_pipeline(nil_k, nil_n, plan);
        } else {
            rep = contact_atlas::chow_pipeline(ch_g, ch_e, expression);
        }
        return emit(rep, as_json);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
}
