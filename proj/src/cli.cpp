#include "kcross/cli.hpp"

#include <cstdint>
#include <iostream>
#include <string>
#include <utility>

#include "CLI11.hpp"

#include "kcross/asymptotics.hpp"
#include "kcross/coloring.hpp"
#include "kcross/doubling.hpp"
#include "kcross/geom.hpp"
#include "kcross/instance_io.hpp"
#include "kcross/matchopt.hpp"
#include "kcross/numeric.hpp"
#include "kcross/report.hpp"

namespace kcross {

namespace {

int cmd_count(const std::string& path) {
    Instance inst = load_instance(path);
    validate_general_position(inst.points);
    std::cout << count_monochromatic(inst.points, inst.coloring) << "\n";
    return 0;
}

int cmd_search(const std::string& path, std::size_t n, int k, bool k_given,
               std::uint64_t seed, int restarts, const std::string& out) {
    PointSet P;
    if (!path.empty()) {
        Instance inst = load_instance(path);
        P = std::move(inst.points);
        if (!k_given) k = inst.coloring.k;
    } else {
        if (n < 3) {
            std::cerr << "error: search needs --instance or --n of at least 3\n";
            return 2;
        }
        P = random_general_position(n, seed);
    }
    validate_general_position(P);
    SearchConfig cfg;
    cfg.restarts = restarts;
    cfg.rng_seed = seed;
    auto [best_points, best_coloring] = alternate_search(P, k, cfg);
    std::cout << "crossings " << count_monochromatic(best_points, best_coloring) << "\n";
    if (!out.empty()) {
        Instance res;
        res.points = std::move(best_points);
        res.coloring = std::move(best_coloring);
        save_instance(res, out);
    }
    return 0;
}

/// Picks the plan a command works with: the optimal matching by default,
/// the file's matching (and details, when present) on request.
int pick_plan(const Instance& inst, bool use_given, MatchPlan& plan) {
    WeightTable weights = build_weights(inst.points, inst.coloring);
    if (use_given) {
        if (!inst.matching) {
            std::cerr << "error: --use-given-matching needs a matching section\n";
            return 2;
        }
        plan = plan_for_matching(weights, *inst.matching);
        if (inst.details) plan.details = *inst.details;
    } else {
        plan = optimal_matching(weights);
    }
    return 0;
}

int cmd_bound(const std::string& path, bool use_given, const std::string& out) {
    Instance inst = load_instance(path);
    validate_general_position(inst.points);
    MatchPlan plan;
    if (int rc = pick_plan(inst, use_given, plan)) return rc;
    std::cout << render(make_bound_report(inst.points, inst.coloring, plan));
    if (!out.empty()) {
        inst.matching = plan.matching;
        inst.details = plan.details;
        save_instance(inst, out);
    }
    return 0;
}

int cmd_verify(const std::string& path, unsigned t_max, bool use_given) {
    Instance inst = load_instance(path);
    std::size_t n = inst.points.size();
    if (n < 3 || n > 8) {
        std::cerr << "error: verify builds doubled drawings explicitly and needs "
                     "3 to 8 points\n";
        return 2;
    }
    validate_general_position(inst.points);
    const PointSet& P = inst.points;
    const EdgeColoring& chi = inst.coloring;

    MatchPlan plan;
    if (int rc = pick_plan(inst, use_given, plan)) return rc;
    const Matching& m = plan.matching;
    const std::vector<VertexDetails>& det = plan.details;

    bool ok = true;
    auto check = [&ok](const std::string& name, bool pass) {
        std::cout << (pass ? "PASS " : "FAIL ") << name << "\n";
        if (!pass) ok = false;
    };

    BigInt cr0 = count_monochromatic(P, chi);
    std::cout << "base crossings " << cr0 << "\n";
    check("formula at t=0 equals the base count",
          formula_count(P, chi, m, det, 0) == cr0);

    DoubledDrawing first = double_once(P, chi, m, det);

    bool offsets_ok = true;
    for (std::size_t p = 0; p < n; ++p) {
        SideCounts base = side_counts(P, chi, m, p);
        SideCounts child1 = side_counts(first.points, first.coloring, first.matching, 2 * p);
        SideCounts child2 =
            side_counts(first.points, first.coloring, first.matching, 2 * p + 1);
        EnvOffsets env = env_offsets(det[p], chi.at(p, m(p)), chi.k);
        for (int c = 1; c <= chi.k; ++c)
            for (Side d : {Side::Left, Side::Right}) {
                long long b = base.at(c, d);
                if (child1.at(c, d) - 2 * b != env.o1(c, d)) offsets_ok = false;
                if (child2.at(c, d) - 2 * b != env.o2(c, d)) offsets_ok = false;
            }
    }
    check("child side counts follow the offset rule", offsets_ok);

    auto classes = count_by_class(first, m);
    BigInt copies = binom2(BigInt(n)) - n;
    BigInt same = 0, matched = 0;
    for (std::size_t p = 0; p < n; ++p) {
        SideCounts sc = side_counts(P, chi, m, p);
        int mu = chi.at(p, m(p));
        for (int c = 1; c <= chi.k; ++c)
            for (Side d : {Side::Left, Side::Right}) {
                BigInt s(sc.at(c, d));
                same += 4 * binom2(s);
            }
        matched += 2 * (sc.at(mu, Side::Left) + sc.at(mu, Side::Right));
    }
    check("inherited crossings scale by 16",
          classes[static_cast<int>(QuadClass::Inherited)] == 16 * cr0);
    check("one crossing per non-matching edge's copies",
          classes[static_cast<int>(QuadClass::EdgeCopies)] == copies);
    check("same-side pairs cross four times",
          classes[static_cast<int>(QuadClass::LocalSameSide)] == same);
    check("matched-color edges cross the matching copies twice",
          classes[static_cast<int>(QuadClass::LocalMatched)] == matched);
    check("sibling edges stay crossing-free",
          classes[static_cast<int>(QuadClass::Degenerate)] == 0);

    DoubledDrawing D = first;
    for (unsigned t = 1; t <= t_max; ++t) {
        if (t > 1) D = double_once(D.points, D.coloring, D.matching, D.details);
        BigInt direct = count_monochromatic(D.points, D.coloring);
        BigInt predicted = formula_count(P, chi, m, det, t);
        check("formula at t=" + std::to_string(t) + " equals the doubled drawing",
              predicted == direct);
    }

    AsymptoticCoeffs gc = growth_coefficients(P, chi, m, det);
    check("growth coefficients sum to the base count",
          gc.alpha + gc.beta + gc.gamma + gc.delta + gc.residual == Rat(cr0));
    check("leading coefficient is positive", gc.alpha > 0);
    std::cout << "alpha " << gc.alpha << " bound "
              << decimal_string(bound_from_alpha(gc.alpha, n)) << "\n";

    return ok ? 0 : 1;
}

} // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"monochromatic crossings of colored straight-line drawings, "
                 "doubling, and crossing-constant bounds"};
    app.require_subcommand(1);

    std::string instance_path, out_path;
    std::size_t n = 0;
    int k = 1;
    std::uint64_t seed = 1;
    int restarts = 8;
    unsigned t_max = 1;
    bool use_given = false;

    auto* sub_count = app.add_subcommand(
        "count", "print the exact monochromatic crossing count of an instance");
    sub_count->add_option("--instance", instance_path, "instance file")->required();

    auto* sub_search = app.add_subcommand(
        "search", "look for a drawing and coloring with few monochromatic crossings");
    sub_search->add_option("--instance", instance_path, "starting instance file");
    sub_search->add_option("--n", n, "number of points for a random start");
    sub_search->add_option("--k", k, "number of colors");
    sub_search->add_option("--seed", seed, "random seed");
    sub_search->add_option("--restarts", restarts, "recoloring restarts per round");
    sub_search->add_option("--out", out_path, "write the best instance found here");

    auto* sub_bound = app.add_subcommand(
        "bound", "certified upper bound on the k-colored crossing constant");
    sub_bound->add_option("--instance", instance_path, "instance file")->required();
    sub_bound->add_flag("--use-given-matching", use_given,
                        "score the file's matching instead of optimising");
    sub_bound->add_option("--out", out_path,
                          "write the instance with matching and details here");

    auto* sub_verify = app.add_subcommand(
        "verify", "cross-check the closed forms against explicitly doubled drawings");
    sub_verify->add_option("--instance", instance_path, "instance file")->required();
    sub_verify->add_option("--t-max", t_max, "doubling rounds to check explicitly (1 or 2)");
    sub_verify->add_flag("--use-given-matching", use_given,
                         "verify the file's matching instead of the optimal one");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(sub_count)) return cmd_count(instance_path);
        if (app.got_subcommand(sub_search))
            return cmd_search(instance_path, n, k, sub_search->count("--k") > 0, seed,
                              restarts, out_path);
        if (app.got_subcommand(sub_bound)) return cmd_bound(instance_path, use_given, out_path);
        if (app.got_subcommand(sub_verify)) {
            if (t_max < 1 || t_max > 2) {
                std::cerr << "error: --t-max must be 1 or 2\n";
                return 2;
            }
            return cmd_verify(instance_path, t_max, use_given);
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const GeneralPositionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::logic_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

} // namespace kcross
