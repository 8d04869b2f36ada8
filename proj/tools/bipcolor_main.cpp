#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "bipcolor/bias.hpp"
#include "bipcolor/colorer.hpp"
#include "bipcolor/coupon.hpp"
#include "bipcolor/graph.hpp"
#include "bipcolor/harness.hpp"
#include "bipcolor/lists.hpp"
#include "bipcolor/optimizer.hpp"
#include "bipcolor/oracle.hpp"

namespace {

using bipcolor::BiasProfile;

struct ProfileFlags {
    std::string kind = "uniform";
    double a = -1.0;
    double gamma = 0.0;
    double p = 0.0;

    void attach(CLI::App* cmd) {
        cmd->add_option("--profile", kind, "uniform|linear|piecewise");
        cmd->add_option("--a", a, "list-size coefficient override");
        cmd->add_option("--gamma", gamma, "linear-decay slack above 4/5");
        cmd->add_option("--p", p, "probability cap (0 = 1/sqrt(delta))");
    }

    BiasProfile build() const {
        auto profile = bipcolor::profile_from_name(kind);
        if (profile.kind == bipcolor::ProfileKind::linear_decay) {
            profile = BiasProfile::linear_decay(gamma);
        }
        if (a > 0.0) profile.a = a;
        profile.p = p;
        return profile;
    }
};

int global_vertex(bipcolor::Vertex v, const bipcolor::BipartiteGraph& g) {
    return v.side == bipcolor::Side::a ? v.idx : g.a_size() + v.idx;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bipartite list-coloring toolkit"};
    app.require_subcommand(1);
    app.fallthrough();

    std::uint64_t seed = 0;
    std::string out_path;
    int workers = 1;
    app.add_option("--seed", seed, "base RNG seed")->capture_default_str();
    app.add_option("--out", out_path, "output file path");
    app.add_option("--workers", workers, "concurrent trial cap")->capture_default_str();

    // color
    auto* color = app.add_subcommand("color", "randomized one-sided coloring with resampling");
    std::string color_graph, color_lists, color_report;
    int max_rounds = 0;
    color->add_option("--graph", color_graph, "graph file")->required();
    color->add_option("--lists", color_lists, "list file")->required();
    color->add_option("--max-rounds", max_rounds, "round cap (0 = 100*|B|)");
    color->add_option("--report", color_report, "write the JSON report here too");
    ProfileFlags color_profile;
    color_profile.attach(color);

    // coupon
    auto* coupon = app.add_subcommand("coupon", "coupon-collection probabilities and bounds");
    int coupon_delta = 0, coupon_k = 0, coupon_pool = 0;
    long long coupon_trials = 10000;
    coupon->add_option("--delta", coupon_delta, "number of sources")->required();
    coupon->add_option("--k", coupon_k, "list size")->required();
    coupon->add_option("--pool", coupon_pool, "color pool (0 = identical lists)");
    coupon->add_option("--trials", coupon_trials, "Monte Carlo trials")->capture_default_str();
    ProfileFlags coupon_profile;
    coupon_profile.attach(coupon);

    // oracle
    auto* oracle = app.add_subcommand("oracle", "exact small-instance ground truth");
    oracle->require_subcommand(1);
    auto* ch_cmd = oracle->add_subcommand("choosability", "least k with every k-list assignment colorable");
    std::string ch_graph;
    int ch_pool = 0;
    long long ch_budget = 10'000'000;
    ch_cmd->add_option("--graph", ch_graph, "graph file")->required();
    ch_cmd->add_option("--pool", ch_pool, "palette cap (0 = k*|V|)");
    ch_cmd->add_option("--budget", ch_budget, "enumeration node budget")->capture_default_str();
    auto* lc_cmd = oracle->add_subcommand("lcolor", "exact L-colorability with witness");
    std::string lc_graph, lc_lists;
    lc_cmd->add_option("--graph", lc_graph, "graph file")->required();
    lc_cmd->add_option("--lists", lc_lists, "list file")->required();

    // optimize
    auto* optimize = app.add_subcommand("optimize", "constrained maximization certificate");
    optimize->require_subcommand(1);
    auto* certify = optimize->add_subcommand("certify", "reproduce the coefficient bound");
    double grid_step = 1e-3, refine_tol = 1e-10;
    bool cert_json = false;
    certify->add_option("--grid-step", grid_step, "grid resolution")->capture_default_str();
    certify->add_option("--refine-tol", refine_tol, "simplex stop tolerance")->capture_default_str();
    certify->add_flag("--json", cert_json, "emit the certificate as JSON");

    // experiment / compare
    auto* experiment = app.add_subcommand("experiment", "run a configured experiment");
    std::string exp_config;
    experiment->add_option("--config", exp_config, "key=value config file")->required();
    auto* compare = app.add_subcommand("compare", "paired-seed profile comparison");
    std::string cmp_config, cmp_profiles = "uniform,piecewise";
    long long cmp_trials = 0;
    compare->add_option("--config", cmp_config, "key=value config file")->required();
    compare->add_option("--profiles", cmp_profiles, "comma-separated profile names")
        ->capture_default_str();
    compare->add_option("--trials", cmp_trials, "override config trial count");

    // stats
    auto* stats = app.add_subcommand("stats", "per-vertex weight and probability CSVs");
    std::string st_graph, st_lists, st_weights, st_probs;
    stats->add_option("--graph", st_graph, "graph file")->required();
    stats->add_option("--lists", st_lists, "list file")->required();
    stats->add_option("--weights", st_weights, "write w,Z,z,y,alpha,ell_bar CSV here");
    stats->add_option("--probs", st_probs, "write vertex,c,index,prob CSV here");
    ProfileFlags stats_profile;
    stats_profile.attach(stats);

    // gen
    auto* gen = app.add_subcommand("gen", "generate graph or list files");
    gen->require_subcommand(1);
    auto* gen_graph = gen->add_subcommand("graph", "random delta-regular bipartite graph");
    int gg_n = 0, gg_delta = 0;
    gen_graph->add_option("--n", gg_n, "vertices per part")->required();
    gen_graph->add_option("--delta", gg_delta, "regular degree")->required();
    auto* gen_lists_cmd = gen->add_subcommand("lists", "random list assignment for a graph");
    std::string gl_graph, gl_mode = "uniform";
    int gl_k = 0, gl_pool = 0;
    double gl_theta = 0.0;
    gen_lists_cmd->add_option("--graph", gl_graph, "graph file")->required();
    gen_lists_cmd->add_option("--k", gl_k, "list size")->required();
    gen_lists_cmd->add_option("--pool", gl_pool, "color pool (0 = 4k)");
    gen_lists_cmd->add_option("--mode", gl_mode, "uniform|planted")->capture_default_str();
    gen_lists_cmd->add_option("--theta", gl_theta, "planted overlap fraction");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (color->parsed()) {
            auto g = bipcolor::load_graph_file(color_graph);
            auto lists = bipcolor::load_lists_file(color_lists, g.a_size(), g.b_size());
            const int rounds = max_rounds > 0 ? max_rounds : bipcolor::default_max_rounds(g);
            auto run = bipcolor::moser_tardos_color(g, lists, color_profile.build(), rounds, seed);
            nlohmann::json report{{"success", run.report.success},
                                  {"rounds", run.report.rounds},
                                  {"resampled_events", run.report.resampled_events},
                                  {"seed", run.report.seed},
                                  {"bad_history", run.report.bad_history}};
            std::cout << report.dump(2) << '\n';
            if (!color_report.empty()) {
                std::ofstream rep(color_report);
                rep << report.dump(2) << '\n';
            }
            if (run.report.success && !out_path.empty()) {
                std::ofstream cf(out_path);
                for (int v = 0; v < g.a_size(); ++v) {
                    cf << global_vertex(bipcolor::Vertex::a(v), g) << ' '
                       << *run.coloring->a[v] << '\n';
                }
                for (int w = 0; w < g.b_size(); ++w) {
                    cf << global_vertex(bipcolor::Vertex::b(w), g) << ' '
                       << *run.coloring->b[w] << '\n';
                }
            }
            return run.report.success ? 0 : 2;
        }

        if (coupon->parsed()) {
            bipcolor::ExperimentConfig cfg;
            cfg.mode = bipcolor::ExperimentMode::coupon;
            cfg.coupon_delta = coupon_delta;
            cfg.coupon_k = coupon_k;
            cfg.coupon_pool = coupon_pool;
            cfg.trials = coupon_trials;
            cfg.seed = seed;
            cfg.out = out_path;
            cfg.profile = coupon_profile.build();
            auto result = bipcolor::run_experiment(cfg);
            std::cout << result.table.to_csv();
            return 0;
        }

        if (ch_cmd->parsed()) {
            auto g = bipcolor::load_graph_file(ch_graph);
            std::optional<int> pool;
            if (ch_pool > 0) pool = ch_pool;
            const int ch = bipcolor::choosability(g, pool, ch_budget);
            std::cout << "choosability " << ch << '\n';
            if (!out_path.empty() && ch > 1) {
                auto below = bipcolor::choosable(
                    g, ch - 1, pool.value_or(bipcolor::default_pool(g, ch - 1)), ch_budget);
                if (below.counterexample) {
                    bipcolor::save_lists_file(*below.counterexample, out_path);
                    std::cout << "counterexample for k=" << ch - 1 << " written to "
                              << out_path << '\n';
                }
            }
            return 0;
        }

        if (lc_cmd->parsed()) {
            auto g = bipcolor::load_graph_file(lc_graph);
            auto lists = bipcolor::load_lists_file(lc_lists, g.a_size(), g.b_size());
            auto res = bipcolor::l_colorable(g, lists);
            std::cout << (res.colorable ? "colorable" : "not colorable") << '\n';
            if (res.colorable && !out_path.empty()) {
                std::ofstream cf(out_path);
                for (int v = 0; v < g.a_size(); ++v) {
                    cf << global_vertex(bipcolor::Vertex::a(v), g) << ' '
                       << *res.witness->a[v] << '\n';
                }
                for (int w = 0; w < g.b_size(); ++w) {
                    cf << global_vertex(bipcolor::Vertex::b(w), g) << ' '
                       << *res.witness->b[w] << '\n';
                }
            }
            return 0;
        }

        if (certify->parsed()) {
            auto cert = bipcolor::coefficient_certificate(grid_step, refine_tol);
            if (cert_json) {
                nlohmann::json j{{"branch_one", cert.branch_one},
                                 {"branch_two_max", cert.branch_two_max},
                                 {"argmax", cert.argmax},
                                 {"margin_one", cert.margin_one},
                                 {"margin_two", cert.margin_two},
                                 {"threshold", cert.threshold}};
                std::cout << j.dump(2) << '\n';
            } else {
                std::cout << cert.text;
            }
            return 0;
        }

        if (experiment->parsed()) {
            auto cfg = bipcolor::load_config_file(exp_config);
            if (cfg.seed == 0) cfg.seed = seed;
            if (!out_path.empty()) cfg.out = out_path;
            if (workers > 1) cfg.workers = workers;
            auto result = bipcolor::run_experiment(cfg);
            const auto& s = result.summary;
            std::cout << "trials=" << s.trials << " success_rate=" << s.success_rate
                      << " mean_rounds=" << s.mean_rounds << " mean_bad=" << s.mean_bad
                      << " ci_radius=" << s.confidence_radius << '\n';
            if (cfg.out.empty()) std::cout << result.table.to_csv();
            return 0;
        }

        if (compare->parsed()) {
            auto cfg = bipcolor::load_config_file(cmp_config);
            if (cfg.seed == 0) cfg.seed = seed;
            if (!out_path.empty()) cfg.out = out_path;
            if (workers > 1) cfg.workers = workers;
            if (cmp_trials > 0) cfg.trials = cmp_trials;
            std::vector<bipcolor::BiasProfile> profiles;
            std::istringstream names(cmp_profiles);
            std::string name;
            while (std::getline(names, name, ',')) {
                profiles.push_back(bipcolor::profile_from_name(name));
            }
            auto result = bipcolor::compare_profiles(cfg, profiles);
            for (const auto& pc : result.pairs) {
                std::cout << pc.profile_lhs << " vs " << pc.profile_rhs << ": mean_bad "
                          << pc.mean_lhs << " vs " << pc.mean_rhs << ", wins "
                          << pc.lhs_wins << "/" << pc.rhs_wins << " (ties " << pc.ties
                          << "), sign-test p=" << pc.sign_test_p << '\n';
            }
            if (cfg.out.empty()) std::cout << result.per_trial.to_csv();
            return 0;
        }

        if (stats->parsed()) {
            auto g = bipcolor::load_graph_file(st_graph);
            auto lists = bipcolor::load_lists_file(st_lists, g.a_size(), g.b_size());
            if (st_weights.empty() && st_probs.empty()) {
                bipcolor::write_stats_csv(lists, g, std::cout);
            }
            if (!st_weights.empty()) {
                std::ofstream wf(st_weights);
                if (!wf) throw bipcolor::IoFailure("cannot open " + st_weights);
                bipcolor::write_stats_csv(lists, g, wf);
            }
            if (!st_probs.empty()) {
                std::ofstream pf(st_probs);
                if (!pf) throw bipcolor::IoFailure("cannot open " + st_probs);
                bipcolor::write_prob_csv(stats_profile.build(), lists, g, pf);
            }
            return 0;
        }

        if (gen_graph->parsed()) {
            auto g = bipcolor::gen_regular_bipartite(gg_n, gg_delta, seed);
            if (out_path.empty()) {
                bipcolor::save_graph(g, std::cout);
            } else {
                bipcolor::save_graph_file(g, out_path);
            }
            return 0;
        }

        if (gen_lists_cmd->parsed()) {
            auto g = bipcolor::load_graph_file(gl_graph);
            const int pool = gl_pool > 0 ? gl_pool : 4 * gl_k;
            const auto mode = gl_mode == "planted" ? bipcolor::ListMode::planted_overlap
                                                   : bipcolor::ListMode::independent_uniform;
            auto lists = bipcolor::gen_lists(g, gl_k, pool, mode, seed, gl_theta);
            if (out_path.empty()) {
                bipcolor::save_lists(lists, std::cout);
            } else {
                bipcolor::save_lists_file(lists, out_path);
            }
            return 0;
        }
    } catch (const bipcolor::ConfigInvalid& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 1;
    } catch (const bipcolor::IoFailure& e) {
        std::cerr << "io error: " << e.what() << '\n';
        return 1;
    } catch (const bipcolor::CertificateFailed& e) {
        std::cerr << "certificate failed: " << e.what() << '\n';
        return 2;
    } catch (const bipcolor::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
