#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bipcolor/bias.hpp"
#include "bipcolor/graph.hpp"
#include "bipcolor/lists.hpp"

namespace bipcolor {

// Row/column table with string cells; the common currency between experiment
// runners, CSV files, and plot-data emitters.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    int column_index(const std::string& name) const;  // -1 when absent
    std::string to_csv() const;
    static Table from_csv(std::istream& in);
};

// Flat key=value config with optional [section] prefixes; keys become
// "section.key". '#' starts a comment.
std::map<std::string, std::string> parse_config(std::istream& in);

enum class ExperimentMode { color, coupon, sweep };

struct GraphSource {
    std::string file;       // non-empty: load from file
    int n = 0;              // generator params otherwise
    int delta = 0;
    bool from_file() const { return !file.empty(); }
};

struct ListSource {
    std::string file;
    int k = 0;
    int pool = 0;           // 0 = default (4k)
    ListMode mode = ListMode::independent_uniform;
    double theta = 0.0;
    bool from_file() const { return !file.empty(); }
};

struct ExperimentConfig {
    ExperimentMode mode = ExperimentMode::color;
    GraphSource graph;
    ListSource lists;
    BiasProfile profile = BiasProfile::uniform();
    long long trials = 1;
    std::uint64_t seed = 0;
    std::string out;
    int workers = 1;
    int max_rounds = 0;                  // 0 = colorer default
    bool regenerate_per_trial = true;    // fresh instance per trial (generated sources)
    std::vector<BiasProfile> sweep_profiles;  // sweep/compare modes
    // coupon mode
    int coupon_delta = 0;
    int coupon_k = 0;
    int coupon_pool = 0;                 // 0 = same as k (identical lists)
    long long coupon_enum_cap = 10'000'000;
};

// Builds a config from parsed key=value pairs; unknown keys are rejected.
ExperimentConfig config_from_map(const std::map<std::string, std::string>& kv);
ExperimentConfig load_config_file(const std::string& path);

// Throws ConfigInvalid on violated invariants (missing files, trials < 1, ...).
void validate_config(const ExperimentConfig& cfg);

struct ExperimentSummary {
    long long trials = 0;
    double success_rate = 0.0;
    double mean_rounds = 0.0;
    double mean_bad = 0.0;         // initial bad-vertex count
    double confidence_radius = 0.0;  // 1.96 * sqrt(p(1-p)/T) on the success rate
};

struct ExperimentResult {
    Table table;
    ExperimentSummary summary;
};

// Executes the configured mode over `trials` with per-trial child seeds
// (rng::mix_seed) and writes the CSV to cfg.out when set. Row order is by
// trial index regardless of worker scheduling.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

// Recomputes the summary from a color/sweep-mode table; used to cross-check
// emitted CSVs.
ExperimentSummary summarize_color_table(const Table& table);

struct PairedComparison {
    std::string profile_lhs;
    std::string profile_rhs;
    double mean_lhs = 0.0;         // mean initial bad count
    double mean_rhs = 0.0;
    long long lhs_wins = 0;        // trials with bad_lhs < bad_rhs
    long long rhs_wins = 0;
    long long ties = 0;
    double sign_test_p = 1.0;      // two-sided exact binomial on wins
};

struct ComparisonResult {
    Table per_trial;               // trial, seed, bad_<profile>...
    std::vector<PairedComparison> pairs;
};

// Paired-seed comparison: each trial builds one instance and one base coloring
// seed shared by every profile. Requires >= 2 profiles.
ComparisonResult compare_profiles(const ExperimentConfig& cfg,
                                  const std::vector<BiasProfile>& profiles);

// Two-sided exact binomial sign test for `pos` successes in pos+neg trials.
double sign_test_p_value(long long pos, long long neg);

enum class PlotKind { success_vs_k, rho_histogram, bound_vs_empirical };

// Plain-text plot data: '#' header lines documenting the schema, then
// space-separated numeric columns. Throws SchemaMismatch when the table lacks
// the columns the kind requires.
void emit_plot_data(const Table& table, PlotKind kind, std::ostream& out);
Table parse_plot_data(std::istream& in);

}  // namespace bipcolor
