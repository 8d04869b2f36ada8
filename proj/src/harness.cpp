#include "bipcolor/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "bipcolor/colorer.hpp"
#include "bipcolor/coupon.hpp"
#include "bipcolor/rng.hpp"

namespace bipcolor {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string fmt(long long v) { return std::to_string(v); }

double cell_to_double(const std::string& s) {
    try {
        std::size_t pos = 0;
        double v = std::stod(s, &pos);
        if (pos != s.size()) throw SchemaMismatch("non-numeric cell '" + s + "'");
        return v;
    } catch (const std::invalid_argument&) {
        throw SchemaMismatch("non-numeric cell '" + s + "'");
    }
}

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) parts.push_back(trim(cur));
    return parts;
}

// Deterministic per-trial seed bundle.
struct TrialSeeds {
    std::uint64_t child, graph, lists, run;
};

TrialSeeds trial_seeds(std::uint64_t base, long long trial) {
    TrialSeeds s{};
    s.child = rng::mix_seed(base, static_cast<std::uint64_t>(trial));
    s.graph = rng::mix_seed(s.child, 0);
    s.lists = rng::mix_seed(s.child, 1);
    s.run = rng::mix_seed(s.child, 2);
    return s;
}

struct Instance {
    BipartiteGraph graph;
    ListAssignment lists;
};

Instance make_instance(const ExperimentConfig& cfg, std::uint64_t graph_seed,
                       std::uint64_t lists_seed, const BipartiteGraph* file_graph,
                       const ListAssignment* file_lists) {
    Instance inst;
    inst.graph = file_graph ? *file_graph
                            : gen_regular_bipartite(cfg.graph.n, cfg.graph.delta, graph_seed);
    if (file_lists) {
        inst.lists = *file_lists;
    } else {
        const int pool = cfg.lists.pool > 0 ? cfg.lists.pool : 4 * cfg.lists.k;
        inst.lists = gen_lists(inst.graph, cfg.lists.k, pool, cfg.lists.mode, lists_seed,
                               cfg.lists.theta);
    }
    return inst;
}

// Runs fn(trial) for all trials, at most `workers` at a time; results land in
// index order regardless of scheduling. The first exception wins and is
// rethrown on the calling thread after all workers drain.
template <typename Fn>
void for_each_trial(long long trials, int workers, Fn&& fn) {
    workers = std::max(1, workers);
    if (workers == 1 || trials <= 1) {
        for (long long t = 0; t < trials; ++t) fn(t);
        return;
    }
    std::atomic<long long> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&]() {
        for (;;) {
            long long t = next.fetch_add(1);
            if (t >= trials || failed.load()) return;
            try {
                fn(t);
            } catch (...) {
                std::scoped_lock lock(error_mutex);
                if (!error) error = std::current_exception();
                failed.store(true);
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    const int count = static_cast<int>(std::min<long long>(workers, trials));
    pool.reserve(count);
    for (int i = 0; i < count; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

void write_table(const Table& table, const std::string& path) {
    if (path.empty()) return;
    std::ofstream out(path);
    if (!out) throw IoFailure("cannot open " + path + " for writing");
    out << table.to_csv();
}

struct ColorTrialRow {
    std::uint64_t seed = 0;
    bool success = false;
    int rounds = 0;
    long long resampled = 0;
    int initial_bad = 0;
    int final_bad = 0;
};

ColorTrialRow run_color_trial(const ExperimentConfig& cfg, const BiasProfile& profile,
                              const Instance& inst, std::uint64_t run_seed) {
    const int max_rounds =
        cfg.max_rounds > 0 ? cfg.max_rounds : default_max_rounds(inst.graph);
    auto run = moser_tardos_color(inst.graph, inst.lists, profile, max_rounds, run_seed);
    ColorTrialRow row;
    row.seed = run_seed;
    row.success = run.report.success;
    row.rounds = run.report.rounds;
    row.resampled = run.report.resampled_events;
    row.initial_bad = run.report.bad_history.empty() ? 0 : run.report.bad_history.front();
    row.final_bad = run.report.bad_history.empty() ? 0 : run.report.bad_history.back();
    return row;
}

ExperimentSummary summarize_rows(const std::vector<ColorTrialRow>& rows) {
    ExperimentSummary s;
    s.trials = static_cast<long long>(rows.size());
    if (rows.empty()) return s;
    double succ = 0, rounds = 0, bad = 0;
    for (const auto& r : rows) {
        succ += r.success ? 1.0 : 0.0;
        rounds += r.rounds;
        bad += r.initial_bad;
    }
    const double n = static_cast<double>(rows.size());
    s.success_rate = succ / n;
    s.mean_rounds = rounds / n;
    s.mean_bad = bad / n;
    s.confidence_radius = 1.96 * std::sqrt(s.success_rate * (1.0 - s.success_rate) / n);
    return s;
}

CouponInstance build_coupon_instance(const ExperimentConfig& cfg) {
    const int k = cfg.coupon_k;
    const int delta = cfg.coupon_delta;
    const int pool = cfg.coupon_pool > 0 ? cfg.coupon_pool : k;
    CouponInstance inst;
    inst.p_cap = cfg.profile.p;
    auto eng = rng::make_engine(rng::mix_seed(cfg.seed, 0));
    auto gen_list = [&]() {
        std::vector<int> list;
        if (pool == k) {
            list.resize(k);
            for (int c = 0; c < k; ++c) list[c] = c + 1;
        } else {
            // Floyd sampler, sorted.
            for (int j = pool - k + 1; j <= pool; ++j) {
                int t = 1 + static_cast<int>(rng::uniform_below(eng, j));
                if (std::find(list.begin(), list.end(), t) != list.end()) {
                    list.push_back(j);
                } else {
                    list.push_back(t);
                }
            }
            std::sort(list.begin(), list.end());
        }
        return list;
    };
    inst.target = gen_list();
    auto dist = index_distribution(cfg.profile, k);
    for (int i = 0; i < delta; ++i) {
        inst.sources.push_back(gen_list());
        inst.probs.push_back(dist);
    }
    return inst;
}

}  // namespace

int Table::column_index(const std::string& name) const {
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (columns[i] == name) return static_cast<int>(i);
    }
    return -1;
}

std::string Table::to_csv() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (i > 0) out << ',';
        out << columns[i];
    }
    out << '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i > 0) out << ',';
            out << row[i];
        }
        out << '\n';
    }
    return out.str();
}

Table Table::from_csv(std::istream& in) {
    Table t;
    std::string line;
    if (!std::getline(in, line)) throw IoFailure("empty CSV");
    t.columns = split(line, ',');
    while (std::getline(in, line)) {
        if (trim(line).empty()) continue;
        auto cells = split(line, ',');
        if (cells.size() != t.columns.size()) {
            throw SchemaMismatch("CSV row width differs from header");
        }
        t.rows.push_back(std::move(cells));
    }
    return t;
}

std::map<std::string, std::string> parse_config(std::istream& in) {
    std::map<std::string, std::string> kv;
    std::string line, section;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[' && line.back() == ']') {
            section = trim(line.substr(1, line.size() - 2));
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigInvalid("line " + std::to_string(line_no) + ": expected key = value");
        }
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty()) {
            throw ConfigInvalid("line " + std::to_string(line_no) + ": empty key");
        }
        if (!section.empty()) key = section + "." + key;
        kv[key] = value;
    }
    return kv;
}

ExperimentConfig config_from_map(const std::map<std::string, std::string>& kv) {
    ExperimentConfig cfg;
    auto geti = [](const std::string& v, const std::string& key) {
        try {
            return std::stoll(v);
        } catch (...) {
            throw ConfigInvalid("key '" + key + "': expected integer, got '" + v + "'");
        }
    };
    auto getd = [](const std::string& v, const std::string& key) {
        try {
            return std::stod(v);
        } catch (...) {
            throw ConfigInvalid("key '" + key + "': expected number, got '" + v + "'");
        }
    };
    // Profile keys resolve in a fixed order (kind, gamma, a, p), independent
    // of map iteration: the bare names are aliases for the [profile] section.
    auto lookup = [&](const char* flat, const char* sect) -> const std::string* {
        if (auto it = kv.find(sect); it != kv.end()) return &it->second;
        if (auto it = kv.find(flat); it != kv.end()) return &it->second;
        return nullptr;
    };
    if (const auto* v = lookup("profile", "profile.kind")) {
        cfg.profile = profile_from_name(*v);
    }
    if (const auto* v = lookup("gamma", "profile.gamma")) {
        cfg.profile.gamma = getd(*v, "gamma");
        if (cfg.profile.kind == ProfileKind::linear_decay) {
            cfg.profile.a = 0.8 + cfg.profile.gamma;
        }
    }
    if (const auto* v = lookup("a", "profile.a")) cfg.profile.a = getd(*v, "a");
    if (const auto* v = lookup("p", "profile.p")) cfg.profile.p = getd(*v, "p");

    for (const auto& [key, value] : kv) {
        if (key == "mode") {
            if (value == "color") cfg.mode = ExperimentMode::color;
            else if (value == "coupon") cfg.mode = ExperimentMode::coupon;
            else if (value == "sweep") cfg.mode = ExperimentMode::sweep;
            else throw ConfigInvalid("mode must be color|coupon|sweep, got '" + value + "'");
        } else if (key == "trials") {
            cfg.trials = geti(value, key);
        } else if (key == "seed") {
            cfg.seed = static_cast<std::uint64_t>(geti(value, key));
        } else if (key == "out") {
            cfg.out = value;
        } else if (key == "workers") {
            cfg.workers = static_cast<int>(geti(value, key));
        } else if (key == "max_rounds") {
            cfg.max_rounds = static_cast<int>(geti(value, key));
        } else if (key == "regenerate_per_trial") {
            cfg.regenerate_per_trial = (value == "true" || value == "1");
        } else if (key == "graph.file") {
            cfg.graph.file = value;
        } else if (key == "graph.n") {
            cfg.graph.n = static_cast<int>(geti(value, key));
        } else if (key == "graph.delta") {
            cfg.graph.delta = static_cast<int>(geti(value, key));
        } else if (key == "lists.file") {
            cfg.lists.file = value;
        } else if (key == "lists.k") {
            cfg.lists.k = static_cast<int>(geti(value, key));
        } else if (key == "lists.pool") {
            cfg.lists.pool = static_cast<int>(geti(value, key));
        } else if (key == "lists.mode") {
            if (value == "uniform") cfg.lists.mode = ListMode::independent_uniform;
            else if (value == "planted") cfg.lists.mode = ListMode::planted_overlap;
            else throw ConfigInvalid("lists.mode must be uniform|planted");
        } else if (key == "lists.theta") {
            cfg.lists.theta = getd(value, key);
        } else if (key == "profile" || key == "profile.kind" || key == "a" ||
                   key == "profile.a" || key == "gamma" || key == "profile.gamma" ||
                   key == "p" || key == "profile.p") {
            // handled above, order-independently
        } else if (key == "coupon.delta") {
            cfg.coupon_delta = static_cast<int>(geti(value, key));
        } else if (key == "coupon.k") {
            cfg.coupon_k = static_cast<int>(geti(value, key));
        } else if (key == "coupon.pool") {
            cfg.coupon_pool = static_cast<int>(geti(value, key));
        } else if (key == "sweep.profiles") {
            cfg.sweep_profiles.clear();
            for (const auto& name : split(value, ',')) {
                cfg.sweep_profiles.push_back(profile_from_name(name));
            }
        } else {
            throw ConfigInvalid("unknown config key '" + key + "'");
        }
    }
    return cfg;
}

ExperimentConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigInvalid("cannot open config " + path);
    auto cfg = config_from_map(parse_config(in));
    validate_config(cfg);
    return cfg;
}

void validate_config(const ExperimentConfig& cfg) {
    if (cfg.trials < 1) throw ConfigInvalid("trials must be >= 1");
    if (cfg.workers < 1) throw ConfigInvalid("workers must be >= 1");
    auto require_file = [](const std::string& path, const std::string& what) {
        if (!path.empty() && !std::filesystem::exists(path)) {
            throw ConfigInvalid(what + " file does not exist: " + path);
        }
    };
    require_file(cfg.graph.file, "graph");
    require_file(cfg.lists.file, "lists");
    if (cfg.mode == ExperimentMode::coupon) {
        if (cfg.coupon_delta < 1 || cfg.coupon_k < 1) {
            throw ConfigInvalid("coupon mode needs coupon.delta >= 1 and coupon.k >= 1");
        }
        return;
    }
    if (!cfg.graph.from_file() && (cfg.graph.n < 1 || cfg.graph.delta < 1)) {
        throw ConfigInvalid("graph generator needs graph.n and graph.delta");
    }
    if (!cfg.lists.from_file() && cfg.lists.k < 1) {
        throw ConfigInvalid("list generator needs lists.k");
    }
    if (cfg.mode == ExperimentMode::sweep && cfg.sweep_profiles.size() < 1) {
        throw ConfigInvalid("sweep mode needs sweep.profiles");
    }
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
    validate_config(cfg);
    ExperimentResult result;

    if (cfg.mode == ExperimentMode::coupon) {
        auto inst = build_coupon_instance(cfg);
        const double empirical =
            empirical_collection_freq(inst, cfg.trials, rng::mix_seed(cfg.seed, 1));
        std::string exact = "na";
        try {
            exact = fmt(exact_collection_prob(inst, cfg.coupon_enum_cap));
        } catch (const TooLargeToEnumerate&) {
        }
        std::string analytic = "na";
        try {
            analytic = fmt(analytic_bound(inst));
        } catch (const CapViolated&) {
        }
        result.table.columns = {"trial_count", "empirical", "exact_or_na", "product_bound",
                                "analytic_bound"};
        result.table.rows.push_back({fmt(cfg.trials), fmt(empirical), exact,
                                     fmt(product_bound(inst)), analytic});
        result.summary.trials = cfg.trials;
        result.summary.success_rate = empirical;
        result.summary.confidence_radius =
            1.96 * std::sqrt(empirical * (1.0 - empirical) / static_cast<double>(cfg.trials));
        write_table(result.table, cfg.out);
        return result;
    }

    // Fixed sources are loaded once; generated ones are per-trial (or shared
    // when regeneration is off).
    std::optional<BipartiteGraph> file_graph;
    if (cfg.graph.from_file()) file_graph = load_graph_file(cfg.graph.file);
    std::optional<ListAssignment> file_lists;
    if (cfg.lists.from_file()) {
        if (!file_graph) {
            throw ConfigInvalid("lists.file requires graph.file (for the A/B split)");
        }
        file_lists = load_lists_file(cfg.lists.file, file_graph->a_size(),
                                     file_graph->b_size());
    }
    std::optional<Instance> shared;
    if (!cfg.regenerate_per_trial || (file_graph && file_lists)) {
        auto seeds = trial_seeds(rng::splitmix64(cfg.seed ^ 0x5EEDBA5Eu), 0);
        shared = make_instance(cfg, seeds.graph, seeds.lists,
                               file_graph ? &*file_graph : nullptr,
                               file_lists ? &*file_lists : nullptr);
    }

    const std::vector<BiasProfile> profiles = (cfg.mode == ExperimentMode::sweep)
                                                  ? cfg.sweep_profiles
                                                  : std::vector<BiasProfile>{cfg.profile};

    std::vector<std::vector<ColorTrialRow>> rows(
        profiles.size(), std::vector<ColorTrialRow>(cfg.trials));
    for_each_trial(cfg.trials, cfg.workers, [&](long long t) {
        auto seeds = trial_seeds(cfg.seed, t);
        Instance local;
        const Instance* inst = shared ? &*shared : nullptr;
        if (!inst) {
            local = make_instance(cfg, seeds.graph, seeds.lists,
                                  file_graph ? &*file_graph : nullptr,
                                  file_lists ? &*file_lists : nullptr);
            inst = &local;
        }
        for (std::size_t pi = 0; pi < profiles.size(); ++pi) {
            rows[pi][t] = run_color_trial(cfg, profiles[pi], *inst, seeds.run);
        }
    });

    const bool sweep = cfg.mode == ExperimentMode::sweep;
    result.table.columns = {"trial",  "seed",      "success",     "rounds",
                            "resampled", "initial_bad", "final_bad"};
    if (sweep) result.table.columns.insert(result.table.columns.begin(), "profile");
    std::vector<ColorTrialRow> flat;
    for (std::size_t pi = 0; pi < profiles.size(); ++pi) {
        for (long long t = 0; t < cfg.trials; ++t) {
            const auto& r = rows[pi][t];
            std::vector<std::string> row;
            if (sweep) row.push_back(profiles[pi].name());
            row.push_back(fmt(t));
            row.push_back(std::to_string(r.seed));
            row.push_back(r.success ? "1" : "0");
            row.push_back(fmt(static_cast<long long>(r.rounds)));
            row.push_back(fmt(r.resampled));
            row.push_back(fmt(static_cast<long long>(r.initial_bad)));
            row.push_back(fmt(static_cast<long long>(r.final_bad)));
            result.table.rows.push_back(std::move(row));
            flat.push_back(r);
        }
    }
    result.summary = summarize_rows(flat);
    write_table(result.table, cfg.out);
    return result;
}

ExperimentSummary summarize_color_table(const Table& table) {
    const int c_success = table.column_index("success");
    const int c_rounds = table.column_index("rounds");
    const int c_bad = table.column_index("initial_bad");
    if (c_success < 0 || c_rounds < 0 || c_bad < 0) {
        throw SchemaMismatch("table lacks success/rounds/initial_bad columns");
    }
    std::vector<ColorTrialRow> rows;
    rows.reserve(table.rows.size());
    for (const auto& row : table.rows) {
        ColorTrialRow r;
        r.success = cell_to_double(row[c_success]) != 0.0;
        r.rounds = static_cast<int>(cell_to_double(row[c_rounds]));
        r.initial_bad = static_cast<int>(cell_to_double(row[c_bad]));
        rows.push_back(r);
    }
    return summarize_rows(rows);
}

double sign_test_p_value(long long pos, long long neg) {
    const long long n = pos + neg;
    if (n == 0) return 1.0;
    const long long m = std::min(pos, neg);
    // Two-sided exact binomial at p = 1/2.
    double tail = 0.0;
    for (long long i = 0; i <= m; ++i) {
        const double log_term = std::lgamma(static_cast<double>(n + 1)) -
                                std::lgamma(static_cast<double>(i + 1)) -
                                std::lgamma(static_cast<double>(n - i + 1)) -
                                static_cast<double>(n) * std::log(2.0);
        tail += std::exp(log_term);
    }
    return std::min(1.0, 2.0 * tail);
}

ComparisonResult compare_profiles(const ExperimentConfig& cfg,
                                  const std::vector<BiasProfile>& profiles) {
    validate_config(cfg);
    if (profiles.size() < 2) {
        throw ConfigInvalid("compare needs at least 2 profiles");
    }
    std::optional<BipartiteGraph> file_graph;
    if (cfg.graph.from_file()) file_graph = load_graph_file(cfg.graph.file);
    std::optional<ListAssignment> file_lists;
    if (cfg.lists.from_file()) {
        if (!file_graph) {
            throw ConfigInvalid("lists.file requires graph.file (for the A/B split)");
        }
        file_lists = load_lists_file(cfg.lists.file, file_graph->a_size(),
                                     file_graph->b_size());
    }
    std::optional<Instance> shared;
    if (!cfg.regenerate_per_trial || (file_graph && file_lists)) {
        auto seeds = trial_seeds(rng::splitmix64(cfg.seed ^ 0x5EEDBA5Eu), 0);
        shared = make_instance(cfg, seeds.graph, seeds.lists,
                               file_graph ? &*file_graph : nullptr,
                               file_lists ? &*file_lists : nullptr);
    }

    ComparisonResult result;
    result.per_trial.columns = {"trial", "seed"};
    for (const auto& p : profiles) result.per_trial.columns.push_back("bad_" + p.name());

    std::vector<std::vector<long long>> bad(cfg.trials,
                                            std::vector<long long>(profiles.size()));
    std::vector<std::uint64_t> run_seeds(cfg.trials);
    for_each_trial(cfg.trials, cfg.workers, [&](long long t) {
        auto seeds = trial_seeds(cfg.seed, t);
        run_seeds[t] = seeds.run;
        Instance local;
        const Instance* inst = shared ? &*shared : nullptr;
        if (!inst) {
            local = make_instance(cfg, seeds.graph, seeds.lists,
                                  file_graph ? &*file_graph : nullptr,
                                  file_lists ? &*file_lists : nullptr);
            inst = &local;
        }
        for (std::size_t pi = 0; pi < profiles.size(); ++pi) {
            // Same run seed for every profile: paired coupling.
            auto coloring = random_color_side_a(inst->graph, inst->lists, profiles[pi],
                                                seeds.run);
            bad[t][pi] =
                static_cast<long long>(bad_vertices(inst->graph, inst->lists, coloring).size());
        }
    });

    for (long long t = 0; t < cfg.trials; ++t) {
        std::vector<std::string> row{fmt(t), std::to_string(run_seeds[t])};
        for (auto b : bad[t]) row.push_back(fmt(b));
        result.per_trial.rows.push_back(std::move(row));
    }

    for (std::size_t i = 0; i < profiles.size(); ++i) {
        for (std::size_t j = i + 1; j < profiles.size(); ++j) {
            PairedComparison pc;
            pc.profile_lhs = profiles[i].name();
            pc.profile_rhs = profiles[j].name();
            double sum_l = 0, sum_r = 0;
            for (long long t = 0; t < cfg.trials; ++t) {
                sum_l += static_cast<double>(bad[t][i]);
                sum_r += static_cast<double>(bad[t][j]);
                if (bad[t][i] < bad[t][j]) ++pc.lhs_wins;
                else if (bad[t][i] > bad[t][j]) ++pc.rhs_wins;
                else ++pc.ties;
            }
            pc.mean_lhs = sum_l / static_cast<double>(cfg.trials);
            pc.mean_rhs = sum_r / static_cast<double>(cfg.trials);
            pc.sign_test_p = sign_test_p_value(pc.lhs_wins, pc.rhs_wins);
            result.pairs.push_back(pc);
        }
    }
    if (!cfg.out.empty()) write_table(result.per_trial, cfg.out);
    return result;
}

void emit_plot_data(const Table& table, PlotKind kind, std::ostream& out) {
    auto need = [&](const std::string& name) {
        const int idx = table.column_index(name);
        if (idx < 0) throw SchemaMismatch("plot data needs column '" + name + "'");
        return idx;
    };
    switch (kind) {
        case PlotKind::success_vs_k: {
            const int ck = need("k");
            const int cs = need("success");
            std::map<double, std::pair<double, long long>> groups;  // k -> (hits, n)
            for (const auto& row : table.rows) {
                auto& g = groups[cell_to_double(row[ck])];
                g.first += cell_to_double(row[cs]);
                g.second += 1;
            }
            out << "# kind: success-vs-k\n# columns: k success_rate\n";
            for (const auto& [k, g] : groups) {
                out << fmt(k) << ' ' << fmt(g.first / static_cast<double>(g.second)) << '\n';
            }
            break;
        }
        case PlotKind::rho_histogram: {
            const int cr = need("rho");
            std::map<double, long long> bins;  // exact-value bins
            for (const auto& row : table.rows) ++bins[cell_to_double(row[cr])];
            out << "# kind: rho-histogram\n# columns: rho count\n";
            for (const auto& [v, n] : bins) out << fmt(v) << ' ' << n << '\n';
            break;
        }
        case PlotKind::bound_vs_empirical: {
            const int ce = need("empirical");
            const int cp = need("product_bound");
            const int ca = need("analytic_bound");
            out << "# kind: bound-vs-empirical\n# columns: empirical product_bound analytic_bound\n";
            for (const auto& row : table.rows) {
                out << row[ce] << ' ' << row[cp] << ' ' << row[ca] << '\n';
            }
            break;
        }
    }
}

Table parse_plot_data(std::istream& in) {
    Table t;
    std::string line;
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '#') {
            const std::string tag = "# columns:";
            if (line.rfind(tag, 0) == 0) {
                std::istringstream names(line.substr(tag.size()));
                std::string name;
                while (names >> name) t.columns.push_back(name);
            }
            continue;
        }
        std::istringstream cells(line);
        std::vector<std::string> row;
        std::string cell;
        while (cells >> cell) row.push_back(cell);
        if (!t.columns.empty() && row.size() != t.columns.size()) {
            throw SchemaMismatch("plot row width differs from declared columns");
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

}  // namespace bipcolor
