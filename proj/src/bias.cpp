#include "bipcolor/bias.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

namespace bipcolor {

std::string BiasProfile::name() const {
    switch (kind) {
        case ProfileKind::uniform: return "uniform";
        case ProfileKind::linear_decay: return "linear";
        case ProfileKind::piecewise_f: return "piecewise";
    }
    return "unknown";
}

BiasProfile profile_from_name(const std::string& name) {
    if (name == "uniform") return BiasProfile::uniform();
    if (name == "linear") return BiasProfile::linear_decay();
    if (name == "piecewise") return BiasProfile::piecewise();
    throw ConfigInvalid("unknown profile '" + name + "' (uniform|linear|piecewise)");
}

int list_size_k(int delta, const BiasProfile& profile) {
    if (delta <= 1) throw DeltaTooSmall("delta must exceed 1");
    const double log_d = std::log(static_cast<double>(delta));
    const double denom_log = log_d - 4.0 * std::log(log_d);
    if (!(denom_log > 0.0)) {
        throw DeltaTooSmall("log d - 4 log log d <= 0 at delta=" + std::to_string(delta));
    }
    const double p = profile.p > 0.0 ? profile.p : 1.0 / std::sqrt(static_cast<double>(delta));
    if (p >= 1.0) throw DeltaTooSmall("probability cap must stay below 1");
    const double quotient = profile.a * delta / ((1.0 - p) * denom_log);
    if (profile.kind == ProfileKind::piecewise_f) {
        return 10 * static_cast<int>(std::ceil(quotient / 10.0));
    }
    return static_cast<int>(std::ceil(quotient));
}

double f_piecewise(int i, int k) {
    if (i < 1 || i > k) {
        throw IndexOutOfRange("index " + std::to_string(i) + " outside [1," +
                              std::to_string(k) + "]");
    }
    if (i <= (9 * k) / 10) {
        return 1.0 - 3.0 * i / (4.0 * k);
    }
    return 13.0 / 40.0;
}

double normalizer_C(int k) {
    if (k < 10 || k % 10 != 0) {
        throw NotDivisibleBy10("normalizer_C requires 10 | k, got " + std::to_string(k));
    }
    // 503/800 - 27/(80k), written as one division so the result is the
    // correctly rounded value of the exact rational.
    return (503.0 * k - 270.0) / (800.0 * k);
}

namespace {

// Mean of f over {1..k} for arbitrary k >= 1, via the integer sum of
// f(i)*40k (each term is an integer for both branches).
double mean_f(int k) {
    if (k % 10 == 0) return normalizer_C(k);
    long long sum40k = 0;
    const int cut = (9 * k) / 10;
    for (int i = 1; i <= cut; ++i) sum40k += 40LL * k - 30LL * i;
    sum40k += 13LL * k * (k - cut);
    return static_cast<double>(sum40k) / (40.0 * k * k);
}

}  // namespace

double index_prob(const BiasProfile& profile, int i, int k) {
    if (i < 1 || i > k) {
        throw IndexOutOfRange("index " + std::to_string(i) + " outside [1," +
                              std::to_string(k) + "]");
    }
    switch (profile.kind) {
        case ProfileKind::uniform:
            return 1.0 / k;
        case ProfileKind::linear_decay:
            // (8/5) / (k (1 - 3/(5k))) = 8 / (5k - 3)
            return 8.0 / (5.0 * k - 3.0) * (1.0 - 0.75 * i / k);
        case ProfileKind::piecewise_f:
            return f_piecewise(i, k) / (mean_f(k) * k);
    }
    return 0.0;
}

double prob(const BiasProfile& profile, const ListAssignment& lists, Vertex v, int c) {
    auto idx = index_of(lists, v, c);
    if (!idx) return 0.0;
    return index_prob(profile, *idx, lists.k);
}

double rho(const BiasProfile& profile, const ListAssignment& lists,
           const BipartiteGraph& g, Vertex w, int c) {
    if (w.side != Side::b) throw WrongPart("rho requires a part-B vertex");
    double total = 0.0;
    for (int v : g.neighbors(w)) {
        total += prob(profile, lists, Vertex::a(v), c);
    }
    return total;
}

double tail_average_rho(const BiasProfile& profile, const ListAssignment& lists,
                        const BipartiteGraph& g, Vertex w, double eps) {
    if (!(eps > 0.0 && eps <= 1.0)) {
        throw IndexOutOfRange("eps must lie in (0,1]");
    }
    const int k = lists.k;
    const int tail = std::min(k, static_cast<int>(std::ceil(eps * k)));
    auto lw = lists.list(w);
    double total = 0.0;
    for (int pos = k - tail; pos < k; ++pos) {
        total += rho(profile, lists, g, w, lw[pos]);
    }
    return total / tail;
}

std::vector<double> index_distribution(const BiasProfile& profile, int k) {
    std::vector<double> dist(k);
    for (int i = 1; i <= k; ++i) dist[i - 1] = index_prob(profile, i, k);
    return dist;
}

void write_prob_csv(const BiasProfile& profile, const ListAssignment& lists,
                    const BipartiteGraph& g, std::ostream& out) {
    out << "vertex,c,index,prob\n";
    auto dist = index_distribution(profile, lists.k);
    auto dump_side = [&](const std::vector<std::vector<int>>& side, int offset) {
        for (std::size_t v = 0; v < side.size(); ++v) {
            for (std::size_t i = 0; i < side[v].size(); ++i) {
                out << offset + static_cast<int>(v) << ',' << side[v][i] << ','
                    << i + 1 << ',' << dist[i] << '\n';
            }
        }
    };
    dump_side(lists.lists_a, 0);
    dump_side(lists.lists_b, g.a_size());
}

}  // namespace bipcolor
