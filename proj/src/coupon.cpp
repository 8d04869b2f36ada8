#include "bipcolor/coupon.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>

#include "bipcolor/rng.hpp"

namespace bipcolor {

namespace {

double max_prob(const CouponInstance& inst) {
    double m = 0.0;
    for (const auto& ps : inst.probs) {
        for (double p : ps) m = std::max(m, p);
    }
    return m;
}

}  // namespace

double CouponInstance::effective_cap() const {
    if (p_cap > 0.0) return p_cap;
    return max_prob(*this) + 1e-12;
}

void CouponInstance::validate() const {
    if (sources.size() != probs.size()) {
        throw CapViolated("sources and probs differ in length");
    }
    const double cap = effective_cap();
    for (std::size_t i = 0; i < sources.size(); ++i) {
        if (sources[i].size() != probs[i].size()) {
            throw CapViolated("source " + std::to_string(i) + " misaligned with probs");
        }
        double total = 0.0;
        for (double p : probs[i]) {
            if (p < 0.0 || p >= cap) {
                throw CapViolated("P_" + std::to_string(i) + " violates the cap");
            }
            total += p;
        }
        if (std::abs(total - 1.0) > 1e-12) {
            throw CapViolated("P_" + std::to_string(i) + " sums to " + std::to_string(total));
        }
    }
}

std::vector<int> sample_draws(const CouponInstance& inst, std::uint64_t seed) {
    auto eng = rng::make_engine(seed);
    std::vector<int> draws(inst.sources.size());
    for (std::size_t i = 0; i < inst.sources.size(); ++i) {
        const auto& ps = inst.probs[i];
        const double u = rng::uniform_double(eng);
        double cum = 0.0;
        std::size_t pick = ps.size() - 1;  // tail absorbs rounding
        for (std::size_t j = 0; j < ps.size(); ++j) {
            cum += ps[j];
            if (u < cum) {
                pick = j;
                break;
            }
        }
        draws[i] = inst.sources[i][pick];
    }
    return draws;
}

bool is_collected(const std::vector<int>& target, const std::vector<int>& draws) {
    for (int c : target) {
        if (std::find(draws.begin(), draws.end(), c) == draws.end()) return false;
    }
    return true;
}

double exact_collection_prob(const CouponInstance& inst, long long enumeration_cap) {
    const int t = static_cast<int>(inst.target.size());
    if (t == 0) return 1.0;
    if (t > 62) throw TooLargeToEnumerate("target too large for the coverage mask");
    long long tuples = 1;
    for (const auto& src : inst.sources) {
        if (src.empty()) continue;
        if (tuples > enumeration_cap / static_cast<long long>(src.size())) {
            throw TooLargeToEnumerate("outcome tuple count exceeds cap");
        }
        tuples *= static_cast<long long>(src.size());
    }
    const std::uint64_t full = (t == 62) ? ~0ULL >> 2 : (1ULL << t) - 1;

    // Precompute the target-bit of each source entry (-1 = not a target color).
    std::vector<std::vector<int>> bit(inst.sources.size());
    for (std::size_t i = 0; i < inst.sources.size(); ++i) {
        bit[i].resize(inst.sources[i].size());
        for (std::size_t j = 0; j < inst.sources[i].size(); ++j) {
            auto it = std::lower_bound(inst.target.begin(), inst.target.end(),
                                       inst.sources[i][j]);
            bit[i][j] = (it != inst.target.end() && *it == inst.sources[i][j])
                            ? static_cast<int>(it - inst.target.begin())
                            : -1;
        }
    }

    double total = 0.0;
    const int n = static_cast<int>(inst.sources.size());
    // Depth-first over outcome tuples; prune when the remaining sources cannot
    // cover the missing colors.
    auto recurse = [&](auto&& self, int i, std::uint64_t covered, double weight) -> void {
        const int missing = std::popcount(full & ~covered);
        if (missing == 0) {
            total += weight;
            return;
        }
        if (n - i < missing) return;
        for (std::size_t j = 0; j < inst.probs[i].size(); ++j) {
            const double p = inst.probs[i][j];
            if (p == 0.0) continue;
            std::uint64_t next = covered;
            if (bit[i][j] >= 0) next |= 1ULL << bit[i][j];
            self(self, i + 1, next, weight * p);
        }
    };
    recurse(recurse, 0, 0, 1.0);
    return total;
}

double rho_total(const CouponInstance& inst, int c) {
    double total = 0.0;
    for (std::size_t i = 0; i < inst.sources.size(); ++i) {
        auto it = std::lower_bound(inst.sources[i].begin(), inst.sources[i].end(), c);
        if (it != inst.sources[i].end() && *it == c) {
            total += inst.probs[i][it - inst.sources[i].begin()];
        }
    }
    return total;
}

double per_color_prob(const CouponInstance& inst, int c) {
    double log_miss = 0.0;  // log prod (1 - P_i(c))
    for (std::size_t i = 0; i < inst.sources.size(); ++i) {
        auto it = std::lower_bound(inst.sources[i].begin(), inst.sources[i].end(), c);
        if (it == inst.sources[i].end() || *it != c) continue;
        const double p = inst.probs[i][it - inst.sources[i].begin()];
        if (p >= 1.0) return 1.0;
        log_miss += std::log1p(-p);
    }
    if (log_miss < -690.0) return 1.0;  // below double underflow of the product
    return -std::expm1(log_miss);
}

double analytic_bound(const CouponInstance& inst) {
    const double cap = inst.effective_cap();
    if (!(cap < 1.0)) {
        throw CapViolated("analytic bound needs p < 1");
    }
    if (max_prob(inst) >= cap) {
        throw CapViolated("some P_i(c) reaches the cap");
    }
    double inner = 0.0;
    for (int c : inst.target) {
        inner += std::exp(-rho_total(inst, c) / (1.0 - cap));
    }
    return std::exp(-inner);
}

double product_bound(const CouponInstance& inst) {
    double log_total = 0.0;
    for (int c : inst.target) {
        const double pc = per_color_prob(inst, c);
        if (pc <= 0.0) return 0.0;
        log_total += std::log(pc);
    }
    return std::exp(log_total);
}

bool lemma_premise_check(const CouponInstance& inst, const std::vector<int>& subset,
                         double a, int delta, int k) {
    if (subset.empty()) throw EmptySubset("premise check needs a nonempty subset");
    double total = 0.0;
    for (int c : subset) total += rho_total(inst, c);
    const double mean = total / static_cast<double>(subset.size());
    return mean <= a * static_cast<double>(delta) / static_cast<double>(k);
}

double empirical_collection_freq(const CouponInstance& inst, long long trials,
                                 std::uint64_t seed) {
    long long hits = 0;
    for (long long t = 0; t < trials; ++t) {
        auto draws = sample_draws(inst, rng::mix_seed(seed, static_cast<std::uint64_t>(t)));
        if (is_collected(inst.target, draws)) ++hits;
    }
    return static_cast<double>(hits) / static_cast<double>(trials);
}

}  // namespace bipcolor
