#pragma once

#include <cstdint>
#include <vector>

#include "bipcolor/errors.hpp"

namespace bipcolor {

// One coupon-collection experiment: Delta independent sources, source i draws
// one color from its list via the distribution probs[i]. The question is
// whether every color of `target` gets drawn by someone.
struct CouponInstance {
    std::vector<int> target;                   // L', sorted
    std::vector<std::vector<int>> sources;     // L_1..L_Delta, each sorted
    std::vector<std::vector<double>> probs;    // aligned with sources
    double p_cap = 0.0;                        // all P_i(c) < p_cap; <=0 means infer

    int delta() const { return static_cast<int>(sources.size()); }
    // Effective cap: explicit value, or max P_i(c) + 1e-12 when unset.
    double effective_cap() const;
    // Checks each distribution sums to 1 within 1e-12 and respects the cap.
    void validate() const;
};

// One color per source, independently sampled. Deterministic per seed.
std::vector<int> sample_draws(const CouponInstance& inst, std::uint64_t seed);

// True iff every target color appears among the draws.
bool is_collected(const std::vector<int>& target, const std::vector<int>& draws);

// Exact Pr(target ⊆ draws) by enumerating all outcome tuples. The tuple count
// (product of list sizes) must not exceed the cap.
double exact_collection_prob(const CouponInstance& inst,
                             long long enumeration_cap = 10'000'000);

// rho(c) = sum_i P_i(c).
double rho_total(const CouponInstance& inst, int c);

// Pr(B_c) = 1 - prod_i (1 - P_i(c)), accumulated in log space.
double per_color_prob(const CouponInstance& inst, int c);

// exp(-sum_{c in target} exp(-rho(c)/(1-p))). Requires every P_i(c) < p < 1.
double analytic_bound(const CouponInstance& inst);

// prod_{c in target} Pr(B_c); dominates the exact collection probability
// because the collection events are negatively correlated.
double product_bound(const CouponInstance& inst);

// True iff mean_{c in subset} rho(c) <= a * delta / k.
bool lemma_premise_check(const CouponInstance& inst, const std::vector<int>& subset,
                         double a, int delta, int k);

// Monte Carlo estimate of the collection probability over `trials` runs with
// per-trial derived seeds. Returns the empirical frequency.
double empirical_collection_freq(const CouponInstance& inst, long long trials,
                                 std::uint64_t seed);

}  // namespace bipcolor
