#pragma once

#include <string>
#include <vector>

#include "bipcolor/graph.hpp"
#include "bipcolor/lists.hpp"

namespace bipcolor {

enum class ProfileKind { uniform, linear_decay, piecewise_f };

// A per-vertex color-sampling distribution over list indices. All three kinds
// depend on the color only through its 1-based index, so one (kind, k) pair
// fixes the whole distribution.
//
//   uniform:       P(i) = 1/k
//   linear_decay:  P(i) = (8/5) / (k (1 - 3/(5k))) * (1 - (3/4) i/k)
//   piecewise_f:   P(i) = f(i) / (C k), f linear down to 13/40 past 9k/10
struct BiasProfile {
    ProfileKind kind = ProfileKind::uniform;
    double a = 1.0;       // coefficient in the list-size rule
    double p = 0.0;       // probability cap in the k-rule; <= 0 means 1/sqrt(delta)
    double gamma = 0.0;   // slack above 4/5 for linear_decay

    static BiasProfile uniform() { return {ProfileKind::uniform, 1.0, 0.0, 0.0}; }
    static BiasProfile linear_decay(double gamma = 0.0) {
        return {ProfileKind::linear_decay, 0.8 + gamma, 0.0, gamma};
    }
    static BiasProfile piecewise(double a = 0.7969) {
        return {ProfileKind::piecewise_f, a, 0.0, 0.0};
    }

    std::string name() const;
};

BiasProfile profile_from_name(const std::string& name);

// List-size rule k = ceil(a*delta / ((1-p)(log delta - 4 log log delta)));
// the piecewise_f variant rounds the inner quotient up to a multiple of 10.
// Natural logs. Throws DeltaTooSmall when the denominator is not positive.
int list_size_k(int delta, const BiasProfile& profile);

// f(x) = 1 - 3x/(4k) for x <= floor(9k/10), else 13/40. Continuous at the
// breakpoint when 10 | k since 1 - (3/4)(9/10) = 13/40.
double f_piecewise(int i, int k);

// Exact mean of f over {1..k} for 10 | k: C = 503/800 - 27/(80k).
double normalizer_C(int k);

// Probability that a vertex with list size k picks its i-th color.
double index_prob(const BiasProfile& profile, int i, int k);

// P_v(c): index_prob at I(v,c), or 0 when c is off-list.
double prob(const BiasProfile& profile, const ListAssignment& lists, Vertex v, int c);

// rho_w(c) = sum of P_v(c) over neighbors v of w that hold c. Requires w in B.
double rho(const BiasProfile& profile, const ListAssignment& lists,
           const BipartiteGraph& g, Vertex w, int c);

// Mean of rho_w(c) over the ceil(eps*k) colors of largest index in L(w).
double tail_average_rho(const BiasProfile& profile, const ListAssignment& lists,
                        const BipartiteGraph& g, Vertex w, double eps);

// Index distribution as a vector p[0..k-1] (p[i] = prob of 1-based index i+1).
std::vector<double> index_distribution(const BiasProfile& profile, int k);

// CSV "vertex,c,index,prob", one row per list entry of every vertex.
void write_prob_csv(const BiasProfile& profile, const ListAssignment& lists,
                    const BipartiteGraph& g, std::ostream& out);

}  // namespace bipcolor
