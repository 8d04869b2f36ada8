#pragma once

#include <array>
#include <functional>
#include <string>

#include "bipcolor/errors.hpp"

namespace bipcolor {

// Feasible region of the constrained maximization: a box in (a, y, z) plus
// one bilinear cut z - a*y <= cut.
struct ConstraintBox {
    double a_lo = 0.0, a_hi = 0.1;
    double y_lo = 0.0, y_hi = 0.9;
    double z_lo = 0.0, z_hi = 0.8;
    double cut = 0.66535;  // z - a*y <= cut

    bool feasible(double a, double y, double z, double tol = 0.0) const;
};

using Objective = std::function<double(double, double, double)>;

// g(a, y, z) = z - (9/10 + a) * y.
double g_linear(double a, double y, double z);

// h(a,y,z) = (800/503) [ g (1 - 0.375 g / (1-y)) + y (477/800 + (13/40) a) ].
// Throws SingularAtYOne when y >= 1.
double h_objective(double a, double y, double z);

struct MaximizeResult {
    double value = 0.0;
    std::array<double, 3> argmax{0.0, 0.0, 0.0};  // (a, y, z)
    double grid_value = 0.0;                      // best value before refinement
    long long evaluations = 0;
};

// Dense feasible-grid scan followed by a projected Nelder-Mead refinement.
// Deterministic for fixed inputs.
MaximizeResult maximize_h(const ConstraintBox& box, double grid_step,
                          double refine_tol);
MaximizeResult maximize_objective(const Objective& fn, const ConstraintBox& box,
                                  double grid_step, double refine_tol);

// First-branch coefficient (800/503) (1 + (3/4)(-z_minus_ay + eps)).
double branch_one_value(double z_minus_ay, double eps);

struct Certificate {
    double branch_one = 0.0;       // value at the cut boundary, eps = 0
    double branch_two_max = 0.0;   // maximize_h over the constrained region
    std::array<double, 3> argmax{0.0, 0.0, 0.0};
    double margin_one = 0.0;       // threshold - branch_one
    double margin_two = 0.0;       // threshold - branch_two_max
    double threshold = 0.7969;
    std::string text;              // human-readable report, byte-stable
};

// Runs both branches and asserts each stays below the threshold with positive
// margin; throws CertificateFailed otherwise. An alternative objective can be
// substituted (used by mutation tests).
Certificate coefficient_certificate(double grid_step = 1e-3, double refine_tol = 1e-10,
                                    const Objective& objective = h_objective);

}  // namespace bipcolor
