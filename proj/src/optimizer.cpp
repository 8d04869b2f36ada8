#include "bipcolor/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace bipcolor {

bool ConstraintBox::feasible(double a, double y, double z, double tol) const {
    return a >= a_lo - tol && a <= a_hi + tol && y >= y_lo - tol && y <= y_hi + tol &&
           z >= z_lo - tol && z <= z_hi + tol && z - a * y <= cut + tol;
}

double g_linear(double a, double y, double z) { return z - (0.9 + a) * y; }

double h_objective(double a, double y, double z) {
    if (y >= 1.0) throw SingularAtYOne("h undefined at y >= 1");
    const double g = g_linear(a, y, z);
    const double scale = 800.0 / 503.0;
    return scale * g * (1.0 - 0.375 * g / (1.0 - y)) +
           scale * y * (477.0 / 800.0 + 13.0 / 40.0 * a);
}

namespace {

struct Point {
    double a = 0.0, y = 0.0, z = 0.0;
};

Point project(const ConstraintBox& box, Point p) {
    p.a = std::clamp(p.a, box.a_lo, box.a_hi);
    p.y = std::clamp(p.y, box.y_lo, box.y_hi);
    p.z = std::clamp(p.z, box.z_lo, box.z_hi);
    // The cut z - a*y <= c binds from above; pulling z down restores it.
    p.z = std::min(p.z, box.cut + p.a * p.y);
    p.z = std::max(p.z, box.z_lo);
    return p;
}

// Nelder-Mead (maximization) on the projected feasible set. Keeps the best
// point ever evaluated; deterministic.
void nelder_mead(const Objective& fn, const ConstraintBox& box, Point start,
                 double init_step, double tol, int max_iters, Point& best_pt,
                 double& best_val, long long& evals) {
    auto eval = [&](Point p) {
        p = project(box, p);
        ++evals;
        const double v = fn(p.a, p.y, p.z);
        if (v > best_val) {
            best_val = v;
            best_pt = p;
        }
        return v;
    };

    std::array<Point, 4> xs;
    std::array<double, 4> fs;
    xs[0] = project(box, start);
    xs[1] = project(box, {start.a + init_step, start.y, start.z});
    xs[2] = project(box, {start.a, start.y + init_step, start.z});
    xs[3] = project(box, {start.a, start.y, start.z + init_step});
    for (int i = 0; i < 4; ++i) fs[i] = eval(xs[i]);

    auto order = [&]() {
        std::array<int, 4> idx{0, 1, 2, 3};
        std::sort(idx.begin(), idx.end(), [&](int l, int r) { return fs[l] > fs[r]; });
        std::array<Point, 4> x2;
        std::array<double, 4> f2;
        for (int i = 0; i < 4; ++i) {
            x2[i] = xs[idx[i]];
            f2[i] = fs[idx[i]];
        }
        xs = x2;
        fs = f2;
    };

    for (int iter = 0; iter < max_iters; ++iter) {
        order();
        if (std::abs(fs[0] - fs[3]) <= tol) break;
        Point c{(xs[0].a + xs[1].a + xs[2].a) / 3.0, (xs[0].y + xs[1].y + xs[2].y) / 3.0,
                (xs[0].z + xs[1].z + xs[2].z) / 3.0};
        auto blend = [&](double t) {
            return Point{c.a + t * (c.a - xs[3].a), c.y + t * (c.y - xs[3].y),
                         c.z + t * (c.z - xs[3].z)};
        };
        Point xr = project(box, blend(1.0));
        double fr = eval(xr);
        if (fr > fs[0]) {
            Point xe = project(box, blend(2.0));
            double fe = eval(xe);
            if (fe > fr) {
                xs[3] = xe;
                fs[3] = fe;
            } else {
                xs[3] = xr;
                fs[3] = fr;
            }
        } else if (fr > fs[2]) {
            xs[3] = xr;
            fs[3] = fr;
        } else {
            Point xc = project(box, blend(fr > fs[3] ? 0.5 : -0.5));
            double fc = eval(xc);
            if (fc > std::max(fr, fs[3])) {
                xs[3] = xc;
                fs[3] = fc;
            } else {
                for (int i = 1; i < 4; ++i) {
                    xs[i] = project(box, {xs[0].a + 0.5 * (xs[i].a - xs[0].a),
                                          xs[0].y + 0.5 * (xs[i].y - xs[0].y),
                                          xs[0].z + 0.5 * (xs[i].z - xs[0].z)});
                    fs[i] = eval(xs[i]);
                }
            }
        }
    }
}

}  // namespace

MaximizeResult maximize_objective(const Objective& fn, const ConstraintBox& box,
                                  double grid_step, double refine_tol) {
    MaximizeResult result;
    result.value = -HUGE_VAL;
    Point best;

    // Stage 1: dense grid over the box, skipping points beyond the cut.
    for (double a = box.a_lo;; a += grid_step) {
        a = std::min(a, box.a_hi);
        for (double y = box.y_lo;; y += grid_step) {
            y = std::min(y, box.y_hi);
            if (y < 1.0) {
                const double z_cap = std::min(box.z_hi, box.cut + a * y);
                for (double z = box.z_lo;; z += grid_step) {
                    z = std::min(z, z_cap);
                    ++result.evaluations;
                    const double v = fn(a, y, z);
                    if (v > result.value) {
                        result.value = v;
                        best = {a, y, z};
                    }
                    if (z >= z_cap) break;
                }
            }
            if (y >= box.y_hi) break;
        }
        if (a >= box.a_hi) break;
    }
    result.grid_value = result.value;

    // Stage 2: simplex refinement from the grid optimum, then once more from
    // the refined point with a smaller step.
    nelder_mead(fn, box, best, grid_step, refine_tol, 2000, best, result.value,
                result.evaluations);
    nelder_mead(fn, box, best, 0.1 * grid_step, refine_tol, 2000, best, result.value,
                result.evaluations);

    result.argmax = {best.a, best.y, best.z};
    return result;
}

MaximizeResult maximize_h(const ConstraintBox& box, double grid_step, double refine_tol) {
    return maximize_objective(h_objective, box, grid_step, refine_tol);
}

double branch_one_value(double z_minus_ay, double eps) {
    return 800.0 / 503.0 * (1.0 + 0.75 * (-z_minus_ay + eps));
}

Certificate coefficient_certificate(double grid_step, double refine_tol,
                                    const Objective& objective) {
    ConstraintBox box;
    Certificate cert;
    cert.branch_one = branch_one_value(box.cut, 0.0);
    auto max_result = maximize_objective(objective, box, grid_step, refine_tol);
    cert.branch_two_max = max_result.value;
    cert.argmax = max_result.argmax;
    cert.margin_one = cert.threshold - cert.branch_one;
    cert.margin_two = cert.threshold - cert.branch_two_max;

    char buf[512];
    std::snprintf(buf, sizeof(buf),
                  "coefficient certificate (threshold %.4f)\n"
                  "  branch 1: cut boundary value %.12f, margin %.3e\n"
                  "  branch 2: constrained max   %.12f, margin %.3e\n"
                  "            argmax a=%.12f y=%.12f z=%.12f\n",
                  cert.threshold, cert.branch_one, cert.margin_one, cert.branch_two_max,
                  cert.margin_two, cert.argmax[0], cert.argmax[1], cert.argmax[2]);
    cert.text = buf;

    if (!(cert.margin_one > 0.0) || !(cert.margin_two > 0.0)) {
        throw CertificateFailed("a branch value reaches the threshold\n" + cert.text);
    }
    return cert;
}

}  // namespace bipcolor
