#pragma once

#include <cmath>
#include <functional>
#include <vector>

#include "onf/errors.hpp"
#include "onf/linalg.hpp"

namespace onf {

// Dense Levenberg-Marquardt for small curve fits (<= ~6 parameters).
// Residual functor fills r(params); the Jacobian is numeric (central
// differences). Iteration cap and step tolerance follow the documented
// analysis defaults.
struct LevMarOptions {
    int max_iterations = 200;
    double step_tol = 1e-10;  // relative parameter step
    double lambda0 = 1e-3;
};

struct LevMarResult {
    std::vector<double> params;
    std::vector<double> stderr_;     // per-parameter standard errors
    double ssr = 0.0;                // sum of squared residuals at optimum
    int iterations = 0;
    bool converged = false;
    std::size_t n_data = 0;
};



inline LevMarResult levmar_fit(
    const std::function<void(const std::vector<double>&, std::vector<double>&)>& residuals,
    std::vector<double> p, std::size_t n_data, const LevMarOptions& opt = {}) {
    const std::size_t np = p.size();
    std::vector<double> r(n_data), r_try(n_data);
    std::vector<double> jac(n_data * np);

    auto ssr_of = [&](const std::vector<double>& rr) {
        double s = 0.0;
        for (double v : rr) s += v * v;
        return s;
    };

    residuals(p, r);
    double ssr = ssr_of(r);
    double lambda = opt.lambda0;

    LevMarResult out;
    out.n_data = n_data;

    std::vector<double> p_step(np), p_try(np), rhs(np), JtJ(np * np);
    int it = 0;
    for (; it < opt.max_iterations; ++it) {
        // numeric Jacobian, central differences
        for (std::size_t j = 0; j < np; ++j) {
            const double h = 1e-6 * std::max(std::fabs(p[j]), 1e-12);
            std::vector<double> pp = p, pm = p;
            pp[j] += h;
            pm[j] -= h;
            std::vector<double> rp(n_data), rm(n_data);
            residuals(pp, rp);
            residuals(pm, rm);
            for (std::size_t i = 0; i < n_data; ++i)
                jac[i * np + j] = (rp[i] - rm[i]) / (2.0 * h);
        }
        for (std::size_t a = 0; a < np; ++a) {
            rhs[a] = 0.0;
            for (std::size_t b = 0; b < np; ++b) JtJ[a * np + b] = 0.0;
        }
        for (std::size_t i = 0; i < n_data; ++i)
            for (std::size_t a = 0; a < np; ++a) {
                rhs[a] -= jac[i * np + a] * r[i];
                for (std::size_t b = a; b < np; ++b)
                    JtJ[a * np + b] += jac[i * np + a] * jac[i * np + b];
            }
        for (std::size_t a = 0; a < np; ++a)
            for (std::size_t b = 0; b < a; ++b) JtJ[a * np + b] = JtJ[b * np + a];

        bool stepped = false;
        for (int attempt = 0; attempt < 32; ++attempt) {
            std::vector<double> M = JtJ;
            for (std::size_t a = 0; a < np; ++a) M[a * np + a] += lambda * JtJ[a * np + a] + 1e-300;
            if (!linalg::solve(M, rhs, p_step)) {
                lambda *= 10.0;
                continue;
            }
            for (std::size_t a = 0; a < np; ++a) p_try[a] = p[a] + p_step[a];
            residuals(p_try, r_try);
            const double ssr_try = ssr_of(r_try);
            if (ssr_try <= ssr) {
                double rel = 0.0;
                for (std::size_t a = 0; a < np; ++a)
                    rel = std::max(rel, std::fabs(p_step[a]) /
                                            std::max(std::fabs(p[a]), 1e-30));
                p = p_try;
                r = r_try;
                ssr = ssr_try;
                lambda = std::max(lambda * 0.3, 1e-12);
                stepped = true;
                if (rel < opt.step_tol) {
                    out.converged = true;
                }
                break;
            }
            lambda *= 10.0;
        }
        if (out.converged) break;
        if (!stepped) {
            // no downhill direction at any damping: treat as converged if the
            // gradient is already negligible, else report failure below
            double gnorm = 0.0;
            for (double g : rhs) gnorm += g * g;
            if (gnorm < 1e-24 * (1.0 + ssr)) out.converged = true;
            break;
        }
    }
    out.iterations = it + 1;
    out.params = p;
    out.ssr = ssr;

    // covariance = s^2 (J^T J)^-1 with s^2 = ssr / (n - p)
    out.stderr_.assign(np, 0.0);
    if (n_data > np) {
        std::vector<double> inv;
        if (linalg::invert(JtJ, np, inv)) {
            const double s2 = ssr / static_cast<double>(n_data - np);
            for (std::size_t a = 0; a < np; ++a) {
                const double v = inv[a * np + a] * s2;
                out.stderr_[a] = v > 0.0 ? std::sqrt(v) : 0.0;
            }
        }
    }
    return out;
}

}  // namespace onf
