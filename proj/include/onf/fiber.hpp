#pragma once

#include <cmath>
#include <map>
#include <string>

#include "onf/bessel.hpp"
#include "onf/constants.hpp"
#include "onf/errors.hpp"

namespace onf {

// Fused-silica refractive index, Malitson Sellmeier form. Valid through the
// 0.21-3.7 um transparency window; covers all four experiment wavelengths.
inline double silica_index(double wavelength) {
    const double l2 = (wavelength * 1e6) * (wavelength * 1e6);
    const double n2 = 1.0 + 0.6961663 * l2 / (l2 - 0.0684043 * 0.0684043) +
                      0.4079426 * l2 / (l2 - 0.1162414 * 0.1162414) +
                      0.8974794 * l2 / (l2 - 9.896161 * 9.896161);
    return std::sqrt(n2);
}

// Core index model: fused silica dispersion, a fixed value, or a
// per-wavelength table from config (nearest entry within 1 nm).
class CoreIndex {
  public:
    static CoreIndex silica() { return CoreIndex(Kind::Silica); }
    static CoreIndex fixed(double n) {
        CoreIndex m(Kind::Fixed);
        m.fixed_ = n;
        return m;
    }
    static CoreIndex table(std::map<double, double> entries) {
        CoreIndex m(Kind::Table);
        m.table_ = std::move(entries);
        return m;
    }

    double at(double wavelength) const {
        switch (kind_) {
            case Kind::Silica: return silica_index(wavelength);
            case Kind::Fixed: return fixed_;
            case Kind::Table: {
                for (const auto& [lam, n] : table_)
                    if (std::fabs(lam - wavelength) < 1e-9) return n;
                throw ConfigError("core index table has no entry within 1 nm of " +
                                  std::to_string(wavelength * 1e9) + " nm");
            }
        }
        return 0.0;
    }

    bool operator==(const CoreIndex&) const = default;

  private:
    enum class Kind { Silica, Fixed, Table };
    explicit CoreIndex(Kind k) : kind_(k) {}
    Kind kind_;
    double fixed_ = 0.0;
    std::map<double, double> table_;
};

struct FiberSpec {
    double radius = 0.0;  // m
    CoreIndex core_index = CoreIndex::silica();
    double cladding_index = 1.0;  // vacuum

    void validate(double wavelength) const {
        if (radius <= 0.0) throw ValidationError("fiber radius must be > 0");
        if (cladding_index < 1.0)
            throw ValidationError("cladding index must be >= 1");
        if (core_index.at(wavelength) <= cladding_index)
            throw ValidationError("core index must exceed cladding index");
    }

    bool operator==(const FiberSpec&) const = default;
};

// Exact fundamental-mode solution of the step-index cylinder.
struct ModeSolution {
    double wavelength = 0.0;  // m
    double beta = 0.0;        // rad/m
    double q = 0.0;           // 1/m, outside decay constant
    double h = 0.0;           // 1/m, inside transverse wavenumber
    double s = 0.0;           // HE11 hybrid field-mix factor
    double power_norm = 0.0;  // multiplies squared fields: 1 W <-> C^2 = power_norm
    double n_core = 0.0;
    double n_clad = 0.0;
    double v_number = 0.0;

    double k() const { return constants::two_pi / wavelength; }
};

inline double v_number(const FiberSpec& fiber, double wavelength) {
    const double n1 = fiber.core_index.at(wavelength);
    const double n2 = fiber.cladding_index;
    return constants::two_pi / wavelength * fiber.radius * std::sqrt(n1 * n1 - n2 * n2);
}

inline constexpr double kSingleModeCutoffV = 2.405;  // first zero of J0: TE01/TM01 cutoff

// HE11 characteristic function; zero at the propagation constant. This is
// the nu=1 hybrid-mode eigenvalue equation of the step-index cylinder with
// the quadratic in J1'/(u J1) resolved on the HE branch:
//   J0(u)/(u J1(u)) - 1/u^2 = -(n1^2+n2^2)/(2 n1^2) K - R,
//   K = K1'(w)/(w K1(w)),
//   R = sqrt( ((n1^2-n2^2)/(2 n1^2))^2 K^2 + (beta/(n1 k))^2 (1/u^2 + 1/w^2)^2 ).
inline double he11_characteristic(const FiberSpec& fiber, double wavelength, double beta) {
    const double a = fiber.radius;
    const double kk = constants::two_pi / wavelength;
    const double n1 = fiber.core_index.at(wavelength);
    const double n2 = fiber.cladding_index;
    const double h2 = n1 * n1 * kk * kk - beta * beta;
    const double q2 = beta * beta - n2 * n2 * kk * kk;
    const double u = std::sqrt(h2) * a;
    const double w = std::sqrt(q2) * a;
    const double j0 = bessel::j(0, u), j1 = bessel::j(1, u);
    const auto ks = bessel::k_set(w);
    const double k1p = -0.5 * (ks.k0 + ks.k2);
    const double K = k1p / (w * ks.k1);
    const double R = std::sqrt(std::pow((n1 * n1 - n2 * n2) / (2.0 * n1 * n1) * K, 2) +
                               std::pow(beta / (n1 * kk) * (1.0 / (u * u) + 1.0 / (w * w)), 2));
    return j0 / (u * j1) + (n1 * n1 + n2 * n2) / (2.0 * n1 * n1) * K - 1.0 / (u * u) + R;
}

namespace detail {
// Completes the derived quantities (q, h, s) once beta is known.
inline void fill_mode_geometry(ModeSolution& m, const FiberSpec& fiber) {
    const double kk = m.k();
    m.h = std::sqrt(m.n_core * m.n_core * kk * kk - m.beta * m.beta);
    m.q = std::sqrt(m.beta * m.beta - m.n_clad * m.n_clad * kk * kk);
    const double u = m.h * fiber.radius;
    const double w = m.q * fiber.radius;
    const double j1 = bessel::j(1, u);
    const double j1p = bessel::j(0, u) - j1 / u;
    const auto ks = bessel::k_set(w);
    const double k1p = -0.5 * (ks.k0 + ks.k2);
    m.s = (1.0 / (u * u) + 1.0 / (w * w)) /
          (j1p / (u * j1) + k1p / (w * ks.k1));
}
}  // namespace detail

// Solves the HE11 eigenvalue problem. Dense pre-scan over the physical
// bracket (n2 k, n1 k) followed by bisection; deterministic and
// derivative-free. power_norm is left at zero -- mode_field.hpp fills it.
inline ModeSolution solve_he11(const FiberSpec& fiber, double wavelength,
                               int scan_points = 1000) {
    fiber.validate(wavelength);
    const double V = v_number(fiber, wavelength);
    if (V >= kSingleModeCutoffV)
        throw MultimodeError("fiber is multimode at " +
                             std::to_string(wavelength * 1e9) +
                             " nm: V = " + std::to_string(V) +
                             " >= " + std::to_string(kSingleModeCutoffV));
    const double kk = constants::two_pi / wavelength;
    const double n1 = fiber.core_index.at(wavelength);
    const double n2 = fiber.cladding_index;
    const double eps = 1e-9;
    const double lo = n2 * kk * (1.0 + eps);
    const double hi = n1 * kk * (1.0 - eps);

    auto f = [&](double b) { return he11_characteristic(fiber, wavelength, b); };

    double b_lo = 0.0, b_hi = 0.0;
    double prev_x = lo, prev_f = f(lo);
    for (int i = 1; i <= scan_points; ++i) {
        const double x = lo + (hi - lo) * i / scan_points;
        const double fx = f(x);
        if (std::isfinite(prev_f) && std::isfinite(fx) && prev_f * fx < 0.0) {
            b_lo = prev_x;
            b_hi = x;
            break;
        }
        prev_x = x;
        prev_f = fx;
    }
    if (b_hi == 0.0)
        throw NoGuidedModeError("no HE11 root in (" + std::to_string(lo) + ", " +
                                std::to_string(hi) + ") at " +
                                std::to_string(wavelength * 1e9) + " nm");

    double f_lo = f(b_lo);
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (b_lo + b_hi);
        const double fm = f(mid);
        if (fm == 0.0 || (b_hi - b_lo) < 1e-12 * mid) {
            b_lo = b_hi = mid;
            break;
        }
        if (f_lo * fm < 0.0) {
            b_hi = mid;
        } else {
            b_lo = mid;
            f_lo = fm;
        }
    }

    ModeSolution m;
    m.wavelength = wavelength;
    m.beta = 0.5 * (b_lo + b_hi);
    m.n_core = n1;
    m.n_clad = n2;
    m.v_number = V;
    detail::fill_mode_geometry(m, fiber);
    return m;
}

}  // namespace onf
