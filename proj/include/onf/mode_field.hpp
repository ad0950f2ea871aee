#pragma once

#include <cmath>

#include "onf/bessel.hpp"
#include "onf/constants.hpp"
#include "onf/errors.hpp"
#include "onf/fiber.hpp"

namespace onf {

// Cylindrical field profile magnitudes of the quasi-circularly polarized
// HE11 mode (p = +1, unit amplitude). The physical components carry phases
//   E_r = i er, E_phi = ephi, E_z = ez   (times e^{i(p phi + beta z - w t)}).
// Derivatives are with respect to r.
struct FieldProfiles {
    double er, ephi, ez;
    double der, dephi, dez;
};

inline FieldProfiles field_profiles(const ModeSolution& m, const FiberSpec& fiber,
                                    double r) {
    FieldProfiles f{};
    const double a = fiber.radius;
    const double s = m.s;
    if (r < a) {
        const double x = m.h * r;
        const double pre = m.beta / (2.0 * m.h);
        if (x < 1e-14) {
            // r -> 0 limit: J0 -> 1, J1,J2 -> 0
            f.er = pre * (1.0 - s);
            f.ephi = -pre * (1.0 - s);
            f.ez = 0.0;
            f.der = 0.0;
            f.dephi = 0.0;
            f.dez = m.h * 0.5;  // J1'(0) = 1/2
            return f;
        }
        const auto js = bessel::j_set(x);
        const double j2p = 0.5 * (js.j1 - js.j3);
        f.er = pre * ((1.0 - s) * js.j0 - (1.0 + s) * js.j2);
        f.ephi = -pre * ((1.0 - s) * js.j0 + (1.0 + s) * js.j2);
        f.ez = js.j1;
        f.der = 0.5 * m.beta * ((1.0 - s) * (-js.j1) - (1.0 + s) * j2p);
        f.dephi = -0.5 * m.beta * ((1.0 - s) * (-js.j1) + (1.0 + s) * j2p);
        f.dez = m.h * (js.j0 - js.j1 / x);
    } else {
        const double u = m.h * a;
        const double w = m.q * a;
        const double cout = bessel::j(1, u) / bessel::k(1, w);
        const double x = m.q * r;
        const auto ks = bessel::k_set(x);
        const double pre = cout * m.beta / (2.0 * m.q);
        const double k2p = -0.5 * (ks.k1 + ks.k3);
        f.er = pre * ((1.0 - s) * ks.k0 + (1.0 + s) * ks.k2);
        f.ephi = -pre * ((1.0 - s) * ks.k0 - (1.0 + s) * ks.k2);
        f.ez = cout * ks.k1;
        f.der = 0.5 * cout * m.beta * ((1.0 - s) * (-ks.k1) + (1.0 + s) * k2p);
        f.dephi = -0.5 * cout * m.beta * ((1.0 - s) * (-ks.k1) - (1.0 + s) * k2p);
        f.dez = cout * m.q * (-ks.k0 - ks.k1 / x);
    }
    return f;
}

// Magnetic profile magnitudes from the curl of E (p = +1):
//   H_r = hr, H_phi = i hphi, H_z = -i hz.
// hphi and hz are discontinuous at r = a unless beta solves the eigenvalue
// equation, which is what the continuity tests exploit.
struct HFieldProfiles {
    double hr, hphi, hz;
};

inline HFieldProfiles h_field_profiles(const ModeSolution& m, const FiberSpec& fiber,
                                       double r) {
    const auto f = field_profiles(m, fiber, r);
    const double omega = constants::c * m.k();
    const double wmu = omega * constants::mu0;
    HFieldProfiles h{};
    h.hr = (f.ez / r - m.beta * f.ephi) / wmu;
    h.hphi = (m.beta * f.er + f.dez) / wmu;
    h.hz = (f.dephi + f.ephi / r + f.er / r) / wmu;
    return h;
}

// Power normalization: amplitudes scale so that the artifact's intensity,
// (c eps0 / 2)|E|^2, integrates over the full cross-section (inside +
// outside) to the beam power. For both the quasi-circular mode and the
// quasi-linear superposition this gives
//   power_norm = 1 / (pi c eps0 Integral (er^2 + ephi^2 + ez^2) r dr).
inline double mode_intensity_integral(const ModeSolution& m, const FiberSpec& fiber) {
    auto density = [&](double r) {
        const auto f = field_profiles(m, fiber, r);
        return (f.er * f.er + f.ephi * f.ephi + f.ez * f.ez) * r;
    };
    auto simpson = [&](double lo, double hi, int n) {
        // n even
        const double dx = (hi - lo) / n;
        double acc = density(lo) + density(hi);
        for (int i = 1; i < n; ++i) acc += density(lo + i * dx) * ((i % 2) ? 4.0 : 2.0);
        return acc * dx / 3.0;
    };
    const double a = fiber.radius;
    const double inner = simpson(0.0, a, 2000);
    const double outer = simpson(a, a + 50.0 / m.q, 8000);
    return inner + outer;
}

inline void normalize_mode(ModeSolution& m, const FiberSpec& fiber) {
    m.power_norm = 1.0 / (constants::pi * constants::c * constants::eps0 *
                          mode_intensity_integral(m, fiber));
}

inline ModeSolution solve_he11_normalized(const FiberSpec& fiber, double wavelength) {
    ModeSolution m = solve_he11(fiber, wavelength);
    normalize_mode(m, fiber);
    return m;
}

// Per-watt squared-field radial factors of the quasi-linear mode outside the
// fiber, with radial derivatives. The time-averaged intensity at polarization
// angle theta0 is
//   I(r, phi) = P * [ (er2 + ez2) cos^2(phi - theta0) + ephi2 sin^2(phi - theta0) ].
struct FieldSquares {
    double er2, ephi2, ez2;
    double der2, dephi2, dez2;
};

inline FieldSquares field_squares(const ModeSolution& m, const FiberSpec& fiber,
                                  double r) {
    if (r < fiber.radius)
        throw DomainError("field evaluation inside the fiber (r < radius)");
    if (m.power_norm <= 0.0)
        throw NumericalError("mode is not power-normalized");
    const auto f = field_profiles(m, fiber, r);
    const double scale = constants::c * constants::eps0 * m.power_norm;
    FieldSquares s{};
    s.er2 = scale * f.er * f.er;
    s.ephi2 = scale * f.ephi * f.ephi;
    s.ez2 = scale * f.ez * f.ez;
    s.der2 = scale * 2.0 * f.er * f.der;
    s.dephi2 = scale * 2.0 * f.ephi * f.dephi;
    s.dez2 = scale * 2.0 * f.ez * f.dez;
    return s;
}

// Time-averaged intensity of a single quasi-linearly polarized traveling
// beam of the given power, W/m^2.
inline double evanescent_intensity(const ModeSolution& m, const FiberSpec& fiber,
                                   double power, double pol_angle, double r,
                                   double phi) {
    if (power < 0.0) throw DomainError("beam power < 0");
    const auto s = field_squares(m, fiber, r);
    const double c2 = std::cos(phi - pol_angle) * std::cos(phi - pol_angle);
    return power * ((s.er2 + s.ez2) * c2 + s.ephi2 * (1.0 - c2));
}

// Counter-propagating pair in a standing-wave configuration; z = 0 is a
// lattice antinode by phase convention. Polarization axes of the two beams
// may differ (used by the sensitivity scan); the common case passes one
// angle for both. Reduces exactly to evanescent_intensity at power_bwd = 0.
inline double standing_wave_intensity(const ModeSolution& m, const FiberSpec& fiber,
                                      double power_fwd, double power_bwd, double r,
                                      double phi, double z, double pol_fwd,
                                      double pol_bwd) {
    if (power_fwd < 0.0 || power_bwd < 0.0) throw DomainError("beam power < 0");
    const auto s = field_squares(m, fiber, r);
    const double cf = std::cos(phi - pol_fwd), sf = std::sin(phi - pol_fwd);
    const double cb = std::cos(phi - pol_bwd), sb = std::sin(phi - pol_bwd);
    const double cross = 2.0 * std::sqrt(power_fwd * power_bwd) *
                         std::cos(2.0 * m.beta * z);
    const double t_r = power_fwd * cf * cf + power_bwd * cb * cb + cross * cf * cb;
    const double t_phi = power_fwd * sf * sf + power_bwd * sb * sb + cross * sf * sb;
    const double t_z = power_fwd * cf * cf + power_bwd * cb * cb - cross * cf * cb;
    return s.er2 * t_r + s.ephi2 * t_phi + s.ez2 * t_z;
}

inline double standing_wave_intensity(const ModeSolution& m, const FiberSpec& fiber,
                                      double power_fwd, double power_bwd, double r,
                                      double phi, double z, double pol_angle) {
    return standing_wave_intensity(m, fiber, power_fwd, power_bwd, r, phi, z,
                                   pol_angle, pol_angle);
}

}  // namespace onf
