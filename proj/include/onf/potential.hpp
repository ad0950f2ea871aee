#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "onf/atom.hpp"
#include "onf/constants.hpp"
#include "onf/errors.hpp"
#include "onf/fiber.hpp"
#include "onf/linalg.hpp"
#include "onf/mode_field.hpp"

namespace onf {

enum class BeamRole { Red, Blue, Probe };

inline const char* beam_role_name(BeamRole r) {
    switch (r) {
        case BeamRole::Red: return "red";
        case BeamRole::Blue: return "blue";
        case BeamRole::Probe: return "probe";
    }
    return "?";
}

struct BeamSpec {
    BeamRole role = BeamRole::Red;
    double wavelength = 0.0;  // m; probe may leave 0 -> reference-line wavelength
    double power = 0.0;       // W per beam
    double pol_angle = 0.0;   // rad
    bool standing_wave = false;          // red only
    double detuning = 0.0;               // rad/s, probe only
    std::optional<double> power_bwd;     // counter-propagating partner override
    std::optional<double> pol_angle_bwd;

    double backward_power() const { return power_bwd.value_or(power); }
    double backward_pol() const { return pol_angle_bwd.value_or(pol_angle); }
};

struct GridSpec {
    double r_max_offset = 1.5e-6;  // from the fiber surface
    int r_samples = 600;
    int phi_samples = 360;
};

struct TrapConfig {
    FiberSpec fiber;
    AtomSpecies atom;
    std::vector<BeamSpec> beams;
    GridSpec grid;
    double z_plane = 0.0;  // red-lattice antinode by convention

    void validate() const {
        atom.validate();
        if (beams.empty()) throw ValidationError("trap config: beam list is empty");
        int probes = 0;
        for (const auto& b : beams) {
            if (b.power < 0.0) throw ValidationError("trap config: beam power < 0");
            if (b.standing_wave && b.role != BeamRole::Red)
                throw ValidationError("trap config: standing_wave applies to red beams only");
            if (b.role == BeamRole::Probe) {
                ++probes;
                if (b.detuning == 0.0)
                    throw ValidationError("trap config: probe beam needs a detuning");
            }
        }
        if (probes > 1) throw ValidationError("trap config: more than one probe beam");
        if (grid.r_samples < 16 || grid.phi_samples < 8)
            throw ValidationError("trap config: grid too small");
        if (grid.r_max_offset <= 0.0)
            throw ValidationError("trap config: r range must extend outward");
    }
};

// Sampled potential on the (r, phi) grid at the working z-plane.
struct PotentialField {
    std::vector<double> r;    // nr values, r[0] = fiber surface
    std::vector<double> phi;  // nphi values over [0, 2pi)
    std::vector<double> u;    // row-major [ir * nphi + ip], joules
    std::string provenance;   // config digest

    double at(std::size_t ir, std::size_t ip) const { return u[ir * phi.size() + ip]; }
};

struct Minimum {
    double r = 0.0;
    double phi = 0.0;
    double u = 0.0;
    std::size_t ir = 0, ip = 0;  // grid cell of the unrefined argmin
};

struct TrapFrequencies {
    double nu_r = 0.0;   // Hz
    double nu_phi = 0.0;  // Hz
    double fit_residual = 0.0;
};

struct TrapReport {
    double r_min = 0.0;
    double phi_min = 0.0;
    double u_min = 0.0;   // J
    double depth = 0.0;   // J
    double nu_r = 0.0;    // Hz
    double nu_phi = 0.0;  // Hz
    double fit_residual = 0.0;
};

// A trap configuration with its modes solved and normalized: the analytic
// potential U(r, phi) and gradient at the working z-plane. Immutable after
// construction; evaluation is pure.
class TrapSystem {
  public:
    explicit TrapSystem(TrapConfig config) : cfg_(std::move(config)) {
        cfg_.validate();
        for (auto& beam : cfg_.beams) {
            Term t;
            t.beam = beam;
            if (beam.role == BeamRole::Probe && beam.wavelength == 0.0)
                t.beam.wavelength = cfg_.atom.probe_line().wavelength;
            t.mode = mode_for(t.beam.wavelength);
            t.coefficient = coefficient_for(t.beam);
            terms_.push_back(std::move(t));
        }
    }

    const TrapConfig& config() const { return cfg_; }
    double fiber_radius() const { return cfg_.fiber.radius; }
    std::size_t beam_count() const { return terms_.size(); }
    const ModeSolution& mode(std::size_t i) const { return terms_[i].mode; }
    const BeamSpec& beam(std::size_t i) const { return terms_[i].beam; }

    // Replacement system with new beam parameters; solved modes are reused
    // for wavelengths already present (sensitivity scans perturb only powers
    // and angles).
    TrapSystem rebuilt(std::vector<BeamSpec> beams) const {
        TrapSystem copy(*this);
        copy.cfg_.beams = beams;
        copy.cfg_.validate();
        copy.terms_.clear();
        for (auto& beam : beams) {
            Term t;
            t.beam = beam;
            if (beam.role == BeamRole::Probe && beam.wavelength == 0.0)
                t.beam.wavelength = copy.cfg_.atom.probe_line().wavelength;
            t.mode = ModeSolution{};
            for (const auto& old : terms_)
                if (old.mode.wavelength == t.beam.wavelength) t.mode = old.mode;
            if (t.mode.wavelength == 0.0) t.mode = copy.mode_for(t.beam.wavelength);
            t.coefficient = copy.coefficient_for(t.beam);
            copy.terms_.push_back(std::move(t));
        }
        return copy;
    }

    double operator()(double r, double phi) const { return value(r, phi); }

    double value(double r, double phi) const {
        double u = 0.0;
        for (std::size_t i = 0; i < terms_.size(); ++i) u += beam_potential(i, r, phi);
        return u;
    }

    // Single-beam contribution (exact term of the sum).
    double beam_potential(std::size_t i, double r, double phi) const {
        const Term& t = terms_[i];
        return t.coefficient * beam_intensity(t, r, phi);
    }

    struct Gradient {
        double du_dr;
        double du_dphi;  // plain partial; the physical force uses (1/r) du_dphi
    };

    Gradient gradient(double r, double phi) const {
        Gradient g{0.0, 0.0};
        for (const auto& t : terms_) {
            const auto s = field_squares(t.mode, cfg_.fiber, r);
            double i_r, i_phi;
            intensity_gradient(t, s, phi, i_r, i_phi);
            g.du_dr += t.coefficient * i_r;
            g.du_dphi += t.coefficient * i_phi;
        }
        return g;
    }

    double probe_intensity(double r, double phi) const {
        for (const auto& t : terms_)
            if (t.beam.role == BeamRole::Probe) return beam_intensity(t, r, phi);
        throw ValidationError("trap system has no probe beam");
    }

    bool has_probe() const {
        for (const auto& t : terms_)
            if (t.beam.role == BeamRole::Probe) return true;
        return false;
    }

  private:
    struct Term {
        BeamSpec beam;
        ModeSolution mode;
        double coefficient = 0.0;  // J per (W/m^2)
    };

    ModeSolution mode_for(double wavelength) const {
        return solve_he11_normalized(cfg_.fiber, wavelength);
    }

    double coefficient_for(const BeamSpec& b) const {
        if (b.role == BeamRole::Probe)
            return probe_potential_coefficient(cfg_.atom, b.detuning);
        return -scalar_polarizability(cfg_.atom, b.wavelength) /
               (2.0 * constants::eps0 * constants::c);
    }

    double beam_intensity(const Term& t, double r, double phi) const {
        if (t.beam.standing_wave)
            return standing_wave_intensity(t.mode, cfg_.fiber, t.beam.power,
                                           t.beam.backward_power(), r, phi, cfg_.z_plane,
                                           t.beam.pol_angle, t.beam.backward_pol());
        return evanescent_intensity(t.mode, cfg_.fiber, t.beam.power, t.beam.pol_angle,
                                    r, phi);
    }

    void intensity_gradient(const Term& t, const FieldSquares& s, double phi,
                            double& di_dr, double& di_dphi) const {
        if (t.beam.standing_wave) {
            const double pf = t.beam.power, pb = t.beam.backward_power();
            const double thf = phi - t.beam.pol_angle;
            const double thb = phi - t.beam.backward_pol();
            const double cf = std::cos(thf), sf = std::sin(thf);
            const double cb = std::cos(thb), sb = std::sin(thb);
            const double x = 2.0 * std::sqrt(pf * pb) *
                             std::cos(2.0 * t.mode.beta * cfg_.z_plane);
            const double t_r = pf * cf * cf + pb * cb * cb + x * cf * cb;
            const double t_phi = pf * sf * sf + pb * sb * sb + x * sf * sb;
            const double t_z = pf * cf * cf + pb * cb * cb - x * cf * cb;
            const double s2 = pf * std::sin(2.0 * thf) + pb * std::sin(2.0 * thb);
            const double xs = x * std::sin(thf + thb);
            di_dr = s.der2 * t_r + s.dephi2 * t_phi + s.dez2 * t_z;
            di_dphi = s.er2 * (-(s2 + xs)) + s.ephi2 * (s2 + xs) + s.ez2 * (-s2 + xs);
        } else {
            const double th = phi - t.beam.pol_angle;
            const double c2 = std::cos(th) * std::cos(th);
            di_dr = t.beam.power * ((s.der2 + s.dez2) * c2 + s.dephi2 * (1.0 - c2));
            di_dphi = t.beam.power * (s.ephi2 - (s.er2 + s.ez2)) * std::sin(2.0 * th);
        }
    }

    TrapConfig cfg_;
    std::vector<Term> terms_;
};

// --- field construction and minimum location ---

inline PotentialField build_potential(const TrapSystem& system,
                                      const std::string& provenance = "") {
    const auto& cfg = system.config();
    const auto& g = cfg.grid;
    PotentialField f;
    f.provenance = provenance;
    f.r.resize(g.r_samples);
    f.phi.resize(g.phi_samples);
    const double a = cfg.fiber.radius;
    for (int i = 0; i < g.r_samples; ++i)
        f.r[i] = a + g.r_max_offset * static_cast<double>(i) / (g.r_samples - 1);
    for (int j = 0; j < g.phi_samples; ++j)
        f.phi[j] = constants::two_pi * static_cast<double>(j) / g.phi_samples;
    f.u.assign(static_cast<std::size_t>(g.r_samples) * g.phi_samples, 0.0);
    for (int i = 0; i < g.r_samples; ++i)
        for (int j = 0; j < g.phi_samples; ++j)
            f.u[static_cast<std::size_t>(i) * g.phi_samples + j] =
                system.value(f.r[i], f.phi[j]);

    double umax_abs = 0.0;
    for (double v : f.u) {
        if (!std::isfinite(v)) throw NumericalError("potential field has non-finite values");
        umax_abs = std::max(umax_abs, std::fabs(v));
    }
    // outer-boundary tail must be a small fraction of the field scale
    double tail = 0.0;
    for (int j = 0; j < g.phi_samples; ++j)
        tail = std::max(tail, std::fabs(f.at(g.r_samples - 1, j)));
    if (umax_abs > 0.0 && tail > 0.05 * umax_abs)
        throw ValidationError("grid r range too small: potential has not decayed at the outer boundary");
    return f;
}

inline Minimum find_minimum(const PotentialField& f) {
    const std::size_t nr = f.r.size(), np = f.phi.size();
    std::size_t best = 0;
    for (std::size_t i = 1; i < f.u.size(); ++i)
        if (f.u[i] < f.u[best]) best = i;
    Minimum m;
    m.ir = best / np;
    m.ip = best % np;
    if (m.ir == 0 || m.ir + 1 == nr)
        throw NoTrapError("potential minimum sits on the radial grid boundary");

    // parabolic refinement, each coordinate separately (phi wraps)
    const double u0 = f.at(m.ir, m.ip);
    const double ur_m = f.at(m.ir - 1, m.ip), ur_p = f.at(m.ir + 1, m.ip);
    const double up_m = f.at(m.ir, (m.ip + np - 1) % np);
    const double up_p = f.at(m.ir, (m.ip + 1) % np);
    m.r = f.r[m.ir];
    m.phi = f.phi[m.ip];
    m.u = u0;
    const double cr = ur_m - 2.0 * u0 + ur_p;
    if (cr > 0.0) {
        const double dr = f.r[1] - f.r[0];
        const double off = 0.5 * (ur_m - ur_p) / cr;
        m.r += off * dr;
        m.u -= 0.125 * (ur_m - ur_p) * (ur_m - ur_p) / cr;
    }
    const double cp = up_m - 2.0 * u0 + up_p;
    if (cp > 0.0) {
        const double dp = f.phi[1] - f.phi[0];
        const double off = 0.5 * (up_m - up_p) / cp;
        m.phi += off * dp;
        m.u -= 0.125 * (up_m - up_p) * (up_m - up_p) / cp;
    }
    if (m.u >= 0.0) throw NoTrapError("potential minimum is not negative");
    return m;
}

// Newton polish of a minimum on the analytic potential; used where the
// grid-interpolation tolerance is not enough (equilibrium initial
// conditions, probe displacement).
inline Minimum refine_minimum(const TrapSystem& sys, double r0, double phi0) {
    double r = r0, phi = phi0;
    const double a = sys.fiber_radius();
    for (int it = 0; it < 60; ++it) {
        const auto g = sys.gradient(r, phi);
        const double hr = std::max(1e-12, 1e-7 * r);
        const double hp = 1e-7;
        const auto gr_p = sys.gradient(r + hr, phi);
        const auto gr_m = sys.gradient(r - hr, phi);
        const auto gp_p = sys.gradient(r, phi + hp);
        const auto gp_m = sys.gradient(r, phi - hp);
        const double h_rr = (gr_p.du_dr - gr_m.du_dr) / (2.0 * hr);
        const double h_rp = (gp_p.du_dr - gp_m.du_dr) / (2.0 * hp);
        const double h_pp = (gp_p.du_dphi - gp_m.du_dphi) / (2.0 * hp);
        std::vector<double> H = {h_rr, h_rp, h_rp, h_pp};
        std::vector<double> rhs = {-g.du_dr, -g.du_dphi}, step;
        if (!linalg::solve(H, rhs, step)) break;
        // keep steps inside the domain
        double dr = std::clamp(step[0], -50e-9, 50e-9);
        double dp = std::clamp(step[1], -0.05, 0.05);
        r = std::max(a * (1.0 + 1e-9), r + dr);
        phi += dp;
        if (std::fabs(dr) < 1e-16 * r && std::fabs(dp) < 1e-15) break;
    }
    Minimum m;
    m.r = r;
    m.phi = phi;
    m.u = sys.value(r, phi);
    return m;
}

// Depth: the lower of the barrier toward the surface and the escape energy
// to the outer boundary, both along the minimum's radial ray, minus U_min.
inline double trap_depth(const PotentialField& f, const Minimum& m) {
    const std::size_t np = f.phi.size();
    double inner = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < m.ir; ++i) inner = std::max(inner, f.at(i, m.ip));
    if (m.ir == 0) inner = std::numeric_limits<double>::infinity();
    double outer = -std::numeric_limits<double>::infinity();
    for (std::size_t i = m.ir + 1; i < f.r.size(); ++i)
        outer = std::max(outer, f.at(i, m.ip));
    if (m.ir + 1 == f.r.size()) outer = std::numeric_limits<double>::infinity();
    const double escape = std::min(inner, outer);
    return escape - m.u;
}

namespace detail {

// Window boundary along a 1D cut: smallest |t| > 0 with
// U(x(t)) - u_min > du, found by doubling + bisection.
template <typename F>
double window_extent(F&& u_of, double u_min, double du, double t_max) {
    double lo = 0.0, hi = t_max;
    double t = t_max / 64.0;
    bool bracketed = false;
    while (t <= t_max) {
        if (u_of(t) - u_min > du) {
            hi = t;
            bracketed = true;
            break;
        }
        lo = t;
        t *= 2.0;
    }
    if (!bracketed) return t_max;
    for (int i = 0; i < 60; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (u_of(mid) - u_min > du)
            hi = mid;
        else
            lo = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace detail

struct FrequencyFitOptions {
    double window_fraction = 0.10;  // of the trap depth
    int samples_per_axis = 25;
};

// Harmonic fit around the minimum: least squares of a full quadratic over
// the window where U - U_min < window_fraction * depth, curvatures read off
// the diagonal. nu_i = sqrt(k_i / m) / (2 pi).
template <typename Potential>
inline TrapFrequencies trap_frequencies(Potential&& u_of, const Minimum& m,
                                        const AtomSpecies& atom, double depth,
                                        double r_lower_limit,
                                        const FrequencyFitOptions& opt = {}) {
    const double du = opt.window_fraction * depth;
    if (du <= 0.0) throw SaddleError("trap_frequencies: non-positive window height");

    const double r_room_in = m.r - r_lower_limit;
    const double r_out = detail::window_extent(
        [&](double t) { return u_of(m.r + t, m.phi); }, m.u, du, 5e-6);
    const double r_in = detail::window_extent(
        [&](double t) { return u_of(m.r - t, m.phi); }, m.u, du, 0.999 * r_room_in);
    const double p_up = detail::window_extent(
        [&](double t) { return u_of(m.r, m.phi + t); }, m.u, du, constants::pi / 2.1);
    const double p_dn = detail::window_extent(
        [&](double t) { return u_of(m.r, m.phi - t); }, m.u, du, constants::pi / 2.1);

    const int n = opt.samples_per_axis;
    std::vector<double> xs, ys, us;
    xs.reserve(n * n);
    for (int i = 0; i < n; ++i) {
        const double fr = static_cast<double>(i) / (n - 1);
        const double r = m.r - r_in + fr * (r_in + r_out);
        for (int j = 0; j < n; ++j) {
            const double fp = static_cast<double>(j) / (n - 1);
            const double phi = m.phi - p_dn + fp * (p_dn + p_up);
            const double u = u_of(r, phi);
            if (u - m.u <= du) {
                xs.push_back(r - m.r);
                ys.push_back(m.r * (phi - m.phi));
                us.push_back(u);
            }
        }
    }
    if (xs.size() < 12)
        throw ResolutionError("trap_frequencies: fewer than 12 samples inside the fit window");

    // basis {1, x, y, x^2, y^2, xy}
    constexpr int np = 6;
    std::vector<double> ata(np * np, 0.0), atb(np, 0.0);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double b[np] = {1.0, xs[i], ys[i], xs[i] * xs[i], ys[i] * ys[i],
                              xs[i] * ys[i]};
        for (int a = 0; a < np; ++a) {
            atb[a] += b[a] * us[i];
            for (int bb = a; bb < np; ++bb) ata[a * np + bb] += b[a] * b[bb];
        }
    }
    for (int a = 0; a < np; ++a)
        for (int bb = 0; bb < a; ++bb) ata[a * np + bb] = ata[bb * np + a];
    std::vector<double> coef;
    if (!linalg::solve(ata, atb, coef))
        throw NumericalError("trap_frequencies: singular harmonic fit");

    const double k_r = 2.0 * coef[3];
    const double k_phi = 2.0 * coef[4];
    if (k_r <= 0.0 || k_phi <= 0.0)
        throw SaddleError("trap_frequencies: negative curvature at the minimum");

    double ss = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double fit = coef[0] + coef[1] * xs[i] + coef[2] * ys[i] +
                           coef[3] * xs[i] * xs[i] + coef[4] * ys[i] * ys[i] +
                           coef[5] * xs[i] * ys[i];
        ss += (us[i] - fit) * (us[i] - fit);
    }
    TrapFrequencies out;
    out.nu_r = std::sqrt(k_r / atom.mass) / constants::two_pi;
    out.nu_phi = std::sqrt(k_phi / atom.mass) / constants::two_pi;
    out.fit_residual = std::sqrt(ss / xs.size()) / du;
    return out;
}

// Full report: grid minimum + depth + harmonic frequencies. The resolution
// guard requires >= 10 radial grid samples across the fit window.
inline TrapReport trap_report(const TrapSystem& sys, const PotentialField& f) {
    const Minimum m = find_minimum(f);
    const double depth = trap_depth(f, m);

    int in_window = 0;
    const double du = 0.10 * depth;
    for (std::size_t i = 0; i < f.r.size(); ++i)
        if (f.at(i, m.ip) - m.u <= du) ++in_window;
    if (in_window < 10)
        throw ResolutionError("grid too coarse: " + std::to_string(in_window) +
                              " radial samples across the trap well (need >= 10)");

    const auto freq = trap_frequencies(
        [&](double r, double phi) { return sys.value(r, phi); }, m,
        sys.config().atom, depth, sys.fiber_radius() * (1.0 + 1e-9));
    TrapReport rep;
    rep.r_min = m.r;
    rep.phi_min = m.phi;
    rep.u_min = m.u;
    rep.depth = depth;
    rep.nu_r = freq.nu_r;
    rep.nu_phi = freq.nu_phi;
    rep.fit_residual = freq.fit_residual;
    return rep;
}

inline TrapReport trap_report(const TrapSystem& sys) {
    return trap_report(sys, build_potential(sys));
}

// --- sensitivity scan ---

struct SensitivityEntry {
    std::string parameter;
    double delta = 0.0;  // applied perturbation (fractional for powers, rad for angles)
    double nu_r = 0.0, nu_phi = 0.0;
    std::string error;  // non-empty if this corner failed to trap
};

struct SensitivityReport {
    double fraction = 0.0;
    double baseline_nu_r = 0.0, baseline_nu_phi = 0.0;
    std::vector<SensitivityEntry> one_at_a_time;
    std::vector<SensitivityEntry> corners;
    // quoted uncertainties: half-spread over the one-at-a-time scan
    double half_spread_r = 0.0, half_spread_phi = 0.0;          // Hz
    double rel_half_spread_r = 0.0, rel_half_spread_phi = 0.0;  // fraction of baseline
    // informational extremes including the compounded corners
    double corner_min_r = 0.0, corner_max_r = 0.0;
    double corner_min_phi = 0.0, corner_max_phi = 0.0;
};

namespace detail {

struct ScanParam {
    std::string name;
    std::size_t beam_index;
    enum class Kind { PowerFwd, PowerBwd, AngleFwd, AngleBwd } kind;
};

inline std::vector<ScanParam> scan_parameters(const std::vector<BeamSpec>& beams) {
    std::vector<ScanParam> ps;
    for (std::size_t i = 0; i < beams.size(); ++i) {
        const std::string base = beam_role_name(beams[i].role);
        using K = ScanParam::Kind;
        if (beams[i].standing_wave) {
            ps.push_back({base + "_fwd_power", i, K::PowerFwd});
            ps.push_back({base + "_bwd_power", i, K::PowerBwd});
        } else {
            ps.push_back({base + "_power", i, K::PowerFwd});
        }
    }
    for (std::size_t i = 0; i < beams.size(); ++i) {
        const std::string base = beam_role_name(beams[i].role);
        using K = ScanParam::Kind;
        if (beams[i].standing_wave) {
            ps.push_back({base + "_fwd_pol", i, K::AngleFwd});
            ps.push_back({base + "_bwd_pol", i, K::AngleBwd});
        } else {
            ps.push_back({base + "_pol", i, K::AngleFwd});
        }
    }
    return ps;
}

inline void apply_delta(std::vector<BeamSpec>& beams, const ScanParam& p, double sign,
                        double fraction) {
    using K = ScanParam::Kind;
    BeamSpec& b = beams[p.beam_index];
    // angles move by a fraction of the quarter turn separating the
    // polarization axes; powers scale multiplicatively
    const double dang = sign * fraction * constants::pi / 2.0;
    switch (p.kind) {
        case K::PowerFwd: b.power *= (1.0 + sign * fraction); break;
        case K::PowerBwd: b.power_bwd = b.backward_power() * (1.0 + sign * fraction); break;
        case K::AngleFwd: b.pol_angle += dang; break;
        case K::AngleBwd: b.pol_angle_bwd = b.backward_pol() + dang; break;
    }
}

}  // namespace detail

inline SensitivityReport sensitivity_analysis(const TrapSystem& baseline_sys,
                                              double fraction = 0.05) {
    if (fraction < 0.0) throw DomainError("sensitivity_analysis: fraction < 0");
    SensitivityReport rep;
    rep.fraction = fraction;
    const TrapReport base = trap_report(baseline_sys);
    rep.baseline_nu_r = base.nu_r;
    rep.baseline_nu_phi = base.nu_phi;

    const auto params = detail::scan_parameters(baseline_sys.config().beams);
    auto evaluate = [&](const std::vector<BeamSpec>& beams, const std::string& name,
                        double delta) {
        SensitivityEntry e;
        e.parameter = name;
        e.delta = delta;
        try {
            const TrapSystem sys = baseline_sys.rebuilt(beams);
            const TrapReport r = trap_report(sys);
            e.nu_r = r.nu_r;
            e.nu_phi = r.nu_phi;
        } catch (const Error& err) {
            e.error = err.what();
        }
        return e;
    };

    for (const auto& p : params)
        for (double sign : {+1.0, -1.0}) {
            auto beams = baseline_sys.config().beams;
            detail::apply_delta(beams, p, sign, fraction);
            rep.one_at_a_time.push_back(evaluate(beams, p.name, sign));
        }

    double min_r = base.nu_r, max_r = base.nu_r;
    double min_p = base.nu_phi, max_p = base.nu_phi;
    for (const auto& e : rep.one_at_a_time) {
        if (!e.error.empty()) continue;
        min_r = std::min(min_r, e.nu_r);
        max_r = std::max(max_r, e.nu_r);
        min_p = std::min(min_p, e.nu_phi);
        max_p = std::max(max_p, e.nu_phi);
    }
    rep.half_spread_r = 0.5 * (max_r - min_r);
    rep.half_spread_phi = 0.5 * (max_p - min_p);
    rep.rel_half_spread_r = rep.half_spread_r / base.nu_r;
    rep.rel_half_spread_phi = rep.half_spread_phi / base.nu_phi;

    // compounded corners: per target frequency and direction, combine each
    // parameter's more extreme one-at-a-time sign (informational)
    rep.corner_min_r = min_r;
    rep.corner_max_r = max_r;
    rep.corner_min_phi = min_p;
    rep.corner_max_phi = max_p;
    struct Target {
        bool radial;
        bool maximize;
        const char* name;
    };
    for (const Target tgt : {Target{true, true, "corner_max_nu_r"},
                             Target{true, false, "corner_min_nu_r"},
                             Target{false, true, "corner_max_nu_phi"},
                             Target{false, false, "corner_min_nu_phi"}}) {
        auto beams = baseline_sys.config().beams;
        for (std::size_t ip = 0; ip < params.size(); ++ip) {
            const auto& plus = rep.one_at_a_time[2 * ip];
            const auto& minus = rep.one_at_a_time[2 * ip + 1];
            if (!plus.error.empty() || !minus.error.empty()) continue;
            const double vp = tgt.radial ? plus.nu_r : plus.nu_phi;
            const double vm = tgt.radial ? minus.nu_r : minus.nu_phi;
            const double sign = (tgt.maximize == (vp >= vm)) ? +1.0 : -1.0;
            detail::apply_delta(beams, params[ip], sign, fraction);
        }
        auto e = evaluate(beams, tgt.name, 0.0);
        if (e.error.empty()) {
            rep.corner_min_r = std::min(rep.corner_min_r, e.nu_r);
            rep.corner_max_r = std::max(rep.corner_max_r, e.nu_r);
            rep.corner_min_phi = std::min(rep.corner_min_phi, e.nu_phi);
            rep.corner_max_phi = std::max(rep.corner_max_phi, e.nu_phi);
        }
        rep.corners.push_back(std::move(e));
    }
    return rep;
}

// Signed radial displacement of the trap minimum (positive = outward)
// between two configurations, e.g. probe off -> on.
inline double probe_displacement(const TrapSystem& sys_without, const TrapSystem& sys_with) {
    const PotentialField f0 = build_potential(sys_without);
    const PotentialField f1 = build_potential(sys_with);
    const Minimum m0 = find_minimum(f0);
    const Minimum m1 = find_minimum(f1);
    const Minimum r0 = refine_minimum(sys_without, m0.r, m0.phi);
    const Minimum r1 = refine_minimum(sys_with, m1.r, m1.phi);
    return r1.r - r0.r;
}

}  // namespace onf
