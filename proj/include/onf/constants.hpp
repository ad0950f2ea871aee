#pragma once

namespace onf::constants {

// CODATA 2018
inline constexpr double c = 299792458.0;            // m/s
inline constexpr double eps0 = 8.8541878128e-12;    // F/m
inline constexpr double mu0 = 1.25663706212e-6;     // N/A^2
inline constexpr double hbar = 1.054571817e-34;     // J s
inline constexpr double h_planck = 6.62607015e-34;  // J s
inline constexpr double kB = 1.380649e-23;          // J/K
inline constexpr double amu = 1.66053906660e-27;    // kg

inline constexpr double pi = 3.14159265358979323846;
inline constexpr double two_pi = 2.0 * pi;

// Reporting conversions: energies in J to uK and kHz.
inline constexpr double joule_to_uK(double e) { return e / kB * 1e6; }
inline constexpr double joule_to_kHz(double e) { return e / h_planck * 1e-3; }

}  // namespace onf::constants
