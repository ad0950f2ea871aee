#pragma once

#include <boost/math/special_functions/bessel.hpp>

namespace onf::bessel {

// Cylinder functions of integer order on real arguments, as used by the
// HE11 mode solver and field evaluators. Backed by Boost.Math; accuracy
// is pinned by the reference-fixture suite in tests (rel < 1e-10 against
// an arbitrary-precision oracle).

inline double j(int nu, double x) { return boost::math::cyl_bessel_j(nu, x); }
inline double k(int nu, double x) { return boost::math::cyl_bessel_k(nu, x); }

struct JSet {
    double j0, j1, j2, j3;
};
struct KSet {
    double k0, k1, k2, k3;
};

// K2/K3 by upward recurrence from the fast k0/k1 kernels:
// K_{n+1}(x) = K_{n-1}(x) + 2n/x * K_n(x). Stable upward for K.
inline KSet k_set(double x) {
    KSet s;
    s.k0 = boost::math::cyl_bessel_k(0, x);
    s.k1 = boost::math::cyl_bessel_k(1, x);
    s.k2 = s.k0 + 2.0 / x * s.k1;
    s.k3 = s.k1 + 4.0 / x * s.k2;
    return s;
}

inline JSet j_set(double x) {
    JSet s;
    s.j0 = boost::math::cyl_bessel_j(0, x);
    s.j1 = boost::math::cyl_bessel_j(1, x);
    // downward-coupled forms are fine here: arguments stay < 3 in the
    // single-mode band, far from cancellation trouble
    s.j2 = boost::math::cyl_bessel_j(2, x);
    s.j3 = boost::math::cyl_bessel_j(3, x);
    return s;
}

// d/dx J_nu and K_nu
inline double jp(int nu, double x) {
    if (nu == 0) return -j(1, x);
    return 0.5 * (j(nu - 1, x) - j(nu + 1, x));
}
inline double kp(int nu, double x) {
    if (nu == 0) return -k(1, x);
    return -0.5 * (k(nu - 1, x) + k(nu + 1, x));
}

}  // namespace onf::bessel
