#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "onf/constants.hpp"
#include "onf/errors.hpp"

namespace onf::fft {

using cplx = std::complex<double>;

namespace detail {

inline bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

// iterative radix-2 Cooley-Tukey, in place; sign=-1 forward, +1 inverse
// (inverse is unscaled; callers divide by n).
inline void fft_pow2(std::vector<cplx>& a, int sign) {
    const std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = sign * constants::two_pi / static_cast<double>(len);
        const cplx wlen(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            cplx w(1.0, 0.0);
            for (std::size_t k = 0; k < len / 2; ++k) {
                cplx u = a[i + k];
                cplx v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
                w *= wlen;
            }
        }
    }
}

}  // namespace detail

// Forward DFT of arbitrary length: radix-2 directly, Bluestein's chirp-z
// otherwise. X_k = sum_n x_n exp(-2*pi*i*k*n/N).
inline std::vector<cplx> transform(std::vector<cplx> x) {
    const std::size_t n = x.size();
    if (n == 0) throw SegmentError("fft: empty input");
    if (n == 1) return x;
    if (detail::is_pow2(n)) {
        detail::fft_pow2(x, -1);
        return x;
    }
    // Bluestein: x_n * chirp_n convolved with conj chirp
    std::size_t m = 1;
    while (m < 2 * n - 1) m <<= 1;
    std::vector<cplx> a(m, cplx(0, 0)), b(m, cplx(0, 0));
    std::vector<cplx> chirp(n);
    for (std::size_t i = 0; i < n; ++i) {
        // i^2 mod 2n avoids precision loss in the phase for large i
        const double phase = constants::pi *
            static_cast<double>((static_cast<unsigned long long>(i) * i) % (2 * n)) /
            static_cast<double>(n);
        chirp[i] = cplx(std::cos(phase), -std::sin(phase));
        a[i] = x[i] * chirp[i];
        b[i] = std::conj(chirp[i]);
    }
    for (std::size_t i = 1; i < n; ++i) b[m - i] = std::conj(chirp[i]);
    detail::fft_pow2(a, -1);
    detail::fft_pow2(b, -1);
    for (std::size_t i = 0; i < m; ++i) a[i] *= b[i];
    detail::fft_pow2(a, +1);
    std::vector<cplx> out(n);
    const double inv_m = 1.0 / static_cast<double>(m);
    for (std::size_t i = 0; i < n; ++i) out[i] = a[i] * inv_m * chirp[i];
    return out;
}

inline std::vector<cplx> transform_real(const std::vector<double>& x) {
    std::vector<cplx> c(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) c[i] = cplx(x[i], 0.0);
    return transform(std::move(c));
}

}  // namespace onf::fft
