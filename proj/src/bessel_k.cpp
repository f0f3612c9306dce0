#include "pzbem/bessel_k.hpp"

#include <cmath>

#include "pzbem/quadrature.hpp"

namespace pzbem {

namespace {

constexpr double kEulerGamma = 0.57721566490153286;
constexpr double kLn2 = 0.69314718055994531;

void check_domain(Complex z) {
    if (z == Complex(0.0, 0.0))
        throw NumericalError("bessel: z = 0 is singular");
    if (z.real() < 0.0)
        throw NumericalError("bessel: argument outside sector Re z >= 0");
}

// ---- ascending series (|z| small) --------------------------------------

Complex i0_series(Complex z) {
    const Complex q = 0.25 * z * z;
    Complex term(1.0, 0.0), sum(1.0, 0.0);
    for (int k = 1; k <= 60; ++k) {
        term *= q / double(k * k);
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    return sum;
}

Complex i1_series(Complex z) {
    const Complex q = 0.25 * z * z;
    Complex term(1.0, 0.0), sum(1.0, 0.0);
    for (int k = 1; k <= 60; ++k) {
        term *= q / double(k * (k + 1));
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    return 0.5 * z * sum;
}

// K0 + log(z) I0 = (ln 2 - gamma) I0 + sum_k H_k q^k / (k!)^2, entire
Complex k0_regular_series(Complex z) {
    const Complex q = 0.25 * z * z;
    Complex term(1.0, 0.0), sum(0.0, 0.0);
    double h = 0.0;
    for (int k = 1; k <= 60; ++k) {
        term *= q / double(k * k);
        h += 1.0 / k;
        sum += h * term;
        if (std::abs(term) * h < 1e-18 * (std::abs(sum) + 1.0)) break;
    }
    return (kLn2 - kEulerGamma) * i0_series(z) + sum;
}

// K1 - 1/z - log(z) I1 = -ln2 I1 - (z/4) sum_k [psi(k+1)+psi(k+2)] q^k
//                                             / (k! (k+1)!),   entire
Complex k1_regular_series(Complex z) {
    const Complex q = 0.25 * z * z;
    // psi(1) + psi(2) = -2 gamma + 1
    Complex term(1.0, 0.0), sum(1.0 - 2.0 * kEulerGamma, 0.0);
    double psum = 1.0 - 2.0 * kEulerGamma;
    for (int k = 1; k <= 60; ++k) {
        term *= q / double(k * (k + 1));
        psum += 1.0 / k + 1.0 / (k + 1);
        sum += psum * term;
        if (std::abs(term) * std::abs(psum) < 1e-18 * (std::abs(sum) + 1.0))
            break;
    }
    return -kLn2 * i1_series(z) - 0.25 * z * sum;
}

// ---- middle range: quadrature of the integral representation -----------
//
// K_nu(z) = sqrt(pi/(2z)) e^{-z} / Gamma(nu + 1/2)
//           * int_0^inf e^{-u} u^{nu-1/2} (1 + u/(2z))^{nu-1/2} du.
// With u = w^2:
//   K0 = sqrt(pi/(2z)) e^{-z} (2/sqrt(pi)) int e^{-w^2} / q(w) dw
//   K1 = sqrt(pi/(2z)) e^{-z} (4/sqrt(pi)) int e^{-w^2} w^2 q(w) dw
// where q(w) = sqrt(1 + w^2/(2z)); one complex sqrt per node serves both.
// The integrand tail beyond w = 6.5 is below 1e-17 relative.

struct MidNodes {
    double w2[40];    // w_i^2
    double c[40];     // (2/sqrt(pi)) * glw_i * 6.5 * exp(-w_i^2)
};

const MidNodes& mid_nodes() {
    static const MidNodes n = [] {
        MidNodes m;
        const Rule1D& gl = gauss_legendre(40);
        const double two_over_sqrtpi = 2.0 / std::sqrt(M_PI);
        for (int i = 0; i < 40; ++i) {
            const double w = 6.5 * gl.x[i];
            m.w2[i] = w * w;
            m.c[i] = two_over_sqrtpi * gl.w[i] * 6.5 * std::exp(-w * w);
        }
        return m;
    }();
    return n;
}

K01 k01_middle(Complex z) {
    const MidNodes& n = mid_nodes();
    const Complex inv2z = 0.5 / z;
    Complex s0(0, 0), s1(0, 0);
    for (int i = 0; i < 40; ++i) {
        const Complex q = std::sqrt(1.0 + n.w2[i] * inv2z);
        s0 += n.c[i] / q;
        s1 += n.c[i] * n.w2[i] * q;
    }
    const Complex pref = std::sqrt(M_PI * inv2z) * std::exp(-z);
    return {pref * s0, pref * 2.0 * s1};
}

// ---- large |z|: asymptotic expansion ------------------------------------
//
// K_nu(z) ~ sqrt(pi/(2z)) e^{-z} sum_k a_k(nu) / z^k,
// a_k(nu) = prod_{j=1..k} (4 nu^2 - (2j-1)^2) / (k! 8^k);
// truncated at the smallest term.

Complex k_asymptotic(Complex z, double fournu2) {
    Complex sum(1.0, 0.0), term(1.0, 0.0);
    double last = 1.0;
    for (int k = 1; k <= 60; ++k) {
        const double odd = 2.0 * k - 1.0;
        term *= (fournu2 - odd * odd) / (8.0 * double(k)) / z;
        const double mag = std::abs(term);
        if (mag >= last) break;  // smallest term reached
        sum += term;
        last = mag;
        if (mag < 1e-17 * std::abs(sum)) break;
    }
    return std::sqrt(M_PI / (2.0 * z)) * std::exp(-z) * sum;
}

}  // namespace

Complex bessel_i0(Complex z) { return i0_series(z); }
Complex bessel_i1(Complex z) { return i1_series(z); }
Complex k0_regular(Complex z) { return k0_regular_series(z); }
Complex k1_regular(Complex z) { return k1_regular_series(z); }

K01 bessel_k01(Complex z) {
    check_domain(z);
    if (z.real() > 745.0) return {Complex(0, 0), Complex(0, 0)};
    const double az = std::abs(z);
    if (az <= 3.0) {
        const Complex lz = std::log(z);
        return {k0_regular_series(z) - lz * i0_series(z),
                1.0 / z + lz * i1_series(z) + k1_regular_series(z)};
    }
    if (az < 18.0) return k01_middle(z);
    return {k_asymptotic(z, 0.0), k_asymptotic(z, 4.0)};
}

Complex bessel_k0(Complex z) { return bessel_k01(z).k0; }
Complex bessel_k1(Complex z) { return bessel_k01(z).k1; }

}  // namespace pzbem
