#include "pzbem/ramp.hpp"

namespace pzbem {

namespace {

// monomial coefficients of the transition polynomial on [0,1]
constexpr double kMono[11] = {0, 0, 0, 0, 0, 252, -1050, 1800, -1575, 700,
                              -126};

Real horner(const double* c, int deg, Real t) {
    Real v = c[deg];
    for (int k = deg - 1; k >= 0; --k) v = v * t + c[k];
    return v;
}

}  // namespace

Real ramp(Real t) {
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return 1.0;
    return horner(kMono, 10, t);
}

Real ramp_d(Real t, int k) {
    if (k == 0) return ramp(t);
    if (k < 0 || k > 4)
        throw ConfigError("ramp_d: derivative order must be 0..4");
    if (t <= 0.0 || t >= 1.0) return 0.0;
    double c[11];
    for (int j = 0; j <= 10; ++j) c[j] = kMono[j];
    int deg = 10;
    for (int d = 0; d < k; ++d) {
        for (int j = 0; j < deg; ++j) c[j] = (j + 1) * c[j + 1];
        c[deg] = 0.0;
        --deg;
    }
    return horner(c, deg, t);
}

Real ramp_integral(Real t) {
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return t - 5.0 / 11.0;  // int_0^1 = 6/11
    double anti[12];
    anti[0] = 0.0;
    for (int j = 0; j <= 10; ++j) anti[j + 1] = kMono[j] / (j + 1);
    return horner(anti, 11, t);
}

}  // namespace pzbem
