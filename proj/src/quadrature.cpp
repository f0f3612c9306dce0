#include "pzbem/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace pzbem {

namespace {

Rule1D make_gauss_legendre(int n) {
    // Nodes on [-1,1] by Newton iteration from the Chebyshev-like initial
    // guess, then mapped to [0,1].
    Rule1D rule;
    rule.x.resize(n);
    rule.w.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        Real x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        Real pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            // evaluate P_n(x) and P_n'(x) by the three-term recurrence
            Real p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                Real p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            pp = n * (x * p1 - p0) / (x * x - 1.0);
            Real dx = -p1 / pp;
            x += dx;
            if (std::abs(dx) < 1e-16) break;
        }
        Real w = 2.0 / ((1.0 - x * x) * pp * pp);
        rule.x[i] = 0.5 * (1.0 - x);  // descending cos -> ascending node
        rule.x[n - 1 - i] = 0.5 * (1.0 + x);
        rule.w[i] = 0.5 * w;
        rule.w[n - 1 - i] = 0.5 * w;
    }
    return rule;
}

}  // namespace

const Rule1D& gauss_legendre(int n) {
    static std::map<int, Rule1D> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it == cache.end()) {
        if (n < 1 || n > 200) throw ConfigError("gauss_legendre: bad order");
        it = cache.emplace(n, make_gauss_legendre(n)).first;
    }
    return it->second;
}

const Rule1D& gauss_log(int n) {
    static Rule1D r8, r16;
    static std::once_flag once;
    std::call_once(once, [] {
        r8.x.assign(gauss_log8_x, gauss_log8_x + gauss_log8_size);
        r8.w.assign(gauss_log8_w, gauss_log8_w + gauss_log8_size);
        r16.x.assign(gauss_log16_x, gauss_log16_x + gauss_log16_size);
        r16.w.assign(gauss_log16_w, gauss_log16_w + gauss_log16_size);
    });
    if (n == 8) return r8;
    if (n == 16) return r16;
    throw ConfigError("gauss_log: only n=8 and n=16 are tabulated");
}

const TriRule& tri_rule_deg2() {
    static const TriRule rule = [] {
        TriRule r;
        r.x = {0.5, 0.5, 0.0};
        r.y = {0.0, 0.5, 0.5};
        r.w = {1.0 / 6.0, 1.0 / 6.0, 1.0 / 6.0};
        return r;
    }();
    return rule;
}

const TriRule& tri_rule_product(int n) {
    if (n < 1) throw ConfigError("tri_rule_product: n must be positive");
    static std::map<int, TriRule> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it == cache.end()) {
        // Collapse the square [0,1]^2 onto the triangle via
        // (xi, eta) -> (xi, eta (1 - xi)), Jacobian (1 - xi).
        const Rule1D& g = gauss_legendre(n);
        TriRule r;
        r.x.reserve(n * n);
        r.y.reserve(n * n);
        r.w.reserve(n * n);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                r.x.push_back(g.x[i]);
                r.y.push_back(g.x[j] * (1.0 - g.x[i]));
                r.w.push_back(g.w[i] * g.w[j] * (1.0 - g.x[i]));
            }
        }
        it = cache.emplace(n, std::move(r)).first;
    }
    return it->second;
}

const TriRule& tri_rule_deg5() {
    static const TriRule rule = [] {
        // 7-point degree-5 rule: centroid plus two symmetric orbits with
        // barycentric parameters (6 +- sqrt(15))/21.
        TriRule r;
        const Real s15 = std::sqrt(15.0);
        const Real a1 = (6.0 - s15) / 21.0, w1 = (155.0 - s15) / 2400.0;
        const Real a2 = (6.0 + s15) / 21.0, w2 = (155.0 + s15) / 2400.0;
        r.x = {1.0 / 3.0};
        r.y = {1.0 / 3.0};
        r.w = {9.0 / 80.0};
        for (auto [a, w] : {std::pair{a1, w1}, std::pair{a2, w2}}) {
            const Real b = 1.0 - 2.0 * a;
            r.x.insert(r.x.end(), {a, a, b});
            r.y.insert(r.y.end(), {a, b, a});
            r.w.insert(r.w.end(), {w, w, w});
        }
        return r;
    }();
    return rule;
}

}  // namespace pzbem
