#pragma once

#include <vector>

#include "pzbem/gauss_log_rule.hpp"
#include "pzbem/types.hpp"

namespace pzbem {

struct Rule1D {
    std::vector<Real> x;  // nodes
    std::vector<Real> w;  // weights
    int size() const { return static_cast<int>(x.size()); }
};

// Gauss-Legendre rule with n points on [0,1], exact for degree 2n-1.
// Nodes are found by Newton iteration on the Legendre polynomial; the
// result is cached per n and deterministic.
const Rule1D& gauss_legendre(int n);

// Gauss rule on (0,1) for the weight -ln(x): int_0^1 f(x)(-ln x) dx.
// Nodes/weights are frozen high-precision constants.
const Rule1D& gauss_log(int n);

// Symmetric rules on the reference triangle {x>=0, y>=0, x+y<=1}.
// Weights sum to the reference area 1/2.
struct TriRule {
    std::vector<Real> x, y, w;
    int size() const { return static_cast<int>(x.size()); }
};

// degree-2 three-point rule (edge midpoints)
const TriRule& tri_rule_deg2();
// degree-5 seven-point rule
const TriRule& tri_rule_deg5();

// Conical product rule with n*n points, exact for degree 2n-2; built by
// collapsing a Gauss-Legendre tensor grid onto the triangle. Cached per n.
const TriRule& tri_rule_product(int n);

}  // namespace pzbem
