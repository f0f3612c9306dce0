#!/usr/bin/env python3
"""Generate frozen high-precision reference data used by the library and tests.

Outputs (checked into the repository):
  include/pzbem/gauss_log_rule.hpp  -- Gauss rules for the weight -ln(x) on (0,1)
  tests/reference_data.hpp          -- complex Bessel K0/K1 table, ramp values,
                                       ramp antiderivative coefficients

All values are computed with mpmath at 50 significant digits (sympy exact
rationals where possible) and emitted with 17 significant digits, which
round-trips IEEE doubles exactly.
"""

import mpmath as mp
import sympy as sp

mp.mp.dps = 50


def fmt(x):
    return mp.nstr(mp.mpf(x), 17, strip_zeros=False)


# ----------------------------------------------------------------------------
# Gauss rules for weight w(x) = -ln(x) on (0,1).
# Moments are exact rationals: int_0^1 x^k (-ln x) dx = 1/(k+1)^2.
# Build monic orthogonal polynomials by exact Gram-Schmidt, extract the
# three-term recurrence, then solve the Jacobi eigenproblem in mpmath.
# ----------------------------------------------------------------------------

def gauss_log_rule(n):
    x = sp.Symbol('x')

    def ip(p, q):
        r = sp.expand(p * q)
        poly = sp.Poly(r, x)
        total = sp.Integer(0)
        for (k,), c in poly.terms():
            total += c * sp.Rational(1, (k + 1) ** 2)
        return total

    ps = [sp.Integer(1)]
    alphas = []
    betas = [sp.Rational(1, 1)]  # beta_0 = mu_0 = 1
    nrm = [ip(ps[0], ps[0])]
    for k in range(n):
        a = ip(x * ps[k], ps[k]) / nrm[k]
        alphas.append(a)
        if k == 0:
            pnext = sp.expand((x - a) * ps[k])
        else:
            b = nrm[k] / nrm[k - 1]
            betas.append(b)
            pnext = sp.expand((x - a) * ps[k] - b * ps[k - 1])
        ps.append(pnext)
        nrm.append(ip(pnext, pnext))

    # Jacobi matrix (symmetric tridiagonal) in mpmath.
    al = [mp.mpf(sp.nsimplify(a).evalf(mp.mp.dps)) for a in alphas]
    be = [mp.mpf(sp.nsimplify(b).evalf(mp.mp.dps)) for b in betas[1:]]
    J = mp.zeros(n)
    for i in range(n):
        J[i, i] = al[i]
    for i in range(n - 1):
        s = mp.sqrt(be[i])
        J[i, i + 1] = s
        J[i + 1, i] = s
    ev, Q = mp.eigsy(J)
    nodes = [ev[i] for i in range(n)]
    weights = [Q[0, i] ** 2 * mp.mpf(1)  # beta_0 = 1
               for i in range(n)]
    order = sorted(range(n), key=lambda i: nodes[i])
    return [nodes[i] for i in order], [weights[i] for i in order]


def check_log_rule(nodes, weights, n):
    # The rule must integrate x^k * (-ln x) exactly for k <= 2n-1.
    worst = mp.mpf(0)
    for k in range(2 * n):
        approx = mp.fsum(w * xi ** k for xi, w in zip(nodes, weights))
        exact = mp.mpf(1) / (k + 1) ** 2
        worst = max(worst, abs(approx - exact) / exact)
    return worst


log_rules = {}
for n in (8, 16):
    nodes, weights = gauss_log_rule(n)
    err = check_log_rule(nodes, weights, n)
    assert err < mp.mpf('1e-35'), err
    log_rules[n] = (nodes, weights)
    print(f'gauss-log n={n}: recurrence check {mp.nstr(err, 3)}')

hdr = []
hdr.append('// Generated by tools/gen_reference_data.py. Do not edit by hand.')
hdr.append('// Gauss quadrature rules on (0,1) for the weight function -ln(x):')
hdr.append('//   int_0^1 f(x) (-ln x) dx ~= sum_i w[i] f(x[i]),')
hdr.append('// exact for polynomials f up to degree 2n-1.')
hdr.append('#pragma once')
hdr.append('')
hdr.append('namespace pzbem {')
for n, (nodes, weights) in log_rules.items():
    hdr.append('')
    hdr.append(f'inline constexpr int gauss_log{n}_size = {n};')
    hdr.append(f'inline constexpr double gauss_log{n}_x[{n}] = {{')
    for v in nodes:
        hdr.append(f'    {fmt(v)},')
    hdr.append('};')
    hdr.append(f'inline constexpr double gauss_log{n}_w[{n}] = {{')
    for v in weights:
        hdr.append(f'    {fmt(v)},')
    hdr.append('};')
hdr.append('')
hdr.append('}  // namespace pzbem')
hdr.append('')

with open('include/pzbem/gauss_log_rule.hpp', 'w') as f:
    f.write('\n'.join(hdr))

# ----------------------------------------------------------------------------
# Complex modified Bessel K0/K1 reference values.
# Acceptance grid: 40 log-spaced magnitudes in [1e-6, 1e2] x 5 arguments
# in [-pi/3, pi/3] = 200 points. Extra points cover branch seams, tiny and
# huge magnitudes, and arguments up to +-pi/2 (pure imaginary input).
# ----------------------------------------------------------------------------

def bessel_rows(points):
    rows = []
    for z in points:
        k0 = mp.besselk(0, z)
        k1 = mp.besselk(1, z)
        rows.append((z.real, z.imag, k0.real, k0.imag, k1.real, k1.imag))
    return rows


grid_points = []
for i in range(40):
    mag = mp.mpf(10) ** (mp.mpf(-6) + mp.mpf(8) * i / 39)
    for arg in (-mp.pi / 3, -mp.pi / 6, mp.mpf(0), mp.pi / 6, mp.pi / 3):
        grid_points.append(mag * mp.exp(1j * arg))
assert len(grid_points) == 200

extra_points = []
extra_mags = ['1e-8', '1e-7', '0.5', '1.0', '2.0', '2.8', '2.95', '3.0',
              '3.05', '3.3', '5.0', '8.0', '11.0', '14.0', '14.9', '15.0',
              '15.1', '18.0', '30.0', '100.0', '300.0', '700.0']
extra_args = ['0', '0.5235987755982988', '-1.0471975511965976',
              '1.3', '-1.48', '1.5707963267948966', '-1.5707963267948966']
for m in extra_mags:
    for a in extra_args:
        extra_points.append(mp.mpf(m) * mp.exp(1j * mp.mpf(a)))

# ----------------------------------------------------------------------------
# Quintic ramp H(t): C^4 transition from 0 to 1 over [0,1].
#   H(t) = t^5 (1 - 5(t-1) + 15(t-1)^2 - 35(t-1)^3 + 70(t-1)^4 - 126(t-1)^5)
# Expand to monomials, integrate exactly, and tabulate sample values.
# ----------------------------------------------------------------------------

t = sp.Symbol('t')
H = t ** 5 * (1 - 5 * (t - 1) + 15 * (t - 1) ** 2 - 35 * (t - 1) ** 3
              + 70 * (t - 1) ** 4 - 126 * (t - 1) ** 5)
Hexp = sp.expand(H)
Hpoly = sp.Poly(Hexp, t)
assert Hpoly.degree() == 10
assert Hexp.subs(t, 0) == 0
assert Hexp.subs(t, 1) == 1
for d in range(1, 5):
    dH = sp.diff(Hexp, t, d)
    assert dH.subs(t, 0) == 0, d
    assert dH.subs(t, 1) == 0, d
print('ramp: C^4 at both ends confirmed, degree', Hpoly.degree())

mono = [sp.Integer(0)] * 11
for (k,), c in Hpoly.terms():
    mono[k] = c
anti = [sp.Integer(0)] + [mono[k] / (k + 1) for k in range(11)]
anti_at_1 = sum(anti[k] * sp.Integer(1) for k in range(12))
print('ramp: int_0^1 H =', anti_at_1)

ramp_ts = [sp.Rational(i, 16) for i in range(17)] + [sp.Rational(5, 4)]
ramp_rows = []
for tv in ramp_ts:
    hv = Hexp.subs(t, tv) if tv <= 1 else sp.Integer(1)
    iv = (sum(anti[k] * tv ** k for k in range(12)) if tv <= 1
          else anti_at_1 + (tv - 1))
    ramp_rows.append((mp.mpf(sp.Rational(tv)),
                      mp.mpf(str(sp.nsimplify(hv))),
                      mp.mpf(str(sp.nsimplify(iv)))))

out = []
out.append('// Generated by tools/gen_reference_data.py. Do not edit by hand.')
out.append('// Reference values computed with mpmath at 50 significant digits.')
out.append('#pragma once')
out.append('')
out.append('namespace refdata {')
out.append('')
out.append('struct BesselRef {')
out.append('    double zre, zim, k0re, k0im, k1re, k1im;')
out.append('};')
out.append('')
out.append(f'// Log grid: 40 magnitudes in [1e-6, 1e2] x 5 arguments in '
           f'[-pi/3, pi/3].')
out.append(f'inline constexpr int bessel_grid_size = {len(grid_points)};')
out.append(f'inline constexpr BesselRef bessel_grid[{len(grid_points)}] = {{')
for row in bessel_rows(grid_points):
    out.append('    {' + ', '.join(fmt(v) for v in row) + '},')
out.append('};')
out.append('')
out.append(f'inline constexpr int bessel_extra_size = {len(extra_points)};')
out.append(f'inline constexpr BesselRef bessel_extra[{len(extra_points)}] '
           '= {')
for row in bessel_rows(extra_points):
    out.append('    {' + ', '.join(fmt(v) for v in row) + '},')
out.append('};')
out.append('')
out.append('// Quintic C^4 ramp: monomial coefficients of H on [0,1] '
           '(degree 10),')
out.append('// its exact antiderivative coefficients (degree 11), and '
           'sample values')
out.append('// (t, H(t), int_0^t H).  For t >= 1: H = 1 and the integral '
           'grows linearly.')
out.append('inline constexpr double ramp_mono[11] = {')
for c in mono:
    out.append(f'    {fmt(mp.mpf(str(c)))},')
out.append('};')
out.append('inline constexpr double ramp_anti[12] = {')
for c in anti:
    out.append(f'    {fmt(mp.mpf(str(c)))},')
out.append('};')
out.append(f'inline constexpr double ramp_int_0_1 = '
           f'{fmt(mp.mpf(str(anti_at_1)))};')
out.append('')
out.append('struct RampRef { double t, h, ih; };')
out.append(f'inline constexpr int ramp_table_size = {len(ramp_rows)};')
out.append(f'inline constexpr RampRef ramp_table[{len(ramp_rows)}] = {{')
for row in ramp_rows:
    out.append('    {' + ', '.join(fmt(v) for v in row) + '},')
out.append('};')
out.append('')
out.append('}  // namespace refdata')
out.append('')

with open('tests/reference_data.hpp', 'w') as f:
    f.write('\n'.join(out))

print('wrote include/pzbem/gauss_log_rule.hpp and tests/reference_data.hpp')
