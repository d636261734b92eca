#!/usr/bin/env python3
"""Generate the frozen reference values used by the C++ test suites.

Everything here is computed with 50-digit arithmetic (mpmath) and written to
tests/reference_values.hpp, so the C++ tests compare double-precision results
against an independent high-precision evaluation of the same definitions:

    pi_n        = 2 * Integral(0..1) dt / sqrt(1 - t^(2n))
    arcsleaf_n  = Integral(0..r) dt / sqrt(1 - t^(2n))
    arccleaf_n  = Integral(r..1) dt / sqrt(1 - t^(2n))
    sleaf_n     = inverse of arcsleaf_n on [0, pi_n/2]
    cleaf_n     = inverse of arccleaf_n on [0, pi_n/2]
    theta       = arctan(sleaf_2(l)),  theta_bar = pi/4 - arctan(cleaf_2(l))

Run from the repository root:  python3 tests/reference/generate.py
"""

import sys
from mpmath import mp, mpf, quad, sqrt, atan, pi, findroot, degrees

mp.dps = 50

GRID = [mpf(i) / 10 for i in range(14)]  # 0.0 .. 1.3


def inv_integrand(n):
    return lambda t: 1 / sqrt(1 - t ** (2 * n))


def pi_n(n):
    return 2 * quad(inv_integrand(n), [0, 1])


def arcsleaf(n, r):
    if r == 0:
        return mpf(0)
    return quad(inv_integrand(n), [0, r])


def arccleaf(n, r):
    if r == 1:
        return mpf(0)
    return quad(inv_integrand(n), [r, 1])


def sleaf(n, l):
    half = pi_n(n) / 2
    if l <= 0:
        return mpf(0)
    if l >= half:
        return mpf(1)
    return findroot(lambda r: arcsleaf(n, r) - l, [mpf(0), mpf(1)],
                    solver="anderson", tol=mpf(10) ** -40)


def cleaf(n, l):
    half = pi_n(n) / 2
    if l <= 0:
        return mpf(1)
    if l >= half:
        return mpf(0)
    return findroot(lambda r: arccleaf(n, r) - l, [mpf(0), mpf(1)],
                    solver="anderson", tol=mpf(10) ** -40)


def lit(x):
    return mp.nstr(x, 18, strip_zeros=False)


def main():
    out = sys.stdout
    if len(sys.argv) > 1:
        out = open(sys.argv[1], "w")

    w = out.write
    w("// Frozen high-precision reference values for the test suites.\n")
    w("// Generated by tests/reference/generate.py (50-digit arithmetic,\n")
    w("// rounded to 18 significant digits).  Do not edit by hand.\n")
    w("#pragma once\n\n")
    w("namespace leaffun_test_ref {\n\n")

    w("// pi_n for n = 1..10; pi_n[0] unused.\n")
    w("inline constexpr double kPiN[11] = {\n    0.0,\n")
    for n in range(1, 11):
        w("    %s,\n" % lit(pi_n(n)))
    w("};\n\n")

    w("// Phase grid 0.0, 0.1, ..., 1.3 with, per row:\n")
    w("// l, theta(rad), theta(deg), theta_bar(rad), theta_bar(deg), sleaf2, cleaf2\n")
    w("inline constexpr int kGridRows = %d;\n" % len(GRID))
    w("inline constexpr double kGrid[%d][7] = {\n" % len(GRID))
    for l in GRID:
        s = sleaf(2, l)
        c = cleaf(2, l)
        th = atan(s)
        thb = pi / 4 - atan(c)
        w("    {%s, %s, %s,\n     %s, %s,\n     %s, %s},\n"
          % (lit(l), lit(th), lit(degrees(th)), lit(thb), lit(degrees(thb)),
             lit(s), lit(c)))
    w("};\n\n")

    w("// Spot values of the leaf functions for n = 3 and n = 5.\n")
    spots = [(3, mpf("0.3")), (3, mpf("0.7")), (5, mpf("0.9")), (5, mpf("0.2"))]
    w("inline constexpr int kSpotRows = %d;\n" % len(spots))
    w("// n, l, sleaf_n(l), cleaf_n(l)\n")
    w("inline constexpr double kLeafSpots[%d][4] = {\n" % len(spots))
    for n, l in spots:
        w("    {%d, %s, %s, %s},\n" % (n, lit(l), lit(sleaf(n, l)), lit(cleaf(n, l))))
    w("};\n\n")

    w("// 1/sqrt(1 - 0.9^4)\n")
    w("inline constexpr double kInvIntegrandN2T09 = %s;\n" % lit(1 / sqrt(1 - mpf("0.9") ** 4)))
    w("// Integral(0..1) dt/sqrt(1-t^4)  (= pi_2/2)\n")
    w("inline constexpr double kQuarterArc = %s;\n\n" % lit(pi_n(2) / 2))

    w("}  // namespace leaffun_test_ref\n")
    if out is not sys.stdout:
        out.close()


if __name__ == "__main__":
    main()
