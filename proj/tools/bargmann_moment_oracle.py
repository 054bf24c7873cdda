#!/usr/bin/env python3
"""Gaussian-moment oracle for the Bargmann inner product normalization.

The inner product used by the library assigns monomials the closed-form
norm <z^A, z^A> = 2^|A| * A!. This script locks that form in against two
independent computations of the underlying radial integral

    I_a = integral_0^inf rho^(2a+1) exp(-rho^2 / 2) drho

(the angular integral contributes the Kronecker delta between distinct
monomials and a factor 2*pi that cancels against the measure
normalization; coordinates factorize):

  1. exact integration by parts: I_a = 2a * I_{a-1}, I_0 = 1;
  2. adaptive numerical quadrature of the integrand.

Run:  python3 tools/bargmann_moment_oracle.py [--max-a 8]
Exit code 0 iff every row agrees.
"""

import argparse
import math
import sys


def moment_recursion(max_a):
    """I_a via I_a = 2a I_{a-1}, I_0 = 1 (exact integers)."""
    values = [1]
    for a in range(1, max_a + 1):
        values.append(2 * a * values[-1])
    return values


def moment_quadrature(a):
    """Adaptive quadrature of rho^(2a+1) exp(-rho^2/2)."""
    try:
        from scipy.integrate import quad

        value, _ = quad(lambda r: r ** (2 * a + 1) * math.exp(-r * r / 2), 0, math.inf)
        return value
    except ImportError:
        # composite Simpson as a fallback; the integrand decays fast
        upper = 16.0
        n = 20000
        h = upper / n
        total = 0.0
        for i in range(n + 1):
            r = i * h
            w = 1 if i in (0, n) else (4 if i % 2 else 2)
            total += w * r ** (2 * a + 1) * math.exp(-r * r / 2)
        return total * h / 3


def closed_form(a):
    return 2**a * math.factorial(a)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-a", type=int, default=8)
    args = parser.parse_args()

    recursion = moment_recursion(args.max_a)
    ok = True
    print(f"{'a':>3} {'recursion':>16} {'closed form':>16} {'quadrature':>20}")
    for a in range(args.max_a + 1):
        quad_value = moment_quadrature(a)
        closed = closed_form(a)
        exact_match = recursion[a] == closed
        quad_match = abs(quad_value - closed) <= 1e-9 * max(1.0, closed)
        ok = ok and exact_match and quad_match
        flag = "" if (exact_match and quad_match) else "  <-- MISMATCH"
        print(f"{a:>3} {recursion[a]:>16} {closed:>16} {quad_value:>20.6f}{flag}")
    print("closed form 2^a * a! confirmed" if ok else "ORACLE DISAGREES")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
