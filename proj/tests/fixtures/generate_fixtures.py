"""Independent oracle values frozen into the C++ tests.

Run: python3 tests/fixtures/generate_fixtures.py

Exact polynomials come from sympy determinants of matrices built directly
from their entry definitions; torus limit references come from mpmath
adaptive quadrature (the trapezoid sum in the library is not used here).
"""
import itertools

import mpmath
import sympy as sp

u = sp.symbols("u")


def arcs_of(n, edges):
    arcs = sorted([(a, b) for a, b in edges] + [(b, a) for a, b in edges])
    return arcs


def degrees(n, edges):
    d = [0] * n
    for a, b in edges:
        d[a] += 1
        d[b] += 1
    return d


def grover_matrix(n, edges):
    arcs = arcs_of(n, edges)
    deg = degrees(n, edges)
    m = len(arcs)
    U = sp.zeros(m, m)
    for i, e in enumerate(arcs):
        for j, f in enumerate(arcs):
            if f[1] == e[0]:
                U[i, j] = sp.Rational(2, deg[f[1]]) - (1 if f == (e[1], e[0]) else 0)
    return U


def coeffs(expr):
    p = sp.Poly(sp.expand(expr), u)
    c = list(reversed(p.all_coeffs()))
    return [str(x) for x in c]


def bass(n, edges):
    deg = degrees(n, edges)
    A = sp.zeros(n, n)
    for a, b in edges:
        A[a, b] = A[b, a] = 1
    D = sp.diag(*deg)
    r = len(edges) - n + 1
    return (1 - u**2) ** (r - 1) * (sp.eye(n) - u * A + u**2 * (D - sp.eye(n))).det()


c3 = (3, [(0, 1), (1, 2), (0, 2)])
k4 = (4, [(a, b) for a in range(4) for b in range(a + 1, 4)])

print("C3 bass:", coeffs(bass(*c3)))
print("C3 (1-u^3)^2:", coeffs((1 - u**3) ** 2))
U3 = grover_matrix(*c3)
print("C3 det(I-uU):", coeffs((sp.eye(6) - u * U3).det()))
print("K4 bass:", coeffs(bass(*k4)))
print("K4 closed form:", coeffs((1 - u**2) ** 2 * (1 - u) * (1 - 2 * u) * (1 + u + 2 * u**2) ** 3))
U4 = grover_matrix(*k4)
gz = sp.expand((sp.eye(12) - u * U4).det(method="berkowitz"))
print("K4 det(I-uU):", coeffs(gz))
print("K4 det(I-uU) at u=1:", gz.subs(u, 1))
print("K4 Tr U^2:", (U4 * U4).trace())
print("K4 det(I-uU) at u=1/5:", gz.subs(u, sp.Rational(1, 5)))
print("K4 grover zeta^{-1} at 1/5 (4th root):", sp.N(gz.subs(u, sp.Rational(1, 5)) ** sp.Rational(1, 4), 20))

mpmath.mp.dps = 30


def torus_limit(d, uu, kind):
    uu = mpmath.mpf(uu)
    if kind == "grover":
        a, b = 1 + uu**2, 2 * uu / d
    else:
        a, b = 1 + (2 * d - 1) * uu**2, 2 * uu
    f = lambda *th: mpmath.log(a - b * sum(mpmath.cos(t) for t in th))
    box = [[0, 2 * mpmath.pi]] * d
    integral = mpmath.quad(f, *box) / (2 * mpmath.pi) ** d
    return (1 - uu**2) ** (d - 1) * mpmath.exp(integral)


for kind in ("ihara", "grover"):
    print(f"limit d=2 u=1/5 {kind}:", mpmath.nstr(torus_limit(2, mpmath.mpf(1) / 5, kind), 20))
    print(f"limit d=1 u=3/10 {kind}:", mpmath.nstr(torus_limit(1, mpmath.mpf(3) / 10, kind), 20))
