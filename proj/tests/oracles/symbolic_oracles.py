"""Symbolic oracles for the reduction potentials.

Independent of the C++ jets: every derivative here comes from sympy.
Exits nonzero if any check fails.
"""

import sys

import sympy as sp

x1, x2, x3 = sp.symbols("x1 x2 x3", real=True)
X = (x1, x2, x3)
failures = []


def check(name, ok):
    print(("PASS " if ok else "FAIL ") + name)
    if not ok:
        failures.append(name)


def grad(f):
    return sp.Matrix([sp.diff(f, xi) for xi in X])


def w0(mu):
    g = grad(mu)
    lap = sum(sp.diff(mu, xi, 2) for xi in X)
    return sp.Matrix(3, 3, lambda j, k: (lap / mu if j == k else 0) + g[j] * g[k] / mu**2
                     - sp.diff(mu, X[j], X[k]) / mu)


def w(mu):
    g = grad(mu)
    lap = sum(sp.diff(mu, xi, 2) for xi in X)
    gg = (g.T * g)[0]
    return sp.Matrix(3, 3, lambda j, k: (lap / (2 * mu) - gg / (4 * mu**2) if j == k else 0)
                     + g[j] * g[k] / mu**2 - sp.diff(mu, X[j], X[k]) / mu)


# W at mu = 2 + cos(2 pi x3).
mu = 2 + sp.cos(2 * sp.pi * x3)
pi2 = sp.pi**2
W = w(mu)
expected0 = sp.diag(-2 * pi2 / 3, -2 * pi2 / 3, 2 * pi2 / 3)
expected14 = sp.diag(-pi2 / 4, -pi2 / 4, 3 * pi2 / 4)
check("W(2+cos 2pi x3) at x3=0", sp.simplify(W.subs(x3, 0) - expected0) == sp.zeros(3))
check("W(2+cos 2pi x3) at x3=1/4", sp.simplify(W.subs(x3, sp.Rational(1, 4)) - expected14) == sp.zeros(3))

# Scalar jet examples.
check("mu value/gradient/hessian at x3=0",
      mu.subs(x3, 0) == 3 and grad(mu).subs(x3, 0) == sp.zeros(3, 1)
      and sp.simplify(sp.diff(mu, x3, 2).subs(x3, 0) + 4 * pi2) == 0)
check("mu value/gradient/hessian at x3=1/4",
      mu.subs(x3, sp.Rational(1, 4)) == 2
      and sp.simplify(grad(mu).subs(x3, sp.Rational(1, 4)) - sp.Matrix([0, 0, -2 * sp.pi])) == sp.zeros(3, 1)
      and sp.simplify(sp.diff(mu, x3, 2).subs(x3, sp.Rational(1, 4))) == 0)

# W0 identity for a generic positive coefficient:
#   div(mu^-1 grad mu) v + mu^-2 |grad mu|^2 v - (v.grad)(mu^-1 grad mu) = W0(mu) v.
M = sp.Function("M", positive=True)(*X)
v = sp.Matrix(sp.symbols("v1:4"))
g = grad(M) / M
div_g = sum(sp.diff(g[i], X[i]) for i in range(3))
lhs = div_g * v + (grad(M).T * grad(M))[0] / M**2 * v - sp.Matrix([sum(v[k] * sp.diff(g[j], X[k]) for k in range(3))
                                                                      for j in range(3)])
check("W0 identity, generic coefficient", sp.simplify(lhs - w0(M) * v) == sp.zeros(3, 1))

# Zeroth-order algebra of the reduced form at one point, with
# curl u = i lam mu v and curl v = -i lam eps u substituted.
lam = sp.symbols("lam", real=True)
e, m = sp.symbols("e m", positive=True)
ge = sp.Matrix(sp.symbols("ge1:4", real=True))
gm = sp.Matrix(sp.symbols("gm1:4", real=True))


def cvec(n):
    return sp.Matrix([sp.Symbol(f"{n}{i}r", real=True) + sp.I * sp.Symbol(f"{n}{i}i", real=True) for i in range(3)])


u, vv, ww, f = cvec("u"), cvec("v"), cvec("w"), cvec("f")


def ip(a, b):
    return sum(a[i] * sp.conjugate(b[i]) for i in range(3))


g_inv = -(m * ge + e * gm) / (e * m) ** 2
s = sp.sqrt(e * m)
gs = (m * ge + e * gm) / (2 * s)
F = sp.Matrix([[0, -gs[2], gs[1]], [gs[2], 0, -gs[0]], [-gs[1], gs[0], 0]])
curl_u = sp.I * lam * m * vv
curl_v = -sp.I * lam * e * u
P1, P2 = sp.sqrt(e) * u, sp.sqrt(m) * vv
Q1, Q2 = ww / (sp.sqrt(e) * m), f / (e * sp.sqrt(m))
cross_terms = -ip(curl_u, e * g_inv.cross(ww)) - ip(curl_v, m * g_inv.cross(f))
lhs = cross_terms - e * m * lam**2 * (ip(P1, Q1) + ip(P2, Q2))
rhs = ip(-2 * sp.I * lam * F * P2, Q1) + ip(2 * sp.I * lam * F * P1, Q2) - e * m * lam**2 * (ip(P1, Q1) + ip(P2, Q2))
check("first-order coupling algebra", sp.simplify(sp.expand(lhs - rhs)) == 0)

sys.exit(1 if failures else 0)
