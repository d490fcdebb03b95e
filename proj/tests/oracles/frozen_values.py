"""Independent high-precision oracle for the frozen reference values in the C++ tests.

Evaluates Hadamard integrals by mpmath tanh-sinh quadrature in u = ln(t/tau):

    D^(-a) f (t) = 1/Gamma(a) * int_0^{ln t} u^(a-1) f(t e^(-u)) du

and prints every value at 17 significant digits. Rerun with `python frozen_values.py`
after changing a test case; nothing here is imported by the build.
"""

import mpmath as mp

mp.mp.dps = 40


def D(a, f, t):
    a = mp.mpf(a)
    t = mp.mpf(t)
    L = mp.log(t)
    return mp.quad(lambda u: u ** (a - 1) * f(t * mp.exp(-u)), [0, L / 2, L]) / mp.gamma(a)


def show(name, value):
    print(f"{name} = {mp.nstr(value, 17, min_fixed=-3, max_fixed=3)}")


ln = mp.log
e = mp.e

# Scalar oracles.
show("gamma(0.5)", mp.gamma(0.5))
show("gamma(1.5)", mp.gamma(1.5))
show("gamma(2.5)", mp.gamma(2.5))
show("gamma(0.1)", mp.gamma(0.1))
show("gamma(1.4616)", mp.gamma(1.4616))
show("gamma(33.3)", mp.gamma(mp.mpf("33.3")))
show("gamma(170)", mp.gamma(170))
show("2/sqrt(pi)", 2 / mp.sqrt(mp.pi))
show("1/sqrt(pi)", 1 / mp.sqrt(mp.pi))

# Semigroup reference for sqrt(tau): D^(-1) sqrt at t=2 equals 2(sqrt 2 - 1).
show("D1_sqrt_t2", D(1, mp.sqrt, 2))
show("D0.5_sqrt_t5", D(0.5, mp.sqrt, 5))
show("D2.5_cos_lnx_t7", D(2.5, lambda s: mp.cos(ln(s)), 7))

# Polya-Szego single order.
a, t = 0.75, e
x = lambda s: 1 + ln(s)
y = lambda s: 2 - ln(s) / 2
lhs = D(a, lambda s: 1.5 * 2 * x(s) ** 2, t) * D(a, lambda s: 1 * 2 * y(s) ** 2, t)
c = D(a, lambda s: (1 * 1.5 + 2 * 2) * x(s) * y(s), t)
show("T31 lhs", lhs)
show("T31 bound", c * c / 4)

# Polya-Szego two orders.
a, b, t = 0.4, 0.9, 3
x = lambda s: 1 + ln(s) / 2
y = lambda s: mp.mpf(1.5)
u1 = lambda s: mp.mpf(1)
u2 = lambda s: 1 + ln(mp.mpf(t)) / 2
v = lambda s: mp.mpf(1.5)
lhs = (D(a, lambda s: u1(s) * u2(s), t) * D(b, lambda s: v(s) ** 2, t)
       * D(a, lambda s: x(s) ** 2, t) * D(b, lambda s: y(s) ** 2, t))
sm = (D(a, lambda s: u1(s) * x(s), t) * D(b, lambda s: v(s) * y(s), t)
      + D(a, lambda s: u2(s) * x(s), t) * D(b, lambda s: v(s) * y(s), t))
show("T32 lhs", lhs)
show("T32 bound", sm * sm / 4)

# Product bound with +-20% envelopes.
a, b, t = 0.6, 1.2, 2
x = lambda s: 2 - 1 / s
y = lambda s: 1 + ln(s) ** 2
lhs = D(a, lambda s: x(s) ** 2, t) * D(b, lambda s: y(s) ** 2, t)
bound = (D(a, lambda s: 1.2 * x(s) * x(s) * y(s) / (0.8 * y(s)), t)
         * D(b, lambda s: 1.2 * y(s) * x(s) * y(s) / (0.8 * x(s)), t))
show("T33 lhs", lhs)
show("T33 bound", bound)

# Constant-bound corollaries.
a, t = 1, e
x = lambda s: 1 + ln(s) / 2
y = lambda s: 2 - ln(s) / 2
lhs = D(a, lambda s: x(s) ** 2, t) * D(a, lambda s: y(s) ** 2, t) / D(a, lambda s: x(s) * y(s), t) ** 2
show("P31 lhs", lhs)
show("P31 bound", (mp.sqrt(mp.mpf(1.5) / 3) + mp.sqrt(3 / mp.mpf(1.5))) ** 2 / 4)

a, b, t = 0.5, 0.5, e
x = lambda s: 1 + ln(s) ** 2 / 4
one = lambda s: mp.mpf(1)
lhs = (D(a, one, t) * D(b, one, t) * D(a, lambda s: x(s) ** 2, t) * D(b, one, t)
       / (D(a, x, t) * D(b, one, t)) ** 2)
show("P32 lhs", lhs)
show("P32 bound", (mp.sqrt(mp.mpf("0.8")) + mp.sqrt(mp.mpf("1.25"))) ** 2 / 4)

a, b, t = 0.5, 1, e
x = lambda s: 1 + ln(s)
y = lambda s: 3 - ln(s)
lhs = D(a, lambda s: x(s) ** 2, t) * D(b, lambda s: y(s) ** 2, t)
bound = mp.mpf(2 * 3) / (1 * 2) * D(a, lambda s: x(s) * y(s), t) * D(b, lambda s: x(s) * y(s), t)
show("P33 lhs", lhs)
show("P33 bound", bound)


# Minkowski-type bound, written out from its three ingredients.
def t34(x, y, p, m, M, a, t):
    q = p / (p - 1)
    cp = (M / (M + 1)) ** p / p
    cq = 1 / (q * (m + 1) ** q)
    lhs = D(a, lambda s: x(s) * y(s), t)
    bound = (2 ** (p - 1) * cp * D(a, lambda s: x(s) ** p + y(s) ** p, t)
             + 2 ** (q - 1) * cq * D(a, lambda s: x(s) ** q + y(s) ** q, t))
    return lhs, bound


lhs, bound = t34(one, one, mp.mpf(3), mp.mpf("0.9"), mp.mpf("1.1"), 0.5, e)
show("T34 const lhs", lhs)
show("T34 const bound", bound)
lhs, bound = t34(lambda s: 1 + ln(s) / 10, one, mp.mpf(2), mp.mpf("0.5"), mp.mpf(2), 0.8, 3)
show("T34 lhs", lhs)
show("T34 bound", bound)

p, q = mp.mpf(3), mp.mpf("1.5")
x = lambda s: ln(s) + 1
y = lambda s: 1 / s
show("YOUNG lhs", D(0.5, lambda s: x(s) * y(s), 2))
show("YOUNG bound", D(0.5, lambda s: x(s) ** p, 2) / p + D(0.5, lambda s: y(s) ** q, 2) / q)

r = mp.mpf("2.5")
show("POWMEAN lhs", D(0.7, lambda s: (abs(ln(s)) + 1) ** r, 4))
show("POWMEAN bound", 2 ** (r - 1) * D(0.7, lambda s: abs(ln(s)) ** r + 1, 4))
