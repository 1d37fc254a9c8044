"""Arbitrary-precision oracle for the frozen constants used by the C++ tests.

Run with: python3 tests/oracles/generate_frozen.py
Every number printed here is pasted verbatim into tests/frozen_values.hpp.
"""
import mpmath as mp

mp.mp.dps = 50

RE = mp.mpf("2.40873")
BH = mp.mpf("0.988879")
DD = mp.mpf(5)
MM = mp.mpf(10)


def pekeris(alpha, c):
    d0 = 1 - (1 - c) * (3 + c) / alpha + 3 * (1 - c) ** 2 / alpha**2
    d1 = 2 * (1 - c) ** 2 * (2 + c) / alpha - 6 * (1 - c) ** 3 / alpha**2
    d2 = -((1 - c) ** 3) * (1 + c) / alpha + 3 * (1 - c) ** 4 / alpha**2
    return d0, d1, d2


def pekeris_by_matching(alpha, c):
    # Solve the 3x3 Taylor-matching system at x = 0 instead of using closed forms.
    x = mp.mpf(0)

    def basis(x):
        u = mp.e ** (-alpha * x)
        y = u / (1 - c * u)
        return [mp.mpf(1), y, y * y]

    rows, rhs = [], []
    target = lambda x: 1 / (1 + x) ** 2
    for order in range(3):
        rows.append([mp.diff(lambda t, k=k: basis(t)[k], x, order) for k in range(3)])
        rhs.append(mp.diff(target, x, order))
    return mp.lu_solve(mp.matrix(rows), mp.matrix(rhs))


def th_value(r, d, bh, re, c):
    u = mp.e ** (-bh * (r - re))
    return d * ((1 - u) / (1 - c * u)) ** 2


def residual(E, n, kappa, c, branch, C, form, s8=1, s9=1, K=None):
    alpha = BH * RE
    d0, d1, d2 = pekeris(alpha, c)
    if branch == "spin":
        eta = kappa * (kappa + 1)
        g = MM + E - C
        b2 = (MM - E) * (MM + E - C)
    else:
        eta = kappa * (kappa - 1)
        g = E - MM - C
        b2 = (MM + E) * (MM - E + C)
    dshift = DD if form != "II" else 0
    c8 = (eta * d0 + g * dshift * RE**2 + b2 * RE**2) / alpha**2
    c9 = c * c / 4 + (eta * d2 + g * DD * RE**2 * (1 - c) ** 2) / alpha**2
    q8 = s8 * mp.sqrt(c8)
    q9 = s9 * mp.sqrt(c9)
    if K is None:
        K = n * n + n + mp.mpf(1) / 2
    B = (eta * d1 + 2 * g * DD * RE**2 * (c - 1)) / alpha**2
    return (2 * n + 1) * (q9 + c * q8) + 2 * q8 * q9 + B + c * K


def root(f, lo, hi):
    return mp.findroot(f, (lo, hi), solver="anderson", tol=mp.mpf(10) ** -40)


def out(name, v):
    print(f"{name} = {mp.nstr(v, 20)}")


alpha = BH * RE
out("th_value_r3", th_value(mp.mpf(3), DD, BH, RE, mp.mpf("0.01")))
for tag, (a, c) in {"a2_c05": (mp.mpf(2), mp.mpf("0.5")), "tab2": (alpha, mp.mpf("0.01"))}.items():
    closed = pekeris(a, c)
    matched = pekeris_by_matching(a, c)
    for i in range(3):
        out(f"pekeris_{tag}_D{i}", closed[i])
        assert abs(closed[i] - matched[i]) < mp.mpf(10) ** -30

c = mp.mpf("0.01")
r = mp.mpf("1.2") * RE
d0, d1, d2 = pekeris(alpha, c)
u = mp.e ** (-alpha * (r - RE) / RE)
y = u / (1 - c * u)
pek = 2 / RE**2 * (d0 + d1 * y + d2 * y * y)
out("centrifugal_pekeris_1p2re", pek)
out("centrifugal_ratio_1p2re", pek / (2 / r**2))

c1, c2, c3, x1, x2, x3 = 1, mp.mpf("0.5"), mp.mpf("0.5"), 2, 3, 1
c4 = (1 - mp.mpf(c1)) / 2
c5 = (c2 - 2 * c3) / 2
c6 = c5**2 + x1
c7 = 2 * c4 * c5 - x2
c8 = c4**2 + x3
c9 = c3 * (c7 + c3 * c8) + c6
c10 = c1 + 2 * c4 + 2 * mp.sqrt(c8) - 1
c11 = 1 - c1 - 2 * c4 + 2 / c3 * mp.sqrt(c9)
c12 = c4 + mp.sqrt(c8)
c13 = -c4 + (mp.sqrt(c9) - c5) / c3
for k, v in zip(range(4, 14), [c4, c5, c6, c7, c8, c9, c10, c11, c12, c13]):
    out(f"nu_c{k}", v)
n = 2
res = (c2 * n - (2 * n + 1) * c5 + (2 * n + 1) * (mp.sqrt(c9) + c3 * mp.sqrt(c8)) + n * (n - 1) * c3
       + c7 + 2 * c3 * c8 + 2 * mp.sqrt(c8 * c9))
out("nu_residual_n2", res)

out("jacobi_5_07_13_04", mp.jacobi(5, mp.mpf("0.7"), mp.mpf("1.3"), mp.mpf("0.4")))

print("# standard spin levels, table2 preset, c_h = 0.01")
for n, k in [(0, -2), (0, -3), (0, -4), (0, -5), (1, -2), (1, -3), (1, -4), (1, -5)]:
    f = lambda E: residual(E, n, k, mp.mpf("0.01"), "spin", mp.mpf(10), "TH")
    xs = [mp.mpf(10) + mp.mpf(i) / 200 for i in range(1, 1000)]
    vals = [f(x) for x in xs]
    for i in range(len(xs) - 1):
        if vals[i] * vals[i + 1] < 0:
            out(f"std_spin_{n}_{-k}", mp.findroot(f, (xs[i], xs[i + 1]), solver="bisect", tol=mp.mpf(10) ** -35))
            break

print("# standard pspin levels, table3 preset with C_ps = -20, c_h = -0.01")
for n, k in [(1, -1), (1, -2), (1, -3), (1, -4), (2, -1), (2, -2), (2, -3), (2, -4)]:
    f = lambda E: residual(E, n, k, mp.mpf("-0.01"), "pspin", mp.mpf(-20), "TH")
    xs = [mp.mpf(-10) + mp.mpf(i) / 200 for i in range(1, 1000)]
    vals = []
    for x in xs:
        try:
            v = f(x)
            vals.append(v if mp.im(v) == 0 else None)
        except Exception:
            vals.append(None)
    for i in range(len(xs) - 1):
        if vals[i] is not None and vals[i + 1] is not None and vals[i] * vals[i + 1] < 0:
            out(f"std_pspin_cps20_{n}_{-k}", mp.findroot(f, (xs[i], xs[i + 1]), solver="bisect", tol=mp.mpf(10) ** -35))
            break

print("# ground-state spinor, standard spin (0,-2), c_h = 0.01")
E0 = mp.findroot(lambda E: residual(E, 0, -2, c, "spin", mp.mpf(10), "TH"), (mp.mpf("10.5"), mp.mpf("10.9")), solver="bisect", tol=mp.mpf(10) ** -35)
eta = 2
g = MM + E0 - 10
b2 = (MM - E0) * g
c8 = (eta * d0 + g * DD * RE**2 + b2 * RE**2) / alpha**2
c9 = c * c / 4 + (eta * d2 + g * DD * RE**2 * (1 - c) ** 2) / alpha**2
e12 = mp.sqrt(c8)
e13 = mp.mpf(1) / 2 + mp.sqrt(c9) / c
out("gs_c12", e12)
out("gs_c13", e13)
F = lambda r: (mp.e ** (-BH * (r - RE))) ** e12 * (1 - c * mp.e ** (-BH * (r - RE))) ** e13
out("gs_F_unnormalized_at_re", F(RE))
dF = lambda r: mp.diff(F, r)
G = lambda r: (dF(r) + (-2) * F(r) / r) / (MM + E0 - 10)
dens = lambda r: F(r) ** 2 + G(r) ** 2
norm = mp.quad(dens, [mp.mpf("1e-6"), RE / 2, RE, RE + 5, RE + 20, mp.inf])
out("gs_unnormalized_norm", norm)
