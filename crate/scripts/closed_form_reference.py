"""Independent adaptive-quadrature reference values for the wedge entropy integral.

S = pi * int_{x1 > w} (x1 - w) (h^2 + m^2 k^2 + |grad k|^2) dx

h and k are sums of isotropic Gaussians c * exp(-|x - a|^2 / sigma^2). Derivatives
are written out by hand here and integrated with scipy's adaptive QUADPACK routines,
so nothing is shared with the Rust implementation. Output is frozen into tests.
"""
import numpy as np
from scipy.integrate import quad, dblquad


def gauss(terms, x):
    x = np.atleast_1d(x)
    return sum(c * np.exp(-np.sum((x - np.asarray(a)) ** 2) / s**2) for c, a, s in terms)


def grad(terms, x):
    x = np.atleast_1d(x)
    g = np.zeros_like(x, dtype=float)
    for c, a, s in terms:
        a = np.asarray(a)
        g += c * np.exp(-np.sum((x - a) ** 2) / s**2) * (-2.0 * (x - a) / s**2)
    return g


def lap_pos(terms, x):
    """Positive Laplacian -sum d^2/dx_j^2."""
    x = np.atleast_1d(x)
    out = 0.0
    for c, a, s in terms:
        a = np.asarray(a)
        e = c * np.exp(-np.sum((x - a) ** 2) / s**2)
        for j in range(len(x)):
            out -= e * (4.0 * (x[j] - a[j]) ** 2 / s**4 - 2.0 / s**2)
    return out


def density(h, k, m, x):
    gk = grad(k, x) if k else np.zeros(len(np.atleast_1d(x)))
    hv = gauss(h, x) if h else 0.0
    kv = gauss(k, x) if k else 0.0
    return hv**2 + m * m * kv**2 + float(np.dot(gk, gk))


def total_1d(h, k, m, w=0.0):
    f = lambda x: (x - w) * density(h, k, m, np.array([x]))
    return np.pi * quad(f, w, np.inf, epsabs=1e-14, epsrel=1e-13, limit=400)[0]


def bulk_1d(k, m, w=0.0):
    f = lambda x: (x - w) * gauss(k, x) * (lap_pos(k, x) + m * m * gauss(k, x))
    return np.pi * quad(f, w, np.inf, epsabs=1e-14, epsrel=1e-13, limit=400)[0]


def total_2d(h, k, m, w=0.0):
    f = lambda y, x: (x - w) * density(h, k, m, np.array([x, y]))
    return np.pi * dblquad(f, w, 12.0, -12.0, 12.0, epsabs=1e-13, epsrel=1e-12)[0]


def bulk_2d(k, m, w=0.0):
    def f(y, x):
        p = np.array([x, y])
        return (x - w) * gauss(k, p) * (lap_pos(k, p) + m * m * gauss(k, p))

    return np.pi * dblquad(f, w, 12.0, -12.0, 12.0, epsabs=1e-13, epsrel=1e-12)[0]


def boundary_2d(k, w=0.0):
    f = lambda y: gauss(k, np.array([w, y])) ** 2
    return np.pi * quad(f, -12.0, 12.0, epsabs=1e-14, epsrel=1e-13)[0]


cases = {}
h1 = [(1.0, [2.0], 1.0)]
cases["interior_h_d1"] = total_1d(h1, [], 1.0)
k1 = [(1.0, [0.0], 1.0)]
cases["boundary_k_d1_total"] = total_1d([], k1, 1.0)
cases["boundary_k_d1_bulk"] = bulk_1d(k1, 1.0)
hm = [(1.0, [0.5], 0.8)]
km = [(0.7, [1.0], 1.2)]
cases["mixed_d1_m05"] = total_1d(hm, km, 0.5)
cases["mixed_d1_m05_offset_03"] = total_1d(hm, km, 0.5, 0.3)
k2 = [(1.0, [0.2, 0.0], 1.0), (-0.5, [1.0, 0.5], 0.7)]
cases["two_term_k_d2_m05_total"] = total_2d([], k2, 0.5)
cases["two_term_k_d2_m05_bulk"] = bulk_2d(k2, 0.5)
cases["two_term_k_d2_boundary"] = boundary_2d(k2)
h2 = [(1.0, [2.0, 0.3], 1.0)]
cases["interior_h_d2"] = total_2d(h2, [], 1.0)
hs = [(1.0, [3.0], 0.5)]
cases["shift_h_d1_offset_2"] = total_1d(hs, [], 1.0, 2.0)
rate = np.pi * quad(lambda x: gauss(hs, np.array([x])) ** 2, -20.0, 20.0, epsabs=1e-15, epsrel=1e-14)[0]
cases["shift_h_d1_linear_2"] = total_1d(hs, [], 1.0) - 2.0 * rate

for name, v in cases.items():
    print(f"{name} = {v:.15e}")
