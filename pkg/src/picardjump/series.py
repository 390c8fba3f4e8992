"""Truncated power series with complex coefficients, as plain coefficient lists.

coeffs[k] multiplies z^k.  Everything stays a list so callers can serialize
trivially; numpy only appears for bulk evaluation on sample arrays.
"""

import numpy as np


def trim(coeffs, eps=0.0):
    out = list(coeffs)
    while len(out) > 1 and abs(out[-1]) <= eps:
        out.pop()
    return out


def add(a, b):
    n = max(len(a), len(b))
    return [
        (a[k] if k < len(a) else 0) + (b[k] if k < len(b) else 0) for k in range(n)
    ]


def scale(a, c):
    return [c * x for x in a]


def mul(a, b, trunc=None):
    n = len(a) + len(b) - 1
    if trunc is not None:
        n = min(n, trunc + 1)
    out = [0j] * n
    for i, ai in enumerate(a):
        if ai == 0 or i >= n:
            continue
        for j, bj in enumerate(b):
            if i + j >= n:
                break
            out[i + j] += ai * bj
    return out


def combine(vectors, weights):
    """Sum of weights[i] * vectors[i] as a series."""
    out = [0j]
    for w, v in zip(weights, vectors):
        if w:
            out = add(out, scale(v, w))
    return out


def eval_at(coeffs, z):
    """Horner evaluation at a single point."""
    acc = 0j
    for c in reversed(coeffs):
        acc = acc * z + c
    return acc


def eval_many(coeffs, zs):
    """Horner evaluation on a numpy array of points."""
    zs = np.asarray(zs, dtype=complex)
    acc = np.zeros_like(zs)
    for c in reversed(coeffs):
        acc = acc * zs + c
    return acc


def shift(coeffs, c):
    """Recenter: series g with g(w) = f(c + w), via Horner in (w + c)."""
    n = len(coeffs)
    out = [complex(0)]
    for k in range(n - 1, -1, -1):
        # out(w) := out(w) * (w + c) + coeffs[k]
        shifted = [0j] + out
        scaled = [c * x for x in out] + [0j]
        out = [x + y for x, y in zip(shifted, scaled)]
        out[0] += coeffs[k]
    return out[:n]


def is_effectively_constant(coeffs, tol):
    sc = max((abs(c) for c in coeffs), default=0.0)
    thr = tol * max(sc, 1.0)
    return all(abs(c) <= thr for c in coeffs[1:])


def tail_bound(coeffs, rho, domain_radius):
    """Heuristic truncation-tail estimate at radius rho.

    Extrapolates a geometric tail beyond the stored degree with ratio
    rho/domain_radius.  A series ending in exact zeros is taken to be the
    whole function (tail 0); no rigorous enclosure is attempted.
    """
    if not coeffs or coeffs[-1] == 0:
        return 0.0
    d = len(coeffs) - 1
    last = abs(coeffs[-1])
    if domain_radius <= rho:
        return float("inf")
    q = rho / domain_radius
    return last * rho**d * q / (1.0 - q)
