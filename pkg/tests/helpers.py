"""Shared factories and assertion helpers for the test suite."""

import numpy as np

from elga.algebra import (
    Multivector,
    Space,
    as_multivector,
    coeff_norm,
    exp_bivector,
    geometric_product,
    grade,
    normalized,
    regressive,
)

def rand_mv(space, rng, scale=1.0):
    return Multivector(space, scale * rng.standard_normal(space.size))


def rand_blade_coeffs(space, k, rng):
    """Random element of pure grade k (not necessarily a blade for k=2 el3)."""
    full = rand_mv(space, rng)
    return grade(full, k)


def rand_point(space, rng):
    """Random normalised point (top-grade element of the space)."""
    k = {Space.EL1: 1, Space.EL2: 2, Space.EL3: 3}[space]
    return normalized(rand_blade_coeffs(space, k, rng))


def rand_line_el2(rng):
    return normalized(rand_blade_coeffs(Space.EL2, 1, rng))


def rand_plane_el3(rng):
    return normalized(rand_blade_coeffs(Space.EL3, 1, rng))


def rand_line_el3(rng):
    """Random normalised line, as the join of two random points."""
    while True:
        p, q = rand_point(Space.EL3, rng), rand_point(Space.EL3, rng)
        join = regressive(p, q)
        if coeff_norm(join) > 1e-3:
            return normalized(join)


def rand_bivector_el3(rng, max_norm=2.0):
    b = rand_blade_coeffs(Space.EL3, 2, rng)
    return b * (rng.uniform(0.05, max_norm) / coeff_norm(b))


def rand_spinor(space, rng, max_angle=2.0):
    if space is Space.EL1:
        gen = Multivector.from_terms(space, {"e01": rng.uniform(-max_angle, max_angle)})
    elif space is Space.EL2:
        gen = rand_blade_coeffs(space, 2, rng)
        gen = gen * (rng.uniform(0.05, max_angle) / coeff_norm(gen))
    else:
        gen = rand_bivector_el3(rng, max_angle)
    return exp_bivector(gen)


def mv_diff(a, b):
    a, b = as_multivector(a), as_multivector(b)
    return float(np.max(np.abs(a.coeffs - b.coeffs)))


def assert_mv_close(a, b, tol=1e-12):
    d = mv_diff(a, b)
    assert d <= tol, f"multivectors differ by {d:.3e} (> {tol:.1e})"


def assert_mv_close_up_to_sign(a, b, tol=1e-12):
    a, b = as_multivector(a), as_multivector(b)
    d = min(float(np.max(np.abs(a.coeffs - b.coeffs))),
            float(np.max(np.abs(a.coeffs + b.coeffs))))
    assert d <= tol, f"multivectors differ (either sign) by {d:.3e}"


def exp_power_series(b, terms=20):
    """Truncated power-series exponential, the independent oracle."""
    b = as_multivector(b)
    acc = Multivector.scalar(b.space, 1.0)
    term = Multivector.scalar(b.space, 1.0)
    for k in range(1, terms):
        term = geometric_product(term, b) * (1.0 / k)
        acc = acc + term
    return acc


def blade_product_bruteforce(a_indices, b_indices):
    """Sign and index set of e_A e_B by explicit transposition counting.

    Independent of the kernel's popcount tables: bubble-sorts the
    concatenated index sequence, flipping the sign per adjacent swap and
    cancelling equal neighbours with metric +1.
    """
    seq = list(a_indices) + list(b_indices)
    sign = 1
    changed = True
    while changed:
        changed = False
        i = 0
        while i < len(seq) - 1:
            if seq[i] == seq[i + 1]:
                del seq[i:i + 2]
                changed = True
                i = max(i - 1, 0)
            elif seq[i] > seq[i + 1]:
                seq[i], seq[i + 1] = seq[i + 1], seq[i]
                sign = -sign
                changed = True
                i += 1
            else:
                i += 1
    return sign, tuple(seq)


def bits_of(index):
    return tuple(i for i in range(8) if index >> i & 1)
