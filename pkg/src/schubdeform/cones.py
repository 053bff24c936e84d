"""Exact rational polyhedral helpers: cone membership and extreme rays.

Everything runs over the rationals, no floating point.  Cones appear in
two forms: generated (membership is a phase-one simplex with Bland's
rule, so it terminates) and cut out by homogeneous inequalities (minimal
generators via incremental double description with the combinatorial
adjacency test on tight-row sets).
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

Vec = tuple[Fraction, ...]


def _vec(v: Iterable) -> Vec:
    return tuple(Fraction(x) for x in v)


def _dot(a: Sequence[Fraction], b: Sequence[Fraction]) -> Fraction:
    total = Fraction(0)
    for x, y in zip(a, b):
        if x and y:
            total += x * y
    return total


def primitive(v: Sequence) -> tuple[int, ...]:
    """Scale a nonzero rational vector to coprime integers, keeping direction."""
    fr = [Fraction(x) for x in v]
    den = 1
    for x in fr:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in fr]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    if g == 0:
        raise ValueError("zero vector has no direction")
    return tuple(x // g for x in ints)


def cone_contains(target: Sequence, generators: Sequence[Sequence]) -> bool:
    """Whether target lies in the nonnegative rational span of the generators."""
    t = [Fraction(x) for x in target]
    m = len(t)
    cols = [_vec(g) for g in generators]
    for g in cols:
        if len(g) != m:
            raise ValueError("generator dimension mismatch")
    n = len(cols)
    sign = [1 if t[i] >= 0 else -1 for i in range(m)]
    # tableau rows: [generator columns | artificial identity | rhs]
    T = []
    for i in range(m):
        row = [sign[i] * cols[j][i] for j in range(n)]
        row += [Fraction(int(i == k)) for k in range(m)]
        row.append(sign[i] * t[i])
        T.append(row)
    basis = list(range(n, n + m))
    width = n + m
    # phase-one reduced costs: unit cost on the artificials
    red = [Fraction(0)] * (width + 1)
    for j in range(width):
        colsum = sum(T[i][j] for i in range(m))
        red[j] = (Fraction(1) if j >= n else Fraction(0)) - colsum
    red[width] = -sum(T[i][width] for i in range(m))
    while True:
        enter = next((j for j in range(width) if red[j] < 0), None)
        if enter is None:
            break
        leave = None
        best = None
        for i in range(m):
            if T[i][enter] > 0:
                ratio = T[i][width] / T[i][enter]
                if best is None or ratio < best or (
                        ratio == best and basis[i] < basis[leave]):
                    best = ratio
                    leave = i
        if leave is None:
            raise AssertionError("phase-one objective unbounded below")
        piv = T[leave][enter]
        T[leave] = [x / piv for x in T[leave]]
        for i in range(m):
            if i != leave and T[i][enter]:
                f = T[i][enter]
                T[i] = [a - f * b for a, b in zip(T[i], T[leave])]
        if red[enter]:
            f = red[enter]
            red = [a - f * b for a, b in zip(red, T[leave])]
        basis[leave] = enter
    return red[width] == 0


def extreme_rays(rows: Sequence[Sequence], dim: int | None = None
                 ) -> tuple[list[tuple[int, ...]], list[tuple[int, ...]]]:
    """Minimal generators of the cone {x : r.x <= 0 for every row r}.

    Returns (lineality basis, extreme rays) as primitive integer vectors;
    the cone is the rational span of the lineality plus nonnegative
    combinations of the rays.  The ray list is sorted and canonical; the
    lineality basis is one choice of basis, not canonical.
    """
    rws = [_vec(r) for r in rows]
    if dim is None:
        if not rws:
            raise ValueError("dimension required when there are no rows")
        dim = len(rws[0])
    for r in rws:
        if len(r) != dim:
            raise ValueError("row dimension mismatch")
    lineality: list[Vec] = [
        tuple(Fraction(int(i == j)) for j in range(dim)) for i in range(dim)]
    rays: list[tuple[Vec, frozenset[int]]] = []
    for idx, a in enumerate(rws):
        vals = [_dot(a, l) for l in lineality]
        k0 = next((k for k, v in enumerate(vals) if v != 0), None)
        if k0 is not None:
            # slice the lineality: one direction becomes a ray
            l0, v0 = lineality[k0], vals[k0]
            new_lin = []
            for k, l in enumerate(lineality):
                if k != k0:
                    f = vals[k] / v0
                    new_lin.append(tuple(x - f * y for x, y in zip(l, l0)))
            new_rays = []
            for vec, zs in rays:
                f = _dot(a, vec) / v0
                new_rays.append(
                    (tuple(x - f * y for x, y in zip(vec, l0)), zs | {idx}))
            r0 = l0 if v0 < 0 else tuple(-x for x in l0)
            new_rays.append((r0, frozenset(range(idx))))
            lineality = new_lin
            rays = new_rays
            continue
        zero, neg, pos = [], [], []
        for vec, zs in rays:
            v = _dot(a, vec)
            if v == 0:
                zero.append((vec, zs | {idx}))
            elif v < 0:
                neg.append((vec, zs, v))
            else:
                pos.append((vec, zs, v))
        if not pos:
            rays = zero + [(vec, zs) for vec, zs, _ in neg]
            continue
        others = ([zs for _, zs in zero] + [zs for _, zs, _ in neg]
                  + [zs for _, zs, _ in pos])
        combos = []
        for ni, (vn, zn, dn) in enumerate(neg):
            for pi, (vp, zp, dp) in enumerate(pos):
                common = zn & zp
                adjacent = True
                for oi, other in enumerate(others):
                    if oi == len(zero) + ni or oi == len(zero) + len(neg) + pi:
                        continue
                    if common <= other:
                        adjacent = False
                        break
                if adjacent:
                    vec = tuple(dp * x - dn * y for x, y in zip(vn, vp))
                    combos.append((vec, common | {idx}))
        rays = zero + [(vec, zs) for vec, zs, _ in neg] + combos
    lin_out = [primitive(l) for l in lineality]
    ray_out = sorted(primitive(v) for v, _ in rays)
    return lin_out, ray_out
