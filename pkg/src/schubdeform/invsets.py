"""Inversion-set combinatorics of the degenerate product on G/B.

On the full flag variety the degenerate product of two dual-basis classes
is again a basis class or zero, governed purely by inversion sets:
eps_u * eps_v = eps_w when Phi_u and Phi_v are disjoint and their union is
the inversion set Phi_w of some (then unique) w, and 0 otherwise.

A subset of the positive roots is an inversion set iff it is closed under
root addition and so is its complement; the graded pieces of the nil-radical
cohomology are indexed by the w of each length, with lowest weight data
w^{-1} rho - rho.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .deform import DeformedRing
from .rootsystem import Weight
from .weyl import Parabolic, WeylElement, WeylGroup


def inversion_product(group: WeylGroup, u: WeylElement, v: WeylElement) -> WeylElement | None:
    """eps_u * eps_v under the degenerate product on G/B: an element or None (zero)."""
    pu = group.inversion_set(u)
    pv = group.inversion_set(v)
    if pu & pv:
        return None
    return element_with_inversions(group, pu | pv)


_INV_INDEX: dict[int, dict[frozenset[int], WeylElement]] = {}


def element_with_inversions(group: WeylGroup, roots: Iterable[int]) -> WeylElement | None:
    """The element whose inversion set is the given set of positive-root indices."""
    key = id(group)
    if key not in _INV_INDEX:
        _INV_INDEX[key] = {group.inversion_set(w): w for w in group.elements}
    return _INV_INDEX[key].get(frozenset(roots))


def is_closed(rs, roots: frozenset[int]) -> bool:
    """Closed under root addition: a, b in S and a+b a root imply a+b in S."""
    have = {rs.positive_roots[k] for k in roots}
    for a in have:
        for b in have:
            s = tuple(x + y for x, y in zip(a, b))
            if s in rs.root_index and s not in have:
                return False
    return True


def is_inversion_set(group: WeylGroup, roots: Iterable[int]) -> WeylElement | None:
    """Recognize an inversion set: closed with closed complement, else None.

    The combinatorial test and the direct lookup over the enumerated group
    must agree; disagreement is a hard failure.
    """
    rs = group.rs
    s = frozenset(roots)
    comp = frozenset(range(len(rs.positive_roots))) - s
    combinatorial = is_closed(rs, s) and is_closed(rs, comp)
    found = element_with_inversions(group, s)
    if combinatorial != (found is not None):
        raise AssertionError(f"closed/coclosed test disagrees with enumeration on {sorted(s)}")
    return found


@dataclass
class KostantModule:
    """One irreducible summand of a graded piece of the nil-radical cohomology."""

    element: WeylElement
    degree: int
    lowest_weight: Weight  # w^{-1} rho - rho, in fundamental-weight coordinates


def kostant_decomposition(parab: Parabolic, degree: int) -> list[KostantModule]:
    """Summands of the degree-d piece for the nil-radical of the parabolic.

    Indexed by minimal representatives of length d; the recorded weight
    w^{-1} rho - rho equals minus the sum of the inversion set of w and is
    dominant for the Levi (checked).
    """
    rs = parab.rs
    group = parab.group
    rho = rs.rho().coords
    out = []
    for w in parab.reps:
        if w.length != degree:
            continue
        winv = group.inverse(w)
        coords = tuple(Fraction(a) - Fraction(b) for a, b in
                       zip(winv.act_root(rho), rho))
        neg_sum = [0] * rs.rank
        for k in group.inversion_set(w):
            for j, c in enumerate(rs.positive_roots[k]):
                neg_sum[j] -= c
        if tuple(map(Fraction, neg_sum)) != coords:
            raise AssertionError(f"weight formulas disagree at {w}")
        fw = rs.to_fweight(coords)
        for i in parab.levi:
            if fw[i] < 0:
                raise AssertionError(f"weight of {w} not dominant for the Levi")
        out.append(KostantModule(w, degree, Weight(tuple(fw), "fweight")))
    return out


@dataclass
class CrossCheckReport:
    label: str
    pairs: int
    mismatches: list[tuple]

    @property
    def passed(self) -> bool:
        return not self.mismatches


def crosscheck_gb(ring: DeformedRing) -> CrossCheckReport:
    """Compare the degenerate product on G/B against the inversion-set rule.

    `ring` must be built on the Borel (empty Levi).  Both sides are computed
    in the codimension-graded basis; the degenerate product of the classes
    of u and v equals the class of w exactly when Phi_w = Phi_u | Phi_v
    disjointly, always with coefficient 1.
    """
    if ring.parabolic.levi:
        raise ValueError("cross-check is defined on the full flag variety")
    group = ring.group
    p = ring.parabolic
    mismatches = []
    pairs = 0
    for u in group.elements:
        for v in group.elements:
            pairs += 1
            # eps_u = [class of iota(u)]; compare in the Lambda labelling
            left = ring.product0(p.iota(u), p.iota(v))
            w = inversion_product(group, u, v)
            right = {} if w is None else {ring.position(p.iota(w)): 1}
            if left != right:
                mismatches.append((u.word, v.word, left, right))
    return CrossCheckReport(ring.rs.label, pairs, mismatches)
