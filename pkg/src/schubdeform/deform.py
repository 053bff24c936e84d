"""The deformed cup product on G/P and Levi-movability.

Basis classes are indexed by minimal representatives w in W^P, graded so the
class of w has codimension dim(G/P) - l(w); the identity class is indexed by
w_o w_o^L and the point class by e.  The deformed product multiplies the
classical structure constant on w by a monomial in one indeterminate per
simple root outside the Levi, with exponent
(chi_w - chi_u - chi_v)(x_i), where chi_w is the sum of the nilradical
roots beta with w(beta) > 0 and x_i is the fundamental coweight.

Setting every indeterminate to 1 recovers the classical product; setting
them to 0 gives the degenerate product whose nonzero constants are exactly
the Levi-movable ones.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .rootsystem import Weight
from .schubert import SchubertBasis, schubert_basis
from .weyl import Parabolic, WeylElement

ExpVec = tuple[int, ...]


class DimensionError(ValueError):
    """Codimension sum does not meet the dimension condition."""


@dataclass
class MovabilityCertificate:
    """Evidence for a Levi-movability verdict."""

    coefficient: int
    character_gap: dict[int, int]  # omitted simple index -> (sum chi_wj - chi_e)(x_i)

    @property
    def movable(self) -> bool:
        return self.coefficient != 0 and all(v == 0 for v in self.character_gap.values())


class DeformedClass:
    """Element of the deformed ring: {rep position: {exponent vector: int}}."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: "DeformedRing", coeffs: dict[int, dict[ExpVec, int]] | None = None):
        self.ring = ring
        self.coeffs = {}
        if coeffs:
            for pos, mono in coeffs.items():
                clean = {e: c for e, c in mono.items() if c}
                if clean:
                    self.coeffs[pos] = clean

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        return (isinstance(other, DeformedClass) and self.ring is other.ring
                and self.coeffs == other.coeffs)

    def __hash__(self):
        raise TypeError("unhashable")

    def __add__(self, other: "DeformedClass") -> "DeformedClass":
        out = {pos: dict(m) for pos, m in self.coeffs.items()}
        for pos, mono in other.coeffs.items():
            tgt = out.setdefault(pos, {})
            for e, c in mono.items():
                s = tgt.get(e, 0) + c
                if s:
                    tgt[e] = s
                elif e in tgt:
                    del tgt[e]
        return DeformedClass(self.ring, out)

    def specialize(self, tau: Sequence[int]) -> dict[int, int]:
        """Coefficients after substituting numeric values for the indeterminates."""
        out: dict[int, int] = {}
        for pos, mono in self.coeffs.items():
            total = 0
            for exps, c in mono.items():
                term = c
                for t, e in zip(tau, exps):
                    term *= t ** e
                total += term
            if total:
                out[pos] = total
        return out

    def classical(self) -> dict[int, int]:
        """Specialization at tau = 1 (the ordinary cup product expansion)."""
        return self.specialize((1,) * len(self.ring.omitted))

    def at_zero(self) -> dict[int, int]:
        """Specialization at tau = 0 (keep exponent-zero monomials only)."""
        return self.specialize((0,) * len(self.ring.omitted))

    def __repr__(self):
        ring = self.ring
        bits = []
        for pos in sorted(self.coeffs):
            label = ring.labels[pos]
            for exps, c in sorted(self.coeffs[pos].items()):
                mono = "".join(
                    f"t{ring.omitted[k] + 1}" + (f"^{e}" if e > 1 else "")
                    for k, e in enumerate(exps) if e
                )
                bits.append(f"{c}{mono}*[{label}]")
        return " + ".join(bits) if bits else "0"


class DeformedRing:
    """Deformed cohomology ring of one G/P, over the classical constants."""

    def __init__(self, parab: Parabolic, basis: SchubertBasis | None = None):
        self.parabolic = parab
        self.group = parab.group
        self.rs = parab.rs
        self.basis = basis if basis is not None else schubert_basis(parab.group)
        self.omitted = parab.omitted
        self.reps = parab.reps
        self._chi: list[tuple[int, ...]] = [self._chi_coords(w) for w in self.reps]
        self._classical: dict[tuple[int, int], dict[int, int]] = {}
        self.labels = self._make_labels()

    # -- characters ------------------------------------------------------

    def _chi_coords(self, w: WeylElement) -> tuple[int, ...]:
        rs = self.rs
        keep = self.parabolic.nilradical_roots - self.group.inversion_set(w)
        acc = [0] * rs.rank
        for k in keep:
            for j, c in enumerate(rs.positive_roots[k]):
                acc[j] += c
        # cross-check against rho - 2 rho_L + w^{-1} rho
        rho = rs.rho().coords
        rho_l = rs.rho(self.parabolic.levi).coords
        wr = self.group.inverse(w).act_root(rho)
        alt = tuple(r - 2 * l + x for r, l, x in zip(rho, rho_l, wr))
        if tuple(acc) != alt:
            raise AssertionError(f"character formulas disagree at {w}: {acc} vs {alt}")
        return tuple(acc)

    def chi(self, w: WeylElement) -> Weight:
        """Character chi_w as a weight in root coordinates."""
        return Weight(self._chi[self.position(w)], "root")

    def position(self, w: WeylElement) -> int:
        return self.parabolic.rep_position[w.index]

    def rep(self, pos: int) -> WeylElement:
        return self.reps[pos]

    # -- products --------------------------------------------------------

    def classical_product(self, u: WeylElement, v: WeylElement) -> dict[int, int]:
        """Cup product of the codim-graded classes, as {rep position: coeff}."""
        pu, pv = self.position(u), self.position(v)
        key = (pu, pv) if pu <= pv else (pv, pu)
        hit = self._classical.get(key)
        if hit is not None:
            return hit
        p = self.parabolic
        row = self.basis.product(p.iota(u), p.iota(v))
        out: dict[int, int] = {}
        for k, c in row.items():
            el = self.group.elements[k]
            if not p.contains(el):
                raise AssertionError(
                    f"product of minimal representatives left W^P at {el}")
            out[self.position(p.iota(el))] = c
        self._classical[key] = out
        return out

    def exponents(self, u: WeylElement, v: WeylElement, w: WeylElement) -> ExpVec:
        """Deformation exponents (chi_w - chi_u - chi_v)(x_i), i outside the Levi."""
        cu, cv, cw = (self._chi[self.position(x)] for x in (u, v, w))
        return tuple(cw[i] - cu[i] - cv[i] for i in self.omitted)

    def deformed_product(self, u: WeylElement, v: WeylElement) -> DeformedClass:
        out: dict[int, dict[ExpVec, int]] = {}
        for pos, c in self.classical_product(u, v).items():
            e = self.exponents(u, v, self.reps[pos])
            if any(x < 0 for x in e):
                raise AssertionError(
                    f"negative deformation exponent {e} at {u}, {v}, {self.reps[pos]}")
            out[pos] = {e: c}
        return DeformedClass(self, out)

    def product0(self, u: WeylElement, v: WeylElement) -> dict[int, int]:
        """Degenerate product: classical constants with all exponents zero."""
        return self.deformed_product(u, v).at_zero()

    def multiply(self, a: DeformedClass, b: DeformedClass) -> DeformedClass:
        """Deformed product of two general classes."""
        total = DeformedClass(self)
        for pu, mu in a.coeffs.items():
            for pv, mv in b.coeffs.items():
                base = self.deformed_product(self.reps[pu], self.reps[pv])
                out: dict[int, dict[ExpVec, int]] = {}
                for pos, mono in base.coeffs.items():
                    tgt: dict[ExpVec, int] = {}
                    for e0, c0 in mono.items():
                        for eu, cu in mu.items():
                            for ev, cv in mv.items():
                                e = tuple(x + y + z for x, y, z in zip(e0, eu, ev))
                                s = tgt.get(e, 0) + c0 * cu * cv
                                if s:
                                    tgt[e] = s
                                elif e in tgt:
                                    del tgt[e]
                    if tgt:
                        out[pos] = tgt
                total = total + DeformedClass(self, out)
        return total

    def basis_class(self, w: WeylElement) -> DeformedClass:
        zero = (0,) * len(self.omitted)
        return DeformedClass(self, {self.position(w): {zero: 1}})

    def unit(self) -> WeylElement:
        """Label of the identity class, w_o w_o^L."""
        return self.group.mult(self.parabolic.w_o, self.parabolic.w_o_levi)

    def point(self) -> WeylElement:
        """Label of the point class, the identity of W."""
        return self.group.identity

    # -- multi-factor coefficients and movability ------------------------

    def point_coefficient(self, ws: Sequence[WeylElement]) -> int:
        """Classical coefficient of the point class in the product of the [ws]."""
        if len(ws) == 1:
            return 1 if ws[0] is self.group.identity else 0
        cur = {self.position(ws[0]): 1}
        for w in ws[1:-1]:
            nxt: dict[int, int] = {}
            for pos, c in cur.items():
                for pos2, c2 in self.classical_product(self.reps[pos], w).items():
                    nxt[pos2] = nxt.get(pos2, 0) + c * c2
            cur = nxt
        last = ws[-1]
        dual = self.parabolic.iota(last)
        return cur.get(self.position(dual), 0)

    def is_levi_movable(self, ws: Sequence[WeylElement]) -> MovabilityCertificate:
        """Movability test for a tuple with codimensions summing to dim(G/P).

        Raises DimensionError when the codimension condition fails; otherwise
        the certificate records the classical point-class coefficient and the
        per-coweight character gaps, and `.movable` is the verdict.
        """
        p = self.parabolic
        for w in ws:
            if not p.contains(w):
                raise ValueError(f"{w} is not a minimal coset representative")
        total = sum(p.codim(w) for w in ws)
        if total != p.dim:
            raise DimensionError(
                f"codimensions sum to {total}, expected dim G/P = {p.dim}")
        d = self.point_coefficient(ws)
        chi_e = self._chi[self.position(self.group.identity)]
        gaps = {}
        for i in self.omitted:
            gaps[i] = sum(self._chi[self.position(w)][i] for w in ws) - chi_e[i]
        return MovabilityCertificate(coefficient=d, character_gap=gaps)

    # -- tangent combinatorics -------------------------------------------

    def tangent_roots(self, w: WeylElement) -> frozenset[int]:
        """Roots of the tangent space at the base point of the cell of w.

        The tangent roots are negative; they are returned as the indices of
        their positive counterparts.  For w in W^P this set equals the
        inversion set of w (checked), so its size is l(w).
        """
        p = self.parabolic
        out = set()
        for k in p.nilradical_roots:
            neg = tuple(-c for c in self.rs.positive_roots[k])
            img = w.act_root(neg)
            if all(c >= 0 for c in img):  # w(-beta) positive
                out.add(k)
        got = frozenset(out)
        if got != self.group.inversion_set(w):
            raise AssertionError(f"tangent roots disagree with inversions at {w}")
        return got

    def tangent_complement_check(self, w: WeylElement) -> bool:
        """Partition R(u_P) = tangent(w) | w_o^L(tangent(iota w))."""
        p = self.parabolic
        first = self.tangent_roots(w)
        second = set()
        for k in self.tangent_roots(p.iota(w)):
            img = p.w_o_levi.act_root(self.rs.positive_roots[k])
            second.add(self.rs.root_index[img])
        return (not (first & second)) and (first | second) == p.nilradical_roots

    # -- presentation ----------------------------------------------------

    def _make_labels(self) -> list[str]:
        order = sorted(range(len(self.reps)),
                       key=lambda pos: (self.parabolic.codim(self.reps[pos]), pos))
        by_codim: dict[int, list[int]] = {}
        for pos in order:
            by_codim.setdefault(self.parabolic.codim(self.reps[pos]), []).append(pos)
        labels = [""] * len(self.reps)
        for codim, group in by_codim.items():
            for k, pos in enumerate(group):
                suffix = "" if len(group) == 1 else "abcdefgh"[k]
                labels[pos] = f"c{codim}{suffix}"
        return labels

    def table_order(self) -> list[int]:
        """Rep positions sorted by codimension (unit class first)."""
        return sorted(range(len(self.reps)),
                      key=lambda pos: (self.parabolic.codim(self.reps[pos]), pos))

    def is_minuscule(self) -> bool:
        """Maximal parabolic whose omitted simple root has coefficient 1 in the highest root."""
        if len(self.omitted) != 1:
            return False
        return self.rs.highest_root()[self.omitted[0]] == 1


_RINGS: dict[tuple[int, tuple[int, ...]], DeformedRing] = {}


def deformed_ring(parab: Parabolic) -> DeformedRing:
    """Memoized DeformedRing for a parabolic."""
    key = (id(parab.group), parab.levi)
    if key not in _RINGS:
        _RINGS[key] = DeformedRing(parab)
    return _RINGS[key]
