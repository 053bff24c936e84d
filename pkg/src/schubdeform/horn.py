"""Necessary conditions for nonvanishing Schubert structure constants.

Three families of checks on tuples of minimal representatives:

* character inequalities: when the classical product of the classes is a
  nonzero multiple of the point class, the fundamental-coweight values of
  sum(chi_{w_j}) - chi_e are nonpositive, and so are the refinements
  obtained by pairing against u_j x_p for Schubert tuples u with nonzero
  product on a maximal parabolic quotient of the Levi;
* central-character refinements: for Levi-movable tuples the nilradical
  splits into classes by the root coefficients outside the Levi, and each
  class separately satisfies an exact count identity plus the refined
  pairing inequalities;
* dimension inequalities: pushing the tuple into a larger flag variety
  G/Qhat forces its product there to stay nonzero and bounds per-factor
  root counts inside the intersected nilradicals.

All checks return a HornReport whose stored left/right hand sides
re-evaluate to the recorded verdicts.
"""
from __future__ import annotations

import operator
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .deform import DeformedRing, DimensionError, deformed_ring
from .weyl import Parabolic, WeylElement, parabolic, weyl_group

_REL = {"<=": operator.le, "==": operator.eq, ">=": operator.ge}


@dataclass(frozen=True)
class CentralChar:
    """Restriction of a nilradical root to the center of the Levi.

    Two roots restrict to the same character exactly when their
    coefficients agree on every simple root outside the Levi, so a
    character is recorded as that coefficient tuple.
    """

    omitted: tuple[int, ...]
    signature: tuple[int, ...]

    def __str__(self):
        inner = ",".join(
            f"n{i + 1}={c}" for i, c in zip(self.omitted, self.signature))
        return f"({inner})"


@dataclass
class HornCheck:
    """One exact inequality or identity, with its generating data."""

    kind: str
    lhs: int
    rhs: int
    relation: str
    data: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return _REL[self.relation](self.lhs, self.rhs)

    def as_dict(self) -> dict:
        data = {}
        for k, v in self.data.items():
            if k == "coweight":
                data[k] = v + 1
            elif k in ("inner_levi", "outer_levi"):
                data[k] = [i + 1 for i in v]
            elif k.endswith("words"):
                data[k] = [[i + 1 for i in w] for w in v]
            elif isinstance(v, tuple):
                data[k] = list(v)
            else:
                data[k] = v
        return {"kind": self.kind, "lhs": self.lhs, "rhs": self.rhs,
                "relation": self.relation, "passed": self.passed, "data": data}


@dataclass
class HornReport:
    """Outcome of one family of checks on one tuple."""

    system: str
    levi: tuple[int, ...]
    words: tuple[tuple[int, ...], ...]
    applicable: bool
    reason: str
    coefficient: int | None
    checks: list[HornCheck]

    @property
    def passed(self) -> bool:
        """Whether every reported inequality holds (vacuously if none)."""
        return all(c.passed for c in self.checks)

    def failures(self) -> list[HornCheck]:
        return [c for c in self.checks if not c.passed]

    def as_dict(self) -> dict:
        return {
            "system": self.system,
            "levi": [i + 1 for i in self.levi],
            "words": [[i + 1 for i in w] for w in self.words],
            "applicable": self.applicable,
            "reason": self.reason,
            "coefficient": self.coefficient,
            "passed": self.passed,
            "checks": [c.as_dict() for c in self.checks],
        }


def central_characters(parab: Parabolic) -> list[tuple[CentralChar, frozenset[int]]]:
    """Partition of the nilradical roots by their character on the center.

    Returns (character, positive-root index set) pairs sorted by
    signature; every class is nonempty.
    """
    rs = parab.rs
    classes: dict[tuple[int, ...], set[int]] = {}
    for k in parab.nilradical_roots:
        root = rs.positive_roots[k]
        sig = tuple(root[i] for i in parab.omitted)
        classes.setdefault(sig, set()).add(k)
    return [(CentralChar(parab.omitted, sig), frozenset(ks))
            for sig, ks in sorted(classes.items())]


def coset_codim(parab: Parabolic, w: WeylElement) -> int:
    """Codimension of the cell labelled by the coset w W_P, for any w in W.

    Counts the nilradical roots sent to positive roots by w; for a minimal
    representative this agrees with dim G/P - l(w).
    """
    return len(parab.nilradical_roots - parab.group.inversion_set(w))


def dimension_tuples(parab: Parabolic, s: int) -> Iterator[tuple[WeylElement, ...]]:
    """All s-tuples of minimal representatives with codimension sum dim G/P.

    Deterministic order: factors run through the representatives in their
    stored (length, matrix) order.
    """
    if s < 1:
        raise ValueError("need at least one factor")
    reps = parab.reps
    dim = parab.dim

    def rec(j: int, remaining: int, acc: tuple) -> Iterator[tuple[WeylElement, ...]]:
        if j == s - 1:
            for w in reps:
                if parab.codim(w) == remaining:
                    yield acc + (w,)
            return
        slots = s - 1 - j
        for w in reps:
            after = remaining - parab.codim(w)
            if 0 <= after <= slots * dim:
                yield from rec(j + 1, after, acc + (w,))

    return rec(0, dim, ())


# -- Levi recursion ------------------------------------------------------


class LeviContext:
    """Weyl machinery of the Levi factor, with lifts to the ambient group."""

    def __init__(self, parab: Parabolic):
        if not parab.levi:
            raise ValueError("the Levi factor has no simple roots")
        self.parab = parab
        self.subsystem = parab.rs.levi_subsystem(parab.levi)
        self.group = weyl_group(self.subsystem)
        self.local = {amb: k for k, amb in enumerate(parab.levi)}
        self._lift: dict[int, WeylElement] = {}

    def lift(self, u: WeylElement) -> WeylElement:
        """Ambient image of a subsystem element (same reduced word, relabelled)."""
        hit = self._lift.get(u.index)
        if hit is None:
            word = tuple(self.parab.levi[k] for k in u.word)
            hit = self.parab.group.from_word(word)
            self._lift[u.index] = hit
        return hit

    def from_ambient_word(self, word: Iterable[int]) -> WeylElement:
        """Subsystem element from a word in ambient simple indices."""
        local = []
        for i in word:
            if i not in self.local:
                raise ValueError(f"simple index {i} is not in the Levi")
            local.append(self.local[i])
        return self.group.from_word(local)

    def quotient(self, q_levi: Iterable[int]) -> Parabolic:
        """Parabolic of the subsystem whose Levi is the given ambient subset."""
        q = tuple(sorted(set(q_levi)))
        if not set(q) <= set(self.parab.levi):
            raise ValueError(f"{q} is not contained in the Levi {self.parab.levi}")
        return parabolic(self.group, tuple(self.local[i] for i in q))


_CONTEXTS: dict[int, LeviContext] = {}


def levi_context(parab: Parabolic) -> LeviContext:
    key = id(parab)
    if key not in _CONTEXTS:
        _CONTEXTS[key] = LeviContext(parab)
    return _CONTEXTS[key]


@dataclass
class LeviBlock:
    """Pairing data from one maximal parabolic quotient of the Levi.

    `coweight_index` is the ambient simple index p omitted from the
    quotient; `reps` are the minimal representatives of the quotient;
    `evals[k][i]` is alpha_i(u_k x_p) for the lifted representative u_k;
    `tuples` are the index tuples with nonzero product on the quotient.
    """

    coweight_index: int
    reps: list[WeylElement]
    evals: list[tuple[int, ...]]
    tuples: list[tuple[int, ...]]


def _nonzero_tuples(ring: DeformedRing, s: int) -> list[tuple[int, ...]]:
    """Index tuples of representatives whose classical product is nonzero."""
    reps = ring.reps
    unit_pos = ring.position(ring.unit())
    out: list[tuple[int, ...]] = []

    def rec(acc: tuple, cur: dict[int, int]):
        if len(acc) == s:
            out.append(acc)
            return
        for pos in range(len(reps)):
            nxt: dict[int, int] = {}
            for p0, c0 in cur.items():
                for p1, c1 in ring.classical_product(ring.rep(p0), reps[pos]).items():
                    nxt[p1] = nxt.get(p1, 0) + c0 * c1
            if nxt:
                rec(acc + (pos,), nxt)

    rec((), {unit_pos: 1})
    return out


_BLOCKS: dict[tuple[int, int], list[LeviBlock]] = {}


def levi_blocks(ring: DeformedRing, s: int) -> list[LeviBlock]:
    """Pairing data for every maximal parabolic quotient of the Levi."""
    key = (id(ring), s)
    hit = _BLOCKS.get(key)
    if hit is not None:
        return hit
    parab = ring.parabolic
    rs = ring.rs
    blocks: list[LeviBlock] = []
    if parab.levi:
        ctx = levi_context(parab)
        for p in parab.levi:
            sub_parab = ctx.quotient(tuple(i for i in parab.levi if i != p))
            sub_ring = deformed_ring(sub_parab)
            x_p = rs.fundamental_coweight(p)
            evals = []
            for u in sub_parab.reps:
                h = ctx.lift(u).act_coweight(x_p)
                vec = []
                for i in range(rs.rank):
                    e_i = tuple(int(i == j) for j in range(rs.rank))
                    val = rs.eval_coweight(e_i, h.coords)
                    if val.denominator != 1:
                        raise AssertionError(f"non-integral pairing {val}")
                    vec.append(int(val))
                evals.append(tuple(vec))
            blocks.append(LeviBlock(
                coweight_index=p,
                reps=list(sub_parab.reps),
                evals=evals,
                tuples=_nonzero_tuples(sub_ring, s),
            ))
    _BLOCKS[key] = blocks
    return blocks


# -- character inequalities ----------------------------------------------


def _validate_tuple(parab: Parabolic, ws: Sequence[WeylElement]):
    for w in ws:
        if not isinstance(w, WeylElement) or w.group is not parab.group:
            raise ValueError("tuple entries must belong to the same Weyl group")
        if not parab.contains(w):
            raise ValueError(f"{w} is not a minimal coset representative")


def _report_shell(ring: DeformedRing, ws: Sequence[WeylElement]) -> dict:
    return {
        "system": ring.rs.label,
        "levi": ring.parabolic.levi,
        "words": tuple(w.word for w in ws),
    }


def _character_checks(ring: DeformedRing, ws: Sequence[WeylElement],
                      blocks: Sequence[LeviBlock]) -> list[HornCheck]:
    chi = [ring.chi(w).coords for w in ws]
    chi_e = ring.chi(ring.group.identity).coords
    checks = []
    for i in ring.omitted:
        lhs = sum(c[i] for c in chi) - chi_e[i]
        checks.append(HornCheck("character", lhs, 0, "<=", {"coweight": i}))
    for blk in blocks:
        p = blk.coweight_index
        rhs = chi_e[p]
        for tup in blk.tuples:
            lhs = 0
            for c, upos in zip(chi, tup):
                vec = blk.evals[upos]
                lhs += sum(a * b for a, b in zip(c, vec))
            checks.append(HornCheck(
                "character-levi", lhs, rhs, "<=",
                {"coweight": p,
                 "levi_words": tuple(blk.reps[k].word for k in tup)}))
    return checks


def check_character(ring: DeformedRing, ws: Sequence[WeylElement]) -> HornReport:
    """Character inequalities for a tuple with codimension sum dim G/P.

    The classical point-class coefficient is computed first; a zero
    coefficient makes the report inapplicable (the inequalities are only
    forced by a nonzero product).  Raises DimensionError when the
    codimension condition fails.
    """
    parab = ring.parabolic
    _validate_tuple(parab, ws)
    total = sum(parab.codim(w) for w in ws)
    if total != parab.dim:
        raise DimensionError(
            f"codimensions sum to {total}, expected dim G/P = {parab.dim}")
    d = ring.point_coefficient(ws)
    shell = _report_shell(ring, ws)
    if d == 0:
        return HornReport(applicable=False, coefficient=0, checks=[],
                          reason="classical point coefficient is zero", **shell)
    checks = _character_checks(ring, ws, levi_blocks(ring, len(ws)))
    return HornReport(applicable=True, coefficient=d, checks=checks,
                      reason="", **shell)


# -- central character refinements ---------------------------------------


def _class_chi(ring: DeformedRing, w: WeylElement,
               roots: frozenset[int]) -> tuple[int, ...]:
    """Partial character of w supported on one central class."""
    rs = ring.rs
    keep = roots - ring.group.inversion_set(w)
    acc = [0] * rs.rank
    for k in keep:
        for j, c in enumerate(rs.positive_roots[k]):
            acc[j] += c
    return tuple(acc)


def check_refined(ring: DeformedRing, ws: Sequence[WeylElement]) -> HornReport:
    """Central-character refinements, valid for Levi-movable tuples only.

    Per class: the per-factor counts of class roots kept positive must
    add up to the class size, and the class-restricted characters satisfy
    the same coweight pairings as the full ones.  Non-movable input gives
    an inapplicable report.
    """
    parab = ring.parabolic
    _validate_tuple(parab, ws)
    cert = ring.is_levi_movable(ws)
    shell = _report_shell(ring, ws)
    if not cert.movable:
        return HornReport(
            applicable=False, coefficient=cert.coefficient, checks=[],
            reason=("tuple is not Levi-movable: coefficient "
                    f"{cert.coefficient}, character gaps "
                    f"{ {i + 1: g for i, g in sorted(cert.character_gap.items())} }"),
            **shell)
    group = ring.group
    checks = []
    classes = central_characters(parab)
    for cc, roots in classes:
        lhs = sum(len(roots - group.inversion_set(w)) for w in ws)
        checks.append(HornCheck("class-size", lhs, len(roots), "==",
                                {"signature": cc.signature}))
    blocks = levi_blocks(ring, len(ws))
    for cc, roots in classes:
        chi_c = [_class_chi(ring, w, roots) for w in ws]
        chi_c_e = _class_chi(ring, group.identity, roots)
        for blk in blocks:
            p = blk.coweight_index
            rhs = chi_c_e[p]
            for tup in blk.tuples:
                lhs = 0
                for c, upos in zip(chi_c, tup):
                    vec = blk.evals[upos]
                    lhs += sum(a * b for a, b in zip(c, vec))
                checks.append(HornCheck(
                    "class-levi", lhs, rhs, "<=",
                    {"signature": cc.signature, "coweight": p,
                     "levi_words": tuple(blk.reps[k].word for k in tup)}))
    return HornReport(applicable=True, coefficient=cert.coefficient,
                      checks=checks, reason="", **shell)


# -- dimension inequalities ----------------------------------------------


def _fold_classical(ring: DeformedRing, ws: Sequence[WeylElement]) -> dict[int, int]:
    """Classical product of the classes of ws, as {rep position: coeff}."""
    cur = {ring.position(ring.unit()): 1}
    for w in ws:
        nxt: dict[int, int] = {}
        for pos, c in cur.items():
            for pos2, c2 in ring.classical_product(ring.rep(pos), w).items():
                nxt[pos2] = nxt.get(pos2, 0) + c * c2
        cur = nxt
        if not cur:
            break
    return cur


def check_dimension(ring: DeformedRing, ws: Sequence[WeylElement],
                    inner_levi: Iterable[int], outer_levi: Iterable[int],
                    utuple: Sequence) -> HornReport:
    """Dimension inequalities from projecting into a larger flag variety.

    `inner_levi` picks a parabolic Q inside P (so inside the Levi of P),
    `outer_levi` a parabolic Qhat containing Q.  The tuple must have a
    nonzero classical product on G/P and the Levi tuple `utuple` (words in
    ambient simple indices, or subsystem elements) a nonzero product on
    its quotient of the Levi.  The shifted classes w_j u_j then have a
    nonzero product on G/Qhat, and when Qhat meets P exactly in Q the
    per-factor counts of kept roots in the common nilradical are bounded
    by its size.
    """
    parab = ring.parabolic
    group = ring.group
    _validate_tuple(parab, ws)
    q = tuple(sorted(set(inner_levi)))
    qh = tuple(sorted(set(outer_levi)))
    if not set(q) <= set(parab.levi):
        raise ValueError(f"inner Levi {q} must sit inside the Levi {parab.levi}")
    if not set(q) <= set(qh):
        raise ValueError(f"outer Levi {qh} must contain the inner Levi {q}")
    if not _fold_classical(ring, ws):
        raise ValueError("tuple has zero classical product")

    if parab.levi:
        ctx = levi_context(parab)
        sub_parab = ctx.quotient(q)
        sub_ring = deformed_ring(sub_parab)
        us = []
        for u in utuple:
            el = u if isinstance(u, WeylElement) else ctx.from_ambient_word(u)
            if el.group is not ctx.group:
                raise ValueError("Levi tuple entries must live in the Levi subsystem")
            us.append(sub_parab.minimal_rep(el))
        if len(us) != len(ws):
            raise ValueError("Levi tuple length must match the main tuple")
        if not _fold_classical(sub_ring, us):
            raise ValueError("Levi tuple has zero classical product")
        lifted = [ctx.lift(u) for u in us]
        sub_codims = [sub_parab.codim(u) for u in us]
    else:
        for u in utuple:
            trivial = u.length == 0 if isinstance(u, WeylElement) else not tuple(u)
            if not trivial:
                raise ValueError("the Levi is trivial; only identity entries allowed")
        if len(utuple) != len(ws):
            raise ValueError("Levi tuple length must match the main tuple")
        us = []
        lifted = [group.identity] * len(ws)
        sub_codims = [0] * len(ws)

    qhat_parab = parabolic(group, qh)
    qhat_ring = deformed_ring(qhat_parab)
    raw = [group.mult(w, u) for w, u in zip(ws, lifted)]
    hats = [qhat_parab.minimal_rep(r) for r in raw]
    for r, h in zip(raw, hats):
        if coset_codim(qhat_parab, r) != qhat_parab.codim(h):
            raise AssertionError("codimension not constant on the coset")

    checks = []
    hat_prod = _fold_classical(qhat_ring, hats)
    hat_words = tuple(h.word for h in hats)
    checks.append(HornCheck("product-nonzero", len(hat_prod), 1, ">=",
                            {"outer_levi": qh, "hat_words": hat_words}))
    checks.append(HornCheck(
        "dimension-bound", sum(qhat_parab.codim(h) for h in hats),
        qhat_parab.dim, "<=", {"outer_levi": qh, "hat_words": hat_words}))
    if set(qh) & set(parab.levi) == set(q):
        overlap = qhat_parab.nilradical_roots & parab.nilradical_roots
        terms = []
        for r, sc in zip(raw, sub_codims):
            t = len(overlap - group.inversion_set(r))
            if t != coset_codim(qhat_parab, r) - sc:
                raise AssertionError("codimension difference identity failed")
            terms.append(t)
        checks.append(HornCheck(
            "dimension", sum(terms), len(overlap), "<=",
            {"inner_levi": q, "outer_levi": qh, "terms": tuple(terms),
             "hat_words": hat_words}))
    return HornReport(applicable=True, coefficient=None, checks=checks,
                      reason="", **_report_shell(ring, ws))


def codim_difference_identity(ring: DeformedRing, w: WeylElement, u,
                              inner_levi: Iterable[int],
                              outer_levi: Iterable[int]) -> tuple[int, int]:
    """Both sides of the codimension difference identity for w u.

    Left: codim of the coset of w u in G/Qhat minus the codim of u in its
    quotient of the Levi.  Right: the count of common nilradical roots of
    Qhat and P kept positive by w u.  Requires Qhat to meet P exactly in
    the inner parabolic; the two sides agree for every w in W^P and every
    u in the Levi subgroup.
    """
    parab = ring.parabolic
    group = ring.group
    q = tuple(sorted(set(inner_levi)))
    qh = tuple(sorted(set(outer_levi)))
    if set(qh) & set(parab.levi) != set(q):
        raise ValueError("outer parabolic must meet P exactly in the inner one")
    ctx = levi_context(parab)
    sub_parab = ctx.quotient(q)
    el = u if isinstance(u, WeylElement) else ctx.from_ambient_word(u)
    u_min = sub_parab.minimal_rep(el)
    qhat_parab = parabolic(group, qh)
    hat = group.mult(w, ctx.lift(el))
    lhs = coset_codim(qhat_parab, hat) - sub_parab.codim(u_min)
    overlap = qhat_parab.nilradical_roots & parab.nilradical_roots
    rhs = len(overlap - group.inversion_set(hat))
    return lhs, rhs


# -- converse experiment -------------------------------------------------


def converse_search(ring: DeformedRing, s: int = 3,
                    limit: int | None = 10) -> list[HornReport]:
    """Tuples meeting every character inequality yet with zero product.

    Scans the codimension-balanced s-tuples; each report returned is a
    candidate witness that the character inequalities do not suffice for
    nonvanishing.  Purely experimental: nothing is asserted either way.
    """
    blocks = levi_blocks(ring, s)
    shellbase = {"system": ring.rs.label, "levi": ring.parabolic.levi}
    found: list[HornReport] = []
    for ws in dimension_tuples(ring.parabolic, s):
        if ring.point_coefficient(ws) != 0:
            continue
        checks = _character_checks(ring, ws, blocks)
        if all(c.passed for c in checks):
            found.append(HornReport(
                words=tuple(w.word for w in ws), applicable=True,
                reason="zero product but every character check passes",
                coefficient=0, checks=checks, **shellbase))
            if limit is not None and len(found) >= limit:
                break
    return found
