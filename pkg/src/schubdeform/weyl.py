"""Weyl groups as explicit permutation-style groups on the root lattice.

Elements are canonicalized by their integer matrix action on the simple
roots (columns = images of the simple roots).  Enumeration is breadth-first
over right multiplication by simple reflections, so the stored word of each
element is reduced.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .rootsystem import Coweight, RootSystem, Weight

Cols = tuple[tuple[int, ...], ...]

DEFAULT_CAP = 2_000_000


class BudgetError(RuntimeError):
    """Raised when an enumeration would exceed its configured cap."""


class WeylElement:
    """Group element, identified by its action on the simple roots."""

    __slots__ = ("cols", "word", "index", "group")

    def __init__(self, cols: Cols, word: tuple[int, ...], group: "WeylGroup"):
        self.cols = cols
        self.word = word
        self.group = group
        self.index = -1  # assigned after the deterministic sort

    @property
    def length(self) -> int:
        return len(self.word)

    def act_root(self, v: Sequence) -> tuple:
        """Action on a vector in simple-root coordinates."""
        n = len(self.cols)
        out = [0] * n
        for j, vj in enumerate(v):
            if vj:
                col = self.cols[j]
                for k in range(n):
                    if col[k]:
                        out[k] += vj * col[k]
        return tuple(out)

    def act_coweight_coords(self, t: Sequence) -> tuple:
        """Action on coroot coordinates, by folding the reduced word."""
        rs = self.group.rs
        cur = tuple(t)
        for i in reversed(self.word):
            cur = rs.reflect_coweight(cur, i)
        return cur

    def act_weight(self, w: Weight) -> Weight:
        rs = self.group.rs
        coords = rs.weight_root_coords(w)
        return Weight(tuple(Fraction(x) for x in self.act_root(coords)), "root")

    def act_coweight(self, h: Coweight) -> Coweight:
        return Coweight(tuple(Fraction(x) for x in self.act_coweight_coords(h.coords)))

    def inverse(self) -> "WeylElement":
        return self.group.inverse(self)

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        return self.group.mult(self, other)

    def __eq__(self, other):
        return isinstance(other, WeylElement) and self.cols == other.cols

    def __hash__(self):
        return hash(self.cols)

    def __repr__(self):
        word = "".join(str(i + 1) for i in self.word) or "e"
        return f"W[{word}]"


class WeylGroup:
    """Fully enumerated Weyl group of a root system."""

    def __init__(self, rs: RootSystem, cap: int = DEFAULT_CAP):
        order = rs.weyl_order()
        if order > cap:
            raise BudgetError(
                f"Weyl group of {rs.label} has order {order}, exceeding the cap {cap}"
            )
        self.rs = rs
        self.order = order
        self.elements: list[WeylElement] = []
        self._by_cols: dict[Cols, WeylElement] = {}
        self._enumerate()
        self._inv_index: list[int] = [self._compute_inverse(w).index for w in self.elements]
        self._inversion_sets: list[frozenset[int]] = [
            self._compute_inversions(w) for w in self.elements
        ]

    # -- enumeration ----------------------------------------------------

    def _gen_cols(self, i: int) -> Cols:
        n = self.rs.rank
        return tuple(
            tuple((1 if j == k else 0) - (self.rs.cartan[i][j] if k == i else 0)
                  for k in range(n))
            for j in range(n)
        )

    def _enumerate(self):
        n = self.rs.rank
        ident: Cols = tuple(tuple(int(j == k) for k in range(n)) for j in range(n))
        e = WeylElement(ident, (), self)
        found = {ident: e}
        frontier = [e]
        gens = [self._gen_cols(i) for i in range(n)]
        while frontier:
            new = []
            for w in frontier:
                for i in range(n):
                    # right multiplication: (w s_i)(alpha_j) = w(s_i alpha_j)
                    cols = tuple(w.act_root(gens[i][j]) for j in range(n))
                    if cols not in found:
                        el = WeylElement(cols, w.word + (i,), self)
                        found[cols] = el
                        new.append(el)
            frontier = new
        els = sorted(found.values(), key=lambda w: (w.length, w.cols))
        for k, w in enumerate(els):
            w.index = k
        self.elements = els
        self._by_cols = {w.cols: w for w in els}
        if len(els) != self.order:
            raise AssertionError(
                f"enumerated {len(els)} elements of {self.rs.label}, expected {self.order}"
            )

    # -- group operations -----------------------------------------------

    @property
    def identity(self) -> WeylElement:
        return self.elements[0]

    def element_by_cols(self, cols: Cols) -> WeylElement:
        return self._by_cols[cols]

    def from_word(self, word: Iterable[int]) -> WeylElement:
        """Element given by a (not necessarily reduced) word of simple indices."""
        w = self.identity
        for i in word:
            if not 0 <= i < self.rs.rank:
                raise ValueError(f"simple index {i} out of range")
            w = self.mult(w, self.simple_reflection(i))
        return w

    def simple_reflection(self, i: int) -> WeylElement:
        return self._by_cols[self._gen_cols(i)]

    def reflection(self, root_coords: Sequence[int]) -> WeylElement:
        """The reflection s_beta for a root beta in root coordinates."""
        rs = self.rs
        n = rs.rank
        bb = rs.form(root_coords, root_coords)
        cols = []
        for j in range(n):
            ej = tuple(int(j == k) for k in range(n))
            p = 2 * rs.form(ej, root_coords) / bb
            col = tuple(ej[k] - p * root_coords[k] for k in range(n))
            icol = tuple(int(x) for x in col)
            if tuple(Fraction(x) for x in icol) != tuple(Fraction(x) for x in col):
                raise AssertionError("non-integral reflection matrix")
            cols.append(icol)
        return self._by_cols[tuple(cols)]

    def mult(self, u: WeylElement, v: WeylElement) -> WeylElement:
        n = self.rs.rank
        cols = tuple(u.act_root(v.cols[j]) for j in range(n))
        return self._by_cols[cols]

    def _compute_inverse(self, w: WeylElement) -> WeylElement:
        u = self.identity
        for i in reversed(w.word):
            u = self.mult(u, self.simple_reflection(i))
        return u

    def inverse(self, w: WeylElement) -> WeylElement:
        return self.elements[self._inv_index[w.index]]

    # -- root combinatorics ---------------------------------------------

    def _compute_inversions(self, w: WeylElement) -> frozenset[int]:
        out = []
        for k, r in enumerate(self.rs.positive_roots):
            img = w.act_root(r)
            if any(c < 0 for c in img):
                out.append(k)
        return frozenset(out)

    def inversion_set(self, w: WeylElement) -> frozenset[int]:
        """Phi_w = {beta > 0 : w(beta) < 0} as positive-root indices; |Phi_w| = l(w)."""
        return self._inversion_sets[w.index]

    def longest_element(self) -> WeylElement:
        return self.elements[-1]

    def by_length(self, length: int) -> list[WeylElement]:
        return [w for w in self.elements if w.length == length]

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __repr__(self):
        return f"WeylGroup({self.rs.label}, order={self.order})"


class Parabolic:
    """Combinatorial model of a generalized flag variety G/P.

    `levi` is the set of simple indices generating the Levi; minimal coset
    representatives index the Schubert cells.
    """

    def __init__(self, group: WeylGroup, levi: Iterable[int]):
        self.group = group
        self.rs = group.rs
        self.levi = tuple(sorted(set(levi)))
        if any(i not in range(self.rs.rank) for i in self.levi):
            raise ValueError(f"levi indices out of range: {self.levi}")
        self.omitted = tuple(i for i in range(self.rs.rank) if i not in self.levi)
        self.levi_roots = frozenset(self.rs.levi_positive(self.levi))
        self.nilradical_roots = frozenset(
            range(len(self.rs.positive_roots))) - self.levi_roots
        self.dim = len(self.nilradical_roots)
        self.reps: list[WeylElement] = [
            w for w in group.elements
            if not (group.inversion_set(w) & self.levi_roots)
        ]
        self.rep_position = {w.index: k for k, w in enumerate(self.reps)}
        self.w_o = group.longest_element()
        self.w_o_levi = self._longest_levi()
        self._iota = [
            group.mult(group.mult(self.w_o, w), self.w_o_levi) for w in self.reps
        ]
        for w, iw in zip(self.reps, self._iota):
            assert self.contains(iw) and iw.length == self.dim - w.length

    def _longest_levi(self) -> WeylElement:
        target = len(self.levi_roots)
        for w in self.group.elements:
            if w.length == target and self.group.inversion_set(w) <= self.levi_roots:
                return w
        raise AssertionError("no longest Levi element found")

    def contains(self, w: WeylElement) -> bool:
        """Whether w is a minimal-length coset representative (w in W^P)."""
        return not (self.group.inversion_set(w) & self.levi_roots)

    def codim(self, w: WeylElement) -> int:
        """Codimension of the Schubert variety labelled by w (dimension l(w))."""
        return self.dim - w.length

    def iota(self, w: WeylElement) -> WeylElement:
        """Basis involution w -> w_o w w_o^L exchanging the two Schubert labellings."""
        return self._iota[self.rep_position[w.index]]

    def minimal_rep(self, w: WeylElement) -> WeylElement:
        """Minimal-length representative of the coset w W_P."""
        g = self.group
        while True:
            i = next((i for i in self.levi
                      if any(c < 0 for c in w.act_root(
                          tuple(int(i == k) for k in range(self.rs.rank))))), None)
            if i is None:
                return w
            w = g.mult(w, g.simple_reflection(i))

    def degree_profile(self) -> tuple[int, ...]:
        """Number of representatives of each length 0..dim."""
        prof = [0] * (self.dim + 1)
        for w in self.reps:
            prof[w.length] += 1
        return tuple(prof)

    def __repr__(self):
        lv = ",".join(str(i + 1) for i in self.levi) or "-"
        return f"Parabolic({self.rs.label}, levi=[{lv}], dim={self.dim})"


_GROUPS: dict[int, WeylGroup] = {}
_PARABOLICS: dict[tuple[int, tuple[int, ...]], Parabolic] = {}


def weyl_group(rs: RootSystem, cap: int = DEFAULT_CAP) -> WeylGroup:
    """Enumerate (and memoize) the Weyl group of a root system."""
    key = id(rs)
    if key not in _GROUPS:
        _GROUPS[key] = WeylGroup(rs, cap=cap)
    return _GROUPS[key]


def parabolic(group: WeylGroup, levi: Iterable[int]) -> Parabolic:
    """Memoized Parabolic for a Weyl group and Levi index set."""
    key = (id(group), tuple(sorted(set(levi))))
    if key not in _PARABOLICS:
        _PARABOLICS[key] = Parabolic(group, key[1])
    return _PARABOLICS[key]
