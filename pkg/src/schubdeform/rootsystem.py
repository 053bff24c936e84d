"""Root systems of the finite simple types with exact rational arithmetic.

Conventions used throughout the package:

- cartan[i][j] = <alpha_j, alpha_i^vee> = 2(alpha_i, alpha_j)/(alpha_i, alpha_i),
  so the simple reflection acts by s_i(alpha_j) = alpha_j - cartan[i][j] alpha_i.
- Weights are stored in simple-root coordinates ("root" basis) or in
  fundamental-weight coordinates ("fweight" basis); coweights in the
  simple-coroot basis.
- The invariant form on a system built from a Cartan type is normalized so
  that short roots have squared length 2.  Levi subsystems inherit the
  ambient normalization unchanged.
- Positive roots are ordered by height, then lexicographically.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Literal, Sequence

Vector = tuple[Fraction, ...]

_FAMILY_RANKS = {
    "A": lambda n: n >= 1,
    "B": lambda n: n >= 2,
    "C": lambda n: n >= 2,
    "D": lambda n: n >= 3,
    "E": lambda n: n in (6, 7, 8),
    "F": lambda n: n == 4,
    "G": lambda n: n == 2,
}


@dataclass(frozen=True)
class CartanType:
    """A simple Cartan type, e.g. CartanType("B", 3)."""

    family: str
    rank: int

    def __post_init__(self):
        fam = self.family.upper()
        if fam not in _FAMILY_RANKS:
            raise ValueError(f"unknown family {self.family!r}; expected one of A-G")
        if not _FAMILY_RANKS[fam](self.rank):
            raise ValueError(f"rank {self.rank} not admissible for family {fam}")
        object.__setattr__(self, "family", fam)

    def __str__(self):
        return f"{self.family}{self.rank}"


def cartan_matrix(ct: CartanType) -> tuple[tuple[int, ...], ...]:
    """Cartan matrix in Bourbaki numbering, rows indexed by coroots."""
    n = ct.rank
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def bond(i, j, aij=-1, aji=-1):
        a[i][j] = aij
        a[j][i] = aji

    fam = ct.family
    if fam in ("A", "B", "C"):
        for i in range(n - 1):
            bond(i, i + 1)
        if fam == "B" and n >= 2:
            # alpha_n short: <alpha_{n-1}, alpha_n^vee> = -2
            a[n - 1][n - 2] = -2
        if fam == "C" and n >= 2:
            # alpha_n long: <alpha_n, alpha_{n-1}^vee> = -2
            a[n - 2][n - 1] = -2
    elif fam == "D":
        for i in range(n - 2):
            bond(i, i + 1)
        bond(n - 3, n - 1)
    elif fam == "E":
        # Bourbaki: chain 1-3-4-5-...-n with node 2 attached to node 4
        chain = [0, 2, 3, 4, 5, 6, 7][: n - 1]
        for i, j in zip(chain, chain[1:]):
            bond(i, j)
        bond(1, 3)
    elif fam == "F":
        bond(0, 1)
        bond(2, 3)
        # alpha_1, alpha_2 long; alpha_3, alpha_4 short
        a[1][2] = -1
        a[2][1] = -2
    elif fam == "G":
        # alpha_1 short, alpha_2 long; highest root 3*alpha_1 + 2*alpha_2
        a[0][1] = -3
        a[1][0] = -1
    return tuple(tuple(row) for row in a)


def _invert(mat: Sequence[Sequence[Fraction]]) -> tuple[tuple[Fraction, ...], ...]:
    """Exact inverse of a square rational matrix by Gaussian elimination."""
    n = len(mat)
    aug = [[Fraction(mat[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)]
           for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            raise ValueError("singular matrix")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = Fraction(1) / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


@dataclass(frozen=True)
class Weight:
    """Element of the rational span of the weight lattice."""

    coords: Vector
    basis: Literal["root", "fweight"] = "root"


@dataclass(frozen=True)
class Coweight:
    """Element of the rational span of the coweight lattice, in coroot coordinates."""

    coords: Vector


def _as_fracs(v: Iterable) -> Vector:
    return tuple(Fraction(x) for x in v)


class RootSystem:
    """A (possibly reducible) root system given by a Cartan matrix.

    `lengths[i]` is half the squared length of alpha_i.  When built from a
    CartanType the lengths are normalized so short roots have squared
    length 2; Levi subsystems pass their inherited lengths explicitly.
    """

    def __init__(self, cartan: Sequence[Sequence[int]],
                 lengths: Sequence[Fraction] | None = None,
                 label: str = "",
                 ambient_simples: tuple[int, ...] | None = None):
        self.cartan = tuple(tuple(int(x) for x in row) for row in cartan)
        self.rank = len(self.cartan)
        for i, row in enumerate(self.cartan):
            if len(row) != self.rank or row[i] != 2:
                raise ValueError("malformed Cartan matrix")
        self.label = label or f"cartan{self.rank}"
        # indices of these simple roots inside an ambient system, if any
        self.ambient_simples = ambient_simples
        self.lengths = _as_fracs(lengths) if lengths is not None else self._symmetrizer()
        for i in range(self.rank):
            for j in range(self.rank):
                if self.lengths[i] * self.cartan[i][j] != self.lengths[j] * self.cartan[j][i]:
                    raise ValueError("lengths do not symmetrize the Cartan matrix")
        self.positive_roots = self._close_roots()
        self.root_index = {r: k for k, r in enumerate(self.positive_roots)}
        self.cartan_inv = _invert(self.cartan) if self.rank else ()
        self._heights = tuple(sum(r) for r in self.positive_roots)

    # -- construction ---------------------------------------------------

    def _symmetrizer(self) -> Vector:
        """Half squared lengths with short roots normalized to length^2 = 2."""
        d: list[Fraction | None] = [None] * self.rank
        for start in range(self.rank):
            if d[start] is not None:
                continue
            d[start] = Fraction(1)
            stack = [start]
            while stack:
                i = stack.pop()
                for j in range(self.rank):
                    if i != j and self.cartan[i][j] and d[j] is None:
                        # d_j * a_ji = d_i * a_ij
                        d[j] = d[i] * self.cartan[i][j] / self.cartan[j][i]
                        stack.append(j)
        vals = [x for x in d if x is not None]
        m = min(vals) if vals else Fraction(1)
        return tuple((x / m) for x in d)  # type: ignore[arg-type]

    def _close_roots(self) -> tuple[tuple[int, ...], ...]:
        n = self.rank
        seen: set[tuple[int, ...]] = set()
        frontier = [tuple(int(i == j) for j in range(n)) for i in range(n)]
        seen.update(frontier)
        while frontier:
            new = []
            for v in frontier:
                for i in range(n):
                    pairing = sum(self.cartan[i][j] * v[j] for j in range(n))
                    w = list(v)
                    w[i] -= pairing
                    wt = tuple(w)
                    if wt not in seen:
                        seen.add(wt)
                        new.append(wt)
            frontier = new
        pos = [r for r in seen if all(c >= 0 for c in r) and any(r)]
        pos.sort(key=lambda r: (sum(r), r))
        return tuple(pos)

    # -- basic data -----------------------------------------------------

    @property
    def num_positive_roots(self) -> int:
        return len(self.positive_roots)

    def form(self, v: Sequence, w: Sequence) -> Fraction:
        """Invariant form on root coordinates: (alpha_i, alpha_j) = d_i * cartan[i][j]."""
        total = Fraction(0)
        for i, vi in enumerate(v):
            if not vi:
                continue
            for j, wj in enumerate(w):
                if wj and self.cartan[i][j]:
                    total += vi * wj * self.lengths[i] * self.cartan[i][j]
        return total

    def coroot_pairing(self, v: Sequence, i: int) -> Fraction:
        """<v, alpha_i^vee> for v in root coordinates."""
        return sum(self.cartan[i][j] * v[j] for j in range(self.rank) if v[j])

    def root_coroot(self, r: Sequence) -> Vector:
        """Coroot-basis coordinates of beta^vee for a root beta in root coordinates."""
        bb = self.form(r, r)
        return tuple(Fraction(2 * self.lengths[k] * r[k], 1) / bb for k in range(self.rank))

    def reflect(self, v: Sequence, i: int) -> tuple:
        """s_i acting on root coordinates."""
        p = self.coroot_pairing(v, i)
        return tuple(v[j] - p if j == i else v[j] for j in range(self.rank))

    def reflect_coweight(self, t: Sequence, i: int) -> tuple:
        """s_i acting on coroot coordinates: h -> h - alpha_i(h) alpha_i^vee."""
        val = sum(t[k] * self.cartan[k][i] for k in range(self.rank) if t[k])
        return tuple(t[j] - val if j == i else t[j] for j in range(self.rank))

    def eval_coweight(self, v: Sequence, t: Sequence) -> Fraction:
        """lambda(h) for lambda in root coordinates, h in coroot coordinates."""
        total = Fraction(0)
        for i, ti in enumerate(t):
            if ti:
                total += ti * sum(self.cartan[i][j] * v[j] for j in range(self.rank) if v[j])
        return total

    def highest_root(self) -> tuple[int, ...]:
        """Highest root; requires a connected (irreducible) system."""
        if len(self.components()) != 1:
            raise ValueError("highest root requires an irreducible system")
        return self.positive_roots[-1]

    def components(self) -> tuple[tuple[int, ...], ...]:
        """Connected components of the Dynkin diagram, as index tuples."""
        seen: set[int] = set()
        comps = []
        for start in range(self.rank):
            if start in seen:
                continue
            comp = []
            stack = [start]
            seen.add(start)
            while stack:
                i = stack.pop()
                comp.append(i)
                for j in range(self.rank):
                    if j not in seen and self.cartan[i][j]:
                        seen.add(j)
                        stack.append(j)
            comps.append(tuple(sorted(comp)))
        return tuple(comps)

    def weyl_order(self) -> int:
        """|W| from the component data: |det C| * rank! * prod(highest-root coefficients)."""
        total = 1
        for comp in self.components():
            sub = [[self.cartan[i][j] for j in comp] for i in comp]
            det = _int_det(sub)
            best = max(
                (r for r in self.positive_roots
                 if all(r[j] == 0 for j in range(self.rank) if j not in comp)),
                key=lambda r: sum(r),
            )
            prod = 1
            for j in comp:
                prod *= max(best[j], 1)
            fact = 1
            for k in range(2, len(comp) + 1):
                fact *= k
            total *= abs(det) * fact * prod
        return total

    # -- weights and coweights ------------------------------------------

    def fundamental_weight(self, i: int) -> Weight:
        """omega_i in root coordinates (column i of the inverse Cartan matrix)."""
        return Weight(tuple(self.cartan_inv[j][i] for j in range(self.rank)), "root")

    def fundamental_coweight(self, i: int) -> Coweight:
        """x_i with alpha_j(x_i) = delta_ij, in coroot coordinates."""
        return Coweight(tuple(self.cartan_inv[i][k] for k in range(self.rank)))

    def to_fweight(self, coords_root: Sequence) -> Vector:
        return tuple(self.coroot_pairing(coords_root, j) for j in range(self.rank))

    def to_root(self, coords_fweight: Sequence) -> Vector:
        return tuple(
            sum(self.cartan_inv[j][i] * Fraction(coords_fweight[i]) for i in range(self.rank))
            for j in range(self.rank)
        )

    def weight_root_coords(self, w: Weight) -> Vector:
        return _as_fracs(w.coords) if w.basis == "root" else self.to_root(w.coords)

    def pair(self, w: Weight, h: Coweight) -> Fraction:
        """Natural pairing lambda(h)."""
        if w.basis == "fweight":
            return sum(Fraction(a) * Fraction(b) for a, b in zip(w.coords, h.coords))
        return self.eval_coweight(w.coords, h.coords)

    def rho(self, levi: Iterable[int] | None = None) -> Weight:
        """Half sum of the positive roots (of the Levi subsystem, if given)."""
        idx = self.levi_positive(levi) if levi is not None else range(len(self.positive_roots))
        acc = [Fraction(0)] * self.rank
        for k in idx:
            r = self.positive_roots[k]
            for j in range(self.rank):
                acc[j] += Fraction(r[j], 2)
        return Weight(tuple(acc), "root")

    def levi_positive(self, levi: Iterable[int]) -> tuple[int, ...]:
        """Indices of positive roots supported on the given simple indices."""
        lv = set(levi)
        bad = lv - set(range(self.rank))
        if bad:
            raise ValueError(f"levi indices out of range: {sorted(bad)}")
        return tuple(
            k for k, r in enumerate(self.positive_roots)
            if all(j in lv for j in range(self.rank) if r[j])
        )

    def levi_subsystem(self, levi: Iterable[int]) -> "RootSystem":
        """Root system of the Levi factor, with the inherited form.

        The result records `ambient_simples` so its simple index k corresponds
        to ambient simple index ambient_simples[k]; it may be reducible.
        """
        lv = tuple(sorted(set(levi)))
        if any(j not in range(self.rank) for j in lv):
            raise ValueError(f"levi indices out of range: {lv}")
        sub_cartan = [[self.cartan[i][j] for j in lv] for i in lv]
        return RootSystem(
            sub_cartan,
            lengths=[self.lengths[i] for i in lv],
            label=f"{self.label}|levi{''.join(str(i + 1) for i in lv)}",
            ambient_simples=lv,
        )

    def ambient_root_coords(self, sub_coords: Sequence, ambient_rank: int) -> tuple:
        """Ambient root coordinates of one of this subsystem's roots."""
        if self.ambient_simples is None:
            raise ValueError("not a subsystem of an ambient root system")
        out = [0] * ambient_rank
        for k, c in enumerate(sub_coords):
            out[self.ambient_simples[k]] = c
        return tuple(out)

    def __repr__(self):
        return f"RootSystem({self.label}, rank={self.rank}, positive={len(self.positive_roots)})"


def _int_det(mat: Sequence[Sequence[int]]) -> int:
    n = len(mat)
    m = [[Fraction(x) for x in row] for row in mat]
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            return 0
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        det *= m[col][col]
        inv = Fraction(1) / m[col][col]
        m[col] = [x * inv for x in m[col]]
        for r in range(col + 1, n):
            if m[r][col]:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    assert det.denominator == 1
    return int(det)


@lru_cache(maxsize=None)
def build_root_system(ct: CartanType) -> RootSystem:
    """Root system of a simple Cartan type, short roots normalized to length^2 = 2."""
    return RootSystem(cartan_matrix(ct), label=str(ct))


def root_system(family: str, rank: int) -> RootSystem:
    """Convenience wrapper: root_system("B", 3)."""
    return build_root_system(CartanType(family, rank))
