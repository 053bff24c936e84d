"""Deformed ring: characters, exponents, movability, presentation."""

import pytest

from schubdeform import DimensionError, deformed_ring, parabolic

from common import ALL_TYPES, group_for, maximal_ring, ring_for


def test_chi_of_identity_is_nilradical_sum():
    ring = ring_for("B", 3, (0, 2))
    rs = ring.rs
    total = [0] * rs.rank
    for k in ring.parabolic.nilradical_roots:
        for j, c in enumerate(rs.positive_roots[k]):
            total[j] += c
    assert ring.chi(ring.group.identity).coords == tuple(total)


def test_chi_levi_dominant():
    """chi_w pairs nonnegatively with the Levi coroots for w in W^P."""
    ring = ring_for("C", 3, (1, 2))
    rs = ring.rs
    for w in ring.parabolic.reps:
        chi = ring.chi(w).coords
        for i in ring.parabolic.levi:
            assert rs.coroot_pairing(chi, i) >= 0


def test_unit_and_point_labels():
    ring = ring_for("B", 2, (0,))
    p = ring.parabolic
    unit = ring.unit()
    assert p.codim(unit) == 0
    assert ring.point() is ring.group.identity
    assert p.codim(ring.point()) == p.dim
    # the unit multiplies trivially, with zero exponents
    for w in p.reps:
        prod = ring.deformed_product(unit, w)
        assert prod.coeffs == {ring.position(w): {(0,) * len(ring.omitted): 1}}


@pytest.mark.parametrize("family,rank", ALL_TYPES)
def test_exponents_nonnegative_and_graded(family, rank):
    for omit in range(rank):
        ring = maximal_ring(family, rank, omit)
        p = ring.parabolic
        for u in p.reps:
            for v in p.reps:
                cls = ring.deformed_product(u, v)
                for pos, mono in cls.coeffs.items():
                    assert p.codim(ring.reps[pos]) == p.codim(u) + p.codim(v)
                    for exps, c in mono.items():
                        assert all(e >= 0 for e in exps)
                        assert c > 0


def test_minuscule_detection():
    assert maximal_ring("B", 3, 0).is_minuscule()
    assert not maximal_ring("B", 3, 1).is_minuscule()
    assert not maximal_ring("B", 3, 2).is_minuscule()
    assert maximal_ring("C", 3, 2).is_minuscule()
    assert not maximal_ring("C", 3, 0).is_minuscule()
    for omit in range(3):
        assert maximal_ring("A", 3, omit).is_minuscule()
    assert not maximal_ring("G", 2, 0).is_minuscule()
    assert not ring_for("B", 3, (2,)).is_minuscule()  # not maximal


def test_specializations():
    ring = maximal_ring("B", 3, 2)
    p = ring.parabolic
    for u in p.reps:
        for v in p.reps:
            cls = ring.deformed_product(u, v)
            assert cls.classical() == ring.classical_product(u, v)
            zero = cls.at_zero()
            assert set(zero) <= set(cls.classical())
            assert ring.product0(u, v) == zero


def test_multiply_distributes():
    ring = maximal_ring("C", 3, 1)
    p = ring.parabolic
    a = ring.basis_class(p.reps[1])
    b = ring.basis_class(p.reps[2])
    c = ring.basis_class(p.reps[3])
    lhs = ring.multiply(a + b, c)
    rhs = ring.multiply(a, c) + ring.multiply(b, c)
    assert lhs == rhs


def test_point_coefficient_on_padded_dual_pairs():
    ring = maximal_ring("B", 3, 1)
    p = ring.parabolic
    unit = ring.unit()
    for w in p.reps:
        assert ring.point_coefficient((unit, w, p.iota(w))) == 1
        assert ring.point_coefficient((w, p.iota(w))) == 1
    # mismatched partners of equal codimension give zero
    by_codim = {}
    for w in p.reps:
        by_codim.setdefault(p.codim(w), []).append(w)
    twins = next(v for v in by_codim.values() if len(v) > 1)
    assert ring.point_coefficient((unit, twins[0], p.iota(twins[1]))) == 0


def test_movability_requires_balanced_codims():
    ring = maximal_ring("B", 3, 1)
    p = ring.parabolic
    with pytest.raises(DimensionError):
        ring.is_levi_movable((p.reps[0], p.reps[0], p.reps[0]))
    with pytest.raises(ValueError):
        ring.is_levi_movable((ring.group.simple_reflection(0),
                              p.reps[0], p.reps[0]))


def test_dual_pairs_always_movable():
    for fam, rank, omit in [("A", 3, 1), ("B", 3, 1), ("C", 3, 0), ("G", 2, 1)]:
        ring = maximal_ring(fam, rank, omit)
        p = ring.parabolic
        for w in p.reps:
            cert = ring.is_levi_movable((w, p.iota(w)))
            assert cert.coefficient == 1
            assert cert.movable


def test_labels_by_codimension():
    ring = maximal_ring("B", 3, 1)
    labs = ring.labels
    assert len(set(labs)) == len(labs)
    for pos, w in enumerate(ring.reps):
        assert labs[pos].startswith(f"c{ring.parabolic.codim(w)}")
    order = ring.table_order()
    codims = [ring.parabolic.codim(ring.reps[pos]) for pos in order]
    assert codims == sorted(codims)


def test_tangent_space_combinatorics():
    ring = ring_for("B", 3, (0, 2))
    p = ring.parabolic
    for w in p.reps:
        assert ring.tangent_roots(w) == ring.group.inversion_set(w)
        assert ring.tangent_complement_check(w)


def test_memoized_factory():
    g = group_for("A", 2)
    assert deformed_ring(parabolic(g, (0,))) is deformed_ring(parabolic(g, (0,)))
