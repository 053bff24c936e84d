"""Divided-difference structure constants and the disk cache."""

import json

import pytest

from schubdeform import chevalley_oracle, parabolic, schubert_basis
from schubdeform.poly import Poly
from schubdeform.schubert import SchubertBasis, divided_difference

from common import group_for


def test_divided_difference_basics():
    rs = group_for("A", 2).rs
    x = Poly.variable(2, 0)
    y = Poly.variable(2, 1)
    # kills invariants
    assert divided_difference(rs, 0, Poly.const(2, 3)).is_zero()
    inv = x * x + x * y + y * y
    assert divided_difference(rs, 0, inv).is_zero()
    # lowers degree by one on a non-invariant
    out = divided_difference(rs, 0, x * y)
    assert out.degree() == 1
    # twisted Leibniz rule: d_i(fg) = (d_i f) g + (s_i f)(d_i g)
    f = x + y
    g = x * y
    lhs = divided_difference(rs, 0, f * g)
    rhs = divided_difference(rs, 0, f) * g + \
        f.reflect_substitute(0, rs.cartan[0]) * divided_difference(rs, 0, g)
    assert lhs == rhs


def test_divided_difference_square_zero():
    rs = group_for("B", 2).rs
    x = Poly.variable(2, 0)
    y = Poly.variable(2, 1)
    for p in (x * x * y, (x + y) * (x + y), x * y * y):
        for i in range(2):
            once = divided_difference(rs, i, p)
            assert divided_difference(rs, i, once).is_zero()


@pytest.mark.parametrize("family,rank", [("A", 2), ("B", 2), ("A", 3)])
def test_product_symmetry_and_grading(family, rank):
    g = group_for(family, rank)
    basis = schubert_basis(g)
    for u in g.elements:
        for v in g.elements:
            if u.index > v.index:
                continue
            row = basis.product(u, v)
            assert row == basis.product(v, u)
            for w_idx, c in row.items():
                w = g.elements[w_idx]
                assert w.length == u.length + v.length
                assert isinstance(c, int) and c > 0


def test_unit_and_point():
    g = group_for("B", 2)
    basis = schubert_basis(g)
    e = g.identity
    for w in g.elements:
        assert basis.product(e, w) == {w.index: 1}
    w_o = g.longest_element()
    assert basis.product(w_o, w_o) == {}


@pytest.mark.parametrize("family,rank", [("A", 2), ("A", 3), ("B", 2), ("B", 3),
                                         ("C", 3), ("G", 2)])
def test_chevalley_oracle_full_flag(family, rank):
    """Degree-1 products from the reflection-sum rule match the computed ones."""
    g = group_for(family, rank)
    basis = schubert_basis(g)
    borel = parabolic(g, ())
    for i in range(rank):
        s_i = g.simple_reflection(i)
        for w in g.elements:
            if w.length + 1 > g.rs.num_positive_roots:
                continue
            assert chevalley_oracle(borel, i, w) == basis.product(s_i, w)


def test_chevalley_oracle_parabolic():
    g = group_for("A", 3)
    p = parabolic(g, (0, 2))
    basis = schubert_basis(g)
    for w in p.reps:
        if w.length + 1 > p.dim:
            continue
        got = chevalley_oracle(p, 1, w)
        full = basis.product(g.simple_reflection(1), w)
        assert got == {k: c for k, c in full.items() if p.contains(g.elements[k])}
    with pytest.raises(ValueError):
        chevalley_oracle(p, 0, g.identity)


def test_cache_round_trip(tmp_path):
    g = group_for("B", 2)
    fresh = SchubertBasis(g, cache_dir=tmp_path)
    u = g.simple_reflection(0)
    v = g.simple_reflection(1)
    row = fresh.product(u, v)
    fresh.save_cache()
    files = list(tmp_path.glob("*.json"))
    assert len(files) == 1
    reloaded = SchubertBasis(g, cache_dir=tmp_path)
    assert reloaded._products[(min(u.index, v.index), max(u.index, v.index))] == row
    assert reloaded.product(u, v) == row


def test_cache_rejects_corruption(tmp_path):
    g = group_for("A", 2)
    fresh = SchubertBasis(g, cache_dir=tmp_path)
    fresh.product(g.simple_reflection(0), g.simple_reflection(1))
    fresh.save_cache()
    path = next(tmp_path.glob("*.json"))
    doc = json.loads(path.read_text())
    first = next(iter(doc["entries"].values()))
    first[next(iter(first))] += 1  # tamper without updating the digest
    path.write_text(json.dumps(doc))
    clean = SchubertBasis(g, cache_dir=tmp_path)
    assert clean._products == {}  # checksum mismatch ignored


def test_cache_ignores_other_group(tmp_path):
    a2 = group_for("A", 2)
    b2 = group_for("B", 2)
    first = SchubertBasis(a2, cache_dir=tmp_path)
    first.product(a2.simple_reflection(0), a2.simple_reflection(1))
    first.save_cache()
    path = next(tmp_path.glob("*.json"))
    renamed = path.with_name(path.name.replace("A2", "B2"))
    path.rename(renamed)
    other = SchubertBasis(b2, cache_dir=tmp_path)
    assert other._products == {}  # Cartan matrix mismatch ignored
