import pytest
from hypothesis import given
from hypothesis import strategies as st

from isopieri.errors import InvalidSpecial, ModulusMismatch, NotPreceq
from isopieri.grassmannian import make_spec
from isopieri.ktheory import (
    HClass,
    SpecialSchubert,
    chi,
    hclass_add,
    hclass_mul,
    hclass_scale,
    quadric_class,
    special_classes,
    special_type,
    triple_intersection,
    triple_intersection_printed,
    triple_intersection_unified,
    validate_special,
    z_class,
)
from isopieri.projection import z_data

from conftest import LISTED, pairs_below


def test_hclass_arithmetic():
    q = quadric_class(4)
    assert q * q == HClass(4, (0, 0, 4, -4))
    assert hclass_mul(q, HClass.one(4)) == q
    assert HClass.h_power(5, 4) * HClass.h_power(5, 1) == HClass.zero(5)
    assert hclass_add(q, q) == hclass_scale(q, 2)
    assert (q - q).is_zero()
    assert str(q * q) == "4*h^2 - 4*h^3"
    with pytest.raises(ModulusMismatch):
        hclass_add(HClass.one(3), HClass.one(4))


def test_hclass_normalizes_length():
    assert HClass(3, (1, 2, 3, 4, 5)).coeffs == (1, 2, 3)
    assert HClass(3, (1,)).coeffs == (1, 0, 0)


def test_chi_examples():
    for N in (3, 6):
        for j in range(N):
            assert chi(HClass.h_power(N, j)) == 1
    assert chi(quadric_class(5)) == 1
    assert chi(HClass.zero(5)) == 0


def test_z_class_examples():
    spec = make_spec("C", 4, 5)
    zd = z_data(spec, (2, 3, 4, 10), (1, 2, 4, 6))
    assert z_class(spec, zd) == HClass(10, (0, 0, 0, 2, -1))
    zd = z_data(spec, (6, 7, 9, 10), (1, 2, 3, 4))
    assert (zd.l, zd.q) == (0, 0)
    assert z_class(spec, zd) == HClass.one(10)


@given(st.integers(2, 12), st.data())
def test_chi_of_complete_intersection(N, data):
    a = data.draw(st.integers(0, N - 1))
    b = data.draw(st.integers(0, (N - 1 - a) // 2))
    x = HClass.h_power(N, a) * HClass(N, (2, -1)) ** b
    assert chi(x) == 1


@given(st.integers(2, 8), st.lists(st.integers(-5, 5), max_size=8), st.lists(st.integers(-5, 5), max_size=8),
       st.lists(st.integers(-5, 5), max_size=8))
def test_ring_laws(N, a, b, c):
    x, y, z = HClass(N, tuple(a)), HClass(N, tuple(b)), HClass(N, tuple(c))
    assert x * y == y * x
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z


def test_special_validation():
    spec = make_spec("D", 2, 3)
    validate_special(spec, SpecialSchubert(2, True))
    for bad in (SpecialSchubert(0), SpecialSchubert(6), SpecialSchubert(1, True)):
        with pytest.raises(InvalidSpecial):
            validate_special(spec, bad)
    with pytest.raises(InvalidSpecial):
        validate_special(make_spec("B", 2, 3), SpecialSchubert(1, True))
    assert special_type(spec, SpecialSchubert(2)) == 0
    assert special_type(spec, SpecialSchubert(2, True)) == 1
    with pytest.raises(InvalidSpecial):
        special_type(spec, SpecialSchubert(1))
    assert [s.label() for s in special_classes(make_spec("D", 2, 2))] == ["X(1)", "~X(1)", "X(2)", "X(3)"]
    assert len(special_classes(make_spec("C", 2, 4))) == 6


def test_triple_og28_example():
    spec = make_spec("D", 2, 3)
    assert triple_intersection(spec, (1, 4), (1, 2), SpecialSchubert(2)) == 0
    assert triple_intersection(spec, (1, 4), (1, 2), SpecialSchubert(2, True)) == 1
    assert triple_intersection_unified(spec, (1, 4), (1, 2), SpecialSchubert(2, True)) == 1
    assert triple_intersection_unified(spec, (1, 4), (1, 2), SpecialSchubert(2)) == 0


def test_triple_sg24():
    spec = make_spec("C", 2, 2)
    assert [triple_intersection(spec, (3, 4), (1, 2), SpecialSchubert(r)) for r in (1, 2)] == [1, 1]
    assert [triple_intersection(spec, (3, 4), (3, 4), SpecialSchubert(r)) for r in (1, 2)] == [0, 0]


def test_triple_sg410_example():
    spec = make_spec("C", 4, 5)
    assert triple_intersection(spec, (2, 3, 4, 10), (1, 2, 4, 6), SpecialSchubert(1)) == 1


def test_triple_requires_bruhat():
    with pytest.raises(NotPreceq):
        triple_intersection(make_spec("D", 2, 2), (1, 4), (1, 3), SpecialSchubert(1))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_projective_space_oracle(n):
    # SG(1, 2n) is P^{2n-1}: X_{c} is a P^{c-1}, X^{t} has dimension 2n - t,
    # and the special class is a general linear section of codimension r.
    spec = make_spec("C", 1, n)
    for P, T in pairs_below(spec):
        for sp in special_classes(spec):
            dim = (P[0] - 1) + (2 * n - T[0]) - (2 * n - 1) - sp.r
            assert triple_intersection(spec, P, T, sp) == (1 if dim >= 0 else 0)


@pytest.mark.parametrize("triple", LISTED + [("B", 1, 2), ("B", 1, 3), ("D", 1, 3)], ids=str)
def test_unified_formula_agrees(triple):
    spec = make_spec(*triple)
    for P, T in pairs_below(spec):
        for sp in special_classes(spec):
            assert triple_intersection(spec, P, T, sp) == triple_intersection_unified(spec, P, T, sp)


@pytest.mark.parametrize("triple", LISTED, ids=str)
def test_degree_overflow_vanishes(triple):
    spec = make_spec(*triple)
    for P, T in pairs_below(spec):
        zd = z_data(spec, P, T)
        for sp in special_classes(spec):
            if zd.q == 0 and spec.m + sp.r + zd.l - 1 >= spec.N:
                assert triple_intersection(spec, P, T, sp) == 0


def test_printed_reading_differs_in_pullback_range():
    # type B, r < k: the literal reading drops a quadric factor it should keep
    spec = make_spec("B", 1, 2)
    sp = SpecialSchubert(1)
    assert triple_intersection(spec, (4,), (2,), sp) == 2
    assert triple_intersection_printed(spec, (4,), (2,), sp) == 1


def test_printed_reading_agrees_in_type_c():
    spec = make_spec("C", 2, 4)
    for P, T in pairs_below(spec):
        for sp in special_classes(spec):
            assert triple_intersection_printed(spec, P, T, sp) == triple_intersection(spec, P, T, sp)
