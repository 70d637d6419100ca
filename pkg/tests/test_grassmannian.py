import pytest
from hypothesis import given
from hypothesis import strategies as st

from isopieri.errors import InvalidParameters, InvalidSymbol, WrongLieType
from isopieri.grassmannian import (
    GrassmannianSpec,
    bracket,
    count_symbols,
    dual,
    entry,
    enumerate_symbols,
    iota,
    is_symbol,
    make_spec,
    make_symbol,
    parse_symbol,
    reflect,
    type_of,
)

from conftest import brute_symbols


def test_make_spec_derived_fields():
    s = make_spec("C", 4, 5)
    assert (s.N, s.k) == (10, 1)
    s = make_spec("D", 2, 2)
    assert (s.N, s.k) == (6, 1)
    assert make_spec("b", 2, 3).N == 7
    assert make_spec("d", 3, 3).k == 1


@pytest.mark.parametrize("args", [("B", 3, 2), ("C", 0, 2), ("D", 2, 0), ("A", 1, 1), ("C", 3, 2)])
def test_make_spec_rejects(args):
    with pytest.raises(InvalidParameters):
        make_spec(*args)


def test_type_d_maximal_rank_rejected():
    # OG(n+1, 2n+2) has two components; see the README for why it is excluded.
    with pytest.raises(InvalidParameters):
        make_spec("D", 3, 2)


def test_spec_json_roundtrip():
    s = make_spec("B", 2, 3)
    assert GrassmannianSpec.from_json(s.to_json()) == s


def test_enumerate_og26_matches_node_set():
    expected = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (1, 5), (2, 6), (3, 5), (4, 5), (3, 6), (4, 6), (5, 6)]
    syms = enumerate_symbols(make_spec("D", 2, 2))
    assert len(syms) == 12
    assert set(syms) == set(expected)
    assert syms == sorted(syms)


def test_enumerate_small_cases():
    assert enumerate_symbols(make_spec("C", 2, 2)) == [(1, 2), (1, 3), (2, 4), (3, 4)]
    assert enumerate_symbols(make_spec("B", 1, 3)) == [(c,) for c in range(1, 8) if c != 4]


@pytest.mark.parametrize("lie_type", ["B", "C", "D"])
def test_enumeration_matches_brute_force(lie_type):
    for n in range(1, 6):
        for m in range(1, n + 1):
            spec = make_spec(lie_type, m, n)
            if spec.N > 12:
                continue
            syms = enumerate_symbols(spec)
            assert syms == brute_symbols(lie_type, m, n)
            assert len(syms) == count_symbols(spec)


def test_reflect_examples():
    assert reflect(make_spec("C", 4, 5), (2, 3, 4, 10)) == (1, 7, 8, 9)
    assert reflect(make_spec("D", 3, 4), (1, 4, 5)) == (6, 7, 10)


def test_iota_examples():
    s = make_spec("D", 3, 4)
    assert iota(s, (6, 7, 10)) == (5, 7, 10)
    assert iota(make_spec("D", 2, 2), (1, 2)) == (1, 2)
    with pytest.raises(WrongLieType):
        iota(make_spec("C", 2, 2), (1, 2))


def test_dual_examples():
    assert dual(make_spec("D", 1, 2), (4,)) == (4,)
    assert dual(make_spec("D", 3, 4), (1, 4, 5)) == (5, 7, 10)
    assert dual(make_spec("C", 2, 2), (1, 3)) == (2, 4)


def test_type_of_examples():
    assert type_of(make_spec("D", 2, 2), (1, 2)) == 2
    assert type_of(make_spec("D", 2, 3), (1, 4)) == 0
    assert type_of(make_spec("D", 2, 2), (1, 3)) == 1
    with pytest.raises(WrongLieType):
        type_of(make_spec("B", 2, 3), (1, 2))


def test_entry_sentinels():
    assert entry((2, 5), 0, 6) == 0
    assert entry((2, 5), 3, 6) == 7
    assert entry((2, 5), 2, 6) == 5


def test_make_symbol_sorts_and_validates():
    s = make_spec("C", 4, 5)
    assert make_symbol(s, [10, 2, 4, 3]) == (2, 3, 4, 10)
    assert parse_symbol(s, "[2, 3,4,10]") == (2, 3, 4, 10)
    for bad in ([1, 10, 2, 3], [1, 2, 3], [0, 1, 2, 3], [1, 1, 2, 3], [1, 2, 3, 11]):
        with pytest.raises(InvalidSymbol):
            make_symbol(s, bad)
    with pytest.raises(InvalidSymbol):
        parse_symbol(s, "1,x,3,4")


def test_centre_column_of_type_b_is_not_isotropic():
    assert not is_symbol(make_spec("B", 1, 3), (4,))


spaces = st.sampled_from([("B", 2, 3), ("C", 3, 4), ("D", 2, 3), ("D", 3, 4), ("D", 4, 4), ("C", 1, 2)])


@given(spaces, st.data())
def test_involutions(triple, data):
    spec = make_spec(*triple)
    P = data.draw(st.sampled_from(enumerate_symbols(spec)))
    assert dual(spec, dual(spec, P)) == P
    R = reflect(spec, P)
    assert is_symbol(spec, R) and len(R) == len(P)
    assert reflect(spec, R) == P
    if spec.lie_type == "D":
        assert is_symbol(spec, iota(spec, P))
        assert iota(spec, iota(spec, P)) == P
        assert (type_of(spec, P) == 2) == (spec.n + 1 not in bracket(spec, P))
