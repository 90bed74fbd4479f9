from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cubicspan.gf import (
    FieldError,
    elements,
    embed,
    embedding_table,
    field_of_order,
    frobenius,
    make_field,
    minimal_polynomial,
)

SMALL = [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2), (11, 1)]


def test_fixed_moduli():
    assert make_field(2, 2).modulus == (1, 1, 1)
    assert make_field(2, 3).modulus == (1, 1, 0, 1)
    assert make_field(2, 4).modulus == (1, 1, 0, 0, 1)
    assert make_field(3, 2).modulus == (2, 2, 1)


def test_gf4_generator_relation():
    F = make_field(2, 2)
    g = 2
    assert F.mul(g, g) == F.add(g, 1) == 3
    assert frobenius(F, g) == 3


def test_small_examples():
    assert list(elements(make_field(2))) == [0, 1]
    assert len(elements(make_field(3, 2))) == 9
    assert make_field(7).inv(3) == 5
    F5 = make_field(5)
    acc = 1
    for x in range(1, 5):
        acc = F5.mul(acc, x)
    assert acc == 4
    F9 = make_field(3, 2)
    for x in range(1, 9):
        assert 8 % _order(F9, x) == 0
        assert F9.frobenius(F9.frobenius(x)) == x
    F2 = make_field(2)
    assert [F2.frobenius(x) for x in (0, 1)] == [0, 1]


def _order(F, x):
    n, y = 1, x
    while y != 1:
        y = F.mul(y, x)
        n += 1
    return n


@pytest.mark.parametrize("pk", SMALL)
def test_field_axioms_exhaustive(pk):
    F = make_field(*pk)
    els = list(elements(F))
    for a, b in product(els, els):
        assert F.add(a, b) == F.add(b, a)
        assert F.mul(a, b) == F.mul(b, a)
        assert F.sub(F.add(a, b), b) == a
        if b:
            assert F.mul(F.div(a, b), b) == a
    for a, b, c in product(els[: min(len(els), 8)], els, els):
        assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
        assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
        assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
    for a in els:
        assert F.pow(a, F.q) == a
        assert F.add(a, F.neg(a)) == 0
        if a:
            assert F.mul(a, F.inv(a)) == 1


@pytest.mark.parametrize("pk", SMALL)
def test_multiplicative_group_cyclic(pk):
    F = make_field(*pk)
    orders = [_order(F, x) for x in range(1, F.q)]
    assert max(orders) == F.q - 1


@pytest.mark.parametrize("pk", [(2, 8), (3, 5), (2, 16), (3, 10)])
@settings(max_examples=60, deadline=None)
@given(data=st.data())
def test_field_axioms_sampled(pk, data):
    F = make_field(*pk)
    el = st.integers(0, F.q - 1)
    a, b, c = data.draw(el), data.draw(el), data.draw(el)
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
    assert F.add(F.frobenius(a), F.frobenius(b)) == F.frobenius(F.add(a, b))
    if a:
        assert F.mul(a, F.inv(a)) == 1


def test_polynomial_fallback_matches_axioms():
    F = make_field(3, 11)  # above the table limit
    assert not F.tabled
    a, b = 12345, 54321
    assert F.mul(F.div(a, b), b) == a
    assert F.pow(a, F.q) == a


def test_errors():
    with pytest.raises(FieldError):
        make_field(13)
    with pytest.raises(FieldError):
        make_field(2, 17)
    with pytest.raises(ZeroDivisionError):
        make_field(7).inv(0)
    with pytest.raises(FieldError):
        embedding_table(make_field(2, 2), make_field(2, 3))
    with pytest.raises(FieldError):
        field_of_order(6)


def test_embeddings():
    assert embed(make_field(2), make_field(2, 6), 1) == 1
    assert embed(make_field(3), make_field(3, 2), 2) == 2
    src, dst = make_field(2, 2), make_field(2, 4)
    img = embed(src, dst, 2)
    assert minimal_polynomial(dst, img) == (1, 1, 1)
    assert embed(src, dst, 2) == img


@pytest.mark.parametrize("a,b", [((2, 1), (2, 4)), ((2, 2), (2, 4)), ((3, 1), (3, 2)), ((2, 3), (2, 6)), ((3, 2), (3, 4))])
def test_embedding_is_homomorphism(a, b):
    src, dst = make_field(*a), make_field(*b)
    t = embedding_table(src, dst)
    assert len(set(t)) == src.q
    for x, y in product(range(src.q), repeat=2):
        assert t[src.add(x, y)] == dst.add(t[x], t[y])
        assert t[src.mul(x, y)] == dst.mul(t[x], t[y])


@pytest.mark.parametrize("pk", [(2, 2), (3, 2), (2, 3), (7, 1)])
def test_dense_tables_agree(pk):
    F = make_field(*pk)
    T = F.dense
    for a, b in product(range(F.q), repeat=2):
        assert T.add_t[a, b] == F.add(a, b)
        assert T.mul_t[a, b] == F.mul(a, b)


def test_sqrt():
    for pk in SMALL:
        F = make_field(*pk)
        squares = {F.mul(x, x) for x in range(F.q)}
        for a in range(F.q):
            r = F.sqrt(a)
            if a in squares:
                assert F.mul(r, r) == a
            else:
                assert r is None


def test_wilson_all_small():
    for pk in SMALL:
        F = make_field(*pk)
        acc = 1
        for x in range(1, F.q):
            acc = F.mul(acc, x)
        assert acc == F.neg(1)
