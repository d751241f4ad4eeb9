"""Series arithmetic: shifts, inversion, products, matrix inverses."""

import random
from fractions import Fraction

import pytest

from yangian.algebra import Context, GL, generator, unit, zero
from yangian.series import (
    Series, SeriesMatrix, geometric_unit_sum, series_outer, slot_embed,
)
from util import random_element


def gen_series(ctx, i, j, order):
    coeffs = {k: generator(ctx, i, j, k) for k in range(1, order + 1)}
    if i == j:
        coeffs[0] = unit(ctx)
    return Series(ctx, order, coeffs)


def rand_series(rng, ctx, order, with_unit=True):
    coeffs = {}
    for k in range(1, order + 1):
        el = random_element(rng, ctx, terms=2, max_len=1, max_mode=1,
                            allow_const=False)
        if el.degree() <= k and rng.random() < 0.8:
            coeffs[k] = el
    if with_unit:
        coeffs[0] = unit(ctx)
    return Series(ctx, order, coeffs)


def test_shift_of_simple_pole():
    ctx = Context(2, 4)
    a = generator(ctx, 1, 1, 1)
    s = Series(ctx, 4, {1: a})
    t = s.shift(1)
    for k in range(1, 5):
        assert t.coefficient(k) == a * Fraction((-1) ** (k - 1))
    assert s.shift(0) == s


def test_shift_composes_with_half_integers():
    ctx = Context(2, 4)
    rng = random.Random(21)
    for _ in range(25):
        s = rand_series(rng, ctx, 4)
        a, b = Fraction(1, 2), Fraction(-3, 2)
        assert s.shift(a).shift(b) == s.shift(a + b)
        assert s.shift(a).shift(-a) == s


def test_shift_is_multiplicative():
    ctx = Context(2, 4)
    rng = random.Random(22)
    for _ in range(25):
        s = rand_series(rng, ctx, 4)
        t = rand_series(rng, ctx, 4)
        c = Fraction(rng.randint(-3, 3), rng.choice([1, 2]))
        assert (s * t).shift(c) == s.shift(c) * t.shift(c)


def test_negate_variable():
    ctx = Context(2, 4)
    rng = random.Random(23)
    for _ in range(25):
        s = rand_series(rng, ctx, 4)
        assert s.negate_variable().negate_variable() == s
        c = Fraction(rng.randint(-2, 2))
        assert s.shift(c).negate_variable() == s.negate_variable().shift(-c)


def test_inverse_two_sided():
    ctx = Context(2, 4)
    one = Series.constant(ctx, 4)
    rng = random.Random(24)
    for _ in range(25):
        s = rand_series(rng, ctx, 4)
        inv = s.invert()
        assert s * inv == one
        assert inv * s == one
        assert inv.invert() == s


def test_inverse_of_geometric():
    ctx = Context(2, 4)
    a = generator(ctx, 1, 1, 1)
    s = Series(ctx, 4, {0: unit(ctx), 1: a})
    inv = s.invert()
    for k in range(5):
        want = unit(ctx)
        for _ in range(k):
            want = want * a
        assert inv.coefficient(k) == want * Fraction((-1) ** k)


def test_product_truncates_to_min_order():
    ctx = Context(2, 4)
    s = Series(ctx, 4, {1: generator(ctx, 1, 2, 1)})
    t = Series(ctx, 3, {1: generator(ctx, 2, 1, 1)})
    assert (s * t).order == 3
    assert s.truncate(2).order == 2
    with pytest.raises(ValueError):
        s.truncate(5)


def test_coefficient_degree_invariant_enforced():
    ctx = Context(2, 4)
    g2 = generator(ctx, 1, 1, 2)
    with pytest.raises(ValueError):
        Series(ctx, 4, {1: g2})


def test_geometric_unit_sum():
    ctx = Context(2, 4)
    t = Series(ctx, 4, {1: generator(ctx, 1, 2, 1)})
    total = geometric_unit_sum(t)
    one = Series.constant(ctx, 4)
    assert (one - t) * total == one
    with pytest.raises(ValueError):
        geometric_unit_sum(one)


def test_series_outer_and_slot_embedding():
    ctx = Context(2, 4)
    a = gen_series(ctx, 1, 2, 4)
    b = gen_series(ctx, 2, 1, 4)
    outer = series_outer(a, b)
    assert outer.arity == 2
    # matches the product of the two slot embeddings
    assert slot_embed(a, 2, 0) * slot_embed(b, 2, 1) == outer
    # and embeddings into different slots commute
    assert slot_embed(b, 2, 1) * slot_embed(a, 2, 0) == outer


def test_matrix_inverse_round_trip():
    ctx = Context(2, 4)
    m = SeriesMatrix([[gen_series(ctx, i, j, 4) for j in (1, 2)]
                      for i in (1, 2)])
    inv = m.inverse()
    ident = SeriesMatrix.identity(ctx, 2, 4)
    assert m * inv == ident
    assert inv * m == ident
    assert inv.inverse() == m


def test_matrix_inverse_leading_entry():
    # the u^-1 part of the inverse is minus the generator matrix
    ctx = Context(3, 3)
    m = SeriesMatrix([[gen_series(ctx, i, j, 3) for j in (1, 2, 3)]
                      for i in (1, 2, 3)])
    inv = m.inverse()
    for i in (1, 2, 3):
        for j in (1, 2, 3):
            assert inv.entry(i, j).coefficient(1) == -generator(ctx, i, j, 1)
