"""Shared helpers for the test suite."""

from fractions import Fraction

from yangian.algebra import Element, from_words


def random_word(rng, n, max_len=4, max_mode=2):
    length = rng.randint(1, max_len)
    return tuple(
        (rng.randint(1, max_mode), rng.randint(1, n), rng.randint(1, n))
        for _ in range(length))


def random_element(rng, ctx, terms=3, max_len=3, max_mode=2,
                   allow_const=True):
    raw = {}
    for _ in range(rng.randint(1, terms)):
        w = random_word(rng, ctx.n, max_len, max_mode)
        raw[w] = raw.get(w, 0) + Fraction(rng.randint(-3, 3),
                                          rng.randint(1, 3))
    if allow_const and rng.random() < 0.4:
        raw[()] = Fraction(rng.randint(-2, 2))
    return from_words(ctx, raw)


def project(el, ctx):
    """Image of an element under a lower degree bound."""
    return Element(ctx, dict(el.terms))
