"""Exact noncommutative algebra of truncated Yangian generators.

Generators are symbols T_{i,j}^{(k)} (matrix slot i,j and mode k >= 1),
represented as triples (k, i, j) so that plain tuple comparison gives the
monomial order used for normal words: (k, i, j) lexicographic ascending.
Mode 0 is never stored; it is the scalar delta_{ij}.

Elements are Fraction-linear combinations of normal words, truncated by
total filtration degree (the sum of the modes in a word).  Multiplication
normal-orders the exact product first and only then discards words whose
degree exceeds the context bound, so the result is the image of the exact
product under the degree projection.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import permutations
import threading

GL = "GL"
SL = "SL"

ZERO = Fraction(0)
ONE = Fraction(1)


class TruncationError(ValueError):
    """A requested object does not fit under the context degree bound."""


class Context:
    """Ambient algebra: matrix size n, degree bound, GL or SL quotient."""

    __slots__ = ("n", "max_degree", "mode")

    def __init__(self, n, max_degree, mode=GL):
        if n < 2:
            raise ValueError("matrix size must be at least 2")
        if max_degree < 1:
            raise ValueError("degree bound must be at least 1")
        if mode not in (GL, SL):
            raise ValueError("mode must be GL or SL")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "max_degree", max_degree)
        object.__setattr__(self, "mode", mode)

    def __setattr__(self, name, value):
        raise AttributeError("contexts are immutable")

    def __eq__(self, other):
        return (isinstance(other, Context)
                and (self.n, self.max_degree, self.mode)
                == (other.n, other.max_degree, other.mode))

    def __hash__(self):
        return hash((self.n, self.max_degree, self.mode))

    def __repr__(self):
        return "Context(n=%d, max_degree=%d, mode=%s)" % (
            self.n, self.max_degree, self.mode)

    def gl_twin(self, max_degree=None):
        return Context(self.n, max_degree or self.max_degree, GL)


def word_degree(word):
    return sum(sym[0] for sym in word)


def is_normal(word):
    return all(word[t] <= word[t + 1] for t in range(len(word) - 1))


# ---------------------------------------------------------------------------
# structure constants and rewriting (context-free: valid for every n)

def _two_symbol_terms(a, b, m1, c, d, m2, sign, out):
    """Accumulate sign * T_{a,b}^{(m1)} T_{c,d}^{(m2)}, collapsing mode 0."""
    if m1 == 0:
        if a != b:
            return
        word = () if m2 == 0 and c == d else ((m2, c, d),)
        if m2 == 0 and c != d:
            return
    elif m2 == 0:
        if c != d:
            return
        word = ((m1, a, b),)
    else:
        word = ((m1, a, b), (m2, c, d))
    out[word] = out.get(word, 0) + sign


@lru_cache(maxsize=None)
def commutator_words(i, j, r, k, l, s):
    """[T_{ij}^{(r)}, T_{kl}^{(s)}] as ((word, int_coeff), ...).

    Closed form derived once from the generating commutation relation
    -(u-v)[T_{ij}(u), T_{kl}(v)] = T_{kj}(u)T_{il}(v) - T_{kj}(v)T_{il}(u)
    by bivariate coefficient matching:
        sum over p = 1..min(r,s) of
            T_{kj}^{(r+s-p)} T_{il}^{(p-1)} - T_{kj}^{(p-1)} T_{il}^{(r+s-p)}
    Every term has degree r+s-1, one lower than the left side.
    """
    out = {}
    for p in range(1, min(r, s) + 1):
        _two_symbol_terms(k, j, r + s - p, i, l, p - 1, 1, out)
        _two_symbol_terms(k, j, p - 1, i, l, r + s - p, -1, out)
    return tuple(sorted((w, c) for w, c in out.items() if c))


@lru_cache(maxsize=None)
def normal_form_word(word):
    """Normal form of an arbitrary word: ((normal_word, int_coeff), ...).

    First-descent rewriting: x y -> y x + [x, y] on the leftmost adjacent
    out-of-order pair.  Terminates because a swap lowers the inversion
    count and a commutator correction lowers the total degree.
    """
    for t in range(len(word) - 1):
        if word[t] > word[t + 1]:
            break
    else:
        return ((word, 1),)
    x, y = word[t], word[t + 1]
    prefix, suffix = word[:t], word[t + 2:]
    out = {}
    for w, c in normal_form_word(prefix + (y, x) + suffix):
        out[w] = out.get(w, 0) + c
    (rx, ix, jx), (ry, ky, ly) = x, y
    for mid, c0 in commutator_words(ix, jx, rx, ky, ly, ry):
        for w, c in normal_form_word(prefix + mid + suffix):
            out[w] = out.get(w, 0) + c0 * c
    return tuple(sorted((w, c) for w, c in out.items() if c))


def _bubble_pass(terms, reverse):
    """One directed sweep of adjacent-descent rewriting over every word."""
    out = {}
    changed = False
    for word, coeff in terms.items():
        positions = range(len(word) - 1)
        if reverse:
            positions = reversed(positions)
        hit = None
        for t in positions:
            if word[t] > word[t + 1]:
                hit = t
                break
        if hit is None:
            out[word] = out.get(word, ZERO) + coeff
            continue
        changed = True
        x, y = word[hit], word[hit + 1]
        prefix, suffix = word[:hit], word[hit + 2:]
        swapped = prefix + (y, x) + suffix
        out[swapped] = out.get(swapped, ZERO) + coeff
        for mid, c0 in commutator_words(x[1], x[2], x[0], y[1], y[2], y[0]):
            w = prefix + mid + suffix
            out[w] = out.get(w, ZERO) + coeff * c0
    return {w: c for w, c in out.items() if c}, changed


def normal_order_strategy(word, direction="left"):
    """Normal-order one word by repeated directed sweeps.

    An independent rewriting strategy ('left' or 'right' scan for the
    descent to fix) used by the confluence checks against
    normal_form_word.  Returns {word: Fraction}.
    """
    terms = {tuple(word): ONE}
    changed = True
    while changed:
        terms, changed = _bubble_pass(terms, direction == "right")
    return terms


# ---------------------------------------------------------------------------
# SL quotient: eliminate T_{n,n}^{(k)} using the quantum determinant

_SL_LOCK = threading.RLock()
_SL_TABLES = {}


def _signed_permutations(n):
    for perm in permutations(range(1, n + 1)):
        inv = sum(1 for a in range(n) for b in range(a + 1, n)
                  if perm[a] > perm[b])
        yield perm, -1 if inv % 2 else 1


def _qdet_raw_coefficient(n, m):
    """u^{-m} coefficient of qdet T(u), as {GL normal word: int}.

    Direct expansion of the signed sum over permutations of
    T_{s(1),1}(u) T_{s(2),2}(u+1) ... T_{s(n),n}(u+n-1), using
    (u+c)^{-k} = sum_t binom(-k,t) c^t u^{-k-t}.
    """
    from math import comb

    total = {}

    def walk(perm, sign, col, budget, word, weight):
        if col > n:
            if budget == 0:
                for w, c in normal_form_word(tuple(word)):
                    total[w] = total.get(w, 0) + sign * weight * c
            return
        row = perm[col - 1]
        if row == col:
            walk(perm, sign, col + 1, budget, word, weight)
        shift = col - 1
        for k in range(1, budget + 1):
            top = budget - k if shift else 0
            for t in range(top + 1):
                w = comb(k + t - 1, t) * (shift ** t)
                if t % 2:
                    w = -w
                if w == 0:
                    continue
                word.append((k, row, col))
                walk(perm, sign, col + 1, budget - k - t, word, weight * w)
                word.pop()

    for perm, sign in _signed_permutations(n):
        walk(perm, sign, 1, m, [], 1)
    return {w: c for w, c in total.items() if c}


def _sl_elimination(n, k):
    """Replacement of T_{n,n}^{(k)}: T_{nn}-free normal terms as a tuple.

    Solves coefficient_k(qdet) = 0 for T_{n,n}^{(k)}, lowest mode first.
    """
    with _SL_LOCK:
        table = _SL_TABLES.setdefault(n, {})
        for m in range(1, k + 1):
            if m in table:
                continue
            raw = _qdet_raw_coefficient(n, m)
            top = ((m, n, n),)
            lead = raw.pop(top, 0)
            assert lead == 1, "qdet coefficient is not monic in T_nn"
            out = {}
            for word, coeff in raw.items():
                for w, c in _sl_word_nf(n, word):
                    out[w] = out.get(w, 0) - coeff * c
            table[m] = tuple(sorted((w, c) for w, c in out.items() if c))
        return table[k]


@lru_cache(maxsize=None)
def _sl_word_nf(n, word):
    """Rewrite a GL normal word into T_{nn}-free normal words.

    Substitutes the first T_{n,n}^{(m)} symbol and renormalizes; any
    reintroduced T_{n,n} has strictly lower degree, so this terminates.
    """
    for t, (m, i, j) in enumerate(word):
        if i == n and j == n:
            break
    else:
        return ((word, 1),)
    prefix, suffix = word[:t], word[t + 1:]
    out = {}
    for w_sub, c_sub in _sl_elimination(n, m):
        for w_nf, c_nf in normal_form_word(prefix + w_sub + suffix):
            for w_fin, c_fin in _sl_word_nf(n, w_nf):
                out[w_fin] = out.get(w_fin, 0) + c_sub * c_nf * c_fin
    return tuple(sorted((w, c) for w, c in out.items() if c))


# ---------------------------------------------------------------------------
# elements

def _reduce_raw(ctx, raw):
    """Canonical terms for a raw {GL normal word: Fraction} map.

    Applies the SL elimination when required, then drops zero
    coefficients and words over the degree bound (the projection).
    """
    if ctx.mode == SL:
        n = ctx.n
        if any(sym[1] == n and sym[2] == n for w in raw for sym in w):
            redone = {}
            for word, coeff in raw.items():
                if coeff == 0:
                    continue
                for w, c in _sl_word_nf(n, word):
                    redone[w] = redone.get(w, ZERO) + coeff * c
            raw = redone
    return {w: c for w, c in raw.items()
            if c and word_degree(w) <= ctx.max_degree}


class Element:
    """Fraction-linear combination of normal words under a context."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx, raw=None):
        self.ctx = ctx
        self.terms = _reduce_raw(ctx, raw) if raw else {}

    @classmethod
    def _trusted(cls, ctx, terms):
        el = cls.__new__(cls)
        el.ctx = ctx
        el.terms = terms
        return el

    def is_zero(self):
        return not self.terms

    def degree(self):
        return max((word_degree(w) for w in self.terms), default=0)

    def constant(self):
        """Coefficient of the empty word."""
        return self.terms.get((), ZERO)

    def items_sorted(self):
        return sorted(self.terms.items())

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = unit(self.ctx) * other
        return (isinstance(other, Element) and self.ctx == other.ctx
                and self.terms == other.terms)

    __hash__ = None

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = unit(self.ctx) * other
        if self.ctx != other.ctx:
            raise ValueError("context mismatch")
        out = dict(self.terms)
        for w, c in other.terms.items():
            v = out.get(w, ZERO) + c
            if v:
                out[w] = v
            elif w in out:
                del out[w]
        return Element._trusted(self.ctx, out)

    def __radd__(self, other):
        return self.__add__(other)

    def __neg__(self):
        return Element._trusted(self.ctx,
                                {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = unit(self.ctx) * other
        return self.__add__(other.__neg__())

    def __rsub__(self, other):
        return (self.__neg__()).__add__(unit(self.ctx) * other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if not c:
                return Element._trusted(self.ctx, {})
            return Element._trusted(
                self.ctx, {w: c * v for w, v in self.terms.items()})
        if self.ctx != other.ctx:
            raise ValueError("context mismatch")
        raw = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                c = c1 * c2
                for w, k in normal_form_word(w1 + w2):
                    raw[w] = raw.get(w, ZERO) + c * k
        return Element(self.ctx, raw)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.__mul__(other)
        return NotImplemented

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for w, c in self.items_sorted():
            mono = "*".join("T%d%d_%d" % (i, j, k) for (k, i, j) in w) or "1"
            bits.append("%s%s" % ("" if c == 1 and w else "%s*" % c, mono))
        return " + ".join(bits)


def zero(ctx):
    return Element._trusted(ctx, {})


def unit(ctx):
    return Element._trusted(ctx, {(): ONE})


def generator(ctx, i, j, k):
    """The element T_{i,j}^{(k)}; eliminated form in SL mode when i=j=n."""
    if not (1 <= i <= ctx.n and 1 <= j <= ctx.n):
        raise ValueError("matrix indices out of range")
    if k < 1:
        raise ValueError("mode must be at least 1")
    if k > ctx.max_degree:
        raise TruncationError("mode %d exceeds degree bound %d"
                              % (k, ctx.max_degree))
    return Element(ctx, {((k, i, j),): ONE})


def from_words(ctx, raw):
    """Element from a {word: coefficient} map (words need not be normal)."""
    exact = {}
    for word, coeff in raw.items():
        coeff = Fraction(coeff)
        if not coeff:
            continue
        for w, c in normal_form_word(tuple(word)):
            exact[w] = exact.get(w, ZERO) + coeff * c
    return Element(ctx, exact)


def normal_order(ctx, word):
    """Normal form of one word as an element.

    The input word may be arbitrary but must respect the degree bound.
    """
    word = tuple(word)
    if word_degree(word) > ctx.max_degree:
        raise TruncationError("word degree exceeds the context bound")
    return from_words(ctx, {word: ONE})


def mode_commutator(ctx, i, j, r, k, l, s):
    """[T_{ij}^{(r)}, T_{kl}^{(s)}] as an element of the context."""
    for idx in (i, j, k, l):
        if not 1 <= idx <= ctx.n:
            raise ValueError("matrix indices out of range")
    if r < 1 or s < 1:
        raise ValueError("modes must be at least 1")
    if r + s - 1 > ctx.max_degree:
        raise TruncationError("commutator degree %d exceeds bound %d"
                              % (r + s - 1, ctx.max_degree))
    return from_words(ctx, dict(commutator_words(i, j, r, k, l, s)))


def commutator(a, b):
    return a * b - b * a


def sl_reduce(el, ctx=None):
    """Image of an element in the SL quotient (T_{n,n} modes eliminated).

    The element may live in the GL twin of the target context.
    """
    target = ctx or el.ctx
    if target.mode != SL:
        raise ValueError("target context must be SL")
    if el.ctx.n != target.n:
        raise ValueError("context mismatch")
    return Element(target, dict(el.terms))


# ---------------------------------------------------------------------------
# tensor squares and cubes (componentwise products, slot-wise normal order)

def _slot_reduce(ctx, word_product):
    """Normal terms of one slot concatenation in the right quotient."""
    out = {}
    for w, c in normal_form_word(word_product):
        if ctx.mode == SL:
            for w2, c2 in _sl_word_nf(ctx.n, w):
                out[w2] = out.get(w2, 0) + c * c2
        else:
            out[w] = out.get(w, 0) + c
    return tuple((w, c) for w, c in out.items() if c)


class Tensor:
    """Linear combination of slot pairs (word, word) over a shared context.

    The product is componentwise; the total degree (sum over slots) is
    truncated by the context bound.
    """

    __slots__ = ("ctx", "arity", "terms")

    def __init__(self, ctx, arity, raw=None):
        self.ctx = ctx
        self.arity = arity
        terms = {}
        if raw:
            bound = ctx.max_degree
            for key, coeff in raw.items():
                if not coeff:
                    continue
                if sum(word_degree(w) for w in key) <= bound:
                    terms[key] = coeff
        self.terms = terms

    @classmethod
    def _trusted(cls, ctx, arity, terms):
        t = cls.__new__(cls)
        t.ctx = ctx
        t.arity = arity
        t.terms = terms
        return t

    @classmethod
    def unit(cls, ctx, arity=2):
        return cls._trusted(ctx, arity, {((),) * arity: ONE})

    @classmethod
    def zero(cls, ctx, arity=2):
        return cls._trusted(ctx, arity, {})

    @classmethod
    def of_elements(cls, *parts):
        """Outer product e_1 (x) e_2 (x) ... of elements."""
        ctx = parts[0].ctx
        arity = len(parts)
        raw = {((),) * arity: ONE}
        t = cls._trusted(ctx, arity, raw)
        for slot, el in enumerate(parts):
            t = t._slot_scale(slot, el)
        return cls(ctx, arity, t.terms)

    def _slot_scale(self, slot, el):
        if el.ctx != self.ctx:
            raise ValueError("context mismatch")
        raw = {}
        for key, c in self.terms.items():
            for w, c2 in el.terms.items():
                new = key[:slot] + (key[slot] + w,) + key[slot + 1:]
                raw[new] = raw.get(new, ZERO) + c * c2
        # slots stay normal only if the old slot was empty; renormalize
        out = {}
        for key, c in raw.items():
            parts = [_slot_reduce(self.ctx, w) for w in key]
            _expand_slotwise(self.ctx, parts, c, out)
        return Tensor._trusted(self.ctx, self.arity, out)

    def is_zero(self):
        return not self.terms

    def total_degree(self):
        return max((sum(word_degree(w) for w in key) for key in self.terms),
                   default=0)

    def items_sorted(self):
        return sorted(self.terms.items())

    def __eq__(self, other):
        return (isinstance(other, Tensor) and self.ctx == other.ctx
                and self.arity == other.arity and self.terms == other.terms)

    __hash__ = None

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Tensor.unit(self.ctx, self.arity) * other
        if self.ctx != other.ctx or self.arity != other.arity:
            raise ValueError("context mismatch")
        out = dict(self.terms)
        for k, c in other.terms.items():
            v = out.get(k, ZERO) + c
            if v:
                out[k] = v
            elif k in out:
                del out[k]
        return Tensor._trusted(self.ctx, self.arity, out)

    def __neg__(self):
        return Tensor._trusted(self.ctx, self.arity,
                               {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Tensor.unit(self.ctx, self.arity) * other
        return self.__add__(other.__neg__())

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if not c:
                return Tensor.zero(self.ctx, self.arity)
            return Tensor._trusted(self.ctx, self.arity,
                                   {k: c * v for k, v in self.terms.items()})
        if self.ctx != other.ctx or self.arity != other.arity:
            raise ValueError("context mismatch")
        out = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                parts = [_slot_reduce(self.ctx, k1[s] + k2[s])
                         for s in range(self.arity)]
                _expand_slotwise(self.ctx, parts, c1 * c2, out)
        return Tensor(self.ctx, self.arity,
                      {k: c for k, c in out.items() if c})

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.__mul__(other)
        return NotImplemented

    def flip(self):
        """Reverse the slot order."""
        return Tensor(self.ctx, self.arity,
                      {key[::-1]: c for key, c in self.terms.items()})

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for key, c in self.items_sorted():
            slot = " (x) ".join(
                "*".join("T%d%d_%d" % (i, j, k) for (k, i, j) in w) or "1"
                for w in key)
            bits.append("%s[%s]" % ("" if c == 1 else "%s*" % c, slot))
        return " + ".join(bits)


def _expand_slotwise(ctx, parts, coeff, out):
    """Accumulate the product of per-slot term tuples into out."""
    keys = [()]
    coeffs = [coeff]
    for per_slot in parts:
        new_keys, new_coeffs = [], []
        for base, c in zip(keys, coeffs):
            for w, c2 in per_slot:
                new_keys.append(base + (w,))
                new_coeffs.append(c * c2)
        keys, coeffs = new_keys, new_coeffs
    bound = ctx.max_degree
    for key, c in zip(keys, coeffs):
        if sum(word_degree(w) for w in key) > bound:
            continue
        v = out.get(key, ZERO) + c
        if v:
            out[key] = v
        elif key in out:
            del out[key]


def tensor_multiply(x, y):
    """Componentwise tensor product (normal-ordering each slot)."""
    return x * y
