"""Free associative (super)algebras over Q.

Words carry an even part (a sequence of generator letters, 1-based) and an
odd part (a sorted tuple of odd-generator indices).  Odd generators square
to zero and anticommute with each other; they commute with all even
generators, so the normal form keeps the odd part sorted on the right with
the sign absorbed into the coefficient.
"""

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction

from .linalg import SparseVector


class SignatureMismatch(ValueError):
    pass


@dataclass(frozen=True)
class AlgebraSignature:
    even_names: tuple
    odd_names: tuple = ()

    @property
    def n_even(self):
        return len(self.even_names)

    @property
    def n_odd(self):
        return len(self.odd_names)

    def __repr__(self):
        return f"<Signature even={self.even_names} odd={self.odd_names}>"


def free_algebra(m):
    """A_m: the free algebra on x1..xm."""
    return AlgebraSignature(tuple(f"x{i}" for i in range(1, m + 1)))


def theta_target(n):
    """Free algebra on e,f tensored with the exterior algebra on z0..z_{2n}."""
    return AlgebraSignature(("e", "f"), tuple(f"z{i}" for i in range(2 * n + 1)))


EMPTY_WORD = ((), ())


def word_degree(word):
    return len(word[0]) + len(word[1])


def mul_words(w1, w2):
    """Normal-form product; returns (sign, word) or None if an odd square."""
    e1, o1 = w1
    e2, o2 = w2
    if not o1 or not o2:
        return 1, (e1 + e2, o1 + o2 if o1 or o2 else ())
    merged = []
    sign = 1
    i = j = 0
    while i < len(o1) and j < len(o2):
        a, b = o1[i], o2[j]
        if a == b:
            return None
        if a < b:
            merged.append(a)
            i += 1
        else:
            # b jumps over the remaining len(o1)-i odd letters of o1
            if (len(o1) - i) % 2:
                sign = -sign
            merged.append(b)
            j += 1
    merged.extend(o1[i:])
    merged.extend(o2[j:])
    return sign, (e1 + e2, tuple(merged))


def weight_of_word(word, n):
    """sp-weight of a word in A_{2n}: letter i gives +L_i for i<=n, -L_{i-n} above."""
    w = [0] * n
    for i in word[0]:
        if i <= n:
            w[i - 1] += 1
        else:
            w[i - n - 1] -= 1
    return tuple(w)


class FreeElement:
    """Q-linear combination of normal-form words of one signature."""

    __slots__ = ("sig", "terms")

    def __init__(self, sig, terms=None):
        self.sig = sig
        self.terms = terms or {}

    @classmethod
    def from_word(cls, sig, word, coeff=1):
        c = coeff if type(coeff) is Fraction else Fraction(coeff)
        return cls(sig, {word: c} if c else {})

    @classmethod
    def generator(cls, sig, i):
        if not 1 <= i <= sig.n_even:
            raise SignatureMismatch(f"no even generator {i}")
        return cls.from_word(sig, ((i,), ()))

    @classmethod
    def odd_generator(cls, sig, i):
        if not 0 <= i < sig.n_odd:
            raise SignatureMismatch(f"no odd generator {i}")
        return cls.from_word(sig, ((), (i,)))

    @classmethod
    def one(cls, sig):
        return cls.from_word(sig, EMPTY_WORD)

    @classmethod
    def zero(cls, sig):
        return cls(sig, {})

    def is_zero(self):
        return not self.terms

    def _check(self, other):
        if self.sig != other.sig:
            raise SignatureMismatch(f"{self.sig} != {other.sig}")

    def __add__(self, other):
        self._check(other)
        terms = dict(self.terms)
        for w, c in other.terms.items():
            nc = terms.get(w, 0) + c
            if nc:
                terms[w] = nc
            else:
                terms.pop(w, None)
        return FreeElement(self.sig, terms)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return FreeElement(self.sig, {w: -c for w, c in self.terms.items()})

    def scale(self, s):
        if not s:
            return FreeElement.zero(self.sig)
        return FreeElement(self.sig, {w: c * s for w, c in self.terms.items()})

    def __rmul__(self, s):
        return self.scale(s)

    def __mul__(self, other):
        if not isinstance(other, FreeElement):
            return self.scale(other)
        self._check(other)
        terms = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                r = mul_words(w1, w2)
                if r is None:
                    continue
                sign, w = r
                nc = terms.get(w, 0) + sign * c1 * c2
                if nc:
                    terms[w] = nc
                else:
                    del terms[w]
        return FreeElement(self.sig, terms)

    def __eq__(self, other):
        return (
            isinstance(other, FreeElement)
            and self.sig == other.sig
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.sig, frozenset(self.terms.items())))

    def degree(self):
        """Total degree if homogeneous, else raises."""
        degs = {word_degree(w) for w in self.terms}
        if len(degs) > 1:
            raise ValueError(f"inhomogeneous element, degrees {sorted(degs)}")
        return degs.pop() if degs else 0

    def is_homogeneous(self):
        return len({word_degree(w) for w in self.terms}) <= 1

    def weight(self, n):
        ws = {weight_of_word(w, n) for w in self.terms}
        if len(ws) > 1:
            raise ValueError(f"mixed weights {sorted(ws)}")
        return ws.pop() if ws else None

    def to_vector(self, gslice):
        idx = gslice.index
        d = {}
        for w, c in self.terms.items():
            if w not in idx:
                raise ValueError(f"word {w} not in slice {gslice}")
            d[idx[w]] = c
        return SparseVector.from_dict(len(gslice.words), d)

    def __repr__(self):
        if not self.terms:
            return "0"
        names_e, names_o = self.sig.even_names, self.sig.odd_names
        bits = []
        for w in sorted(self.terms):
            c = self.terms[w]
            mono = "".join(names_e[i - 1] + "." for i in w[0]) + "".join(
                names_o[i] + "." for i in w[1]
            )
            bits.append(f"({c})*{mono.rstrip('.') or '1'}")
        return " + ".join(bits)


def bracket(a, b):
    return a * b - b * a


def omega_element(n):
    """(1/2) * sum_i [x_i, x_{i+n}] in A_{2n}."""
    if n < 1:
        raise ValueError("n must be >= 1")
    sig = free_algebra(2 * n)
    acc = FreeElement.zero(sig)
    half = Fraction(1, 2)
    for i in range(1, n + 1):
        xi = FreeElement.generator(sig, i)
        xin = FreeElement.generator(sig, i + n)
        acc = acc + bracket(xi, xin).scale(half)
    return acc


@dataclass(frozen=True)
class GeneratorMap:
    """Images of source generators inside a target algebra."""

    source: AlgebraSignature
    target: AlgebraSignature
    even_images: tuple  # FreeElement per even generator, 1-based offset
    odd_images: tuple = ()


def apply_hom(gmap, e):
    """Extend a generator map to the unique algebra homomorphism."""
    if e.sig != gmap.source:
        raise SignatureMismatch("element not in the map's source algebra")
    out = FreeElement.zero(gmap.target)
    one = FreeElement.one(gmap.target)
    for w, c in e.terms.items():
        acc = one
        for i in w[0]:
            if i > len(gmap.even_images):
                raise SignatureMismatch(f"no image for generator {i}")
            acc = acc * gmap.even_images[i - 1]
        for i in w[1]:
            if i >= len(gmap.odd_images):
                raise SignatureMismatch(f"no image for odd generator {i}")
            acc = acc * gmap.odd_images[i]
        out = out + acc.scale(c)
    return out


def apply_derivation(images, e):
    """Leibniz extension of generator assignments (even signatures only).

    ``images`` is a tuple of FreeElements in the same algebra, one per
    generator.
    """
    sig = e.sig
    if sig.n_odd:
        raise SignatureMismatch("derivations supported on purely even algebras")
    out = FreeElement.zero(sig)
    for w, c in e.terms.items():
        letters = w[0]
        for pos, letter in enumerate(letters):
            img = images[letter - 1]
            if img.is_zero():
                continue
            pre, post = letters[:pos], letters[pos + 1 :]
            for iw, ic in img.terms.items():
                nw = (pre + iw[0] + post, ())
                nc = out.terms.get(nw, 0) + c * ic
                if nc:
                    out.terms[nw] = nc
                else:
                    del out.terms[nw]
    return out


def partial_derivation(sig, i):
    """Images for d/dx_i: x_i -> 1, other generators -> 0."""
    return tuple(
        FreeElement.one(sig) if j == i else FreeElement.zero(sig)
        for j in range(1, sig.n_even + 1)
    )


@dataclass(frozen=True)
class GradedSlice:
    sig: AlgebraSignature
    degree: int
    weight: tuple  # or None
    words: tuple

    @property
    def index(self):
        idx = _SLICE_INDEX.get(id(self))
        if idx is None:
            idx = {w: i for i, w in enumerate(self.words)}
            _SLICE_INDEX[id(self)] = idx
        return idx

    @property
    def dim(self):
        return len(self.words)

    def element(self, vec):
        terms = {}
        for i, c in vec.items:
            terms[self.words[i]] = c
        return FreeElement(self.sig, terms)


_SLICE_INDEX = {}
_SLICE_CACHE = {}
_WORDS_BY_WEIGHT = {}


def _all_words(sig, degree):
    m = sig.n_even
    r = sig.n_odd
    out = []
    max_odd = min(degree, r)
    for k_odd in range(max_odd + 1):
        k_even = degree - k_odd
        for ev in itertools.product(range(1, m + 1), repeat=k_even):
            if k_odd == 0:
                out.append((ev, ()))
            else:
                for od in itertools.combinations(range(r), k_odd):
                    out.append((ev, od))
    return out


def words_by_weight(sig, degree):
    """Bucket the degree slice of a pure-even A_{2n} by sp-weight."""
    key = (sig, degree)
    got = _WORDS_BY_WEIGHT.get(key)
    if got is not None:
        return got
    if sig.n_odd or sig.n_even % 2:
        raise SignatureMismatch("weights need a purely even A_{2n} signature")
    n = sig.n_even // 2
    buckets = {}
    for w in _all_words(sig, degree):
        buckets.setdefault(weight_of_word(w, n), []).append(w)
    _WORDS_BY_WEIGHT[key] = buckets
    return buckets


def enumerate_slice(sig, degree, weight=None):
    """Deterministic word basis of one graded slice (optionally one weight)."""
    if degree < 0:
        raise ValueError("degree must be >= 0")
    key = (sig, degree, weight)
    got = _SLICE_CACHE.get(key)
    if got is not None:
        return got
    if weight is None:
        words = tuple(_all_words(sig, degree))
    else:
        words = tuple(words_by_weight(sig, degree).get(tuple(weight), ()))
    gs = GradedSlice(sig, degree, weight, words)
    _SLICE_CACHE[key] = gs
    return gs


def weights_of_degree(sig, degree):
    return sorted(words_by_weight(sig, degree).keys())


def element_to_json(e):
    data = {
        "signature": {
            "even": list(e.sig.even_names),
            "odd": list(e.sig.odd_names),
        },
        "terms": [
            [str(c), list(w[0]), list(w[1])]
            for w, c in sorted(e.terms.items())
        ],
    }
    return json.dumps(data, sort_keys=True)


def element_from_json(s):
    data = json.loads(s)
    sig = AlgebraSignature(
        tuple(data["signature"]["even"]), tuple(data["signature"]["odd"])
    )
    terms = {}
    for coeff, ev, od in data["terms"]:
        terms[(tuple(ev), tuple(od))] = Fraction(coeff)
    return FreeElement(sig, terms)
