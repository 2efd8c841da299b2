"""Words, graded monomial orders and polynomials in the free algebra R<X>.

Words are tuples of generator indices; the empty tuple is the identity.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterable, Optional, Sequence, Tuple

from .coefficients import QQ, CoefficientRing

Word = Tuple[int, ...]

LT, EQ, GT = -1, 0, 1

_NAME_CHARS = set("abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789_")


def _valid_name(name: str) -> bool:
    return bool(name) and name[0].isascii() and name[0].isalpha() and set(name) <= _NAME_CHARS


@dataclass(frozen=True)
class Alphabet:
    names: Tuple[str, ...]
    weights: Optional[Tuple[int, ...]] = None

    def __post_init__(self):
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        if not names:
            raise ValueError("an alphabet needs at least one generator")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate generator names in {names}")
        for name in names:
            if not _valid_name(name):
                raise ValueError(f"invalid generator name {name!r}")
        weights = tuple(self.weights) if self.weights is not None else (1,) * len(names)
        if len(weights) != len(names):
            raise ValueError("one weight per generator is required")
        if any(not isinstance(w, int) or w < 1 for w in weights):
            raise ValueError(f"weights must be positive integers, got {weights}")
        object.__setattr__(self, "weights", weights)

    @property
    def n(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"unknown generator {name!r}") from None

    def degree(self, word: Word) -> int:
        w = self.weights
        return sum(w[i] for i in word)

    def word(self, text: str) -> Word:
        """``"X*Y*X"`` -> ``(0, 1, 0)``; ``"1"`` is the empty word."""
        text = text.strip()
        if text in ("", "1"):
            return ()
        return tuple(self.index(part.strip()) for part in text.split("*"))

    def format_word(self, word: Word) -> str:
        if not word:
            return "1"
        return "*".join(self.names[i] for i in word)


def divides(v: Word, u: Word) -> Optional[Tuple[Word, Word]]:
    """Leftmost factorization ``u = left + v + right``, or None."""
    lv, lu = len(v), len(u)
    for i in range(lu - lv + 1):
        if u[i : i + lv] == v:
            return u[:i], u[i + lv :]
    return None


class MonomialOrder:
    """Weighted deglex or degrevlex order on words.

    ``ranking`` lists generator indices from smallest to largest; by default
    generators rank in alphabet order.  Ties in weighted degree are broken
    lexicographically from the left (deglex) or, for degrevlex, from the
    right with the larger letter making the word smaller.
    """

    KINDS = ("deglex", "degrevlex")

    def __init__(self, alphabet: Alphabet, kind: str = "deglex", ranking: Optional[Sequence[int]] = None):
        if kind not in self.KINDS:
            raise ValueError(f"unknown monomial order {kind!r}; expected one of {self.KINDS}")
        if ranking is None:
            ranking = range(alphabet.n)
        ranking = tuple(ranking)
        if sorted(ranking) != list(range(alphabet.n)):
            raise ValueError(f"ranking {ranking} is not a permutation of the generators")
        self.alphabet = alphabet
        self.kind = kind
        self.ranking = ranking
        rank = [0] * alphabet.n
        for r, i in enumerate(ranking):
            rank[i] = r
        self._rank = tuple(rank)
        self._keys: Dict[Word, tuple] = {}

    def __eq__(self, other):
        return (
            isinstance(other, MonomialOrder)
            and other.alphabet == self.alphabet
            and other.kind == self.kind
            and other.ranking == self.ranking
        )

    def __hash__(self):
        return hash((self.alphabet, self.kind, self.ranking))

    def __repr__(self):
        chain = " < ".join(self.alphabet.names[i] for i in self.ranking)
        return f"MonomialOrder({self.kind}: {chain})"

    def key(self, word: Word) -> tuple:
        """Sort key: ``key(u) < key(v)`` iff ``u`` precedes ``v``."""
        k = self._keys.get(word)
        if k is None:
            rank = self._rank
            deg = self.alphabet.degree(word)
            if self.kind == "deglex":
                k = (deg,) + tuple(rank[i] for i in word)
            else:
                k = (deg,) + tuple(-rank[i] for i in reversed(word))
            self._keys[word] = k
        return k

    def heap_key(self, word: Word) -> tuple:
        # Negated key: distinct words of equal degree never have keys in a
        # prefix relation (weights are positive), so negation reverses the order.
        return tuple(-x for x in self.key(word))

    def compare(self, u: Word, v: Word) -> int:
        ku, kv = self.key(u), self.key(v)
        if ku == kv:
            return EQ
        return LT if ku < kv else GT

    def sorted(self, words: Iterable[Word], descending: bool = False):
        return sorted(words, key=self.key, reverse=descending)


class Poly:
    """Element of R<X>; immutable.

    Terms are held in a dict ``word -> coefficient`` with no zero entries;
    :attr:`terms` materializes them sorted strictly descending.
    """

    __slots__ = ("ring", "order", "_coeffs", "_sorted")

    def __init__(self, ring: CoefficientRing, order: MonomialOrder, coeffs=None, *, _trusted=False):
        self.ring = ring
        self.order = order
        if _trusted:
            self._coeffs = coeffs
        else:
            d: Dict[Word, object] = {}
            items = coeffs.items() if isinstance(coeffs, dict) else (coeffs or ())
            add, conv = ring.add, ring.convert
            for w, c in items:
                w = tuple(w)
                c = conv(c)
                d[w] = add(d[w], c) if w in d else c
            self._coeffs = {w: c for w, c in d.items() if c != 0}
        self._sorted = None

    # construction helpers
    @classmethod
    def zero(cls, ring, order):
        return cls(ring, order, {}, _trusted=True)

    @classmethod
    def monomial(cls, ring, order, word: Word, coeff=1):
        return cls(ring, order, [(word, coeff)])

    def _new(self, coeffs):
        return Poly(self.ring, self.order, coeffs, _trusted=True)

    # inspection
    @property
    def coeffs(self) -> Dict[Word, object]:
        return dict(self._coeffs)

    @property
    def terms(self):
        if self._sorted is None:
            key = self.order.key
            self._sorted = tuple(sorted(self._coeffs.items(), key=lambda t: key(t[0]), reverse=True))
        return self._sorted

    def words(self):
        return self._coeffs.keys()

    def coeff(self, word: Word):
        return self._coeffs.get(tuple(word), self.ring.zero)

    def is_zero(self) -> bool:
        return not self._coeffs

    def __bool__(self):
        return bool(self._coeffs)

    def __len__(self):
        return len(self._coeffs)

    @property
    def lm(self) -> Word:
        if not self._coeffs:
            raise ValueError("the zero polynomial has no leading monomial")
        if self._sorted is not None:
            return self._sorted[0][0]
        return max(self._coeffs, key=self.order.key)

    @property
    def lc(self):
        return self._coeffs[self.lm]

    def degree(self) -> int:
        if not self._coeffs:
            return -1
        deg = self.order.alphabet.degree
        return max(deg(w) for w in self._coeffs)

    # arithmetic
    def _check(self, other):
        if self.ring != other.ring or self.order != other.order:
            raise ValueError("polynomials over different rings or orders")

    def __add__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        self._check(other)
        d = dict(self._coeffs)
        add = self.ring.add
        for w, c in other._coeffs.items():
            if w in d:
                s = add(d[w], c)
                if s == 0:
                    del d[w]
                else:
                    d[w] = s
            else:
                d[w] = c
        return self._new(d)

    def __neg__(self):
        neg = self.ring.neg
        return self._new({w: neg(c) for w, c in self._coeffs.items()})

    def __sub__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def scale(self, scalar):
        scalar = self.ring.convert(scalar)
        if scalar == 0:
            return self._new({})
        mul = self.ring.mul
        return self._new({w: mul(scalar, c) for w, c in self._coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, Poly):
            self._check(other)
            d: Dict[Word, object] = {}
            add, mul = self.ring.add, self.ring.mul
            for u, a in self._coeffs.items():
                for v, b in other._coeffs.items():
                    w = u + v
                    c = mul(a, b)
                    d[w] = add(d[w], c) if w in d else c
            return self._new({w: c for w, c in d.items() if c != 0})
        return self.scale(other)

    def __rmul__(self, scalar):
        return self.scale(scalar)

    def lrmul(self, left: Word = (), right: Word = ()):
        """``left * self * right`` for words ``left`` and ``right``."""
        return self._new({left + w + right: c for w, c in self._coeffs.items()})

    def monic(self):
        """Divide through by an invertible leading coefficient."""
        lc = self.lc
        if lc == 1:
            return self
        return self.scale(self.ring.inv(lc))

    def map_coefficients(self, ring: CoefficientRing, fn=None, order: Optional[MonomialOrder] = None):
        """Push the coefficients into ``ring`` (through ``fn`` if given)."""
        fn = fn or ring.convert
        return Poly(ring, order or self.order, [(w, fn(c)) for w, c in self._coeffs.items()])

    # comparison
    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.ring == other.ring and self._coeffs == other._coeffs
        if other == 0:
            return not self._coeffs
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._coeffs.items()))

    def __str__(self):
        from .expr import format_poly

        return format_poly(self)

    def __repr__(self):
        return f"Poly({self})"


def poly_add(f: Poly, g: Poly) -> Poly:
    return f + g


def poly_mul(f: Poly, g: Poly) -> Poly:
    return f * g


def scalar_mul(c, f: Poly) -> Poly:
    return f.scale(c)


@dataclass
class FreeAlgebra:
    """Convenience bundle of a ring, an alphabet and an order."""

    ring: CoefficientRing
    order: MonomialOrder
    _gens: Dict[str, Poly] = field(default_factory=dict, repr=False)

    @classmethod
    def create(cls, names, ring: CoefficientRing = QQ, kind: str = "deglex", weights=None, ranking=None):
        if isinstance(names, str):
            names = names.replace(",", " ").split()
        alphabet = Alphabet(tuple(names), tuple(weights) if weights else None)
        return cls(ring, MonomialOrder(alphabet, kind, ranking))

    @property
    def alphabet(self) -> Alphabet:
        return self.order.alphabet

    def gen(self, name: str) -> Poly:
        if name not in self._gens:
            self._gens[name] = Poly.monomial(self.ring, self.order, (self.alphabet.index(name),))
        return self._gens[name]

    def gens(self):
        return tuple(self.gen(name) for name in self.alphabet.names)

    def zero(self) -> Poly:
        return Poly.zero(self.ring, self.order)

    def one(self) -> Poly:
        return Poly.monomial(self.ring, self.order, ())

    def scalar(self, c) -> Poly:
        return Poly.monomial(self.ring, self.order, (), c)

    def word(self, word: Word, coeff=1) -> Poly:
        return Poly.monomial(self.ring, self.order, tuple(word), coeff)

    def __call__(self, data) -> Poly:
        if isinstance(data, Poly):
            return data
        if isinstance(data, str):
            from .expr import parse_poly

            return parse_poly(data, self.order, self.ring)
        if isinstance(data, dict):
            return Poly(self.ring, self.order, data)
        return self.scalar(data)
