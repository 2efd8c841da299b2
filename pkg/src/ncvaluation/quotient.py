"""Arithmetic in A = R<X>/<G> on the basis of normal words."""

from __future__ import annotations

from typing import Dict, Optional

from .free_algebra import Poly, Word
from .groebner import MonicSet, NotGroebnerError, is_groebner


class QuotientAlgebra:
    """R<X>/<G> for a verified monic Groebner basis ``G``.

    Normal forms of words are memoized; the cache is a pure function of the
    basis, so instances may be shared freely.
    """

    def __init__(self, basis: MonicSet, *, verify: bool = True):
        if verify and basis.verified is not True:
            report = is_groebner(basis)
            if not report.passed:
                raise NotGroebnerError(
                    f"G is not a Groebner basis: {len(report.failures)} overlap(s) do not reduce to 0"
                )
        self.basis = basis
        self.ring = basis.ring
        self.order = basis.order
        self.automaton = basis.automaton
        self._nf: Dict[Word, Dict[Word, object]] = {}

    @property
    def alphabet(self):
        return self.order.alphabet

    def __repr__(self):
        return f"QuotientAlgebra({self.ring.tag}<{', '.join(self.alphabet.names)}>/{list(map(str, self.basis))})"

    def _word_nf(self, w: Word) -> Dict[Word, object]:
        hit = self._nf.get(w)
        if hit is not None:
            return hit
        found = self.automaton.first_divisor(w)
        if found is None:
            out = {w: self.ring.one}
        else:
            idx, start = found
            left = w[:start]
            right = w[start + len(self.basis.leading_monomials[idx]) :]
            ring = self.ring
            acc: Dict[Word, object] = {}
            for tw, tc in self.basis.tails[idx]:
                c = ring.neg(tc)
                for nw, nc in self._word_nf(left + tw + right).items():
                    v = ring.add(acc.get(nw, ring.zero), ring.mul(c, nc))
                    if v == 0:
                        acc.pop(nw, None)
                    else:
                        acc[nw] = v
            out = acc
        self._nf[w] = out
        return out

    def _reduce_terms(self, items) -> Dict[Word, object]:
        ring = self.ring
        acc: Dict[Word, object] = {}
        for w, c in items:
            for nw, nc in self._word_nf(w).items():
                v = ring.add(acc.get(nw, ring.zero), ring.mul(c, nc))
                if v == 0:
                    acc.pop(nw, None)
                else:
                    acc[nw] = v
        return acc

    # constructors
    def project(self, f: Poly) -> "QuotientElement":
        if f.ring != self.ring:
            raise ValueError(f"polynomial over {f.ring.tag}, algebra over {self.ring.tag}")
        return QuotientElement(self, self._reduce_terms(f._coeffs.items()))

    def element(self, data) -> "QuotientElement":
        """From a Poly, an expression string, a ``{word: coeff}`` dict or a scalar."""
        if isinstance(data, QuotientElement):
            return data
        if isinstance(data, Poly):
            return self.project(data)
        if isinstance(data, str):
            from .expr import parse_poly

            return self.project(parse_poly(data, self.order, self.ring))
        if isinstance(data, dict):
            return self.project(Poly(self.ring, self.order, data))
        return self.project(Poly(self.ring, self.order, [((), data)]))

    __call__ = element

    def zero(self):
        return QuotientElement(self, {})

    def one(self):
        return QuotientElement(self, {(): self.ring.one})

    def gen(self, name: str):
        return self.project(Poly.monomial(self.ring, self.order, (self.alphabet.index(name),)))

    def word(self, word: Word, coeff=1):
        return self.project(Poly.monomial(self.ring, self.order, tuple(word), coeff))

    # arithmetic
    def qadd(self, a, b):
        ring = self.ring
        d = dict(a.terms)
        for w, c in b.terms.items():
            v = ring.add(d.get(w, ring.zero), c)
            if v == 0:
                d.pop(w, None)
            else:
                d[w] = v
        return QuotientElement(self, d)

    def qscale(self, scalar, a):
        ring = self.ring
        s = ring.convert(scalar)
        if s == 0:
            return self.zero()
        return QuotientElement(self, {w: ring.mul(s, c) for w, c in a.terms.items()})

    def qmul(self, a, b):
        ring = self.ring
        products = ((u + v, ring.mul(x, y)) for u, x in a.terms.items() for v, y in b.terms.items())
        return QuotientElement(self, self._reduce_terms(products))


class QuotientElement:
    """Immutable element of a :class:`QuotientAlgebra` in canonical form."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: QuotientAlgebra, terms: Dict[Word, object]):
        self.algebra = algebra
        self.terms = terms

    def _same(self, other):
        if not isinstance(other, QuotientElement):
            return False
        if other.algebra is not self.algebra:
            raise ValueError("elements of different quotient algebras")
        return True

    def __add__(self, other):
        if not self._same(other):
            return NotImplemented
        return self.algebra.qadd(self, other)

    def __neg__(self):
        return self.algebra.qscale(-1, self)

    def __sub__(self, other):
        if not self._same(other):
            return NotImplemented
        return self.algebra.qadd(self, -other)

    def __mul__(self, other):
        if isinstance(other, QuotientElement):
            self._same(other)
            return self.algebra.qmul(self, other)
        return self.algebra.qscale(other, self)

    def __rmul__(self, scalar):
        return self.algebra.qscale(scalar, self)

    def __eq__(self, other):
        if isinstance(other, QuotientElement):
            return self.algebra is other.algebra and self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, word: Word, default: Optional[object] = None):
        return self.terms.get(tuple(word), self.algebra.ring.zero if default is None else default)

    def to_poly(self) -> Poly:
        return Poly(self.algebra.ring, self.algebra.order, dict(self.terms), _trusted=True)

    def __str__(self):
        return str(self.to_poly())

    def __repr__(self):
        return f"QuotientElement({self})"


def qadd(a: QuotientElement, b: QuotientElement) -> QuotientElement:
    return a.algebra.qadd(a, b)


def qscale(scalar, a: QuotientElement) -> QuotientElement:
    return a.algebra.qscale(scalar, a)


def qmul(a: QuotientElement, b: QuotientElement) -> QuotientElement:
    return a.algebra.qmul(a, b)
