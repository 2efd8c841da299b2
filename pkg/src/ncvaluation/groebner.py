"""Division by monic sets, overlap elements, the overlap criterion for
Groebner bases, bounded completion over a field, and normal words.
"""

from __future__ import annotations

import heapq
import logging
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .automaton import NormalWordAutomaton
from .coefficients import (
    QQ,
    CoefficientRing,
    LocalRing,
    NotIntegralError,
    OutsideRingError,
    PrimeField,
    ValuedRationalConfig,
)
from .free_algebra import MonomialOrder, Poly, Word

logger = logging.getLogger(__name__)


class NotMonicError(ValueError):
    """A generator's leading coefficient is not invertible in the ring."""


class NotGroebnerError(ValueError):
    pass


############################################################################
# monic sets
############################################################################
class MonicSet(Sequence):
    """A finite monic subset G of R<X> under a fixed monomial order.

    Leading coefficients that are units are divided out; zero elements are
    dropped.  With ``lm_reduce`` (the default) any g_j whose leading monomial
    is divisible by that of another element is discarded, keeping the lowest
    index among equal leading monomials.  Discards are logged and kept in
    :attr:`discarded`.
    """

    def __init__(self, polys, *, ring: Optional[CoefficientRing] = None, order: Optional[MonomialOrder] = None, lm_reduce: bool = True):
        polys = list(polys)
        if polys:
            ring = ring or polys[0].ring
            order = order or polys[0].order
        if ring is None or order is None:
            raise ValueError("an empty MonicSet needs an explicit ring and order")
        self.ring = ring
        self.order = order
        self.discarded: List[Tuple[Poly, str]] = []

        elements = []
        for g in polys:
            if g.ring != ring or g.order != order:
                raise ValueError("all elements must share one ring and order")
            if g.is_zero():
                self._discard(g, "zero element")
                continue
            if g.lm == ():
                raise ValueError(f"leading monomial of {g} is 1; the quotient would be trivial")
            if g.lc != 1:
                if not ring.is_unit(g.lc):
                    raise NotMonicError(
                        f"leading coefficient {ring.format(g.lc)} of {g} is not invertible in {ring.tag}"
                    )
                g = g.monic()
            elements.append(g)

        if lm_reduce:
            lms = [g.lm for g in elements]
            kept = []
            for j, g in enumerate(elements):
                culprit = None
                for i, lm in enumerate(lms):
                    if i == j:
                        continue
                    if lm == lms[j] and i > j:
                        continue
                    if _is_factor(lm, lms[j]):
                        culprit = i
                        break
                if culprit is None:
                    kept.append(g)
                else:
                    self._discard(g, f"leading monomial divisible by that of element {culprit}")
            elements = kept
            if self.discarded:
                probe = MonicSet(elements, ring=ring, order=order, lm_reduce=False)
                for g, _ in self.discarded:
                    if g and normal_form(g, probe):
                        logger.warning("discarded %s does not reduce to 0; the ideal has changed", g)

        self.elements: Tuple[Poly, ...] = tuple(elements)
        self.tails = tuple(g.terms[1:] for g in self.elements)
        self._automaton = None
        self.verified: Optional[bool] = None

    def _discard(self, g, reason):
        logger.info("discarding %s: %s", g, reason)
        self.discarded.append((g, reason))

    def __getitem__(self, i):
        return self.elements[i]

    def __len__(self):
        return len(self.elements)

    def __repr__(self):
        return "MonicSet([" + ", ".join(str(g) for g in self.elements) + "])"

    @property
    def leading_monomials(self) -> Tuple[Word, ...]:
        return tuple(g.lm for g in self.elements)

    @property
    def automaton(self) -> NormalWordAutomaton:
        if self._automaton is None:
            alphabet = self.order.alphabet
            self._automaton = NormalWordAutomaton(self.leading_monomials, alphabet.n, alphabet.weights)
        return self._automaton

    def is_lm_reduced(self) -> bool:
        lms = self.leading_monomials
        return not any(i != j and _is_factor(a, b) for i, a in enumerate(lms) for j, b in enumerate(lms))

    def change_ring(self, ring: CoefficientRing, fn=None) -> "MonicSet":
        return MonicSet([g.map_coefficients(ring, fn) for g in self.elements], ring=ring, order=self.order)


def _is_factor(v: Word, u: Word) -> bool:
    lv = len(v)
    return any(u[i : i + lv] == v for i in range(len(u) - lv + 1))


############################################################################
# division
############################################################################
@dataclass
class DivisionResult:
    """``f = sum(c * left * G[i] * right) + remainder``."""

    quotients: List[Tuple[object, Word, int, Word]]
    remainder: Poly
    trace: List[Tuple[Word, int, int]] = field(default_factory=list)

    def reconstruct(self, G: MonicSet) -> Poly:
        total = self.remainder
        for c, left, i, right in self.quotients:
            total = total + G[i].lrmul(left, right).scale(c)
        return total


def _reduce(f: Poly, G: MonicSet, record: bool):
    ring = G.ring
    if f.ring != ring:
        raise ValueError(f"polynomial over {f.ring.tag} divided by a set over {ring.tag}")
    heap_key = G.order.heap_key
    auto = G.automaton
    lms, tails = G.leading_monomials, G.tails
    sub, mul = ring.sub, ring.mul

    work = dict(f._coeffs)
    heap = [(heap_key(w), w) for w in work]
    heapq.heapify(heap)
    queued = set(work)
    rem = {}
    quotients = [] if record else None
    trace = [] if record else None

    while heap:
        _, w = heapq.heappop(heap)
        queued.discard(w)
        c = work.pop(w, None)
        if c is None:
            continue
        hit = auto.first_divisor(w)
        if hit is None:
            rem[w] = c
            continue
        idx, start = hit
        left, right = w[:start], w[start + len(lms[idx]) :]
        if record:
            quotients.append((c, left, idx, right))
            trace.append((w, idx, start))
        for tw, tc in tails[idx]:
            nw = left + tw + right
            old = work.get(nw)
            nc = sub(old if old is not None else ring.zero, mul(c, tc))
            if nc == 0:
                if old is not None:
                    del work[nw]
            else:
                work[nw] = nc
                if nw not in queued:
                    queued.add(nw)
                    heapq.heappush(heap, (heap_key(nw), nw))
    remainder = Poly(ring, G.order, rem, _trusted=True)
    return quotients, remainder, trace


def divide(f: Poly, G: MonicSet) -> DivisionResult:
    """Divide ``f`` by ``G``.

    Always rewrites the largest reducible monomial; among generators whose
    leading monomial divides it the lowest index wins, and among occurrences
    the leftmost.
    """
    quotients, remainder, trace = _reduce(f, G, True)
    return DivisionResult(quotients, remainder, trace)


def normal_form(f: Poly, G: MonicSet) -> Poly:
    return _reduce(f, G, False)[1]


############################################################################
# overlaps and the termination criterion
############################################################################
@dataclass(frozen=True)
class OverlapElement:
    """``G[i] * u - v * G[j]`` where ``LM(G[i]) u = v LM(G[j])``."""

    i: int
    j: int
    u: Word
    v: Word
    value: Poly
    superposition: Word


def overlaps(G: MonicSet) -> List[OverlapElement]:
    """All proper suffix/prefix superpositions of leading monomials, ``i == j`` included."""
    out = []
    lms = G.leading_monomials
    for i, a in enumerate(lms):
        for j, b in enumerate(lms):
            for k in range(1, min(len(a), len(b))):
                if a[len(a) - k :] != b[:k]:
                    continue
                u, v = b[k:], a[: len(a) - k]
                value = G[i].lrmul((), u) - G[j].lrmul(v, ())
                out.append(OverlapElement(i, j, u, v, value, a + u))
    out.sort(key=lambda o: (o.i, o.j, len(o.u)))
    return out


@dataclass
class GroebnerReport:
    passed: bool
    n_overlaps: int
    failures: List[Tuple[OverlapElement, Poly]]

    def to_dict(self):
        fmt = None
        if self.failures:
            fmt = self.failures[0][0].value.order.alphabet.format_word
        return {
            "groebner": self.passed,
            "overlaps": self.n_overlaps,
            "failures": [
                {
                    "i": o.i,
                    "j": o.j,
                    "u": fmt(o.u),
                    "v": fmt(o.v),
                    "superposition": fmt(o.superposition),
                    "overlap": str(o.value),
                    "remainder": str(r),
                }
                for o, r in self.failures
            ],
        }


def is_groebner(G: MonicSet) -> GroebnerReport:
    """Check that every overlap element of ``G`` reduces to zero."""
    if not G.is_lm_reduced():
        raise ValueError("the overlap criterion needs an LM-reduced monic set")
    obs = overlaps(G)
    failures = []
    for o in obs:
        r = normal_form(o.value, G)
        if r:
            failures.append((o, r))
    G.verified = not failures
    return GroebnerReport(not failures, len(obs), failures)


def is_member(f: Poly, G: MonicSet) -> bool:
    if G.verified is None:
        warnings.warn("Groebner property of G not verified; membership may be a false negative", stacklevel=2)
    elif G.verified is False:
        warnings.warn("G is not a Groebner basis; membership may be a false negative", stacklevel=2)
    return normal_form(f, G).is_zero()


############################################################################
# bounded completion
############################################################################
@dataclass
class CompletionResult:
    basis: MonicSet
    complete: bool
    rounds: int
    added: int


def interreduce(polys: List[Poly], ring, order) -> List[Poly]:
    """Replace each element by its normal form modulo the others until stable."""
    polys = [g.monic() for g in polys if g]
    changed = True
    while changed:
        changed = False
        polys.sort(key=lambda g: order.key(g.lm))
        for idx, g in enumerate(polys):
            others = polys[:idx] + polys[idx + 1 :]
            if not others:
                continue
            r = normal_form(g, MonicSet(others, ring=ring, order=order, lm_reduce=False))
            if r == g:
                continue
            if r:
                polys[idx] = r.monic()
            else:
                del polys[idx]
            changed = True
            break
    return polys


def complete(G0: MonicSet, max_deg: int) -> CompletionResult:
    """Adjoin overlap remainders of degree <= ``max_deg`` until none remain.

    ``complete`` is True iff every overlap of the returned basis reduces to
    zero; otherwise the basis is a truncation, still monic and LM-reduced.
    """
    ring, order = G0.ring, G0.order
    if not ring.is_field:
        raise ValueError(
            f"completion needs a coefficient field; over {ring.tag} an overlap remainder "
            "may have a non-invertible leading coefficient and cannot be made monic"
        )
    deg = order.alphabet.degree
    top = max((deg(g.lm) for g in G0), default=0)
    if max_deg < top:
        raise ValueError(f"max_deg={max_deg} is below the largest degree {top} in the input")

    basis = interreduce(list(G0.elements), ring, order)
    rounds = added = 0
    while True:
        rounds += 1
        G = MonicSet(basis, ring=ring, order=order)
        pending = []
        for o in overlaps(G):
            r = normal_form(o.value, G)
            if r:
                pending.append((order.key(o.superposition), o.i, o.j, len(o.u), r))
        pending.sort(key=lambda t: t[:4])
        new = []
        for *_, r in pending:
            if r.degree() > max_deg:
                continue
            if new:
                r = normal_form(r, MonicSet(list(G) + new, ring=ring, order=order, lm_reduce=False))
            if r and r.degree() <= max_deg:
                new.append(r.monic())
        if not new:
            G.verified = not pending
            return CompletionResult(G, not pending, rounds, added)
        added += len(new)
        logger.debug("completion round %d adds %d element(s)", rounds, len(new))
        basis = interreduce(basis + new, ring, order)


############################################################################
# normal words
############################################################################
def normal_words(G: MonicSet, max_deg: int) -> List[List[Word]]:
    return G.automaton.normal_words(max_deg)


def normal_word_counts(G: MonicSet, max_deg: int) -> List[int]:
    return G.automaton.counts(max_deg)


############################################################################
# base change
############################################################################
@dataclass
class BaseChangeReport:
    p: int
    over_Q: bool
    over_Ov: bool
    over_Fp: bool
    ov_violation: Optional[str] = None

    @property
    def agree(self) -> bool:
        return self.over_Q == self.over_Ov

    @property
    def agree_all(self) -> bool:
        return self.over_Q == self.over_Ov == self.over_Fp

    def to_dict(self):
        return {
            "p": self.p,
            "groebner_over_Q": self.over_Q,
            "groebner_over_Ov": self.over_Ov,
            "groebner_over_Fp": self.over_Fp,
            "ov_violation": self.ov_violation,
            "agree": self.agree,
        }


def check_base_change(G: MonicSet, p: int) -> BaseChangeReport:
    """Compare the overlap criterion over Q, inside Z_(p), and over F_p."""
    config = ValuedRationalConfig(p)
    for g in G:
        for w, c in g.terms:
            if not config.in_Ov(Fraction(c)):
                raise NotIntegralError(f"coefficient {G.ring.format(c)} of {g} is not in O_v (p={p})")
    GQ = G.change_ring(QQ, Fraction)
    over_q = is_groebner(GQ).passed

    violation = None
    try:
        over_ov = is_groebner(G.change_ring(LocalRing(p), Fraction)).passed
    except OutsideRingError as exc:
        over_ov, violation = False, str(exc)

    fp = PrimeField(p)
    over_fp = is_groebner(GQ.change_ring(fp, config.residue)).passed
    return BaseChangeReport(p, over_q, over_ov, over_fp, violation)
