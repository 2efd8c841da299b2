"""Extension of the p-adic valuation of Q to A = Q<X>/<G>.

For a monic Groebner basis G with coefficients in Z_(p), every element of
A has a unique expansion ``a = sum c_i w_i`` over normal words, and the
induced filtration gives ``v(a) = min_i v_p(c_i)``.  This is a valuation
exactly when the residue algebra F_p<X>/<G mod p> is a domain; the checks
here probe that hypothesis and report concrete evidence when it fails.
"""

from __future__ import annotations

import random
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Tuple

from .coefficients import (
    INFINITY,
    NEG_INFINITY,
    LocalRing,
    OutsideRingError,
    PrimeField,
    QQ,
    ValuedRationalConfig,
    format_rational,
    valuation_to_json,
)
from .free_algebra import Poly, Word
from .groebner import MonicSet, divide, is_groebner, overlaps
from .quotient import QuotientAlgebra, QuotientElement


class HypothesisError(ValueError):
    """A hypothesis needed to extend the valuation does not hold."""


@dataclass
class FiltrationReport:
    element: QuotientElement
    degree: object
    valuation: object
    witness: Optional[Tuple[Word, Fraction]] = None

    def to_dict(self):
        fmt = self.element.algebra.alphabet.format_word
        return {
            "element": str(self.element),
            "degree": valuation_to_json(self.degree),
            "valuation": valuation_to_json(self.valuation),
            "witness": None
            if self.witness is None
            else {"word": fmt(self.witness[0]), "coefficient": format_rational(self.witness[1])},
        }


@dataclass
class AxiomViolation:
    axiom: str
    a: QuotientElement
    b: QuotientElement
    lhs: object
    rhs: object

    def to_dict(self):
        return {
            "axiom": self.axiom,
            "a": str(self.a),
            "b": str(self.b),
            "lhs": valuation_to_json(self.lhs),
            "rhs": valuation_to_json(self.rhs),
        }


@dataclass
class AxiomsReport:
    p: int
    seed: int
    samples: int
    max_deg: int
    v2_violations: int = 0
    v3_violations: int = 0
    witnesses: List[AxiomViolation] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.v2_violations == 0 and self.v3_violations == 0

    def to_dict(self):
        return {
            "p": self.p,
            "seed": self.seed,
            "samples": self.samples,
            "max_deg": self.max_deg,
            "passed": self.passed,
            "v2_violations": self.v2_violations,
            "v3_violations": self.v3_violations,
            "witnesses": [w.to_dict() for w in self.witnesses],
        }


@dataclass
class ScalingReport:
    element: QuotientElement
    valuation: int
    times_p: int
    over_p: int

    @property
    def passed(self) -> bool:
        return self.times_p == self.valuation + 1 and self.over_p == self.valuation - 1

    def to_dict(self):
        return {
            "element": str(self.element),
            "valuation": self.valuation,
            "valuation_times_p": self.times_p,
            "valuation_over_p": self.over_p,
            "passed": self.passed,
        }


@dataclass
class GoodReductionReport:
    p: int
    seed: int
    samples: int
    kinds: dict
    failures: List[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self):
        return {
            "p": self.p,
            "seed": self.seed,
            "samples": self.samples,
            "passed": self.passed,
            "constructions": dict(sorted(self.kinds.items())),
            "failures": self.failures,
        }


@dataclass
class ResidueAlgebra:
    """F_p<X>/<G mod p> together with its verification status."""

    p: int
    basis: MonicSet
    groebner: bool
    algebra: Optional[QuotientAlgebra]

    def to_dict(self):
        return {
            "p": self.p,
            "relations": [str(g) for g in self.basis],
            "groebner": self.groebner,
        }


@dataclass
class ZeroDivisorReport:
    max_deg: int
    checked: int
    witness: Optional[Tuple[QuotientElement, QuotientElement]] = None

    @property
    def message(self) -> str:
        if self.witness is None:
            return f"no zero divisors found up to degree {self.max_deg}"
        a, b = self.witness
        return f"zero divisor pair: ({a}) * ({b}) = 0"

    def to_dict(self):
        return {
            "max_deg": self.max_deg,
            "pairs_checked": self.checked,
            "witness": None if self.witness is None else [str(self.witness[0]), str(self.witness[1])],
            "message": self.message,
        }


class ValuedAlgebra:
    """A verified quotient algebra over Q together with the prime ``p``."""

    def __init__(self, algebra: QuotientAlgebra, p):
        config = p if isinstance(p, ValuedRationalConfig) else ValuedRationalConfig(p)
        if algebra.ring != QQ:
            raise ValueError(f"the valued algebra must be over Q, not {algebra.ring.tag}")
        self.algebra = algebra
        self.config = config
        self.p = config.p
        coeffs = [c for g in algebra.basis for _, c in g.terms]
        self.g_integral = all(config.in_Ov(c) for c in coeffs)
        if not self.g_integral:
            raise HypothesisError(f"G ⊄ O_v⟨X⟩ for p = {self.p}: some coefficient has p in its denominator")
        self.g_not_in_mv = any(not config.in_mv(c) for c in coeffs)
        self.axioms_passed: Optional[bool] = None
        self._residue: Optional[ResidueAlgebra] = None

    # the filtration and the valuation
    def valuation(self, a: QuotientElement):
        v = self.config.v
        if not a.terms:
            return INFINITY
        return min(v(c) for c in a.terms.values())

    def degree(self, a: QuotientElement):
        if not a.terms:
            return NEG_INFINITY
        return -self.valuation(a)

    def extended_valuation(self, a: QuotientElement) -> FiltrationReport:
        if not a.terms:
            return FiltrationReport(a, NEG_INFINITY, INFINITY, None)
        v = self.config.v
        best = None
        for w, c in a.to_poly().terms:
            val = v(c)
            if best is None or val < best[0]:
                best = (val, w, c)
        return FiltrationReport(a, -best[0], best[0], (best[1], best[2]))

    def in_lattice(self, a: QuotientElement) -> bool:
        """Membership in the O_v-lattice spanned by normal words (filtration level 0)."""
        return all(self.config.in_Ov(c) for c in a.terms.values())

    def in_max_lattice(self, a: QuotientElement) -> bool:
        return all(self.config.in_mv(c) for c in a.terms.values())

    def fraction_valuation(self, a: QuotientElement, b: QuotientElement):
        """``v(a b^-1) = v(a) - v(b)``."""
        if not b.terms:
            raise ZeroDivisionError("b must be nonzero")
        if self.axioms_passed is not True:
            warnings.warn("valuation axioms not verified for this algebra", stacklevel=2)
        va = self.valuation(a)
        if va == INFINITY:
            return INFINITY
        return va - self.valuation(b)

    def scaling_invariants(self, a: QuotientElement) -> ScalingReport:
        if not a.terms:
            raise ValueError("a must be nonzero")
        p = Fraction(self.p)
        return ScalingReport(a, self.valuation(a), self.valuation(a * p), self.valuation(a * (1 / p)))

    # random elements
    def random_coefficient(self, rng: random.Random, low: int = -3, high: int = 3) -> Fraction:
        p = self.p

        def unit():
            while True:
                n = rng.randint(1, 6 * p)
                if n % p:
                    return n

        c = Fraction(unit(), unit()) * Fraction(p) ** rng.randint(low, high)
        return -c if rng.random() < 0.5 else c

    def random_element(self, rng: random.Random, words: List[Word], max_terms: int = 3) -> QuotientElement:
        k = rng.randint(1, min(max_terms, len(words)))
        chosen = rng.sample(words, k)
        return QuotientElement(self.algebra, {w: self.random_coefficient(rng) for w in chosen})

    def check_valuation_axioms(self, samples: int, max_deg: int, seed: int, keep: int = 5) -> AxiomsReport:
        """Test V2 (multiplicativity) and V3 (ultrametric) on random pairs."""
        rng = random.Random(seed)
        words = [w for group in self.algebra.automaton.normal_words(max_deg) for w in group]
        report = AxiomsReport(self.p, seed, samples, max_deg)
        for _ in range(samples):
            a = self.random_element(rng, words)
            b = self.random_element(rng, words)
            va, vb = self.valuation(a), self.valuation(b)
            vsum = self.valuation(a + b)
            if vsum < min(va, vb):
                report.v3_violations += 1
                if len(report.witnesses) < keep:
                    report.witnesses.append(AxiomViolation("V3", a, b, vsum, min(va, vb)))
            vprod = self.valuation(a * b)
            if vprod != va + vb:
                report.v2_violations += 1
                if len(report.witnesses) < keep:
                    report.witnesses.append(AxiomViolation("V2", a, b, vprod, va + vb))
        self.axioms_passed = report.passed
        return report

    # good reduction
    def good_reduction_check(self, samples: int, seed: int, max_word: int = 2) -> GoodReductionReport:
        """Check that sampled elements of I ∩ O_v<X> reduce to 0 inside O_v<X>.

        Samples rotate through four constructions: plain O_v-combinations,
        ``p^-1 * (p * u g v)``, combinations whose 1/p parts cancel, and
        perturbed overlap syzygies scaled by ``p^-1`` (leading terms cancel,
        so the division has real work to do).
        """
        rng = random.Random(seed)
        G = self.algebra.basis
        order, p = G.order, self.p
        local = LocalRing(p)
        G_loc = G.change_ring(local, Fraction)
        n = order.alphabet.n
        syzygies = self._overlap_syzygies()
        kinds = {"integral": 0, "rescaled": 0, "cancelling": 0, "syzygy": 0}
        report = GoodReductionReport(p, seed, samples, kinds)

        def rand_word():
            return tuple(rng.randrange(n) for _ in range(rng.randint(0, max_word)))

        def placed(coeff, i):
            return G[i].lrmul(rand_word(), rand_word()).scale(coeff)

        def integral_combination():
            f = Poly.zero(QQ, order)
            for _ in range(rng.randint(1, 3)):
                c = self.random_coefficient(rng, 0, 2)
                f = f + placed(c, rng.randrange(len(G)))
            return f

        names = ["integral", "rescaled", "cancelling", "syzygy"]
        for k in range(samples):
            kind = names[k % 4]
            if kind == "syzygy" and not syzygies:
                kind = "cancelling"
            if kind == "integral":
                f = integral_combination()
            elif kind == "rescaled":
                f = integral_combination().scale(p).scale(Fraction(1, p))
            elif kind == "cancelling":
                f = Poly.zero(QQ, order)
                for _ in range(rng.randint(1, 3)):
                    i = rng.randrange(len(G))
                    left, right = rand_word(), rand_word()
                    lam = self.random_coefficient(rng, 0, 2)
                    r = Fraction(rng.randint(1, p - 1) if p > 2 else 1, p)
                    term = G[i].lrmul(left, right)
                    f = f + term.scale(lam + r) - term.scale(r)
            else:
                f = self._syzygy_sample(rng, syzygies, rand_word) + integral_combination()
            kinds[kind] += 1
            failure = self._reduces_integrally(f, G_loc, local)
            if failure is not None:
                report.failures.append({"construction": kind, "element": str(f), "reason": failure})
        return report

    def _overlap_syzygies(self):
        """Overlaps with their division quotients: ``o = sum c * left * g * right``."""
        G = self.algebra.basis
        return [(o, divide(o.value, G).quotients) for o in overlaps(G)]

    def _syzygy_sample(self, rng, syzygies, wrap) -> Poly:
        # p^-1 * ((1 + p a)(s g_i u t - s v g_j t) - sum (c + p a) s l g r t):
        # every coefficient has v = -1, yet the 1/p parts cancel exactly.
        G = self.algebra.basis
        p = self.p
        o, quotients = rng.choice(syzygies)
        s, t = wrap(), wrap()
        a = self.random_coefficient(rng, 0, 2)
        scale = (1 + p * a) / p
        f = (G[o.i].lrmul(s, o.u + t) - G[o.j].lrmul(s + o.v, t)).scale(scale)
        for c, left, i, right in quotients:
            f = f - G[i].lrmul(s + left, right + t).scale((c + p * a) / p)
        return f

    def _reduces_integrally(self, f: Poly, G_loc: MonicSet, local: LocalRing) -> Optional[str]:
        if not all(self.config.in_Ov(c) for c in f.coeffs.values()):
            return "sample is not in O_v<X>"
        try:
            d = divide(f.map_coefficients(local), G_loc)
        except OutsideRingError as exc:
            return f"left O_v during division: {exc}"
        if d.remainder:
            return f"nonzero remainder {d.remainder}"
        return None

    # residue algebra
    def residue_algebra(self) -> ResidueAlgebra:
        if self._residue is not None:
            return self._residue
        if not self.g_not_in_mv:
            raise HypothesisError("G ⊂ 𝔪_vO_v⟨X⟩, the residue-algebra hypothesis fails")
        fp = PrimeField(self.p)
        G = self.algebra.basis
        bar = G.change_ring(fp, self.config.residue)
        if bar.leading_monomials != G.leading_monomials:
            raise AssertionError("residue map changed a leading monomial")
        report = is_groebner(bar)
        algebra = QuotientAlgebra(bar, verify=False) if report.passed else None
        self._residue = ResidueAlgebra(self.p, bar, report.passed, algebra)
        return self._residue

    def reduce_mod_p(self, f: Poly) -> Poly:
        """Image of an O_v-polynomial in F_p<X>."""
        return f.map_coefficients(PrimeField(self.p), self.config.residue)

    def leading_residue(self, a: QuotientElement) -> QuotientElement:
        """Image of ``p^-v(a) a`` in the residue algebra (its initial form)."""
        R = self.residue_algebra()
        if R.algebra is None:
            raise ValueError("residue presentation is not a Groebner basis")
        if not a.terms:
            return R.algebra.zero()
        shift = Fraction(self.p) ** (-self.valuation(a))
        res = self.config.residue
        return QuotientElement(
            R.algebra,
            {w: r for w, c in a.terms.items() if (r := res(c * shift))},
        )

    def lift(self, abar: QuotientElement) -> QuotientElement:
        """Lift a residue-algebra element to A with coefficients in ``[0, p)``."""
        return QuotientElement(self.algebra, {w: Fraction(c) for w, c in abar.terms.items()})


def zero_divisor_scan(R: ResidueAlgebra, max_deg: int) -> ZeroDivisorReport:
    """Search for ``a * b == 0`` among small nonzero elements of the residue algebra.

    Single normal words are tried first (pairs ordered by total degree), then
    pairs involving binomials ``w1 + c w2`` with ``w1 > w2`` and unit ``c``.
    Finding nothing is not a proof that the algebra is a domain.
    """
    if R.algebra is None:
        raise ValueError("the residue presentation is not a verified Groebner basis")
    alg = R.algebra
    ring = alg.ring
    deg = alg.alphabet.degree
    key = alg.order.key
    groups = alg.automaton.normal_words(max_deg)
    words = [w for g in groups for w in g]
    words.sort(key=key)
    nonunit_words = [w for w in words if w]
    report = ZeroDivisorReport(max_deg, 0)

    pairs = sorted(
        ((deg(a) + deg(b), key(a), key(b), a, b) for a in nonunit_words for b in nonunit_words),
        key=lambda t: t[:3],
    )
    for *_, a, b in pairs:
        report.checked += 1
        if not alg._word_nf(a + b):
            report.witness = (alg.word(a), alg.word(b))
            return report

    singles = [{w: ring.one} for w in nonunit_words]
    binomials = []
    for i, w1 in enumerate(words):
        for w2 in words[:i]:
            for c in range(1, R.p):
                binomials.append({w1: ring.one, w2: c})
    binomials.sort(key=lambda t: max(deg(w) for w in t))
    elements = singles + binomials
    n_single = len(singles)
    for ia, a in enumerate(elements):
        for ib, b in enumerate(elements):
            if ia < n_single and ib < n_single:
                continue
            report.checked += 1
            ea, eb = QuotientElement(alg, a), QuotientElement(alg, b)
            if alg.qmul(ea, eb).is_zero():
                report.witness = (ea, eb)
                return report
    return report
