"""Presentation files.

A line-oriented key/value format; ``#`` starts a comment::

    generators: X, Y          # optional weights: X:1, Y:2
    order: deglex X < Y       # or degrevlex; chain lists generators ascending
    coefficients: Q           # Q | Z | Fp <p> | Zp <p>
    relations:
        Y*X - X*Y - 1

Relation lines must be indented.  ``order`` defaults to deglex in the
listed generator order; ``coefficients`` defaults to Q.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import List, Tuple

from .coefficients import QQ, CoefficientRing, ring_from_tag
from .expr import ParseError, parse_poly
from .free_algebra import Alphabet, MonomialOrder, Poly
from .groebner import MonicSet

_KEYS = ("generators", "order", "coefficients", "relations")


@dataclass
class Presentation:
    alphabet: Alphabet
    order: MonomialOrder
    ring: CoefficientRing
    relations: Tuple[Poly, ...]

    def monic_set(self, **kwargs) -> MonicSet:
        return MonicSet(list(self.relations), ring=self.ring, order=self.order, **kwargs)

    def parse(self, text: str) -> Poly:
        return parse_poly(text, self.order, self.ring)

    def to_text(self) -> str:
        a = self.alphabet
        if all(w == 1 for w in a.weights):
            gens = ", ".join(a.names)
        else:
            gens = ", ".join(f"{n}:{w}" for n, w in zip(a.names, a.weights))
        chain = " < ".join(a.names[i] for i in self.order.ranking)
        lines = [
            f"generators: {gens}",
            f"order: {self.order.kind} {chain}",
            f"coefficients: {self.ring.tag}",
            "relations:",
        ]
        lines += [f"    {g}" for g in self.relations]
        return "\n".join(lines) + "\n"


def _strip_comment(line: str) -> str:
    i = line.find("#")
    return line if i < 0 else line[:i]


def _parse_generators(value: str, lineno: int) -> Alphabet:
    names, weights = [], []
    for item in re.split(r"[,\s]+", value.strip()):
        if not item:
            continue
        name, _, weight = item.partition(":")
        names.append(name)
        if weight:
            try:
                weights.append(int(weight))
            except ValueError:
                raise ParseError(f"bad weight {weight!r} for generator {name!r}", lineno) from None
        else:
            weights.append(1)
    try:
        return Alphabet(tuple(names), tuple(weights))
    except ValueError as exc:
        raise ParseError(str(exc), lineno) from None


def _parse_order(value: str, alphabet: Alphabet, lineno: int) -> MonomialOrder:
    parts = value.split(None, 1)
    if not parts:
        raise ParseError("empty order", lineno)
    kind = parts[0]
    ranking = None
    if len(parts) == 2:
        chain = [t.strip() for t in parts[1].split("<")]
        try:
            ranking = [alphabet.index(name) for name in chain]
        except KeyError as exc:
            raise ParseError(f"order mentions {exc.args[0]}", lineno) from None
    try:
        return MonomialOrder(alphabet, kind, ranking)
    except ValueError as exc:
        raise ParseError(str(exc), lineno) from None


def parse_presentation(text: str) -> Presentation:
    fields = {}
    relation_lines: List[Tuple[int, int, str]] = []
    in_relations = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw).rstrip()
        if not line.strip():
            continue
        if line[0].isspace():
            if not in_relations:
                raise ParseError("indented line outside 'relations:'", lineno)
            stripped = line.lstrip()
            relation_lines.append((lineno, len(line) - len(stripped) + 1, stripped))
            continue
        key, sep, value = line.partition(":")
        key = key.strip()
        if not sep or key not in _KEYS:
            what = f"unknown key {key!r}" if sep else f"unexpected line {line.strip()!r}"
            raise ParseError(f"{what}; expected one of {', '.join(k + ':' for k in _KEYS)}", lineno)
        if key in fields:
            raise ParseError(f"duplicate key {key!r}", lineno)
        fields[key] = (lineno, value.strip())
        in_relations = key == "relations"
        if in_relations and value.strip():
            relation_lines.append((lineno, raw.index(value.strip()) + 1, value.strip()))

    if "generators" not in fields:
        raise ParseError("missing 'generators:'", 1)
    gl, gv = fields["generators"]
    alphabet = _parse_generators(gv, gl)
    if "order" in fields:
        ol, ov = fields["order"]
        order = _parse_order(ov, alphabet, ol)
    else:
        order = MonomialOrder(alphabet)
    ring = QQ
    if "coefficients" in fields:
        cl, cv = fields["coefficients"]
        try:
            ring = ring_from_tag(cv)
        except ValueError as exc:
            raise ParseError(str(exc), cl) from None
    if "relations" not in fields:
        raise ParseError("missing 'relations:'", len(text.splitlines()) or 1)
    if not relation_lines:
        raise ParseError("no relations given", fields["relations"][0])

    relations = tuple(parse_poly(body, order, ring, line=ln, column=col) for ln, col, body in relation_lines)
    return Presentation(alphabet, order, ring, relations)


def load_presentation(path) -> Presentation:
    with open(path, encoding="utf-8") as fh:
        return parse_presentation(fh.read())
