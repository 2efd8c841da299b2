import os
import sys
from pathlib import Path

import pytest
from hypothesis import settings

from ncvaluation import QQ, FreeAlgebra, MonicSet

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

PRESENTATIONS = Path(__file__).resolve().parent.parent / "presentations"


def commutative_set(n, ring=QQ):
    names = "XYZW"[:n]
    F = FreeAlgebra.create(" ".join(names), ring)
    rels = [F(f"{names[j]}*{names[i]} - {names[i]}*{names[j]}") for j in range(n) for i in range(j)]
    return F, MonicSet(rels)


def weyl_set(ring=QQ):
    F = FreeAlgebra.create("X Y", ring)
    return F, MonicSet([F("Y*X - X*Y - 1")])


def quantum_set(q, ring=QQ):
    F = FreeAlgebra.create("X Y", ring)
    return F, MonicSet([F(f"Y*X - {q}*X*Y")])


def jordan_set(ring=QQ):
    F = FreeAlgebra.create("X Y", ring)
    return F, MonicSet([F("Y*Y - Y*X + X*Y")])


@pytest.fixture
def xy():
    return FreeAlgebra.create("X Y")


@pytest.fixture
def presentations():
    return PRESENTATIONS
