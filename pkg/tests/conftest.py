import cmath
import os
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from loopext.lie_core import build_split_simple
from loopext.scalars import CycScalar, LaurentPoly

ROOT = Path(__file__).resolve().parents[1]

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", max_examples=400, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

CONDUCTORS = (1, 3, 4, 5, 6, 8, 12)

fractions = st.builds(Fraction, st.integers(-9, 9), st.integers(1, 5))


@st.composite
def cyc_scalars(draw, conductors=CONDUCTORS, nonzero=False):
    n = draw(st.sampled_from(conductors))
    coords = draw(st.dictionaries(st.integers(0, max(n - 1, 0)), fractions, max_size=3))
    x = CycScalar(coords, n)
    if nonzero and not x:
        x = CycScalar.rational(draw(st.integers(1, 5)))
    return x


@st.composite
def laurent_polys(draw, nvars=1, radius=3, max_terms=3, scalars=None):
    exps = st.tuples(*[st.integers(-radius, radius)] * nvars)
    coef = scalars if scalars is not None else fractions
    terms = draw(st.dictionaries(exps, coef, max_size=max_terms))
    return LaurentPoly(nvars, terms)


def to_complex(x: CycScalar) -> complex:
    """Numerical evaluation; an independent oracle for the exact field arithmetic."""
    w = cmath.exp(2j * cmath.pi / x.conductor)
    return sum(complex(float(c)) * w ** k for k, c in x.coords.items())


@pytest.fixture(scope="session")
def a1():
    return build_split_simple("A", 1)


@pytest.fixture(scope="session")
def a2():
    return build_split_simple("A", 2)


@pytest.fixture(scope="session")
def root_dir():
    return ROOT
