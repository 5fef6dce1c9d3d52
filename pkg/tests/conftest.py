import random

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from promislow.algebra import LaurentPoly
from promislow.group import PElement, QElement
from promislow.groupring import RingElemP

settings.register_profile("default", derandomize=True, deadline=None)
settings.load_profile("default")


def polys(modulus=2, radius=4, max_terms=5, integral=False):
    step = 2 if integral else 1
    mono = st.tuples(
        st.integers(-radius, radius).map(lambda i: i * step),
        st.integers(-radius, radius).map(lambda j: j * step),
        st.integers(-radius, radius),
    )
    coeff = st.integers(1, modulus - 1)
    return st.dictionaries(mono, coeff, max_size=max_terms).map(lambda d: LaurentPoly(d, modulus))


def ring_elements(modulus=2, radius=2, max_terms=3):
    comp = polys(modulus, radius, max_terms, integral=True)
    return st.tuples(comp, comp, comp, comp).map(lambda cs: RingElemP(*cs))


q_elements = st.sampled_from(list(QElement))

p_elements = st.builds(
    PElement,
    st.integers(-3, 3),
    st.integers(-3, 3),
    st.integers(-3, 3),
    q_elements,
)


@pytest.fixture
def rng():
    return random.Random(20240601)
