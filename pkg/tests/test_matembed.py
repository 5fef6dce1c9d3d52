import itertools
import random

import pytest

from promislow.algebra import LaurentPoly
from promislow.expr import parse_ring_element
from promislow.group import PElement, QElement
from promislow.groupring import RingElemP, ZeroElement, random_ring_element
from promislow.matembed import adjugate, decide_unit, det4, embed, identity, mat_mul
from promislow.units import counterexample, family_alpha


def elem(text, p=2):
    return parse_ring_element(text, p)


def _det_leibniz(m):
    """Independent determinant via the permutation expansion."""
    acc = LaurentPoly.zero(m[0][0].modulus)
    for perm in itertools.permutations(range(4)):
        inversions = sum(perm[i] > perm[j] for i in range(4) for j in range(i + 1, 4))
        term = LaurentPoly.one(m[0][0].modulus)
        for r, c in enumerate(perm):
            term = term * m[r][c]
        acc = acc + (-term if inversions % 2 else term)
    return acc


def test_embed_identity():
    assert embed(RingElemP.one(2)) == identity(2)
    assert det4(identity(2)) == 1


def test_embed_x_is_diagonal_action():
    m = embed(elem("x"))
    x = LaurentPoly.xyz(1)
    expected = [x, x, x**-1, x**-1]
    for r in range(4):
        for c in range(4):
            assert m[r][c] == (expected[r] if r == c else 0)


def test_embed_counterexample_pair():
    cert = counterexample()
    assert mat_mul(embed(cert.alpha), embed(cert.alpha_inv)) == identity(2)


def test_embed_is_homomorphism():
    rng = random.Random(21)
    for _ in range(100):
        f, g = random_ring_element(rng, 3, radius=2, max_terms=3), random_ring_element(rng, 3, radius=2, max_terms=3)
        assert embed(f * g) == mat_mul(embed(f), embed(g))


def test_embed_is_injective():
    rng = random.Random(22)
    for _ in range(100):
        f, g = random_ring_element(rng, 2), random_ring_element(rng, 2)
        if f != g:
            assert embed(f) != embed(g)


def test_det_matches_leibniz():
    rng = random.Random(23)
    for _ in range(20):
        m = embed(random_ring_element(rng, 3, radius=2, max_terms=2))
        assert det4(m) == _det_leibniz(m)


def test_det_multiplicative():
    rng = random.Random(24)
    for _ in range(50):
        f = random_ring_element(rng, 2, radius=1, max_terms=2)
        g = random_ring_element(rng, 2, radius=1, max_terms=2)
        m1, m2 = embed(f), embed(g)
        assert det4(mat_mul(m1, m2)) == det4(m1) * det4(m2)


def test_adjugate_identity():
    rng = random.Random(25)
    for _ in range(10):
        m = embed(random_ring_element(rng, 3, radius=1, max_terms=2))
        d = det4(m)
        prod = mat_mul(m, adjugate(m))
        for r in range(4):
            for c in range(4):
                assert prod[r][c] == (d if r == c else 0)


def test_det_examples():
    assert det4(embed(counterexample().alpha)).is_monomial()
    assert not det4(embed(elem("1 + x"))).is_monomial()


def test_decide_counterexample_matches_lemma_inverse():
    cert = counterexample()
    decided = decide_unit(cert.alpha)
    assert decided is not None and decided.method == "adjugate"
    assert decided.alpha_inv == cert.alpha_inv


def test_decide_trivial_unit():
    cert = decide_unit(elem("x*a"))
    assert cert is not None and cert.verified
    assert cert.alpha_inv == elem("(x*a)^-1")


def test_decide_non_unit():
    assert decide_unit(elem("1 + x")) is None


def test_decide_zero():
    with pytest.raises(ZeroElement):
        decide_unit(RingElemP.zero(2))


def test_all_trivial_units_in_box():
    r = range(-2, 3)
    for g in QElement:
        for m, n, k in itertools.product(r, repeat=3):
            for p, c in ((2, 1), (3, 2)):
                alpha = RingElemP.from_group(PElement(m, n, k, g), c, p)
                cert = decide_unit(alpha)
                assert cert is not None and cert.verified


@pytest.mark.parametrize("k", range(5))
def test_family_decided_as_units(k):
    cert = family_alpha(k)
    assert det4(embed(cert.alpha)).is_monomial()
    decided = decide_unit(cert.alpha)
    assert decided is not None and decided.alpha_inv == cert.alpha_inv


def test_even_augmentation_non_units():
    rng = random.Random(26)
    checked = 0
    while checked < 50:
        f = random_ring_element(rng, 2, radius=2, max_terms=3, populated=False)
        if not f or f.augmentation() != 0:
            continue
        assert decide_unit(f) is None
        checked += 1


def test_odd_modulus_decision():
    f = elem("2 + x*a", 3)
    assert det4(embed(f)) == elem("2*x^-3 + 2 + 2*x^3", 3).p
    assert decide_unit(f) is None
    assert decide_unit(elem("1 + x", 3)) is None
