import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from promislow.algebra import (
    LaurentPoly, ModulusMismatch, apply_action, poly_add, poly_is_ring_unit, poly_mul, variables,
)
from promislow.expr import parse_poly
from promislow.group import QElement

from conftest import polys

V = variables(2)
v, w, z, x, y = V["v"], V["w"], V["z"], V["x"], V["y"]
one = LaurentPoly.one(2)
A, B, AB = QElement.A, QElement.B, QElement.AB


def test_char_two_cancellation():
    f = one + v**2
    assert poly_add(f, f) == LaurentPoly.zero(2)
    assert f + LaurentPoly.zero(2) == f


def test_vbar_squared():
    vbar = v**-1 + v
    assert poly_add(poly_mul(vbar, vbar), v**-2 + v**2) == 0


def test_product_p_has_eight_terms():
    p = (one + x) * (one + y) * (one + z**-1)
    assert len(p) == 8
    assert str(p) == "z^-1 + 1 + y*z^-1 + y + x*z^-1 + x + x*y*z^-1 + x*y"


def test_gamma_times_gamma_a():
    gamma = v**-2 * w**-1 + v**2 * w
    vbar, wbar = v**-1 + v, w**-1 + w
    assert gamma * apply_action(gamma, A) == vbar**4 + wbar**2


def test_one_is_identity():
    f = parse_poly("x^-2*y + 3*z", 5)
    assert LaurentPoly.one(5) * f == f


def test_action_examples():
    assert apply_action(y, A) == y**-1
    f = x + y * z**-1
    assert apply_action(f, QElement.ONE) == f
    assert apply_action(x, A) == x
    assert apply_action(x, B) == x**-1
    assert apply_action(z, AB) == z


def test_ring_unit_examples():
    assert poly_is_ring_unit(x**2 * y**-1 * z)
    assert not poly_is_ring_unit(one + x)
    assert not poly_is_ring_unit(LaurentPoly.zero(2))
    assert poly_is_ring_unit(LaurentPoly.monomial(1, 0, 0, c=2, modulus=3))


def test_modulus_mismatch():
    with pytest.raises(ModulusMismatch):
        LaurentPoly.one(2) + LaurentPoly.one(3)
    with pytest.raises(ModulusMismatch):
        LaurentPoly.one(2) * LaurentPoly.one(3)


def test_non_prime_modulus_rejected():
    with pytest.raises(ValueError):
        LaurentPoly.one(4)


def test_monomial_inverse():
    m = LaurentPoly.monomial(3, -1, 2, c=2, modulus=5)
    assert m * m.inverse() == LaurentPoly.one(5)
    with pytest.raises(ZeroDivisionError):
        (one + x).inverse()


def test_negative_coefficients_reduce():
    f = LaurentPoly({(0, 0, 0): -1, (1, 0, 0): 7}, 5)
    assert f.terms == (((0, 0, 0), 4), ((1, 0, 0), 2))


@pytest.mark.parametrize("p", [2, 3, 5])
@settings(max_examples=200)
@given(data=st.data())
def test_ring_axioms(p, data):
    f, g, h = (data.draw(polys(p)) for _ in range(3))
    assert (f * g) * h == f * (g * h)
    assert f * g == g * f
    assert f + g == g + f
    assert f * (g + h) == f * g + f * h
    assert f - f == 0


@pytest.mark.parametrize("g", list(QElement))
@settings(max_examples=100)
@given(f=polys(3), h=polys(3))
def test_action_is_ring_automorphism(g, f, h):
    assert apply_action(f + h, g) == apply_action(f, g) + apply_action(h, g)
    assert apply_action(f * h, g) == apply_action(f, g) * apply_action(h, g)


@settings(max_examples=50)
@given(f=polys(2))
def test_action_a_is_involution(f):
    assert apply_action(apply_action(f, A), A) == f


@pytest.mark.parametrize("g", list(QElement))
@pytest.mark.parametrize("h", list(QElement))
def test_action_composes_like_klein_four(g, h):
    f = LaurentPoly({(1, 2, 3): 1, (-2, 1, 0): 1, (0, 0, -1): 1}, 2)
    assert apply_action(apply_action(f, h), g) == apply_action(f, g * h)


@pytest.mark.parametrize("p", [2, 3, 5])
@settings(max_examples=100)
@given(data=st.data())
def test_text_round_trip(p, data):
    f = data.draw(polys(p))
    text = str(f)
    assert str(parse_poly(text, p)) == text
    assert parse_poly(text, p) == f


def test_canonical_order_and_hash():
    f = LaurentPoly({(1, 0, 0): 1, (-1, 0, 0): 1}, 2)
    g = LaurentPoly([((-1, 0, 0), 1), ((1, 0, 0), 1)], 2)
    assert f == g and hash(f) == hash(g)
    assert f.monomials() == [(-1, 0, 0), (1, 0, 0)]
    assert str(f) == "v^-1 + v"


def test_substitute():
    f = v**-1 + v * w**2
    assert f.substitute(v_power=3) == v**-3 + v**3 * w**2
