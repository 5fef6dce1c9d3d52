import random

import pytest

from promislow.algebra import LaurentPoly, variables
from promislow.expr import parse_ring_element
from promislow.group import QElement
from promislow.groupring import RingElemP, is_trivial_unit
from promislow.units import (
    CriterionFailed, ParityViolation, SymmetricQuadruple, build_unit_from_symmetric,
    check_lemma_criterion, counterexample, family_alpha, recover_components, unit_quadruple,
)

A, B, AB = QElement.A, QElement.B, QElement.AB
V = variables(2)
x, y, z = V["x"], V["y"], V["z"]

UNIT_TEXT = (
    "(1+x)*(1+y)*(1+z^-1) + (x^-1*y^-1 + x + y^-1*z + z)*a"
    " + (1 + x + y^-1*z + x*y*z)*b + (1 + (x + x^-1 + y + y^-1)*z^-1)*a*b"
)


def trivial_quadruple(modulus=2, s0=None):
    zero = LaurentPoly.zero(modulus)
    return SymmetricQuadruple(zero, zero, zero, s0 if s0 is not None else LaurentPoly.one(modulus))


def test_unit_quadruple_passes():
    check = check_lemma_criterion(unit_quadruple())
    assert check.ab_invariant and check.eq1_holds and check.eq2_holds


def test_trivial_quadruple_passes():
    assert check_lemma_criterion(trivial_quadruple()).ok


def test_deleting_term_of_s0_breaks_eq2():
    sq = unit_quadruple()
    s0 = sq.s0.drop_term((0, 0, 0))
    check = check_lemma_criterion(SymmetricQuadruple(sq.p0, sq.q0, sq.r0, s0))
    assert not check.eq2_holds


def test_unit_quadruple_fails_mod_3():
    check = check_lemma_criterion(unit_quadruple(3))
    assert check.ab_invariant
    assert not check.eq2_holds
    with pytest.raises(CriterionFailed):
        build_unit_from_symmetric(unit_quadruple(3))


def test_build_counterexample_components():
    cert = build_unit_from_symmetric(unit_quadruple())
    alpha = cert.alpha
    one = LaurentPoly.one(2)
    assert alpha.p == (one + x) * (one + y) * (one + z**-1)
    assert alpha.q == x**-1 * y**-1 + x + y**-1 * z + z
    assert alpha.r == one + x + y**-1 * z + x * y * z
    assert alpha.s == one + (x + x**-1 + y + y**-1) * z**-1
    assert alpha == parse_ring_element(UNIT_TEXT)
    assert cert.verified and cert.method == "lemma-construction"


def test_build_trivial_unit():
    cert = build_unit_from_symmetric(trivial_quadruple())
    assert cert.alpha == parse_ring_element("ab")
    assert cert.alpha_inv == parse_ring_element("z^-1*ab")
    assert cert.verified


def test_parity_violation():
    # p0 = 1 passes the criterion but v*w*p0 is not a polynomial in x, y
    one, zero = LaurentPoly.one(2), LaurentPoly.zero(2)
    sq = SymmetricQuadruple(one, zero, zero, zero)
    assert check_lemma_criterion(sq).ok
    with pytest.raises(ParityViolation):
        build_unit_from_symmetric(sq)


def test_counterexample_properties():
    cert = counterexample()
    assert cert.alpha.q == x**-1 * y**-1 + x + y**-1 * z + z
    one = RingElemP.one(2)
    assert cert.alpha * cert.alpha_inv == one == cert.alpha_inv * cert.alpha
    assert not is_trivial_unit(cert.alpha)
    assert len(cert.alpha) == len(cert.alpha_inv) == 21


def test_invariance_columns():
    p, q, r, s = counterexample().alpha.components
    assert p.act(AB) == (x * y) ** -1 * p
    assert q.act(AB) == y * q
    assert r.act(AB) == x**-1 * r
    assert s.act(AB) == s
    assert p.act(B) == x**-1 * y * p.act(A)
    assert q.act(B) == y**-1 * q.act(A)
    assert r.act(B) == x**-1 * r.act(A)
    assert s.act(B) == s.act(A)


def test_family_k0_is_counterexample():
    assert family_alpha(0).alpha == counterexample().alpha


def test_family_k1_first_summand():
    one = LaurentPoly.one(2)
    assert family_alpha(1).alpha.p == (x**-1 + x**2) * (one + y) * (one + z**-1)


@pytest.mark.parametrize("k", range(5))
def test_family_verifies(k):
    cert = family_alpha(k)
    assert cert.verified
    assert len(cert.alpha) == 21
    assert not is_trivial_unit(cert.alpha)


@pytest.mark.parametrize("k", range(5))
def test_substitution_preserves_criterion(k):
    assert check_lemma_criterion(unit_quadruple().substitute(2 * k + 1)).ok


def test_family_rejects_negative_k():
    with pytest.raises(ValueError):
        family_alpha(-1)


def _random_symmetric(rng, modulus):
    acc = LaurentPoly.zero(modulus)
    for _ in range(rng.randint(0, 2)):
        mono = LaurentPoly.monomial(rng.randint(-2, 2), rng.randint(-2, 2), rng.randint(-1, 1), modulus=modulus)
        acc = acc + mono + mono.act(AB)
    return acc


def test_fuzz_passing_quadruples_give_units():
    """Every quadruple that passes and recovers integrally yields a two-sided unit."""
    rng = random.Random(3)
    base = unit_quadruple()
    named = [base] + [
        SymmetricQuadruple(*(f.substitute(v_power=vp, w_power=wp) for f in base.polys))
        for vp in (-3, -1, 1, 3) for wp in (-3, -1, 1, 3, 5)
    ]
    named += [trivial_quadruple(s0=LaurentPoly.monomial(0, 0, k)) for k in range(-2, 3)]
    random_ones = [
        SymmetricQuadruple(*(_random_symmetric(rng, 2) for _ in range(4))) for _ in range(300)
    ]
    built = 0
    for sq in named + random_ones:
        if not check_lemma_criterion(sq).ok:
            continue
        if not all(f.is_integral() for f in recover_components(sq)):
            continue
        cert = build_unit_from_symmetric(sq)
        assert cert.left_ok and cert.right_ok
        built += 1
    assert built >= len(named)


def test_odd_modulus_trivial_quadruple():
    cert = build_unit_from_symmetric(trivial_quadruple(5, LaurentPoly.constant(4, 5)))
    assert cert.alpha * cert.alpha_inv == RingElemP.one(5)
