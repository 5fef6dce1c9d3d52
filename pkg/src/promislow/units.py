"""Piecewise symmetric units of K[P] and the explicit non-trivial unit over F_2.

Given p0, q0, r0, s0 in K[v^±1, w^±1, z^±1] that are fixed by the ab-action,
the element with components

    p = v w p0,  q = w^-1 q0,  r = v r0,  s = s0

is a unit whenever

    p0^a s0 - q0 r0^a + z^-1 (p0^a s0 - q0 r0^a)^a = 0
    p0 p0^a - q0 q0^a - r0 r0^a + s0 s0^a = 1,

with inverse ``x^-1 p^a - x^-1 q a - y^-1 r b + z^-1 s^a ab``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .algebra import LaurentPoly, ModulusMismatch
from .group import QElement
from .groupring import RingElemP

A, AB = QElement.A, QElement.AB


class CriterionFailed(ValueError):
    pass


class ParityViolation(ValueError):
    pass


class VerificationFailed(AssertionError):
    """An inverse failed its round-trip check; indicates a bug, not bad input."""


@dataclass(frozen=True)
class UnitCertificate:
    alpha: RingElemP
    alpha_inv: RingElemP
    method: str  # "lemma-construction" | "adjugate" | "external"
    left_ok: bool = field(default=False, compare=False)
    right_ok: bool = field(default=False, compare=False)

    @classmethod
    def checked(cls, alpha: RingElemP, alpha_inv: RingElemP, method: str) -> "UnitCertificate":
        one = RingElemP.one(alpha.modulus)
        return cls(alpha, alpha_inv, method, alpha_inv * alpha == one, alpha * alpha_inv == one)

    @property
    def verified(self) -> bool:
        return self.left_ok and self.right_ok


@dataclass(frozen=True)
class SymmetricQuadruple:
    p0: LaurentPoly
    q0: LaurentPoly
    r0: LaurentPoly
    s0: LaurentPoly

    def __post_init__(self):
        if len({f.modulus for f in self.polys}) != 1:
            raise ModulusMismatch("quadruple mixes prime fields")

    @property
    def polys(self) -> tuple[LaurentPoly, LaurentPoly, LaurentPoly, LaurentPoly]:
        return (self.p0, self.q0, self.r0, self.s0)

    @property
    def modulus(self) -> int:
        return self.p0.modulus

    def substitute(self, v_power: int) -> "SymmetricQuadruple":
        """Replace v by v^v_power in all four polynomials."""
        return SymmetricQuadruple(*(f.substitute(v_power=v_power) for f in self.polys))

    def with_modulus(self, modulus: int) -> "SymmetricQuadruple":
        return SymmetricQuadruple(*(f.with_modulus(modulus) for f in self.polys))


@dataclass(frozen=True)
class LemmaCheck:
    ab_invariant: bool
    eq1_holds: bool
    eq2_holds: bool

    @property
    def ok(self) -> bool:
        return self.ab_invariant and self.eq1_holds and self.eq2_holds


def check_lemma_criterion(sq: SymmetricQuadruple) -> LemmaCheck:
    p0, q0, r0, s0 = sq.polys
    invariant = all(f.act(AB) == f for f in sq.polys)
    xi = p0.act(A) * s0 - q0 * r0.act(A)
    eq1 = xi + xi.act(A).shift(0, 0, -1)
    eq2 = p0 * p0.act(A) - q0 * q0.act(A) - r0 * r0.act(A) + s0 * s0.act(A)
    return LemmaCheck(invariant, not eq1, eq2 == 1)


def recover_components(sq: SymmetricQuadruple) -> tuple[LaurentPoly, ...]:
    """Undo the half-exponent rescaling: (v w p0, w^-1 q0, v r0, s0)."""
    return (sq.p0.shift(1, 1, 0), sq.q0.shift(0, -1, 0), sq.r0.shift(1, 0, 0), sq.s0)


def lemma_inverse(alpha: RingElemP) -> RingElemP:
    """The candidate inverse x^-1 p^a - x^-1 q a - y^-1 r b + z^-1 s^a ab."""
    p, q, r, s = alpha.components
    return RingElemP(
        p.act(A).shift(-2, 0, 0),
        -q.shift(-2, 0, 0),
        -r.shift(0, -2, 0),
        s.act(A).shift(0, 0, -1),
    )


def build_unit_from_symmetric(sq: SymmetricQuadruple) -> UnitCertificate:
    check = check_lemma_criterion(sq)
    if not check.ok:
        raise CriterionFailed(f"criterion not satisfied: {check}")
    comps = recover_components(sq)
    if not all(f.is_integral() for f in comps):
        raise ParityViolation("recovered components have half-integer x or y exponents")
    alpha = RingElemP(*comps)
    cert = UnitCertificate.checked(alpha, lemma_inverse(alpha), "lemma-construction")
    if not cert.verified:
        raise VerificationFailed(
            f"lemma inverse failed verification (left={cert.left_ok}, right={cert.right_ok})"
        )
    return cert


def unit_quadruple(modulus: int = 2) -> SymmetricQuadruple:
    """p0, q0, r0, s0 of the non-trivial unit, written with vbar = v^-1 + v etc."""
    mono = lambda i, j, k: LaurentPoly.monomial(i, j, k, modulus=modulus)  # noqa: E731
    one = LaurentPoly.one(modulus)
    z, zinv = mono(0, 0, 1), mono(0, 0, -1)
    vbar = mono(-1, 0, 0) + mono(1, 0, 0)
    wbar = mono(0, -1, 0) + mono(0, 1, 0)
    p0 = vbar * wbar * (one + zinv)
    q0 = mono(-2, -1, 0) + mono(2, 1, 0) + wbar * z
    r0 = vbar + (mono(-1, -2, 0) + mono(1, 2, 0)) * z
    s0 = one + (mono(-2, 0, 0) + mono(2, 0, 0) + mono(0, -2, 0) + mono(0, 2, 0)) * zinv
    return SymmetricQuadruple(p0, q0, r0, s0)


@lru_cache(maxsize=None)
def counterexample() -> UnitCertificate:
    """The non-trivial unit p + qa + rb + s ab of F_2[P] with its inverse."""
    return build_unit_from_symmetric(unit_quadruple())


@lru_cache(maxsize=None)
def family_alpha(k: int) -> UnitCertificate:
    """alpha_k: the counterexample with x^(1/2) replaced by x^(k + 1/2)."""
    if k < 0:
        raise ValueError("k must be non-negative")
    return build_unit_from_symmetric(unit_quadruple().substitute(2 * k + 1))
