"""Group rings K[P] and K[D_inf] over a prime field.

An element of K[P] is ``p + q*a + r*b + s*ab`` with p, q, r, s Laurent
polynomials in x, y, z (coefficients written on the left).  The product
:func:`rp_mul` uses the four component formulas derived from the cocycle; the
left factor plays the primed role, so ``rp_mul(left, right)`` is ``left*right``.
:func:`rp_mul_convolution` multiplies term by term through the group law and
serves as an independent oracle for it.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Iterator, Union

from .algebra import DEFAULT_MODULUS, LaurentPoly, ModulusMismatch, inv_mod
from .group import IDENTITY, DElement, PElement, QElement, project_dihedral

_ONE, _A, _B, _AB = QElement

# x, y, z monomials in v, w, z exponents
_X, _Y, _Z = (2, 0, 0), (0, 2, 0), (0, 0, 1)


class ParityError(ValueError):
    """A component has an odd v- or w-exponent, so it is not in K[x, y, z]."""


class ZeroElement(ValueError):
    pass


def _mono(m: int, n: int, k: int) -> tuple[int, int, int]:
    return (2 * m, 2 * n, k)


@dataclass(frozen=True)
class RingElemP:
    p: LaurentPoly
    q: LaurentPoly
    r: LaurentPoly
    s: LaurentPoly

    def __post_init__(self):
        mods = {c.modulus for c in self.components}
        if len(mods) != 1:
            raise ModulusMismatch(f"components over different fields: {sorted(mods)}")
        for c in self.components:
            if not c.is_integral():
                raise ParityError(f"component {c} has a half-integer x or y exponent")

    @property
    def components(self) -> tuple[LaurentPoly, LaurentPoly, LaurentPoly, LaurentPoly]:
        return (self.p, self.q, self.r, self.s)

    @property
    def modulus(self) -> int:
        return self.p.modulus

    def component(self, g: QElement) -> LaurentPoly:
        return self.components[int(g)]

    # constructors

    @classmethod
    def from_components(cls, comps: dict[QElement, LaurentPoly], modulus: int) -> "RingElemP":
        z = LaurentPoly.zero(modulus)
        return cls(*(comps.get(g, z) for g in QElement))

    @classmethod
    def zero(cls, modulus: int = DEFAULT_MODULUS) -> "RingElemP":
        z = LaurentPoly.zero(modulus)
        return cls(z, z, z, z)

    @classmethod
    def scalar(cls, poly: LaurentPoly) -> "RingElemP":
        z = LaurentPoly.zero(poly.modulus)
        return cls(poly, z, z, z)

    @classmethod
    def one(cls, modulus: int = DEFAULT_MODULUS) -> "RingElemP":
        return cls.scalar(LaurentPoly.one(modulus))

    @classmethod
    def from_group(cls, e: PElement, c: int = 1, modulus: int = DEFAULT_MODULUS) -> "RingElemP":
        poly = LaurentPoly.monomial(*_mono(e.m, e.n, e.k), c=c, modulus=modulus)
        return cls.from_components({e.g: poly}, modulus)

    @classmethod
    def from_terms(cls, terms, modulus: int = DEFAULT_MODULUS) -> "RingElemP":
        """Build from ``(PElement, coefficient)`` pairs; repeats are summed."""
        buckets: dict[QElement, dict] = defaultdict(dict)
        for e, c in terms:
            mono = _mono(e.m, e.n, e.k)
            bucket = buckets[e.g]
            bucket[mono] = bucket.get(mono, 0) + c
        return cls.from_components(
            {g: LaurentPoly(b, modulus) for g, b in buckets.items()}, modulus
        )

    # inspection

    def terms(self) -> Iterator[tuple[PElement, int]]:
        """``(group element, coefficient)`` pairs in deterministic order."""
        for g, comp in zip(QElement, self.components):
            for (i, j, k), c in comp:
                yield PElement(i // 2, j // 2, k, g), c

    def support(self) -> list[PElement]:
        return [e for e, _ in self.terms()]

    def __len__(self) -> int:
        return sum(len(c) for c in self.components)

    def __bool__(self) -> bool:
        return any(self.components)

    def augmentation(self) -> int:
        return sum(c for _, c in self.terms()) % self.modulus

    def is_trivial_unit(self) -> bool:
        return len(self) == 1

    # arithmetic

    def _check(self, other: "RingElemP") -> None:
        if self.modulus != other.modulus:
            raise ModulusMismatch(f"modulus {self.modulus} vs {other.modulus}")

    def __add__(self, other: "RingElemP") -> "RingElemP":
        if not isinstance(other, RingElemP):
            return NotImplemented
        self._check(other)
        return RingElemP(*(f + g for f, g in zip(self.components, other.components)))

    def __neg__(self) -> "RingElemP":
        return RingElemP(*(-f for f in self.components))

    def __sub__(self, other: "RingElemP") -> "RingElemP":
        if not isinstance(other, RingElemP):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: Union["RingElemP", int]) -> "RingElemP":
        if isinstance(other, int):
            return RingElemP(*(f.scale(other) for f in self.components))
        if not isinstance(other, RingElemP):
            return NotImplemented
        return rp_mul(self, other)

    def __rmul__(self, other: int) -> "RingElemP":
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __pow__(self, e: int) -> "RingElemP":
        if e < 0:
            if not self.is_trivial_unit():
                raise ValueError("negative powers are only defined for trivial units")
            ((g, c),) = self.terms()
            return RingElemP.from_group(g.inverse(), inv_mod(c, self.modulus), self.modulus) ** (-e)
        result = RingElemP.one(self.modulus)
        for _ in range(e):
            result = result * self
        return result

    def __str__(self) -> str:
        parts = []
        for g, comp in zip(QElement, self.components):
            if not comp:
                continue
            if g == _ONE:
                parts.append(str(comp))
            elif comp == 1:
                parts.append(g.label)
            elif len(comp) == 1:
                parts.append(f"{comp}*{g.label}")
            else:
                parts.append(f"({comp})*{g.label}")
        return " + ".join(parts) if parts else "0"


def rp_mul(left: RingElemP, right: RingElemP) -> RingElemP:
    """Product ``left * right`` via the cocycle component formulas."""
    left._check(right)
    p1, q1, r1, s1 = left.components
    p, q, r, s = right.components
    pa, pb, pab = p.act(_A), p.act(_B), p.act(_AB)
    qa, qb, qab = q.act(_A), q.act(_B), q.act(_AB)
    ra, rb, rab = r.act(_A), r.act(_B), r.act(_AB)
    sa, sb, sab = s.act(_A), s.act(_B), s.act(_AB)
    one = p1 * p + (q1 * qa).shift(*_X) + (r1 * rb).shift(*_Y) + (s1 * sab).shift(*_Z)
    a = p1 * q + q1 * pa + (r1 * sb).shift(-2, 0, -1) + (s1 * rab).shift(0, -2, 0)
    b = p1 * r + (q1 * sa).shift(*_X) + r1 * pb + (s1 * qab).shift(0, -2, 1)
    ab = p1 * s + q1 * ra + (r1 * qb).shift(-2, 2, -1) + s1 * pab
    return RingElemP(one, a, b, ab)


def rp_mul_convolution(left: RingElemP, right: RingElemP) -> RingElemP:
    """Oracle product: expand to group elements, multiply pairwise in P, re-collect."""
    if left.modulus != right.modulus:
        raise ModulusMismatch(f"modulus {left.modulus} vs {right.modulus}")
    acc: dict[PElement, int] = {}
    rterms = list(right.terms())
    for e1, c1 in left.terms():
        for e2, c2 in rterms:
            e = e1 * e2
            acc[e] = acc.get(e, 0) + c1 * c2
    return RingElemP.from_terms(acc.items(), left.modulus)


def support(alpha: RingElemP) -> list[PElement]:
    return alpha.support()


def augmentation(alpha: RingElemP) -> int:
    return alpha.augmentation()


def is_trivial_unit(alpha: RingElemP) -> bool:
    return alpha.is_trivial_unit()


def translate(g: PElement, alpha: RingElemP, h: PElement = IDENTITY) -> RingElemP:
    """The two-sided translate ``g * alpha * h``."""
    m = alpha.modulus
    return RingElemP.from_group(g, modulus=m) * alpha * RingElemP.from_group(h, modulus=m)


def conjugate(alpha: RingElemP, w: PElement) -> RingElemP:
    """``w^-1 * alpha * w``."""
    return translate(w.inverse(), alpha, w)


# K[D_inf]; t-polynomials reuse LaurentPoly with only the first exponent


def _tpoly(n: int, c: int, modulus: int) -> LaurentPoly:
    return LaurentPoly.monomial(n, 0, 0, c, modulus)


def _reflect(f: LaurentPoly) -> LaurentPoly:
    """f(t) -> f(t^-1)."""
    return f.substitute(v_power=-1)


def _format_tpoly(f: LaurentPoly) -> str:
    if not f:
        return "0"
    out = []
    for (n, _, _), c in f:
        mono = "" if n == 0 else ("t" if n == 1 else f"t^{n}")
        if not mono:
            out.append(str(c))
        else:
            out.append(mono if c == 1 else f"{c}*{mono}")
    return " + ".join(out)


@dataclass(frozen=True)
class RingElemD:
    """``u(t) + v(t)*bbar`` in K[D_inf]."""

    u: LaurentPoly
    v: LaurentPoly

    def __post_init__(self):
        if self.u.modulus != self.v.modulus:
            raise ModulusMismatch(f"modulus {self.u.modulus} vs {self.v.modulus}")
        for f in (self.u, self.v):
            if any(j or k for (_, j, k), _c in f):
                raise ValueError("K[D_inf] components must be polynomials in t only")

    @property
    def modulus(self) -> int:
        return self.u.modulus

    @classmethod
    def zero(cls, modulus: int = DEFAULT_MODULUS) -> "RingElemD":
        z = LaurentPoly.zero(modulus)
        return cls(z, z)

    @classmethod
    def one(cls, modulus: int = DEFAULT_MODULUS) -> "RingElemD":
        return cls.from_group(DElement(), modulus=modulus)

    @classmethod
    def from_group(cls, d: DElement, c: int = 1, modulus: int = DEFAULT_MODULUS) -> "RingElemD":
        mono = _tpoly(d.n, c, modulus)
        z = LaurentPoly.zero(modulus)
        return cls(z, mono) if d.flip else cls(mono, z)

    @classmethod
    def from_exponents(cls, u: dict[int, int], v: dict[int, int], modulus: int = DEFAULT_MODULUS) -> "RingElemD":
        return cls(
            LaurentPoly({(n, 0, 0): c for n, c in u.items()}, modulus),
            LaurentPoly({(n, 0, 0): c for n, c in v.items()}, modulus),
        )

    def terms(self) -> Iterator[tuple[DElement, int]]:
        for (n, _, _), c in self.u:
            yield DElement(n), c
        for (n, _, _), c in self.v:
            yield DElement(n, True), c

    def __add__(self, other: "RingElemD") -> "RingElemD":
        return RingElemD(self.u + other.u, self.v + other.v)

    def __neg__(self) -> "RingElemD":
        return RingElemD(-self.u, -self.v)

    def __sub__(self, other: "RingElemD") -> "RingElemD":
        return self + (-other)

    def __mul__(self, other: "RingElemD") -> "RingElemD":
        if not isinstance(other, RingElemD):
            return NotImplemented
        return rd_mul(self, other)

    def conjugate(self, d: DElement) -> "RingElemD":
        """``d^-1 * self * d``."""
        m = self.modulus
        return RingElemD.from_group(d.inverse(), modulus=m) * self * RingElemD.from_group(d, modulus=m)

    def __str__(self) -> str:
        parts = []
        if self.u:
            parts.append(_format_tpoly(self.u))
        if self.v:
            parts.append(f"({_format_tpoly(self.v)})*b")
        return " + ".join(parts) if parts else "0"


def rd_mul(d1: RingElemD, d2: RingElemD) -> RingElemD:
    if d1.modulus != d2.modulus:
        raise ModulusMismatch(f"modulus {d1.modulus} vs {d2.modulus}")
    return RingElemD(
        d1.u * d2.u + d1.v * _reflect(d2.v),
        d1.u * d2.v + d1.v * _reflect(d2.u),
    )


def ring_project(alpha: RingElemP) -> RingElemD:
    """Linear extension of a -> t, b -> bbar (x -> t^2, y, z -> 1)."""
    u: dict[int, int] = {}
    v: dict[int, int] = {}
    for e, c in alpha.terms():
        d = project_dihedral(e)
        target = v if d.flip else u
        target[d.n] = target.get(d.n, 0) + c
    return RingElemD.from_exponents(u, v, alpha.modulus)


def random_poly(rng, modulus: int = DEFAULT_MODULUS, radius: int = 3, max_terms: int = 4, min_terms: int = 0) -> LaurentPoly:
    """Random x, y, z polynomial with exponents in [-radius, radius]."""
    n = rng.randint(min_terms, max_terms)
    terms = {}
    for _ in range(n):
        m = tuple(rng.randint(-radius, radius) for _ in range(3))
        terms[_mono(*m)] = rng.randint(1, modulus - 1)
    return LaurentPoly(terms, modulus)


def random_ring_element(rng, modulus: int = DEFAULT_MODULUS, radius: int = 3, max_terms: int = 4, populated: bool = True) -> RingElemP:
    """Random element of K[P]; with ``populated`` every component is nonzero."""
    lo = 1 if populated else 0
    return RingElemP(*(random_poly(rng, modulus, radius, max_terms, lo) for _ in range(4)))
