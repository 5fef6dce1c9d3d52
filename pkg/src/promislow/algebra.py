"""Sparse Laurent polynomials over F_p in v, w, z with v^2 = x and w^2 = y.

Coefficients are plain ints reduced into ``range(p)``.  A polynomial belongs to
K[x^±1, y^±1, z^±1] exactly when every v- and w-exponent is even; odd
exponents are the square roots needed by the symmetric-unit criterion.
"""

from __future__ import annotations

from typing import TYPE_CHECKING, Iterable, Iterator, Mapping, Union

if TYPE_CHECKING:
    from .group import QElement

Monomial = tuple[int, int, int]

DEFAULT_MODULUS = 2

# sign of (v, w, z) exponents under a, b, ab; bit 1 is a, bit 2 is b
_ACTION_SIGNS = ((1, 1, 1), (1, -1, -1), (-1, 1, -1), (-1, -1, 1))


class ModulusMismatch(ValueError):
    """Raised when combining polynomials over different prime fields."""


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def check_modulus(p: int) -> int:
    if not isinstance(p, int) or not is_prime(p):
        raise ValueError(f"modulus must be a prime, got {p!r}")
    return p


def inv_mod(c: int, p: int) -> int:
    c %= p
    if c == 0:
        raise ZeroDivisionError(f"0 has no inverse mod {p}")
    return pow(c, -1, p)


class LaurentPoly:
    """Immutable sparse Laurent polynomial in canonical sorted form."""

    __slots__ = ("_terms", "modulus", "_hash")

    def __init__(
        self,
        terms: Union[Mapping[Monomial, int], Iterable[tuple[Monomial, int]]] = (),
        modulus: int = DEFAULT_MODULUS,
    ):
        check_modulus(modulus)
        acc: dict[Monomial, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for mono, c in items:
            mono = (int(mono[0]), int(mono[1]), int(mono[2]))
            acc[mono] = acc.get(mono, 0) + c
        self._init(acc, modulus)

    def _init(self, acc: dict[Monomial, int], modulus: int) -> None:
        self.modulus = modulus
        self._terms = tuple(
            (m, c % modulus) for m, c in sorted(acc.items()) if c % modulus
        )
        self._hash = None

    @classmethod
    def _raw(cls, acc: dict[Monomial, int], modulus: int) -> "LaurentPoly":
        obj = cls.__new__(cls)
        obj._init(acc, modulus)
        return obj

    # constructors

    @classmethod
    def zero(cls, modulus: int = DEFAULT_MODULUS) -> "LaurentPoly":
        return cls((), modulus)

    @classmethod
    def constant(cls, c: int, modulus: int = DEFAULT_MODULUS) -> "LaurentPoly":
        return cls({(0, 0, 0): c}, modulus)

    @classmethod
    def one(cls, modulus: int = DEFAULT_MODULUS) -> "LaurentPoly":
        return cls.constant(1, modulus)

    @classmethod
    def monomial(
        cls, i: int = 0, j: int = 0, k: int = 0, c: int = 1, modulus: int = DEFAULT_MODULUS
    ) -> "LaurentPoly":
        return cls({(i, j, k): c}, modulus)

    @classmethod
    def xyz(cls, m: int = 0, n: int = 0, k: int = 0, c: int = 1, modulus: int = DEFAULT_MODULUS) -> "LaurentPoly":
        """The monomial ``c * x^m * y^n * z^k``."""
        return cls.monomial(2 * m, 2 * n, k, c, modulus)

    # container protocol

    @property
    def terms(self) -> tuple[tuple[Monomial, int], ...]:
        return self._terms

    def __iter__(self) -> Iterator[tuple[Monomial, int]]:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def coefficient(self, mono: Monomial) -> int:
        for m, c in self._terms:
            if m == mono:
                return c
        return 0

    def monomials(self) -> list[Monomial]:
        return [m for m, _ in self._terms]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self == LaurentPoly.constant(other, self.modulus)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.modulus == other.modulus and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.modulus, self._terms))
        return self._hash

    def __getstate__(self):
        return (self._terms, self.modulus)

    def __setstate__(self, state) -> None:
        self._terms, self.modulus = state
        self._hash = None

    # arithmetic

    def _coerce(self, other: object) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            if other.modulus != self.modulus:
                raise ModulusMismatch(f"modulus {self.modulus} vs {other.modulus}")
            return other
        if isinstance(other, int):
            return LaurentPoly.constant(other, self.modulus)
        return NotImplemented

    def __add__(self, other: object) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        acc = dict(self._terms)
        for m, c in other._terms:
            acc[m] = acc.get(m, 0) + c
        return LaurentPoly._raw(acc, self.modulus)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._raw({m: -c for m, c in self._terms}, self.modulus)

    def __sub__(self, other: object) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: object) -> "LaurentPoly":
        return (-self) + other

    def __mul__(self, other: object) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        acc: dict[Monomial, int] = {}
        get = acc.get
        for (i1, j1, k1), c1 in self._terms:
            for (i2, j2, k2), c2 in other._terms:
                m = (i1 + i2, j1 + j2, k1 + k2)
                acc[m] = get(m, 0) + c1 * c2
        return LaurentPoly._raw(acc, self.modulus)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "LaurentPoly":
        if e < 0:
            return self.inverse() ** (-e)
        result = LaurentPoly.one(self.modulus)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def shift(self, i: int = 0, j: int = 0, k: int = 0) -> "LaurentPoly":
        """Multiply by the monomial v^i w^j z^k."""
        return LaurentPoly._raw(
            {(a + i, b + j, c + k): coeff for (a, b, c), coeff in self._terms}, self.modulus
        )

    def scale(self, c: int) -> "LaurentPoly":
        return LaurentPoly._raw({m: coeff * c for m, coeff in self._terms}, self.modulus)

    def is_monomial(self) -> bool:
        """True iff this is a unit of the Laurent ring: one term, nonzero coefficient."""
        return len(self._terms) == 1

    def inverse(self) -> "LaurentPoly":
        if not self.is_monomial():
            raise ZeroDivisionError(f"{self} is not a unit of the Laurent ring")
        (i, j, k), c = self._terms[0]
        return LaurentPoly._raw({(-i, -j, -k): inv_mod(c, self.modulus)}, self.modulus)

    def is_integral(self) -> bool:
        """True iff all v- and w-exponents are even (a genuine x, y, z polynomial)."""
        return all(i % 2 == 0 and j % 2 == 0 for (i, j, _), _c in self._terms)

    def act(self, g: "QElement | int") -> "LaurentPoly":
        """Apply the Klein four-group action by exponent negation."""
        si, sj, sk = _ACTION_SIGNS[int(g)]
        if si == sj == sk == 1:
            return self
        return LaurentPoly._raw(
            {(si * i, sj * j, sk * k): c for (i, j, k), c in self._terms}, self.modulus
        )

    def substitute(self, v_power: int = 1, w_power: int = 1, z_power: int = 1) -> "LaurentPoly":
        """Monomial substitution v -> v^v_power, w -> w^w_power, z -> z^z_power."""
        acc: dict[Monomial, int] = {}
        for (i, j, k), c in self._terms:
            m = (i * v_power, j * w_power, k * z_power)
            acc[m] = acc.get(m, 0) + c
        return LaurentPoly._raw(acc, self.modulus)

    def with_modulus(self, modulus: int) -> "LaurentPoly":
        return LaurentPoly(self._terms, modulus)

    def augmentation(self) -> int:
        return sum(c for _, c in self._terms) % self.modulus

    def drop_term(self, mono: Monomial) -> "LaurentPoly":
        return LaurentPoly._raw({m: c for m, c in self._terms if m != mono}, self.modulus)

    # text

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(format_term(m, c) for m, c in self._terms)

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r}, modulus={self.modulus})"


def _power(name: str, e: int) -> str:
    return name if e == 1 else f"{name}^{e}"


def format_term(mono: Monomial, c: int) -> str:
    """Canonical text of one term; even v/w exponents print as x/y powers."""
    i, j, k = mono
    factors = []
    if i:
        factors.append(_power("x", i // 2) if i % 2 == 0 else _power("v", i))
    if j:
        factors.append(_power("y", j // 2) if j % 2 == 0 else _power("w", j))
    if k:
        factors.append(_power("z", k))
    if not factors:
        return str(c)
    if c != 1:
        factors.insert(0, str(c))
    return "*".join(factors)


def poly_add(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    return f + g


def poly_mul(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    return f * g


def apply_action(f: LaurentPoly, g: "QElement | int") -> LaurentPoly:
    return f.act(g)


def poly_is_ring_unit(f: LaurentPoly) -> bool:
    return f.is_monomial()


def variables(modulus: int = DEFAULT_MODULUS) -> dict[str, LaurentPoly]:
    """The generators v, w, z and the sugar x = v^2, y = w^2."""
    mono = LaurentPoly.monomial
    return {
        "v": mono(1, 0, 0, modulus=modulus),
        "w": mono(0, 1, 0, modulus=modulus),
        "z": mono(0, 0, 1, modulus=modulus),
        "x": mono(2, 0, 0, modulus=modulus),
        "y": mono(0, 2, 0, modulus=modulus),
    }
