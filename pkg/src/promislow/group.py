"""The Hantzsche-Wendt group P as an extension of Z^3 by the Klein four-group.

Elements are kept in the normal form ``x^m y^n z^k s(g)`` where ``s`` is the
section Q -> P with image {1, a, b, ab}.  Multiplication uses the exponent
action of Q on Z^3 together with the cocycle ``f(g, h) = s(g) s(h) s(gh)^-1``.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from enum import IntEnum
from functools import lru_cache

Lattice = tuple[int, int, int]


class QElement(IntEnum):
    """Klein four-group Z/2 x Z/2; bit 1 is the a-part, bit 2 the b-part."""

    ONE = 0
    A = 1
    B = 2
    AB = 3

    def __mul__(self, other: "QElement") -> "QElement":  # type: ignore[override]
        return QElement(int(self) ^ int(other))

    @property
    def label(self) -> str:
        return ("1", "a", "b", "ab")[self]

    @classmethod
    def from_label(cls, label: str) -> "QElement":
        try:
            return cls(("1", "a", "b", "ab").index(label))
        except ValueError:
            raise ValueError(f"not an element of Q: {label!r}") from None


Q = tuple(QElement)

# sign pattern of (x, y, z) exponents under conjugation by a, b, ab
ACTION = {
    QElement.ONE: (1, 1, 1),
    QElement.A: (1, -1, -1),
    QElement.B: (-1, 1, -1),
    QElement.AB: (-1, -1, 1),
}

_1, _A, _B, _AB = Q
# f(g, h) as (x, y, z) exponents, rows g, columns h
COCYCLE: dict[tuple[QElement, QElement], Lattice] = {
    (_1, _1): (0, 0, 0), (_1, _A): (0, 0, 0), (_1, _B): (0, 0, 0), (_1, _AB): (0, 0, 0),
    (_A, _1): (0, 0, 0), (_A, _A): (1, 0, 0), (_A, _B): (0, 0, 0), (_A, _AB): (1, 0, 0),
    (_B, _1): (0, 0, 0), (_B, _A): (-1, 1, -1), (_B, _B): (0, 1, 0), (_B, _AB): (-1, 0, -1),
    (_AB, _1): (0, 0, 0), (_AB, _A): (0, -1, 1), (_AB, _B): (0, -1, 0), (_AB, _AB): (0, 0, 1),
}


def act_lattice(g: QElement, u: Lattice) -> Lattice:
    sx, sy, sz = ACTION[g]
    return (sx * u[0], sy * u[1], sz * u[2])


def _format_lattice(m: int, n: int, k: int) -> list[str]:
    out = []
    for name, e in (("x", m), ("y", n), ("z", k)):
        if e:
            out.append(name if e == 1 else f"{name}^{e}")
    return out


@dataclass(frozen=True)
class PElement:
    """``x^m y^n z^k s(g)`` in normal form."""

    m: int = 0
    n: int = 0
    k: int = 0
    g: QElement = QElement.ONE

    @property
    def lattice(self) -> Lattice:
        return (self.m, self.n, self.k)

    def __mul__(self, other: "PElement") -> "PElement":
        g, h = self.g, other.g
        um, un, uk = act_lattice(g, other.lattice)
        fm, fn, fk = COCYCLE[g, h]
        return PElement(self.m + um + fm, self.n + un + fn, self.k + uk + fk, g * h)

    def inverse(self) -> "PElement":
        # (u, g)^-1 = (-(g . (u + f(g, g))), g) since Q acts by involutions
        fm, fn, fk = COCYCLE[self.g, self.g]
        m, n, k = act_lattice(self.g, (self.m + fm, self.n + fn, self.k + fk))
        return PElement(-m, -n, -k, self.g)

    def __pow__(self, e: int) -> "PElement":
        base = self if e >= 0 else self.inverse()
        result = IDENTITY
        for _ in range(abs(e)):
            result = result * base
        return result

    def is_identity(self) -> bool:
        return self == IDENTITY

    def sort_key(self) -> tuple[int, int, int, int]:
        return (int(self.g), self.m, self.n, self.k)

    def __str__(self) -> str:
        parts = _format_lattice(self.m, self.n, self.k)
        if self.g != QElement.ONE:
            parts.append(self.g.label)
        return "*".join(parts) if parts else "1"

    @classmethod
    def parse(cls, text: str) -> "PElement":
        """Parse ``x^m*y^n*z^k*g``; any factor may be omitted, g in {1, a, b, ab}."""
        m = n = k = 0
        g = QElement.ONE
        text = text.strip()
        if not text:
            raise ValueError("empty group element")
        seen = set()
        for factor in text.split("*"):
            factor = factor.strip()
            match = re.fullmatch(r"([xyz])(?:\^\(?(-?\d+)\)?)?", factor)
            if match:
                name, exp = match.group(1), int(match.group(2) or 1)
                if name in seen or "g" in seen:
                    raise ValueError(f"factor {factor!r} out of normal-form order in {text!r}")
                seen.add(name)
                if name == "x":
                    m = exp
                elif name == "y":
                    n = exp
                else:
                    k = exp
            elif factor in ("1", "a", "b", "ab"):
                if "g" in seen:
                    raise ValueError(f"repeated Q part in {text!r}")
                seen.add("g")
                g = QElement.from_label(factor)
            else:
                raise ValueError(f"bad factor {factor!r} in group element {text!r}")
        return cls(m, n, k, g)


IDENTITY = PElement()
GEN_A = PElement(g=QElement.A)
GEN_B = PElement(g=QElement.B)
GEN_X = PElement(1, 0, 0)
GEN_Y = PElement(0, 1, 0)
GEN_Z = PElement(0, 0, 1)


def section(g: QElement) -> PElement:
    return PElement(g=g)


def p_mul(e1: PElement, e2: PElement) -> PElement:
    return e1 * e2


def p_inv(e: PElement) -> PElement:
    return e.inverse()


class BadLetter(ValueError):
    pass


_LETTERS = {"a": GEN_A, "b": GEN_B, "A": GEN_A.inverse(), "B": GEN_B.inverse()}


def parse_word(word: str) -> PElement:
    """Evaluate a word in a, b and their inverses A, B."""
    result = IDENTITY
    for pos, letter in enumerate(word):
        try:
            result = result * _LETTERS[letter]
        except KeyError:
            raise BadLetter(f"bad letter {letter!r} at position {pos} in {word!r}") from None
    return result


# infinite dihedral group


@dataclass(frozen=True)
class DElement:
    """``t^n`` or ``t^n * bbar`` in D_inf = <t, bbar | bbar^2 = 1, t^bbar = t^-1>."""

    n: int = 0
    flip: bool = False

    def __mul__(self, other: "DElement") -> "DElement":
        n = self.n - other.n if self.flip else self.n + other.n
        return DElement(n, self.flip != other.flip)

    def inverse(self) -> "DElement":
        return self if self.flip else DElement(-self.n)

    def __pow__(self, e: int) -> "DElement":
        base = self if e >= 0 else self.inverse()
        result = D_IDENTITY
        for _ in range(abs(e)):
            result = result * base
        return result

    def __str__(self) -> str:
        parts = []
        if self.n:
            parts.append("t" if self.n == 1 else f"t^{self.n}")
        if self.flip:
            parts.append("b")
        return "*".join(parts) if parts else "1"


D_IDENTITY = DElement()
T = DElement(1)
BBAR = DElement(0, True)

_SECTION_IMAGE = {
    QElement.ONE: D_IDENTITY,
    QElement.A: T,
    QElement.B: BBAR,
    QElement.AB: T * BBAR,
}


def project_dihedral(e: PElement) -> DElement:
    """a -> t, b -> bbar; hence x -> t^2 and y, z -> 1."""
    return DElement(2 * e.m) * _SECTION_IMAGE[e.g]


# word length in D_inf

REFLECTIONS = (BBAR, T * BBAR)
ROTATION_AND_FLIP = (T, T.inverse(), BBAR)
GENERATING_SETS = {"reflections": REFLECTIONS, "ab": ROTATION_AND_FLIP}


def bfs_word_length(d: DElement, generators: tuple[DElement, ...] = REFLECTIONS) -> int:
    """Geodesic length by breadth-first search over the Cayley graph."""
    seen = {D_IDENTITY: 0}
    frontier = deque([D_IDENTITY])
    while frontier:
        cur = frontier.popleft()
        if cur == d:
            return seen[cur]
        for s in generators:
            nxt = cur * s
            if nxt not in seen:
                seen[nxt] = seen[cur] + 1
                frontier.append(nxt)
    raise AssertionError("unreachable: D_inf is generated by either set")


@lru_cache(maxsize=None)
def dihedral_word_length(d: DElement, generators: str = "reflections") -> int:
    """Word length of ``d`` w.r.t. {bbar, t*bbar} (default) or {t, bbar} ("ab").

    Closed forms; agreement with :func:`bfs_word_length` is covered by tests.
    """
    n = d.n
    if generators == "reflections":
        if not d.flip:
            return 2 * abs(n)
        return 2 * n - 1 if n >= 1 else 2 * abs(n) + 1
    if generators == "ab":
        return abs(n) + int(d.flip)
    raise ValueError(f"unknown generating set {generators!r}")
