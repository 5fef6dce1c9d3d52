"""Regular 4x4 embedding of K[P] over K[x^±1, y^±1, z^±1] and unit decisions.

K[P] is treated as a right K[Z^3]-module with basis s(1), s(a), s(b), s(ab).
Left multiplication by alpha is right-linear; its matrix has, in column h, the
right-coordinates of ``alpha * s(h)``.  A left coefficient c at s(g) becomes
the right coordinate c^g, because ``c s(g) = s(g) c^g``.
"""

from __future__ import annotations

from itertools import combinations
from typing import Optional

from .algebra import LaurentPoly
from .group import QElement, section
from .groupring import RingElemP, ZeroElement
from .units import UnitCertificate

BASIS = tuple(QElement)

Mat4 = tuple[tuple[LaurentPoly, ...], ...]


class InverseOutsideImage(ArithmeticError):
    """The adjugate inverse did not round-trip to a two-sided inverse in K[P]."""


def embed(alpha: RingElemP) -> Mat4:
    columns = []
    for h in BASIS:
        prod = alpha * RingElemP.from_group(section(h), modulus=alpha.modulus)
        columns.append([prod.component(g).act(g) for g in BASIS])
    return tuple(tuple(columns[c][r] for c in range(4)) for r in range(4))


def unembed_column(col: list[LaurentPoly]) -> RingElemP:
    """Map right-coordinates back to the left-coefficient normal form."""
    return RingElemP(*(c.act(g) for g, c in zip(BASIS, col)))


def identity(modulus: int = 2) -> Mat4:
    one, zero = LaurentPoly.one(modulus), LaurentPoly.zero(modulus)
    return tuple(tuple(one if r == c else zero for c in range(4)) for r in range(4))


def mat_mul(m1: Mat4, m2: Mat4) -> Mat4:
    n = len(m1)
    out = []
    for r in range(n):
        row = []
        for c in range(n):
            acc = m1[r][0] * m2[0][c]
            for k in range(1, n):
                acc = acc + m1[r][k] * m2[k][c]
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def _det(m, rows: tuple[int, ...], cols: tuple[int, ...]) -> LaurentPoly:
    """Determinant of the minor on ``rows`` x ``cols`` by Laplace expansion."""
    if len(rows) == 1:
        return m[rows[0]][cols[0]]
    if len(rows) == 2:
        (r0, r1), (c0, c1) = rows, cols
        return m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0]
    acc = None
    for idx, c in enumerate(cols):
        entry = m[rows[0]][c]
        if not entry:
            continue
        minor = _det(m, rows[1:], cols[:idx] + cols[idx + 1:])
        term = entry * minor if idx % 2 == 0 else -(entry * minor)
        acc = term if acc is None else acc + term
    return acc if acc is not None else LaurentPoly.zero(m[0][0].modulus)


def det4(m: Mat4) -> LaurentPoly:
    """Exact determinant via the Laplace expansion along the first two rows."""
    acc = LaurentPoly.zero(m[0][0].modulus)
    for cols in combinations(range(4), 2):
        rest = tuple(c for c in range(4) if c not in cols)
        top = _det(m, (0, 1), cols)
        if not top:
            continue
        # sign of the permutation (rows 0,1 -> cols) with complementary minor
        sign = (-1) ** (cols[0] + cols[1] + 1)
        term = top * _det(m, (2, 3), rest)
        acc = acc + (term if sign > 0 else -term)
    return acc


def adjugate(m: Mat4) -> Mat4:
    n = len(m)
    out = [[None] * n for _ in range(n)]
    for r in range(n):
        for c in range(n):
            rows = tuple(i for i in range(n) if i != r)
            cols = tuple(j for j in range(n) if j != c)
            cof = _det(m, rows, cols)
            # adj is the transposed cofactor matrix
            out[c][r] = cof if (r + c) % 2 == 0 else -cof
    return tuple(tuple(row) for row in out)


def decide_unit(alpha: RingElemP) -> Optional[UnitCertificate]:
    """Return a verified certificate if alpha is a unit, else None.

    alpha is a unit iff det(embed(alpha)) is a unit of the Laurent ring; the
    inverse is read off the first column of adj/det and verified both ways.
    """
    if not alpha:
        raise ZeroElement("0 is not a unit")
    m = embed(alpha)
    d = det4(m)
    if not d.is_monomial():
        return None
    dinv = d.inverse()
    adj = adjugate(m)
    col = [adj[r][0] * dinv for r in range(4)]
    try:
        inv = unembed_column(col)
    except ValueError as exc:
        raise InverseOutsideImage(str(exc)) from exc
    cert = UnitCertificate.checked(alpha, inv, "adjugate")
    if not cert.verified:
        raise InverseOutsideImage(f"adjugate inverse of {alpha} failed verification")
    return cert
