"""Unit-group analysis: Mirowicz units of F_2[D_inf], free-product witnesses,
unique-product census, the dihedral length proxy and bounded unit search."""

from __future__ import annotations

import logging
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, islice, product
from math import comb
from typing import Callable, Iterable, Iterator, Optional, Sequence

from .group import BBAR, D_IDENTITY, T, DElement, PElement, QElement, dihedral_word_length
from .groupring import RingElemD, RingElemP, ZeroElement
from .matembed import decide_unit
from .units import UnitCertificate

log = logging.getLogger(__name__)


class BadIndex(ValueError):
    pass


class NotInvolution(ValueError):
    pass


class EmptyInput(ValueError):
    pass


class BudgetExceeded(RuntimeError):
    def __init__(self, cardinality: int, budget: int):
        super().__init__(f"search space has {cardinality} candidates, budget is {budget}")
        self.cardinality = cardinality
        self.budget = budget


def mirowicz_e(i: int, j: int, modulus: int = 2) -> RingElemD:
    """e_ij = t^-i + 1 + t^i + t^j (t^-i + t^i) bbar."""
    if i < 1:
        raise BadIndex(f"i must be positive, got {i}")
    return RingElemD.from_exponents({-i: 1, 0: 1, i: 1}, {j - i: 1, j + i: 1}, modulus)


@dataclass(frozen=True)
class FreeWordReport:
    all_nontrivial: bool
    all_distinct: bool
    count: int
    collision: Optional[tuple[tuple[int, ...], tuple[int, ...]]] = None


def check_free_product_words(gens: Sequence[RingElemD], max_len: int) -> FreeWordReport:
    """Evaluate every reduced word of length 1..max_len in involutive generators.

    Reduced means no letter repeats consecutively.  The empty word takes part
    in the distinctness check, so a nonempty word equal to 1 is a collision.
    """
    if not gens:
        raise EmptyInput("no generators")
    one = RingElemD.one(gens[0].modulus)
    for idx, g in enumerate(gens):
        if g * g != one:
            raise NotInvolution(f"generator {idx} does not square to 1")
    seen: dict[RingElemD, tuple[int, ...]] = {one: ()}
    nontrivial = True
    collision = None
    count = 0
    frontier = [((), one)]
    for _ in range(max_len):
        nxt = []
        for word, value in frontier:
            for idx, g in enumerate(gens):
                if word and word[-1] == idx:
                    continue
                w, val = word + (idx,), value * g
                count += 1
                if val == one:
                    nontrivial = False
                if val in seen:
                    collision = collision or (seen[val], w)
                else:
                    seen[val] = w
                nxt.append((w, val))
        frontier = nxt
    return FreeWordReport(nontrivial, collision is None, count, collision)


@dataclass(frozen=True)
class MultiplicityReport:
    entries: dict[PElement, int]
    unique_elements: list[PElement]

    @property
    def total(self) -> int:
        return sum(self.entries.values())


def unique_products(A: Iterable[PElement], B: Iterable[PElement]) -> MultiplicityReport:
    A, B = list(dict.fromkeys(A)), list(dict.fromkeys(B))
    if not A or not B:
        raise EmptyInput("A and B must be non-empty")
    counts = Counter(a * b for a in A for b in B)
    keys = sorted(counts, key=PElement.sort_key)
    return MultiplicityReport(
        {e: counts[e] for e in keys}, [e for e in keys if counts[e] == 1]
    )


# quotient by the normal closure of x, y: a -> t*bbar, b -> bbar, so z -> t^2
_QUOTIENT_IMAGE = {
    QElement.ONE: D_IDENTITY,
    QElement.A: T * BBAR,
    QElement.B: BBAR,
    QElement.AB: T,
}


def quotient_xy(e: PElement) -> DElement:
    return DElement(2 * e.k) * _QUOTIENT_IMAGE[e.g]


def length_L(alpha: RingElemP, generators: str = "reflections") -> int:
    """Max word length of the support's images in P / <<x, y>> ~ Z/2 * Z/2.

    A stand-in for the length used in the literature on this group; with the
    default generators it is word length in the images of a and b.
    """
    if not alpha:
        raise ZeroElement("length of 0 is undefined")
    return max(dihedral_word_length(quotient_xy(e), generators) for e in alpha.support())


# bounded exhaustive search

ENUMERATE = "enumerate-supports"
FIXED = "coefficients-on-fixed-support"
DEFAULT_BUDGET = 1_000_000


@dataclass(frozen=True)
class SearchSpec:
    max_support: int = 2
    box: int = 1
    modulus: int = 2
    mode: str = ENUMERATE
    support: tuple[PElement, ...] = ()
    weight: Optional[int] = None
    budget: int = DEFAULT_BUDGET

    def __post_init__(self):
        if self.mode not in (ENUMERATE, FIXED):
            raise ValueError(f"unknown search mode {self.mode!r}")
        if self.mode == FIXED and not self.support:
            raise ValueError("fixed-support mode needs a support")

    def box_elements(self) -> list[PElement]:
        """The box with the identity first, then in sort-key order."""
        r = range(-self.box, self.box + 1)
        elems = [PElement(m, n, k, g) for g in QElement for m in r for n in r for k in r]
        elems.remove(PElement())
        return [PElement()] + elems

    def _weights(self) -> list[int]:
        n = len(self.support)
        return [self.weight] if self.weight is not None else list(range(1, n + 1))

    def cardinality(self) -> int:
        p1 = self.modulus - 1
        if self.mode == ENUMERATE:
            rest = (2 * self.box + 1) ** 3 * 4 - 1
            return sum(comb(rest, s - 1) * p1 ** (s - 1) for s in range(1, self.max_support + 1))
        n = len(self.support)
        return sum(comb(n, w) * p1**w for w in self._weights())

    def candidates(self) -> Iterator[RingElemP]:
        """Deterministic candidate stream.

        Supports are normalized to contain the identity with coefficient 1,
        which removes left translates and scalar multiples.
        """
        p = self.modulus
        if self.mode == ENUMERATE:
            ident, *rest = self.box_elements()
            for size in range(1, self.max_support + 1):
                for others in combinations(rest, size - 1):
                    for coeffs in product(range(1, p), repeat=size - 1):
                        terms = [(ident, 1)] + list(zip(others, coeffs))
                        yield RingElemP.from_terms(terms, p)
        else:
            supp = self.support
            for w in self._weights():
                for positions in combinations(range(len(supp)), w):
                    for coeffs in product(range(1, p), repeat=w):
                        yield RingElemP.from_terms(
                            [(supp[i], c) for i, c in zip(positions, coeffs)], p
                        )


def _search_chunk(spec: SearchSpec, start: int, stop: int) -> list[tuple[int, UnitCertificate]]:
    found = []
    for idx, cand in enumerate(islice(spec.candidates(), start, stop), start):
        if cand.is_trivial_unit():
            continue
        cert = decide_unit(cand)
        if cert is not None:
            found.append((idx, cert))
    return found


def search_units(
    spec: SearchSpec,
    workers: int = 1,
    chunk_size: int = 2000,
    progress: Optional[Callable[[int, int], None]] = None,
) -> list[UnitCertificate]:
    """Exhaustively decide every candidate; return the non-trivial units found.

    The candidate stream is cut into fixed index ranges, so the result does
    not depend on ``workers`` or on scheduling.
    """
    total = spec.cardinality()
    if total > spec.budget:
        raise BudgetExceeded(total, spec.budget)
    chunks = [(s, min(s + chunk_size, total)) for s in range(0, total, chunk_size)]
    results: list[tuple[int, UnitCertificate]] = []
    done = 0
    if workers <= 1:
        for start, stop in chunks:
            results.extend(_search_chunk(spec, start, stop))
            done += stop - start
            if progress:
                progress(done, total)
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(_search_chunk, spec, s, e) for s, e in chunks]
            for (start, stop), fut in zip(chunks, futures):
                results.extend(fut.result())
                done += stop - start
                if progress:
                    progress(done, total)
    results.sort(key=lambda pair: pair[0])
    log.info("searched %d candidates, %d non-trivial units", total, len(results))
    return [cert for _, cert in results]


def parse_search_spec(text: str) -> SearchSpec:
    """Read ``key = value`` lines; ``#`` starts a comment.

    Keys: max_support, box, modulus, mode, weight, budget and support (a
    comma-separated list of group elements, or ``counterexample``).
    """
    kwargs: dict = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"line {lineno}: expected 'key = value'")
        key, value = (part.strip() for part in line.split("=", 1))
        if key in ("max_support", "box", "modulus", "weight", "budget"):
            kwargs[key] = int(value)
        elif key == "mode":
            kwargs[key] = value
        elif key == "support":
            if value == "counterexample":
                from .units import counterexample

                kwargs[key] = tuple(counterexample().alpha.support())
            else:
                kwargs[key] = tuple(PElement.parse(s) for s in value.split(",") if s.strip())
        else:
            raise ValueError(f"line {lineno}: unknown key {key!r}")
    return SearchSpec(**kwargs)
