"""Exit criteria for the library, runnable from pytest and from ``promislow selftest``.

Each criterion returns ``(passed, detail)``; nothing here is tolerance-tuned,
every check is exact.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from itertools import product
from typing import Callable

from .analysis import FIXED, SearchSpec, check_free_product_words, mirowicz_e, search_units, unique_products
from .expr import parse_ring_element
from .group import (
    BBAR, GEN_A, GEN_B, IDENTITY, Q, T, PElement, QElement, parse_word, section,
)
from .groupring import (
    RingElemD, RingElemP, random_ring_element, ring_project, rp_mul, rp_mul_convolution, translate,
)
from .matembed import decide_unit, det4, embed
from .units import check_lemma_criterion, counterexample, family_alpha, unit_quadruple


@dataclass(frozen=True)
class Criterion:
    number: int
    name: str
    check: Callable[[], tuple[bool, str]]


def displayed_alpha_k(k: int) -> str:
    """alpha_k transcribed from its closed form, in the expression grammar."""
    return (
        f"(x^{-k} + x^{k + 1})*(1 + y)*(1 + z^-1)"
        f" + (x^{-2 * k - 1}*y^-1 + x^{2 * k + 1} + (y^-1 + 1)*z)*a"
        f" + (x^{-k} + x^{k + 1} + (x^{-k}*y^-1 + x^{k + 1}*y)*z)*b"
        f" + (1 + (x^{-2 * k - 1} + x^{2 * k + 1} + y^-1 + y)*z^-1)*ab"
    )


def c01_counterexample() -> tuple[bool, str]:
    start = time.perf_counter()
    cert = counterexample.__wrapped__()
    one = RingElemP.one(2)
    left = rp_mul(cert.alpha_inv, cert.alpha) == one
    right = rp_mul(cert.alpha, cert.alpha_inv) == one
    elapsed = time.perf_counter() - start
    return left and right and elapsed < 1.0, f"left={left} right={right} time={elapsed:.3f}s"


def c02_support_sizes() -> tuple[bool, str]:
    cert = counterexample()
    a, b = len(cert.alpha.support()), len(cert.alpha_inv.support())
    return a == 21 and b == 21, f"|supp alpha|={a} |supp alpha'|={b}"


def c03_lemma_criterion() -> tuple[bool, str]:
    sq = unit_quadruple()
    base = check_lemma_criterion(sq)
    mutants = caught = 0
    for idx, poly in enumerate(sq.polys):
        for mono in poly.monomials():
            polys = list(sq.polys)
            polys[idx] = poly.drop_term(mono)
            mutants += 1
            caught += not check_lemma_criterion(type(sq)(*polys)).ok
    ok = base.ok and mutants == 21 and caught == 21
    return ok, f"base={base} mutants={mutants} caught={caught}"


def c04_determinant() -> tuple[bool, str]:
    cert = counterexample()
    d = det4(embed(cert.alpha))
    decided = decide_unit(cert.alpha)
    same_inverse = decided is not None and decided.alpha_inv == cert.alpha_inv
    d_non = det4(embed(parse_ring_element("1 + x")))
    ok = d.is_monomial() and same_inverse and not d_non.is_monomial()
    return ok, f"det(alpha)={d} adjugate inverse matches={same_inverse} det(1+x)={d_non}"


def c05_family() -> tuple[bool, str]:
    start = time.perf_counter()
    bad = []
    for k in range(5):
        cert = family_alpha.__wrapped__(k)
        printed = str(parse_ring_element(displayed_alpha_k(k)))
        if not cert.verified or str(cert.alpha) != printed:
            bad.append(k)
    elapsed = time.perf_counter() - start
    return not bad and elapsed < 5.0, f"failing k={bad} time={elapsed:.3f}s"


def c06_projection() -> tuple[bool, str]:
    bad = [
        k for k in range(5)
        if ring_project(translate(GEN_A.inverse(), family_alpha(k).alpha, GEN_B)) != mirowicz_e(4 * k + 2, 0)
    ]
    return not bad, f"failing k={bad}"


def c07_mirowicz() -> tuple[bool, str]:
    one = RingElemD.one(2)
    checks = failures = 0
    for i, j in product(range(1, 7), range(-6, 7)):
        e = mirowicz_e(i, j)
        for ok in (e * e == one, e.conjugate(BBAR) == mirowicz_e(i, -j), e.conjugate(T) == mirowicz_e(i, j - 2)):
            checks += 1
            failures += not ok
    return failures == 0, f"{checks} relation checks, {failures} failures"


def c08_free_product() -> tuple[bool, str]:
    start = time.perf_counter()
    gens = [mirowicz_e(2, 2), mirowicz_e(2, 0), mirowicz_e(2, -2)]
    report = check_free_product_words(gens, 8)
    elapsed = time.perf_counter() - start
    ok = report.all_nontrivial and report.all_distinct and report.count == 765 and elapsed < 10.0
    return ok, f"{report.count} words nontrivial={report.all_nontrivial} distinct={report.all_distinct} time={elapsed:.3f}s"


def c09_oracle() -> tuple[bool, str]:
    mismatches = 0
    for modulus in (2, 3):
        rng = random.Random(9000 + modulus)
        for _ in range(200):
            f = random_ring_element(rng, modulus)
            g = random_ring_element(rng, modulus)
            mismatches += rp_mul(f, g) != rp_mul_convolution(f, g)
    return mismatches == 0, f"400 pairs over F_2 and F_3, {mismatches} mismatches"


def c10_group_table() -> tuple[bool, str]:
    x, y, z = PElement(1, 0, 0), PElement(0, 1, 0), PElement(0, 0, 1)
    facts = {
        "a^2=x": parse_word("aa") == x,
        "b^2=y": parse_word("bb") == y,
        "(ab)^2=z": parse_word("abab") == z,
        "b^-1a^2b*a^2=1": parse_word("Baab") * parse_word("aa") == IDENTITY,
        "a^-1b^2a*b^2=1": parse_word("Abba") * parse_word("bb") == IDENTITY,
        "bab^-1a^-1": parse_word("baBA") == PElement(-1, 1, -1),
    }
    bracketings = sum(
        (section(g) * section(h)) * section(k) == section(g) * (section(h) * section(k))
        for g, h, k in product(Q, repeat=3)
    )
    ok = all(facts.values()) and bracketings == 64
    return ok, f"failed={[n for n, v in facts.items() if not v]} bracketings={bracketings}/64"


def c11_unique_products() -> tuple[bool, str]:
    cert = counterexample()
    report = unique_products(cert.alpha.support(), cert.alpha_inv.support())
    odd_off = [e for e, c in report.entries.items() if e != IDENTITY and c % 2]
    ident = report.entries.get(IDENTITY, 0)
    unique = [e for e in report.unique_elements if e != IDENTITY]
    ok = not odd_off and ident % 2 == 1 and not unique
    return ok, f"identity multiplicity={ident} odd off-identity={len(odd_off)} unique={len(unique)}"


def c12_not_self_inverse() -> tuple[bool, str]:
    alpha = counterexample().alpha
    square = rp_mul(alpha, alpha)
    return square != RingElemP.one(2), f"|supp alpha^2|={len(square)}"


def c13_search() -> tuple[bool, str]:
    start = time.perf_counter()
    found = search_units(SearchSpec(max_support=2, box=1, modulus=2))
    elapsed = time.perf_counter() - start
    alpha = counterexample().alpha
    supp = tuple(alpha.support())
    recovered = search_units(SearchSpec(mode=FIXED, support=supp, weight=len(supp)))
    ok = not found and elapsed < 60.0 and [c.alpha for c in recovered] == [alpha]
    return ok, f"box search found={len(found)} in {elapsed:.2f}s; fixed-support recovered={len(recovered)}"


def c14_torsion() -> tuple[bool, str]:
    r = range(-2, 3)
    elems = [PElement(m, n, k, g) for g in QElement for m in r for n in r for k in r]
    elems = [e for e in elems if e != IDENTITY]
    torsion = [e for e in elems if (e * e).is_identity()]
    return not torsion and len(elems) == 499, f"{len(elems)} elements, {len(torsion)} with g^2=1"


CRITERIA = [
    Criterion(1, "counterexample verifies both ways", c01_counterexample),
    Criterion(2, "support sizes 21/21", c02_support_sizes),
    Criterion(3, "lemma criterion and 21-way mutation sweep", c03_lemma_criterion),
    Criterion(4, "determinant condition and adjugate inverse", c04_determinant),
    Criterion(5, "alpha_k family verifies and matches closed form", c05_family),
    Criterion(6, "projection a^-1 alpha_k b -> e_{4k+2,0}", c06_projection),
    Criterion(7, "Mirowicz relations", c07_mirowicz),
    Criterion(8, "free-product witness words", c08_free_product),
    Criterion(9, "structured product equals convolution oracle", c09_oracle),
    Criterion(10, "group table fidelity and cocycle consistency", c10_group_table),
    Criterion(11, "unique-products census", c11_unique_products),
    Criterion(12, "counterexample is not self-inverse", c12_not_self_inverse),
    Criterion(13, "bounded search", c13_search),
    Criterion(14, "torsion shadow", c14_torsion),
]


def run_all(echo: Callable[[str], None] = print) -> bool:
    all_ok = True
    for crit in CRITERIA:
        ok, detail = crit.check()
        all_ok &= ok
        echo(f"[{'PASS' if ok else 'FAIL'}] {crit.number:2d} {crit.name}: {detail}")
    return all_ok


__all__ = ["CRITERIA", "Criterion", "displayed_alpha_k", "run_all"]
