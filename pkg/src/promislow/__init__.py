"""Exact arithmetic in group rings of the Hantzsche-Wendt group and its non-trivial units."""

__version__ = "0.1.0"

from .algebra import LaurentPoly, ModulusMismatch, apply_action, poly_add, poly_is_ring_unit, poly_mul
from .group import DElement, PElement, QElement, dihedral_word_length, p_inv, p_mul, parse_word, project_dihedral
from .groupring import (
    RingElemD, RingElemP, augmentation, conjugate, is_trivial_unit, rd_mul, ring_project, rp_mul,
    rp_mul_convolution, support, translate,
)
from .units import (
    SymmetricQuadruple, UnitCertificate, build_unit_from_symmetric, check_lemma_criterion,
    counterexample, family_alpha,
)
from .matembed import decide_unit, det4, embed
from .analysis import (
    SearchSpec, check_free_product_words, length_L, mirowicz_e, search_units, unique_products,
)
from .expr import parse_ring_element
