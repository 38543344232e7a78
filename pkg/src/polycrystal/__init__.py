"""Polyhedral realization of B(infinity) with its bicrystal structure for types A, B, D."""

from .bicrystal import apply_word, e, epsilon, epsilon_star, f, jump, phi, select, sums
from .cartan import CartanType, cartan_matrix, convex_order, index_domain, positive_roots
from .diamond import diamond, diamond_sum
from .extended import E_hat, ExtendedElement, F_hat, eps_hat, select_hat, sigma_hat, weight_hat
from .lattice import CrystalElement, LinearForm, highest, is_member, make_element, parse_tuple, weight
from .pbw import PbwDatum, parse_pbw, pbw_to_polyhedral, polyhedral_to_pbw
from .tableaux import Partition, partial, partial_star, partition_family, tableau
from .verify import EnumerationSpec, SuiteReport, enumerate_elements, kostant_count, run_suite

__version__ = "0.1.0"

__all__ = [
    "CartanType", "CrystalElement", "E_hat", "EnumerationSpec", "ExtendedElement", "F_hat",
    "LinearForm", "Partition", "PbwDatum", "SuiteReport", "apply_word", "cartan_matrix",
    "convex_order", "diamond", "diamond_sum", "e", "enumerate_elements", "eps_hat", "epsilon",
    "epsilon_star", "f", "highest", "index_domain", "is_member", "jump", "kostant_count",
    "make_element", "parse_pbw", "parse_tuple", "partial", "partial_star", "partition_family",
    "pbw_to_polyhedral", "phi", "polyhedral_to_pbw", "positive_roots", "run_suite", "select",
    "select_hat", "sigma_hat", "sums", "tableau", "weight", "weight_hat",
]
