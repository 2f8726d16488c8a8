"""Finite ordered-algebra workbench for implication algebras on posets.

Posets are enumerated up to isomorphism, implication tables are searched
exhaustively under axiom constraints, and laws are checked structure by
structure with explicit witnesses.
"""
from .adjunction import (
    check_adjunction, check_condition_s, check_idempotent_pocrig, check_mult_semilattice,
    check_theorem_dual, classify_groupoid, condition_s, condition_s_product, enumerate_pocrigs,
    is_adjunction,
    is_pocrig, is_pocrim,
)
from .axioms import (
    AxiomId, OrderedAlgebra, check_axiom, check_axioms, check_derived_laws, check_le_to,
    check_max_form, classify, enumerate_imp_tables, subalgebras,
)
from .errors import BoundExceeded, InputError, PreconditionViolation, WorkbenchError
from .hunt import HuntResult, hunt
from .poset import Poset, canonical_code, count_posets, enumerate_posets
from .report import Report, Verdict
from .search import enumerate_tables
from .sectional import (
    check_L1, derive_j_implication, derive_m_implication, is_sectionally_pseudocomplemented,
    sectional_pc, star_table,
)
from .structfile import StructureFile, load, parse, serialize
from .tables import OpTable, PartialOpTable
from .terms import Law, check_law, eval_term, parse_law, parse_term
from .varieties import check_lowvar, check_uppvar, verify_arithmetical_terms

__version__ = "0.1.0"
