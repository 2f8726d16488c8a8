"""Equational descriptions of semilattice-ordered wBCK*-algebras and pocrigs."""
from __future__ import annotations

from .axioms import AxiomId, OrderedAlgebra, holds
from .errors import MissingOperation, NotJoinSemilattice, NotMeetSemilattice, WrongVariant
from .report import Report, Verdict
from .terms import (
    Law, arithmetical_identities, check_law, majority_lower, majority_upper,
    malcev_lower, malcev_upper, parse_law,
)

UPPER_LAWS = (
    parse_law("x <= (x -> y) -> y", "BCK2"),
    parse_law("1 -> x = x", "SREG"),
    parse_law("x -> (x \\/ y) = 1", "B1-UP"),
    parse_law("(x \\/ y) -> z <= y -> z", "B2-UP"),
)

LOWER_LAWS = (
    parse_law("x <= (x -> y) -> y", "BCK2"),
    parse_law("1 -> x = x", "SREG"),
    parse_law("(x /\\ y) -> y = 1", "B1-LOW"),
    parse_law("x -> z <= (x /\\ y) -> z", "B2-LOW"),
)

REGG_LAW = parse_law("x /\\ (x -> y) <= y", "REGG")

LOWER_IDENTITIES = arithmetical_identities(majority_lower, malcev_lower)
UPPER_IDENTITIES = arithmetical_identities(majority_upper, malcev_upper)

VARIANTS = ("lower-wbck", "upper-pocrig")


def law_verdict(A: OrderedAlgebra, law: Law) -> Verdict:
    w = check_law(A, law)
    return Verdict(law.name or str(law), w is None, w, law.var_names if w else ())


def _is_wbck(A: OrderedAlgebra) -> bool:
    return holds(A, AxiomId.LE_TO) and holds(A, AxiomId.W_EXCH)


def _laws_report(A: OrderedAlgebra, laws, tag: str) -> Report:
    report = Report([law_verdict(A, law) for law in laws])
    four = report.holds
    wbck = _is_wbck(A)
    report.add(Verdict(tag, four == wbck, note=f"laws={four} wbck={wbck}"))
    return report


def upper_laws_hold(A: OrderedAlgebra) -> bool:
    return all(check_law(A, law) is None for law in UPPER_LAWS)


def lower_laws_hold(A: OrderedAlgebra) -> bool:
    return all(check_law(A, law) is None for law in LOWER_LAWS)


def check_uppvar(A: OrderedAlgebra) -> Report:
    """The four join-based laws, and whether they agree with wBCK* membership."""
    A.require_imp()
    if not A.poset.flags.is_join_semilattice or A.unit is None:
        raise NotJoinSemilattice("needs a join-semilattice with unit")
    return _laws_report(A, UPPER_LAWS, "UPPVAR-EQUIV")


def check_lowvar(A: OrderedAlgebra) -> Report:
    """The four meet-based laws, agreement with wBCK*, and REG iff REGG when wBCK*."""
    A.require_imp()
    if not A.poset.flags.is_meet_semilattice or A.unit is None:
        raise NotMeetSemilattice("needs a meet-semilattice with unit")
    report = _laws_report(A, LOWER_LAWS, "LOWVAR-EQUIV")
    if _is_wbck(A):
        reg = holds(A, AxiomId.REG)
        regg = check_law(A, REGG_LAW) is None
        report.add(Verdict("REG-REGG", reg == regg, note=f"reg={reg} regg={regg}"))
    return report


def verify_arithmetical_terms(A: OrderedAlgebra, variant: str) -> Report:
    """Majority identities m(x,x,y)=m(x,y,x)=m(y,x,x)=x and Mal'cev p(x,y,y)=x=p(y,y,x)."""
    if variant not in VARIANTS:
        raise WrongVariant(f"variant must be one of {VARIANTS}, got {variant!r}")
    A.require_imp()
    flags = A.poset.flags
    if variant == "lower-wbck":
        if not flags.is_meet_semilattice:
            raise NotMeetSemilattice("lower terms need all meets")
        laws = LOWER_IDENTITIES
    else:
        if A.mul is None:
            raise MissingOperation("upper terms need a product")
        if not flags.is_join_semilattice:
            raise NotJoinSemilattice("upper terms need all joins")
        laws = UPPER_IDENTITIES
    return Report([law_verdict(A, law) for law in laws])
