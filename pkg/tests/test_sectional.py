import itertools

import pytest
from hypothesis import given

from strategies import posets
from wbcklab.axioms import AxiomId, OrderedAlgebra, check_axioms
from wbcklab.errors import NotJoinSemilattice, NotSectionallyPC, PreconditionViolation
from wbcklab.poset import Poset, enumerate_posets
from wbcklab.search import enumerate_tables
from wbcklab.sectional import (
    check_L1, derive_j_implication, derive_m_implication, is_sectionally_pseudocomplemented,
    j_implication_by_join, perp, perp_witness, restriction_matches_star, sectional_pc, star_table,
)
from wbcklab.tables import UNDEFINED, OpTable


def _naive_perp(P, u, x, y):
    return all(v == y for v in range(P.n)
               if P.leq(y, v) and P.leq(v, u) and P.leq(v, x))


def _naive_star(P, x, y):
    U = [u for u in range(P.n) if P.leq(y, u) and _naive_perp(P, u, x, y)]
    best = [u for u in U if all(P.leq(w, u) for w in U)]
    return best[0] if best else None


def test_perp_diamond(m2):
    assert perp(m2, 1, 2, 0)
    assert not perp(m2, 1, 1, 0)
    assert perp_witness(m2, 1, 1, 0) == 1


def test_perp_chain():
    C = Poset.chain(3)
    assert not perp(C, 1, 2, 0)
    assert perp_witness(C, 1, 2, 0) == 1


def test_perp_needs_section():
    C = Poset.chain(3)
    with pytest.raises(PreconditionViolation):
        perp(C, 0, 2, 1)


def test_star_examples(m2, n5):
    assert sectional_pc(m2, 1, 0) == 2
    assert sectional_pc(n5, 2, 0) == 1


@pytest.mark.parametrize("P", [Poset.chain(4), Poset.from_generators(4, [(0, 1), (0, 2), (1, 3), (2, 3)])])
def test_star_of_x_over_x_is_top(P):
    for x in range(P.n):
        assert sectional_pc(P, x, x) == P.top


def test_star_table_is_partial(m2):
    t = star_table(m2)
    assert t(1, 0) == 2
    assert t.cells[0 * 4 + 1] is UNDEFINED
    assert not t.is_total()


def test_pentagon_is_sectionally_pc(n5):
    assert is_sectionally_pseudocomplemented(n5).holds


def test_antichain_fails_without_top():
    rep = is_sectionally_pseudocomplemented(Poset.antichain(2))
    assert not rep.holds
    assert "top" in rep.verdicts[0].note


@pytest.mark.parametrize("n", range(1, 7))
def test_chains_are_sectionally_pc(n):
    C = Poset.chain(n)
    assert is_sectionally_pseudocomplemented(C).holds
    for x in range(n):
        for y in range(x + 1):
            assert sectional_pc(C, x, y) == (n - 1 if x == y else y)


def test_chain_j_implication():
    imp, rep = derive_j_implication(Poset.chain(3))
    assert rep.holds
    assert imp == OpTable.from_function(3, lambda x, y: 2 if x <= y else y)


def test_diamond_j_implication(m2, m2_heyting):
    imp, rep = derive_j_implication(m2)
    assert rep.holds
    assert imp(1, 2) == 2 and imp(1, 0) == 2
    assert imp == m2_heyting.imp


def test_pentagon_j_implication(n5):
    imp, rep = derive_j_implication(n5)
    assert imp(1, 0) == 3  # a -> 0 = c
    assert imp(1, 2) == 2  # a -> b = b
    assert rep.holds


def test_not_sectionally_pc_raises():
    with pytest.raises(NotSectionallyPC):
        derive_j_implication(Poset.antichain(2))


def test_m_implication(m2):
    C = Poset.chain(3)
    assert derive_m_implication(C) == derive_j_implication(C)[0]
    imp = derive_m_implication(m2)
    assert imp(1, 2) == 2
    assert all(imp(x, x) == 3 for x in range(4))


def test_L1_examples(m2, n5):
    assert check_L1(m2, derive_j_implication(m2)[0]).holds
    assert check_L1(n5, derive_j_implication(n5)[0]).holds
    bad = check_L1(Poset.chain(2), OpTable(2, (1, 1, 1, 1)))
    assert not bad.holds
    assert bad.verdicts[0].witness == (1, 0, 1)


def test_L1_needs_joins():
    P = Poset.from_generators(3, [(2, 0), (2, 1)])
    with pytest.raises(NotJoinSemilattice):
        check_L1(P, OpTable(3, (0,) * 9))


@pytest.mark.parametrize("n", range(1, 6))
def test_star_against_naive(n):
    for P in enumerate_posets(n):
        for x in range(n):
            for y in range(n):
                if P.leq(y, x):
                    assert sectional_pc(P, x, y) == _naive_star(P, x, y)


@given(posets(max_size=6))
def test_perp_downward_closed(P):
    for x, y, u, v in itertools.product(range(P.n), repeat=4):
        if P.leq(y, x) and P.leq(y, v) and P.leq(v, u) and perp(P, u, x, y):
            assert perp(P, v, x, y)


@pytest.mark.parametrize("n", range(1, 7))
def test_perp_is_meet_condition_on_meet_semilattices(n):
    for P in enumerate_posets(n, "meetsl"):
        for x, y, u in itertools.product(range(n), repeat=3):
            if P.leq(y, x) and P.leq(y, u):
                assert perp(P, u, x, y) == (P.meet(u, x) == y)


@pytest.mark.parametrize("n", range(1, 7))
def test_join_formula_matches_max_formula(n):
    for P in enumerate_posets(n, "joinsl"):
        if P.top is None or not is_sectionally_pseudocomplemented(P).holds:
            continue
        imp, rep = derive_j_implication(P)
        assert imp == j_implication_by_join(P)
        assert rep["JOIN-FORMULA"].holds


@pytest.mark.parametrize("n", range(1, 7))
def test_derived_tables_pass_the_axioms(n):
    for P in enumerate_posets(n):
        if P.top is None or not is_sectionally_pseudocomplemented(P).holds:
            continue
        imp, rep = derive_j_implication(P)
        if imp is None:
            continue
        if P.flags.is_join_semilattice:
            assert rep.holds
        else:
            # outside join-semilattices the construction is validated, not trusted
            direct = check_axioms(OrderedAlgebra(P, imp=imp),
                                  (AxiomId.LE_TO, AxiomId.W_EXCH, AxiomId.REG, AxiomId.COMP))
            assert direct.holds == rep.holds


@pytest.mark.parametrize("n", range(1, 6))
def test_axioms_force_the_derived_table(n):
    required = (AxiomId.LE_TO, AxiomId.W_EXCH, AxiomId.REG, AxiomId.COMP)
    for P in enumerate_posets(n):
        if P.top is None or not is_sectionally_pseudocomplemented(P).holds:
            continue
        imp, rep = derive_j_implication(P)
        found = list(enumerate_tables(P, required))
        if imp is not None and rep.holds:
            assert found == [imp]
        if P.flags.is_join_semilattice:
            for t in found:
                assert restriction_matches_star(P, t) is None


def test_axioms_do_not_force_star_without_joins():
    # two minimal elements under two incomparable middles: 0 v 1 does not exist
    P = Poset.from_generators(5, [(0, 2), (0, 3), (1, 2), (1, 3), (2, 4), (3, 4)])
    imp, rep = derive_j_implication(P)
    assert imp is None and rep.verdicts[0].witness == (0, 1)
    found = list(enumerate_tables(P, (AxiomId.LE_TO, AxiomId.W_EXCH, AxiomId.REG, AxiomId.COMP)))
    assert len(found) == 1
    assert sectional_pc(P, 2, 0) == 3
    assert found[0](2, 0) == 0
    assert restriction_matches_star(P, found[0]) == (2, 0)
