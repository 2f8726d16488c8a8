import itertools

import pytest
from hypothesis import given, strategies as st

from strategies import posets_with_top, tables
from wbcklab.adjunction import (
    check_adjunction, check_condition_s, check_idempotent_pocrig, check_mult_semilattice,
    check_theorem_dual, classify_groupoid, condition_s, condition_s_product, is_adjunction,
    enumerate_pocrigs, is_pocrig, is_pocrim, residual_table,
)
from wbcklab.axioms import AxiomId, OrderedAlgebra, classify, holds
from wbcklab.errors import AdjunctionRequired, MissingOperation, NotIdempotentPocrig
from wbcklab.fixtures import goedel_chain, lukasiewicz_chain
from wbcklab.poset import Poset, enumerate_posets
from wbcklab.search import enumerate_tables
from wbcklab.sectional import derive_j_implication
from wbcklab.tables import OpTable

A = AxiomId
WBCK = (A.LE_TO, A.W_EXCH)


def meet_table(P):
    return OpTable.from_function(P.n, P.meet)


def with_products(n_max, required=WBCK, order_class=None):
    """Algebras on posets with top whose least product exists, product attached."""
    for n in range(1, n_max + 1):
        for P in enumerate_posets(n, order_class):
            for t in enumerate_tables(P, required):
                alg = OrderedAlgebra(P, imp=t)
                mul = condition_s_product(alg)
                if mul is not None:
                    yield alg.with_mul(mul)


# the 4-chain algebra on which the least product exists but is not adjoint
CHAIN4 = OrderedAlgebra(Poset.chain(4), imp=OpTable.from_rows(
    [[3, 3, 3, 3], [2, 3, 3, 3], [2, 1, 3, 3], [0, 1, 2, 3]]))


def test_chain_product_is_min():
    assert condition_s_product(goedel_chain(3)) == OpTable.from_function(3, min)


def test_diamond_product_is_meet(m2_heyting):
    assert condition_s_product(m2_heyting) == meet_table(m2_heyting.poset)


def test_product_with_top():
    for alg in with_products(4):
        assert all(alg.mul(x, alg.unit) == x for x in range(alg.n))


def test_condition_s_needs_imp():
    with pytest.raises(MissingOperation):
        condition_s(OrderedAlgebra(Poset.chain(2)))


def test_missing_least_element_reports_pair():
    P = Poset.from_generators(3, [(0, 2), (1, 2)])
    imp = OpTable.from_rows([[2, 1, 2], [0, 2, 2], [0, 1, 2]])
    table, pair = condition_s(OrderedAlgebra(P, imp=imp))
    assert table is None
    assert pair == (0, 1)  # Z(0, 1) = {0, 1, 2} has two minimal elements
    assert not check_condition_s(OrderedAlgebra(P, imp=imp)).holds


def test_chain_adjunction():
    alg = goedel_chain(3).with_mul(OpTable.from_function(3, min))
    rep = check_adjunction(alg)
    assert rep.holds and len(rep.verdicts) == 6


def test_zero_product_is_not_adjoint():
    alg = goedel_chain(3).with_mul(OpTable(3, (0,) * 9))
    rep = check_adjunction(alg)
    assert not rep["ADJUNCTION"].holds
    assert rep["ADJUNCTION"].witness == (1, 1, 0)
    assert rep["ADJ4-EQUIV"].holds


def test_singleton_adjunction():
    alg = OrderedAlgebra(Poset.chain(1), imp=OpTable(1, (0,)), mul=OpTable(1, (0,)))
    assert check_adjunction(alg).holds
    prof = classify_groupoid(alg)
    assert all([prof.commutative, prof.associative, prof.idempotent, prof.has_neutral_unit,
                prof.integral, prof.isotone, prof.residuated])
    assert check_theorem_dual(alg).holds


def test_chain_min_profile():
    for n in range(1, 6):
        alg = goedel_chain(n).with_mul(OpTable.from_function(n, min))
        prof = classify_groupoid(alg)
        assert prof.commutative and prof.associative and prof.idempotent
        assert prof.integral and prof.residuated and prof.isotone
        assert prof.residual == alg.imp
        assert is_pocrim(alg)


def _naive_profile(P, mul, one):
    r = range(P.n)
    return {
        "commutative": all(mul[x][y] == mul[y][x] for x in r for y in r),
        "associative": all(mul[mul[x][y]][z] == mul[x][mul[y][z]] for x in r for y in r for z in r),
        "idempotent": all(mul[x][x] == x for x in r),
        "has_neutral_unit": all(mul[one][x] == x == mul[x][one] for x in r),
    }


def test_two_chain_profiles_against_oracle():
    P = Poset.chain(2)
    for cells in itertools.product(range(2), repeat=4):
        mul = OpTable(2, cells)
        prof = classify_groupoid(OrderedAlgebra(P, unit=1, mul=mul))
        expected = _naive_profile(P, mul.rows(), 1)
        assert {k: getattr(prof, k) for k in expected} == expected
    prof = classify_groupoid(OrderedAlgebra(P, unit=1, mul=OpTable(2, (0, 0, 0, 1))))
    assert prof.commutative and prof.associative and prof.idempotent and prof.has_neutral_unit


def test_lukasiewicz_three_chain():
    alg = lukasiewicz_chain(3)
    assert alg.mul(1, 1) == 0
    assert is_pocrim(alg)
    rep = check_theorem_dual(alg)
    assert rep.holds
    assert classify(alg).wbck and not holds(alg, A.REG)
    assert not classify_groupoid(alg).idempotent


def test_three_chain_non_idempotent_pocrig_is_unique():
    # brute force: commutative integral non-idempotent products on the 3-chain with a residual
    P = Poset.chain(3)
    found = []
    for cells in itertools.product(range(3), repeat=9):
        mul = OpTable(3, cells)
        prof = classify_groupoid(OrderedAlgebra(P, unit=2, mul=mul))
        if prof.commutative and prof.integral and prof.residuated and not prof.idempotent:
            found.append(mul)
    assert found == [lukasiewicz_chain(3).mul]


def test_theorem_dual_requires_adjunction():
    with pytest.raises(AdjunctionRequired):
        check_theorem_dual(goedel_chain(3).with_mul(OpTable(3, (0,) * 9)))


def test_theorem_dual_on_heyting_algebras():
    for n in range(1, 6):
        for P in enumerate_posets(n, "lattice"):
            for t in enumerate_tables(P, (A.RPC_8, A.RPC_9)):
                alg = OrderedAlgebra(P, imp=t, mul=meet_table(P))
                assert check_theorem_dual(alg).holds


def test_idempotent_pocrig_examples(m2_heyting):
    assert check_idempotent_pocrig(m2_heyting.with_mul(meet_table(m2_heyting.poset))).holds
    for n in range(1, 6):
        assert check_idempotent_pocrig(goedel_chain(n).with_mul(
            OpTable.from_function(n, min))).holds
    with pytest.raises(NotIdempotentPocrig):
        check_idempotent_pocrig(lukasiewicz_chain(3))


def pocrigs(n_max, order_class=None):
    for n in range(1, n_max + 1):
        for P in enumerate_posets(n, order_class):
            yield from enumerate_pocrigs(P)


def test_pocrig_enumeration_matches_implication_side():
    # LE-TO holds in any pocrig and the product is forced to be the least one,
    # so this route reaches every pocrig without presupposing the wBCK* axioms
    for n in range(1, 5):
        for P in enumerate_posets(n):
            via_imp = set()
            for t in enumerate_tables(P, (A.LE_TO,)):
                alg = OrderedAlgebra(P, imp=t)
                mul = condition_s_product(alg)
                if mul is not None and is_pocrig(alg.with_mul(mul)):
                    via_imp.add((t, mul))
            via_mul = {(alg.imp, alg.mul) for alg in enumerate_pocrigs(P)}
            assert via_imp == via_mul


def test_pocrig_counts():
    assert [sum(1 for _ in pocrigs(n)) - sum(1 for _ in pocrigs(n - 1)) for n in range(1, 6)] \
        == [1, 1, 2, 8, 50]


def test_idempotent_pocrigs_up_to_five():
    seen = 0
    for alg in pocrigs(5):
        if classify_groupoid(alg).idempotent:
            seen += 1
            assert check_idempotent_pocrig(alg).holds
    assert seen > 0


def test_mult_semilattice_examples(m2_heyting):
    assert check_mult_semilattice(goedel_chain(4).with_mul(OpTable.from_function(4, min))).holds
    assert check_mult_semilattice(m2_heyting.with_mul(meet_table(m2_heyting.poset))).holds


def test_join_semilattice_pocrigs_distribute():
    seen = 0
    for alg in pocrigs(5, "joinsl"):
        seen += 1
        assert check_mult_semilattice(alg).holds
    assert seen > 0


def test_pocrig_reducts_are_wbck():
    for alg in pocrigs(4):
        assert classify(alg).wbck


def test_wbck_with_adjoint_product_is_a_pocrig():
    for n in range(1, 5):
        for P in enumerate_posets(n):
            for t in enumerate_tables(P, (A.LE_TO,)):
                alg = OrderedAlgebra(P, imp=t)
                mul = condition_s_product(alg)
                adjoint = mul is not None and is_adjunction(alg.with_mul(mul))
                pocrig = mul is not None and is_pocrig(alg.with_mul(mul))
                assert (classify(alg).wbck and adjoint) == pocrig


def test_product_is_always_commutative():
    for alg in with_products(5):
        assert classify_groupoid(alg).commutative


def test_residual_reproduces_imp_exactly_when_adjoint():
    for alg in with_products(5):
        assert (residual_table(alg.poset, alg.mul) == alg.imp) == is_adjunction(alg)


def test_adjoint_weakly_contractive_is_implicative_semilattice():
    for alg in with_products(5, (A.LE_TO, A.W_EXCH, A.REG)):
        if is_adjunction(alg):
            assert check_idempotent_pocrig(alg).holds


def test_least_product_need_not_be_adjoint():
    assert classify(CHAIN4).wbck
    mul = condition_s_product(CHAIN4)
    assert mul.rows() == [[0, 0, 0, 0], [0, 0, 0, 1], [0, 0, 0, 2], [0, 1, 2, 3]]
    rep = check_adjunction(CHAIN4.with_mul(mul))
    assert rep["ADJUNCTION"].witness == (2, 2, 1)
    assert rep["A3"].witness == (0, 1, 2)
    assert rep["ADJ4-EQUIV"].holds


def test_four_chain_is_the_only_small_exception():
    bad = [alg for alg in with_products(4) if not is_adjunction(alg)]
    assert [(a.poset, a.imp) for a in bad] == [(CHAIN4.poset, CHAIN4.imp)]


def test_pentagon_least_product_is_meet_but_not_adjoint(n5):
    alg = OrderedAlgebra(n5, imp=derive_j_implication(n5)[0])
    mul = condition_s_product(alg)
    assert mul == meet_table(n5)
    assert not is_adjunction(alg.with_mul(mul))


@given(posets_with_top(max_size=3), st.data())
def test_adjunction_iff_four_conditions(P, data):
    alg = OrderedAlgebra(P, imp=data.draw(tables(P.n)), mul=data.draw(tables(P.n)))
    assert check_adjunction(alg)["ADJ4-EQUIV"].holds


@given(posets_with_top(max_size=3), st.data())
def test_residuated_implies_isotone(P, data):
    prof = classify_groupoid(OrderedAlgebra(P, mul=data.draw(tables(P.n))))
    if prof.residuated:
        assert prof.isotone


def test_adjunction_iff_four_conditions_exhaustive():
    for alg in with_products(4, (A.LE_TO,)):
        assert check_adjunction(alg)["ADJ4-EQUIV"].holds
