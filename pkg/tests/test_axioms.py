import itertools

import pytest
from hypothesis import given, strategies as st

from strategies import posets_with_top, tables
from wbcklab import naive
from wbcklab.adjunction import condition_s_product, is_adjunction
from wbcklab.axioms import (
    AXIOMS, CLASS_AXIOMS, DERIVED_LAWS, AxiomId, OrderedAlgebra, check_axiom, check_derived_laws,
    check_le_to, check_max_form, classify, context, find_violation, holds, subalgebras,
)
from wbcklab.errors import PreconditionViolation
from wbcklab.fixtures import goedel_chain
from wbcklab.poset import Poset, enumerate_posets
from wbcklab.search import enumerate_tables
from wbcklab.sectional import derive_j_implication, is_sectionally_pseudocomplemented
from wbcklab.tables import OpTable
from wbcklab.terms import check_law

A = AxiomId

# the catalog written out as law text, evaluated by the generic term engine
AS_LAWS = {
    A.W_EXCH: ["x <= y -> z => y <= x -> z"],
    A.REG: ["x <= x -> y => x <= y"],
    A.ISOT: ["x <= y => z -> x <= z -> y"],
    A.BCK2: ["x <= (x -> y) -> y"],
    A.ANTITONE: ["x <= y => y -> z <= x -> z"],
    A.UBOUND: ["y <= (x -> y) -> y"],
    A.EXPAN: ["((x -> y) -> y) -> y = x -> y"],
    A.REFL: ["x -> x = 1"],
    A.H1: ["x <= y -> x"],
    A.SREG: ["1 -> x = x"],
    A.UNIT: ["x -> 1 = 1"],
    A.BCK1: ["x -> y <= (y -> z) -> (x -> z)"],
    A.HILB_CONTR: ["x -> (x -> y) = x -> y"],
    A.POS_IMPL: ["x -> (y -> z) <= (x -> y) -> (x -> z)"],
    A.RPC_8: ["u <= x -> y & v <= x & v <= u => v <= y"],
    A.RPC_10: ["z <= x & z <= x -> y => z <= y"],
    A.LE_TO: ["x <= y => x -> y = 1", "x -> y = 1 => x <= y"],
}
MEET_LAWS = {
    A.COMP: ["x <= y -> (x /\\ y)"],
    A.REGG: ["x /\\ (x -> y) <= y"],
    A.RPC_9: ["u /\\ x <= y => u <= x -> y"],
}


def wbck_tables(n_max):
    for n in range(1, n_max + 1):
        for P in enumerate_posets(n):
            for t in enumerate_tables(P, CLASS_AXIOMS["wbck"]):
                yield OrderedAlgebra(P, imp=t)


def derived_algebras(n_max, order_class=None):
    for n in range(1, n_max + 1):
        for P in enumerate_posets(n, order_class):
            if P.top is None or not is_sectionally_pseudocomplemented(P).holds:
                continue
            imp, _ = derive_j_implication(P)
            if imp is not None:
                yield OrderedAlgebra(P, imp=imp)


def test_ids_are_a_bijection_with_the_catalog():
    assert set(AXIOMS) == set(AxiomId)
    assert len({a.value for a in AxiomId}) == 20
    assert AxiomId.parse("w_exch") is A.W_EXCH
    with pytest.raises(ValueError):
        AxiomId.parse("nope")


def test_unit_must_be_top():
    with pytest.raises(PreconditionViolation):
        OrderedAlgebra(Poset.chain(2), unit=0, imp=OpTable(2, (1, 1, 0, 1)))
    assert OrderedAlgebra(Poset.chain(2), imp=OpTable(2, (1, 1, 0, 1))).unit == 1


def test_le_to_examples():
    assert check_le_to(goedel_chain(3)).holds
    bad = check_le_to(OrderedAlgebra(Poset.chain(2), imp=OpTable(2, (1, 1, 1, 1))))
    assert not bad.holds and bad.verdicts[0].witness == (1, 0)
    assert check_le_to(OrderedAlgebra(Poset.chain(1), imp=OpTable(1, (0,)))).holds


def test_pentagon_axioms(n5):
    alg = OrderedAlgebra(n5, imp=derive_j_implication(n5)[0])
    for ax in (A.W_EXCH, A.REG, A.COMP):
        assert holds(alg, ax)
    isot = check_axiom(alg, A.ISOT)["ISOT"]
    assert not isot.holds
    assert isot.witness == (1, 0, 2)
    assert isot.variables == ("z", "x", "y")
    c = classify(alg)
    assert c.sjp and not c.relpc


@pytest.mark.parametrize("n", range(1, 7))
def test_chains_are_heyting(n):
    alg = OrderedAlgebra(Poset.chain(n), imp=derive_j_implication(Poset.chain(n))[0])
    assert holds(alg, A.BCK1)
    assert classify(alg).memberships == {"wbck", "wcontractive", "sjp", "bck", "hilbert",
                                         "relpc", "heyting"}


def test_two_chain_derived_laws():
    alg = OrderedAlgebra(Poset.chain(2), imp=OpTable(2, (1, 1, 0, 1)))
    assert check_derived_laws(alg).holds


def test_derived_laws_may_fail_without_le_to():
    alg = OrderedAlgebra(Poset.chain(2), imp=OpTable(2, (0, 0, 0, 0)))
    assert not check_derived_laws(alg).holds


def test_singleton_is_everything():
    alg = OrderedAlgebra(Poset.chain(1), imp=OpTable(1, (0,)))
    assert len(classify(alg).memberships) == 7


def _naive_axiom(ax, P, t):
    """Independent statement of a few axioms directly over the order matrix."""
    n, one, le = P.n, P.top, P.leq
    r = range(n)
    if ax is A.LE_TO:
        return all(le(x, y) == (t(x, y) == one) for x in r for y in r)
    if ax is A.W_EXCH:
        return all(not le(x, t(y, z)) or le(y, t(x, z)) for x in r for y in r for z in r)
    if ax is A.REG:
        return all(not le(x, t(x, y)) or le(x, y) for x in r for y in r)
    if ax is A.COMP:
        return all(le(x, t(y, P.meet(x, y))) for x in r for y in r if P.meet(x, y) is not None)
    raise KeyError(ax)


@pytest.mark.parametrize("required", [
    (A.LE_TO,), (A.LE_TO, A.W_EXCH), (A.W_EXCH, A.REG, A.COMP),
    (A.LE_TO, A.W_EXCH, A.REG, A.COMP), (A.W_EXCH,),
])
@pytest.mark.parametrize("n", [1, 2, 3])
def test_search_matches_brute_force(n, required):
    for P in enumerate_posets(n):
        expected = [cells for cells in naive.all_tables(n)
                    if all(_naive_axiom(ax, P, OpTable(n, cells)) for ax in required)]
        got = [t.cells for t in enumerate_tables(P, required)]
        assert got == expected


def test_two_chain_wbck_tables():
    P = Poset.chain(2)
    got = list(enumerate_tables(P, CLASS_AXIOMS["wbck"]))
    assert [t.rows() for t in got] == [[[1, 1], [0, 1]]]


def test_singleton_has_one_table():
    assert len(list(enumerate_tables(Poset.chain(1), (A.LE_TO, A.W_EXCH)))) == 1


def test_diamond_sjp_table_is_unique(m2, m2_heyting):
    assert list(enumerate_tables(m2, CLASS_AXIOMS["sjp"])) == [m2_heyting.imp]


def test_subalgebras_of_three_chain():
    alg = goedel_chain(3)
    got = [S.names for S in subalgebras(alg)]
    expected = []
    for k in range(1, 4):
        for sub in itertools.combinations(range(3), k):
            if 2 in sub and all(alg.imp(x, y) in sub for x in sub for y in sub):
                expected.append(tuple(str(e) for e in sub))
    assert got == expected
    assert got[0] == ("2",) and got[-1] == ("0", "1", "2")


@pytest.mark.parametrize("alg", list(wbck_tables(4)), ids=lambda a: f"n{a.n}")
def test_wbck_consequences(alg):
    assert check_derived_laws(alg).holds
    assert check_max_form(alg).holds


def test_wbck_consequences_at_five():
    for alg in wbck_tables(5):
        assert check_derived_laws(alg).holds


def test_exchange_is_bck2_plus_antitone():
    for n in range(1, 5):
        for P in enumerate_posets(n):
            for t in enumerate_tables(P, (A.LE_TO,)):
                alg = OrderedAlgebra(P, imp=t)
                assert holds(alg, A.W_EXCH) == (holds(alg, A.BCK2) and holds(alg, A.ANTITONE))


def _table_set(P, required):
    return {t.cells for t in enumerate_tables(P, required)}


@pytest.mark.parametrize("n", range(1, 5))
def test_rpc_characterisation(n):
    for P in enumerate_posets(n):
        assert (_table_set(P, (A.LE_TO, A.RPC_8, A.RPC_9))
                == _table_set(P, (A.LE_TO, A.W_EXCH, A.REG, A.RPC_9)))


@pytest.mark.parametrize("n", range(1, 5))
def test_rpc8_equals_rpc10(n):
    for P in enumerate_posets(n):
        for t in enumerate_tables(P, (A.LE_TO,)):
            alg = OrderedAlgebra(P, imp=t)
            assert holds(alg, A.RPC_8) == holds(alg, A.RPC_10)


@pytest.mark.parametrize("n", range(1, 5))
def test_sjp_plus_isotone_is_relpc_enumerated(n):
    for P in enumerate_posets(n, "meetsl"):
        assert (_table_set(P, (A.W_EXCH, A.REG, A.COMP, A.ISOT))
                == _table_set(P, (A.RPC_8, A.RPC_9)))


def test_sjp_plus_isotone_is_relpc_derived():
    for alg in derived_algebras(5, "meetsl"):
        c = classify(alg)
        if c.sjp:
            assert (c.sjp and holds(alg, A.ISOT)) == c.relpc


def test_hilbert_by_either_identity():
    for alg in wbck_tables(4):
        c = classify(alg)
        assert c.cross_checks_agree()
        assert c.containments_hold()


def _adjoint_wcontractive(n_max):
    for alg in wbck_tables(n_max):
        if not holds(alg, A.REG):
            continue
        mul = condition_s_product(alg)
        if mul is not None:
            yield alg.with_mul(mul)


def test_subalgebras_of_adjoint_weakly_contractive_algebras_are_hilbert():
    seen = 0
    for alg in _adjoint_wcontractive(5):
        if not is_adjunction(alg):
            continue
        seen += 1
        for S in subalgebras(alg.with_mul(None)):
            assert classify(S).hilbert
    assert seen > 0


def test_least_product_alone_does_not_give_hilbert_subalgebras(n5):
    # the pentagon: every least product exists (it is the meet), but a -> (b -> 0)
    # is not below (a -> b) -> (a -> 0), and the pair is not adjoint
    alg = OrderedAlgebra(n5, imp=derive_j_implication(n5)[0])
    assert classify(alg).wcontractive
    mul = condition_s_product(alg)
    assert mul == OpTable.from_function(5, n5.meet)
    assert not is_adjunction(alg.with_mul(mul))
    assert not classify(alg).hilbert


@given(posets_with_top(max_size=4), st.data())
def test_axioms_agree_with_law_text(P, data):
    t = data.draw(tables(P.n))
    alg = OrderedAlgebra(P, imp=t)
    for ax, laws in AS_LAWS.items():
        assert holds(alg, ax) == all(check_law(alg, law) is None for law in laws), ax
    if P.flags.is_meet_semilattice:
        for ax, laws in MEET_LAWS.items():
            assert holds(alg, ax) == all(check_law(alg, law) is None for law in laws), ax


@given(posets_with_top(max_size=4), st.data())
def test_witnesses_are_genuine_and_least(P, data):
    t = data.draw(tables(P.n))
    alg = OrderedAlgebra(P, imp=t)
    c = context(P)
    for ax in AxiomId:
        axiom = AXIOMS[ax]
        if axiom.needs_meet and not P.flags.is_meet_semilattice:
            continue
        w = find_violation(axiom, c, t)
        violating = [a for a in axiom.instances(c) if not axiom.holds(c, t, a)]
        assert w == (min(violating) if violating else None)
