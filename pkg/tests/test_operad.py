import pytest
from hypothesis import given

from forest_operads.algebra import DomainError, Element, graft_leaf, graft_root, mul
from forest_operads.combinat import (
    DOT,
    UNIT,
    bplus,
    catalan,
    corolla,
    enumerate_binary_trees,
    enumerate_trees,
    ladder,
    parse_binary,
    parse_forest,
)
from forest_operads.operad import (
    ArityError,
    Flavor,
    OperadElement,
    act,
    act_forest,
    basis_tuples,
    binary_compose,
    check_operad_axioms,
    check_presentation,
    check_q_sequence,
    check_theta_morphism,
    compose,
    corolla_relation,
    element,
    p_basis,
    phi_root,
    prim1_check,
    prim2_check,
    prim_root_check,
    theta,
    unit,
)
from helpers import named_element
from test_combinat import forests_of_weight

P = parse_forest
ROOT, LEAF = Flavor.ROOT, Flavor.LEAF
E = Element.basis


@given(forests_of_weight(3), forests_of_weight(3), forests_of_weight(3))
def test_action_examples(F1, F2, F3):
    assert act(element(LEAF, P("[][]")), [F1, F2]) == mul(F1, F2)
    assert act(element(ROOT, (ladder(3),)), [F1, F2, F3]) == graft_root(graft_root(F1, F2), F3)
    assert act(element(LEAF, (corolla(3),)), [F1, F2, F3]) == graft_leaf(mul(F1, F2), F3)


@given(forests_of_weight(4))
def test_compose_examples(F):
    p = element(ROOT, F)
    assert compose(element(ROOT, (ladder(2),)), [p, unit(ROOT)]).value == E((bplus(F),))
    for flavor in Flavor:
        q = element(flavor, F)
        assert compose(unit(flavor), [q]) == q
    lhs = compose(element(LEAF, P("[][]")), [element(LEAF, (ladder(2),)), unit(LEAF)])
    assert lhs.value == E(P("[[]][]"))


def test_arity_and_domain_errors():
    dd = element(LEAF, P("[][]"))
    with pytest.raises(ArityError):
        compose(dd, [unit(LEAF)])
    with pytest.raises(ArityError):
        act(dd, [P("[]")])
    with pytest.raises(DomainError):
        compose(dd, [unit(ROOT), unit(LEAF)])
    with pytest.raises(DomainError):
        act_forest(ROOT, P("[]"), [UNIT])
    with pytest.raises(DomainError):
        OperadElement(LEAF, E(P("[]")) + E(P("[][]")))
    with pytest.raises(DomainError):
        element(LEAF, UNIT)


def test_operad_element_equality():
    assert element(LEAF, P("[]")) == unit(LEAF)
    assert element(LEAF, P("[]")) != unit(ROOT)
    assert unit(ROOT).arity == 1 and element(ROOT, (ladder(3),)).arity == 3


def test_basis_tuples_counts():
    # weights summing to at most 3 over pairs: (1,1), (1,2), (2,1)
    assert len(list(basis_tuples(2, 3))) == 1 + 2 + 2
    assert list(basis_tuples(0, 4)) == [()]


@pytest.mark.parametrize("flavor", list(Flavor))
def test_presentation(flavor):
    report = check_presentation(flavor, max_weight=5)
    assert report.passed, report.text_lines()
    assert all(r.instances > 0 for r in report.results)


@pytest.mark.parametrize("flavor", list(Flavor))
def test_operad_axioms(flavor):
    report = check_operad_axioms(flavor, max_weight=4)
    assert report.passed, report.text_lines()


def test_root_flavor_is_not_leaf_flavor():
    # l2 acts by ↘ in one flavor and by ↗ in the other; they differ on (•, l2)
    args = [E(P("[]")), E((ladder(2),))]
    assert act_forest(ROOT, (ladder(2),), args) == E((corolla(3),))
    assert act_forest(LEAF, (ladder(2),), args) == E((ladder(3),))


def test_p_basis_examples():
    assert p_basis(parse_binary("o")) == E((DOT,))
    assert p_basis(parse_binary("(oo)")) == E(P("[][]")) - E((ladder(2),))
    assert p_basis(parse_binary("((oo)o)")) == named_element("tun tun tun - tdeux tun - ttroisun + ttroisdeux")
    assert theta(parse_binary("(oo)")).flavor is LEAF


def test_binary_compose():
    b = parse_binary("(oo)")
    assert binary_compose(b, [b, parse_binary("o")]) == parse_binary("((oo)o)")
    with pytest.raises(ArityError):
        binary_compose(b, [b])


def test_theta_is_a_morphism():
    r = check_theta_morphism(4)
    assert r.passed and r.instances > 0


def test_q_sequence_in_both_flavors():
    for r in check_q_sequence(6):
        assert r.passed, r.relation


@pytest.mark.parametrize("n", range(1, 7))
def test_prim_checks(n):
    assert len([p_basis(b) for b in enumerate_binary_trees(n)]) == catalan(n - 1)
    assert prim1_check(n).passed
    assert prim_root_check(n).passed
    if n >= 2:
        assert prim2_check(n, max_kl=4, reach_weight=n).passed


def test_corolla_relation_two_two():
    lhs, rhs = corolla_relation(2, 2)
    assert lhs == rhs
    assert lhs.value == E(((corolla(2),),))


def test_phi_examples():
    assert phi_root(parse_binary("(oo)")) == (ladder(2),)
    assert {phi_root(b) for b in enumerate_binary_trees(3)} == {(corolla(3),), (ladder(3),)}
    assert {phi_root(b) for b in enumerate_binary_trees(5)} == {(t,) for t in enumerate_trees(5)}
