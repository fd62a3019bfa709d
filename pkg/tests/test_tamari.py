import itertools

import networkx as nx
import numpy as np
import pytest

from forest_operads.algebra import Element
from forest_operads.combinat import (
    DOT,
    corolla,
    enumerate_binary_trees,
    enumerate_forests,
    enumerate_trees,
    kappa,
    ladder,
    parse_binary,
    parse_forest,
    weight,
)
from forest_operads.operad import p_basis
from forest_operads.pairing import dual_basis
from forest_operads.tamari import (
    InvariantError,
    corollary33_reconstruct,
    forest_hasse,
    poset,
    right_rotations,
    rotation_hasse,
    tamari_isomorphism_check,
    theorem32_expand,
    transformations,
)

P = parse_forest
l2, l3, c3 = ladder(2), ladder(3), corolla(3)


def _oracle_leq(n):
    """Reachability by depth-first search over single transformations."""
    reach = {}
    for F in enumerate_forests(n):
        seen, stack = {F}, [F]
        while stack:
            for G in transformations(stack.pop()):
                if G not in seen:
                    seen.add(G)
                    stack.append(G)
        reach[F] = seen
    return reach


def _oracle_mu(reach, x, y):
    """Möbius function by its defining recursion, memo-free."""
    if x == y:
        return 1
    if y not in reach[x]:
        return 0
    return -sum(_oracle_mu(reach, x, z) for z in reach[x] if y in reach[z] and z != y)


def test_transformation_examples():
    assert transformations((l2,)) == [P("[][]")]
    assert transformations((l3,)) == [(c3,), (l2, DOT)]
    assert transformations(P("[][]")) == []
    assert transformations(P("[]")) == []


@pytest.mark.parametrize("n", range(1, 7))
def test_transformations_preserve_weight(n):
    for F in enumerate_forests(n):
        for G in transformations(F):
            assert weight(G) == n and G != F


def test_small_mobius_values():
    P2 = poset(2)
    assert P2.covers() == [((l2,), P("[][]"))]
    assert P2.mu((l2,), P("[][]")) == -1
    P3 = poset(3)
    assert P3.le((l3,), (c3,)) and P3.mu((l3,), (c3,)) == -1
    interval = [F for F in P3.elements if P3.le((l3,), F) and P3.le(F, (c3,))]
    assert sorted(interval) == sorted([(l3,), (c3,)])
    for F in P3.elements:
        assert P3.mu(F, F) == 1


@pytest.mark.parametrize("n", range(1, 6))
def test_order_and_mobius_against_oracle(n):
    reach = _oracle_leq(n)
    Pn = poset(n)
    for F, G in itertools.product(Pn.elements, repeat=2):
        assert Pn.le(F, G) == (G in reach[F])
    for F, G in itertools.product(Pn.elements, repeat=2):
        if Pn.le(F, G):
            assert Pn.mu(F, G) == _oracle_mu(reach, F, G)
        else:
            assert Pn.mu(F, G) == 0


@pytest.mark.parametrize("n", range(1, 7))
def test_poset_slice_properties(n):
    Pn = poset(n)
    leq = Pn.leq.astype(np.int64)
    assert np.diag(Pn.leq).all()
    assert not ((Pn.leq & Pn.leq.T) & ~np.eye(len(leq), dtype=bool)).any()
    assert not (((leq @ leq) > 0) & ~Pn.leq).any()
    assert np.array_equal(leq @ Pn.mobius, np.eye(len(leq), dtype=np.int64))
    assert Pn.minimal() == [(ladder(n),)]
    assert Pn.maximal() == [(DOT,) * n]
    with pytest.raises(ValueError):
        Pn.le((ladder(n + 1),), (ladder(n + 1),))


def test_statistics_and_readonly():
    st = poset(4).statistics()
    assert st["elements"] == 14
    assert st["covers_not_single_transformations"] == 0
    assert st["minimal"] == ["[[[[]]]]"] and st["maximal"] == ["[][][][]"]
    with pytest.raises(ValueError):
        poset(4).leq[0, 0] = False


def test_exports():
    P2 = poset(2)
    dot = P2.to_dot()
    assert dot.startswith("digraph forests_2 {") and "rankdir=BT" in dot
    assert "n1 -> n0;" in dot
    assert P2.edges_csv() == "lower,upper\n[[]],[][]\n"
    assert P2.mobius_csv().splitlines()[0] == ",[][],[[]]"


def test_p_support_examples():
    assert theorem32_expand(parse_binary("(oo)")) == {l2}
    assert theorem32_expand(parse_binary("((oo)o)")) == {c3, l3}
    assert theorem32_expand(parse_binary("(o(oo))")) == {l3}
    assert theorem32_expand(parse_binary("o")) == {DOT}


@pytest.mark.parametrize("n", range(1, 7))
def test_p_is_sum_of_duals_below_kappa(n):
    for b in enumerate_binary_trees(n):
        support = theorem32_expand(b)
        assert (kappa(b)) in support
        rebuilt = Element()
        for s in support:
            rebuilt = rebuilt + dual_basis((s,))
        assert rebuilt == p_basis(b)


def test_mobius_reconstruction_examples():
    assert corollary33_reconstruct(DOT) == Element.basis((DOT,))
    assert corollary33_reconstruct(l2) == Element.basis(P("[][]")) - Element.basis((l2,))
    assert corollary33_reconstruct(c3) == Element.basis(P("[][[]]")) - Element.basis((c3,))


@pytest.mark.parametrize("n", range(1, 6))
def test_mobius_reconstruction_gives_tree_duals(n):
    for t in enumerate_trees(n):
        assert corollary33_reconstruct(t) == dual_basis((t,))


def test_invariant_error_is_an_assertion():
    assert issubclass(InvariantError, AssertionError)


def test_rotation_oracle():
    assert right_rotations(parse_binary("((oo)o)")) == [parse_binary("(o(oo))")]
    assert right_rotations(parse_binary("(o(oo))")) == []
    g = rotation_hasse(3)
    assert len(g) == 5 and len(g.edges) == 5
    assert nx.is_isomorphic(nx.Graph(g), nx.cycle_graph(5))


@pytest.mark.parametrize("n", range(1, 6))
def test_tamari_isomorphism(n):
    assert tamari_isomorphism_check(n).passed
    assert len(forest_hasse(n).edges) == len(rotation_hasse(n).edges)
