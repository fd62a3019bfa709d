"""Acceptance criteria, one test per criterion at its stated bound.

Run ``pytest tests/test_acceptance.py`` for the PASS/FAIL summary lines.
"""
import math
from functools import lru_cache

from forest_operads.algebra import ONE, Element, graft_leaf_forests, graft_root_forests
from forest_operads.checks import CheckConfig, run_suite
from forest_operads.coalgebra import antipode, delta, is_primitive, p_ladder_antipode
from forest_operads.combinat import (
    catalan,
    corolla,
    enumerate_binary_trees,
    enumerate_forests,
    enumerate_trees,
    from_names,
    ladder,
    parse_forest,
)
from forest_operads.linalg import rank, vectors_to_matrix
from forest_operads.operad import Flavor, check_presentation, p_basis, prim1_check, prim2_check, prim_root_check
from forest_operads.pairing import dual_basis, gram, pair, q_sequence
from forest_operads.tamari import corollary33_reconstruct, tamari_isomorphism_check, theorem32_expand
from helpers import equations, lines, named_element, named_tensor

W = 6


@lru_cache(maxsize=None)
def _suite(name):
    return [res for rep in run_suite(name, CheckConfig(max_weight=W)) for res in rep.results]


def _select(name, *prefixes):
    found = [r for r in _suite(name) if r.relation.startswith(prefixes)]
    assert found, prefixes
    return found


def _assert_all(results):
    failed = [(r.relation, r.failures[:3]) for r in results if not r.passed]
    assert not failed, failed
    assert all(r.instances > 0 for r in results)


def test_ac01_coproduct_table():
    rows = equations("coproducts.txt")
    assert len(rows) >= 16
    for lhs, rhs in rows:
        assert delta(from_names(lhs)) == named_tensor(rhs), lhs


def test_ac02_grafting_tables():
    total = 0
    for table, op in (("graft_root.txt", graft_root_forests), ("graft_leaf.txt", graft_leaf_forests)):
        for row in lines(table):
            left, right, result = (from_names(part) for part in row.split("|"))
            assert op(left, right) == result, row
            total += 1
    assert total == 40


def test_ac03_dual_basis():
    rows = equations("dual_basis.txt")
    assert len(rows) == 23
    for lhs, rhs in rows:
        F = () if lhs == "1" else from_names(lhs)
        assert dual_basis(F) == (ONE if rhs == "1" else named_element(rhs)), lhs
    assert len(dual_basis((ladder(4),))) == 8
    for n in range(1, W + 1):
        basis = enumerate_forests(n)
        duals = [dual_basis(F) for F in basis]
        for i, f in enumerate(duals):
            for j, G in enumerate(basis):
                assert pair(f, G) == (i == j), (n, i, j)


def test_ac04_dimensions():
    assert [len(enumerate_forests(n)) for n in range(1, 9)] == [1, 2, 5, 14, 42, 132, 429, 1430]
    for n in range(1, 9):
        assert len(enumerate_trees(n)) == catalan(n - 1) == math.comb(2 * n - 2, n - 1) // n
        assert len(enumerate_binary_trees(n)) == catalan(n - 1)


def test_ac05_q_and_p_sequences():
    seen = set()
    for lhs, rhs in equations("sequences.txt"):
        fn = q_sequence if lhs[0] == "q" else p_ladder_antipode
        assert fn(int(lhs[1:])) == named_element(rhs), lhs
        seen.add(lhs)
    assert seen == {"q3", "q4", "q5", "p1", "p2", "p3", "p4"}
    for n in range(1, W + 1):
        assert antipode((ladder(n),)) == p_ladder_antipode(n)
        for F in enumerate_forests(n):
            if len(F) > 1:
                assert antipode(F) == 0
            else:
                assert is_primitive(antipode(F))


def test_ac06_presentation_relations():
    for flavor in Flavor:
        report = check_presentation(flavor, max_weight=W)
        assert report.passed, report.text_lines()
    found = _select("algebra", "x↘(yz) = (x↘y)z", "x↘(y↘z) = (xy)↘z", "x↗(yz) = (x↗y)z")
    assert len(found) == 3
    _assert_all(found)
    rules = _select("coalgebra", "Δ̃(xy) ", "Δ̃(x↗y) ", "Δ̃↗(xy) ", "Δ̃↗(x↗y) ", "Δ̃↗(x↘y) ")
    assert len(rules) == 5
    _assert_all(rules)


def test_ac07_gram_slices():
    assert gram(1).matrix == ((1,),)
    assert gram(2).matrix == ((1, 1), (1, 0))
    for n in range(1, W + 1):
        g = gram(n)
        assert g.symmetric and g.det != 0


def test_ac08_p_versus_dual_basis():
    for n in range(1, W + 1):
        for b in enumerate_binary_trees(n):
            theorem32_expand(b)
    for n in range(1, 6):
        for t in enumerate_trees(n):
            assert corollary33_reconstruct(t) == dual_basis((t,))
    expected = -Element.basis((corolla(3),)) + Element.basis(parse_forest("[][[]]"))
    assert corollary33_reconstruct(corolla(3)) == expected == dual_basis((corolla(3),))


def test_ac09_primitive_suboperads():
    for n in range(1, W + 1):
        assert len(enumerate_binary_trees(n)) == catalan(n - 1)
        ps = [p_basis(b) for b in enumerate_binary_trees(n)]
        assert rank(vectors_to_matrix(ps, enumerate_forests(n))) == catalan(n - 1)
        assert prim1_check(n).passed
        assert prim_root_check(n).passed
        if n >= 2:
            assert prim2_check(n, max_kl=5, reach_weight=W).passed


def test_ac10_double_bialgebra_layer():
    found = _select("coalgebra", "(Δ̃⊗id)Δ̃↗", "-S↗", "-S^↗", "eulerian")
    assert len(found) == 4, [r.relation for r in found]
    _assert_all(found)


def test_ac11_tamari_isomorphism():
    for n in range(1, 6):
        report = tamari_isomorphism_check(n)
        assert report.passed, report.text_lines()
