"""The order on forests generated by admissible transformations.

A transformation picks a vertex ``s`` that is the leftmost child of ``u`` and
moves the subtree at ``s``:

* first kind, ``u`` has a parent ``v``: ``s`` becomes a child of ``v`` just left of ``u``;
* second kind, ``u`` is the root of tree ``i``: ``s`` becomes a new tree just left of tree ``i``.

Each move goes upward, ``F <= F'``.  The minimum of a weight slice is the ladder
and the maximum is the row of single vertices.
"""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from functools import lru_cache

import networkx as nx
import numpy as np

from .algebra import Element
from .combinat import (
    LEAF,
    BinaryTree,
    Forest,
    Tree,
    enumerate_binary_trees,
    enumerate_forests,
    enumerate_trees,
    kappa,
    leaves,
    render_binary,
    render_forest,
    weight,
)
from .operad import p_basis
from .pairing import dual_basis, pair
from .report import Report


class InvariantError(AssertionError):
    """A computed identity that must hold did not."""


def _replace(t: Tree, path: tuple[int, ...], new: Tree) -> Tree:
    if not path:
        return new
    i = path[0]
    return t[:i] + (_replace(t[i], path[1:], new),) + t[i + 1:]


def _at(t: Tree, path: tuple[int, ...]) -> Tree:
    for i in path:
        t = t[i]
    return t


def transformations(F: Forest) -> list[Forest]:
    """All single transformations of ``F``: first kind, then second kind, each in preorder."""
    first: list[Forest] = []
    second: list[Forest] = []

    def walk(root: Tree, i: int, path: tuple[int, ...]) -> None:
        u = _at(root, path)
        if u:
            s, u_rest = u[0], u[1:]
            if path:
                vpath, k = path[:-1], path[-1]
                v = _at(root, vpath)
                new_v = v[:k] + (s, u_rest) + v[k + 1:]
                first.append(F[:i] + (_replace(root, vpath, new_v),) + F[i + 1:])
            else:
                second.append(F[:i] + (s, u_rest) + F[i + 1:])
        for j in range(len(u)):
            walk(root, i, path + (j,))

    for i, t in enumerate(F):
        walk(t, i, ())
    return first + second


def _closure(adj: np.ndarray) -> np.ndarray:
    r = adj.copy() | np.eye(len(adj), dtype=bool)
    for k in range(len(r)):
        r |= r[:, k:k + 1] & r[k:k + 1, :]
    return r


def _reduction(leq: np.ndarray) -> np.ndarray:
    strict = leq & ~np.eye(len(leq), dtype=bool)
    s = strict.astype(np.int64)
    return strict & ~((s @ s) > 0)


def _linear_extension(leq: np.ndarray) -> list[int]:
    below = leq.sum(axis=0)
    return sorted(range(len(leq)), key=lambda i: (below[i], i))


def _mobius(leq: np.ndarray) -> np.ndarray:
    n = len(leq)
    strict = (leq & ~np.eye(n, dtype=bool)).astype(np.int64)
    mu = np.zeros((n, n), dtype=np.int64)
    for y in _linear_extension(leq):
        mu[:, y] = -(mu @ strict[:, y])
        mu[y, y] = 1
    return mu


@dataclass(frozen=True, eq=False)
class PosetSlice:
    weight: int
    elements: tuple[Forest, ...]
    leq: np.ndarray
    hasse: tuple[tuple[int, int], ...]
    mobius: np.ndarray
    moves: np.ndarray = field(repr=False)
    index: dict = field(repr=False, default_factory=dict)

    def idx(self, F: Forest) -> int:
        try:
            return self.index[F]
        except KeyError:
            raise ValueError(f"{render_forest(F)!r} is not a forest of weight {self.weight}") from None

    def le(self, F: Forest, G: Forest) -> bool:
        return bool(self.leq[self.idx(F), self.idx(G)])

    def mu(self, F: Forest, G: Forest) -> int:
        return int(self.mobius[self.idx(F), self.idx(G)])

    def covers(self) -> list[tuple[Forest, Forest]]:
        return [(self.elements[a], self.elements[b]) for a, b in self.hasse]

    def minimal(self) -> list[Forest]:
        strict = self.leq & ~np.eye(len(self.elements), dtype=bool)
        return [F for i, F in enumerate(self.elements) if not strict[:, i].any()]

    def maximal(self) -> list[Forest]:
        strict = self.leq & ~np.eye(len(self.elements), dtype=bool)
        return [F for i, F in enumerate(self.elements) if not strict[i, :].any()]

    def statistics(self) -> dict:
        cover = np.zeros_like(self.leq)
        for a, b in self.hasse:
            cover[a, b] = True
        moves = int(self.moves.sum())
        return {
            "weight": self.weight,
            "elements": len(self.elements),
            "relations": int(self.leq.sum()),
            "covers": len(self.hasse),
            "transformations": moves,
            "transformations_that_are_covers": int((self.moves & cover).sum()),
            "covers_not_single_transformations": int((cover & ~self.moves).sum()),
            "minimal": [render_forest(F) for F in self.minimal()],
            "maximal": [render_forest(F) for F in self.maximal()],
        }

    def to_dot(self) -> str:
        lines = [f"digraph forests_{self.weight} {{", "  rankdir=BT;"]
        for i, F in enumerate(self.elements):
            lines.append(f'  n{i} [label="{render_forest(F)}"];')
        for a, b in self.hasse:
            lines.append(f"  n{a} -> n{b};")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def edges_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["lower", "upper"])
        for F, G in self.covers():
            w.writerow([render_forest(F), render_forest(G)])
        return buf.getvalue()

    def mobius_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        labels = [render_forest(F) for F in self.elements]
        w.writerow([""] + labels)
        for label, row in zip(labels, self.mobius.tolist()):
            w.writerow([label] + row)
        return buf.getvalue()


@lru_cache(maxsize=None)
def poset(n: int) -> PosetSlice:
    if n < 1:
        raise ValueError("poset(n) needs n >= 1")
    elements = enumerate_forests(n)
    index = {F: i for i, F in enumerate(elements)}
    moves = np.zeros((len(elements), len(elements)), dtype=bool)
    for i, F in enumerate(elements):
        for G in transformations(F):
            moves[i, index[G]] = True
    leq = _closure(moves)
    if (leq & leq.T & ~np.eye(len(elements), dtype=bool)).any():
        raise InvariantError(f"the order on weight {n} is not antisymmetric")
    hasse = tuple(zip(*map(lambda a: a.tolist(), np.nonzero(_reduction(leq)))))
    mu = _mobius(leq)
    if not np.array_equal(leq.astype(np.int64) @ mu, np.eye(len(elements), dtype=np.int64)):
        raise InvariantError(f"Möbius matrix of weight {n} does not invert the zeta matrix")
    for a in (leq, moves, mu):
        a.setflags(write=False)
    return PosetSlice(n, elements, leq, hasse, mu, moves, index)


# ---------------------------------------------------------------- p_t versus f_s


def theorem32_expand(b: BinaryTree) -> frozenset[Tree]:
    """Trees ``s`` with ``p_b = Σ f_s``; checked against ``{s : s <= κ(b)}``."""
    n = leaves(b)
    p = p_basis(b)
    trees = enumerate_trees(n)
    coeffs = {s: pair(p, (s,)) for s in trees}
    rebuilt = Element()
    for s, c in coeffs.items():
        if c:
            rebuilt = rebuilt + c * dual_basis((s,))
    if rebuilt != p:
        raise InvariantError(f"p_{render_binary(b)} is not in the span of the f_s")
    bad = {render_forest((s,)): c for s, c in coeffs.items() if c not in (0, 1)}
    if bad:
        raise InvariantError(f"p_{render_binary(b)} has coefficients outside 0/1: {bad}")
    support = frozenset(s for s, c in coeffs.items() if c)
    P = poset(n)
    k = (kappa(b),)
    below = frozenset(s for s in trees if P.le((s,), k))
    if support != below:
        raise InvariantError(f"p_{render_binary(b)} support differs from the interval below κ")
    return support


def corollary33_reconstruct(s: Tree) -> Element:
    """``Σ_{κ(b) <= s} μ(κ(b), s) p_b``, checked to equal ``f_s``."""
    n = weight((s,))
    P = poset(n)
    acc = Element()
    for b in enumerate_binary_trees(n):
        k = (kappa(b),)
        if P.le(k, (s,)):
            acc = acc + P.mu(k, (s,)) * p_basis(b)
    if acc != dual_basis((s,)):
        raise InvariantError(f"Möbius reconstruction of f_{render_forest((s,))} failed")
    return acc


# ---------------------------------------------------------------- rotation oracle


def right_rotations(b: BinaryTree) -> list[BinaryTree]:
    """All ``((A,B),C) -> (A,(B,C))`` moves at any node."""
    if b == LEAF:
        return []
    out = []
    left, right = b
    if left != LEAF:
        a, bb = left
        out.append((a, (bb, right)))
    out.extend((l2, right) for l2 in right_rotations(left))
    out.extend((left, r2) for r2 in right_rotations(right))
    return out


def rotation_hasse(n: int) -> nx.DiGraph:
    """Rotation order on binary trees with ``n`` internal vertices."""
    g = nx.DiGraph()
    trees = enumerate_binary_trees(n + 1)
    g.add_nodes_from(trees)
    for b in trees:
        for c in right_rotations(b):
            g.add_edge(b, c)
    return g


def forest_hasse(n: int) -> nx.DiGraph:
    P = poset(n)
    g = nx.DiGraph()
    g.add_nodes_from(P.elements)
    g.add_edges_from(P.covers())
    return g


def tamari_isomorphism_check(n: int) -> Report:
    report = Report(f"tamari[n={n}]")
    oracle = rotation_hasse(n)
    ours = forest_hasse(n)
    r = report.add(f"forest order of weight {n} is isomorphic to the rotation order")
    r.instances = 1
    # rotations are exactly the covers; a Hasse isomorphism is an order isomorphism
    if not nx.is_directed_acyclic_graph(oracle) or len(nx.transitive_reduction(oracle).edges) != len(oracle.edges):
        r.fail(n, reason="rotation graph is not a Hasse diagram")
        return report
    matcher = nx.algorithms.isomorphism.DiGraphMatcher(ours, oracle)
    if not matcher.is_isomorphic():
        r.fail(n, forests=len(ours), binary=len(oracle), covers=(len(ours.edges), len(oracle.edges)))
        return report
    m = matcher.mapping
    oracle_leq = {(a, b) for a in oracle for b in nx.descendants(oracle, a) | {a}}
    P = poset(n)
    for F in P.elements:
        for G in P.elements:
            if P.le(F, G) != ((m[F], m[G]) in oracle_leq):
                r.fail([render_forest(F), render_forest(G)], reason="mapping does not preserve order")
                return report
    return report
