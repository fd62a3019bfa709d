"""Planar rooted trees, planar forests and planar binary trees.

Representation
--------------
A planar tree is the tuple of its subtrees (left to right), so the single
vertex is ``()``.  A planar forest is the tuple of its trees, so the unit
forest ``1`` is ``()`` and the single-vertex forest is ``((),)``.  With this
encoding ``B+`` and ``B-`` do not change the underlying tuple: the tree
``B+(F)`` *is* the forest ``F`` read as a child list.

A planar binary tree is either ``LEAF == ()`` or a pair ``(left, right)``.

Text format: ``forest := tree*``, ``tree := '[' forest ']'``; binary trees use
``b := 'o' | '(' b b ')'``.
"""
from __future__ import annotations

import enum
from functools import lru_cache
from typing import Iterator, Optional, Sequence, Tuple

Tree = Tuple["Tree", ...]
Forest = Tuple[Tree, ...]
BinaryTree = tuple
VertexId = Tuple[int, ...]

DOT: Tree = ()
UNIT: Forest = ()
LEAF: BinaryTree = ()


class ParseError(ValueError):
    """Malformed bracket or binary-tree string."""

    def __init__(self, message: str, text: str, offset: int):
        super().__init__(f"{message} at offset {offset} in {text!r}")
        self.text = text
        self.offset = offset


# ---------------------------------------------------------------- weights


@lru_cache(maxsize=None)
def tree_weight(t: Tree) -> int:
    return 1 + sum(tree_weight(c) for c in t)


def weight(F: Forest) -> int:
    """Number of vertices of a forest."""
    return sum(tree_weight(t) for t in F)


def is_tree(F: Forest) -> bool:
    return len(F) == 1


# ---------------------------------------------------------------- text


def parse_forest(text: str) -> Forest:
    """Parse a bracket string such as ``"[[][]][]"``; whitespace is ignored."""
    stack: list[list] = [[]]
    depth_start: list[int] = []
    for i, ch in enumerate(text):
        if ch == "[":
            stack.append([])
            depth_start.append(i)
        elif ch == "]":
            if len(stack) == 1:
                raise ParseError("unbalanced ']'", text, i)
            children = stack.pop()
            depth_start.pop()
            stack[-1].append(tuple(children))
        elif ch.isspace():
            continue
        else:
            raise ParseError(f"unexpected character {ch!r}", text, i)
    if len(stack) != 1:
        raise ParseError("unclosed '['", text, depth_start[-1])
    return tuple(stack[0])


def parse_tree(text: str) -> Tree:
    F = parse_forest(text)
    if len(F) != 1:
        raise ParseError("expected exactly one tree", text, 0)
    return F[0]


@lru_cache(maxsize=None)
def render_tree(t: Tree) -> str:
    return "[" + "".join(render_tree(c) for c in t) + "]"


def render_forest(F: Forest) -> str:
    return "".join(render_tree(t) for t in F)


_COLLATE = str.maketrans({"]": "0", "[": "1"})


@lru_cache(maxsize=None)
def forest_key(F: Forest) -> tuple[int, str]:
    """Sort key of the canonical order.

    Forests are ordered by weight, then lexicographically by bracket string
    with ``]`` collating before ``[`` (so ``[][]`` precedes ``[[]]``).
    """
    return weight(F), render_forest(F).translate(_COLLATE)


def tree_key(t: Tree) -> tuple[int, str]:
    return forest_key((t,))


def parse_binary(text: str) -> BinaryTree:
    """Parse ``'o'`` / ``'(' b b ')'`` into nested pairs."""
    s = text
    pos = 0

    def skip() -> None:
        nonlocal pos
        while pos < len(s) and s[pos].isspace():
            pos += 1

    def node() -> BinaryTree:
        nonlocal pos
        skip()
        if pos >= len(s):
            raise ParseError("unexpected end of input", text, pos)
        ch = s[pos]
        if ch == "o":
            pos += 1
            return LEAF
        if ch == "(":
            pos += 1
            left = node()
            right = node()
            skip()
            if pos >= len(s) or s[pos] != ")":
                raise ParseError("expected ')'", text, pos)
            pos += 1
            return (left, right)
        raise ParseError(f"unexpected character {ch!r}", text, pos)

    b = node()
    skip()
    if pos != len(s):
        raise ParseError("trailing characters", text, pos)
    return b


def render_binary(b: BinaryTree) -> str:
    if b == LEAF:
        return "o"
    return "(" + render_binary(b[0]) + render_binary(b[1]) + ")"


def leaves(b: BinaryTree) -> int:
    if b == LEAF:
        return 1
    return leaves(b[0]) + leaves(b[1])


def node(left: BinaryTree, right: BinaryTree) -> BinaryTree:
    """The binary tree ``left ∨ right``."""
    return (left, right)


# ---------------------------------------------------------------- enumeration


@lru_cache(maxsize=None)
def _forests_unsorted(n: int) -> tuple[Forest, ...]:
    if n == 0:
        return (UNIT,)
    out = []
    for k in range(1, n + 1):
        for first in _forests_unsorted(k - 1):
            for rest in _forests_unsorted(n - k):
                out.append((first,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def enumerate_forests(n: int) -> tuple[Forest, ...]:
    """All planar forests of weight ``n`` in canonical order."""
    if n < 0:
        raise ValueError("weight must be non-negative")
    return tuple(sorted(_forests_unsorted(n), key=forest_key))


@lru_cache(maxsize=None)
def enumerate_trees(n: int) -> tuple[Tree, ...]:
    """All planar trees with ``n`` vertices, in canonical order."""
    if n < 1:
        raise ValueError("a tree has at least one vertex")
    return tuple(F for F in enumerate_forests(n - 1))


@lru_cache(maxsize=None)
def enumerate_binary_trees(k: int) -> tuple[BinaryTree, ...]:
    """Planar binary trees with ``k`` leaves (left subtree size ascending)."""
    if k < 1:
        raise ValueError("a binary tree has at least one leaf")
    if k == 1:
        return (LEAF,)
    out = []
    for i in range(1, k):
        for left in enumerate_binary_trees(i):
            for right in enumerate_binary_trees(k - i):
                out.append((left, right))
    return tuple(out)


def catalan(n: int) -> int:
    c = 1
    for i in range(n):
        c = c * 2 * (2 * i + 1) // (i + 2)
    return c


# ---------------------------------------------------------------- B+, B-, gamma


def bplus(F: Forest) -> Tree:
    """Graft the trees of ``F`` on a common new root."""
    return tuple(F)


def bminus(F: Forest) -> Forest:
    """Delete the root of a single-tree forest."""
    if len(F) != 1:
        raise ValueError(f"B- needs a single tree, got {render_forest(F)!r}")
    return F[0]


def gamma(F: Forest) -> Optional[Forest]:
    """``t1 t2...tn -> t2...tn`` if ``t1`` is a single vertex, else ``None`` (zero)."""
    if F and F[0] == DOT:
        return F[1:]
    return None


def ladder(n: int) -> Tree:
    if n < 1:
        raise ValueError("ladder(n) needs n >= 1")
    t: Tree = DOT
    for _ in range(n - 1):
        t = (t,)
    return t


def corolla(n: int) -> Tree:
    """Root with ``n - 1`` leaf children."""
    if n < 1:
        raise ValueError("corolla(n) needs n >= 1")
    return (DOT,) * (n - 1)


def ladder_decomposition(t: Tree) -> tuple[int, list[Tree]]:
    """The unique ``(k, [t2..tk])`` with ``t = l_k ↘•(•, t2, ..., tk)``.

    Writing ``t = B+(s1 s2...sm)``, the last tail tree is ``B+(s2...sm)`` and
    the rest comes from decomposing ``s1``.
    """
    if t == DOT:
        return 1, []
    k, tail = ladder_decomposition(t[0])
    return k + 1, tail + [t[1:]]


def kappa(b: BinaryTree) -> Tree:
    """``κ(o) = •``, ``κ(l ∨ r) = κ(r) ↘ κ(l)``."""
    if b == LEAF:
        return DOT
    left, right = b
    return (kappa(right),) + kappa(left)


def kappa_inv(t: Tree) -> BinaryTree:
    if t == DOT:
        return LEAF
    return (kappa_inv(t[1:]), kappa_inv(t[0]))


# ---------------------------------------------------------------- vertices


def vertices(F: Forest) -> list[VertexId]:
    """Vertex paths ``(tree index, child index, ...)`` in preorder."""
    out: list[VertexId] = []

    def walk(t: Tree, path: VertexId) -> None:
        out.append(path)
        for i, c in enumerate(t):
            walk(c, path + (i,))

    for i, t in enumerate(F):
        walk(t, (i,))
    return out


def subtree(F: Forest, v: VertexId) -> Tree:
    t = F[v[0]]
    for i in v[1:]:
        t = t[i]
    return t


def has_vertex(F: Forest, v: VertexId) -> bool:
    if not v or v[0] >= len(F):
        return False
    t = F[v[0]]
    for i in v[1:]:
        if i >= len(t):
            return False
        t = t[i]
    return True


class Comparison(enum.Enum):
    GREATER = "greater"
    LESS = "less"
    INCOMPARABLE = "incomparable"
    EQUAL = "equal"


def _check(F: Forest, *vs: VertexId) -> None:
    for v in vs:
        if not has_vertex(F, v):
            raise ValueError(f"{v} is not a vertex of {render_forest(F)!r}")


def compare_high(F: Forest, v: VertexId, w: VertexId) -> Comparison:
    """``v >=_high w`` when there is a path from ``w`` up to ``v``."""
    _check(F, v, w)
    if v == w:
        return Comparison.EQUAL
    if v[: len(w)] == w:
        return Comparison.GREATER
    if w[: len(v)] == v:
        return Comparison.LESS
    return Comparison.INCOMPARABLE


def compare_left(F: Forest, v: VertexId, w: VertexId) -> Comparison:
    """``v >=_left w`` when ``v`` lies strictly to the left of ``w``.

    Vertices related by ``>=_high`` are incomparable here.
    """
    high = compare_high(F, v, w)
    if high is Comparison.EQUAL:
        return high
    if high is not Comparison.INCOMPARABLE:
        return Comparison.INCOMPARABLE
    for a, b in zip(v, w):
        if a != b:
            return Comparison.GREATER if a < b else Comparison.LESS
    raise AssertionError("unreachable: prefix-free paths must differ")


def compare_hl(F: Forest, v: VertexId, w: VertexId) -> Comparison:
    """Total order ``>=_{h,l}``: union of ``>=_high`` and ``>=_left``."""
    high = compare_high(F, v, w)
    if high is not Comparison.INCOMPARABLE:
        return high
    return compare_left(F, v, w)


def induced_forest(F: Forest, keep: set[VertexId] | frozenset[VertexId]) -> Forest:
    """Forest induced on a vertex subset (a kept vertex whose parent is dropped becomes a root)."""
    roots: list[Tree] = []

    def build(t: Tree, path: VertexId) -> Tree:
        return tuple(build(c, path + (i,)) for i, c in enumerate(t) if path + (i,) in keep)

    def walk(t: Tree, path: VertexId, parent_kept: bool) -> None:
        kept = path in keep
        if kept and not parent_kept:
            roots.append(build(t, path))
        for i, c in enumerate(t):
            walk(c, path + (i,), kept)

    for i, t in enumerate(F):
        walk(t, (i,), False)
    return tuple(roots)


# ---------------------------------------------------------------- names


# Picture names used in the tables, resolved to bracket strings.  The weight 4
# and 5 names are pinned by the grafting tables and the B+ examples.
NAMED_TREES: dict[str, str] = {
    "tun": "[]",
    "tdeux": "[[]]",
    "ttroisun": "[[][]]",
    "ttroisdeux": "[[[]]]",
    "tquatreun": "[[][][]]",
    "tquatredeux": "[[[]][]]",
    "tquatretrois": "[[][[]]]",
    "tquatrequatre": "[[[][]]]",
    "tquatrecinq": "[[[[]]]]",
    "tcinqun": "[[][][][]]",
    "tcinqdeux": "[[[]][][]]",
    "tcinqtrois": "[[][[]][]]",
    "tcinqquatre": "[[][][[]]]",
    "tcinqcinq": "[[[]][[]]]",
    "tcinqsix": "[[[][]][]]",
    "tcinqsept": "[[][[][]]]",
    "tcinqhuit": "[[[[]]][]]",
    "tcinqneuf": "[[][[[]]]]",
    "tcinqdix": "[[[][][]]]",
    "tcinqonze": "[[[[]][]]]",
    "tcinqdouze": "[[[][[]]]]",
    "tcinqtreize": "[[[[][]]]]",
    "tcinqquatorze": "[[[[[]]]]]",
}

NAMED_BINARY: dict[str, str] = {
    "bun": "o",
    "bdeux": "(oo)",
    "btroisun": "((oo)o)",
    "btroisdeux": "(o(oo))",
}


def from_names(names: str | Sequence[str]) -> Forest:
    """Forest from space-separated picture names; ``"1"`` or ``""`` is the unit."""
    if isinstance(names, str):
        names = names.split()
    trees = []
    for name in names:
        if name == "1":
            continue
        trees.append(parse_tree(NAMED_TREES[name]))
    return tuple(trees)


def iter_forests_upto(n: int, start: int = 1) -> Iterator[Forest]:
    for w in range(start, n + 1):
        yield from enumerate_forests(w)
