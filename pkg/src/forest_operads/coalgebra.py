"""Left-admissible cuts, the coproducts Δ and Δ↗, antipodes and the eulerian projector."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Literal

from .algebra import (
    ONE,
    DomainError,
    Element,
    Tensor,
    as_element,
    graft_leaf_forests,
    linear,
)
from .combinat import (
    UNIT,
    Comparison,
    Forest,
    Tree,
    VertexId,
    compare_left,
    induced_forest,
    ladder,
    ladder_decomposition,
    vertices,
    weight,
)


@dataclass(frozen=True)
class Cut:
    """A cut of ``host`` described by its branch: the up-closed set of cut-off vertices."""

    host: Forest
    branch_vertices: frozenset

    @property
    def cut_trees(self) -> frozenset[int]:
        return frozenset(v[0] for v in self.branch_vertices if len(v) == 1)

    @property
    def cut_edges(self) -> frozenset[tuple[VertexId, int]]:
        """``(parent, child index)`` for each edge from the trunk into the branch."""
        return frozenset(
            (v[:-1], v[-1])
            for v in self.branch_vertices
            if len(v) > 1 and v[:-1] not in self.branch_vertices
        )

    @property
    def is_total(self) -> bool:
        return len(self.branch_vertices) == weight(self.host)

    def branch(self) -> Forest:
        return induced_forest(self.host, self.branch_vertices)

    def trunk(self) -> Forest:
        rest = set(vertices(self.host)) - self.branch_vertices
        return induced_forest(self.host, rest)


def _upclosed_sets(t: Tree, path: VertexId) -> list[frozenset]:
    """All up-closed vertex sets of one tree: the root excluded, or the whole tree."""
    child_opts = [_upclosed_sets(c, path + (i,)) for i, c in enumerate(t)]
    options = [frozenset().union(*combo) for combo in itertools.product(*child_opts)]
    options.append(frozenset(_all_paths(t, path)))
    return options


def _all_paths(t: Tree, path: VertexId) -> list[VertexId]:
    out = [path]
    for i, c in enumerate(t):
        out.extend(_all_paths(c, path + (i,)))
    return out


def admissible_cuts(F: Forest) -> list[Cut]:
    """Nonempty admissible cuts, i.e. nonempty up-closed vertex sets."""
    per_tree = [_upclosed_sets(t, (i,)) for i, t in enumerate(F)]
    out = []
    for combo in itertools.product(*per_tree):
        s = frozenset().union(*combo)
        if s:
            out.append(Cut(F, s))
    return out


def _left_closed(F: Forest, branch: frozenset) -> bool:
    verts = vertices(F)
    for x in branch:
        for y in verts:
            if y not in branch and compare_left(F, y, x) is Comparison.GREATER:
                return False
    return True


@lru_cache(maxsize=None)
def _left_cuts(F: Forest) -> tuple[Cut, ...]:
    cuts = [c for c in admissible_cuts(F) if _left_closed(F, c.branch_vertices)]
    cuts.sort(key=lambda c: (len(c.branch_vertices), sorted(c.branch_vertices)))
    return tuple(cuts)


def left_admissible_cuts(F: Forest) -> list[Cut]:
    """Left-admissible cuts of ``F``, the total cut included, by branch size."""
    if not F:
        raise DomainError("the unit forest has no cuts")
    return list(_left_cuts(F))


@lru_cache(maxsize=None)
def _reduced_pairs(F: Forest) -> tuple[tuple[Forest, Forest], ...]:
    return tuple((c.branch(), c.trunk()) for c in _left_cuts(F) if not c.is_total)


def _check_reduced(x: Element) -> None:
    if x.coeff(UNIT):
        raise DomainError("reduced coproduct is defined on M only")


def delta(x) -> Tensor:
    """Δ(F) = Σ_{left-admissible c} P^c ⊗ R^c + 1 ⊗ F (the total cut supplies F ⊗ 1)."""
    x = as_element(x)
    acc: dict[tuple, int] = {}
    for F, c in x.terms.items():
        if not F:
            acc[(UNIT, UNIT)] = acc.get((UNIT, UNIT), 0) + c
            continue
        for key in ((F, UNIT), (UNIT, F)) + _reduced_pairs(F):
            acc[key] = acc.get(key, 0) + c
    return Tensor(2, acc)


def delta_red(x) -> Tensor:
    x = as_element(x)
    _check_reduced(x)
    acc: dict[tuple, int] = {}
    for F, c in x.terms.items():
        for key in _reduced_pairs(F):
            acc[key] = acc.get(key, 0) + c
    return Tensor(2, acc)


def delta_ne(x) -> Tensor:
    """Δ↗: deconcatenation, trivial splits included."""
    x = as_element(x)
    acc: dict[tuple, int] = {}
    for F, c in x.terms.items():
        for i in range(len(F) + 1):
            key = (F[:i], F[i:])
            acc[key] = acc.get(key, 0) + c
    return Tensor(2, acc)


def delta_ne_red(x) -> Tensor:
    x = as_element(x)
    _check_reduced(x)
    acc: dict[tuple, int] = {}
    for F, c in x.terms.items():
        for i in range(1, len(F)):
            key = (F[:i], F[i:])
            acc[key] = acc.get(key, 0) + c
    return Tensor(2, acc)


Kind = Literal["delta", "deltane"]
_REDUCED: dict[str, Callable] = {"delta": delta_red, "deltane": delta_ne_red}


def iterate(kind: Kind, n: int, x) -> Tensor:
    """Left-iterated reduced coproduct ``A -> A^(n+1)``; ``n = 0`` gives ``x`` itself."""
    x = as_element(x)
    _check_reduced(x)
    red = _REDUCED[kind]
    T = Tensor(1, {(F,): c for F, c in x.terms.items()})
    for _ in range(n):
        T = T.expand_factor(0, red)
        if not T:
            return Tensor(T.rank, {})
    return T


# ---------------------------------------------------------------- antipodes


def _compositions(n: int):
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in _compositions(n - first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def p_ladder_antipode(n: int) -> Element:
    """``p_n = Σ (-1)^k l_{a1}...l_{ak}`` over compositions of ``n``."""
    if n < 1:
        raise ValueError("p_n needs n >= 1")
    acc: dict[Forest, int] = {}
    for comp in _compositions(n):
        F = tuple(ladder(a) for a in comp)
        acc[F] = acc.get(F, 0) + (-1) ** len(comp)
    return Element(acc)


@lru_cache(maxsize=None)
def _antipode_forest(F: Forest) -> Element:
    from .operad import Flavor, act_forest

    if not F:
        return ONE
    if len(F) > 1:
        return Element()
    k, tail = ladder_decomposition(F[0])
    args = [Element.basis((t,)) for t in [()] + tail]
    return act_forest(Flavor.ROOT, p_ladder_antipode(k), args)


def antipode(x) -> Element:
    """S via ``S(t) = p_k ↘•(•, t2, ..., tk)``; zero on forests with two or more trees."""
    return linear(_antipode_forest)(as_element(x))


def _iterated_product(op: Callable[[Forest, Forest], Forest], key: tuple) -> Forest:
    out = key[0]
    for F in key[1:]:
        out = op(out, F)
    return out


def _series(kind: Kind, op: Callable[[Forest, Forest], Forest], x: Element) -> Element:
    acc: dict[Forest, int] = {}
    i = 0
    while True:
        T = iterate(kind, i, x)
        if not T:
            break
        sign = (-1) ** (i + 1)
        for key, c in T.terms.items():
            G = _iterated_product(op, key)
            acc[G] = acc.get(G, 0) + sign * c
        i += 1
    return Element(acc)


def antipode_ne_left(x) -> Element:
    """``S↗(a) = Σ_i (-1)^(i+1) a(1) ↗ ... ↗ a(i+1)`` over the iterated Δ̃."""
    x = as_element(x)
    _check_reduced(x)
    return _series("delta", graft_leaf_forests, x)


def antipode_ne_right(x) -> Element:
    """``S^↗(a) = Σ_i (-1)^(i+1) a(1) ... a(i+1)`` over the iterated Δ̃↗."""
    x = as_element(x)
    _check_reduced(x)
    return _series("deltane", lambda F, G: F + G, x)


def eulerian(x) -> Element:
    return antipode_ne_left(antipode_ne_right(x))


def is_primitive(x, kind: Kind = "delta") -> bool:
    return not _REDUCED[kind](as_element(x))

