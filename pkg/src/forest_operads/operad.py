"""The operads P↘ and P↗ realised on forests.

An operad element of arity ``n`` is a homogeneous Element of weight ``n``;
composition and the action on M share :func:`act_forest`, which follows the
recursion ``• ∘ (H) = H``, ``B+(F) ∘ (H1..H_{n+1}) = (F ∘ (H1..Hn)) ? H_{n+1}``,
``(FG) ∘ (...) = (F ∘ (...)) (G ∘ (...))``.
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable, Sequence

from .algebra import (
    DomainError,
    Element,
    as_element,
    graft_leaf,
    graft_leaf_forests,
    graft_root,
    graft_root_forests,
    mul,
)
from .report import RelationResult, Report
from .combinat import (
    DOT,
    LEAF,
    UNIT,
    BinaryTree,
    Forest,
    catalan,
    corolla,
    enumerate_binary_trees,
    enumerate_forests,
    enumerate_trees,
    leaves,
    render_binary,
    render_forest,
    weight,
)


class Flavor(enum.Enum):
    ROOT = "root"  # ↘
    LEAF = "leaf"  # ↗

    @property
    def product(self) -> Callable[[Element, Element], Element]:
        return graft_root if self is Flavor.ROOT else graft_leaf

    @property
    def forest_product(self) -> Callable[[Forest, Forest], Forest]:
        return graft_root_forests if self is Flavor.ROOT else graft_leaf_forests

    @property
    def symbol(self) -> str:
        return "↘" if self is Flavor.ROOT else "↗"


class ArityError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class OperadElement:
    flavor: Flavor
    value: Element
    arity: int = field(init=False)

    def __post_init__(self):
        ws = self.value.weights()
        if len(ws) > 1 or 0 in ws:
            raise DomainError("operad elements must be homogeneous of positive weight")
        object.__setattr__(self, "arity", ws.pop() if ws else 0)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, OperadElement):
            return NotImplemented
        return self.flavor is other.flavor and self.value == other.value

    __hash__ = None  # type: ignore[assignment]


def element(flavor: Flavor, x) -> OperadElement:
    return OperadElement(flavor, as_element(x))


def unit(flavor: Flavor) -> OperadElement:
    return element(flavor, (DOT,))


def _check_args(args: Sequence[Element]) -> None:
    for a in args:
        if a.coeff(UNIT):
            raise DomainError("operad arguments must lie in M (no unit-forest term)")


def _act_basis(flavor: Flavor, F: Forest, args: Sequence[Element]) -> Element:
    if len(F) == 1:
        t = F[0]
        if t == DOT:
            return args[0]
        inner = _act_basis(flavor, t, args[:-1])
        return flavor.product(inner, args[-1])
    w = weight(F[:1])
    return mul(_act_basis(flavor, F[:1], args[:w]), _act_basis(flavor, F[1:], args[w:]))


def act_forest(flavor: Flavor, p, args: Sequence) -> Element:
    """``p ?•(args)`` for a forest or homogeneous Element ``p``; multilinear."""
    p = as_element(p)
    args = [as_element(a) for a in args]
    _check_args(args)
    acc = Element()
    for F, c in p.terms.items():
        if weight(F) != len(args):
            raise ArityError(
                f"{render_forest(F)!r} has arity {weight(F)}, got {len(args)} arguments"
            )
        acc = acc + c * _act_basis(flavor, F, args)
    return acc


def act(p: OperadElement, args: Sequence) -> Element:
    if p.arity != len(args) and p.value:
        raise ArityError(f"arity {p.arity} operation given {len(args)} arguments")
    return act_forest(p.flavor, p.value, args)


def compose(p: OperadElement, ps: Sequence[OperadElement]) -> OperadElement:
    """Operad composition ``p ∘ (p1, ..., pn)``."""
    for q in ps:
        if q.flavor is not p.flavor:
            raise DomainError("cannot compose operad elements of different flavors")
    if p.arity != len(ps):
        raise ArityError(f"arity {p.arity} operation given {len(ps)} inputs")
    return OperadElement(p.flavor, act_forest(p.flavor, p.value, [q.value for q in ps]))


# ---------------------------------------------------------------- reports


def _text(x) -> str:
    from .algebra import to_text

    return to_text(as_element(x))


def basis_tuples(k: int, max_weight: int) -> Iterable[tuple[Forest, ...]]:
    """All ``k``-tuples of non-unit forests with total weight at most ``max_weight``."""

    def rec(k: int, budget: int):
        if k == 0:
            yield ()
            return
        for w in range(1, budget - (k - 1) + 1):
            for F in enumerate_forests(w):
                for rest in rec(k - 1, budget - w):
                    yield (F,) + rest

    yield from rec(k, max_weight)


# ---------------------------------------------------------------- presentations


G2: Forest = (((),),)  # the ladder l2 as a forest


def _generators(flavor: Flavor) -> tuple[OperadElement, OperadElement, OperadElement]:
    return unit(flavor), element(flavor, ((), ())), element(flavor, G2)


def presentation_relations(flavor: Flavor):
    """The three defining relations as pairs of composites in P(3)."""
    I, m, g = _generators(flavor)
    s = flavor.symbol
    rels = [
        (f"m∘({s},I) = {s}∘(I,m)", compose(m, [g, I]), compose(g, [I, m])),
        ("m∘(m,I) = m∘(I,m)", compose(m, [m, I]), compose(m, [I, m])),
    ]
    if flavor is Flavor.ROOT:
        rels.append((f"{s}∘(m,I) = {s}∘(I,{s})", compose(g, [m, I]), compose(g, [I, g])))
    else:
        rels.append((f"{s}∘({s},I) = {s}∘(I,{s})", compose(g, [g, I]), compose(g, [I, g])))
    return rels


def check_presentation(flavor: Flavor, max_weight: int = 6) -> Report:
    """Both sides of each defining relation, in P(3) and acting on all basis triples."""
    report = Report(f"presentation[{flavor.value}]")
    for name, lhs, rhs in presentation_relations(flavor):
        r = report.add(f"{name} in P(3)")
        r.instances += 1
        if lhs != rhs:
            r.fail("P(3)", lhs=_text(lhs.value), rhs=_text(rhs.value))
        r = report.add(f"{name} on triples, weight <= {max_weight}")
        for triple in basis_tuples(3, max_weight):
            r.instances += 1
            a = act(lhs, triple)
            b = act(rhs, triple)
            if a != b:
                r.fail([render_forest(F) for F in triple], lhs=_text(a), rhs=_text(b))
    return report


def check_operad_axioms(flavor: Flavor, max_weight: int = 5) -> Report:
    """Associativity and unit axioms, exhaustively on basis forests.

    Instances: ``p`` of arity ``n``, ``p_i`` of arities ``k_i``, ``p_ij`` forests,
    with total final arity at most ``max_weight``.
    """
    report = Report(f"operad-axioms[{flavor.value}]")
    I = unit(flavor)
    assoc = report.add(f"associativity, final arity <= {max_weight}")
    units = report.add(f"unit axioms, arity <= {max_weight}")
    for n in range(1, max_weight + 1):
        for P in enumerate_forests(n):
            p = element(flavor, P)
            units.instances += 1
            if compose(p, [I] * n) != p or compose(I, [p]) != p:
                units.fail(render_forest(P))
    for n in range(1, max_weight + 1):
        for P in enumerate_forests(n):
            p = element(flavor, P)
            for mids in basis_tuples(n, max_weight):
                qs = [element(flavor, Q) for Q in mids]
                inner_arities = [weight(Q) for Q in mids]
                total = sum(inner_arities)
                outer = compose(p, qs)
                for leaves_ in basis_tuples(total, max_weight):
                    if sum(weight(F) for F in leaves_) > max_weight:
                        continue
                    rs = [element(flavor, F) for F in leaves_]
                    lhs = compose(outer, rs)
                    groups, pos = [], 0
                    for q, k in zip(qs, inner_arities):
                        groups.append(compose(q, rs[pos:pos + k]))
                        pos += k
                    rhs = compose(p, groups)
                    assoc.instances += 1
                    if lhs != rhs:
                        assoc.fail(
                            [render_forest(P), [render_forest(Q) for Q in mids],
                             [render_forest(F) for F in leaves_]]
                        )
    return report


# ---------------------------------------------------------------- Θ and p_t


def _q2() -> Element:
    return Element({((), ()): 1, G2: -1})


@lru_cache(maxsize=None)
def _p_basis(b: BinaryTree) -> Element:
    if b == LEAF:
        return Element.basis((DOT,))
    left, right = b
    return act_forest(Flavor.LEAF, _q2(), [_p_basis(left), _p_basis(right)])


def p_basis(b: BinaryTree) -> Element:
    """``p_o = •``, ``p_{l∨r} = p_l p_r - p_l ↗ p_r``."""
    return _p_basis(b)


def theta(b: BinaryTree) -> OperadElement:
    """Θ(b) in P↗ for the operad morphism sending ``o∨o`` to ``•• - l2``."""
    return OperadElement(Flavor.LEAF, _p_basis(b))


def binary_compose(b: BinaryTree, bs: Sequence[BinaryTree]) -> BinaryTree:
    """Graft ``bs[i]`` on the i-th leaf of ``b`` (left to right)."""
    it = iter(bs)

    def rec(t: BinaryTree) -> BinaryTree:
        if t == LEAF:
            return next(it)
        return (rec(t[0]), rec(t[1]))

    if leaves(b) != len(bs):
        raise ArityError("number of grafted trees must equal the number of leaves")
    return rec(b)


def check_theta_morphism(max_leaves: int = 5) -> RelationResult:
    r = RelationResult(f"Θ(b∘(b1..bk)) = Θ(b)∘(Θ(b1)..Θ(bk)), total leaves <= {max_leaves}")
    for k in range(1, max_leaves + 1):
        for b in enumerate_binary_trees(k):
            for sizes in _compositions_of_at_most(k, max_leaves):
                for bs in itertools.product(*[enumerate_binary_trees(s) for s in sizes]):
                    r.instances += 1
                    lhs = theta(binary_compose(b, bs))
                    rhs = compose(theta(b), [theta(x) for x in bs])
                    if lhs != rhs:
                        r.fail([render_binary(b), [render_binary(x) for x in bs]])
    return r


def _compositions_of_at_most(parts: int, total: int):
    def rec(parts, budget):
        if parts == 0:
            yield ()
            return
        for s in range(1, budget - parts + 2):
            for rest in rec(parts - 1, budget - s):
                yield (s,) + rest

    yield from rec(parts, total)


# ---------------------------------------------------------------- primitive suboperads


def _rank(vectors: list[Element], basis: Sequence[Forest]) -> int:
    from .linalg import rank, vectors_to_matrix

    return rank(vectors_to_matrix(vectors, basis))


def prim1_check(n: int) -> Report:
    """``(p_t)``, ``t`` binary with ``n`` leaves: primitive, independent, same span as ``(f_t)``."""
    from .coalgebra import is_primitive
    from .pairing import dual_basis

    report = Report(f"prim1[n={n}]")
    basis = enumerate_forests(n)
    ps = [p_basis(b) for b in enumerate_binary_trees(n)]
    prim = report.add("each p_t is primitive for Δ̃")
    for b, p in zip(enumerate_binary_trees(n), ps):
        prim.instances += 1
        if not is_primitive(p):
            prim.fail(render_binary(b))
    fs = [dual_basis((t,)) for t in enumerate_trees(n)]
    cat = catalan(n - 1)
    r = report.add(f"family size = rank = Catalan({n - 1}) = {cat}")
    r.instances = 1
    rp = _rank(ps, basis)
    if not (len(ps) == cat == rp):
        r.fail(n, size=len(ps), rank=rp)
    r = report.add("span(p_t) = span(f_t)")
    r.instances = 1
    rf, rboth = _rank(fs, basis), _rank(ps + fs, basis)
    if not (rp == rf == rboth):
        r.fail(n, rank_p=rp, rank_f=rf, rank_joint=rboth)
    return report


def check_q_sequence(max_n: int = 6) -> list[RelationResult]:
    """q_n from the pairing module vs. ``(••-l2)↘∘(q_{n-1}, •)`` and ``↗∘``; Ker Δ̃."""
    from .coalgebra import is_primitive
    from .pairing import q_sequence

    out = []
    for flavor in (Flavor.ROOT, Flavor.LEAF):
        r = RelationResult(f"q_n = (••-l2){flavor.symbol}∘(q_(n-1), •), n <= {max_n}")
        for n in range(2, max_n + 1):
            r.instances += 1
            via = act_forest(flavor, _q2(), [q_sequence(n - 1), Element.basis((DOT,))])
            if via != q_sequence(n):
                r.fail(n)
        out.append(r)
    r = RelationResult(f"q_n is primitive for Δ̃, n <= {max_n}")
    for n in range(1, max_n + 1):
        r.instances += 1
        if not is_primitive(q_sequence(n)):
            r.fail(n)
    out.append(r)
    return out


def corolla_relation(k: int, l: int) -> tuple[OperadElement, OperadElement]:
    """``c_k ∘ (c_l, I^(k-1))`` and ``c_l ∘ (I^(l-1), c_k)`` in P↗."""
    I = unit(Flavor.LEAF)
    ck = element(Flavor.LEAF, (corolla(k),))
    cl = element(Flavor.LEAF, (corolla(l),))
    return compose(ck, [cl] + [I] * (k - 1)), compose(cl, [I] * (l - 1) + [ck])


def kernel_dimension(vectors_of: Callable[[Forest], Element], n: int) -> int:
    """Dimension of the kernel of a linear map on the weight-``n`` slice."""
    from .linalg import rank

    basis = enumerate_forests(n)
    images = [vectors_of(F) for F in basis]
    keys = sorted({k for T in images for k in T.terms}, key=repr)
    index = {k: i for i, k in enumerate(keys)}
    matrix = []
    for T in images:
        row = [0] * len(keys)
        for k, c in T.terms.items():
            row[index[k]] = c
        matrix.append(row)
    return len(basis) - (rank(matrix) if keys else 0)


def prim2_check(n: int, max_kl: int = 5, reach_weight: int = 6) -> Report:
    """Ker Δ̃↗ = span of trees; corolla relations; corolla composites reach every tree."""
    from .coalgebra import delta_ne_red

    report = Report(f"prim2[n={n}]")
    r = report.add(f"Ker Δ̃↗ in weight {n} is spanned by the trees")
    r.instances = 1
    trees = enumerate_trees(n)
    dim = kernel_dimension(delta_ne_red, n)
    in_kernel = all(not delta_ne_red((t,)) for t in trees)
    if not (in_kernel and dim == len(trees)):
        r.fail(n, kernel_dim=dim, trees=len(trees), trees_in_kernel=in_kernel)
    r = report.add(f"c_k∘(c_l,I..I) = c_l∘(I..I,c_k), 2 <= k,l <= {max_kl}")
    for k in range(2, max_kl + 1):
        for l in range(2, max_kl + 1):
            r.instances += 1
            lhs, rhs = corolla_relation(k, l)
            expected = ((corolla(l),) + (DOT,) * (k - 2),)
            if not (lhs == rhs and lhs.value == Element.basis(expected)):
                r.fail((k, l), lhs=_text(lhs.value), rhs=_text(rhs.value))
    r = report.add(f"t = c_(k+1)↗∘(t1..tk, •) for every tree of weight <= {reach_weight}")
    for w in range(2, reach_weight + 1):
        for t in enumerate_trees(w):
            r.instances += 1
            k = len(t)
            c = element(Flavor.LEAF, (corolla(k + 1),))
            args = [element(Flavor.LEAF, (s,)) for s in t] + [unit(Flavor.LEAF)]
            if compose(c, args).value != Element.basis((t,)):
                r.fail(render_forest((t,)))
    return report


def phi_root(b: BinaryTree) -> Forest:
    """``φ(o) = •``, ``φ(l∨r) = φ(l) ↘ φ(r)``."""
    if b == LEAF:
        return (DOT,)
    return graft_root_forests(phi_root(b[0]), phi_root(b[1]))


def prim_root_check(n: int) -> Report:
    report = Report(f"prim_root[n={n}]")
    r = report.add(f"φ is a bijection from binary trees with {n} leaves onto trees of weight {n}")
    r.instances = 1
    images = [phi_root(b) for b in enumerate_binary_trees(n)]
    targets = {(t,) for t in enumerate_trees(n)}
    if len(set(images)) != len(images) or set(images) != targets:
        r.fail(n, images=len(set(images)), trees=len(targets))
    return report
