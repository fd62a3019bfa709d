"""Elements of H, tensors, and the three products: concatenation, ↘ and ↗.

Coefficients are Python integers.  ↘ is only defined on the augmentation
ideal M, so a unit-forest operand raises :class:`DomainError`.
"""
from __future__ import annotations

from typing import Callable, Iterable, Iterator, Mapping

from .combinat import (
    DOT,
    UNIT,
    Forest,
    Tree,
    forest_key,
    render_forest,
    weight,
)


class DomainError(ValueError):
    """An operation was applied outside the domain where it is defined."""


class Element:
    """Finite integer combination of forests.  Treated as immutable."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Forest, int] | Iterable[tuple[Forest, int]] = ()):
        if isinstance(terms, Mapping):
            items = terms.items()
        else:
            items = terms
        acc: dict[Forest, int] = {}
        for F, c in items:
            acc[F] = acc.get(F, 0) + c
        self.terms = {F: c for F, c in acc.items() if c}

    @classmethod
    def basis(cls, F: Forest, coeff: int = 1) -> "Element":
        return cls({F: coeff})

    def __iter__(self) -> Iterator[tuple[Forest, int]]:
        for F in sorted(self.terms, key=forest_key):
            yield F, self.terms[F]

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Element):
            return self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    __hash__ = None  # type: ignore[assignment]

    def __add__(self, other: "Element") -> "Element":
        return add(self, other)

    def __sub__(self, other: "Element") -> "Element":
        return add(self, scale(-1, other))

    def __neg__(self) -> "Element":
        return scale(-1, self)

    def __rmul__(self, c: int) -> "Element":
        return scale(c, self)

    def __mul__(self, other):
        if isinstance(other, int):
            return scale(other, self)
        return mul(self, other)

    def coeff(self, F: Forest) -> int:
        return self.terms.get(F, 0)

    def homogeneous(self, n: int) -> "Element":
        return Element({F: c for F, c in self.terms.items() if weight(F) == n})

    def weights(self) -> set[int]:
        return {weight(F) for F in self.terms}

    def __repr__(self) -> str:
        return f"Element({to_text(self)})"


ZERO = Element()
ONE = Element.basis(UNIT)


def as_element(x) -> Element:
    if isinstance(x, Element):
        return x
    return Element.basis(x)


def _term_text(F: Forest) -> str:
    return render_forest(F) if F else "1"


def to_text(x: Element) -> str:
    """``"-1*[[]] + 1*[][]"`` style; the unit forest is written ``1``."""
    if not x:
        return "0"
    parts = []
    for i, (F, c) in enumerate(x):
        sign = "-" if c < 0 else "+"
        body = f"{abs(c)}*{_term_text(F)}"
        if i == 0:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append(f" {sign} {body}")
    return "".join(parts)


def to_json(x: Element) -> list[dict]:
    return [{"coeff": c, "forest": render_forest(F)} for F, c in x]


# ---------------------------------------------------------------- linear ops


def add(x: Element, y: Element) -> Element:
    terms = dict(x.terms)
    for F, c in y.terms.items():
        terms[F] = terms.get(F, 0) + c
    return Element(terms)


def scale(c: int, x: Element) -> Element:
    return Element({F: c * v for F, v in x.terms.items()})


def counit(x: Element) -> int:
    return x.coeff(UNIT)


def linear(f: Callable[[Forest], Element | Forest | None]) -> Callable[[Element], Element]:
    """Extend a basis map (returning an Element, a forest or ``None`` for zero)."""

    def ext(x: Element) -> Element:
        acc: dict[Forest, int] = {}
        for F, c in x.terms.items():
            r = f(F)
            if r is None:
                continue
            if isinstance(r, Element):
                for G, d in r.terms.items():
                    acc[G] = acc.get(G, 0) + c * d
            else:
                acc[r] = acc.get(r, 0) + c
        return Element(acc)

    return ext


def bilinear(f: Callable[[Forest, Forest], Forest]) -> Callable[[Element, Element], Element]:
    def ext(x: Element, y: Element) -> Element:
        x, y = as_element(x), as_element(y)
        acc: dict[Forest, int] = {}
        for F, c in x.terms.items():
            for G, d in y.terms.items():
                H = f(F, G)
                acc[H] = acc.get(H, 0) + c * d
        return Element(acc)

    ext.__name__ = f.__name__
    ext.__doc__ = f.__doc__
    return ext


# ---------------------------------------------------------------- products


def concat(F: Forest, G: Forest) -> Forest:
    return F + G


def graft_root_forests(F: Forest, G: Forest) -> Forest:
    """``F ↘ G = B+(F G1) t2...tn`` where ``G = B+(G1) t2...tn``."""
    if not F or not G:
        raise DomainError("↘ is only defined on non-empty forests")
    return (F + G[0],) + G[1:]


def _onto_leftmost_leaf(t: Tree, F: Forest) -> Tree:
    if not t:
        return F
    return (_onto_leftmost_leaf(t[0], F),) + t[1:]


def graft_leaf_forests(F: Forest, G: Forest) -> Forest:
    """Graft ``F`` on the leftmost leaf of ``G``; ``F ↗ 1 = F``."""
    if not G:
        return F
    return (_onto_leftmost_leaf(G[0], F),) + G[1:]


mul = bilinear(concat)
graft_root = bilinear(graft_root_forests)
graft_leaf = bilinear(graft_leaf_forests)


def bplus_element(x: Element) -> Element:
    """Linear extension of ``B+``."""
    return linear(lambda F: (F,))(x)


def left_factorization(F: Forest) -> list[Forest]:
    """The unique ``[F1, ..., Fn]`` with ``F = (•F1) ↗ ... ↗ (•Fn)``.

    Peels the last factor: ``Y ↗ (•Fn) = B+(Y) Fn``.
    """
    if not F:
        raise DomainError("the unit forest has no left factorization")
    factors: list[Forest] = []
    while True:
        first, rest = F[0], F[1:]
        factors.append(rest)
        if first == DOT:
            break
        F = first
    factors.reverse()
    return factors


def recombine_left_factors(factors: list[Forest]) -> Forest:
    out: Forest = UNIT
    for Fi in factors:
        out = graft_leaf_forests(out, (DOT,) + Fi) if out else (DOT,) + Fi
    return out


# ---------------------------------------------------------------- tensors


class Tensor:
    """Finite integer combination of k-tuples of forests."""

    __slots__ = ("rank", "terms")

    def __init__(self, rank: int, terms: Mapping[tuple, int] | Iterable[tuple[tuple, int]] = ()):
        self.rank = rank
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[tuple, int] = {}
        for key, c in items:
            if len(key) != rank:
                raise ValueError(f"tensor term of length {len(key)} in rank {rank}")
            acc[key] = acc.get(key, 0) + c
        self.terms = {k: c for k, c in acc.items() if c}

    def __iter__(self):
        for key in sorted(self.terms, key=lambda k: tuple(forest_key(F) for F in k)):
            yield key, self.terms[key]

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Tensor):
            return self.rank == other.rank and self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    __hash__ = None  # type: ignore[assignment]

    def __add__(self, other: "Tensor") -> "Tensor":
        if not other.terms:
            return self
        if not self.terms:
            return other
        if self.rank != other.rank:
            raise ValueError("rank mismatch")
        terms = dict(self.terms)
        for k, c in other.terms.items():
            terms[k] = terms.get(k, 0) + c
        return Tensor(self.rank, terms)

    def __sub__(self, other: "Tensor") -> "Tensor":
        return self + other.scale(-1)

    def scale(self, c: int) -> "Tensor":
        return Tensor(self.rank, {k: c * v for k, v in self.terms.items()})

    def map_factor(self, i: int, f: Callable[[Forest], Element]) -> "Tensor":
        """Apply a linear map given on forests to factor ``i``."""
        acc: dict[tuple, int] = {}
        for key, c in self.terms.items():
            for G, d in f(key[i]).terms.items():
                nk = key[:i] + (G,) + key[i + 1:]
                acc[nk] = acc.get(nk, 0) + c * d
        return Tensor(self.rank, acc)

    def expand_factor(self, i: int, f: Callable[[Forest], "Tensor"]) -> "Tensor":
        """Replace factor ``i`` by a tensor (e.g. apply a coproduct there)."""
        acc: dict[tuple, int] = {}
        rank = None
        for key, c in self.terms.items():
            T = f(key[i])
            rank = self.rank - 1 + T.rank
            for sub, d in T.terms.items():
                nk = key[:i] + sub + key[i + 1:]
                acc[nk] = acc.get(nk, 0) + c * d
        return Tensor(rank if rank is not None else self.rank + 1, acc)

    def __repr__(self) -> str:
        return f"Tensor({tensor_to_text(self)})"


def tensor(*pairs: tuple[tuple, int], rank: int = 2) -> Tensor:
    return Tensor(rank, pairs)


def simple_tensor(*factors) -> Tensor:
    """``x1 ⊗ ... ⊗ xk`` for Elements or forests."""
    els = [as_element(x) for x in factors]
    acc: dict[tuple, int] = {(): 1}
    for e in els:
        nxt: dict[tuple, int] = {}
        for key, c in acc.items():
            for F, d in e.terms.items():
                nxt[key + (F,)] = nxt.get(key + (F,), 0) + c * d
        acc = nxt
    return Tensor(len(els), acc)


def tensor_to_text(T: Tensor) -> str:
    """One term per line: ``c * F1 ⊗ F2``."""
    if not T:
        return "0"
    return "\n".join(
        f"{c} * " + " ⊗ ".join(_term_text(F) for F in key) for key, c in T
    )


def tensor_to_json(T: Tensor) -> list[dict]:
    return [{"coeff": c, "factors": [render_forest(F) for F in key]} for key, c in T]


def left_act(op: Callable[[Forest, Forest], Forest], x: Element, T: Tensor) -> Tensor:
    """``(x ⊗ 1) op T``: multiply the first factor on the left."""
    acc: dict[tuple, int] = {}
    for F, c in x.terms.items():
        for key, d in T.terms.items():
            nk = (op(F, key[0]),) + key[1:]
            acc[nk] = acc.get(nk, 0) + c * d
    return Tensor(T.rank, acc)


def right_act(op: Callable[[Forest, Forest], Forest], T: Tensor, y: Element) -> Tensor:
    """``T op (1 ⊗ y)``: multiply the last factor on the right."""
    acc: dict[tuple, int] = {}
    for key, d in T.terms.items():
        for G, c in y.terms.items():
            nk = key[:-1] + (op(key[-1], G),)
            acc[nk] = acc.get(nk, 0) + c * d
    return Tensor(T.rank, acc)
