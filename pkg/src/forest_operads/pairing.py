"""The Hopf pairing on forests and the dual basis (f_F) it determines."""
from __future__ import annotations

import csv
import io
import threading
from dataclasses import dataclass
from functools import lru_cache

from .algebra import ONE, Element, as_element, bplus_element, graft_leaf, to_text
from .coalgebra import delta
from .combinat import DOT, Forest, enumerate_forests, enumerate_trees, gamma, render_forest
from .linalg import determinant

_lock = threading.RLock()
_memo: dict[tuple[Forest, Forest], int] = {}


def _pair(F: Forest, G: Forest) -> int:
    key = (F, G)
    hit = _memo.get(key)
    if hit is not None:
        return hit
    if not F:
        val = 1 if not G else 0
    elif len(F) == 1:
        # <B+(x), y> = <x, γ(y)>
        g = gamma(G)
        val = 0 if g is None else _pair(F[0], g)
    else:
        # <t F', G> = Σ <F', G(1)> <t, G(2)>
        t, rest = F[:1], F[1:]
        val = 0
        for (G1, G2), c in delta(G).terms.items():
            a = _pair(rest, G1)
            if a:
                val += c * a * _pair(t, G2)
    with _lock:
        _memo[key] = val
    return val


def pair(x, y) -> int:
    """Bilinear pairing of two Elements (or forests)."""
    x, y = as_element(x), as_element(y)
    total = 0
    for F, c in x.terms.items():
        for G, d in y.terms.items():
            total += c * d * _pair(F, G)
    return total


def clear_cache() -> None:
    with _lock:
        _memo.clear()


@dataclass(frozen=True)
class GramSlice:
    weight: int
    basis: tuple[Forest, ...]
    matrix: tuple[tuple[int, ...], ...]
    det: int

    @property
    def symmetric(self) -> bool:
        m = self.matrix
        return all(m[i][j] == m[j][i] for i in range(len(m)) for j in range(i))

    def labels(self) -> list[str]:
        return [render_forest(F) for F in self.basis]

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow([""] + self.labels())
        for label, row in zip(self.labels(), self.matrix):
            w.writerow([label] + list(row))
        return buf.getvalue()

    def to_json(self) -> dict:
        return {
            "weight": self.weight,
            "basis": self.labels(),
            "matrix": [list(r) for r in self.matrix],
            "determinant": self.det,
            "symmetric": self.symmetric,
        }


@lru_cache(maxsize=None)
def gram(n: int) -> GramSlice:
    if n < 1:
        raise ValueError("gram(n) needs n >= 1")
    basis = enumerate_forests(n)
    m = tuple(tuple(_pair(F, G) for G in basis) for F in basis)
    g = GramSlice(n, basis, m, determinant(m))
    if not g.symmetric:
        raise AssertionError(f"Gram matrix of weight {n} is not symmetric")
    if g.det == 0:
        raise AssertionError(f"Gram matrix of weight {n} is singular")
    return g


# ---------------------------------------------------------------- primitives and duals


@lru_cache(maxsize=None)
def q_sequence(n: int) -> Element:
    """``q1 = •``, ``q_(n+1) = q_n • - B+(q_n)``."""
    if n < 1:
        raise ValueError("q_n needs n >= 1")
    if n == 1:
        return Element.basis((DOT,))
    q = q_sequence(n - 1)
    return q * Element.basis((DOT,)) - bplus_element(q)


def _gamma_inv_forest(F: Forest) -> Element:
    from .operad import Flavor, act_forest

    args = [Element.basis((DOT,))] + [Element.basis((t,)) for t in F]
    return act_forest(Flavor.ROOT, q_sequence(len(F) + 1), args)


def gamma_inv_prim(x) -> Element:
    """The primitive preimage under γ: ``t1...tn -> q_(n+1) ↘•(•, t1, ..., tn)``."""
    x = as_element(x)
    acc = Element()
    for F, c in x.terms.items():
        acc = acc + c * _gamma_inv_forest(F)
    return acc


@lru_cache(maxsize=None)
def _dual(F: Forest) -> Element:
    if not F:
        return ONE
    if len(F) == 1:
        return gamma_inv_prim(_dual(F[0]))
    out = _dual(F[-1:])
    for t in reversed(F[:-1]):
        out = graft_leaf(out, _dual((t,)))
    return out


def dual_basis(F: Forest) -> Element:
    """``f_F`` with ``<f_F, G> = δ_(F,G)``."""
    return _dual(tuple(F))


def primitive_basis(n: int) -> list[Element]:
    return [dual_basis((t,)) for t in enumerate_trees(n)]


def dual_table(max_weight: int) -> list[tuple[Forest, Element]]:
    return [(F, dual_basis(F)) for w in range(1, max_weight + 1) for F in enumerate_forests(w)]


def dual_table_text(rows: list[tuple[Forest, Element]]) -> str:
    width = max((len(render_forest(F)) for F, _ in rows), default=0)
    return "\n".join(f"{render_forest(F).ljust(width)}  {to_text(f)}" for F, f in rows)
