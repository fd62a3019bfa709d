"""Readers for the golden tables, which are written in tree names."""
from __future__ import annotations

import re
from pathlib import Path

from forest_operads.algebra import Element, Tensor
from forest_operads.combinat import from_names

GOLDEN = Path(__file__).parent / "golden"


def lines(name: str) -> list[str]:
    out = []
    for raw in (GOLDEN / name).read_text(encoding="utf-8").splitlines():
        raw = raw.strip()
        if raw and not raw.startswith("#"):
            out.append(raw)
    return out


def _signed_terms(text: str) -> list[tuple[int, str]]:
    text = text.strip()
    if not text.startswith("-"):
        text = "+ " + text
    parts = re.split(r"\s*([+-])\s*", text)[1:]
    return [(1 if sign == "+" else -1, body) for sign, body in zip(parts[::2], parts[1::2])]


def named_element(text: str) -> Element:
    return Element([(from_names(body), c) for c, body in _signed_terms(text)])


def named_tensor(text: str) -> Tensor:
    terms = []
    for c, body in _signed_terms(text):
        left, right = body.split("|")
        terms.append(((from_names(left), from_names(right)), c))
    return Tensor(2, terms)


def equations(name: str) -> list[tuple[str, str]]:
    return [tuple(s.strip() for s in line.split("=", 1)) for line in lines(name)]
