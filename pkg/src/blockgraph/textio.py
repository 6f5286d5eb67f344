"""Plain-text graph format.

::

    # comment
    n 4
    w 0 1/2 -1 0
    e 0 1
    e 1 2

The ``w`` line is optional (all weights zero when absent).  Vertex ids are
0-based; weights are integers or ``p/q`` fractions in lowest terms.
"""
from __future__ import annotations

import re
from fractions import Fraction
from pathlib import Path

from .exceptions import GraphFormatError
from .graph import WeightedGraph, build_graph

_RATIONAL = re.compile(r"^(-?\d+)(?:/(\d+))?$")


def parse_rational(token: str) -> Fraction:
    m = _RATIONAL.match(token)
    if not m:
        raise GraphFormatError(f"bad rational {token!r}")
    num = int(m.group(1))
    if m.group(2) is None:
        return Fraction(num)
    den = int(m.group(2))
    if den == 0:
        raise GraphFormatError(f"zero denominator in {token!r}")
    value = Fraction(num, den)
    if value.denominator != den:
        raise GraphFormatError(f"{token!r} is not in lowest terms")
    return value


def format_rational(value: Fraction) -> str:
    return str(Fraction(value))


def _int(token: str, line_no: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise GraphFormatError(f"line {line_no}: expected an integer, got {token!r}") from None


def parse_graph(text: str) -> WeightedGraph:
    n = None
    weights = None
    edges = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tag, *rest = line.split()
        if n is None:
            if tag != "n" or len(rest) != 1:
                raise GraphFormatError(f"line {line_no}: first record must be 'n <count>'")
            n = _int(rest[0], line_no)
            if n < 0:
                raise GraphFormatError(f"line {line_no}: negative vertex count")
        elif tag == "w":
            if weights is not None:
                raise GraphFormatError(f"line {line_no}: duplicate weight line")
            if edges:
                raise GraphFormatError(f"line {line_no}: weight line must precede edges")
            if len(rest) != n:
                raise GraphFormatError(f"line {line_no}: expected {n} weights, got {len(rest)}")
            try:
                weights = [parse_rational(tok) for tok in rest]
            except GraphFormatError as exc:
                raise GraphFormatError(f"line {line_no}: {exc}") from None
        elif tag == "e":
            if len(rest) != 2:
                raise GraphFormatError(f"line {line_no}: edge record needs two ids")
            edges.append((_int(rest[0], line_no), _int(rest[1], line_no)))
        else:
            raise GraphFormatError(f"line {line_no}: unknown record {tag!r}")
    if n is None:
        raise GraphFormatError("missing 'n <count>' record")
    return build_graph(n, edges, weights)


def format_graph(g: WeightedGraph) -> str:
    lines = [f"n {g.n}"]
    if g.n:
        lines.append("w " + " ".join(format_rational(w) for w in g.weights))
    lines.extend(f"e {u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def read_graph(path: str | Path) -> WeightedGraph:
    return parse_graph(Path(path).read_text(encoding="utf-8"))


def write_graph(g: WeightedGraph, path: str | Path) -> None:
    Path(path).write_text(format_graph(g), encoding="utf-8")
