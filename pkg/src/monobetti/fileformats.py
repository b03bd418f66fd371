"""Text formats for ideals and graphs.

Ideal files::

    ring 4
    # the complement of the 4-cycle
    x1*x3
    x2*x4

Graph files::

    vertices 4
    1 2
    2 3
"""
from __future__ import annotations

import re
from pathlib import Path

from .errors import ParseError
from .graphs import Graph
from .ideal import MonomialIdeal, PolynomialContext, minimalize, parse_monomial

_COMMENT = re.compile(r"(^|\s)#.*$")


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = _COMMENT.sub("", raw).strip()
        if line:
            yield lineno, line


def _header(lines, keyword: str) -> int:
    try:
        lineno, first = next(lines)
    except StopIteration:
        raise ParseError(f"empty file: expected '{keyword} <n>'") from None
    parts = first.split()
    if len(parts) != 2 or parts[0] != keyword or not parts[1].isdigit() or int(parts[1]) < 1:
        raise ParseError(f"line {lineno}: expected '{keyword} <n>' with n >= 1, got {first!r}")
    return int(parts[1])


def parse_ideal(text: str) -> MonomialIdeal:
    lines = _content_lines(text)
    n = _header(lines, "ring")
    ctx = PolynomialContext.standard(n)
    gens = []
    for lineno, line in lines:
        try:
            gens.append(parse_monomial(line, ctx))
        except ParseError as exc:
            raise ParseError(f"line {lineno}: {exc}") from None
    return minimalize(gens, ctx)


def format_ideal(ideal: MonomialIdeal, comments=()) -> str:
    """Write ``ideal`` in the file format.

    Variables are renamed to ``x1..xn`` in context order when the context
    uses other names; the original names are kept in comment lines.
    """
    ctx = ideal.context
    std = PolynomialContext.standard(ctx.n)
    out = [f"ring {ctx.n}"]
    out.extend(f"# {c}" for c in comments)
    if ctx != std:
        out.extend(f"# x{k} = {name}" for k, name in enumerate(ctx.variable_names, 1))
    out.extend(g.format(std) for g in ideal.generators)
    return "\n".join(out) + "\n"


def read_ideal(path) -> MonomialIdeal:
    return parse_ideal(Path(path).read_text())


def parse_graph(text: str) -> Graph:
    lines = _content_lines(text)
    n = _header(lines, "vertices")
    edges = []
    for lineno, line in lines:
        parts = line.split()
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise ParseError(f"line {lineno}: expected 'u v', got {line!r}")
        u, v = map(int, parts)
        if not (1 <= u <= n and 1 <= v <= n) or u == v:
            raise ParseError(f"line {lineno}: bad edge {u} {v}")
        edges.append((u, v))
    return Graph(n, edges)


def format_graph(G: Graph) -> str:
    out = [f"vertices {G.n}"]
    out.extend(f"{u} {v}" for u, v in sorted(G.edges))
    return "\n".join(out) + "\n"


def read_graph(path) -> Graph:
    return parse_graph(Path(path).read_text())
