"""Line-based text formats for complexes, cell sets and vertex maps.

::

    # comment
    simplex 0 1 2
    cell 0 1
    map 0 -> 1

A complex file lists (maximal) simplices; cell files and map files refer to
vertices of a complex.  Labels are integers when every label in the complex
file is an integer literal, strings otherwise.
"""
from __future__ import annotations

import re
from pathlib import Path

from .chains import VertexSelfMap
from .complex import CellSet, Complex, build_complex
from .errors import ComblefError, ParseError

_INT = re.compile(r"-?\d+")


def _records(text: str, keyword: str, path):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, _, rest = line.partition(" ")
        if head != keyword:
            raise ParseError(f"expected a '{keyword}' record, got {head!r}", path, lineno)
        yield lineno, rest.split()


def _label_kind(X: Complex):
    return int if all(isinstance(v, int) for v in X.vertices) else str


def _convert(token: str, kind, X: Complex, path, lineno):
    try:
        label = kind(token)
    except ValueError:
        raise ParseError(f"label {token!r} is not a vertex of the complex", path, lineno) from None
    if (label,) not in X:
        raise ParseError(f"unknown vertex {token!r}", path, lineno)
    return label


def parse_complex(text: str, path=None) -> Complex:
    rows = []
    for lineno, tokens in _records(text, "simplex", path):
        if not tokens:
            raise ParseError("empty simplex", path, lineno)
        rows.append((lineno, tokens))
    numeric = all(_INT.fullmatch(t) for _, toks in rows for t in toks)
    kind = int if numeric else str
    simplices = []
    for lineno, tokens in rows:
        s = tuple(kind(t) for t in tokens)
        if len(set(s)) != len(s):
            raise ParseError(f"repeated vertex in simplex {' '.join(tokens)}", path, lineno)
        simplices.append(s)
    if not simplices:
        raise ParseError("complex file has no simplices", path)
    try:
        return build_complex(simplices)
    except ComblefError as exc:
        raise ParseError(str(exc), path) from exc


def parse_cells(text: str, X: Complex, path=None) -> CellSet:
    kind = _label_kind(X)
    cells = []
    for lineno, tokens in _records(text, "cell", path):
        if not tokens:
            raise ParseError("empty cell", path, lineno)
        s = tuple(sorted(_convert(t, kind, X, path, lineno) for t in tokens))
        if len(set(s)) != len(s) or s not in X:
            raise ParseError(f"{' '.join(tokens)} is not a simplex of the complex", path, lineno)
        cells.append(s)
    return X.cells(cells)


def parse_map(text: str, X: Complex, path=None) -> VertexSelfMap:
    kind = _label_kind(X)
    table = {}
    for lineno, tokens in _records(text, "map", path):
        if len(tokens) != 3 or tokens[1] != "->":
            raise ParseError("expected 'map v -> w'", path, lineno)
        v = _convert(tokens[0], kind, X, path, lineno)
        w = _convert(tokens[2], kind, X, path, lineno)
        if v in table and table[v] != w:
            raise ParseError(f"vertex {tokens[0]} mapped twice", path, lineno)
        table[v] = w
    missing = [v for v in X.vertices if v not in table]
    if missing:
        raise ParseError(f"map does not assign vertex {missing[0]}", path)
    return VertexSelfMap(X, table)


def _read(path) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read file: {exc.strerror}", path) from exc


def load_complex(path) -> Complex:
    return parse_complex(_read(path), path)


def load_cells(path, X: Complex) -> CellSet:
    return parse_cells(_read(path), X, path)


def load_map(path, X: Complex) -> VertexSelfMap:
    return parse_map(_read(path), X, path)


def _join(s) -> str:
    return " ".join(str(v) for v in s)


def format_complex(X: Complex) -> str:
    return "".join(f"simplex {_join(s)}\n" for s in X.maximal_simplices())


def format_cells(A: CellSet) -> str:
    return "".join(f"cell {_join(s)}\n" for s in A.sorted())


def format_map(phi: VertexSelfMap) -> str:
    return "".join(f"map {v} -> {phi(v)}\n" for v in phi.complex.vertices)
