"""ASCII text formats for graphs, targets, instances and certificates.

All formats are newline-delimited integers. Anything after a ``#`` on a
line is a comment; blank lines are ignored.
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterable, Sequence, Union

from .errors import FormatError, InputError
from .graph import Graph, Jdm, graph_from_edges
from .instances import BasketFillingInstance, ThreePartitionInstance

__all__ = [
    "read_text",
    "parse_graph",
    "format_graph",
    "parse_degree_sequence",
    "format_degree_sequence",
    "parse_pairs",
    "format_pairs",
    "parse_jdm",
    "format_jdm",
    "parse_tp",
    "format_tp",
    "parse_bf",
    "format_bf",
    "parse_assignment",
    "format_assignment",
    "parse_partition",
    "format_partition",
    "parse_aggregates",
    "format_aggregates",
]

PathLike = Union[str, Path]


def read_text(path: PathLike) -> str:
    try:
        return Path(path).read_text(encoding="ascii")
    except (OSError, UnicodeDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


def _rows(text: str) -> list[list[int]]:
    rows = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            rows.append([int(tok) for tok in line.split()])
        except ValueError:
            raise FormatError(f"line {lineno}: expected integers, got {line!r}") from None
    return rows


def _expect(row: Sequence[int], width: int, what: str) -> None:
    if len(row) != width:
        raise FormatError(f"{what}: expected {width} integers, got {len(row)}")


def _lines(rows: Iterable[Iterable[int]]) -> str:
    return "".join(" ".join(str(x) for x in row) + "\n" for row in rows)


def parse_graph(text: str) -> Graph:
    rows = _rows(text)
    if not rows:
        raise FormatError("graph: missing 'n m' header")
    _expect(rows[0], 2, "graph header")
    n, m = rows[0]
    if len(rows) - 1 != m:
        raise FormatError(f"graph: header promises {m} edges, found {len(rows) - 1}")
    for row in rows[1:]:
        _expect(row, 2, "edge")
    return graph_from_edges(n, [tuple(r) for r in rows[1:]])


def format_graph(G: Graph) -> str:
    return _lines([(G.n, G.m), *G.sorted_edges()])


def parse_degree_sequence(text: str) -> tuple[int, ...]:
    rows = _rows(text)
    if not rows:
        raise FormatError("degree sequence: missing length line")
    _expect(rows[0], 1, "degree sequence length")
    n = rows[0][0]
    values = [x for row in rows[1:] for x in row]
    _expect(values, n, "degree sequence")
    return tuple(values)


def format_degree_sequence(seq: Sequence[int]) -> str:
    return f"{len(seq)}\n" + " ".join(str(d) for d in seq) + "\n"


def parse_pairs(text: str) -> tuple[tuple[int, int], ...]:
    """Second-order or neighbor-degree-sum target: ``n`` then n lines of two integers."""
    rows = _rows(text)
    if not rows:
        raise FormatError("target: missing length line")
    _expect(rows[0], 1, "target length")
    n = rows[0][0]
    if len(rows) - 1 != n:
        raise FormatError(f"target: expected {n} pairs, found {len(rows) - 1}")
    for row in rows[1:]:
        _expect(row, 2, "pair")
    return tuple((a, b) for a, b in rows[1:])


def format_pairs(pairs: Sequence[tuple[int, int]]) -> str:
    return _lines([(len(pairs),), *pairs])


def parse_jdm(text: str) -> Jdm:
    """``Δ`` on the first line, then Δ rows of Δ integers."""
    rows = _rows(text)
    if not rows:
        raise FormatError("jdm: missing size line")
    _expect(rows[0], 1, "jdm size")
    delta = rows[0][0]
    if len(rows) - 1 != delta:
        raise FormatError(f"jdm: expected {delta} rows, found {len(rows) - 1}")
    for row in rows[1:]:
        _expect(row, delta, "jdm row")
    return Jdm(tuple(tuple(r) for r in rows[1:]))


def format_jdm(J: Jdm) -> str:
    return _lines([(J.delta,), *J.entries])


def parse_tp(text: str) -> ThreePartitionInstance:
    rows = _rows(text)
    if not rows:
        raise FormatError("3-partition: missing 'm W' header")
    _expect(rows[0], 2, "3-partition header")
    m, W = rows[0]
    alphas = [x for row in rows[1:] for x in row]
    _expect(alphas, 3 * m, "3-partition numbers")
    return ThreePartitionInstance(m, W, tuple(alphas))


def format_tp(tp: ThreePartitionInstance) -> str:
    return _lines([(tp.m, tp.W), tp.alphas])


def parse_bf(text: str) -> BasketFillingInstance:
    rows = _rows(text)
    if len(rows) < 2:
        raise FormatError("basket filling: missing 'n k' header or weights line")
    _expect(rows[0], 2, "basket filling header")
    n, k = rows[0]
    _expect(rows[1], n, "weights")
    if len(rows) - 2 != k:
        raise FormatError(f"basket filling: expected {k} basket lines, found {len(rows) - 2}")
    for row in rows[2:]:
        _expect(row, 2, "basket")
    return BasketFillingInstance(tuple(rows[1]), tuple((c, s) for c, s in rows[2:]))


def format_bf(bf: BasketFillingInstance) -> str:
    return _lines([(bf.n, bf.k), bf.weights, *bf.baskets])


def parse_assignment(text: str) -> tuple[int, ...]:
    """``item basket`` lines; every item index from 0 to n-1 appears once."""
    rows = _rows(text)
    for row in rows:
        _expect(row, 2, "assignment line")
    items = sorted(r[0] for r in rows)
    if items != list(range(len(rows))):
        raise FormatError("assignment: item indices must be 0..n-1, each once")
    out = [0] * len(rows)
    for item, basket in rows:
        out[item] = basket
    return tuple(out)


def format_assignment(sol: Sequence[int]) -> str:
    return _lines(enumerate(sol))


def parse_partition(text: str) -> tuple[tuple[int, int, int], ...]:
    """One line of three item indices per triple."""
    rows = _rows(text)
    for row in rows:
        _expect(row, 3, "triple")
    return tuple(tuple(r) for r in rows)


def format_partition(partition: Sequence[Sequence[int]]) -> str:
    return _lines(partition)


def parse_aggregates(text: str) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Class-size / D-total input: ``Δ``, then a line of Δ sizes, then a line of Δ totals."""
    rows = _rows(text)
    if len(rows) != 3:
        raise FormatError("aggregates: expected three lines (Δ, sizes, D-totals)")
    _expect(rows[0], 1, "aggregates size")
    delta = rows[0][0]
    _expect(rows[1], delta, "class sizes")
    _expect(rows[2], delta, "D-totals")
    return tuple(rows[1]), tuple(rows[2])


def format_aggregates(sizes: Sequence[int], D: Sequence[int]) -> str:
    return _lines([(len(sizes),), sizes, D])
