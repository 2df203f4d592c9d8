"""Text formats.

``ograph v1``::

    ograph v1
    n 3
    e 0 1
    o 1 0

``e u v`` is an arrow ``u -> v``; ``o u v`` is an order pair ``u < v``.

``odelta v1`` carries one vertex per line, ``v <x>`` followed by tokens
``>u`` (``u -> x``) or ``<u`` (``x -> u``); vertices arrive as 0, 1, 2, ...
An optional ``odelta v1`` header line is accepted.  Blank lines and lines
starting with ``#`` are ignored in both formats.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator

from .errors import ParseError
from .ograph import ExtensionDelta, OGraph, Rel

OGRAPH_HEADER = "ograph v1"
ODELTA_HEADER = "odelta v1"


def _content(lines: Iterable[str]) -> Iterator[tuple[int, str]]:
    for lineno, raw in enumerate(lines, 1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield lineno, line


def _int(tok: str, lineno: int) -> int:
    try:
        v = int(tok)
    except ValueError:
        raise ParseError(f"expected an integer, got {tok!r}", lineno) from None
    if v < 0:
        raise ParseError(f"negative vertex id {v}", lineno)
    return v


def parse_ograph(text: str | Iterable[str]) -> tuple[OGraph, OGraph | None]:
    """Parse an ``ograph v1`` document into the graph and its order (``None`` if no ``o`` lines)."""
    lines = text.splitlines() if isinstance(text, str) else text
    it = _content(lines)
    first = next(it, None)
    if first is None or first[1] != OGRAPH_HEADER:
        raise ParseError(f"expected header {OGRAPH_HEADER!r}", first[0] if first else 1)
    second = next(it, None)
    if second is None:
        raise ParseError("missing 'n <count>' line", first[0] + 1)
    lineno, line = second
    parts = line.split()
    if len(parts) != 2 or parts[0] != "n":
        raise ParseError("expected 'n <count>'", lineno)
    n = _int(parts[1], lineno)
    pairs: dict[str, set[tuple[int, int]]] = {"e": set(), "o": set()}
    for lineno, line in it:
        parts = line.split()
        if len(parts) != 3 or parts[0] not in pairs:
            raise ParseError(f"expected 'e <u> <v>' or 'o <u> <v>', got {line!r}", lineno)
        u, v = _int(parts[1], lineno), _int(parts[2], lineno)
        if u >= n or v >= n:
            raise ParseError(f"vertex out of range for n={n}", lineno)
        if u == v:
            raise ParseError(f"self-loop at {u}", lineno)
        seen = pairs[parts[0]]
        if (u, v) in seen:
            raise ParseError(f"duplicate pair {u} {v}", lineno)
        if (v, u) in seen:
            raise ParseError(f"symmetric pair {u} {v}", lineno)
        seen.add((u, v))
    g = OGraph(n, pairs["e"])
    order = OGraph(n, pairs["o"]) if pairs["o"] else None
    return g, order


def format_ograph(g: OGraph, order: OGraph | None = None) -> str:
    lines = [OGRAPH_HEADER, f"n {g.n}"]
    lines += [f"e {u} {v}" for u, v in g.arrows()]
    if order is not None:
        lines += [f"o {u} {v}" for u, v in order.arrows()]
    return "\n".join(lines) + "\n"


def parse_odelta_line(line: str, lineno: int | None = None, expected: int | None = None) -> ExtensionDelta:
    parts = line.split()
    if len(parts) < 2 or parts[0] != "v":
        raise ParseError(f"expected 'v <x> ...', got {line!r}", lineno)
    x = _int(parts[1], lineno)
    if expected is not None and x != expected:
        raise ParseError(f"vertex {x} out of order, expected {expected}", lineno)
    rel = [Rel.NONE] * x
    for tok in parts[2:]:
        if tok[0] not in "<>" or len(tok) < 2:
            raise ParseError(f"bad relation token {tok!r}", lineno)
        u = _int(tok[1:], lineno)
        if u >= x:
            raise ParseError(f"vertex {u} is not earlier than {x}", lineno)
        if rel[u] is not Rel.NONE:
            raise ParseError(f"vertex {u} related to {x} twice", lineno)
        rel[u] = Rel.TO_X if tok[0] == ">" else Rel.FROM_X
    return ExtensionDelta(x, tuple(rel))


def iter_odelta(lines: Iterable[str]) -> Iterator[ExtensionDelta]:
    """Lazily parse a delta stream; suitable for reading a pipe line by line."""
    expected = 0
    for lineno, line in _content(lines):
        if line == ODELTA_HEADER and expected == 0:
            continue
        yield parse_odelta_line(line, lineno, expected)
        expected += 1


def format_odelta(d: ExtensionDelta) -> str:
    toks = [f">{u}" if r is Rel.TO_X else f"<{u}" for u, r in enumerate(d.rel) if r is not Rel.NONE]
    return " ".join(["v", str(d.x), *toks])
