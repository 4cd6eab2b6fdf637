"""Core data types: graphs with bitset adjacency, linear forests, edge colorings.

Vertices are 0-based contiguous integers.  Edges are normalized as (min, max)
tuples so they can be used as dict keys everywhere.  All types are immutable
after construction and safe to share across threads.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional

Edge = tuple[int, int]


class GraphFormatError(ValueError):
    """Malformed graph6 text or coloring file.  Carries a byte offset."""

    def __init__(self, message: str, offset: Optional[int] = None):
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)
        self.offset = offset


def norm_edge(u: int, v: int) -> Edge:
    if u == v:
        raise ValueError(f"self-loop at vertex {u}")
    return (u, v) if u < v else (v, u)


def lex_edges(n: int) -> list[Edge]:
    """All edges of K_n in lexicographic (u, v) order with u < v."""
    return [(u, v) for u in range(n) for v in range(u + 1, n)]


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on {0..n-1}, one adjacency bitmask per vertex."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0 or len(self.adj) != self.n:
            raise ValueError("adjacency length must equal vertex count")
        full = (1 << self.n) - 1
        for u, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"adjacency row {u} has out-of-range bits")
            if row >> u & 1:
                raise ValueError(f"vertex {u} has a self-loop")
            rest = row
            while rest:
                v = (rest & -rest).bit_length() - 1
                rest &= rest - 1
                if not self.adj[v] >> u & 1:
                    raise ValueError(f"adjacency not symmetric at ({u},{v})")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            u, v = norm_edge(u, v)
            if not 0 <= u < n and 0 <= v < n:
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if v >= n:
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edges(self) -> list[Edge]:
        return [(u, v) for u in range(self.n)
                for v in _iter_bits(self.adj[u]) if u < v]

    def neighbors(self, v: int) -> set[int]:
        return set(_iter_bits(self.adj[v]))


def _iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def complete_graph(n: int) -> Graph:
    """K_n; rejects n = 0."""
    if n < 1:
        raise ValueError("complete_graph requires n >= 1")
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def common_neighborhood(g: Graph, vertices: Iterable[int]) -> set[int]:
    """Vertices outside the given set adjacent to every member of it.

    The empty set has the whole vertex set as its common neighborhood.
    """
    vs = set(vertices)
    for v in vs:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range for n={g.n}")
    if not vs:
        return set(range(g.n))
    mask = (1 << g.n) - 1
    for v in vs:
        mask &= g.adj[v]
    for v in vs:
        mask &= ~(1 << v)
    return set(_iter_bits(mask))


def common_neighborhood_mask(g: Graph, vertices: Iterable[int]) -> int:
    vs = list(vertices)
    mask = (1 << g.n) - 1
    for v in vs:
        mask &= g.adj[v]
    for v in vs:
        mask &= ~(1 << v)
    return mask


@dataclass(frozen=True)
class LinearForest:
    """A disjoint union of paths, stored as a nonincreasing list of orders."""

    parts: tuple[int, ...]

    def __post_init__(self):
        if not self.parts:
            raise ValueError("a linear forest needs at least one path")
        if any(t < 2 for t in self.parts):
            raise ValueError("every path must have at least 2 vertices")
        if list(self.parts) != sorted(self.parts, reverse=True):
            raise ValueError("parts must be nonincreasing; use from_parts()")

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> "LinearForest":
        return cls(tuple(sorted(parts, reverse=True)))

    @classmethod
    def parse(cls, spec: str) -> "LinearForest":
        """Parse a comma-separated part list such as "5,4" or "3,3,2"."""
        try:
            parts = [int(tok) for tok in spec.split(",") if tok.strip()]
        except ValueError as exc:
            raise ValueError(f"bad forest spec {spec!r}") from exc
        if not parts:
            raise ValueError(f"bad forest spec {spec!r}")
        return cls.from_parts(parts)

    @property
    def k(self) -> int:
        return len(self.parts)

    @property
    def num_vertices(self) -> int:
        return sum(self.parts)

    @property
    def half_sum(self) -> int:
        """Sum of floor(t/2) over the path orders."""
        return sum(t // 2 for t in self.parts)

    @property
    def num_edges(self) -> int:
        return sum(t - 1 for t in self.parts)

    @property
    def even_count(self) -> int:
        return sum(1 for t in self.parts if t % 2 == 0)

    @property
    def all_odd(self) -> bool:
        return self.even_count == 0

    def spec_string(self) -> str:
        return ",".join(str(t) for t in self.parts)

    def __str__(self) -> str:
        return "+".join(f"P{t}" for t in self.parts)


class EdgeColoring:
    """A surjective coloring of the edges of K_n with color ids {0..m-1}."""

    __slots__ = ("n", "color_of", "m")

    def __init__(self, n: int, color_of: dict[Edge, int]):
        if n < 1:
            raise ValueError("coloring needs n >= 1")
        expected = set(lex_edges(n))
        if set(color_of) != expected:
            missing = expected - set(color_of)
            extra = set(color_of) - expected
            raise ValueError(
                f"coloring must cover K_{n} exactly; "
                f"missing={sorted(missing)[:3]} extra={sorted(extra)[:3]}")
        ids = set(color_of.values())
        m = len(ids)
        if ids != set(range(m)):
            raise ValueError("color ids must be dense in {0..m-1}")
        self.n = n
        self.color_of = dict(color_of)
        self.m = m

    def color(self, u: int, v: int) -> int:
        return self.color_of[norm_edge(u, v)]

    def color_classes(self) -> list[list[Edge]]:
        classes: list[list[Edge]] = [[] for _ in range(self.m)]
        for e in lex_edges(self.n):
            classes[self.color_of[e]].append(e)
        return classes

    def canonical(self) -> "EdgeColoring":
        """Relabel color ids in first-occurrence order of the lex edge order.

        Colorings equal up to color relabeling compare equal after this.
        """
        relabel: dict[int, int] = {}
        out: dict[Edge, int] = {}
        for e in lex_edges(self.n):
            c = self.color_of[e]
            if c not in relabel:
                relabel[c] = len(relabel)
            out[e] = relabel[c]
        return EdgeColoring(self.n, out)

    def __eq__(self, other) -> bool:
        return (isinstance(other, EdgeColoring)
                and self.n == other.n and self.color_of == other.color_of)

    def __repr__(self) -> str:
        return f"EdgeColoring(n={self.n}, m={self.m})"

    @classmethod
    def monochromatic(cls, n: int) -> "EdgeColoring":
        return cls(n, {e: 0 for e in lex_edges(n)})

    @classmethod
    def all_rainbow(cls, n: int) -> "EdgeColoring":
        return cls(n, {e: i for i, e in enumerate(lex_edges(n))})

    @classmethod
    def from_assignment(cls, n: int, colors: Iterable[int]) -> "EdgeColoring":
        """Build from one color per lex-ordered edge of K_n."""
        return cls(n, dict(zip(lex_edges(n), colors, strict=True)))

    def to_text(self) -> str:
        lines = [f"{self.n} {self.m}"]
        for (u, v) in lex_edges(self.n):
            lines.append(f"{u} {v} {self.color_of[(u, v)]}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "EdgeColoring":
        offset = 0
        lines = text.splitlines(keepends=True)
        if not lines:
            raise GraphFormatError("empty coloring file", 0)
        header = lines[0].split()
        if len(header) != 2:
            raise GraphFormatError("header must be 'n m'", 0)
        try:
            n, m = int(header[0]), int(header[1])
        except ValueError:
            raise GraphFormatError("header must be two integers", 0)
        offset = len(lines[0])
        color_of: dict[Edge, int] = {}
        for line in lines[1:]:
            stripped = line.strip()
            if stripped:
                toks = stripped.split()
                if len(toks) != 3:
                    raise GraphFormatError("edge line must be 'u v c'", offset)
                try:
                    u, v, c = int(toks[0]), int(toks[1]), int(toks[2])
                except ValueError:
                    raise GraphFormatError("edge line must be integers", offset)
                if not (0 <= u < n and 0 <= v < n and u < v):
                    raise GraphFormatError(
                        f"bad edge ({u},{v}) for n={n}", offset)
                if (u, v) in color_of:
                    raise GraphFormatError(f"duplicate edge ({u},{v})", offset)
                if not 0 <= c < m:
                    raise GraphFormatError(f"color {c} outside 0..{m-1}", offset)
                color_of[(u, v)] = c
            offset += len(line)
        coloring = cls(n, color_of)
        if coloring.m != m:
            raise GraphFormatError(
                f"header claims {m} colors but {coloring.m} are present", 0)
        return coloring


@dataclass(frozen=True)
class Embedding:
    """A placement of a linear forest into a host, one vertex sequence per path."""

    forest: LinearForest
    paths: tuple[tuple[int, ...], ...]
    used_colors: Optional[tuple[int, ...]] = None

    def __post_init__(self):
        if len(self.paths) != self.forest.k:
            raise ValueError("one vertex sequence per path part required")
        seen: set[int] = set()
        for t, seq in zip(self.forest.parts, self.paths):
            if len(seq) != t:
                raise ValueError("sequence length must match path order")
            for v in seq:
                if v in seen:
                    raise ValueError(f"vertex {v} reused across parts")
                seen.add(v)
        if self.used_colors is not None:
            if len(self.used_colors) != self.forest.num_edges:
                raise ValueError("one color per used edge required")

    @property
    def used_edges(self) -> tuple[Edge, ...]:
        out: list[Edge] = []
        for seq in self.paths:
            for a, b in itertools.pairwise(seq):
                out.append(norm_edge(a, b))
        return tuple(out)

    @property
    def is_rainbow(self) -> bool:
        return (self.used_colors is not None
                and len(set(self.used_colors)) == len(self.used_colors))

    def valid_in(self, g: Graph) -> bool:
        return all(g.has_edge(u, v) for u, v in self.used_edges)

    def to_json_dict(self) -> dict:
        d = {"forest": self.forest.spec_string(),
             "paths": [list(seq) for seq in self.paths],
             "edges": [list(e) for e in self.used_edges]}
        if self.used_colors is not None:
            d["colors"] = list(self.used_colors)
        return d


# --- graph6 codec ---------------------------------------------------------

def graph6_encode(g: Graph) -> str:
    """Encode in the compact 6-bit printable-ASCII graph format."""
    n = g.n
    if n <= 62:
        head = [n + 63]
    elif n <= 258047:
        head = [126, (n >> 12) + 63, (n >> 6 & 63) + 63, (n & 63) + 63]
    else:
        raise ValueError("graph6 encoding supported up to n = 258047")
    bits: list[int] = []
    for v in range(1, n):
        for u in range(v):
            bits.append(g.adj[u] >> v & 1)
    while len(bits) % 6:
        bits.append(0)
    body = []
    for i in range(0, len(bits), 6):
        val = 0
        for b in bits[i:i + 6]:
            val = val << 1 | b
        body.append(val + 63)
    return "".join(chr(c) for c in head + body)


def graph6_decode(text: str) -> Graph:
    """Decode a single graph6 line; raises GraphFormatError with byte offset."""
    s = text.rstrip("\n")
    if not s:
        raise GraphFormatError("empty graph6 text", 0)
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise GraphFormatError(f"invalid graph6 character {ch!r}", i)
    pos = 0
    if ord(s[0]) == 126:
        if len(s) < 4 or ord(s[1]) == 126:
            raise GraphFormatError("unsupported or truncated graph6 header", 0)
        n = ((ord(s[1]) - 63) << 12) | ((ord(s[2]) - 63) << 6) | (ord(s[3]) - 63)
        pos = 4
    else:
        n = ord(s[0]) - 63
        pos = 1
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(s) - pos < nbytes:
        raise GraphFormatError(
            f"truncated payload: need {nbytes} bytes, have {len(s) - pos}",
            len(s))
    if len(s) - pos > nbytes:
        raise GraphFormatError("trailing bytes after payload", pos + nbytes)
    bits: list[int] = []
    for i in range(pos, pos + nbytes):
        val = ord(s[i]) - 63
        for shift in range(5, -1, -1):
            bits.append(val >> shift & 1)
    adj = [0] * n
    idx = 0
    for v in range(1, n):
        for u in range(v):
            if bits[idx]:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
            idx += 1
    return Graph(n, tuple(adj))
