"""Rainbow and plain linear-forest detection plus representing-graph machinery.

The detector is a depth-first backtracker that places path parts longest
first, extending one endpoint at a time over bitset adjacency.  Two symmetry
rules keep it from duplicating work without losing witnesses: a completed
path must start at its smaller endpoint, and equal-length parts are forced
into increasing order of their smallest host vertex.  A trailing block of
2-vertex parts first gets a cheap greedy matching attempt before the full
backtracking kicks in.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from math import prod
from typing import Iterator, Optional

from .graphs import (Edge, EdgeColoring, Embedding, Graph, LinearForest,
                     complete_graph, common_neighborhood, lex_edges, norm_edge)


class RecombinationError(ValueError):
    """A cardinality precondition of the recombination routine failed."""


def _search_forest(
    n: int,
    adj,
    parts: tuple[int, ...],
    color_of: Optional[dict[Edge, int]] = None,
    num_colors: Optional[int] = None,
    anchor: Optional[Edge] = None,
) -> Optional[list[tuple[int, ...]]]:
    """Find a (rainbow, if colored) embedding of the given path parts.

    adj holds host adjacency bitmasks; color_of, when given, maps host edges
    to colors and forces all used colors distinct.  anchor, when given, must
    appear among the used edges.  Returns one vertex sequence per part.
    """
    need = sum(t - 1 for t in parts)
    if color_of is not None:
        if num_colors is None:
            num_colors = len(set(color_of.values()))
        # quick reject: every used edge consumes a distinct color
        if num_colors < need:
            return None
    if anchor is not None:
        return _search_anchored(n, adj, parts, anchor, color_of)
    return _search_plain(n, adj, parts, color_of, 0, set())


def _search_plain(
    n: int,
    adj,
    parts: tuple[int, ...],
    color_of: Optional[dict[Edge, int]],
    init_mask: int,
    init_colors: set[int],
) -> Optional[list[tuple[int, ...]]]:
    kparts = len(parts)
    full = (1 << n) - 1
    result: list[tuple[int, ...]] = []

    def greedy_matching(start_part: int, used_mask: int,
                        used_colors: set[int]) -> Optional[list[tuple[int, int]]]:
        pairs: list[tuple[int, int]] = []
        g_mask = used_mask
        g_cols = set(used_colors)
        for _ in range(kparts - start_part):
            avail = full & ~g_mask
            if not avail:
                return None
            u = (avail & -avail).bit_length() - 1
            cand = adj[u] & avail
            picked = -1
            while cand:
                v = (cand & -cand).bit_length() - 1
                cand &= cand - 1
                if color_of is not None:
                    c = color_of[norm_edge(u, v)]
                    if c in g_cols:
                        continue
                    g_cols.add(c)
                picked = v
                break
            if picked < 0:
                return None
            pairs.append((u, picked))
            g_mask |= (1 << u) | (1 << picked)
        return pairs

    def place_part(pi: int, used_mask: int, used_colors: set[int],
                   prev_min: int) -> bool:
        if pi == kparts:
            return True
        t = parts[pi]
        if t == 2:
            pairs = greedy_matching(pi, used_mask, used_colors)
            if pairs is not None:
                result.extend(pairs)
                return True
        # choose the path one vertex at a time from the free end
        seq: list[int] = []

        def extend(used_mask: int) -> bool:
            if len(seq) == t:
                if seq[0] > seq[-1]:
                    return False
                mn = min(seq)
                if pi > 0 and parts[pi - 1] == t and mn < prev_min:
                    return False
                result.append(tuple(seq))
                if place_part(pi + 1, used_mask, used_colors, mn):
                    return True
                result.pop()
                return False
            cand = (full if not seq else adj[seq[-1]]) & ~used_mask
            while cand:
                v = (cand & -cand).bit_length() - 1
                cand &= cand - 1
                col = None
                if seq:
                    if color_of is not None:
                        col = color_of.get(norm_edge(seq[-1], v))
                        if col is None or col in used_colors:
                            continue
                        used_colors.add(col)
                seq.append(v)
                if extend(used_mask | (1 << v)):
                    return True
                seq.pop()
                if col is not None:
                    used_colors.discard(col)
            return False

        return extend(used_mask)

    if place_part(0, init_mask, set(init_colors), -1):
        return [tuple(seq) for seq in result]
    return None


def _anchored_paths(n, adj, t: int, u: int, v: int,
                    color_of: Optional[dict[Edge, int]], base_color):
    """Yield (sequence, used_mask, used_colors) for t-vertex paths through uv."""
    base_mask = (1 << u) | (1 << v)
    base_cols = {base_color} if base_color is not None else set()

    def grow(seq: list[int], mask: int, cols: set[int], rem: int):
        if rem == 0:
            yield list(seq), mask, set(cols)
            return
        cand = adj[seq[-1]] & ~mask
        while cand:
            w = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            c = None
            if color_of is not None:
                c = color_of.get(norm_edge(seq[-1], w))
                if c is None or c in cols:
                    continue
                cols.add(c)
            seq.append(w)
            yield from grow(seq, mask | (1 << w), cols, rem - 1)
            seq.pop()
            if c is not None:
                cols.discard(c)

    for left in range(t - 1):
        right = t - 2 - left
        for lseq, lmask, lcols in grow([u], base_mask, base_cols, left):
            for rseq, rmask, rcols in grow([v], lmask, lcols, right):
                yield list(reversed(lseq)) + rseq, rmask, rcols


def _search_anchored(
    n: int,
    adj,
    parts: tuple[int, ...],
    anchor: Edge,
    color_of: Optional[dict[Edge, int]],
) -> Optional[list[tuple[int, ...]]]:
    """Embedding that must traverse the anchor edge in one of its parts."""
    u, v = anchor
    if not adj[u] >> v & 1:
        return None
    base_color = None
    if color_of is not None:
        base_color = color_of.get(anchor)
        if base_color is None:
            return None
    tried: set[int] = set()
    for idx, t in enumerate(parts):
        if t in tried:
            continue
        tried.add(t)
        rest = parts[:idx] + parts[idx + 1:]
        for seq, mask, cols in _anchored_paths(n, adj, t, u, v, color_of,
                                               base_color):
            sub = _search_plain(n, adj, rest, color_of, mask, cols)
            if sub is not None:
                sub.insert(idx, tuple(seq))
                return sub
    return None


def find_rainbow(coloring: EdgeColoring, forest: LinearForest,
                 anchor: Optional[Edge] = None) -> Optional[Embedding]:
    """A rainbow embedding of the forest in the colored K_n, or None."""
    if forest.num_vertices > coloring.n:
        return None
    host = complete_graph(coloring.n)
    paths = _search_forest(coloring.n, host.adj, forest.parts,
                           color_of=coloring.color_of,
                           num_colors=coloring.m, anchor=anchor)
    if paths is None:
        return None
    emb = Embedding(forest, tuple(paths))
    colors = tuple(coloring.color_of[e] for e in emb.used_edges)
    return Embedding(forest, tuple(paths), colors)


def find_rainbow_partial(n: int, color_of: dict[Edge, int],
                         forest: LinearForest,
                         anchor: Optional[Edge] = None) -> Optional[list]:
    """Rainbow search over a partially colored host (only colored edges exist)."""
    adj = [0] * n
    for (u, v) in color_of:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return _search_forest(n, tuple(adj), forest.parts, color_of=color_of,
                          anchor=anchor)


def contains_subgraph(g: Graph, forest: LinearForest,
                      anchor: Optional[Edge] = None) -> Optional[Embedding]:
    """An embedding of the forest in the plain graph, or None."""
    if forest.num_vertices > g.n:
        return None
    paths = _search_forest(g.n, g.adj, forest.parts, anchor=anchor)
    if paths is None:
        return None
    return Embedding(forest, tuple(paths))


@dataclass(frozen=True)
class RepresentingGraph:
    """One edge chosen from each color class of an edge-colored K_n."""

    n: int
    chosen: tuple[Edge, ...]  # indexed by color id
    graph: Graph

    @classmethod
    def from_choice(cls, coloring: EdgeColoring,
                    choice: tuple[Edge, ...]) -> "RepresentingGraph":
        if len(choice) != coloring.m:
            raise ValueError("need exactly one edge per color")
        for cid, e in enumerate(choice):
            if coloring.color_of[e] != cid:
                raise ValueError(f"edge {e} does not carry color {cid}")
        return cls(coloring.n, tuple(choice),
                   Graph.from_edges(coloring.n, choice))


class RepresentingEnumerator:
    """Lazy lexicographic enumeration of representing graphs, up to a cap.

    total_count is the full family size (product of color-class sizes);
    truncated flips to True if iteration stopped at the cap.
    """

    def __init__(self, coloring: EdgeColoring, cap: int):
        if cap < 1:
            raise ValueError("cap must be >= 1")
        self.coloring = coloring
        self.classes = coloring.color_classes()
        self.total_count = prod(len(cls) for cls in self.classes)
        self.cap = cap
        self.truncated = False

    def __iter__(self) -> Iterator[RepresentingGraph]:
        emitted = 0
        for choice in itertools.product(*self.classes):
            if emitted >= self.cap:
                self.truncated = True
                return
            emitted += 1
            yield RepresentingGraph.from_choice(self.coloring, choice)


def representing_graphs(coloring: EdgeColoring,
                        cap: int) -> RepresentingEnumerator:
    return RepresentingEnumerator(coloring, cap)


def sample_representing(coloring: EdgeColoring, seed: int) -> RepresentingGraph:
    """One edge uniformly per color class; deterministic per (coloring, seed)."""
    rng = random.Random(seed)
    choice = tuple(rng.choice(cls) for cls in coloring.color_classes())
    return RepresentingGraph.from_choice(coloring, choice)


def recombine_representing(
    coloring: EdgeColoring,
    set_u: set[int],
    set_w: set[int],
    s: int,
    rep1: RepresentingGraph,
    rep2: RepresentingGraph,
) -> RepresentingGraph:
    """Merge two representing graphs so both vertex sets get s common neighbors.

    Keeps the star from set_u onto s of its rep1 common neighbors, then picks
    star edges from set_w toward rep2-neighbors whose colors avoid everything
    used between set_u and its witnesses.  The output is a representing graph
    of the same coloring.
    """
    if not set_u:
        raise ValueError("set_u must be nonempty")
    if set_u & set_w:
        raise ValueError("set_u and set_w must be disjoint")
    if not set_w:
        return rep1
    nbhd_u = common_neighborhood(rep1.graph, set_u)
    if len(nbhd_u) < s:
        raise RecombinationError(
            f"|N_rep1(U)|={len(nbhd_u)} < s={s}")
    need_w = s + s * len(set_u)
    nbhd_w = common_neighborhood(rep2.graph, set_w)
    if len(nbhd_w) < need_w:
        raise RecombinationError(
            f"|N_rep2(W)|={len(nbhd_w)} < s+s|U|={need_w}")
    witnesses_u = sorted(nbhd_u)[:s]
    blocked = {coloring.color(x, u) for x in witnesses_u for u in set_u}
    witnesses_w = []
    for y in sorted(nbhd_w):
        if all(coloring.color(y, w) not in blocked for w in set_w):
            witnesses_w.append(y)
            if len(witnesses_w) == s:
                break
    if len(witnesses_w) < s:
        raise RecombinationError(
            f"only {len(witnesses_w)} conflict-free neighbors of W, need {s}")
    chosen = list(rep1.chosen)
    for y in witnesses_w:
        for w in set_w:
            e = norm_edge(y, w)
            chosen[coloring.color_of[e]] = e
    return RepresentingGraph.from_choice(coloring, tuple(chosen))
