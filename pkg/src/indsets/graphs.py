"""Bitmask graphs: construction, generators, graph6 codec, exact independence number.

Vertices are 0..n-1 and every vertex set (adjacency rows included) is a plain
int used as a bit mask, so set algebra is integer arithmetic. Graphs are
immutable once built; generators take explicit seeds and the branch-and-bound
solver breaks ties by vertex index, so every result here is reproducible.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Sequence

# Python ints are arbitrary precision, so the cap is a policy knob rather than
# a machine limit; raise it to admit corpora beyond one machine word.
VERTEX_CAPACITY = 64

RANDOM_REGULAR_RETRY_CAP = 10_000


class GraphError(ValueError):
    """Invalid graph construction, generator parameters, or graph6 input."""


def mask_of(vertices: Iterable[int]) -> int:
    """Bit mask with the given vertex indices set."""
    bits = 0
    for v in vertices:
        bits |= 1 << v
    return bits


def mask_vertices(bits: int) -> list[int]:
    """Sorted list of vertex indices set in a mask."""
    out = []
    while bits:
        low = bits & -bits
        out.append(low.bit_length() - 1)
        bits ^= low
    return out


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph as per-vertex neighbor bit masks."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0:
            raise GraphError("vertex count must be nonnegative")
        if len(self.adj) != self.n:
            raise GraphError("adjacency length must equal vertex count")
        for v, row in enumerate(self.adj):
            if row >> self.n:
                raise GraphError(f"adjacency row {v} has bits beyond vertex range")
            if (row >> v) & 1:
                raise GraphError(f"loop at vertex {v}")
        for v in range(self.n):
            for w in mask_vertices(self.adj[v]):
                if not (self.adj[w] >> v) & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {w}")

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def regular_degree(self) -> int | None:
        """Common degree if regular, else None. The empty graph is not regular."""
        if self.n == 0:
            return None
        d = self.adj[0].bit_count()
        if all(row.bit_count() == d for row in self.adj):
            return d
        return None

    def edges(self) -> list[tuple[int, int]]:
        return [
            (u, v)
            for v in range(self.n)
            for u in mask_vertices(self.adj[v] & ((1 << v) - 1))
        ]


@dataclass(frozen=True)
class GraphStats:
    """Exact size, degree, independence number, and edge count of one graph."""

    n: int
    d: int | None
    alpha: int
    edge_count: int


def build_graph(n: int, edges: Iterable[tuple[int, int]], capacity: int | None = None) -> Graph:
    """Build a simple graph from an edge list; duplicate edges collapse.

    Raises GraphError for loops, out-of-range endpoints, or n beyond capacity.
    """
    cap = VERTEX_CAPACITY if capacity is None else capacity
    if n > cap:
        raise GraphError(f"vertex count {n} exceeds capacity {cap}")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge endpoint out of range: ({u}, {v})")
        if u == v:
            raise GraphError(f"loop edge at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def gen_complete_bipartite(d: int) -> Graph:
    """One copy of K_{d,d}: sides {0..d-1} and {d..2d-1}, all cross edges."""
    if d < 1:
        raise GraphError("side size must be at least 1")
    side = ((1 << d) - 1) << d
    other = (1 << d) - 1
    return Graph(2 * d, tuple([side] * d + [other] * d))


def gen_cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs at least 3 vertices")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def gen_complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs at least 1 vertex")
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def gen_petersen() -> Graph:
    """Petersen graph: outer 5-cycle, inner pentagram, five spokes."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    edges += [(i, 5 + i) for i in range(5)]
    return build_graph(10, edges)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """Vertex-disjoint union; h's vertices are relabeled to g.n..g.n+h.n-1."""
    n = g.n + h.n
    if n > VERTEX_CAPACITY:
        raise GraphError(f"union size {n} exceeds capacity {VERTEX_CAPACITY}")
    adj = list(g.adj) + [row << g.n for row in h.adj]
    return Graph(n, tuple(adj))


def gen_random_regular(n: int, d: int, seed: int) -> Graph:
    """Random simple d-regular graph via the pairing model with rejection.

    Half-edge stubs are shuffled and paired; any loop or repeated edge rejects
    the whole attempt. Uniform over simple realizations, deterministic per seed.
    """
    if (n * d) % 2 != 0:
        raise GraphError("n * d must be even")
    if not 0 <= d < n:
        raise GraphError("need 0 <= d < n")
    rng = random.Random(seed)
    stubs = [v for v in range(n) for _ in range(d)]
    for _ in range(RANDOM_REGULAR_RETRY_CAP):
        rng.shuffle(stubs)
        adj = [0] * n
        ok = True
        for i in range(0, len(stubs), 2):
            u, v = stubs[i], stubs[i + 1]
            if u == v or (adj[u] >> v) & 1:
                ok = False
                break
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        if ok:
            return Graph(n, tuple(adj))
    raise GraphError(
        f"no simple {d}-regular graph on {n} vertices found in "
        f"{RANDOM_REGULAR_RETRY_CAP} pairing attempts"
    )


# ---------------------------------------------------------------------------
# graph6 codec
# ---------------------------------------------------------------------------

_G6_HEADER = ">>graph6<<"


def _g6_encode_size(n: int) -> str:
    if n <= 62:
        return chr(63 + n)
    if n <= 258047:
        return chr(126) + "".join(chr(63 + ((n >> s) & 63)) for s in (12, 6, 0))
    if n <= 68719476735:
        return chr(126) * 2 + "".join(
            chr(63 + ((n >> s) & 63)) for s in (30, 24, 18, 12, 6, 0)
        )
    raise GraphError(f"vertex count {n} not encodable in graph6")


def _g6_decode_size(text: str) -> tuple[int, int]:
    """Return (n, chars consumed); rejects non-minimal size headers."""
    if not text:
        raise GraphError("empty graph6 string")
    b0 = ord(text[0]) - 63
    if b0 < 0 or b0 > 63:
        raise GraphError("malformed graph6 size header")
    if b0 < 63:
        return b0, 1
    if len(text) >= 2 and ord(text[1]) == 126:
        if len(text) < 8:
            raise GraphError("truncated graph6 size header")
        n = 0
        for ch in text[2:8]:
            n = (n << 6) | _g6_group(ch)
        if n <= 258047:
            raise GraphError("non-canonical graph6 size header")
        return n, 8
    if len(text) < 4:
        raise GraphError("truncated graph6 size header")
    n = 0
    for ch in text[1:4]:
        n = (n << 6) | _g6_group(ch)
    if n <= 62:
        raise GraphError("non-canonical graph6 size header")
    return n, 4


def _g6_group(ch: str) -> int:
    code = ord(ch) - 63
    if code < 0 or code > 63:
        raise GraphError(f"byte {ord(ch)} outside graph6 printable range")
    return code


def write_graph6(g: Graph) -> str:
    """Canonical graph6 line (no trailing newline, no '>>graph6<<' prefix)."""
    parts = [_g6_encode_size(g.n)]
    group = 0
    filled = 0
    for j in range(1, g.n):
        for i in range(j):
            group = (group << 1) | ((g.adj[j] >> i) & 1)
            filled += 1
            if filled == 6:
                parts.append(chr(63 + group))
                group = 0
                filled = 0
    if filled:
        parts.append(chr(63 + (group << (6 - filled))))
    return "".join(parts)


def parse_graph6(text: str, capacity: int | None = None) -> Graph:
    """Parse one graph6 line; the optional '>>graph6<<' prefix is accepted.

    Rejects malformed headers, out-of-range bytes, trailing garbage, nonzero
    padding bits, and sizes beyond capacity.
    """
    cap = VERTEX_CAPACITY if capacity is None else capacity
    line = text.strip("\r\n")
    if line.startswith(_G6_HEADER):
        line = line[len(_G6_HEADER):]
    n, consumed = _g6_decode_size(line)
    if n > cap:
        raise GraphError(f"graph6 size {n} exceeds capacity {cap}")
    body = line[consumed:]
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need:
        raise GraphError(
            f"graph6 body length {len(body)} != expected {need} for n={n}"
        )
    bits = 0
    for ch in body:
        bits = (bits << 6) | _g6_group(ch)
    pad = 6 * need - n * (n - 1) // 2
    if pad and bits & ((1 << pad) - 1):
        raise GraphError("nonzero padding bits in graph6 body")
    adj = [0] * n
    pos = 6 * need
    for j in range(1, n):
        for i in range(j):
            pos -= 1
            if (bits >> pos) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return Graph(n, tuple(adj))


# ---------------------------------------------------------------------------
# Exact maximum independent set
# ---------------------------------------------------------------------------


def is_independent(g: Graph, bits: int) -> bool:
    """True iff no two vertices in the mask are adjacent."""
    rest = bits
    while rest:
        low = rest & -rest
        rest ^= low
        if g.adj[low.bit_length() - 1] & bits:
            return False
    return True


def _clique_cover_bound(adj: Sequence[int], cand: int) -> int:
    # Greedy clique partition of the candidate set; each clique contributes at
    # most one vertex to any independent set.
    count = 0
    rem = cand
    while rem:
        low = rem & -rem
        clique = low
        common = adj[low.bit_length() - 1] & rem
        while common:
            u = common & -common
            clique |= u
            common &= adj[u.bit_length() - 1]
        rem &= ~clique
        count += 1
    return count


def max_independent_set(g: Graph) -> int:
    """Exact maximum independent set as a bit mask.

    Branch and bound: branch on a maximum-degree vertex of the candidate
    subgraph (lowest index on ties, include-branch first) and prune with a
    greedy clique-cover bound, so the returned witness is deterministic.
    """
    adj = g.adj
    best_mask = 0
    best_size = 0

    def expand(chosen: int, size: int, cand: int):
        nonlocal best_mask, best_size
        if cand == 0:
            if size > best_size:
                best_size = size
                best_mask = chosen
            return
        if size + cand.bit_count() <= best_size:
            return
        if size + _clique_cover_bound(adj, cand) <= best_size:
            return
        v = -1
        vdeg = -1
        rest = cand
        while rest:
            low = rest & -rest
            rest ^= low
            u = low.bit_length() - 1
            deg = (adj[u] & cand).bit_count()
            if deg > vdeg:
                vdeg = deg
                v = u
        vbit = 1 << v
        expand(chosen | vbit, size + 1, cand & ~vbit & ~adj[v])
        expand(chosen, size, cand & ~vbit)

    expand(0, 0, g.full_mask)
    return best_mask


def component_masks(adj: Sequence[int], verts: int) -> list[int]:
    """Connected components of the subgraph induced by a vertex mask."""
    comps = []
    rest = verts
    while rest:
        seed = rest & -rest
        comp = seed
        frontier = seed
        while frontier:
            nbrs = 0
            f = frontier
            while f:
                low = f & -f
                f ^= low
                nbrs |= adj[low.bit_length() - 1]
            frontier = nbrs & verts & ~comp
            comp |= frontier
        comps.append(comp)
        rest &= ~comp
    return comps


def is_union_of_equal_cliques(g: Graph) -> bool:
    """True iff every component is complete and all components have equal order."""
    if g.n == 0:
        return False
    comps = component_masks(g.adj, g.full_mask)
    k = comps[0].bit_count()
    for comp in comps:
        if comp.bit_count() != k:
            return False
        for v in mask_vertices(comp):
            if (g.adj[v] & comp).bit_count() != k - 1:
                return False
    return True


def graph_stats(g: Graph) -> GraphStats:
    """Exact n, common degree (if regular), independence number, edge count."""
    return GraphStats(
        n=g.n,
        d=g.regular_degree(),
        alpha=max_independent_set(g).bit_count(),
        edge_count=g.edge_count(),
    )
