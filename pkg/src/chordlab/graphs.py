"""Simple graphs, directed intersection graphs, cycles, and GF(2) rank.

Adjacency is kept as machine-word bit rows, so edge toggles and GF(2)
elimination are single-word operations at the n <= 16 scale this
library targets.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .diagrams import ChordDiagram, word_positions


class GraphError(ValueError):
    """Raised for malformed graph input or invalid vertex arguments."""


@dataclass(frozen=True)
class SimpleGraph:
    """Undirected simple graph on vertices 0..n-1 with bit-row adjacency."""

    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0 or len(self.rows) != self.n:
            raise GraphError("adjacency must have one row per vertex")
        for u, row in enumerate(self.rows):
            if row >> self.n:
                raise GraphError("adjacency bits outside vertex range")
            if row >> u & 1:
                raise GraphError("loops are not allowed")
            for v in range(self.n):
                if (row >> v & 1) != (self.rows[v] >> u & 1):
                    raise GraphError("adjacency must be symmetric")

    @staticmethod
    def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> "SimpleGraph":
        rows = [0] * n
        for u, v in edges:
            if u == v or not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"bad edge ({u}, {v})")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return SimpleGraph(n, tuple(rows))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def degree(self, u: int) -> int:
        return bin(self.rows[u]).count("1")

    def edges(self) -> list[tuple[int, int]]:
        return [
            (u, v)
            for u in range(self.n)
            for v in range(u + 1, self.n)
            if self.rows[u] >> v & 1
        ]

    def edge_mask(self) -> int:
        """Edges packed into one int, bit index = lexicographic pair rank."""
        mask = 0
        k = 0
        for u in range(self.n):
            for v in range(u + 1, self.n):
                if self.rows[u] >> v & 1:
                    mask |= 1 << k
                k += 1
        return mask

    @staticmethod
    def from_edge_mask(n: int, mask: int) -> "SimpleGraph":
        rows = [0] * n
        k = 0
        for u in range(n):
            for v in range(u + 1, n):
                if mask >> k & 1:
                    rows[u] |= 1 << v
                    rows[v] |= 1 << u
                k += 1
        return SimpleGraph(n, tuple(rows))

    def induced(self, vertices: Sequence[int]) -> "SimpleGraph":
        """Subgraph induced on the given vertices (relabeled in order)."""
        vs = list(vertices)
        rows = [0] * len(vs)
        for i, u in enumerate(vs):
            for j, v in enumerate(vs):
                if i != j and self.rows[u] >> v & 1:
                    rows[i] |= 1 << j
        return SimpleGraph(len(vs), tuple(rows))

    def relabeled(self, perm: Sequence[int]) -> "SimpleGraph":
        """Graph with vertex u renamed perm[u]."""
        rows = [0] * self.n
        for u in range(self.n):
            for v in range(self.n):
                if self.rows[u] >> v & 1:
                    rows[perm[u]] |= 1 << perm[v]
        return SimpleGraph(self.n, tuple(rows))

    def disjoint_union(self, other: "SimpleGraph") -> "SimpleGraph":
        rows = list(self.rows) + [r << self.n for r in other.rows]
        return SimpleGraph(self.n + other.n, tuple(rows))

    def __str__(self) -> str:
        return format_graph(self)


def parse_graph(text: str) -> SimpleGraph:
    """Parse either adjacency-matrix text or an edge list.

    Matrix form: first line the vertex count, then n rows of '0'/'1'.
    Edge list: "1-2,3-4" (1-based integers) or "A-B,C-D" (letters);
    the vertex set is 1..max (or A..max letter), so isolated trailing
    vertices can be included by mentioning them in any edge.
    """
    s = text.strip()
    if not s:
        raise GraphError("empty graph text")
    if "\n" in s or s.isdigit():
        lines = [ln.strip() for ln in s.splitlines() if ln.strip()]
        try:
            n = int(lines[0])
        except ValueError as exc:
            raise GraphError(f"bad vertex count: {lines[0]!r}") from exc
        if len(lines) != n + 1:
            raise GraphError(f"expected {n} adjacency rows, got {len(lines) - 1}")
        rows = []
        for ln in lines[1:]:
            if len(ln) != n or set(ln) - {"0", "1"}:
                raise GraphError(f"bad adjacency row: {ln!r}")
            rows.append(sum(1 << v for v, b in enumerate(ln) if b == "1"))
        return SimpleGraph(n, tuple(rows))
    edges = []
    top = 0
    for item in s.split(","):
        item = item.strip()
        halves = item.split("-")
        if len(halves) != 2:
            raise GraphError(f"bad edge: {item!r}")
        uv = []
        for h in halves:
            h = h.strip()
            if h.isdigit():
                v = int(h) - 1
            elif len(h) == 1 and h.isalpha():
                v = ord(h.upper()) - ord("A")
            else:
                raise GraphError(f"bad vertex name: {h!r}")
            if v < 0:
                raise GraphError(f"bad vertex name: {h!r}")
            uv.append(v)
        if uv[0] == uv[1]:
            raise GraphError(f"loop edge: {item!r}")
        top = max(top, uv[0] + 1, uv[1] + 1)
        edges.append((uv[0], uv[1]))
    return SimpleGraph.from_edges(top, edges)


def format_graph(g: SimpleGraph) -> str:
    """Emit the adjacency-matrix text form (bit rows)."""
    lines = [str(g.n)]
    for u in range(g.n):
        lines.append("".join("1" if g.rows[u] >> v & 1 else "0" for v in range(g.n)))
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# intersection graphs and chord orientations


def interleave_rows(word: Sequence[int]) -> tuple[int, ...]:
    """Adjacency bit rows of the interleaving relation of a word's chords."""
    pairs = word_positions(word)
    n = len(pairs)
    rows = [0] * n
    for a in range(n):
        a1, a2 = pairs[a]
        for b in range(a + 1, n):
            b1, b2 = pairs[b]
            if (a1 < b1 < a2) != (a1 < b2 < a2):
                rows[a] |= 1 << b
                rows[b] |= 1 << a
    return tuple(rows)


def intersection_graph(d: ChordDiagram) -> SimpleGraph:
    """Graph on the chords with edges between interleaving chords."""
    return SimpleGraph(d.n, interleave_rows(d.word))


def orient_chords(d: ChordDiagram, flip_mask: int = 0) -> list[tuple[int, int]]:
    """(begin, end) endpoint positions per chord.

    The canonical choice directs each chord from its first endpoint after
    the basepoint; set bit c of flip_mask to reverse chord c.
    """
    out = []
    for ch, (i, j) in enumerate(d.chord_positions()):
        out.append((j, i) if flip_mask >> ch & 1 else (i, j))
    return out


@dataclass(frozen=True)
class DirectedIntersectionGraph:
    """Intersection graph plus the arrow directions induced by chord
    orientations: bit v of arrows[u] means the edge uv points u -> v."""

    graph: SimpleGraph
    arrows: tuple[int, ...]

    def __post_init__(self):
        for u in range(self.graph.n):
            for v in range(u + 1, self.graph.n):
                fwd = self.arrows[u] >> v & 1
                bwd = self.arrows[v] >> u & 1
                if self.graph.has_edge(u, v):
                    if fwd + bwd != 1:
                        raise GraphError(f"edge {u}-{v} needs exactly one arrow")
                elif fwd or bwd:
                    raise GraphError(f"arrow on non-edge {u}-{v}")

    def sign_matrix(self) -> list[list[int]]:
        """Entry [u][v] is +1 for an arrow u->v, -1 for v->u, 0 otherwise."""
        n = self.graph.n
        w = [[0] * n for _ in range(n)]
        for u in range(n):
            for v in range(n):
                if self.arrows[u] >> v & 1:
                    w[u][v] = 1
                    w[v][u] = -1
        return w


def directed_rows(word: Sequence[int], begins: Sequence[int]) -> tuple[int, ...]:
    """Arrow bit rows from begin positions: chord a points to chord b iff
    b's begin lies on the counterclockwise arc from a's begin to a's end."""
    pairs = word_positions(word)
    m = len(word)
    n = len(pairs)
    arrows = [0] * n
    for a in range(n):
        a1, a2 = pairs[a]
        ba = begins[a]
        ea = a1 + a2 - ba
        for b in range(a + 1, n):
            b1, b2 = pairs[b]
            if (a1 < b1 < a2) == (a1 < b2 < a2):
                continue
            bb = begins[b]
            if (bb - ba) % m < (ea - ba) % m:
                arrows[a] |= 1 << b
            else:
                arrows[b] |= 1 << a
    return tuple(arrows)


def directed_intersection_graph(
    d: ChordDiagram, flip_mask: int = 0
) -> DirectedIntersectionGraph:
    """Directed intersection graph for the given chord orientations."""
    begins = [b for b, _ in orient_chords(d, flip_mask)]
    return DirectedIntersectionGraph(
        graph=intersection_graph(d), arrows=directed_rows(d.word, begins)
    )


# ---------------------------------------------------------------------------
# cycles


def enumerate_cycles(g: SimpleGraph, length: int) -> list[tuple[int, ...]]:
    """All simple cycles on `length` distinct vertices, once each.

    Cycles are returned in canonical form: anchored at their minimal
    vertex, direction fixed so the second vertex is smaller than the
    last.  Search explores only vertices above the anchor, so every
    cycle is generated from exactly one root and one direction survives.
    """
    if length < 3:
        raise ValueError("cycle length must be at least 3")
    n = g.n
    out: list[tuple[int, ...]] = []
    path = [0] * length
    def dfs(root: int, v: int, depth: int, visited: int):
        if depth == length:
            if g.rows[v] >> root & 1 and path[1] < path[length - 1]:
                out.append(tuple(path))
            return
        nbrs = g.rows[v] & ~visited
        while nbrs:
            low = nbrs & (-nbrs)
            nbrs ^= low
            u = low.bit_length() - 1
            if u > root:
                path[depth] = u
                dfs(root, u, depth + 1, visited | low)
    for root in range(n):
        path[0] = root
        dfs(root, root, 1, 1 << root)
    out.sort()
    return out


def count_cycles_naive(g: SimpleGraph, length: int) -> int:
    """Independent oracle: closed vertex sequences deduped by symmetry."""
    seen = set()
    for perm in itertools.permutations(range(g.n), length):
        if all(
            g.has_edge(perm[i], perm[(i + 1) % length]) for i in range(length)
        ):
            best = min(
                min(seq[i:] + seq[:i] for i in range(length))
                for seq in (perm, perm[::-1])
            )
            seen.add(best)
    return len(seen)


def cycle_sign(dg: DirectedIntersectionGraph, cycle: Sequence[int]) -> int:
    """+1 iff the number of arrows pointing either way around is even.

    Even length makes the two agreement counts share parity, so the
    sign does not depend on the traversal direction.
    """
    l = len(cycle)
    if l % 2 != 0:
        raise ValueError("cycle sign is defined for even length only")
    agree = 0
    for i in range(l):
        u, v = cycle[i], cycle[(i + 1) % l]
        if not dg.graph.has_edge(u, v):
            raise GraphError(f"cycle edge {u}-{v} missing from graph")
        agree += dg.arrows[u] >> v & 1
    return 1 if agree % 2 == 0 else -1


# ---------------------------------------------------------------------------
# GF(2) linear algebra and the two graph moves of the 4-term relation


def gf2_rank(rows: Sequence[int], n_cols: int) -> int:
    """Rank over GF(2) via bit-row Gaussian elimination."""
    work = list(rows)
    rank = 0
    row_idx = 0
    for col in range(n_cols):
        pivot = None
        for r in range(row_idx, len(work)):
            if work[r] >> col & 1:
                pivot = r
                break
        if pivot is None:
            continue
        work[row_idx], work[pivot] = work[pivot], work[row_idx]
        for r in range(len(work)):
            if r != row_idx and work[r] >> col & 1:
                work[r] ^= work[row_idx]
        rank += 1
        row_idx += 1
        if row_idx == len(work):
            break
    return rank


def graph_prime(g: SimpleGraph, a: int, b: int) -> SimpleGraph:
    """Toggle the adjacency of a and b; everything else unchanged."""
    if a == b:
        raise GraphError("vertices must be distinct")
    rows = list(g.rows)
    rows[a] ^= 1 << b
    rows[b] ^= 1 << a
    return SimpleGraph(g.n, tuple(rows))


def graph_tilde(g: SimpleGraph, a: int, b: int) -> SimpleGraph:
    """For every vertex adjacent to b (other than a), toggle its
    adjacency with a.  The a-b edge itself is untouched; the result
    depends on the order of (a, b)."""
    if a == b:
        raise GraphError("vertices must be distinct")
    mask = g.rows[b] & ~(1 << a) & ~(1 << b)
    rows = list(g.rows)
    rows[a] ^= mask
    rest = mask
    while rest:
        low = rest & (-rest)
        rest ^= low
        rows[low.bit_length() - 1] ^= 1 << a
    return SimpleGraph(g.n, tuple(rows))


# ---------------------------------------------------------------------------
# enumeration, isomorphism, realizability


def enumerate_graphs(n: int, mode: str = "labeled") -> Iterator[SimpleGraph]:
    """Yield graphs on n vertices.

    mode="labeled" gives all 2^(n(n-1)/2) graphs in edge-mask order;
    mode="up-to-iso" gives the minimum-edge-mask representative of each
    isomorphism class, found by orbit marking over all n! relabelings.
    """
    npairs = n * (n - 1) // 2
    if mode == "labeled":
        for mask in range(1 << npairs):
            yield SimpleGraph.from_edge_mask(n, mask)
        return
    if mode != "up-to-iso":
        raise ValueError(f"unknown mode: {mode!r}")
    maps = _pair_permutations(n)
    seen = bytearray(1 << npairs)
    for mask in range(1 << npairs):
        if seen[mask]:
            continue
        yield SimpleGraph.from_edge_mask(n, mask)
        for pmap in maps:
            img = 0
            rest = mask
            while rest:
                low = rest & (-rest)
                rest ^= low
                img |= 1 << pmap[low.bit_length() - 1]
            seen[img] = 1


@lru_cache(maxsize=None)
def pair_index_table(n: int) -> tuple[tuple[int, ...], ...]:
    """Table [u][v] -> bit position of the pair in an edge mask."""
    table = [[0] * n for _ in range(n)]
    k = 0
    for u in range(n):
        for v in range(u + 1, n):
            table[u][v] = table[v][u] = k
            k += 1
    return tuple(tuple(row) for row in table)


def prime_mask(n: int, mask: int, a: int, b: int) -> int:
    """Edge-mask form of toggling the a-b adjacency."""
    return mask ^ (1 << pair_index_table(n)[a][b])


def tilde_mask(n: int, mask: int, a: int, b: int) -> int:
    """Edge-mask form of toggling a's adjacency with every neighbor of b."""
    ptab = pair_index_table(n)
    flip = 0
    row_b = ptab[b]
    row_a = ptab[a]
    for c in range(n):
        if c != a and c != b and mask >> row_b[c] & 1:
            flip |= 1 << row_a[c]
    return mask ^ flip


@lru_cache(maxsize=None)
def _pair_permutations(n: int) -> tuple[tuple[int, ...], ...]:
    """For each vertex permutation, the induced map on pair indices."""
    index = {}
    k = 0
    for u in range(n):
        for v in range(u + 1, n):
            index[u, v] = k
            k += 1
    maps = []
    for perm in itertools.permutations(range(n)):
        pmap = [0] * k
        for (u, v), i in index.items():
            pu, pv = perm[u], perm[v]
            pmap[i] = index[(pu, pv) if pu < pv else (pv, pu)]
        maps.append(tuple(pmap))
    return tuple(maps)


def graph_canonical_mask(g: SimpleGraph) -> int:
    """Minimum edge mask over all vertex relabelings (n <= 8)."""
    if g.n > 8:
        raise GraphError("brute-force canonical labeling is capped at 8 vertices")
    mask = g.edge_mask()
    best = mask
    for pmap in _pair_permutations(g.n):
        img = 0
        rest = mask
        while rest:
            low = rest & (-rest)
            rest ^= low
            img |= 1 << pmap[low.bit_length() - 1]
        if img < best:
            best = img
    return best


@lru_cache(maxsize=None)
def _realization_by_class(n: int) -> dict[int, bytes]:
    """Map canonical graph mask -> canonical code of a realizing diagram."""
    from .diagrams import canonical_code, enumerate_diagrams

    out: dict[int, bytes] = {}
    for d in enumerate_diagrams(n, "up-to-rotation"):
        key = graph_canonical_mask(intersection_graph(d))
        out.setdefault(key, canonical_code(d))
    return out


def realize_diagram(g: SimpleGraph) -> ChordDiagram | None:
    """A chord diagram whose intersection graph is isomorphic to g, or None.

    Brute-force search over diagrams of order n; capped at n <= 7.
    """
    if g.n > 7:
        raise GraphError("realizability search is capped at 7 vertices")
    from .diagrams import parse_diagram

    code = _realization_by_class(g.n).get(graph_canonical_mask(g))
    if code is None:
        return None
    return parse_diagram(code.decode("ascii")) if g.n else ChordDiagram(())


def is_intersection_graph(g: SimpleGraph) -> bool:
    """Whether some chord diagram has an isomorphic intersection graph."""
    if g.n > 6:
        raise GraphError("intersection-graph test is capped at 6 vertices")
    if g.n == 0:
        return True
    return realize_diagram(g) is not None
