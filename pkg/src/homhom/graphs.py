"""Small undirected graphs as bitmask adjacency rows, plus the core operations.

Vertices are always 0..n-1.  A set of vertices is an ``int`` bitmask (bit v set
iff vertex v is a member), which keeps the search loops in this package cheap.
``Graph.adj[v]`` is the bitmask of neighbours of v.  Everything here is
deterministic: vertex iteration is ascending unless stated otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

MAX_VERTICES = 64


def mask_of(vertices: Iterable[int]) -> int:
    """Bitmask with exactly the given vertex bits set."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits(mask: int) -> Iterator[int]:
    """Yield the set bits of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return mask.bit_count()


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertices 0..n-1 with bitmask adjacency rows."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count must be in 1..{MAX_VERTICES}, got {self.n}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency row count does not match vertex count")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"adjacency row of vertex {v} mentions vertices >= n")
            if row >> v & 1:
                raise ValueError(f"vertex {v} has a self-loop")
        for v in range(self.n):
            for u in bits(self.adj[v]):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"adjacency is not symmetric at ({v}, {u})")

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edge_count(self) -> int:
        return sum(popcount(row) for row in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        """All edges (u, v) with u < v, sorted ascending."""
        out = []
        for u in range(self.n):
            for v in bits(self.adj[u] >> (u + 1) << (u + 1)):
                out.append((u, v))
        return out

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"Graph(n={self.n}, edges={self.edges()})"


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list; rejects loops and out-of-range ends."""
    rows = [0] * n
    for u, v in edges:
        if u == v:
            raise ValueError(f"self-loop at {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


# ---------------------------------------------------------------------------
# basic local operations


def neighbors(g: Graph, v: int) -> int:
    """Bitmask of neighbours of v."""
    return g.adj[v]


def degree(g: Graph, v: int) -> int:
    return popcount(g.adj[v])


def max_degree(g: Graph) -> int:
    return max(popcount(row) for row in g.adj)


def common_neighbors(g: Graph, vertex_mask: int) -> int:
    """Bitmask of vertices adjacent to *every* vertex in ``vertex_mask``.

    The empty set is rejected: "common neighbours of nothing" has no sensible
    answer here and silent defaults hide caller bugs.
    """
    if vertex_mask == 0:
        raise ValueError("common_neighbors of the empty vertex set is undefined")
    out = g.full_mask
    for v in bits(vertex_mask):
        out &= g.adj[v]
        if not out:
            break
    return out


def induced_subgraph(g: Graph, vertex_mask: int) -> Graph:
    """Induced subgraph on the masked vertices, relabelled 0..k-1 ascending."""
    if vertex_mask == 0:
        raise ValueError("induced subgraph on the empty vertex set is not a graph")
    if vertex_mask & ~g.full_mask:
        raise ValueError("vertex mask mentions vertices outside the graph")
    old = list(bits(vertex_mask))
    index = {v: i for i, v in enumerate(old)}
    rows = []
    for v in old:
        row = 0
        for u in bits(g.adj[v] & vertex_mask):
            row |= 1 << index[u]
        rows.append(row)
    return Graph(len(old), tuple(rows))


# ---------------------------------------------------------------------------
# connectivity and distances


def _reach(g: Graph, start_bit: int, within: int) -> int:
    """Bitmask of vertices reachable from start_bit inside ``within``."""
    reached = start_bit
    frontier = start_bit
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & within & ~reached
        reached |= frontier
    return reached


def connected_within(g: Graph, vertex_mask: int) -> bool:
    """True iff the induced subgraph on the (nonempty) mask is connected."""
    if vertex_mask == 0:
        return False
    start = vertex_mask & -vertex_mask
    return _reach(g, start, vertex_mask) == vertex_mask


def is_connected(g: Graph) -> bool:
    return connected_within(g, g.full_mask)


def connected_components(g: Graph) -> list[int]:
    """Masks of the connected components, ordered by their lowest vertex."""
    remaining = g.full_mask
    comps = []
    while remaining:
        start = remaining & -remaining
        comp = _reach(g, start, remaining)
        comps.append(comp)
        remaining &= ~comp
    return comps


def distance(g: Graph, u: int, v: int) -> int | None:
    """BFS distance from u to v; None if v is unreachable from u."""
    if u == v:
        return 0
    reached = 1 << u
    frontier = 1 << u
    d = 0
    while frontier:
        d += 1
        nxt = 0
        for w in bits(frontier):
            nxt |= g.adj[w]
        frontier = nxt & ~reached
        if frontier >> v & 1:
            return d
        reached |= frontier
    return None


def eccentricity(g: Graph, u: int) -> int:
    """Largest BFS distance from u; requires that u reaches every vertex."""
    reached = 1 << u
    frontier = 1 << u
    d = 0
    while True:
        nxt = 0
        for w in bits(frontier):
            nxt |= g.adj[w]
        frontier = nxt & ~reached
        if not frontier:
            break
        reached |= frontier
        d += 1
    if reached != g.full_mask:
        raise ValueError("eccentricity undefined: graph is not connected")
    return d


def diameter(g: Graph) -> int:
    """Largest pairwise distance; raises on disconnected input."""
    return max(eccentricity(g, u) for u in range(g.n))


def bipartition(g: Graph) -> tuple[int, int] | None:
    """A 2-colouring (side_x_mask, side_y_mask) or None if none exists.

    Deterministic: the lowest vertex of each component goes to side x.
    """
    side = [-1] * g.n
    for comp in connected_components(g):
        start = (comp & -comp).bit_length() - 1
        side[start] = 0
        frontier = 1 << start
        seen = frontier
        colour = 0
        while frontier:
            colour ^= 1
            nxt = 0
            for v in bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & comp & ~seen
            for v in bits(frontier):
                side[v] = colour
            seen |= frontier
    x = mask_of(v for v in range(g.n) if side[v] == 0)
    y = g.full_mask & ~x
    for v in range(g.n):
        own = x if x >> v & 1 else y
        if g.adj[v] & own:
            return None
    return x, y


def girth(g: Graph) -> int | None:
    """Length of a shortest cycle; None for forests.

    Brute force: delete each edge in turn and measure the detour distance.
    Fine at this package's graph sizes.
    """
    best: int | None = None
    for u, v in g.edges():
        rows = list(g.adj)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        d = distance(Graph(g.n, tuple(rows)), u, v)
        if d is not None and (best is None or d + 1 < best):
            best = d + 1
    return best


def induced_cycle_lengths(g: Graph, max_len: int | None = None) -> frozenset[int]:
    """Set of lengths of induced (chordless) cycles, up to ``max_len``.

    DFS over chordless paths: a path is grown only by vertices adjacent to its
    endpoint and to no interior vertex; a vertex adjacent to the path's start
    closes a cycle.  States (path vertex set, endpoint) are memoised — two
    chordless paths with the same vertex set and endpoint have identical
    continuations.  Exponential in the worst case, which is fine at the sizes
    this package works with.
    """
    limit = g.n if max_len is None else min(max_len, g.n)
    lengths: set[int] = set()
    seen_states: set[tuple[int, int]] = set()

    def grow(start: int, path_mask: int, last: int) -> None:
        interior = path_mask & ~(1 << start) & ~(1 << last)
        for w in bits(g.adj[last] & ~path_mask):
            if w <= start:
                continue  # the start is the smallest vertex of any cycle found
            if g.adj[w] & interior:
                continue  # chord to the path interior
            if g.adj[w] >> start & 1:
                size = popcount(path_mask) + 1
                if 3 <= size <= limit:
                    lengths.add(size)
                continue  # extending past w would leave a chord to start
            if popcount(path_mask) + 1 < limit:
                state = (path_mask | 1 << w, w)
                if state not in seen_states:
                    seen_states.add(state)
                    grow(start, *state)

    for s in range(g.n):
        for a in bits(g.adj[s]):
            if a > s:
                grow(s, (1 << s) | (1 << a), a)
    return frozenset(lengths)


# ---------------------------------------------------------------------------
# gluing graphs together


def disjoint_union(*graphs: Graph) -> Graph:
    """Disjoint union; vertex blocks keep the argument order."""
    if not graphs:
        raise ValueError("disjoint_union of no graphs")
    rows: list[int] = []
    offset = 0
    for g in graphs:
        rows.extend(row << offset for row in g.adj)
        offset += g.n
    return Graph(offset, tuple(rows))


def edge_complete_union(*graphs: Graph) -> Graph:
    """Disjoint union plus every edge between distinct argument blocks (join)."""
    base = disjoint_union(*graphs)
    total = base.n
    full = (1 << total) - 1
    rows = list(base.adj)
    offset = 0
    for g in graphs:
        block = ((1 << g.n) - 1) << offset
        for v in bits(block):
            rows[v] |= full & ~block
        offset += g.n
    return Graph(total, tuple(rows))


def complement(g: Graph) -> Graph:
    rows = tuple(g.full_mask & ~row & ~(1 << v) for v, row in enumerate(g.adj))
    return Graph(g.n, rows)


# ---------------------------------------------------------------------------
# induced-subgraph embedding and isomorphism


def find_induced_embedding(pattern: Graph, host: Graph) -> dict[int, int] | None:
    """A map realising ``pattern`` as an induced subgraph of ``host``, or None.

    Backtracking over pattern vertices in a connectivity-aware order with
    bitmask candidate filtering (adjacency, non-adjacency, degree).  The first
    embedding in ascending candidate order is returned — deterministic.
    """
    if pattern.n > host.n:
        return None
    # order pattern vertices: heaviest first, then prefer vertices with an
    # already-placed neighbour (keeps candidate sets tight)
    order: list[int] = []
    placed = 0
    degs = [popcount(r) for r in pattern.adj]
    while len(order) < pattern.n:
        cands = [
            v
            for v in range(pattern.n)
            if not placed >> v & 1 and (not order or pattern.adj[v] & placed)
        ]
        if not cands:
            cands = [v for v in range(pattern.n) if not placed >> v & 1]
        v = max(cands, key=lambda v: (degs[v], -v))
        order.append(v)
        placed |= 1 << v
    host_degs = [popcount(r) for r in host.adj]
    host_nonadj = [host.full_mask & ~row & ~(1 << v) for v, row in enumerate(host.adj)]
    image: list[int | None] = [None] * pattern.n
    used = 0

    def assign(i: int) -> dict[int, int] | None:
        nonlocal used
        if i == pattern.n:
            return {v: image[v] for v in range(pattern.n)}  # type: ignore[misc]
        v = order[i]
        cand = host.full_mask & ~used
        for u in range(pattern.n):
            if image[u] is None:
                continue
            if pattern.adj[v] >> u & 1:
                cand &= host.adj[image[u]]
            else:
                cand &= host_nonadj[image[u]]
            if not cand:
                return None
        for w in bits(cand):
            if host_degs[w] < degs[v]:
                continue
            image[v] = w
            used |= 1 << w
            found = assign(i + 1)
            if found is not None:
                return found
            image[v] = None
            used &= ~(1 << w)
        return None

    return assign(0)


def embeds(pattern: Graph, host: Graph) -> bool:
    """True iff ``pattern`` appears as an induced subgraph of ``host``."""
    return find_induced_embedding(pattern, host) is not None


def is_isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n or g1.edge_count() != g2.edge_count():
        return False
    if sorted(map(popcount, g1.adj)) != sorted(map(popcount, g2.adj)):
        return False
    return find_induced_embedding(g1, g2) is not None


# ---------------------------------------------------------------------------
# canonical form


def _refined_colors(g: Graph) -> list[int]:
    """Iterated neighbourhood-refinement colours (isomorphism-invariant ids)."""
    colors = [popcount(row) for row in g.adj]
    for _ in range(g.n):
        sigs = [
            (colors[v], tuple(sorted(colors[u] for u in bits(g.adj[v]))))
            for v in range(g.n)
        ]
        ids = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [ids[s] for s in sigs]
        if new == colors:
            break
        colors = new
    return colors


DEFAULT_CANONICAL_BOUND = 10


def canonical_rows(g: Graph, bound: int | None = DEFAULT_CANONICAL_BOUND) -> tuple[int, ...]:
    """Lexicographically-minimal upper-triangle rows over vertex relabellings.

    Entry j-1 holds the bits (new i, new j) for i < j, most significant first —
    the same bit order graph6 uses, so minimising this tuple minimises the
    graph6 string.  Relabellings are restricted to those listing the refined
    colour classes in ascending colour order (colour ids are isomorphism-
    invariant, so the minimum is too).  Branch-and-bound beyond that.
    """
    if bound is not None and g.n > bound:
        raise ValueError(
            f"canonical form requested for n={g.n} above bound {bound}; "
            "pass a higher bound explicitly if you really want this"
        )
    n = g.n
    colors = _refined_colors(g)
    slot_color = sorted(colors)
    best: list[int] | None = None
    perm: list[int] = []
    rows: list[int] = []

    def twins(u: int, v: int) -> bool:
        # swapping u and v is an automorphism (equal neighbourhoods apart
        # from each other), so their subtrees are interchangeable
        return g.adj[u] & ~(1 << v) == g.adj[v] & ~(1 << u)

    def place(i: int, tight: bool) -> None:
        nonlocal best
        if i == n:
            if best is None or rows < best:
                best = rows.copy()
            return
        options = []
        for v in range(n):
            if colors[v] != slot_color[i] or v in perm:
                continue
            row = 0
            av = g.adj[v]
            for u in perm:
                row = row << 1 | (av >> u & 1)
            options.append((row, v))
        options.sort()
        tried: list[tuple[int, int]] = []
        for row, v in options:
            if any(r == row and twins(u, v) for r, u in tried):
                continue
            tried.append((row, v))
            child_tight = tight
            if i > 0:
                if best is not None and tight:
                    ref = best[i - 1]
                    if row > ref:
                        break  # options are sorted; everything later is worse
                    child_tight = row == ref
                rows.append(row)
            perm.append(v)
            place(i + 1, child_tight)
            perm.pop()
            if i > 0:
                rows.pop()

    place(0, True)
    assert best is not None
    return tuple(best)


def canonical_form(g: Graph, bound: int | None = DEFAULT_CANONICAL_BOUND) -> bytes:
    """Canonical graph6 byte string: equal iff the graphs are isomorphic."""
    return _graph6_from_rows(g.n, canonical_rows(g, bound))


def canonical_graph(g: Graph, bound: int | None = DEFAULT_CANONICAL_BOUND) -> Graph:
    """The canonically-relabelled copy of g (parse of its canonical form)."""
    return from_graph6(canonical_form(g, bound).decode("ascii"))


# ---------------------------------------------------------------------------
# graph6 format (standard, <= 62 vertices)


def _graph6_from_rows(n: int, rows: tuple[int, ...]) -> bytes:
    """graph6 bytes from upper-triangle rows (row j-1 = bits (i, j), i < j)."""
    if n > 62:
        raise ValueError("graph6 output supports at most 62 vertices")
    bits_out: list[int] = []
    for j in range(1, n):
        row = rows[j - 1]
        for k in range(j - 1, -1, -1):
            bits_out.append(row >> k & 1)
    while len(bits_out) % 6:
        bits_out.append(0)
    chars = [chr(n + 63)]
    for i in range(0, len(bits_out), 6):
        group = 0
        for b in bits_out[i : i + 6]:
            group = group << 1 | b
        chars.append(chr(group + 63))
    return "".join(chars).encode("ascii")


def to_graph6(g: Graph) -> str:
    """Standard graph6 encoding of g with its current labelling."""
    rows = []
    for j in range(1, g.n):
        row = 0
        for i in range(j):
            row = row << 1 | (g.adj[i] >> j & 1)
        rows.append(row)
    return _graph6_from_rows(g.n, tuple(rows)).decode("ascii")


def from_graph6(text: str) -> Graph:
    """Parse one standard graph6 line (optionally '>>graph6<<'-headed)."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<") :]
    if not s:
        raise ValueError("empty graph6 string")
    n = ord(s[0]) - 63
    if not 1 <= n <= 62:
        raise ValueError(f"unsupported graph6 vertex count byte {s[0]!r}")
    need = (n * (n - 1) // 2 + 5) // 6
    body = s[1:]
    if len(body) != need:
        raise ValueError(
            f"graph6 body length {len(body)} does not match n={n} (need {need})"
        )
    stream = 0
    for ch in body:
        val = ord(ch) - 63
        if not 0 <= val < 64:
            raise ValueError(f"bad graph6 byte {ch!r}")
        stream = stream << 6 | val
    total_bits = 6 * len(body)
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if stream >> (total_bits - 1 - k) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph(n, tuple(rows))


# ---------------------------------------------------------------------------
# edge-list text format


def from_edge_list_text(text: str) -> Graph:
    """Parse the plain edge-list format.

    First relevant line: "n m"; then m lines "u v" with distinct endpoints
    in 0..n-1 (either order).  Blank lines and lines starting with '#' are
    ignored anywhere.
    """
    lines = [
        ln.strip()
        for ln in text.splitlines()
        if ln.strip() and not ln.strip().startswith("#")
    ]
    if not lines:
        raise ValueError("edge-list input is empty")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError(f"expected header 'n m', got {lines[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError as exc:
        raise ValueError(f"non-integer header {lines[0]!r}") from exc
    if not 1 <= n <= MAX_VERTICES:
        raise ValueError(f"vertex count must be in 1..{MAX_VERTICES}, got {n}")
    if len(lines) - 1 != m:
        raise ValueError(f"header promises {m} edges, found {len(lines) - 1}")
    edges = []
    seen = set()
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"expected edge line 'u v', got {ln!r}")
        u, v = sorted((int(parts[0]), int(parts[1])))
        if not 0 <= u < v < n:
            raise ValueError(f"edge ({u}, {v}) violates 0 <= u < v < n={n}")
        if (u, v) in seen:
            raise ValueError(f"duplicate edge ({u}, {v})")
        seen.add((u, v))
        edges.append((u, v))
    return from_edges(n, edges)


def to_edge_list_text(g: Graph) -> str:
    lines = [f"{g.n} {g.edge_count()}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"
