"""Generators for the named graph families and small-graph enumeration.

Every generator documents its vertex layout, since witnesses and tests refer
to concrete vertex ids.  ``enumerate_graphs`` streams one representative per
isomorphism class in a fixed order (vertex count ascending, then canonical
graph6 bytes ascending).
"""

from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass
from typing import Iterator

from .graphs import Graph, canonical_form, from_edges, from_graph6, is_connected

FAMILY_TAGS = (
    "COMPLETE",
    "REGULAR_MULTIPARTITE",
    "CYCLE",
    "PATH",
    "LINE_KSS",
    "BCPM",
    "PETERSEN",
    "CLEBSCH",
    "TWO_SQUARES",
    "KN_TREELIKE",
    "KMN_TREELIKE",
    "PCM_EXAMPLE",
    "MULTICLAW",
)

_PARAM_COUNTS = {
    "COMPLETE": (1, 1),
    "REGULAR_MULTIPARTITE": (2, 2),
    "CYCLE": (1, 1),
    "PATH": (1, 1),
    "LINE_KSS": (1, 1),
    "BCPM": (1, 1),
    "PETERSEN": (0, 0),
    "CLEBSCH": (0, 0),
    "TWO_SQUARES": (0, 0),
    "KN_TREELIKE": (2, 2),
    "KMN_TREELIKE": (3, 3),
    "PCM_EXAMPLE": (1, 1),
    "MULTICLAW": (3, None),
}


@dataclass(frozen=True)
class FamilyDescriptor:
    """A named family member: tag plus integer parameters."""

    tag: str
    params: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.tag not in FAMILY_TAGS:
            raise ValueError(f"unknown family tag {self.tag!r}")
        lo, hi = _PARAM_COUNTS[self.tag]
        if len(self.params) < lo or (hi is not None and len(self.params) > hi):
            raise ValueError(
                f"{self.tag} takes {lo}{'' if hi == lo else f'..{hi or chr(0x221e)}'} "
                f"parameters, got {len(self.params)}"
            )

    def __str__(self) -> str:
        if not self.params:
            return self.tag.lower()
        inner = ",".join(map(str, self.params))
        return f"{self.tag.lower()}({inner})"


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    return from_edges(n, itertools.combinations(range(n), 2))


def empty_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("empty graph needs n >= 1")
    return Graph(n, (0,) * n)


def cycle_graph(n: int) -> Graph:
    """Cycle on n >= 3 vertices: i ~ i+1 (mod n)."""
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n - 1)] + [(0, n - 1)])


def path_graph(length: int) -> Graph:
    """Path with ``length`` edges, i.e. length+1 vertices 0..length in a row."""
    if length < 0:
        raise ValueError("path length must be >= 0")
    return from_edges(length + 1, [(i, i + 1) for i in range(length)])


def regular_multipartite_graph(parts: int, part_size: int) -> Graph:
    """Complete multipartite graph with ``parts`` independent sets of equal
    ``part_size``; sides are consecutive vertex blocks, edges across blocks."""
    if parts < 2 or part_size < 2:
        raise ValueError("regular multipartite graph needs parts >= 2 and size >= 2")
    n = parts * part_size
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if u // part_size != v // part_size
    ]
    return from_edges(n, edges)


def rook_graph(s: int) -> Graph:
    """The s x s rook's graph (line graph of the complete bipartite K_{s,s}).

    Vertex (row, col) is r*s + c; two vertices are adjacent iff they share a
    row or a column.
    """
    if s < 2:
        raise ValueError("rook graph needs s >= 2")
    n = s * s
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if u // s == v // s or u % s == v % s:
                edges.append((u, v))
    return from_edges(n, edges)


def bcpm_graph(n: int) -> Graph:
    """Complete bipartite K_{n,n} minus a perfect matching.

    Left vertices 0..n-1, right vertices n..2n-1; i ~ n+j iff i != j.
    Connected exactly when n >= 3 (n = 2 gives two disjoint edges).
    """
    if n < 2:
        raise ValueError("bipartite complement of a perfect matching needs n >= 2")
    return from_edges(
        2 * n, [(i, n + j) for i in range(n) for j in range(n) if i != j]
    )


def petersen_graph() -> Graph:
    """Petersen graph: 2-subsets of a 5-set in lexicographic order, adjacent
    iff disjoint."""
    pairs = list(itertools.combinations(range(5), 2))
    edges = [
        (i, j)
        for i in range(10)
        for j in range(i + 1, 10)
        if not set(pairs[i]) & set(pairs[j])
    ]
    return from_edges(10, edges)


def clebsch_graph() -> Graph:
    """Clebsch graph via folding the 5-cube: antipodal vertex classes of the
    5-dimensional hypercube.

    Class representatives are the 16 bitstrings with the top (5th) bit clear,
    i.e. plain 0..15; two classes are adjacent iff some representatives differ
    in exactly one of five coordinates, which for the chosen representatives
    means popcount(a ^ b) is 1 or 4.
    """
    edges = [
        (a, b)
        for a in range(16)
        for b in range(a + 1, 16)
        if (a ^ b).bit_count() in (1, 4)
    ]
    return from_edges(16, edges)


def two_squares_graph() -> Graph:
    """Two squares sharing an edge: the 6-cycle 0..5 plus the long chord 2-5."""
    return from_edges(6, [(i, (i + 1) % 6) for i in range(6)] + [(2, 5)])


def pcm_example_graph(n: int) -> Graph:
    """Bipartite graph with a 3-vertex side 0..2 and an n-vertex side 3..n+2,
    complete across except exactly four non-edges: 0~b1, 0~b3, 1~b2, 1~b3 are
    missing (b_j is vertex j+2).

    Needs n >= 4.  Every side-subset has a common neighbour, the two-squares
    graph embeds, yet no induced subgraph is an n-matched-complement pattern.
    """
    if n < 4:
        raise ValueError("the example needs a large side of size >= 4")
    missing = {(0, 3), (0, 5), (1, 4), (1, 5)}
    edges = [
        (a, b)
        for a in range(3)
        for b in range(3, n + 3)
        if (a, b) not in missing
    ]
    return from_edges(n + 3, edges)


def multiclaw_graph(clique_size: int, blob_size: int, blob_counts: tuple[int, ...]) -> Graph:
    """Generalised multiclaw: a clique joined to groups of disjoint equal blobs.

    The graph is K_m joined completely to every group; group alpha consists of
    blob_counts[alpha] >= 2 pairwise-disjoint copies of K_k; distinct groups
    are also joined completely.  Complete multipartite graphs are the special
    case k = 1, m = 0.  Vertex layout: the K_m clique first, then the groups
    in order, each group its blobs in order.
    """
    m, k = clique_size, blob_size
    if m < 0 or k < 1 or not blob_counts or any(j < 2 for j in blob_counts):
        raise ValueError(
            "multiclaw needs clique_size >= 0, blob_size >= 1 and every "
            "blob count >= 2"
        )
    # group id -1 = the clique; inside a group, blob id distinguishes blobs
    labels: list[tuple[int, int]] = [(-1, i) for i in range(m)]
    for alpha, j in enumerate(blob_counts):
        for blob in range(j):
            labels.extend((alpha, blob) for _ in range(k))
    n = len(labels)
    edges = []
    for u in range(n):
        gu, bu = labels[u]
        for v in range(u + 1, n):
            gv, bv = labels[v]
            if gu == -1 and gv == -1:
                edges.append((u, v))  # inside the clique
            elif gu != gv:
                edges.append((u, v))  # across groups / clique-to-group
            elif bu == bv:
                edges.append((u, v))  # inside one blob
    return from_edges(n, edges)


# ---------------------------------------------------------------------------
# trees of blocks


@dataclass(frozen=True)
class TreeOfCliques:
    """Blocks glued at single shared vertices along a tree.

    ``blocks`` are either all ints (complete blocks, all of the same size)
    or all (m, n) pairs (complete bipartite blocks, sizes may vary).
    ``glues`` entries (block_a, vertex_a, block_b, vertex_b) identify one
    vertex of block_a with one of block_b; a vertex may take part in several
    glues, but each pair of blocks is glued at most once and the block-level
    structure must be a tree.
    """

    blocks: tuple[int | tuple[int, int], ...]
    glues: tuple[tuple[int, int, int, int], ...] = ()

    def block_order(self, index: int) -> int:
        b = self.blocks[index]
        return b if isinstance(b, int) else b[0] + b[1]

    def __post_init__(self) -> None:
        if not self.blocks:
            raise ValueError("need at least one block")
        kinds = {isinstance(b, int) for b in self.blocks}
        if len(kinds) != 1:
            raise ValueError("blocks must be all complete or all bipartite")
        if isinstance(self.blocks[0], int):
            sizes = set(self.blocks)
            if len(sizes) != 1:
                raise ValueError("complete blocks must all have the same size")
            if self.blocks[0] < 2:
                raise ValueError("complete blocks need size >= 2")
        else:
            for b in self.blocks:
                if b[0] < 1 or b[1] < 1:  # type: ignore[index]
                    raise ValueError("bipartite blocks need both sides >= 1")
        seen_pairs = set()
        for ia, va, ib, vb in self.glues:
            if ia == ib:
                raise ValueError("a block cannot be glued to itself")
            for i, v in ((ia, va), (ib, vb)):
                if not 0 <= i < len(self.blocks):
                    raise ValueError(f"glue mentions unknown block {i}")
                if not 0 <= v < self.block_order(i):
                    raise ValueError(f"glue mentions vertex {v} outside block {i}")
            key = (min(ia, ib), max(ia, ib))
            if key in seen_pairs:
                raise ValueError(f"blocks {key} glued more than once")
            seen_pairs.add(key)
        # the block incidence structure must be a tree: n-1 glues, connected
        if len(self.glues) != len(self.blocks) - 1:
            raise ValueError("block structure must be a tree (block count - 1 glues)")
        reach = {0}
        frontier = [0]
        adj: dict[int, list[int]] = {i: [] for i in range(len(self.blocks))}
        for ia, _, ib, _ in self.glues:
            adj[ia].append(ib)
            adj[ib].append(ia)
        while frontier:
            nxt = [j for i in frontier for j in adj[i] if j not in reach]
            reach.update(nxt)
            frontier = nxt
        if len(reach) != len(self.blocks):
            raise ValueError("block structure must be a tree (connected)")


def make_treelike(shape: TreeOfCliques) -> Graph:
    """Build the glued graph; vertices are numbered by their earliest
    (block index, in-block index) appearance."""
    # union-find over (block, local vertex)
    parent: dict[tuple[int, int], tuple[int, int]] = {}

    def find(x: tuple[int, int]) -> tuple[int, int]:
        while parent.setdefault(x, x) != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for ia, va, ib, vb in shape.glues:
        ra, rb = find((ia, va)), find((ib, vb))
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    ids: dict[tuple[int, int], int] = {}
    for i, _ in enumerate(shape.blocks):
        for v in range(shape.block_order(i)):
            root = find((i, v))
            if root not in ids:
                ids[root] = len(ids)
    if len(ids) > 64:
        raise ValueError(f"glued graph would have {len(ids)} > 64 vertices")

    def vid(i: int, v: int) -> int:
        return ids[find((i, v))]

    edges = set()
    for i, b in enumerate(shape.blocks):
        if isinstance(b, int):
            local = itertools.combinations(range(b), 2)
        else:
            m, n = b
            local = ((u, m + w) for u in range(m) for w in range(n))
        for u, w in local:
            a, c = vid(i, u), vid(i, w)
            if a == c:
                raise ValueError("a glue identified two vertices of one block")
            edges.add((min(a, c), max(a, c)))
    return from_edges(len(ids), sorted(edges))


def clique_chain(clique_size: int, count: int) -> Graph:
    """Chain of ``count`` complete blocks of ``clique_size``, consecutive
    blocks sharing one vertex (the canonical concrete clique-tree shape)."""
    if count < 1:
        raise ValueError("need at least one block")
    if count == 1:
        return complete_graph(clique_size)
    shape = TreeOfCliques(
        blocks=(clique_size,) * count,
        glues=tuple((i, clique_size - 1, i + 1, 0) for i in range(count - 1)),
    )
    return make_treelike(shape)


def biclique_chain(side_a: int, side_b: int, count: int) -> Graph:
    """Chain of ``count`` complete bipartite blocks K_{side_a, side_b},
    consecutive blocks sharing one vertex."""
    if count < 1:
        raise ValueError("need at least one block")
    m, n = side_a, side_b
    shape = TreeOfCliques(
        blocks=((m, n),) * count,
        glues=tuple((i, m + n - 1, i + 1, 0) for i in range(count - 1)),
    )
    return make_treelike(shape)


# ---------------------------------------------------------------------------
# descriptor dispatch


def make(desc: FamilyDescriptor) -> Graph:
    """Build the graph a descriptor names; raises ValueError on bad params."""
    tag, p = desc.tag, desc.params
    if tag == "COMPLETE":
        return complete_graph(*p)
    if tag == "REGULAR_MULTIPARTITE":
        return regular_multipartite_graph(*p)
    if tag == "CYCLE":
        return cycle_graph(*p)
    if tag == "PATH":
        return path_graph(*p)
    if tag == "LINE_KSS":
        return rook_graph(*p)
    if tag == "BCPM":
        return bcpm_graph(*p)
    if tag == "PETERSEN":
        return petersen_graph()
    if tag == "CLEBSCH":
        return clebsch_graph()
    if tag == "TWO_SQUARES":
        return two_squares_graph()
    if tag == "KN_TREELIKE":
        return clique_chain(*p)
    if tag == "KMN_TREELIKE":
        return biclique_chain(*p)
    if tag == "PCM_EXAMPLE":
        return pcm_example_graph(*p)
    if tag == "MULTICLAW":
        return multiclaw_graph(p[0], p[1], tuple(p[2:]))
    raise AssertionError(f"unhandled tag {tag}")  # pragma: no cover


# ---------------------------------------------------------------------------
# exhaustive enumeration of small graphs


ENUMERATION_SOFT_CAP = 7
ENUMERATION_HARD_CAP = 8


def enumerate_graphs(max_n: int, connected_only: bool = True) -> Iterator[Graph]:
    """Stream one representative per isomorphism class, up to ``max_n`` vertices.

    Graphs are grown by vertex augmentation: every class on n vertices arises
    from some class on n-1 vertices plus one new vertex with some neighbour
    mask, so extending every representative by every mask and deduplicating by
    canonical form is exhaustive.  Representatives are canonically labelled;
    order is (vertex count, canonical graph6 bytes) ascending.
    """
    if max_n < 1:
        raise ValueError("max_n must be >= 1")
    if max_n > ENUMERATION_HARD_CAP:
        raise ValueError(
            f"enumeration beyond {ENUMERATION_HARD_CAP} vertices is not supported"
        )
    if max_n > ENUMERATION_SOFT_CAP:
        warnings.warn(
            f"enumerating all graphs on {max_n} vertices is slow "
            f"(the intended ceiling is {ENUMERATION_SOFT_CAP})",
            stacklevel=2,
        )
    level = [empty_graph(1)]
    yield level[0]
    for n in range(2, max_n + 1):
        forms = set()
        for g in level:
            rows = list(g.adj)
            rows.append(0)
            for mask in range(1 << (n - 1)):
                new_rows = [
                    row | (mask >> v & 1) << (n - 1) for v, row in enumerate(rows[:-1])
                ]
                new_rows.append(mask)
                forms.add(canonical_form(Graph(n, tuple(new_rows))))
        level = [from_graph6(f.decode("ascii")) for f in sorted(forms)]
        for g in level:
            if not connected_only or is_connected(g):
                yield g
