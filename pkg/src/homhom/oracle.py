"""Brute-force decision of extension properties, straight from the definition.

A graph G satisfies the (source -> target) extension property when every
source-kind morphism out of a connected induced subgraph of G extends to a
total target-kind morphism G -> G.  Six properties matter here, named by
their morphism kinds::

    iso-iso    mono-iso    homo-iso      (extend to an automorphism)
    iso-homo   mono-homo   homo-homo     (extend to an endomorphism)

``connected_sources=False`` drops the connectedness restriction on sources.
The same machinery decides the relative versions between two graphs: every
source map out of g1 landing in g2 must extend to a total morphism g1 -> g2.

Everything here is exhaustive search with witnesses, meant as ground truth
for the structural recognizers; budgets guard against accidentally feeding
it graphs where exhaustion cannot finish.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from typing import Iterable

from .graphs import (
    Graph,
    bits,
    connected_components,
    connected_within,
    induced_subgraph,
    mask_of,
    popcount,
)
from .morphisms import (
    MorphKind,
    automorphism_generators,
    check_kind,
    complete_map,
    enumerate_morphisms,
    has_homomorphism,
)


class BudgetExceededError(RuntimeError):
    """The graph is too large for exhaustive checking under the current budget."""


@dataclass(frozen=True)
class ClassQuery:
    """Which extension property to decide."""

    source: MorphKind
    target: MorphKind
    connected_sources: bool = True

    def __post_init__(self) -> None:
        if self.target is MorphKind.MONO:
            raise ValueError("extension targets are iso or homo")

    @property
    def code(self) -> str:
        return f"{self.source.value}-{self.target.value}"


# the six connected extension properties, in hierarchy-friendly order
CLASS_CODES = (
    "iso-iso",
    "mono-iso",
    "homo-iso",
    "iso-homo",
    "mono-homo",
    "homo-homo",
)

_KIND_BY_NAME = {k.value: k for k in MorphKind}


def query_for_code(code: str, connected_sources: bool = True) -> ClassQuery:
    parts = code.split("-")
    if len(parts) != 2 or any(p not in _KIND_BY_NAME for p in parts):
        raise ValueError(f"unknown class code {code!r} (expected e.g. 'mono-homo')")
    return ClassQuery(
        _KIND_BY_NAME[parts[0]], _KIND_BY_NAME[parts[1]], connected_sources
    )


@dataclass(frozen=True)
class Witness:
    """A source map that cannot be extended.

    ``mapping`` is a valid source-kind morphism on ``domain_mask`` with no
    total target-kind extension.  ``stuck_vertex``, when set, is a vertex
    adjacent to the domain that already has no feasible image (the one-point
    search's reason for failure); re-validation never relies on it.
    """

    domain_mask: int
    mapping: dict[int, int]
    stuck_vertex: int | None = None
    note: str = ""


@dataclass(frozen=True)
class OracleResult:
    holds: bool
    witness: Witness | None
    complete: bool
    checked_maps: int


DEFAULT_SOURCE_BUDGETS = {
    MorphKind.ISO: 16,
    MorphKind.MONO: 16,
    MorphKind.HOMO: 10,
}
DEFAULT_STATE_LIMIT = 2_000_000

BUDGET_ENV_VAR = "HOMHOM_BUDGET"


def _resolve_budget(explicit: int | None, kind: MorphKind) -> int:
    if explicit is not None:
        return explicit
    env = os.environ.get(BUDGET_ENV_VAR)
    if env:
        return int(env)
    return DEFAULT_SOURCE_BUDGETS[kind]


# ---------------------------------------------------------------------------
# source enumeration


def _source_masks(g: Graph, connected: bool, max_size: int | None) -> list[int]:
    """All candidate source subsets, smallest first (size, then subset order)."""
    cap = g.n if max_size is None else min(max_size, g.n)
    out: list[int] = []
    for size in range(1, cap + 1):
        for combo in itertools.combinations(range(g.n), size):
            m = mask_of(combo)
            if not connected or connected_within(g, m):
                out.append(m)
    return out


def _orbit_representatives(g: Graph, masks: Iterable[int]) -> list[int]:
    """One subset per automorphism orbit, keeping first appearances.

    Sound for extension checking: relabelling a failing source map by an
    automorphism yields a failing source map on the orbit-mate.
    """
    gens = automorphism_generators(g)
    if not gens:
        return list(masks)
    # permutation applied to a vertex mask, via byte lookup tables
    tables: list[tuple[list[int], list[int]]] = []
    for p in gens:
        t0 = [0] * 256
        t1 = [0] * 256
        for b in range(1, 256):
            low = b & -b
            i = low.bit_length() - 1
            t0[b] = t0[b ^ low] | (1 << p[i] if i < g.n else 0)
            t1[b] = t1[b ^ low] | (1 << p[i + 8] if i + 8 < g.n else 0)
        tables.append((t0, t1))

    def images(q: int) -> Iterable[int]:
        if g.n <= 16:
            for t0, t1 in tables:
                yield t0[q & 255] | t1[q >> 8 & 255]
        else:  # general fallback, unused under default budgets
            for p in gens:
                yield mask_of(p[v] for v in bits(q))

    seen: set[int] = set()
    reps: list[int] = []
    for m in masks:
        if m in seen:
            continue
        reps.append(m)
        seen.add(m)
        frontier = [m]
        while frontier:
            q = frontier.pop()
            for im in images(q):
                if im not in seen:
                    seen.add(im)
                    frontier.append(im)
    return reps


# ---------------------------------------------------------------------------
# the two decision engines


def _per_map_search(
    g1: Graph,
    g2: Graph,
    query: ClassQuery,
    sources: list[int],
    complete: bool,
) -> OracleResult:
    """Try every source map individually; extension via the CSP completer."""
    checked = 0
    for domain in sources:
        for phi in enumerate_morphisms(g1, g2, query.source, domain):
            checked += 1
            if complete_map(g1, g2, phi, query.target) is None:
                wit = Witness(
                    domain,
                    phi,
                    None,
                    f"no total {query.target.value} extension exists",
                )
                return OracleResult(False, wit, True, checked)
    return OracleResult(True, None, complete, checked)


def _one_point_search(g1: Graph, g2: Graph, state_limit: int) -> OracleResult:
    """Decide the connected homo-homo property by one-point extensions.

    Explore every (connected domain, homomorphism into g2) state, growing
    domains one adjacent vertex at a time.  A state where some adjacent
    vertex has no feasible image is exactly a homomorphism from a connected
    induced subgraph with no total extension (any total extension would
    provide the missing image); if no state is stuck, greedy growth extends
    any source map across its component, and the caller guarantees the other
    components of g1 map into g2, so every source map extends.

    Assumes the caller verified each component of g1 admits a homomorphism
    into g2 (within one graph that is the identity).
    """
    seen: set[tuple[int, tuple[int, ...]]] = set()
    stack: list[tuple[int, tuple[int, ...]]] = []
    for v in range(g1.n):
        for w in range(g2.n):
            state = (1 << v, (w,))
            seen.add(state)
            stack.append(state)
    checked = 0
    while stack:
        domain, images = stack.pop()
        checked += 1
        verts = list(bits(domain))
        for v in range(g1.n):
            if domain >> v & 1 or not g1.adj[v] & domain:
                continue
            cand = g2.full_mask
            for u, w in zip(verts, images):
                if g1.adj[v] >> u & 1:
                    cand &= g2.adj[w]
            if not cand:
                wit = Witness(
                    domain,
                    dict(zip(verts, images)),
                    v,
                    "no image is adjacent to the images of the vertex's "
                    "mapped neighbours",
                )
                return OracleResult(False, wit, True, checked)
            pos = popcount(domain & ((1 << v) - 1))
            grown = domain | 1 << v
            for w in bits(cand):
                state = (grown, images[:pos] + (w,) + images[pos:])
                if state not in seen:
                    if len(seen) >= state_limit:
                        raise BudgetExceededError(
                            f"more than {state_limit} partial-map states"
                        )
                    seen.add(state)
                    stack.append(state)
    return OracleResult(True, None, True, checked)


# ---------------------------------------------------------------------------
# public API


def extension_morphic(
    g1: Graph,
    g2: Graph,
    query: ClassQuery,
    *,
    budget: int | None = None,
    max_source_size: int | None = None,
    sample_stride: int = 1,
    orbit_reduction: bool = True,
    state_limit: int = DEFAULT_STATE_LIMIT,
    force_per_map: bool = False,
) -> OracleResult:
    """Does every source map out of g1 into g2 extend to a total morphism
    g1 -> g2 of the target kind?

    Options: ``budget`` caps g1's vertex count (default per source kind,
    ``HOMHOM_BUDGET`` overrides); ``max_source_size`` and ``sample_stride``
    deliberately skip sources (the result is then marked incomplete when it
    holds); ``orbit_reduction`` checks one source subset per automorphism
    orbit of g1 (exact, on by default); ``force_per_map`` disables the
    one-point fast engine (for cross-validation in tests).
    """
    if sample_stride < 1:
        raise ValueError("sample_stride must be >= 1")
    budget_n = _resolve_budget(budget, query.source)
    if g1.n > budget_n:
        raise BudgetExceededError(
            f"{g1.n} vertices exceeds the {query.source.value}-source "
            f"budget of {budget_n} (set {BUDGET_ENV_VAR} or pass budget=...)"
        )
    fast = (
        query.source is MorphKind.HOMO
        and query.target is MorphKind.HOMO
        and query.connected_sources
        and not force_per_map
        and max_source_size is None
        and sample_stride == 1
    )
    if fast:
        if g1 is not g2:
            for comp in connected_components(g1):
                if not has_homomorphism(induced_subgraph(g1, comp), g2):
                    v = min(bits(comp))
                    wit = Witness(
                        1 << v,
                        {v: 0},
                        None,
                        "the vertex's whole component admits no homomorphism "
                        "into the target graph",
                    )
                    return OracleResult(False, wit, True, 0)
        return _one_point_search(g1, g2, state_limit)
    sources = _source_masks(g1, query.connected_sources, max_source_size)
    if orbit_reduction:
        sources = _orbit_representatives(g1, sources)
    if sample_stride > 1:
        sources = sources[::sample_stride]
    complete = (
        max_source_size is None or max_source_size >= g1.n
    ) and sample_stride == 1
    return _per_map_search(g1, g2, query, sources, complete)


def is_class_member(g: Graph, query: ClassQuery, **options) -> OracleResult:
    """Decide the extension property for one graph (maps g -> g)."""
    return extension_morphic(g, g, query, **options)


def extension_symmetric(
    g1: Graph, g2: Graph, query: ClassQuery, **options
) -> OracleResult:
    """Both directions of ``extension_morphic``; witness notes the direction."""
    fwd = extension_morphic(g1, g2, query, **options)
    if not fwd.holds:
        wit = Witness(
            fwd.witness.domain_mask,
            fwd.witness.mapping,
            fwd.witness.stuck_vertex,
            f"forward direction: {fwd.witness.note}",
        )
        return OracleResult(False, wit, True, fwd.checked_maps)
    bwd = extension_morphic(g2, g1, query, **options)
    if not bwd.holds:
        wit = Witness(
            bwd.witness.domain_mask,
            bwd.witness.mapping,
            bwd.witness.stuck_vertex,
            f"backward direction: {bwd.witness.note}",
        )
        return OracleResult(False, wit, True, fwd.checked_maps + bwd.checked_maps)
    return OracleResult(
        True,
        None,
        fwd.complete and bwd.complete,
        fwd.checked_maps + bwd.checked_maps,
    )


def member_via_components(g: Graph, query: ClassQuery, **options) -> bool:
    """Equivalent componentwise criterion: every component has the property
    and every pair of components has it symmetrically."""
    comps = [induced_subgraph(g, m) for m in connected_components(g)]
    for c in comps:
        if not is_class_member(c, query, **options).holds:
            return False
    for a, b in itertools.combinations(comps, 2):
        if not extension_symmetric(a, b, query, **options).holds:
            return False
    return True


def validate_witness(g1: Graph, g2: Graph, query: ClassQuery, wit: Witness) -> bool:
    """Re-check a witness from scratch: its map must be a genuine source-kind
    morphism on its domain, and the exhaustive completer must fail on it."""
    if wit.domain_mask == 0 or wit.domain_mask & ~g1.full_mask:
        return False
    if query.connected_sources and not connected_within(g1, wit.domain_mask):
        return False
    if set(wit.mapping) != set(bits(wit.domain_mask)):
        return False
    if not check_kind(g1, g2, wit.mapping, query.source):
        return False
    return complete_map(g1, g2, wit.mapping, query.target) is None
