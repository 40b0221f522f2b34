"""Edge-complement complexes and exact reduced simplicial homology over GF(p).

For a graph H with edges e_1..e_s on vertex set V, the associated complex has
one facet V \\ e_i per edge.  Summing the reduced homology of these complexes
over all induced subgraphs with at least one edge yields the graded Betti
table of the edge ideal, whose top homological index is the projective
dimension.

Homology is computed from boundary-matrix ranks over the chosen prime field
(Gaussian elimination; bitset arithmetic for GF(2), dense integer arithmetic
otherwise).  Reduced conventions: the complex {emptyset} has one dimension of
homology in degree -1; the void complex has none anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import ResourceLimitError
from .graphs import Graph
from .polyalg import PrimeField

MAX_HOMOLOGY_VERTICES = 22
MAX_BETTI_VERTICES = 20


class DomainError(ValueError):
    """The requested object is undefined for this input (e.g. edgeless graph)."""


def _modulus(fld) -> int:
    if isinstance(fld, PrimeField):
        return fld.p
    return PrimeField(int(fld)).p


# -- simplicial complexes ------------------------------------------------------

@dataclass(frozen=True)
class SimplicialComplex:
    """Facet-list simplicial complex.

    Facets are stored inclusion-maximal and deduplicated.  The complex with a
    single empty facet (written {emptyset}) is representable and distinct from
    the void complex, which has no facets at all.
    """

    vertices: tuple[str, ...]
    facets: tuple[frozenset, ...]

    def __post_init__(self):
        known = set(self.vertices)
        for f in self.facets:
            if not f <= known:
                raise ValueError(f"facet {sorted(f)} uses undeclared vertices")
        maximal = []
        for f in self.facets:
            if any(f < g for g in self.facets):
                continue
            if f not in maximal:
                maximal.append(f)
        order = {v: i for i, v in enumerate(self.vertices)}
        maximal.sort(key=lambda f: (len(f), sorted(order[v] for v in f)))
        object.__setattr__(self, "facets", tuple(maximal))

    @property
    def is_void(self) -> bool:
        return not self.facets

    def facet_masks(self) -> tuple[list[int], int]:
        """Facets as bitmasks over the vertex order; returns (masks, nbits)."""
        order = {v: i for i, v in enumerate(self.vertices)}
        masks = []
        for f in self.facets:
            m = 0
            for v in f:
                m |= 1 << order[v]
            masks.append(m)
        return masks, len(self.vertices)


def epsilon_complex(h: Graph) -> SimplicialComplex:
    """Complex on V(h) whose facets are the complements of the edges of h."""
    if h.nedges == 0:
        raise DomainError("edge-complement complex of an edgeless graph is undefined")
    verts = set(h.labels)
    facets = tuple(frozenset(verts - {u, v}) for u, v in h.edges)
    return SimplicialComplex(h.labels, facets)


# -- rank computations ---------------------------------------------------------

def _rank_gf2(columns: list[int]) -> int:
    """Rank over GF(2) of a matrix given as column bitmasks."""
    pivots: dict[int, int] = {}
    rank = 0
    for col in columns:
        while col:
            b = col.bit_length() - 1
            if b in pivots:
                col ^= pivots[b]
            else:
                pivots[b] = col
                rank += 1
                break
    return rank


def _rank_dense_mod_p(a: np.ndarray, p: int) -> int:
    """Rank over GF(p) by in-place fraction-free row elimination."""
    a = np.mod(a, p)
    rows, cols = a.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i], c:] = a[[i, r], c:]
        piv = int(a[r, c])
        if piv != 1:
            a[r, c:] = a[r, c:] * pow(piv, p - 2, p) % p
        below = a[r + 1:, c]
        hit = np.nonzero(below)[0]
        if hit.size:
            idx = r + 1 + hit
            a[idx, c:] = (a[idx, c:] - np.outer(below[hit], a[r, c:])) % p
        r += 1
    return r


def _boundary_rank(upper: list[int], lower_index: dict[int, int], p: int) -> int:
    """Rank of the boundary map from faces `upper` to the layer one lower."""
    if not upper or not lower_index:
        return 0
    if p == 2:
        cols = []
        for face in upper:
            col = 0
            m = face
            while m:
                v = m & -m
                col |= 1 << lower_index[face ^ v]
                m ^= v
            cols.append(col)
        return _rank_gf2(cols)
    mat = np.zeros((len(lower_index), len(upper)), dtype=np.int64)
    for j, face in enumerate(upper):
        sign = 1
        m = face
        while m:
            v = m & -m
            mat[lower_index[face ^ v], j] = sign
            sign = -sign
            m ^= v
    return _rank_dense_mod_p(mat, p)


def _profile_from_facet_masks(facets: list[int], p: int) -> dict[int, int]:
    """Reduced homology dimensions of the complex with the given facet masks."""
    facets = sorted(set(facets))
    if not facets:
        return {}
    if facets == [0]:
        return {-1: 1}
    common = facets[0]
    for f in facets[1:]:
        common &= f
    if common:
        return {}  # cone with apex any common vertex: contractible

    faces: set[int] = set()
    for fm in facets:
        sub = fm
        while True:
            faces.add(sub)
            if sub == 0:
                break
            sub = (sub - 1) & fm

    layers: dict[int, list[int]] = {}
    for f in faces:
        layers.setdefault(f.bit_count(), []).append(f)
    for layer in layers.values():
        layer.sort()
    top = max(layers)

    index = {s: {f: i for i, f in enumerate(layer)} for s, layer in layers.items()}
    ranks = {s: _boundary_rank(layers[s], index.get(s - 1, {}), p)
             for s in range(1, top + 1)}
    ranks[0] = 0
    ranks[top + 1] = 0

    profile = {}
    for s in range(0, top + 1):
        h = len(layers.get(s, ())) - ranks[s] - ranks[s + 1]
        if h:
            profile[s - 1] = h
    return profile


def reduced_homology_dims(c: SimplicialComplex, fld) -> dict[int, int]:
    """Map degree i >= -1 to dim of the i-th reduced homology over GF(p).

    Only degrees with nonzero homology appear in the result.
    """
    p = _modulus(fld)
    if len(c.vertices) > MAX_HOMOLOGY_VERTICES:
        raise ResourceLimitError(
            f"homology limited to {MAX_HOMOLOGY_VERTICES} vertices, got {len(c.vertices)}",
            stage="homology")
    masks, _ = c.facet_masks()
    return _profile_from_facet_masks(masks, p)


# -- Betti tables ---------------------------------------------------------------

@dataclass
class BettiTable:
    """Graded Betti numbers: (homological index, degree) -> dimension > 0."""

    entries: dict[tuple[int, int], int] = field(default_factory=dict)

    def get(self, i: int, d: int) -> int:
        return self.entries.get((i, d), 0)

    @property
    def max_index(self) -> int:
        if not self.entries:
            raise DomainError("empty Betti table has no top index")
        return max(i for i, _ in self.entries)

    def csv_rows(self) -> list[str]:
        rows = ["i,d,dim"]
        for (i, d) in sorted(self.entries):
            rows.append(f"{i},{d},{self.entries[(i, d)]}")
        return rows

    def json_entries(self) -> list[dict]:
        return [{"i": i, "d": d, "dim": self.entries[(i, d)]}
                for (i, d) in sorted(self.entries)]


_PROFILE_CACHE: dict[tuple, dict[int, int]] = {}


def _two_bits(mask: int) -> tuple[int, int]:
    u = (mask & -mask).bit_length() - 1
    v = (mask ^ (1 << u)).bit_length() - 1
    return u, v


def _shape_key(vertices: list[int], edges: list[int]):
    """Canonical key when the induced subgraph is a union of paths and cycles.

    Returns None if some vertex has degree three or more; isomorphic unions of
    paths/cycles share the key, so their homology profiles can be reused.
    """
    adj: dict[int, list[int]] = {v: [] for v in vertices}
    for em in edges:
        u, v = _two_bits(em)
        adj[u].append(v)
        adj[v].append(u)
        if len(adj[u]) > 2 or len(adj[v]) > 2:
            return None
    paths, cycles = [], []
    seen = set()
    for start in vertices:
        if start in seen:
            continue
        comp = [start]
        seen.add(start)
        frontier = [start]
        while frontier:
            x = frontier.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    comp.append(y)
                    frontier.append(y)
        if all(len(adj[x]) == 2 for x in comp):
            cycles.append(len(comp))
        else:
            paths.append(len(comp))
    return (tuple(sorted(paths)), tuple(sorted(cycles)))


def _subset_profile(mask: int, induced_edges: list[int], p: int) -> dict[int, int]:
    vertices = [i for i in range(mask.bit_length()) if mask >> i & 1]
    key = _shape_key(vertices, induced_edges)
    if key is not None:
        cached = _PROFILE_CACHE.get((key, p))
        if cached is not None:
            return cached
    facets = [mask & ~em for em in induced_edges]
    profile = _profile_from_facet_masks(facets, p)
    if key is not None:
        _PROFILE_CACHE[(key, p)] = profile
    return profile


def betti_table(g: Graph, fld) -> BettiTable:
    """Exact graded Betti table of the edge ideal of g over GF(p).

    Every vertex subset whose induced subgraph has an edge contributes the
    reduced homology of its edge-complement complex, shifted by two, in the
    degree given by the subset size.  Subsets leaving a vertex isolated are
    skipped: their complexes are cones, hence contribute nothing.
    """
    p = _modulus(fld)
    n = g.nvertices
    if n > MAX_BETTI_VERTICES:
        raise ResourceLimitError(
            f"Betti table limited to {MAX_BETTI_VERTICES} vertices, got {n}",
            stage="betti_table")
    edge_masks = [(1 << g.index(u)) | (1 << g.index(v)) for u, v in g.edges]

    entries: dict[tuple[int, int], int] = {}
    for mask in range(1, 1 << n):
        induced = [em for em in edge_masks if em & mask == em]
        if not induced:
            continue
        covered = 0
        for em in induced:
            covered |= em
        if covered != mask:
            continue
        profile = _subset_profile(mask, induced, p)
        d = mask.bit_count()
        for j, dim in profile.items():
            key = (j + 2, d)
            entries[key] = entries.get(key, 0) + dim

    table = BettiTable(entries)
    if g.nedges and table.get(1, 2) != g.nedges:
        raise AssertionError(
            f"Betti sanity check failed: entry (1,2)={table.get(1, 2)} != |E|={g.nedges}")
    return table


def projective_dimension(g: Graph, fld) -> int:
    """Top homological index of the Betti table of the edge ideal of g."""
    if g.nedges == 0:
        raise DomainError("projective dimension of an edgeless graph is undefined")
    return betti_table(g, fld).max_index
