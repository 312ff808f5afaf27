"""Finite simplicial complexes stored by their maximal simplices (facets).

A complex keeps only the antichain of facets; downward closure is implicit,
so "is this a simplex" is a subset query.  That keeps memory linear in the
facet count and makes categorical products cheap: their facets are exactly
the grids built from one facet per factor.

All values are immutable after construction and safe to share between
threads; every operation here is a pure function of its inputs.  Vertex
labels are opaque printable strings (no whitespace, no '#') and every
ordering used for tie-breaking is lexicographic on labels, which keeps
certificates and command output reproducible.
"""

from __future__ import annotations

from itertools import product as _iterproduct
from typing import Iterable, Optional

from .errors import EmptyInput, InvalidArity, NotASimplex


def _check_label(token) -> str:
    if not isinstance(token, str) or not token:
        raise EmptyInput(f"vertex label must be a nonempty string, got {token!r}")
    if "#" in token or any(ch.isspace() for ch in token) or not token.isprintable():
        raise EmptyInput(f"invalid vertex label {token!r}: printable, no whitespace, no '#'")
    return token


class SimplicialComplex:
    """A nonempty finite simplicial complex in canonical form.

    ``vertices`` is the sorted vertex tuple, ``facets`` the sorted tuple of
    facets (each a sorted vertex tuple).  The constructor canonicalizes:
    duplicates inside an entry are merged, entries contained in other entries
    are dropped, and the facet list is deduplicated and sorted.
    """

    __slots__ = ("vertices", "facets", "facet_sets", "_vindex", "_facet_vidx",
                 "_facet_masks", "_vertex_masks", "_facet_pos", "_hash")

    def __init__(self, facet_list: Iterable[Iterable[str]]):
        entries = [tuple(entry) for entry in facet_list]
        if not entries:
            raise EmptyInput("a complex needs at least one facet")
        cleaned = set()
        for entry in entries:
            if not entry:
                raise EmptyInput("facets must be nonempty")
            cleaned.add(frozenset(_check_label(v) for v in entry))
        maximal = [s for s in cleaned if not any(s < t for t in cleaned)]
        facets = tuple(sorted(tuple(sorted(s)) for s in maximal))

        self.facets: tuple[tuple[str, ...], ...] = facets
        self.facet_sets: tuple[frozenset[str], ...] = tuple(frozenset(f) for f in facets)
        self.vertices: tuple[str, ...] = tuple(sorted(set().union(*self.facet_sets)))
        self._vindex = {v: i for i, v in enumerate(self.vertices)}
        self._facet_vidx = tuple(tuple(self._vindex[v] for v in f) for f in facets)
        masks = []
        vmasks = [0] * len(self.vertices)
        for j, idxs in enumerate(self._facet_vidx):
            m = 0
            for i in idxs:
                m |= 1 << i
                vmasks[i] |= 1 << j
            masks.append(m)
        self._facet_masks = tuple(masks)
        self._vertex_masks = tuple(vmasks)
        self._facet_pos = {f: j for j, f in enumerate(facets)}
        self._hash = hash((self.vertices, self.facets))

    # -- queries ---------------------------------------------------------

    def has_vertex(self, v: str) -> bool:
        return v in self._vindex

    def vertex_index(self, v: str) -> int:
        return self._vindex[v]

    def containing_facets_mask(self, simplex: Iterable[str]) -> int:
        """Bitmask of facets containing the given vertex set (0 if none)."""
        mask = -1
        seen = False
        for v in simplex:
            i = self._vindex.get(v)
            if i is None:
                return 0
            mask &= self._vertex_masks[i]
            if not mask:
                return 0
            seen = True
        return mask if seen else 0

    def has_simplex(self, simplex: Iterable[str]) -> bool:
        """True iff the vertex set is nonempty and lies inside some facet."""
        return self.containing_facets_mask(simplex) != 0

    def facet_index(self, facet: Iterable[str]) -> int:
        return self._facet_pos[tuple(sorted(facet))]

    # -- dunder ----------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (isinstance(other, SimplicialComplex)
                and self.vertices == other.vertices
                and self.facets == other.facets)

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return (f"{type(self).__name__}({len(self.vertices)} vertices, "
                f"{len(self.facets)} facets)")


class ProductComplex(SimplicialComplex):
    """A categorical product (or power), remembering its factors.

    ``components`` maps each product vertex label back to its tuple of
    factor labels, which is what the projection maps are built from.
    Structural equality is inherited: a product equals any plain complex
    with the same vertices and facets.
    """

    __slots__ = ("factors", "components")

    def __init__(self, facet_list, factors, components):
        super().__init__(facet_list)
        self.factors: tuple[SimplicialComplex, ...] = tuple(factors)
        self.components: dict[str, tuple[str, ...]] = dict(components)


def build_complex(facet_list: Iterable[Iterable[str]]) -> SimplicialComplex:
    """Build a complex from a list of vertex collections (one per facet)."""
    return SimplicialComplex(facet_list)


def tuple_label(parts: Iterable[str]) -> str:
    """Canonical label of a product vertex, e.g. ``(a,b)``."""
    return "(" + ",".join(parts) + ")"


def _product_of(factors: tuple[SimplicialComplex, ...]) -> ProductComplex:
    components = {}
    facet_list = []
    for combo in _iterproduct(*(K.facets for K in factors)):
        grid = []
        for parts in _iterproduct(*combo):
            label = tuple_label(parts)
            components[label] = parts
            grid.append(label)
        facet_list.append(grid)
    return ProductComplex(facet_list, factors, components)


def categorical_product(K1: SimplicialComplex, K2: SimplicialComplex) -> ProductComplex:
    """The categorical product: simplices are the vertex-pair sets whose two
    projections are simplices; facets are the grids of facet pairs."""
    return _product_of((K1, K2))


def power(K: SimplicialComplex, n: int) -> SimplicialComplex:
    """n-fold categorical power with flat n-tuple vertex labels; power(K, 1) is K."""
    if not isinstance(n, int) or n < 1:
        raise InvalidArity(f"power exponent must be a positive integer, got {n!r}")
    if n == 1:
        return K
    return _product_of((K,) * n)


def generated_subcomplex(K: SimplicialComplex, simplices: Iterable[Iterable[str]]) -> SimplicialComplex:
    """Smallest subcomplex of K containing the given simplices of K."""
    collected = []
    for s in simplices:
        s = tuple(s)
        if not K.has_simplex(s):
            raise NotASimplex(f"{tuple(sorted(s))} is not a simplex of {K!r}")
        collected.append(s)
    if not collected:
        raise EmptyInput("generated_subcomplex needs at least one simplex")
    return SimplicialComplex(collected)


def vertex_induced_subcomplex(K: SimplicialComplex, keep: Iterable[str]) -> SimplicialComplex:
    """Full subcomplex on a vertex subset: all simplices of K inside it."""
    keep_set = frozenset(keep)
    traces = [tuple(v for v in f if v in keep_set) for f in K.facets]
    traces = [t for t in traces if t]
    if not traces:
        raise EmptyInput("vertex-induced subcomplex would be empty")
    return SimplicialComplex(traces)


def connected_components(K: SimplicialComplex) -> list[tuple[str, ...]]:
    """Edge-path components as sorted vertex tuples, sorted by first vertex.

    Two vertices are connected when some facet contains both (a facet is a
    clique in the edge graph), so union-find over facets suffices.
    """
    parent = list(range(len(K.vertices)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for idxs in K._facet_vidx:
        root = find(idxs[0])
        for i in idxs[1:]:
            parent[find(i)] = root
    groups: dict[int, list[str]] = {}
    for i, v in enumerate(K.vertices):
        groups.setdefault(find(i), []).append(v)
    return sorted((tuple(sorted(g)) for g in groups.values()), key=lambda g: g[0])


def is_edge_path_connected(K: SimplicialComplex) -> bool:
    return len(connected_components(K)) == 1


def are_isomorphic(K1: SimplicialComplex, K2: SimplicialComplex) -> Optional[dict[str, str]]:
    """A vertex bijection carrying facets onto facets both ways, or None.

    Deterministic: vertices of K1 are matched in label order and candidates
    tried in label order, so the first bijection in backtracking order is
    returned.  Vertices are pre-filtered by the multiset of sizes of the
    facets containing them.
    """
    if len(K1.vertices) != len(K2.vertices) or len(K1.facets) != len(K2.facets):
        return None
    sizes1 = sorted(len(f) for f in K1.facets)
    sizes2 = sorted(len(f) for f in K2.facets)
    if sizes1 != sizes2:
        return None

    def signature(K, vi):
        mask = K._vertex_masks[vi]
        sig = []
        j = 0
        while mask:
            if mask & 1:
                sig.append(len(K.facets[j]))
            mask >>= 1
            j += 1
        return tuple(sorted(sig))

    sig1 = [signature(K1, i) for i in range(len(K1.vertices))]
    sig2 = [signature(K2, i) for i in range(len(K2.vertices))]
    if sorted(sig1) != sorted(sig2):
        return None

    n = len(K1.vertices)
    assigned: list[int | None] = [None] * n
    used = [False] * n
    facet_sets2 = set(K2.facets)

    def feasible(vi: int, wi: int) -> bool:
        # every partially-assigned facet through vi must still fit in some facet of K2
        fmask = K1._vertex_masks[vi]
        j = 0
        while fmask:
            if fmask & 1:
                image = [K2.vertices[wi]]
                for u in K1._facet_vidx[j]:
                    if u != vi and assigned[u] is not None:
                        image.append(K2.vertices[assigned[u]])
                if not K2.has_simplex(image):
                    return False
            fmask >>= 1
            j += 1
        return True

    def backtrack(vi: int) -> bool:
        if vi == n:
            images = {tuple(sorted(K2.vertices[assigned[u]] for u in idxs))
                      for idxs in K1._facet_vidx}
            return images == facet_sets2
        for wi in range(n):
            if used[wi] or sig2[wi] != sig1[vi]:
                continue
            if not feasible(vi, wi):
                continue
            assigned[vi] = wi
            used[wi] = True
            if backtrack(vi + 1):
                return True
            assigned[vi] = None
            used[wi] = False
        return False

    if backtrack(0):
        return {K1.vertices[i]: K2.vertices[assigned[i]] for i in range(n)}
    return None
