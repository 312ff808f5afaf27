"""Simplicial maps: validated total vertex assignments between complexes.

Besides construction and validation this module houses the named maps the
invariant formulas are built from: identities, constants, projections of
product complexes, axis inclusions into a square, and products of maps.
Validation only needs to look at facets; faces follow by downward closure.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .complexes import (ProductComplex, SimplicialComplex, categorical_product,
                        power, tuple_label)
from .errors import (DomainMismatch, InvalidArity, MissingVertex, NotSimplicial,
                     NotSubcomplex, UnknownVertex)


class SimplicialMap:
    """A simplicial map, stored as codomain vertex indices per domain vertex.

    Use :func:`make_map` (or the named constructors below) rather than the
    raw constructor; they validate.  Maps are immutable and hashable, and
    equality is structural on (domain, codomain, assignment).
    """

    __slots__ = ("domain", "codomain", "_images", "_hash")

    def __init__(self, domain: SimplicialComplex, codomain: SimplicialComplex,
                 images: tuple[int, ...]):
        self.domain = domain
        self.codomain = codomain
        self._images = images
        self._hash = hash((domain, codomain, images))

    @property
    def mapping(self) -> dict[str, str]:
        return {v: self.codomain.vertices[w]
                for v, w in zip(self.domain.vertices, self._images)}

    def __call__(self, v: str) -> str:
        return self.codomain.vertices[self._images[self.domain.vertex_index(v)]]

    def image_of(self, simplex) -> frozenset[str]:
        verts = self.codomain.vertices
        idx = self.domain.vertex_index
        return frozenset(verts[self._images[idx(v)]] for v in simplex)

    def __eq__(self, other) -> bool:
        return (isinstance(other, SimplicialMap)
                and self.domain == other.domain
                and self.codomain == other.codomain
                and self._images == other._images)

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        pairs = ", ".join(f"{v}->{w}" for v, w in self.mapping.items())
        if len(pairs) > 60:
            pairs = pairs[:57] + "..."
        return f"SimplicialMap({pairs})"


def _validate_images(domain: SimplicialComplex, codomain: SimplicialComplex,
                     images: tuple[int, ...]) -> None:
    for idxs, facet in zip(domain._facet_vidx, domain.facets):
        mask = -1
        for i in idxs:
            mask &= codomain._vertex_masks[images[i]]
            if not mask:
                raise NotSimplicial(facet, [codomain.vertices[images[i]] for i in idxs])


def make_map(domain: SimplicialComplex, codomain: SimplicialComplex,
             assignment: Mapping[str, str]) -> SimplicialMap:
    """Validate a total vertex assignment into a simplicial map."""
    extra = [v for v in assignment if not domain.has_vertex(v)]
    if extra:
        raise UnknownVertex(f"assignment mentions non-domain vertices {sorted(extra)}")
    missing = [v for v in domain.vertices if v not in assignment]
    if missing:
        raise MissingVertex(f"assignment misses domain vertices {missing}")
    images = []
    for v in domain.vertices:
        w = assignment[v]
        if not codomain.has_vertex(w):
            raise UnknownVertex(f"{v} is sent to {w!r}, not a codomain vertex")
        images.append(codomain.vertex_index(w))
    images = tuple(images)
    _validate_images(domain, codomain, images)
    return SimplicialMap(domain, codomain, images)


def identity(K: SimplicialComplex) -> SimplicialMap:
    return SimplicialMap(K, K, tuple(range(len(K.vertices))))


def constant(K: SimplicialComplex, K2: SimplicialComplex, w0: str) -> SimplicialMap:
    if not K2.has_vertex(w0):
        raise UnknownVertex(f"{w0!r} is not a vertex of the codomain")
    return SimplicialMap(K, K2, (K2.vertex_index(w0),) * len(K.vertices))


def compose(g: SimplicialMap, f: SimplicialMap) -> SimplicialMap:
    """g after f.  The codomain of f must equal the domain of g structurally."""
    if f.codomain != g.domain:
        raise DomainMismatch("compose: codomain of inner map != domain of outer map")
    return SimplicialMap(f.domain, g.codomain,
                         tuple(g._images[w] for w in f._images))


def restrict(f: SimplicialMap, K0: SimplicialComplex) -> SimplicialMap:
    """Same assignment on a subcomplex of the domain."""
    for facet in K0.facets:
        if not f.domain.has_simplex(facet):
            raise NotSubcomplex(f"{facet} is not a simplex of the map's domain")
    return SimplicialMap(K0, f.codomain,
                         tuple(f._images[f.domain.vertex_index(v)] for v in K0.vertices))


def projection(P: SimplicialComplex, i: int) -> SimplicialMap:
    """The i-th projection of a product complex (1-based)."""
    if not isinstance(P, ProductComplex):
        raise InvalidArity("projection needs a complex built by categorical_product/power")
    if not 1 <= i <= len(P.factors):
        raise InvalidArity(f"projection index {i} out of range 1..{len(P.factors)}")
    factor = P.factors[i - 1]
    return SimplicialMap(P, factor,
                         tuple(factor.vertex_index(P.components[v][i - 1])
                               for v in P.vertices))


def basepoint_inclusion(K: SimplicialComplex, v0: str, slot: int,
                        square: ProductComplex | None = None) -> SimplicialMap:
    """Axis inclusion into the square: v -> (v, v0) for slot 1, (v0, v) for slot 2."""
    if slot not in (1, 2):
        raise InvalidArity(f"slot must be 1 or 2, got {slot!r}")
    if not K.has_vertex(v0):
        raise UnknownVertex(f"{v0!r} is not a vertex of the complex")
    if square is None:
        square = power(K, 2)
    images = []
    for v in K.vertices:
        parts = (v, v0) if slot == 1 else (v0, v)
        images.append(square.vertex_index(tuple_label(parts)))
    return SimplicialMap(K, square, tuple(images))


def product_map(f: SimplicialMap, g: SimplicialMap,
                domain: ProductComplex | None = None,
                codomain: ProductComplex | None = None) -> SimplicialMap:
    """(f x g)(u, w) = (f(u), g(w)) between the categorical products."""
    if domain is None:
        domain = categorical_product(f.domain, g.domain)
    if codomain is None:
        codomain = categorical_product(f.codomain, g.codomain)
    images = []
    for v in domain.vertices:
        a, b = domain.components[v]
        images.append(codomain.vertex_index(tuple_label((f(a), g(b)))))
    return SimplicialMap(domain, codomain, tuple(images))


@dataclass(frozen=True)
class SurjectivityReport:
    vertex_surjective: bool
    simplex_surjective: bool


def surjectivity_report(f: SimplicialMap) -> SurjectivityReport:
    """Two flavors of 'onto': vertex-level, and every codomain facet being
    contained in the image of some domain simplex (facets suffice)."""
    vertex = len(set(f._images)) == len(f.codomain.vertices)
    facet_images = [frozenset(f._images[i] for i in idxs)
                    for idxs in f.domain._facet_vidx]
    simplex = True
    for idxs in f.codomain._facet_vidx:
        target = frozenset(idxs)
        if not any(target <= img for img in facet_images):
            simplex = False
            break
    return SurjectivityReport(vertex, simplex)


def is_vertex_bijective(f: SimplicialMap) -> bool:
    return (len(f.domain.vertices) == len(f.codomain.vertices)
            and len(set(f._images)) == len(f.domain.vertices))
