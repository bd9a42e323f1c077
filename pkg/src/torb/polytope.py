"""Exact rational convex geometry for H-representation polytopes.

Vertex enumeration solves every n-subset of facet equalities exactly over
the rationals and filters for feasibility; desk-scale polytopes (a dozen or
so facets) make this both simple and fast.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .errors import DegenerateInput, EmptyPolytope, UnboundedPolytope
from .lattice import content, frac_det

Vector = tuple[Fraction, ...]


@dataclass(frozen=True)
class Halfspace:
    """Constraint <x, conormal> <= offset with a primitive outward conormal."""

    conormal: tuple[int, ...]
    offset: Fraction

    def __post_init__(self):
        object.__setattr__(self, "conormal", tuple(int(c) for c in self.conormal))
        object.__setattr__(self, "offset", Fraction(self.offset))

    @property
    def is_primitive(self) -> bool:
        return content(self.conormal) == 1


@dataclass(frozen=True)
class HPolytope:
    dim: int
    halfspaces: tuple[Halfspace, ...]

    def __post_init__(self):
        object.__setattr__(self, "halfspaces", tuple(self.halfspaces))
        for h in self.halfspaces:
            if len(h.conormal) != self.dim:
                raise ValueError("conormal dimension mismatch")

    @property
    def num_facets(self) -> int:
        return len(self.halfspaces)


@dataclass(frozen=True)
class VertexData:
    vertices: tuple[Vector, ...]
    incidence: tuple[frozenset[int], ...]


def _solve_square(rows: list[tuple[int, ...]], rhs: list[Fraction]):
    """Solve the square rational system, or None when singular."""
    n = len(rows)
    m = [[Fraction(x) for x in row] + [Fraction(rhs[i])] for i, row in enumerate(rows)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            return None
        m[col], m[piv] = m[piv], m[col]
        scale = m[col][col]
        m[col] = [x / scale for x in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return tuple(m[i][n] for i in range(n))


def _rational_rank(vectors) -> int:
    rows = [[Fraction(x) for x in v] for v in vectors]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    col = 0
    while rank < len(rows) and col < ncols:
        piv = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if piv is None:
            col += 1
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        scale = rows[rank][col]
        rows[rank] = [x / scale for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col] != 0:
                f = rows[r][col]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[rank])]
        rank += 1
        col += 1
    return rank


def _affine_rank(points) -> int:
    """Dimension of the affine hull."""
    pts = list(points)
    if not pts:
        return -1
    p0 = pts[0]
    return _rational_rank([tuple(a - b for a, b in zip(p, p0)) for p in pts[1:]])


def _check_bounded(p: HPolytope):
    n = p.dim
    conormals = [h.conormal for h in p.halfspaces]
    if _rational_rank(conormals) < n:
        raise UnboundedPolytope("conormals do not span the ambient space")
    if n == 1:
        for d in ((1,), (-1,)):
            if all(sum(a * b for a, b in zip(d, c)) <= 0 for c in conormals):
                raise UnboundedPolytope("recession direction found")
        return
    # an extreme recession ray lies in the kernel of n-1 conormals
    for subset in itertools.combinations(range(len(conormals)), n - 1):
        rows = [conormals[i] for i in subset]
        if _rational_rank(rows) != n - 1:
            continue
        d = _kernel_direction(rows, n)
        for ray in (d, tuple(-x for x in d)):
            if all(sum(a * b for a, b in zip(ray, c)) <= 0 for c in conormals):
                raise UnboundedPolytope("recession direction found")


def _kernel_direction(rows, n):
    """A nonzero rational vector killed by n-1 independent rows."""
    m = [[Fraction(x) for x in row] for row in rows]
    pivots = []
    rank = 0
    for col in range(n):
        piv = next((r for r in range(rank, len(m)) if m[r][col] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        scale = m[rank][col]
        m[rank] = [x / scale for x in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[rank])]
        pivots.append(col)
        rank += 1
    free = next(c for c in range(n) if c not in pivots)
    d = [Fraction(0)] * n
    d[free] = Fraction(1)
    for r, col in enumerate(pivots):
        d[col] = -m[r][free]
    return tuple(d)


def enumerate_vertices(p: HPolytope) -> VertexData:
    """All vertices of a bounded full-dimensional H-polytope, sorted
    lexicographically, with their active facet index sets."""
    n = p.dim
    hs = p.halfspaces
    if len(hs) < n + 1:
        raise UnboundedPolytope("fewer than dim+1 halfspaces")
    _check_bounded(p)
    seen = {}
    for subset in itertools.combinations(range(len(hs)), n):
        rows = [hs[i].conormal for i in subset]
        rhs = [hs[i].offset for i in subset]
        x = _solve_square(rows, rhs)
        if x is None:
            continue
        feasible = True
        active = []
        for j, h in enumerate(hs):
            val = sum(a * b for a, b in zip(x, h.conormal))
            if val > h.offset:
                feasible = False
                break
            if val == h.offset:
                active.append(j)
        if feasible:
            seen[x] = frozenset(active)
    if not seen:
        raise EmptyPolytope("no feasible vertex")
    verts = sorted(seen)
    if _affine_rank(verts) < n:
        raise DegenerateInput("polytope is not full-dimensional")
    return VertexData(
        vertices=tuple(verts), incidence=tuple(seen[v] for v in verts)
    )


def is_simple(p: HPolytope, vd: VertexData | None = None) -> bool:
    vd = vd or enumerate_vertices(p)
    return all(len(inc) == p.dim for inc in vd.incidence)


def redundant_facets(p: HPolytope, vd: VertexData | None = None) -> list[int]:
    """Indices of halfspaces that do not meet the polytope in a facet."""
    vd = vd or enumerate_vertices(p)
    bad = []
    for j in range(p.num_facets):
        pts = [v for v, inc in zip(vd.vertices, vd.incidence) if j in inc]
        if _affine_rank(pts) != p.dim - 1:
            bad.append(j)
    return bad


def face_lattice(p: HPolytope, vd: VertexData | None = None):
    """All nonempty faces keyed by their full facet-index set.

    Returns a dict {frozenset facet indices -> (dim, tuple of vertex
    indices)}; the whole polytope appears as the empty facet set.
    """
    vd = vd or enumerate_vertices(p)
    verts = vd.vertices
    incs = vd.incidence
    sets = set(incs)
    frontier = set(incs)
    while frontier:
        new = set()
        for a in frontier:
            for b in incs:
                c = a & b
                if c not in sets:
                    new.add(c)
        sets |= new
        frontier = new
    sets.add(frozenset())
    faces = {}
    for s in sets:
        vidx = tuple(i for i, inc in enumerate(incs) if s <= inc)
        if not vidx:
            continue
        canonical = frozenset.intersection(*(incs[i] for i in vidx))
        if canonical != s:
            continue
        faces[s] = (_affine_rank([verts[i] for i in vidx]), vidx)
    return faces


def f_vector(p: HPolytope) -> tuple[int, ...]:
    """(f_0, ..., f_n) with the f_n = 1 convention."""
    faces = face_lattice(p)
    counts = [0] * (p.dim + 1)
    for s, (d, _) in faces.items():
        if s:
            counts[d] += 1
    counts[p.dim] = 1
    return tuple(counts)


def _incidence_profile(p: HPolytope):
    vd = enumerate_vertices(p)
    return vd, set(vd.incidence)


def facet_bijections(p: HPolytope, q: HPolytope):
    """Yield facet bijections (tuples sigma with sigma[i] the q-facet matched
    to p-facet i) inducing an isomorphism of vertex-incidence structures,
    in lexicographic order."""
    if p.dim != q.dim or p.num_facets != q.num_facets:
        return
    vd_p, sets_p = _incidence_profile(p)
    vd_q, sets_q = _incidence_profile(q)
    if len(vd_p.vertices) != len(vd_q.vertices):
        return
    nf = p.num_facets
    # facet -> number of vertices on it, a cheap matching invariant
    deg_p = [sum(1 for s in vd_p.incidence if i in s) for i in range(nf)]
    deg_q = [sum(1 for s in vd_q.incidence if i in s) for i in range(nf)]

    sigma = [-1] * nf
    used = [False] * nf

    def extend(i):
        if i == nf:
            if {frozenset(sigma[j] for j in s) for s in sets_p} == sets_q:
                yield tuple(sigma)
            return
        for j in range(nf):
            if used[j] or deg_p[i] != deg_q[j]:
                continue
            sigma[i] = j
            used[j] = True
            yield from extend(i + 1)
            used[j] = False
        sigma[i] = -1

    yield from extend(0)


def combinatorially_equivalent(p: HPolytope, q: HPolytope):
    """First facet bijection inducing an incidence-lattice isomorphism, or
    None."""
    return next(facet_bijections(p, q), None)


def factor_as_simplex_product(p: HPolytope):
    """Partition the facets as those of a product of two simplices.

    Returns (k1, k2, (family1, family2)) where family1 contains facet 0,
    len(family1) = k1 + 1 and len(family2) = k2 + 1, or None when the
    polytope is not combinatorially such a product.
    """
    vd = enumerate_vertices(p)
    n = p.dim
    nf = p.num_facets
    if nf != n + 2 or not is_simple(p, vd):
        return None
    incs = set(vd.incidence)
    all_facets = frozenset(range(nf))
    for size1 in range(2, nf - 1):
        for fam1 in itertools.combinations(range(nf), size1):
            if 0 not in fam1:
                continue
            f1 = frozenset(fam1)
            f2 = all_facets - f1
            expected = {
                (f1 - {i}) | (f2 - {j}) for i in f1 for j in f2
            }
            if expected == incs:
                k1 = len(f1) - 1
                k2 = len(f2) - 1
                return k1, k2, (tuple(sorted(f1)), tuple(sorted(f2)))
    return None


def _triangulate(faces, verts, face_set, n):
    """Lexicographic pulling triangulation of one face; returns vertex-index
    simplices."""
    dim, vidx = faces[face_set]
    if dim <= 0:
        return [vidx]
    if len(vidx) == dim + 1:
        return [vidx]
    v0 = min(vidx, key=lambda i: verts[i])
    simplices = []
    for other, (d, ovidx) in faces.items():
        if d != dim - 1 or not (face_set < other):
            continue
        if v0 in ovidx:
            continue
        for s in _triangulate(faces, verts, other, n):
            simplices.append(s + (v0,))
    return simplices


def volume(p: HPolytope) -> Fraction:
    """Exact Euclidean volume."""
    vd = enumerate_vertices(p)
    faces = face_lattice(p, vd)
    n = p.dim
    total = Fraction(0)
    nfact = 1
    for k in range(2, n + 1):
        nfact *= k
    for simplex in _triangulate(faces, vd.vertices, frozenset(), n):
        base = vd.vertices[simplex[-1]]
        mat = [
            tuple(a - b for a, b in zip(vd.vertices[i], base))
            for i in simplex[:-1]
        ]
        total += abs(frac_det(mat))
    return total / nfact
