"""Labeled polytopes: simple rational polytopes with positive integer facet
labels, their isotropy groups, singularity profiles and equivalences.

The orbifold group attached to a face spanned by facets r is the quotient
Lambda_p / Lambda~_p, where Lambda_p is the saturated lattice spanned by the
facet conormals eta_r and Lambda~_p is the sublattice generated by the
weighted conormals m_r * eta_r.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    DegenerateInput,
    EmptyPolytope,
    NotAFace,
    UnboundedPolytope,
)
from .lattice import (
    FiniteAbelianGroup,
    Matrix,
    cokernel,
    det,
    frac_inverse,
    from_columns,
    integer_kernel_basis,
    make_matrix,
    mat_vec,
    smith_normal_form,
)
from .polytope import (
    Halfspace,
    HPolytope,
    enumerate_vertices,
    face_lattice,
    facet_bijections,
    is_simple,
    redundant_facets,
)


@dataclass(frozen=True)
class LabeledPolytope:
    geometry: HPolytope
    labels: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(int(m) for m in self.labels))

    @property
    def dim(self) -> int:
        return self.geometry.dim

    @property
    def num_facets(self) -> int:
        return self.geometry.num_facets

    @property
    def conormals(self) -> tuple[tuple[int, ...], ...]:
        return tuple(h.conormal for h in self.geometry.halfspaces)

    @property
    def offsets(self) -> tuple[Fraction, ...]:
        return tuple(h.offset for h in self.geometry.halfspaces)


def make_labeled(dim, facets) -> LabeledPolytope:
    """Build a LabeledPolytope from (conormal, offset, label) triples."""
    halfspaces = [Halfspace(tuple(c), Fraction(o)) for c, o, _ in facets]
    labels = tuple(int(m) for _, _, m in facets)
    return LabeledPolytope(HPolytope(dim, tuple(halfspaces)), labels)


@dataclass(frozen=True)
class DelzantData:
    beta: Matrix
    kernel_basis: tuple[tuple[int, ...], ...]
    fan_index_sets: tuple[frozenset[int], ...]


@dataclass(frozen=True)
class SingularityProfile:
    """Orbifold group order at the generic point of every face, keyed by the
    face's full facet-index set (the empty set is the interior)."""

    orders: tuple[tuple[frozenset[int], int], ...]
    has_locally_maximal_singular_vertex: bool

    def order_of(self, face) -> int:
        key = frozenset(face)
        for s, n in self.orders:
            if s == key:
                return n
        raise NotAFace(f"no face with facet set {sorted(key)}")


def validate(lp: LabeledPolytope) -> list[str]:
    """All invariant violations, as messages; empty list means valid."""
    problems = []
    if len(lp.labels) != lp.num_facets:
        problems.append("label count does not match facet count")
    for i, m in enumerate(lp.labels):
        if m < 1:
            problems.append(f"nonpositive label at facet {i}")
    for i, h in enumerate(lp.geometry.halfspaces):
        if not h.is_primitive:
            problems.append(f"non-primitive conormal at facet {i}")
    try:
        vd = enumerate_vertices(lp.geometry)
    except UnboundedPolytope:
        problems.append("unbounded polytope")
        return problems
    except EmptyPolytope:
        problems.append("empty polytope")
        return problems
    except DegenerateInput:
        problems.append("polytope is not full-dimensional")
        return problems
    for j in redundant_facets(lp.geometry, vd):
        problems.append(f"redundant halfspace at index {j}")
    if not is_simple(lp.geometry, vd):
        problems.append("polytope is not simple")
    return problems


def _saturation_coordinates(weighted: list[tuple[int, ...]], dim: int):
    """Coordinates of the given integer vectors in a basis of the saturation
    of their span, as columns of an integer matrix."""
    mat = from_columns(weighted)
    dec = smith_normal_form(mat)
    rank = sum(1 for x in dec.diagonal if x != 0)
    coords = []
    for v in weighted:
        sv = mat_vec(dec.s, v)
        if any(x != 0 for x in sv[rank:]):
            raise ValueError("vector outside the saturated span")
        coords.append(sv[:rank])
    return from_columns(coords), rank


def orbifold_group_of_face(lp: LabeledPolytope, face) -> FiniteAbelianGroup:
    """Lambda_p / Lambda~_p for the face cut out by the given facet indices."""
    face = sorted(set(face))
    if not face:
        return FiniteAbelianGroup()
    if any(i < 0 or i >= lp.num_facets for i in face):
        raise NotAFace(f"facet index out of range in {face}")
    vd = enumerate_vertices(lp.geometry)
    key = frozenset(face)
    if not any(key <= inc for inc in vd.incidence):
        raise NotAFace(f"facets {face} have empty intersection")
    weighted = [
        tuple(lp.labels[i] * c for c in lp.conormals[i]) for i in face
    ]
    coords, _ = _saturation_coordinates(weighted, lp.dim)
    return cokernel(coords)


def singularity_profile(lp: LabeledPolytope) -> SingularityProfile:
    faces = face_lattice(lp.geometry)
    orders = []
    order_by_set = {}
    for s in sorted(faces, key=lambda s: (len(s), sorted(s))):
        if not s:
            n = 1
        else:
            weighted = [
                tuple(lp.labels[i] * c for c in lp.conormals[i]) for i in s
            ]
            coords, _ = _saturation_coordinates(weighted, lp.dim)
            group = cokernel(coords)
            n = group.order
        orders.append((s, n))
        order_by_set[s] = n
    locally_maximal = False
    for s, (d, _) in faces.items():
        if d != 0:
            continue
        vertex_order = order_by_set[s]
        incident = [
            order_by_set[t]
            for t in faces
            if t < s
        ]
        if incident and all(vertex_order > n for n in incident):
            locally_maximal = True
            break
    return SingularityProfile(
        orders=tuple(orders),
        has_locally_maximal_singular_vertex=locally_maximal,
    )


def _independent_indices(vectors, dim):
    """Greedy choice of dim linearly independent vectors (by index)."""
    chosen = []
    for i, v in enumerate(vectors):
        trial = chosen + [i]
        mat = [[Fraction(x) for x in vectors[j]] for j in trial]
        if _rank(mat) == len(trial):
            chosen = trial
        if len(chosen) == dim:
            return chosen
    return None


def _rank(rows):
    rows = [list(r) for r in rows]
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


def equivalent(lp1: LabeledPolytope, lp2: LabeledPolytope, mode="translation"):
    """Label-preserving equivalence transform from lp1 to lp2, or None.

    translation mode returns a rational vector t with lp1 + t = lp2.
    unimodular mode returns (U, t): U is an integer matrix with det +-1
    acting on conormals, and points map by x -> (U^T)^-1 x + t.
    The first matching facet bijection in lexicographic order wins.
    """
    if mode not in ("translation", "unimodular"):
        raise ValueError(f"unknown mode {mode!r}")
    if lp1.dim != lp2.dim or lp1.num_facets != lp2.num_facets:
        return None
    n = lp1.dim
    etas1 = lp1.conormals
    etas2 = lp2.conormals
    base = _independent_indices(etas1, n)
    if base is None:
        return None
    for sigma in facet_bijections(lp1.geometry, lp2.geometry):
        if any(lp1.labels[i] != lp2.labels[sigma[i]] for i in range(lp1.num_facets)):
            continue
        if mode == "translation":
            if any(etas1[i] != etas2[sigma[i]] for i in range(lp1.num_facets)):
                continue
            u = None
        else:
            n1 = from_columns([etas1[i] for i in base])
            n2 = from_columns([etas2[sigma[i]] for i in base])
            try:
                u_frac = tuple(
                    tuple(x for x in row)
                    for row in _mat_mul_frac(n2, frac_inverse(n1))
                )
            except ValueError:
                continue
            if any(x.denominator != 1 for row in u_frac for x in row):
                continue
            u = make_matrix([[int(x) for x in row] for row in u_frac])
            if abs(det(u)) != 1:
                continue
            if any(
                mat_vec(u, etas1[i]) != etas2[sigma[i]]
                for i in range(lp1.num_facets)
            ):
                continue
        # solve the translation from the offsets
        target_etas = [etas2[sigma[i]] for i in base]
        rhs = [
            lp2.offsets[sigma[i]] - lp1.offsets[i] for i in base
        ]
        t = _solve_frac(target_etas, rhs)
        if t is None:
            continue
        ok = all(
            sum(Fraction(a) * b for a, b in zip(etas2[sigma[i]], t))
            == lp2.offsets[sigma[i]] - lp1.offsets[i]
            for i in range(lp1.num_facets)
        )
        if not ok:
            continue
        if mode == "translation":
            return t
        return u, t
    return None


def _mat_mul_frac(a, b):
    bt = list(zip(*b))
    return [
        [sum(Fraction(x) * Fraction(y) for x, y in zip(row, col)) for col in bt]
        for row in a
    ]


def _solve_frac(rows, rhs):
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


def translate(lp: LabeledPolytope, t) -> LabeledPolytope:
    """The labeled polytope lp + t."""
    t = tuple(Fraction(x) for x in t)
    halfspaces = tuple(
        Halfspace(h.conormal, h.offset + sum(a * b for a, b in zip(h.conormal, t)))
        for h in lp.geometry.halfspaces
    )
    return LabeledPolytope(HPolytope(lp.dim, halfspaces), lp.labels)


def unimodular_image(lp: LabeledPolytope, u: Matrix, t=None) -> LabeledPolytope:
    """Apply a GL(n, Z) matrix u to the conormals (points move by the
    contragredient), then translate by t."""
    n = lp.dim
    halfspaces = tuple(
        Halfspace(mat_vec(u, h.conormal), h.offset)
        for h in lp.geometry.halfspaces
    )
    out = LabeledPolytope(HPolytope(n, halfspaces), lp.labels)
    if t is not None:
        out = translate(out, t)
    return out


def delzant_data(lp: LabeledPolytope) -> DelzantData:
    beta = from_columns(
        [
            tuple(lp.labels[i] * c for c in lp.conormals[i])
            for i in range(lp.num_facets)
        ]
    )
    kernel = tuple(integer_kernel_basis(beta))
    vd = enumerate_vertices(lp.geometry)
    sets = set()
    for inc in vd.incidence:
        members = sorted(inc)
        for k in range(len(members) + 1):
            for sub in itertools.combinations(members, k):
                sets.add(frozenset(sub))
    fan = tuple(sorted(sets, key=lambda s: (len(s), sorted(s))))
    return DelzantData(beta=beta, kernel_basis=kernel, fan_index_sets=fan)
