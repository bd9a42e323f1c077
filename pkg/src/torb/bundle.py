"""Simplex-bundle polytopes: construction from fiber/base/twist data,
recognition of bundle structure, and twist extraction.

Layout for built bundles: the fiber simplex occupies the first k1
coordinates (its conormals embedded as-is, slant included), the base simplex
the remaining k2.  Base facets are lifted so that projecting onto the last
k2 coordinates multiplies each base conormal by the integer ratio
label / divisor; the final base facet additionally carries the twist tuple
in its first k1 coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .constructors import product
from .errors import (
    DegenerateInput,
    DivisibilityViolation,
    MalformedVector,
    NonPrimitiveSlant,
    NotASimplexBundle,
    UnboundedResult,
)
from .labeled import LabeledPolytope, _independent_indices, validate
from .lattice import (
    Matrix,
    content,
    det,
    frac_inverse,
    from_columns,
    make_matrix,
    mat_vec,
    smith_normal_form,
)
from .polytope import (
    Halfspace,
    HPolytope,
    facet_bijections,
    factor_as_simplex_product,
)


@dataclass(frozen=True)
class SimplexTwist:
    k1: int
    k2: int
    a: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(int(x) for x in self.a))
        if len(self.a) != self.k1:
            raise MalformedVector(
                f"twist needs {self.k1} entries, got {len(self.a)}"
            )


@dataclass(frozen=True)
class BundleData:
    fiber: LabeledPolytope
    base: LabeledPolytope
    iota: Matrix
    pi: Matrix
    base_facet_lifts: tuple[tuple[tuple[int, ...], int], ...]
    ratios: tuple[int, ...]
    facet_correspondence: tuple[int, ...]


def normalize_twist(twist: SimplexTwist) -> SimplexTwist:
    """Canonical representative of the twist under the simplex-product
    symmetries: entry permutations, re-choosing the distinguished fiber
    facet (which shifts all entries through an appended zero), and global
    negation.  The representative has all entries <= 0, minimal l1 norm,
    with lexicographic tie-break."""
    extended = list(twist.a) + [0]
    viable = []
    for e in set(extended):
        shifted = [x - e for x in extended]
        shifted.remove(0)
        for sign in (1, -1):
            cand = tuple(sorted(sign * x for x in shifted))
            if all(x <= 0 for x in cand):
                viable.append(cand)
    best = min(viable, key=lambda c: (sum(-x for x in c), c))
    return SimplexTwist(twist.k1, twist.k2, best)


def _as_twist(twist, k1: int, k2: int) -> SimplexTwist:
    if isinstance(twist, SimplexTwist):
        if twist.k1 != k1 or twist.k2 != k2:
            raise MalformedVector("twist dimensions do not match the simplices")
        return twist
    return SimplexTwist(k1, k2, tuple(twist))


def build_simplex_bundle(
    fiber: LabeledPolytope,
    base: LabeledPolytope,
    twist,
    label_divisors=None,
    offsets=None,
) -> LabeledPolytope:
    k1, k2 = fiber.dim, base.dim
    if fiber.num_facets != k1 + 1:
        raise NotASimplexBundle("fiber is not a simplex")
    if base.num_facets != k2 + 1:
        raise NotASimplexBundle("base is not a simplex")
    twist = _as_twist(twist, k1, k2)
    if label_divisors is None:
        label_divisors = base.labels
    label_divisors = tuple(int(b) for b in label_divisors)
    if len(label_divisors) != k2 + 1 or any(b < 1 for b in label_divisors):
        raise MalformedVector("need one positive divisor per base facet")
    for a, b in zip(base.labels, label_divisors):
        if a % b != 0:
            raise DivisibilityViolation(f"{b} does not divide the label {a}")
    conormals = []
    for eta in fiber.conormals:
        conormals.append(eta + (0,) * k2)
    for j, eta in enumerate(base.conormals):
        r = base.labels[j] // label_divisors[j]
        if j == k2:
            head = twist.a
        elif r == 1:
            head = (0,) * k1
        else:
            head = (1,) + (0,) * (k1 - 1)
        lifted = head + tuple(r * c for c in eta)
        if content(lifted) != 1:
            raise NonPrimitiveSlant(f"lifted conormal {lifted} is not primitive")
        conormals.append(lifted)
    labels = fiber.labels + label_divisors
    if offsets is None:
        offsets = fiber.offsets + base.offsets
    offsets = tuple(Fraction(x) for x in offsets)
    if len(offsets) != k1 + k2 + 2:
        raise MalformedVector("need one offset per facet")
    halfspaces = tuple(
        Halfspace(c, o) for c, o in zip(conormals, offsets)
    )
    lp = LabeledPolytope(HPolytope(k1 + k2, halfspaces), labels)
    problems = validate(lp)
    if any("unbounded" in p for p in problems):
        raise UnboundedResult("; ".join(problems))
    if problems:
        raise DegenerateInput("; ".join(problems))
    return lp


def _solve_integer_map(source_cols, target_cols, source_dim, target_dim):
    """Integer matrix T (target_dim x source_dim) with T s_i = t_i for all
    given column pairs, or None.  The source columns must span Q^source_dim."""
    base = _independent_indices(source_cols, source_dim)
    if base is None:
        return None
    m1 = from_columns([source_cols[i] for i in base])
    m2 = from_columns([target_cols[i] for i in base])
    inv = frac_inverse(m1)
    rows = []
    for r in range(target_dim):
        row = [
            sum(Fraction(m2[r][c]) * inv[c][s] for c in range(source_dim))
            for s in range(source_dim)
        ]
        if any(x.denominator != 1 for x in row):
            return None
        rows.append([int(x) for x in row])
    t = make_matrix(rows)
    for s, tgt in zip(source_cols, target_cols):
        if mat_vec(t, s) != tuple(tgt):
            return None
    return t


def _is_cosaturated(mat: Matrix, expected_rank: int) -> bool:
    """True when the integer matrix has the expected rank and all invariant
    factors 1 (its column lattice is a saturated direct summand)."""
    dec = smith_normal_form(mat)
    diag = dec.diagonal
    rank = sum(1 for x in diag if x != 0)
    return rank == expected_rank and all(
        x == 1 for x in diag if x != 0
    )


def recognize_bundle(
    total: LabeledPolytope, fiber: LabeledPolytope, base: LabeledPolytope
):
    """First bundle structure on total with the given fiber and base, or
    None: a facet bijection to the combinatorial product together with
    integer maps iota (fiber inclusion) and pi (base projection) satisfying
    the conormal, label and divisibility conditions."""
    n, nf, nb = total.dim, fiber.dim, base.dim
    if n != nf + nb:
        return None
    prod_geom = product(fiber, base).geometry
    n_fiber_facets = fiber.num_facets
    for sigma in facet_bijections(total.geometry, prod_geom):
        data = _try_bijection(total, fiber, base, sigma, n_fiber_facets)
        if data is not None:
            return data
    return None


def _try_bijection(total, fiber, base, sigma, n_fiber_facets):
    n, nf, nb = total.dim, fiber.dim, base.dim
    inverse = {p: t for t, p in enumerate(sigma)}
    fiber_lift = [
        total.conormals[inverse[f]] for f in range(n_fiber_facets)
    ]
    for f in range(n_fiber_facets):
        if total.labels[inverse[f]] != fiber.labels[f]:
            return None
    lifts = []
    ratios = []
    for b in range(base.num_facets):
        t = inverse[n_fiber_facets + b]
        label = base.labels[b]
        divisor = total.labels[t]
        if label % divisor != 0:
            return None
        lifts.append(total.conormals[t])
        ratios.append(label // divisor)
    iota = _solve_integer_map(list(fiber.conormals), fiber_lift, nf, n)
    if iota is None or not _is_cosaturated(iota, nf):
        return None
    iota_cols = [tuple(iota[i][j] for i in range(n)) for j in range(nf)]
    source = iota_cols + lifts
    targets = [(0,) * nb] * nf + [
        tuple(r * c for c in base.conormals[b]) for b, r in enumerate(ratios)
    ]
    pi = _solve_integer_map(source, targets, n, nb)
    if pi is None or not _is_cosaturated(pi, nb):
        return None
    return BundleData(
        fiber=fiber,
        base=base,
        iota=iota,
        pi=pi,
        base_facet_lifts=tuple(
            (lift, total.labels[inverse[n_fiber_facets + b]])
            for b, lift in enumerate(lifts)
        ),
        ratios=tuple(ratios),
        facet_correspondence=tuple(sigma),
    )


def extract_twist(total: LabeledPolytope):
    """Normalized twist tuple of a simplex-over-simplex bundle polytope.

    Returns None when the polytope is not combinatorially a product of two
    simplices; raises NotASimplexBundle when no orientation of the two facet
    families exhibits one family's conormals as spanning a coordinate
    subspace (the bundle orientation test)."""
    factored = factor_as_simplex_product(total.geometry)
    if factored is None:
        return None
    _, _, (fam1, fam2) = factored
    etas = total.conormals
    for fiber_family, base_family in ((fam1, fam2), (fam2, fam1)):
        k1 = len(fiber_family) - 1
        k2 = len(base_family) - 1
        for omit_f in fiber_family:
            for omit_b in base_family:
                fiber_part = [f for f in fiber_family if f != omit_f]
                base_part = [b for b in base_family if b != omit_b]
                basis = from_columns(
                    [etas[f] for f in fiber_part] + [etas[b] for b in base_part]
                )
                if abs(det(basis)) != 1:
                    continue
                inv = frac_inverse(basis)
                x = [
                    sum(Fraction(a) * b for a, b in zip(row, etas[omit_f]))
                    for row in inv
                ]
                y = [
                    sum(Fraction(a) * b for a, b in zip(row, etas[omit_b]))
                    for row in inv
                ]
                if any(v != 0 for v in x[k1:]):
                    continue
                twist = tuple(-int(v) for v in y[:k1])
                return normalize_twist(SimplexTwist(k1, k2, twist))
    raise NotASimplexBundle("no facet family spans a coordinate subspace")
