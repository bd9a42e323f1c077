"""f/h-vector transforms, Betti numbers, Stanley-Reisner presentations, the
two-generator cohomology ring of a simplex bundle, and the product-ring
decision procedure."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb

from .errors import MalformedVector, NotSmooth, PreconditionViolated
from .labeled import LabeledPolytope
from .lattice import det, from_columns
from .polytope import enumerate_vertices, f_vector


@dataclass(frozen=True)
class FHVector:
    f: tuple[int, ...]
    h: tuple[int, ...]


def _f_to_h(f):
    n = len(f) - 1
    return tuple(
        sum((-1) ** (i - k) * comb(i, k) * f[i] for i in range(k, n + 1))
        for k in range(n + 1)
    )


def _h_to_f(h):
    n = len(h) - 1
    return tuple(
        sum(comb(k, i) * h[k] for k in range(i, n + 1)) for i in range(n + 1)
    )


def fh_transform(values, direction: str) -> FHVector:
    """Binomial transform between face counts f and h-numbers; direction is
    "f_to_h" or "h_to_f"."""
    values = tuple(int(x) for x in values)
    if not values:
        raise MalformedVector("empty vector")
    if direction == "f_to_h":
        if values[-1] != 1:
            raise MalformedVector("top face count must be 1")
        return FHVector(f=values, h=_f_to_h(values))
    if direction == "h_to_f":
        return FHVector(f=_h_to_f(values), h=values)
    raise MalformedVector(f"unknown direction {direction!r}")


def h_vector(lp: LabeledPolytope) -> tuple[int, ...]:
    return _f_to_h(f_vector(lp.geometry))


def betti_numbers(lp: LabeledPolytope) -> tuple[int, ...]:
    """(b_0, ..., b_2n): even entries from the h-vector, odd entries zero.
    Labels play no role."""
    h = h_vector(lp)
    out = []
    for i, hi in enumerate(h):
        out.append(hi)
        if i < len(h) - 1:
            out.append(0)
    return tuple(out)


@dataclass(frozen=True)
class SRPresentation:
    """Stanley-Reisner data: one generator per facet, monomial relations
    from minimal empty facet intersections, and one linear relation per
    ambient coordinate with coefficients <eta_i, e_j>."""

    num_generators: int
    monomial_relations: tuple[tuple[int, ...], ...]
    linear_relations: tuple[tuple[int, ...], ...]


def sr_presentation(lp: LabeledPolytope) -> SRPresentation:
    if any(m != 1 for m in lp.labels):
        raise NotSmooth("all labels must be 1")
    vd = enumerate_vertices(lp.geometry)
    n = lp.dim
    for inc in vd.incidence:
        cone = from_columns([lp.conormals[i] for i in sorted(inc)])
        if abs(det(cone)) != 1:
            raise NotSmooth("vertex cone is not unimodular")
    incidences = list(vd.incidence)
    nf = lp.num_facets

    def is_face(subset):
        s = set(subset)
        return any(s <= inc for inc in incidences)

    non_faces = []
    for size in range(1, nf + 1):
        for subset in itertools.combinations(range(nf), size):
            if is_face(subset):
                continue
            if any(set(rel) <= set(subset) for rel in non_faces):
                continue
            non_faces.append(subset)
    linear = tuple(
        tuple(lp.conormals[i][j] for i in range(nf)) for j in range(n)
    )
    return SRPresentation(
        num_generators=nf,
        monomial_relations=tuple(non_faces),
        linear_relations=linear,
    )


def _elementary_symmetric(values):
    """(e_1, ..., e_n) of the given values."""
    out = [0] * (len(values) + 1)
    out[0] = 1
    for v in values:
        for k in range(len(values), 0, -1):
            out[k] += v * out[k - 1]
    return tuple(out[1:])


class BundleRing:
    """Z[alpha, beta] modulo alpha^(k2+1) and the slant relation
    beta^(k1+1) = -(sigma_1 beta^k1 alpha + ... + sigma_k1 beta alpha^k1),
    with sigma the elementary symmetric values of the twist entries plus a
    trailing zero.  Elements are dicts mapping (i, j) to the integer
    coefficient of alpha^i beta^j, with i <= k2 and j <= k1."""

    def __init__(self, k1: int, k2: int, a):
        if k1 < 1 or k2 < 1:
            raise PreconditionViolated("both dimensions must be at least 1")
        self.k1 = k1
        self.k2 = k2
        self.a = tuple(int(x) for x in a)
        if len(self.a) != k1:
            raise MalformedVector(f"twist needs {k1} entries")
        self.sigma = _elementary_symmetric(self.a + (0,))[:k1]
        self._monomial_cache = {}

    def zero(self):
        return {}

    def monomial(self, i: int, j: int):
        return self._reduce_monomial(i, j)

    def alpha(self):
        return self.monomial(1, 0)

    def beta(self):
        return self.monomial(0, 1)

    def _reduce_monomial(self, i, j):
        if (i, j) in self._monomial_cache:
            return dict(self._monomial_cache[(i, j)])
        if i > self.k2:
            result = {}
        elif j <= self.k1:
            result = {(i, j): 1}
        else:
            # beta^(k1+1) -> -(sigma_1 beta^k1 alpha + ... + sigma_k1 beta alpha^k1)
            result = {}
            for t in range(1, self.k1 + 1):
                part = self._reduce_monomial(i + t, j - t)
                for key, c in part.items():
                    result[key] = result.get(key, 0) - self.sigma[t - 1] * c
            result = {k: c for k, c in result.items() if c != 0}
        self._monomial_cache[(i, j)] = dict(result)
        return result

    def add(self, x, y):
        out = dict(x)
        for key, c in y.items():
            out[key] = out.get(key, 0) + c
        return {k: c for k, c in out.items() if c != 0}

    def scale(self, x, c):
        if c == 0:
            return {}
        return {k: c * v for k, v in x.items()}

    def multiply(self, x, y):
        out = {}
        for (i1, j1), c1 in x.items():
            for (i2, j2), c2 in y.items():
                for key, c in self._reduce_monomial(i1 + i2, j1 + j2).items():
                    out[key] = out.get(key, 0) + c1 * c2 * c
        return {k: c for k, c in out.items() if c != 0}

    def power(self, x, e: int):
        out = {(0, 0): 1}
        for _ in range(e):
            out = self.multiply(out, x)
        return out

    def linear(self, ca: int, cb: int):
        """The degree-one element ca * alpha + cb * beta."""
        return self.add(self.scale(self.alpha(), ca), self.scale(self.beta(), cb))

    def is_zero(self, x) -> bool:
        return not x

    def graded_rank(self, d: int) -> int:
        return sum(
            1
            for i in range(self.k2 + 1)
            for j in range(self.k1 + 1)
            if i + j == d
        )

    def graded_ranks(self) -> tuple[int, ...]:
        return tuple(self.graded_rank(d) for d in range(self.k1 + self.k2 + 1))

    def total_rank(self) -> int:
        return (self.k1 + 1) * (self.k2 + 1)


def bundle_ring(k1: int, k2: int, a) -> BundleRing:
    return BundleRing(k1, k2, a)


def find_product_generators(ring: BundleRing, bound: int = 5):
    """First integer quadruple (A, B, C, D), in ascending lexicographic
    search order with |entries| <= bound and AD - BC = +-1, such that
    (A alpha + B beta)^(k2+1) and (C alpha + D beta)^(k1+1) both vanish.
    The quadruple is sign-normalized so the first nonzero entry of (A, B)
    and of (C, D) is positive.  Returns None when no quadruple works."""
    rng = range(-bound, bound + 1)
    first_ok = {
        (x, y): ring.is_zero(ring.power(ring.linear(x, y), ring.k2 + 1))
        for x in rng
        for y in rng
    }
    second_ok = {
        (x, y): ring.is_zero(ring.power(ring.linear(x, y), ring.k1 + 1))
        for x in rng
        for y in rng
    }
    for quad in itertools.product(rng, repeat=4):
        va, vb, vc, vd = quad
        if abs(va * vd - vb * vc) != 1:
            continue
        if not first_ok[(va, vb)] or not second_ok[(vc, vd)]:
            continue
        if va < 0 or (va == 0 and vb < 0):
            va, vb = -va, -vb
        if vc < 0 or (vc == 0 and vd < 0):
            vc, vd = -vc, -vd
        return (va, vb, vc, vd)
    return None


@dataclass(frozen=True)
class ProductDecision:
    is_product: bool
    case: str
    detail: str


def is_ring_product(k1: int, k2: int, a) -> ProductDecision:
    """Decide whether the bundle ring is the cohomology ring of a product of
    projective spaces, with a report of the obstruction that fires.

    Requires k2 >= 2 and a normalized twist (all entries <= 0); the answer
    is yes exactly when the twist is zero.
    """
    if k2 < 2:
        raise PreconditionViolated("requires base dimension k2 >= 2")
    a = tuple(int(x) for x in a)
    if len(a) != k1:
        raise MalformedVector(f"twist needs {k1} entries")
    if any(x > 0 for x in a):
        raise PreconditionViolated("twist must be normalized with entries <= 0")
    sigma = _elementary_symmetric(a + (0,))
    sigma1 = sigma[0]
    sigma2 = sigma[1] if len(sigma) > 1 else 0
    if all(x == 0 for x in a):
        return ProductDecision(True, "trivial", "zero twist")
    if k1 < k2:
        return ProductDecision(
            False,
            "Case 2",
            f"sigma_1 = {sigma1} != 0 while a coordinate-free second "
            "generator forces sigma_1 = 0",
        )
    case = "Case 1" if k1 > k2 else "Case 3"
    if sigma1 % (k1 + 1) != 0:
        return ProductDecision(
            False,
            case,
            f"no integer C with {k1 + 1}C = sigma_1 = {sigma1}",
        )
    c = sigma1 // (k1 + 1)
    expected_sigma2 = c * c * k1 * (k1 + 1) // 2
    if sigma2 != expected_sigma2:
        return ProductDecision(
            False,
            case,
            f"sigma_2 = {sigma2} but matching coefficients needs "
            f"{expected_sigma2}",
        )
    sum_sq = sum(x * x for x in a)
    return ProductDecision(
        False,
        case,
        f"Cauchy-Schwarz fails: sigma_1^2 = {sigma1 * sigma1} exceeds "
        f"k1 * sum a_i^2 = {k1 * sum_sq}",
    )
