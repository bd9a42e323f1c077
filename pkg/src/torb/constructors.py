"""Builders for the standard example families: labeled projective spaces,
weighted projective polytopes, footballs, simplices and products."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, lcm, prod

from .errors import MalformedVector, NonPrimitiveSlant
from .labeled import LabeledPolytope, make_labeled
from .lattice import content
from .polytope import Halfspace, HPolytope


@dataclass(frozen=True)
class SPData:
    """Slant conormal v (primitive, positive) and labels w for the simplex
    with coordinate conormals -e_1, ..., -e_n and one slanted facet."""

    v: tuple[int, ...]
    w: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "v", tuple(int(x) for x in self.v))
        object.__setattr__(self, "w", tuple(int(x) for x in self.w))
        if len(self.w) != len(self.v) + 1:
            raise MalformedVector("label vector must have dimension + 1 entries")
        if any(x < 1 for x in self.v):
            raise MalformedVector("slant conormal entries must be positive")
        if content(self.v) != 1:
            raise NonPrimitiveSlant(f"slant conormal {self.v} is not primitive")
        if any(x < 1 for x in self.w):
            raise MalformedVector("labels must be positive")


@dataclass(frozen=True)
class WeightVector:
    weights: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(int(x) for x in self.weights))
        if len(self.weights) < 2 or any(x < 1 for x in self.weights):
            raise MalformedVector("weights must be at least two positive integers")
        if content(self.weights) != 1:
            raise MalformedVector(f"weights {self.weights} have gcd > 1")


def labeled_projective_space(data: SPData) -> LabeledPolytope:
    """Simplex with conormals -e_1, ..., -e_n and v (offsets 0 and 1), with
    labels w: the coordinate facet i carries w_i, the slanted facet w_{n+1}."""
    n = len(data.v)
    facets = []
    for i in range(n):
        conormal = tuple(-1 if j == i else 0 for j in range(n))
        facets.append((conormal, 0, data.w[i]))
    facets.append((data.v, 1, data.w[n]))
    return make_labeled(n, facets)


def wps_slant(weights: WeightVector) -> tuple[int, ...]:
    lam = weights.weights
    n = len(lam) - 1
    ell = lcm(*lam[1:])
    return tuple(ell // lam[i] for i in range(1, n + 1))


def wps_labels(weights: WeightVector) -> tuple[int, ...]:
    """(l_0, ..., l_n) with l_i = gcd of the weights omitting the i-th."""
    lam = weights.weights
    out = []
    for i in range(len(lam)):
        rest = lam[:i] + lam[i + 1:]
        out.append(gcd(*rest))
    return tuple(out)


def weighted_projective_polytope(weights: WeightVector) -> LabeledPolytope:
    """The labeled projective space realizing the weighted projective space
    with the given weights.

    The slanted facet corresponds to the homogeneous coordinate z_0 and so
    carries the label l_0; the coordinate facet i carries l_i.
    """
    slant = wps_slant(weights)
    if content(slant) != 1:
        raise NonPrimitiveSlant(f"slant {slant} from weights {weights.weights}")
    labels = wps_labels(weights)
    w = labels[1:] + (labels[0],)
    return labeled_projective_space(SPData(v=slant, w=w))


def orbifold_projective_local_groups(weights: WeightVector):
    """Local group orders (one per fixed point) and the global structure
    group order for the orbifold projective space with the given weights."""
    lam = weights.weights
    orders = tuple(
        prod(lam[:i] + lam[i + 1:]) for i in range(len(lam))
    )
    gamma_order = prod(orders) // prod(lam)
    return orders, gamma_order


def football(p: int, q: int) -> LabeledPolytope:
    """Interval [0, 1] with labels (p, q): the (p, q)-football polytope."""
    return labeled_projective_space(SPData(v=(1,), w=(p, q)))


def simplex(n: int, labels=None) -> LabeledPolytope:
    """Standard n-simplex with all-ones slant; labels default to 1."""
    if labels is None:
        labels = (1,) * (n + 1)
    return labeled_projective_space(SPData(v=(1,) * n, w=tuple(labels)))


def product(lp1: LabeledPolytope, lp2: LabeledPolytope) -> LabeledPolytope:
    """Block-diagonal product; facets of lp1 come first."""
    n1, n2 = lp1.dim, lp2.dim
    halfspaces = []
    for h in lp1.geometry.halfspaces:
        halfspaces.append(Halfspace(h.conormal + (0,) * n2, h.offset))
    for h in lp2.geometry.halfspaces:
        halfspaces.append(Halfspace((0,) * n1 + h.conormal, h.offset))
    return LabeledPolytope(
        HPolytope(n1 + n2, tuple(halfspaces)), lp1.labels + lp2.labels
    )
