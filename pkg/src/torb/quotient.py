"""Torus-quotient and covering transforms on labeled polytopes.

Quotienting by a finite torus subgroup G enlarges the weight lattice to
Lambda' = Z^n + <G>.  With A a basis matrix of Lambda' (columns in the old
coordinates), every weighted conormal m * eta is re-expressed as
w = A^-1 (m * eta), which is integral; its content becomes the new label and
its primitive part the new conormal.  Offsets follow so that the pairing of
every vertex with every weighted conormal is preserved exactly.  Covering is
the same transform with a finite-index sublattice basis instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import IncompatibleSublattice, SingularBasis
from .labeled import LabeledPolytope
from .lattice import (
    frac_det,
    frac_inverse,
    lattice_basis_from_generators,
    primitive_part,
)
from .polytope import Halfspace, HPolytope


@dataclass(frozen=True)
class TorusSubgroup:
    """Finite subgroup of the n-torus given by rational generators mod Z^n."""

    dim: int
    generators: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        gens = tuple(
            tuple(Fraction(x) for x in g) for g in self.generators
        )
        for g in gens:
            if len(g) != self.dim:
                raise ValueError(
                    f"generator of dimension {len(g)}, expected {self.dim}"
                )
        object.__setattr__(self, "generators", gens)


def subgroup_order(group: TorusSubgroup) -> int:
    _, index = lattice_basis_from_generators(group.generators, group.dim)
    return index


def _transform(lp: LabeledPolytope, basis) -> LabeledPolytope:
    """Rewrite lp in the coordinates of the lattice with the given (square,
    rational) basis matrix; raises IncompatibleSublattice when a weighted
    conormal falls outside the new lattice."""
    inv = frac_inverse(basis)
    halfspaces = []
    labels = []
    for h, m in zip(lp.geometry.halfspaces, lp.labels):
        weighted = tuple(m * c for c in h.conormal)
        w = tuple(
            sum(Fraction(a) * b for a, b in zip(row, weighted)) for row in inv
        )
        if any(x.denominator != 1 for x in w):
            raise IncompatibleSublattice(
                f"weighted conormal {weighted} is not in the new lattice"
            )
        w = tuple(int(x) for x in w)
        new_label, new_conormal = primitive_part(w)
        halfspaces.append(Halfspace(new_conormal, m * h.offset / new_label))
        labels.append(new_label)
    return LabeledPolytope(
        HPolytope(lp.dim, tuple(halfspaces)), tuple(labels)
    )


def quotient_polytope(lp: LabeledPolytope, group: TorusSubgroup) -> LabeledPolytope:
    if group.dim != lp.dim:
        raise ValueError("subgroup dimension does not match the polytope")
    basis, _ = lattice_basis_from_generators(group.generators, lp.dim)
    return _transform(lp, basis)


def cover_polytope(lp: LabeledPolytope, sublattice_basis) -> LabeledPolytope:
    """Transform along a finite-index sublattice of Z^n given by the columns
    of an integer matrix."""
    basis = tuple(
        tuple(Fraction(x) for x in row) for row in sublattice_basis
    )
    if len(basis) != lp.dim or any(len(row) != lp.dim for row in basis):
        raise SingularBasis("sublattice basis has the wrong shape")
    if frac_det(basis) == 0:
        raise SingularBasis("sublattice basis is singular")
    return _transform(lp, basis)


def subgroup_of_cover(sublattice_basis, dim: int) -> TorusSubgroup:
    """The torus subgroup whose quotient undoes cover_polytope with the same
    basis: generated by the columns of the inverse basis mod Z^n."""
    basis = tuple(
        tuple(Fraction(x) for x in row) for row in sublattice_basis
    )
    if frac_det(basis) == 0:
        raise SingularBasis("sublattice basis is singular")
    inv = frac_inverse(basis)
    gens = tuple(
        tuple(inv[i][j] % 1 for i in range(dim)) for j in range(dim)
    )
    gens = tuple(g for g in gens if any(x != 0 for x in g))
    return TorusSubgroup(dim=dim, generators=gens)
