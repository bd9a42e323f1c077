from fractions import Fraction

import pytest

from torb.constructors import football
from torb.errors import IncompatibleSublattice, SingularBasis
from torb.labeled import equivalent, make_labeled, unimodular_image
from torb.polytope import volume
from torb.quotient import (
    TorusSubgroup,
    cover_polytope,
    quotient_polytope,
    subgroup_of_cover,
    subgroup_order,
)


def labeled_square():
    return make_labeled(
        2,
        [
            ((-1, 0), 0, 1),
            ((1, 0), 1, 1),
            ((0, -1), 0, 1),
            ((0, 1), 1, 1),
        ],
    )


def test_subgroup_order():
    assert subgroup_order(TorusSubgroup(2, ())) == 1
    assert (
        subgroup_order(
            TorusSubgroup(2, ((Fraction(1, 2), Fraction(1, 2)),))
        )
        == 2
    )
    assert (
        subgroup_order(
            TorusSubgroup(2, ((Fraction(1, 2), 0), (0, Fraction(1, 3))))
        )
        == 6
    )


def test_quotient_of_interval_by_half():
    out = quotient_polytope(
        football(1, 1), TorusSubgroup(1, ((Fraction(1, 2),),))
    )
    assert out.conormals == ((-1,), (1,))
    assert out.offsets == (0, Fraction(1, 2))
    assert out.labels == (2, 2)


def test_quotient_square_by_diagonal_half():
    out = quotient_polytope(
        labeled_square(), TorusSubgroup(2, ((Fraction(1, 2), Fraction(1, 2)),))
    )
    assert out.conormals == ((-2, 1), (2, -1), (0, -1), (0, 1))
    assert out.offsets == (0, 1, 0, 1)
    assert out.labels == (1, 1, 1, 1)
    assert volume(out.geometry) == Fraction(1, 2)
    quad = make_labeled(
        2,
        [
            ((0, -1), 0, 1),
            ((2, 1), 1, 1),
            ((-2, -1), 0, 1),
            ((0, 1), 1, 1),
        ],
    )
    # vertices (0,0), (1/2,0), (-1/2,1), (0,1)
    assert equivalent(out, quad, mode="unimodular") is not None


def test_quotient_preserves_vertex_pairings():
    lp = labeled_square()
    group = TorusSubgroup(2, ((Fraction(1, 3), Fraction(2, 3)),))
    out = quotient_polytope(lp, group)
    assert volume(out.geometry) == volume(lp.geometry) / 3
    assert all(m >= 1 for m in out.labels)


def test_cover_of_interval():
    out = cover_polytope(football(2, 2), ((2,),))
    assert out.conormals == ((-1,), (1,))
    assert out.offsets == (0, 2)
    assert out.labels == (1, 1)
    assert volume(out.geometry) == 2 * volume(football(2, 2).geometry)


def test_cover_incompatible():
    with pytest.raises(IncompatibleSublattice):
        cover_polytope(football(1, 1), ((2,),))


def test_cover_bad_basis():
    with pytest.raises(SingularBasis):
        cover_polytope(labeled_square(), ((1, 1), (1, 1)))
    with pytest.raises(SingularBasis):
        cover_polytope(labeled_square(), ((1,),))


def test_subgroup_of_cover():
    group = subgroup_of_cover(((2, 0), (0, 1)), 2)
    assert subgroup_order(group) == 2
    assert group.generators == ((Fraction(1, 2), Fraction(0)),)
    trivial = subgroup_of_cover(((1, 0), (0, 1)), 2)
    assert subgroup_order(trivial) == 1


def test_quotient_undoes_cover_diagonal():
    lp = make_labeled(
        2,
        [
            ((-1, 0), 0, 2),
            ((1, 0), 1, 2),
            ((0, -1), 0, 3),
            ((0, 1), 1, 3),
        ],
    )
    basis = ((2, 0), (0, 3))
    covered = cover_polytope(lp, basis)
    assert volume(covered.geometry) == 6 * volume(lp.geometry)
    back = quotient_polytope(covered, subgroup_of_cover(basis, 2))
    assert equivalent(lp, back, mode="translation") == (0, 0)


def test_cover_then_quotient_off_diagonal():
    # the basis inverse ((1/2, 0), (1/2, 1)) is a reduced triangular lattice
    # basis, so quotienting by the dual subgroup reproduces it exactly
    lp = unimodular_image(labeled_square(), ((1, 1), (0, 1)))
    basis = ((2, 0), (-1, 1))
    scaled = make_labeled(
        2,
        [
            (c, o, m * 2)
            for c, o, m in zip(lp.conormals, lp.offsets, lp.labels)
        ],
    )
    covered = cover_polytope(scaled, basis)
    assert volume(covered.geometry) == 2 * volume(scaled.geometry)
    back = quotient_polytope(covered, subgroup_of_cover(basis, 2))
    assert equivalent(scaled, back, mode="translation") == (0, 0)
