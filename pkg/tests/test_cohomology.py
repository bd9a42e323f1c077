import itertools
import random

import pytest

from torb.cohomology import (
    BundleRing,
    betti_numbers,
    bundle_ring,
    fh_transform,
    find_product_generators,
    h_vector,
    is_ring_product,
    sr_presentation,
)
from torb.constructors import football, product, simplex
from torb.errors import MalformedVector, NotSmooth, PreconditionViolated


def test_fh_transform_golden():
    # square
    assert fh_transform((4, 4, 1), "f_to_h").h == (1, 2, 1)
    assert fh_transform((1, 2, 1), "h_to_f").f == (4, 4, 1)
    # 3-simplex
    assert fh_transform((4, 6, 4, 1), "f_to_h").h == (1, 1, 1, 1)
    # triangular prism
    assert fh_transform((6, 9, 5, 1), "f_to_h").h == (1, 2, 2, 1)


def test_fh_transform_validation():
    with pytest.raises(MalformedVector):
        fh_transform((), "f_to_h")
    with pytest.raises(MalformedVector):
        fh_transform((4, 4, 2), "f_to_h")
    with pytest.raises(MalformedVector):
        fh_transform((1, 2, 1), "sideways")


def test_fh_roundtrip_random():
    rng = random.Random(3)
    for _ in range(100):
        n = rng.randint(1, 8)
        # the top h-number equals the top face count, so it must be 1 for
        # the inverse transform to accept the result
        h = tuple(rng.randint(0, 20) for _ in range(n - 1)) + (1,)
        assert fh_transform(fh_transform(h, "h_to_f").f, "f_to_h").h == h
        f = tuple(rng.randint(0, 20) for _ in range(n - 1)) + (1,)
        assert fh_transform(fh_transform(f, "f_to_h").h, "h_to_f").f == f


def test_h_vector_sums_to_vertex_count():
    for lp in (simplex(3), product(simplex(1), simplex(2))):
        h = h_vector(lp)
        f = fh_transform(h, "h_to_f").f
        assert sum(h) == f[0]


def test_betti_numbers_golden():
    assert betti_numbers(simplex(2)) == (1, 0, 1, 0, 1)
    prism = product(simplex(1), simplex(2))
    assert betti_numbers(prism) == (1, 0, 2, 0, 2, 0, 1)


def test_sr_presentation_square():
    pres = sr_presentation(product(simplex(1), simplex(1)))
    assert pres.num_generators == 4
    # opposite facets never meet
    assert set(pres.monomial_relations) == {(0, 1), (2, 3)}
    assert pres.linear_relations == ((-1, 1, 0, 0), (0, 0, -1, 1))


def test_sr_presentation_simplex():
    pres = sr_presentation(simplex(2))
    assert pres.monomial_relations == ((0, 1, 2),)
    assert pres.linear_relations == ((-1, 0, 1), (0, -1, 1))


def test_sr_presentation_requires_smooth():
    with pytest.raises(NotSmooth):
        sr_presentation(football(2, 2))
    from torb.labeled import make_labeled

    # index-2 vertex cones with all labels 1
    singular_vertex = make_labeled(
        2,
        [
            ((-2, 1), 0, 1),
            ((2, -1), 1, 1),
            ((0, -1), 0, 1),
            ((0, 1), 1, 1),
        ],
    )
    with pytest.raises(NotSmooth):
        sr_presentation(singular_vertex)


def test_bundle_ring_basics():
    ring = bundle_ring(1, 1, (-1,))
    alpha, beta = ring.alpha(), ring.beta()
    assert ring.graded_ranks() == (1, 2, 1)
    assert ring.total_rank() == 4
    assert ring.is_zero(ring.power(alpha, 2))
    # beta^2 = -sigma_1 beta alpha with sigma_1 = -1
    assert ring.power(beta, 2) == {(1, 1): 1}
    assert ring.is_zero(ring.power(beta, 3))


def test_bundle_ring_trivial_twist_splits():
    ring = bundle_ring(2, 2, (0, 0))
    assert ring.is_zero(ring.power(ring.beta(), 3))
    assert ring.is_zero(ring.power(ring.alpha(), 3))
    assert not ring.is_zero(
        ring.multiply(ring.power(ring.alpha(), 2), ring.power(ring.beta(), 2))
    )


def test_bundle_ring_top_class():
    # alpha^k2 beta^k1 spans the top degree for any twist
    for a in itertools.product(range(-2, 1), repeat=2):
        ring = bundle_ring(2, 2, a)
        top = ring.multiply(
            ring.power(ring.alpha(), 2), ring.power(ring.beta(), 2)
        )
        assert top == {(2, 2): 1}
        assert ring.is_zero(ring.multiply(top, ring.alpha()))
        assert ring.is_zero(ring.multiply(top, ring.beta()))


def test_bundle_ring_validation():
    with pytest.raises(PreconditionViolated):
        BundleRing(0, 1, ())
    with pytest.raises(MalformedVector):
        BundleRing(2, 1, (1,))


def test_find_product_generators_trivial():
    ring = bundle_ring(1, 2, (0,))
    assert find_product_generators(ring) == (1, 0, 0, 1)


def test_find_product_generators_even_twist():
    # for k1 = k2 = 1 and twist (-2), (alpha + beta)^2 = 0 in the ring
    ring = bundle_ring(1, 1, (-2,))
    quad = find_product_generators(ring)
    assert quad is not None
    va, vb, vc, vd = quad
    assert abs(va * vd - vb * vc) == 1
    assert ring.is_zero(ring.power(ring.linear(va, vb), 2))
    assert ring.is_zero(ring.power(ring.linear(vc, vd), 2))


def test_find_product_generators_odd_twist_fails():
    ring = bundle_ring(1, 1, (-1,))
    assert find_product_generators(ring, bound=5) is None


def test_is_ring_product_trivial():
    decision = is_ring_product(2, 2, (0, 0))
    assert decision.is_product
    assert decision.case == "trivial"


def test_is_ring_product_validation():
    with pytest.raises(PreconditionViolated):
        is_ring_product(1, 1, (-1,))
    with pytest.raises(PreconditionViolated):
        is_ring_product(1, 2, (1,))
    with pytest.raises(MalformedVector):
        is_ring_product(2, 2, (-1,))


def test_is_ring_product_cases():
    assert is_ring_product(1, 2, (-1,)).case == "Case 2"
    assert is_ring_product(3, 2, (-1, 0, 0)).case == "Case 1"
    assert is_ring_product(2, 2, (-1, -1)).case == "Case 3"
    for k1, k2 in ((1, 2), (2, 2), (3, 2), (2, 3)):
        for a in itertools.product(range(-2, 1), repeat=k1):
            decision = is_ring_product(k1, k2, a)
            assert decision.is_product == all(x == 0 for x in a)


def test_decision_agrees_with_generator_search():
    for k1, k2 in ((1, 2), (2, 2)):
        for a in itertools.product(range(-2, 1), repeat=k1):
            decision = is_ring_product(k1, k2, a)
            found = find_product_generators(bundle_ring(k1, k2, a), bound=4)
            assert decision.is_product == (found is not None)
