import random
from math import comb

import pytest

from liecoh.cochain import (
    BettiProfile,
    apply_coboundary,
    betti,
    betti_profile,
    coboundary_basis,
    coboundary_matrix,
    cocycle_basis,
    cohomology_representatives,
    rank_exact,
)
from liecoh.errors import DegreeOutOfRange, DimensionMismatch
from liecoh.exterior import ExteriorForm, basis, wedge
from liecoh.lie_algebra import (
    abelian,
    aff_r,
    diamond,
    direct_sum,
    from_structure_constants,
    heisenberg,
)
from liecoh.linalg import SpanBuilder
from liecoh.scalars import ONE, ZERO, Scalar

from helpers import oracle_coboundary, random_algebra, random_form


def test_aff_coboundary_of_dual_basis():
    g = aff_r()
    # [X, Y] = Y, so d Y* = -X* ^ Y* and d X* = 0
    dx = apply_coboundary(g, ExteriorForm.covector(2, 0))
    dy = apply_coboundary(g, ExteriorForm.covector(2, 1))
    assert dx.is_zero()
    assert dy.terms == {(0, 1): -ONE}


def test_heisenberg_matrix_golden():
    m = coboundary_matrix(heisenberg(1), 1)
    assert (m.degree, m.rows, m.cols) == (1, 3, 3)
    # only d Z* = -X1* ^ X2* survives
    assert m.entries == {(2, 0): -ONE}
    assert m.to_coordinate_text() == "% 1 3 3\n2 0 -1\n"


def test_complex_matrix_export():
    i = Scalar(0, 1)
    g = from_structure_constants(
        3,
        [
            (0, 1, (ZERO, ZERO, i)),
            (1, 2, (i, ZERO, ZERO)),
            (0, 2, (ZERO, -i, ZERO)),
        ],
    )
    text = coboundary_matrix(g, 1).to_coordinate_text()
    assert text == "% 1 3 3\n0 2 -i\n1 1 i\n2 0 -i\n"


def test_degree_zero_and_top():
    g = heisenberg(1)
    m0 = coboundary_matrix(g, 0)
    assert m0.cols == 1 and m0.entries == {}
    top = coboundary_matrix(g, 3)
    assert top.rows == 0 and top.cols == 1
    assert rank_exact(top) == 0
    with pytest.raises(DegreeOutOfRange):
        coboundary_matrix(g, 4)
    with pytest.raises(DegreeOutOfRange):
        betti(g, -1)


def test_antiderivation_matches_double_sum_on_families():
    for g in (
        aff_r(),
        abelian(3),
        heisenberg(1),
        heisenberg(2),
        direct_sum(aff_r(), abelian(2)),
        diamond([1])[0],
        diamond([Scalar(1), Scalar(0, 1)])[0],
    ):
        for k in range(g.dim + 1):
            for key in basis(g.dim, k):
                w = ExteriorForm(g.dim, k, {key: 1})
                assert apply_coboundary(g, w) == oracle_coboundary(g, w)


def test_antiderivation_matches_double_sum_random():
    rng = random.Random(2024)
    for _ in range(12):
        g = random_algebra(rng, max_dim=5)
        for k in range(g.dim + 1):
            w = random_form(rng, g.dim, k)
            assert apply_coboundary(g, w) == oracle_coboundary(g, w)


def test_coboundary_squares_to_zero():
    rng = random.Random(404)
    for _ in range(15):
        g = random_algebra(rng, max_dim=6)
        for k in range(g.dim):
            w = random_form(rng, g.dim, k)
            assert apply_coboundary(g, apply_coboundary(g, w)).is_zero()


def test_coboundary_is_a_derivation_on_wedges():
    # d(a ^ b) = d(a) ^ b + (-1)^deg(a) a ^ d(b)
    rng = random.Random(505)
    for _ in range(20):
        g = random_algebra(rng, max_dim=5)
        p = rng.randint(0, g.dim)
        q = rng.randint(0, g.dim - p)
        a = random_form(rng, g.dim, p)
        b = random_form(rng, g.dim, q)
        left = apply_coboundary(g, wedge(a, b))
        right = wedge(apply_coboundary(g, a), b)
        tail = wedge(a, apply_coboundary(g, b))
        if p % 2:
            tail = -tail
        assert left == right + tail


def test_rank_examples():
    g = heisenberg(2)
    ranks = tuple(rank_exact(coboundary_matrix(g, k)) for k in range(6))
    assert ranks == (0, 1, 4, 1, 0, 0)


def test_profile_heisenberg():
    assert betti_profile(heisenberg(1)).b == (1, 2, 2, 1)
    p = betti_profile(heisenberg(2))
    assert p.b == (1, 4, 5, 5, 4, 1)
    assert p.ranks == (0, 1, 4, 1, 0, 0)
    assert p.kernels == (1, 4, 6, 9, 5, 1)
    assert p.images == (0, 0, 1, 4, 1, 0)


def test_profile_aff_and_extensions():
    assert betti_profile(aff_r()).b == (1, 1, 0)
    g = direct_sum(aff_r(), abelian(3))
    assert betti_profile(g).b == (1, 4, 6, 4, 1, 0)


def test_profile_diamond():
    g, _ = diamond([1])
    assert betti_profile(g).b == (1, 1, 0, 1, 1)


def test_profile_zero_dimensional():
    p = betti_profile(abelian(0))
    assert p.b == (1,)
    assert p.ranks == (0,)


def test_betti_single_degree_agrees_with_profile():
    for g in (aff_r(), heisenberg(1), direct_sum(aff_r(), abelian(1))):
        p = betti_profile(g)
        for k in range(g.dim + 1):
            assert betti(g, k) == p.b[k]


def test_profile_reconstruction_round_trips():
    p = betti_profile(heisenberg(2))
    assert BettiProfile.from_ranks(p.n, p.ranks) == p
    assert BettiProfile.from_betti(p.n, p.b) == p


def test_profile_invariants_enforced():
    with pytest.raises(DimensionMismatch):
        BettiProfile.from_ranks(2, (0, 2, 1))  # top rank must be 0
    with pytest.raises(DimensionMismatch):
        BettiProfile.from_ranks(2, (1, 0, 0))  # forces b_0 = 0
    with pytest.raises(DimensionMismatch):
        BettiProfile.from_ranks(2, (0, 2, 0))  # forces b_1 < 0
    with pytest.raises(DimensionMismatch):
        BettiProfile.from_betti(2, (1, 0))  # wrong length
    with pytest.raises(DimensionMismatch):
        # tampered Betti entry breaks the internal consistency checks
        BettiProfile(
            n=1, b=(1, 0), ranks=(0, 0), kernels=(1, 1), images=(0, 0)
        )


def test_cocycles_are_closed_and_count():
    for g in (aff_r(), heisenberg(1), heisenberg(2), diamond([1])[0]):
        p = betti_profile(g)
        for k in range(g.dim + 1):
            forms = cocycle_basis(g, k)
            assert len(forms) == p.kernels[k]
            for w in forms:
                assert apply_coboundary(g, w).is_zero()


def test_coboundaries_are_exact_and_count():
    for g in (aff_r(), heisenberg(2), diamond([1])[0]):
        p = betti_profile(g)
        for k in range(g.dim + 1):
            forms = coboundary_basis(g, k)
            assert len(forms) == p.images[k]
            # every one is closed too
            for w in forms:
                assert apply_coboundary(g, w).is_zero()


def test_representatives_count_and_independence():
    for g in (aff_r(), heisenberg(1), heisenberg(2), diamond([1])[0]):
        p = betti_profile(g)
        for k in range(g.dim + 1):
            reps = cohomology_representatives(g, k)
            assert len(reps) == p.b[k]
            monomials = basis(g.dim, k)
            span = SpanBuilder(len(monomials))
            for w in coboundary_basis(g, k):
                span.add(w.coordinates(monomials))
            for w in reps:
                assert apply_coboundary(g, w).is_zero()
                # independent modulo the exact forms
                assert span.add(w.coordinates(monomials))


def test_representatives_aff_ext_degree_one():
    # H^1 is dual to g/[g,g]: X* and the abelian directions survive, Y* dies
    g = direct_sum(aff_r(), abelian(2))
    reps = cohomology_representatives(g, 1)
    keys = sorted(key for w in reps for key in w.terms)
    assert keys == [(0,), (2,), (3,)]
    assert all(w.terms[key] == ONE for w in reps for key in w.terms)


def test_direct_sum_profile_is_convolution():
    pairs = [
        (aff_r(), aff_r()),
        (aff_r(), heisenberg(1)),
        (heisenberg(1), abelian(2)),
        (heisenberg(2), abelian(1)),
    ]
    for a, b in pairs:
        pa = betti_profile(a).b
        pb = betti_profile(b).b
        s = betti_profile(direct_sum(a, b))
        n = a.dim + b.dim
        expected = tuple(
            sum(
                pa[i] * pb[k - i]
                for i in range(max(0, k - b.dim), min(a.dim, k) + 1)
            )
            for k in range(n + 1)
        )
        assert s.b == expected


def test_poincare_duality_of_unimodular_families():
    for g in (heisenberg(1), heisenberg(2), diamond([1])[0], diamond([1, 2])[0]):
        b = betti_profile(g).b
        assert b == tuple(reversed(b))


def test_abelian_profile_is_binomials():
    for d in range(5):
        assert betti_profile(abelian(d)).b == tuple(
            comb(d, k) for k in range(d + 1)
        )
