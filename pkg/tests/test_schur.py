"""Tests for Schur polynomials and the deformed denominators."""

from itertools import combinations_with_replacement, permutations

import pytest

from sixvertex.poly import GaussianRational, VarSpace, prod
from sixvertex.schur import (deformed_denominator, s_gamma, schur_bialternant,
                             schur_pattern_sum)
from sixvertex.weights import IceKind


def test_empty_partition_is_one():
    assert schur_bialternant(()) == VarSpace(0).one()
    assert schur_pattern_sum(()) == VarSpace(0).one()


def test_small_schur_values():
    space = VarSpace(2)
    z1, z2 = space.z(1), space.z(2)
    assert schur_bialternant((1, 0)) == z1 + z2
    assert schur_bialternant((1, 1)) == z1 * z2
    assert schur_bialternant((2, 0)) == z1 * z1 + z1 * z2 + z2 * z2


def test_methods_agree_on_small_grid():
    for n in range(5):
        for lam in combinations_with_replacement(range(4, -1, -1), n):
            assert schur_bialternant(lam) == schur_pattern_sum(lam)


def test_principal_specialization():
    s = schur_bialternant((3, 1, 0))
    value = s.evaluate([1, 1, 1], [0, 0, 0])
    assert value == GaussianRational(15)


def test_stability_under_last_variable_restriction():
    # dropping the last variable from s_{(2,1,0)} recovers s_{(2,1)}
    big = schur_bialternant((2, 1, 0)).substitute(z={3: 0})
    small = schur_bialternant((2, 1))
    truncated = {mono[:2] + mono[3:5]: coeff for mono, coeff in big.terms()}
    assert truncated == dict(small.terms())


def test_symmetry_in_rank_variables():
    s = schur_bialternant((2, 1, 0))
    for sigma in permutations((1, 2, 3)):
        assert s.permute_rank_variables(sigma) == s


def test_deformed_denominator_values():
    assert deformed_denominator(IceKind.GAMMA, 0) == VarSpace(0).one()
    assert deformed_denominator(IceKind.DELTA, 1) == VarSpace(1).one()
    space = VarSpace(2)
    assert deformed_denominator(IceKind.GAMMA, 2) == (
        space.t(1) * space.z(2) + space.z(1))
    assert deformed_denominator(IceKind.DELTA, 2) == (
        space.t(2) * space.z(2) + space.z(1))
    with pytest.raises(ValueError):
        deformed_denominator(IceKind.GAMMA, -1)


def test_deformed_denominator_at_minus_one_is_vandermonde():
    n = 3
    space = VarSpace(n)
    vandermonde = prod((space.z(i) - space.z(j)
                        for i in range(1, n + 1) for j in range(i + 1, n + 1)),
                       space)
    at = {i: -1 for i in range(1, n + 1)}
    for kind in IceKind:
        assert deformed_denominator(kind, n).substitute(t=at) == vandermonde


def test_s_gamma_matches_bialternant():
    assert s_gamma((0, 0)) == VarSpace(2).one()
    assert s_gamma((2, 1)) == schur_bialternant((2, 1))
