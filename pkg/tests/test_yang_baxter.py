"""Tests for tensor lifts and Yang-Baxter verification machinery."""

import itertools
import random

import pytest

from sixvertex.matrix import PolyMatrix
from sixvertex.poly import VarSpace
from sixvertex.weights import (IceKind, gamma, ice_weights, r_weights_params,
                               random_matched_pair, random_mismatched_pair)
from sixvertex.yang_baxter import (check_ice_commutator,
                                   check_parametrized_ybe,
                                   check_triangularity, check_yb_system,
                                   ddagger, hatted, lift, r_family,
                                   r_solution_space, report,
                                   star_triangle_sides, swap_matrix,
                                   yb_commutator)


def random_matrix(rng, space, size):
    return PolyMatrix([[space.const(rng.randint(-4, 4)) for _ in range(size)]
                       for _ in range(size)])


def test_lift_slot_12_and_23_are_kronecker_products():
    rng = random.Random(0)
    space = VarSpace(0)
    ident = PolyMatrix.identity(space, 2)
    for _ in range(5):
        a = random_matrix(rng, space, 4)
        assert lift(a, "12") == a.kron(ident)
        assert lift(a, "23") == ident.kron(a)


def test_lift_slot_13_entries():
    rng = random.Random(1)
    space = VarSpace(0)
    a = random_matrix(rng, space, 4)
    lifted = lift(a, "13")
    for i, j, k in itertools.product(range(2), repeat=3):
        for ip, jp, kp in itertools.product(range(2), repeat=3):
            entry = lifted[4 * i + 2 * j + k, 4 * ip + 2 * jp + kp]
            if j == jp:
                assert entry == a[2 * i + k, 2 * ip + kp]
            else:
                assert entry.is_zero()


def test_lift_guards():
    space = VarSpace(0)
    with pytest.raises(ValueError):
        lift(PolyMatrix.identity(space, 2), "12")
    with pytest.raises(ValueError):
        lift(PolyMatrix.identity(space, 4), "21")


def test_lifts_on_disjoint_factors_commute():
    rng = random.Random(2)
    space = VarSpace(0)
    ident = PolyMatrix.identity(space, 2)
    for _ in range(5):
        a = random_matrix(rng, space, 4)
        b = random_matrix(rng, space, 2)
        third_factor_only = lift(ident.kron(b), "23")
        twelve = lift(a, "12")
        assert twelve @ third_factor_only == third_factor_only @ twelve


def test_star_triangle_sides_match_commutator_entries():
    rng = random.Random(3)
    space = VarSpace(0)
    r, s, t = (random_matrix(rng, space, 4) for _ in range(3))
    comm = yb_commutator(r, s, t)
    for sigma, tau, beta, theta, rho, alpha in itertools.product(range(2), repeat=6):
        lhs, rhs = star_triangle_sides(r, s, t, sigma, tau, beta,
                                       theta, rho, alpha)
        row = 4 * theta + 2 * rho + alpha
        col = 4 * sigma + 2 * tau + beta
        assert rhs - lhs == comm[row, col]


def test_swap_matrix_is_an_involution():
    space = VarSpace(1)
    p = swap_matrix(space)
    assert p @ p == PolyMatrix.identity(space, 4)


def test_ddagger_and_hatted_definitions():
    space = VarSpace(2)
    args = (space.z(1), space.t(1), space.z(2), space.t(2))
    swapped = (space.z(2), space.t(2), space.z(1), space.t(1))
    z_swapped = (space.z(2), space.t(1), space.z(1), space.t(2))
    fam = r_family(IceKind.GAMMA, IceKind.DELTA)
    p = swap_matrix(space)
    assert ddagger(fam)(*args) == p @ fam(*swapped) @ p
    assert hatted(fam)(*args) == fam(*z_swapped)
    assert ddagger(ddagger(fam))(*args) == fam(*args)


def test_report_shapes():
    space = VarSpace(1)
    ok = report("demo", PolyMatrix.zeros(space, 2))
    assert ok == {"check": "demo", "status": "pass", "witness": None}
    bad = report("demo", PolyMatrix.identity(space, 2))
    assert bad["status"] == "fail"
    assert bad["witness"] == space.one().to_json()


def test_ice_commutators_vanish():
    for x in IceKind:
        for y in IceKind:
            assert check_ice_commutator(x, y)["status"] == "pass"


def test_parametrized_ybe_vanishes_plain_and_hatted():
    rep = check_parametrized_ybe(IceKind.GAMMA, IceKind.GAMMA, IceKind.DELTA)
    assert rep["status"] == "pass"
    assert rep["check"] == "ybe gamma,gamma,delta"
    rep = check_parametrized_ybe(IceKind.DELTA, IceKind.GAMMA, IceKind.DELTA,
                                 hat=True)
    assert rep["status"] == "pass"
    assert rep["check"].endswith("hatted")


def test_commutator_direct_example():
    space = VarSpace(2)
    r = r_weights_params(IceKind.GAMMA, IceKind.DELTA,
                         space.z(1), space.t(1), space.z(2), space.t(2))
    residual = yb_commutator(r.end2(),
                             ice_weights(space, IceKind.GAMMA, 1).end2(),
                             ice_weights(space, IceKind.DELTA, 2).end2())
    assert residual.is_zero()


def test_triangularity_scalars():
    space = VarSpace(2)
    z1, z2, t1, t2 = space.z(1), space.z(2), space.t(1), space.t(2)
    expected = {
        (IceKind.GAMMA, IceKind.GAMMA): (t1 * z2 + z1) * (t2 * z1 + z2),
        (IceKind.GAMMA, IceKind.DELTA): (t1 * z2 + z1) * (t2 * z2 + z1),
        (IceKind.DELTA, IceKind.GAMMA): (t1 * z1 + z2) * (t2 * z1 + z2),
        (IceKind.DELTA, IceKind.DELTA): (t1 * z1 + z2) * (t2 * z2 + z1)}
    for (x, y), scalar in expected.items():
        assert check_triangularity(x, y) == scalar


def test_solution_space_spans_only_commuting_weights():
    rng = random.Random(4)
    s, t = random_matched_pair(rng)
    basis = r_solution_space(s, t)
    assert basis
    space = s.space
    zero = space.zero()
    for vec in basis:
        slots = [space.const(v) for v in vec]
        rows = [[slots[0], zero, zero, zero],
                [zero, slots[2], slots[4], zero],
                [zero, slots[5], slots[3], zero],
                [zero, zero, zero, slots[1]]]
        assert yb_commutator(PolyMatrix(rows), s.end2(), t.end2()).is_zero()


def test_solution_space_excludes_mismatched_pairs():
    rng = random.Random(5)
    for _ in range(5):
        s, t = random_mismatched_pair(rng)
        basis = r_solution_space(s, t)
        # no admissible solution: every basis vector has zero c-weights
        assert all(not vec[4] and not vec[5] for vec in basis)


def test_solution_space_rejects_space_mismatch():
    rng = random.Random(6)
    s, _ = random_matched_pair(rng)
    with pytest.raises(ValueError):
        r_solution_space(s, gamma(VarSpace(1), 1))


def test_yb_system_reports():
    reports = check_yb_system(IceKind.GAMMA, IceKind.DELTA)
    assert len(reports) == 8
    assert all(rep["status"] == "pass" for rep in reports)
    names = [rep["check"] for rep in reports]
    assert names[0] == "yb-system gamma,delta [[A,A,A]]"
    assert "yb-system gamma,delta [[D,B,C^dd]]" in names
    hatted_reports = check_yb_system(IceKind.GAMMA, IceKind.DELTA, hat=True)
    assert all(rep["status"] == "pass" for rep in hatted_reports)
    assert all(" hatted " in rep["check"] for rep in hatted_reports)
