"""Tests for square-ice lattices, the pattern bijection, and transfer matrices."""

import json

import pytest

from sixvertex.lattice import (BoundarySpec, GTPattern, LatticeState,
                               brute_force_states, enumerate_states,
                               gt_row_sums, gt_to_state, partition_function,
                               state_to_gt, state_weight, tokuyama_sum,
                               transfer_matrix, validate_partition)
from sixvertex.matrix import PolyMatrix
from sixvertex.poly import VarSpace, prod
from sixvertex.schur import schur_bialternant
from sixvertex.weights import IceKind, gamma


def test_validate_partition():
    assert validate_partition([3, 1, 0]) == (3, 1, 0)
    assert validate_partition(()) == ()
    for bad in ([1, 2], [-1], [1.5], [True]):
        with pytest.raises(ValueError):
            validate_partition(bad)


def test_boundary_geometry():
    b = BoundarySpec(IceKind.GAMMA, (3, 1, 0))
    assert (b.n, b.m) == (3, 6)
    assert b.column_labels == (5, 4, 3, 2, 1, 0)
    assert b.top_row() == (5, 2, 0)
    assert b.top_row_spins() == (-1, 1, 1, -1, 1, -1)
    assert b.left_spin == 1 and b.right_spin == -1
    assert [b.row_label(r) for r in range(3)] == [1, 2, 3]
    d = BoundarySpec(IceKind.DELTA, (3, 1, 0))
    assert d.left_spin == -1 and d.right_spin == 1
    assert [d.row_label(r) for r in range(3)] == [3, 2, 1]
    with pytest.raises(IndexError):
        b.row_label(3)
    with pytest.raises(AttributeError):
        b.n = 4
    assert b == BoundarySpec("gamma", [3, 1, 0]) and b != d


def test_gt_pattern_validation():
    GTPattern(((5, 2, 0), (3, 0), (3,)))
    with pytest.raises(ValueError):
        GTPattern(((5, 2, 0), (3,)))
    with pytest.raises(ValueError):
        GTPattern(((5, 5, 0), (3, 0), (3,)))
    with pytest.raises(ValueError):
        GTPattern(((5, 2, 0), (3, 0), (6,)))
    with pytest.raises(ValueError):
        GTPattern(((2, -1), (0,)))
    p = GTPattern(((5, 2, 0), (3, 0), (3,)))
    assert p.n == 3
    assert GTPattern.from_json(p.to_json()) == p
    with pytest.raises(AttributeError):
        p.rows = ()


def test_worked_example_two_states():
    b = BoundarySpec(IceKind.GAMMA, (0, 0))
    space = VarSpace(2)
    states = list(enumerate_states(b))
    assert len(states) == 2
    weights = {state_weight(s) for s in states}
    assert weights == {space.t(1) * space.z(2), space.z(1)}
    assert partition_function(b) == space.t(1) * space.z(2) + space.z(1)


def test_state_counts():
    counts = {(IceKind.GAMMA, (1, 0)): 3,
              (IceKind.DELTA, (1, 0)): 3,
              (IceKind.GAMMA, (3, 1, 0)): 41}
    for (kind, lam), expected in counts.items():
        assert sum(1 for _ in enumerate_states(BoundarySpec(kind, lam))) == expected


def test_enumeration_order_is_descending():
    b = BoundarySpec(IceKind.GAMMA, (1, 0))
    patterns = [state_to_gt(s).to_json() for s in enumerate_states(b)]
    assert patterns == [[[2, 0], [2]], [[2, 0], [1]], [[2, 0], [0]]]


def test_rank_zero_and_rank_one_partition_functions():
    b = BoundarySpec(IceKind.GAMMA, ())
    assert len(list(enumerate_states(b))) == 1
    assert partition_function(b) == VarSpace(0).one()
    for kind in IceKind:
        z_fun = partition_function(BoundarySpec(kind, (2,)))
        assert z_fun == VarSpace(1).z(1, 2)


def test_brute_force_agrees_with_pattern_enumeration():
    for kind in IceKind:
        for lam in ((), (2,), (1, 0), (2, 2), (3, 1, 0)):
            b = BoundarySpec(kind, lam)
            enum = list(enumerate_states(b))
            brute = list(brute_force_states(b))
            assert len(enum) == len(brute)
            assert set(enum) == set(brute)


def test_brute_force_size_guard():
    with pytest.raises(ValueError):
        list(brute_force_states(BoundarySpec(IceKind.GAMMA, (6, 0, 0))))
    with pytest.raises(ValueError):
        list(brute_force_states(BoundarySpec(IceKind.GAMMA, (0,) * 5)))


def test_enumeration_state_limit(monkeypatch):
    monkeypatch.setenv("ICE_MAX_STATES", "1")
    with pytest.raises(RuntimeError):
        list(enumerate_states(BoundarySpec(IceKind.GAMMA, (0, 0))))


def test_bijection_round_trip():
    for kind in IceKind:
        b = BoundarySpec(kind, (2, 1))
        for s in enumerate_states(b):
            assert gt_to_state(state_to_gt(s), b) == s


def test_gt_to_state_guards():
    b = BoundarySpec(IceKind.GAMMA, (3, 1, 0))
    with pytest.raises(ValueError):
        gt_to_state(GTPattern(((1, 0), (1,))), b)
    with pytest.raises(ValueError):
        gt_to_state(GTPattern(((4, 2, 0), (3, 0), (3,))), b)


def test_example_pattern_state_and_weight():
    b = BoundarySpec(IceKind.GAMMA, (3, 1, 0))
    pattern = GTPattern(((5, 2, 0), (3, 0), (3,)))
    state = gt_to_state(pattern, b)
    assert state_to_gt(state) == pattern
    assert gt_row_sums(pattern) == (4, 0, 3)
    space = VarSpace(3)
    expected = space.z(1, 4) * space.z(3, 3) * space.t(2) * (space.t(1) + 1)
    assert state_weight(state) == expected


def test_gt_row_sums_single_row():
    assert gt_row_sums(GTPattern(((4,),))) == (4,)


def test_vertical_minus_counts_by_row():
    # row j of vertical edges carries exactly n - j minus spins
    for kind in IceKind:
        b = BoundarySpec(kind, (2, 1, 0))
        for s in enumerate_states(b):
            for j in range(b.n + 1):
                assert sum(1 for spin in s.vertical[j] if spin == -1) == b.n - j


def test_state_validation_errors():
    b = BoundarySpec(IceKind.GAMMA, (0, 0))
    good = next(iter(enumerate_states(b)))
    with pytest.raises(ValueError):
        LatticeState(b, good.vertical[:-1], good.horizontal)
    with pytest.raises(ValueError):
        LatticeState(b, good.vertical,
                     [row[:-1] + (0,) for row in good.horizontal])
    flipped_left = [(-1,) + row[1:] for row in good.horizontal]
    with pytest.raises(ValueError):
        LatticeState(b, good.vertical, flipped_left)
    bad_top = (tuple(-s for s in good.vertical[0]),) + good.vertical[1:]
    with pytest.raises(ValueError):
        LatticeState(b, bad_top, good.horizontal)
    bad_bottom = good.vertical[:-1] + ((-1,) + good.vertical[-1][1:],)
    with pytest.raises(ValueError):
        LatticeState(b, bad_bottom, good.horizontal)


def test_inadmissible_vertex_is_reported_with_coordinates():
    b = BoundarySpec(IceKind.GAMMA, (0, 0))
    good = next(iter(enumerate_states(b)))
    assert good.first_inadmissible() is None
    flipped = (good.vertical[0],
               tuple(-s for s in good.vertical[1]),
               good.vertical[2])
    near_miss = LatticeState(b, flipped, good.horizontal)
    assert near_miss.first_inadmissible() is not None
    with pytest.raises(ValueError, match=r"row \d+, column label \d+"):
        state_weight(near_miss)


def test_state_json_round_trip():
    b = BoundarySpec(IceKind.DELTA, (2, 0))
    for s in enumerate_states(b):
        data = json.loads(json.dumps(s.to_json()))
        assert LatticeState.from_json(data) == s


def test_tokuyama_per_row_matches_partition_function():
    for lam in ((), (2,), (1, 0), (2, 1, 0)):
        z_fun = partition_function(BoundarySpec(IceKind.GAMMA, lam))
        assert tokuyama_sum(lam, per_row_t=True) == z_fun


def test_tokuyama_single_t_factorization():
    lam = (2, 0)
    space = VarSpace(2)
    target = prod((space.z(i) + space.t(1) * space.z(j)
                   for i in range(1, 3) for j in range(i + 1, 3)),
                  space) * schur_bialternant(lam)
    assert tokuyama_sum(lam, per_row_t=False) == target


def test_transfer_matrix_single_column():
    space = VarSpace(1)
    v = transfer_matrix(gamma(space, 1), 1)
    expected = PolyMatrix([[space.z(1) + 1, space.zero()],
                           [space.zero(), space.z(1) + space.t(1)]])
    assert v == expected


def test_transfer_matrix_identity_weights():
    # the identity vertex forces every column to repeat its top spin and
    # the ring of horizontal spins to be constant, giving 2 * I
    space = VarSpace(0)
    v = transfer_matrix(PolyMatrix.identity(space, 4), 3)
    assert v == PolyMatrix.identity(space, 8).scale(space.const(2))


def test_transfer_matrix_commutation():
    space = VarSpace(2)
    v1 = transfer_matrix(gamma(space, 1), 2)
    v2 = transfer_matrix(gamma(space, 2), 2)
    assert v1 @ v2 == v2 @ v1


def test_transfer_matrix_guards():
    space = VarSpace(1)
    with pytest.raises(ValueError):
        transfer_matrix(gamma(space, 1), 0)
    with pytest.raises(ValueError):
        transfer_matrix(gamma(space, 1), 7)
    with pytest.raises(ValueError):
        transfer_matrix(PolyMatrix.identity(space, 2), 2)
