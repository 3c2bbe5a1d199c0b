"""Schur polynomials by two independent routes, plus deformed denominators.

The bialternant route divides the alternating sum over permutations by the
Vandermonde product prod_{i<j} (z_i - z_j); the sign convention is pinned
by asserting the quotient is positive at a point with increasing positive
coordinates.  The pattern route sums monomials over weakly decreasing
interleaved triangular arrays with top row lambda and never divides, so
the two implementations check each other.
"""

from __future__ import annotations

import itertools
from typing import Iterator, Sequence

from functools import lru_cache

from .lattice import BoundarySpec, partition_function, validate_partition
from .poly import Polynomial, VarSpace, poly_sum, prod
from .weights import IceKind


def schur_bialternant(lam: Sequence[int]) -> Polynomial:
    """Quotient of the alternating lambda + rho sum by the Vandermonde."""
    return _schur_bialternant(validate_partition(lam))


@lru_cache(maxsize=None)
def _schur_bialternant(lam: tuple[int, ...]) -> Polynomial:
    n = len(lam)
    space = VarSpace(n)
    if n == 0:
        return space.one()
    exponents = [lam[i] + n - 1 - i for i in range(n)]

    def signed_term(perm: tuple[int, ...]) -> Polynomial:
        inversions = sum(1 for i in range(n) for j in range(i + 1, n)
                         if perm[i] > perm[j])
        term = prod((space.z(j + 1, exponents[perm[j]]) for j in range(n)), space)
        return term if inversions % 2 == 0 else -term

    numerator = poly_sum(map(signed_term, itertools.permutations(range(n))), space)
    vandermonde = prod((space.z(i) - space.z(j)
                        for i in range(1, n + 1) for j in range(i + 1, n + 1)),
                       space)
    quotient = numerator.exact_div(vandermonde)
    value = quotient.evaluate([2 ** i for i in range(n)], [0] * n)
    if value.im or value.re <= 0:
        raise ValueError(f"sign convention violated: value {value} at 1,2,4,...")
    return quotient


def _weak_interleavers(row: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    def walk(p: int, acc: tuple[int, ...]):
        if p == len(row) - 1:
            yield acc
            return
        for v in range(row[p], row[p + 1] - 1, -1):
            yield from walk(p + 1, acc + (v,))
    yield from walk(0, ())


def _weak_patterns(top: tuple[int, ...]) -> Iterator[tuple[tuple[int, ...], ...]]:
    if not top:
        yield ()
        return
    if len(top) == 1:
        yield (top,)
        return
    for nxt in _weak_interleavers(top):
        for rest in _weak_patterns(nxt):
            yield (top,) + rest


def schur_pattern_sum(lam: Sequence[int]) -> Polynomial:
    """Sum of z^(row-sum differences) over weak patterns with top row lambda."""
    lam = validate_partition(lam)
    n = len(lam)
    space = VarSpace(n)

    def term(rows: tuple[tuple[int, ...], ...]) -> Polynomial:
        sums = [sum(row) for row in rows] + [0]
        return prod((space.z(k + 1, sums[k] - sums[k + 1]) for k in range(n)),
                    space)

    return poly_sum(map(term, _weak_patterns(lam)), space)


def deformed_denominator(kind: IceKind, n: int) -> Polynomial:
    """prod_{i<j} (t_i z_j + z_i) for Gamma, prod_{i<j} (t_j z_j + z_i) for Delta."""
    if n < 0:
        raise ValueError(f"rank must be non-negative, got {n}")
    space = VarSpace(n)
    kind = IceKind(kind)
    factors = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            t_var = space.t(i) if kind is IceKind.GAMMA else space.t(j)
            factors.append(t_var * space.z(j) + space.z(i))
    return prod(factors, space)


def s_gamma(lam: Sequence[int]) -> Polynomial:
    """Partition function divided by the deformed denominator.

    The quotient must be exactly the Schur polynomial and free of every t
    variable; both are enforced.
    """
    lam = validate_partition(lam)
    z_fun = partition_function(BoundarySpec(IceKind.GAMMA, lam))
    quotient = z_fun.exact_div(deformed_denominator(IceKind.GAMMA, len(lam)))
    if quotient.contains_t():
        raise ValueError(f"quotient contains t variables: {quotient}")
    if quotient != schur_bialternant(lam):
        raise ValueError("quotient disagrees with the bialternant")
    return quotient
