"""Square-ice ensembles on a rectangular grid with partition boundary data.

A partition lambda with n parts (trailing zeros significant) fixes a grid
of n rows and lambda_1 + n columns.  Columns carry labels lambda_1 + n - 1
down to 0 from left to right; the top boundary has a - exactly at the
labels lambda_i + n - i.  Gamma ice puts + on the left and bottom edges
and - on the right, with rows labeled 1..n from the top; Delta ice puts -
on the left, + on the right and bottom, with rows labeled n..1.  The row
label i selects the weights (z_i, t_i) for every vertex in that row.

States correspond to strict Gelfand-Tsetlin patterns with top row
lambda + rho by reading off the column labels of the - spins in each row
of vertical edges; enumeration walks the patterns in descending
lexicographic order, so state order is deterministic.
"""

from __future__ import annotations

import os
from functools import lru_cache
from typing import Iterator, Sequence

from .matrix import PolyMatrix
from .poly import Polynomial, VarSpace, poly_sum
from .weights import IceKind, VertexWeights, ice_weights

# Admissible spin patterns (W, N, E, S) and their weight slots; an
# admissible vertex has an even number of -, with d-patterns excluded for
# Gamma ice and c-patterns excluded for Delta ice.
_SLOT_BY_PATTERN = {
    (1, 1, 1, 1): "a1", (-1, -1, -1, -1): "a2",
    (1, -1, 1, -1): "b1", (-1, 1, -1, 1): "b2",
    (-1, 1, 1, -1): "c1", (1, -1, -1, 1): "c2",
    (-1, -1, 1, 1): "d1", (1, 1, -1, -1): "d2"}

_EXCLUDED = {IceKind.GAMMA: ((-1, -1, 1, 1), (1, 1, -1, -1)),
             IceKind.DELTA: ((-1, 1, 1, -1), (1, -1, -1, 1))}

_DEFAULT_MAX_STATES = 10_000_000


def validate_partition(parts: Sequence[int]) -> tuple[int, ...]:
    """Coerce to a tuple and reject anything not weakly decreasing >= 0."""
    lam = tuple(parts)
    for p in lam:
        if not isinstance(p, int) or isinstance(p, bool) or p < 0:
            raise ValueError(f"parts must be non-negative integers: {lam!r}")
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise ValueError(f"parts must be weakly decreasing: {lam!r}")
    return lam


class BoundarySpec:
    """Boundary data: ice kind plus partition, with derived grid geometry."""

    __slots__ = ("kind", "lam", "n", "m")

    def __init__(self, kind: IceKind, lam: Sequence[int]):
        object.__setattr__(self, "kind", IceKind(kind))
        object.__setattr__(self, "lam", validate_partition(lam))
        object.__setattr__(self, "n", len(self.lam))
        object.__setattr__(self, "m", (self.lam[0] if self.lam else 0) + self.n)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("BoundarySpec is immutable")

    @property
    def column_labels(self) -> tuple[int, ...]:
        return tuple(range(self.m - 1, -1, -1))

    def top_row(self) -> tuple[int, ...]:
        """lambda + rho: the column labels that carry - on the top boundary."""
        return tuple(p + self.n - 1 - i for i, p in enumerate(self.lam))

    def top_row_spins(self) -> tuple[int, ...]:
        minus = frozenset(self.top_row())
        return tuple(-1 if label in minus else 1 for label in self.column_labels)

    @property
    def left_spin(self) -> int:
        return 1 if self.kind is IceKind.GAMMA else -1

    @property
    def right_spin(self) -> int:
        return -1 if self.kind is IceKind.GAMMA else 1

    def row_label(self, r: int) -> int:
        """Variable index for physical row r (0-based from the top)."""
        if not 0 <= r < self.n:
            raise IndexError(f"row {r} out of range for {self.n} rows")
        return r + 1 if self.kind is IceKind.GAMMA else self.n - r

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BoundarySpec):
            return NotImplemented
        return self.kind is other.kind and self.lam == other.lam

    def __hash__(self) -> int:
        return hash((self.kind, self.lam))

    def __repr__(self) -> str:
        return f"BoundarySpec({self.kind.value}, {self.lam})"


class GTPattern:
    """Strict Gelfand-Tsetlin pattern: strictly decreasing interleaved rows."""

    __slots__ = ("rows",)

    def __init__(self, rows: Sequence[Sequence[int]]):
        rows = tuple(tuple(row) for row in rows)
        n = len(rows)
        for j, row in enumerate(rows):
            if len(row) != n - j:
                raise ValueError(f"row {j + 1} must have {n - j} entries")
            for e in row:
                if not isinstance(e, int) or isinstance(e, bool) or e < 0:
                    raise ValueError(f"entries must be non-negative integers: {row!r}")
            if any(row[p] <= row[p + 1] for p in range(len(row) - 1)):
                raise ValueError(f"row {j + 1} is not strictly decreasing: {row!r}")
        for j in range(n - 1):
            above, row = rows[j], rows[j + 1]
            for p, e in enumerate(row):
                if not above[p] >= e >= above[p + 1]:
                    raise ValueError(
                        f"interleaving violated at row {j + 2}, position {p + 1}")
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("GTPattern is immutable")

    @property
    def n(self) -> int:
        return len(self.rows)

    def to_json(self) -> list[list[int]]:
        return [list(row) for row in self.rows]

    @classmethod
    def from_json(cls, data: Sequence[Sequence[int]]) -> "GTPattern":
        return cls(data)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GTPattern):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"GTPattern({self.to_json()})"


class LatticeState:
    """Spin assignment for every edge: horizontal (n)x(m+1), vertical (n+1)xm.

    horizontal[r][c] is the spin left of vertex (r, c) with horizontal[r][m]
    the right boundary; vertical[r][c] is the spin above vertex (r, c) with
    vertical[n] the bottom boundary.  The constructor checks shapes, spin
    values, and the boundary; vertex admissibility is checked where weights
    are taken, so that near-miss states can be represented and rejected
    with coordinates.
    """

    __slots__ = ("boundary", "vertical", "horizontal")

    def __init__(self, boundary: BoundarySpec,
                 vertical: Sequence[Sequence[int]],
                 horizontal: Sequence[Sequence[int]]):
        vertical = tuple(tuple(row) for row in vertical)
        horizontal = tuple(tuple(row) for row in horizontal)
        n, m = boundary.n, boundary.m
        if len(vertical) != n + 1 or any(len(row) != m for row in vertical):
            raise ValueError(f"vertical grid must be {n + 1} x {m}")
        if len(horizontal) != n or any(len(row) != m + 1 for row in horizontal):
            raise ValueError(f"horizontal grid must be {n} x {m + 1}")
        for grid in (vertical, horizontal):
            for row in grid:
                for spin in row:
                    if spin not in (1, -1):
                        raise ValueError(f"spins must be +1 or -1: {spin!r}")
        for r in range(n):
            if horizontal[r][0] != boundary.left_spin:
                raise ValueError(f"left boundary spin wrong in row {r}")
            if horizontal[r][m] != boundary.right_spin:
                raise ValueError(f"right boundary spin wrong in row {r}")
        if vertical[0] != boundary.top_row_spins():
            raise ValueError("top boundary does not match lambda + rho")
        if any(spin != 1 for spin in vertical[n]):
            raise ValueError("bottom boundary must be all +")
        object.__setattr__(self, "boundary", boundary)
        object.__setattr__(self, "vertical", vertical)
        object.__setattr__(self, "horizontal", horizontal)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("LatticeState is immutable")

    def vertex_pattern(self, r: int, c: int) -> tuple[int, int, int, int]:
        """The (W, N, E, S) spins around vertex (r, c)."""
        return (self.horizontal[r][c], self.vertical[r][c],
                self.horizontal[r][c + 1], self.vertical[r + 1][c])

    def first_inadmissible(self) -> tuple[int, int] | None:
        """Coordinates of the first vertex violating admissibility, if any."""
        for r in range(self.boundary.n):
            for c in range(self.boundary.m):
                if not _admissible(self.boundary.kind, self.vertex_pattern(r, c)):
                    return r, c
        return None

    def to_json(self) -> dict:
        return {"lambda": list(self.boundary.lam),
                "kind": self.boundary.kind.value,
                "vertical": [list(row) for row in self.vertical],
                "horizontal": [list(row) for row in self.horizontal]}

    @classmethod
    def from_json(cls, data: dict) -> "LatticeState":
        boundary = BoundarySpec(IceKind(data["kind"]), tuple(data["lambda"]))
        return cls(boundary, data["vertical"], data["horizontal"])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LatticeState):
            return NotImplemented
        return (self.boundary == other.boundary
                and self.vertical == other.vertical
                and self.horizontal == other.horizontal)

    def __hash__(self) -> int:
        return hash((self.boundary, self.vertical, self.horizontal))

    def __repr__(self) -> str:
        return (f"LatticeState({self.boundary!r}, vertical={self.vertical}, "
                f"horizontal={self.horizontal})")


def _admissible(kind: IceKind, pattern: tuple[int, int, int, int]) -> bool:
    w, n, e, s = pattern
    return w * n * e * s == 1 and pattern not in _EXCLUDED[kind]


def _interleavers(row: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    """Strictly decreasing rows fitting under `row`, descending lex order."""
    def walk(p: int, ceiling: int, acc: tuple[int, ...]):
        if p == len(row) - 1:
            yield acc
            return
        for v in range(min(row[p], ceiling), row[p + 1] - 1, -1):
            yield from walk(p + 1, v - 1, acc + (v,))
    yield from walk(0, row[0], ())


def _strict_patterns(top: tuple[int, ...]) -> Iterator[tuple[tuple[int, ...], ...]]:
    if not top:
        yield ()
        return
    if len(top) == 1:
        yield (top,)
        return
    for nxt in _interleavers(top):
        for rest in _strict_patterns(nxt):
            yield (top,) + rest


def enumerate_states(b: BoundarySpec) -> Iterator[LatticeState]:
    """All states for the boundary, in strict-pattern lexicographic order.

    Guarded by the ICE_MAX_STATES environment variable (default 10^7).
    """
    limit = int(os.environ.get("ICE_MAX_STATES", str(_DEFAULT_MAX_STATES)))
    count = 0
    for rows in _strict_patterns(b.top_row()):
        count += 1
        if count > limit:
            raise RuntimeError(f"enumeration exceeded ICE_MAX_STATES={limit}")
        yield gt_to_state(GTPattern(rows), b)


def brute_force_states(b: BoundarySpec) -> Iterator[LatticeState]:
    """All states by exhaustive edge assignment with per-vertex pruning.

    Independent of the pattern bijection, so it serves as an oracle for
    enumerate_states; guarded to small grids.
    """
    if b.m > 8 or b.n > 4:
        raise ValueError(f"size guard exceeded: need columns <= 8 and rows <= 4, "
                         f"got {b.m} x {b.n}")

    def row_choices(n_row: tuple[int, ...], r: int):
        last = r == b.n - 1

        def walk(c: int, w: int, below: tuple[int, ...], lefts: tuple[int, ...]):
            if c == b.m:
                if w == b.right_spin:
                    yield below, lefts + (w,)
                return
            for s_spin in ((1,) if last else (1, -1)):
                e = w * n_row[c] * s_spin
                if _admissible(b.kind, (w, n_row[c], e, s_spin)):
                    yield from walk(c + 1, e, below + (s_spin,), lefts + (w,))

        yield from walk(0, b.left_spin, (), ())

    def extend(vrows: tuple[tuple[int, ...], ...], hrows: tuple[tuple[int, ...], ...]):
        r = len(vrows) - 1
        if r == b.n:
            yield LatticeState(b, vrows, hrows)
            return
        for below, hrow in row_choices(vrows[-1], r):
            yield from extend(vrows + (below,), hrows + (hrow,))

    yield from extend((b.top_row_spins(),), ())


@lru_cache(maxsize=None)
def _row_weights(kind: IceKind, n: int) -> dict[int, VertexWeights]:
    space = VarSpace(n)
    return {label: ice_weights(space, kind, label) for label in range(1, n + 1)}


def state_weight(s: LatticeState) -> Polynomial:
    """Product of vertex weights, row label i supplying (z_i, t_i)."""
    b = s.boundary
    by_label = _row_weights(b.kind, b.n)
    total = VarSpace(b.n).one()
    for r in range(b.n):
        w = by_label[b.row_label(r)]
        for c in range(b.m):
            pattern = s.vertex_pattern(r, c)
            if not _admissible(b.kind, pattern):
                raise ValueError(f"inadmissible vertex at row {r}, "
                                 f"column label {b.m - 1 - c}")
            total = total * getattr(w, _SLOT_BY_PATTERN[pattern])
    return total


def partition_function(b: BoundarySpec) -> Polynomial:
    """Exact sum of state weights over the whole ensemble."""
    return _partition_function(b.kind, b.lam)


@lru_cache(maxsize=None)
def _partition_function(kind: IceKind, lam: tuple[int, ...]) -> Polynomial:
    b = BoundarySpec(kind, lam)
    return poly_sum((state_weight(s) for s in enumerate_states(b)), VarSpace(b.n))


def state_to_gt(s: LatticeState) -> GTPattern:
    """Read off the - column labels in each row of vertical edges."""
    b = s.boundary
    labels = b.column_labels
    rows = tuple(
        tuple(sorted((label for label, spin in zip(labels, s.vertical[j])
                      if spin == -1), reverse=True))
        for j in range(b.n))
    return GTPattern(rows)


def gt_to_state(g: GTPattern, b: BoundarySpec) -> LatticeState:
    """Build the state whose vertical - spins sit at the pattern's entries."""
    if g.n != b.n:
        raise ValueError(f"pattern rank {g.n} does not match boundary rank {b.n}")
    if g.rows and g.rows[0] != b.top_row():
        raise ValueError(f"top row must be lambda + rho = {b.top_row()}")
    minus = [frozenset(row) for row in g.rows] + [frozenset()]
    labels = b.column_labels
    vertical = tuple(tuple(-1 if label in minus[j] else 1 for label in labels)
                     for j in range(b.n + 1))
    horizontal = []
    for r in range(b.n):
        w = b.left_spin
        row = [w]
        for c in range(b.m):
            w = w * vertical[r][c] * vertical[r + 1][c]
            row.append(w)
        horizontal.append(tuple(row))
    return LatticeState(b, vertical, tuple(horizontal))


def gt_row_sums(g: GTPattern) -> tuple[int, ...]:
    """The weight vector mu with mu_k = d_k - d_{k+1} for row sums d_k."""
    sums = [sum(row) for row in g.rows] + [0]
    return tuple(sums[k] - sums[k + 1] for k in range(g.n))


def tokuyama_sum(lam: Sequence[int], per_row_t: bool) -> Polynomial:
    """Deformed pattern sum over strict patterns with top row lambda + rho.

    Each pattern contributes prod_k z_k^(d_k - d_{k+1}) times one factor per
    entry below the top row: t for an entry equal to its upper-left
    neighbor, 1 for one equal to its upper-right neighbor, and t + 1
    otherwise.  Entries in pattern row k (1-based) draw t from the ice row
    above them, index k - 1; with per_row_t False every factor uses t_1.
    """
    lam = validate_partition(lam)
    n = len(lam)
    space = VarSpace(n)
    top = tuple(p + n - 1 - i for i, p in enumerate(lam))

    def term(rows: tuple[tuple[int, ...], ...]) -> Polynomial:
        sums = [sum(row) for row in rows] + [0]
        out = space.one()
        for k in range(n):
            out = out * space.z(k + 1, sums[k] - sums[k + 1])
        for j in range(1, n):
            t_var = space.t(j if per_row_t else 1)
            above, row = rows[j - 1], rows[j]
            for p, entry in enumerate(row):
                if entry == above[p]:
                    out = out * t_var
                elif entry != above[p + 1]:
                    out = out * (t_var + space.one())
        return out

    return poly_sum(map(term, _strict_patterns(top)), space)


def transfer_matrix(w: VertexWeights | PolyMatrix, n_cols: int) -> PolyMatrix:
    """Row-transfer matrix on n_cols columns with periodic horizontal edges.

    V[alpha, beta] sums over the 2^n_cols horizontal spin assignments the
    product of vertex weights, where alpha gives the top spins, beta the
    bottom spins, both big-endian with 0 for +.
    """
    if not 1 <= n_cols <= 6:
        raise ValueError(f"n_cols must be between 1 and 6, got {n_cols}")
    mat = w.end2() if isinstance(w, VertexWeights) else w
    if mat.size != 4:
        raise ValueError("vertex matrix must be 4x4")
    space = mat.space
    size = 1 << n_cols

    def bits(value: int) -> tuple[int, ...]:
        return tuple((value >> (n_cols - 1 - i)) & 1 for i in range(n_cols))

    rows = []
    for alpha in range(size):
        abits = bits(alpha)
        row = []
        for beta in range(size):
            bbits = bits(beta)
            total = space.zero()
            for eps in range(size):
                ebits = bits(eps)
                term = space.one()
                for i in range(n_cols):
                    term = term * mat[2 * ebits[(i + 1) % n_cols] + bbits[i],
                                      2 * ebits[i] + abits[i]]
                    if term.is_zero():
                        break
                total = total + term
            row.append(total)
        rows.append(row)
    return PolyMatrix(rows)
