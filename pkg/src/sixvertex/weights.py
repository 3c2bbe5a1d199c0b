"""Boltzmann weight systems and the group law on free-fermionic R-matrices.

A vertex system is eight polynomials (a1, a2, b1, b2, c1, c2, d1, d2)
arranged as the endomorphism

    [a1  0   0  d1]
    [0   b1  c1  0]
    [0   c2  b2  0]
    [d2  0   0  a2]

of V (x) V in the basis ++, +-, -+, --.  Type C has d1 = d2 = 0 and
c1*c2 != 0; type D has c1 = c2 = 0 and d1*d2 != 0.  The pi map linearizes
composition: pi(compose(R, T)) = pi(R) @ pi(T), with the four type-pair
case tables C.C -> C, C.D -> D, D.C -> D, D.D -> C.

Two printed sources for the Delta-Delta weights disagree on which entries
carry the c-type values; the entries used here are the ones that make the
Yang-Baxter commutator with two Delta vertices vanish identically, which
pins the layout uniquely.
"""

from __future__ import annotations

import enum
import random
from fractions import Fraction

from .matrix import PolyMatrix
from .poly import GaussianRational, IMAG, Polynomial, VarSpace


class IceKind(str, enum.Enum):
    GAMMA = "gamma"
    DELTA = "delta"


class VertexWeights:
    """Eight Boltzmann weights with a type-C or type-D classification."""

    __slots__ = ("a1", "a2", "b1", "b2", "c1", "c2", "d1", "d2", "kind")

    _FIELDS = ("a1", "a2", "b1", "b2", "c1", "c2", "d1", "d2")

    def __init__(self, a1, a2, b1, b2, c1, c2, d1, d2):
        values = (a1, a2, b1, b2, c1, c2, d1, d2)
        space = a1.space
        for v in values:
            if v.space != space:
                raise ValueError("weights span multiple variable spaces")
        if c1.is_zero() and c2.is_zero() and not d1.is_zero() and not d2.is_zero():
            kind = "D"
        elif d1.is_zero() and d2.is_zero() and not c1.is_zero() and not c2.is_zero():
            kind = "C"
        else:
            raise ValueError("weights are neither type C nor type D")
        for name, v in zip(self._FIELDS, values):
            object.__setattr__(self, name, v)
        object.__setattr__(self, "kind", kind)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("VertexWeights is immutable")

    @classmethod
    def type_c(cls, a1, a2, b1, b2, c1, c2) -> "VertexWeights":
        zero = a1.space.zero()
        return cls(a1, a2, b1, b2, c1, c2, zero, zero)

    @classmethod
    def type_d(cls, a1, a2, b1, b2, d1, d2) -> "VertexWeights":
        zero = a1.space.zero()
        return cls(a1, a2, b1, b2, zero, zero, d1, d2)

    @property
    def space(self) -> VarSpace:
        return self.a1.space

    def end2(self) -> PolyMatrix:
        zero = self.space.zero()
        return PolyMatrix([
            [self.a1, zero, zero, self.d1],
            [zero, self.b1, self.c1, zero],
            [zero, self.c2, self.b2, zero],
            [self.d2, zero, zero, self.a2]])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, VertexWeights):
            return NotImplemented
        return all(getattr(self, f) == getattr(other, f) for f in self._FIELDS)

    def __hash__(self) -> int:
        return hash(tuple(getattr(self, f) for f in self._FIELDS))

    def __repr__(self) -> str:
        hidden = "d" if self.kind == "C" else "c"
        body = ", ".join(f"{f}={getattr(self, f)}"
                         for f in self._FIELDS if f[0] != hidden)
        return f"<VertexWeights type {self.kind}: {body}>"

    def to_json(self) -> dict:
        data = {"type": self.kind}
        data.update({f: getattr(self, f).to_json() for f in self._FIELDS})
        return data

    @classmethod
    def from_json(cls, data: dict) -> "VertexWeights":
        w = cls(*(Polynomial.from_json(data[f]) for f in cls._FIELDS))
        if w.kind != data["type"]:
            raise ValueError(f"declared type {data['type']} but weights are type {w.kind}")
        return w


def gamma(space: VarSpace, i: int) -> VertexWeights:
    """Gamma ice weights for lattice row i: (1, z, t, z, z(t+1), 1)."""
    z, t = space.z(i), space.t(i)
    one = space.one()
    return VertexWeights.type_c(one, z, t, z, z * (t + 1), one)


def delta(space: VarSpace, i: int) -> VertexWeights:
    """Delta ice weights for lattice row i: (z, 1, zt, 1; d1=1, d2=z(t+1))."""
    z, t = space.z(i), space.t(i)
    one = space.one()
    return VertexWeights.type_d(z, one, z * t, one, one, z * (t + 1))


def r_weights_params(x: IceKind, y: IceKind,
                     za: Polynomial, ta: Polynomial,
                     zb: Polynomial, tb: Polynomial) -> VertexWeights:
    """R-matrix weights for the (x, y) family at parameter pairs (za, ta), (zb, tb)."""
    if x == IceKind.GAMMA and y == IceKind.GAMMA:
        return VertexWeights.type_c(
            zb + tb * za, za + ta * zb,
            ta * zb - tb * za, za - zb,
            za * (ta + 1), zb * (tb + 1))
    if x == IceKind.DELTA and y == IceKind.DELTA:
        return VertexWeights.type_c(
            za * ta + zb, zb * tb + za,
            za - zb, zb * tb - za * ta,
            zb * tb + zb, za * ta + za)
    if x == IceKind.GAMMA and y == IceKind.DELTA:
        return VertexWeights.type_d(
            -za + ta * tb * zb, za - zb,
            zb * tb + za, zb * ta + za,
            za * ta + za, zb * tb + zb)
    return VertexWeights.type_d(
        za - zb, zb - ta * tb * za,
        za * ta + zb, za * tb + zb,
        zb * tb + zb, za * ta + za)


def r_weights(space: VarSpace, x: IceKind, y: IceKind, i: int, j: int) -> VertexWeights:
    """R-matrix weights attaching rows i and j: r_weights_params at (z_i,t_i), (z_j,t_j)."""
    if i == j:
        raise ValueError(f"row indices must differ, got i = j = {i}")
    return r_weights_params(x, y, space.z(i), space.t(i), space.z(j), space.t(j))


def ice_weights(space: VarSpace, kind: IceKind, i: int) -> VertexWeights:
    return gamma(space, i) if kind == IceKind.GAMMA else delta(space, i)


def free_fermion(w: VertexWeights) -> Polynomial:
    """The residual a1 a2 + b1 b2 - c1 c2 - d1 d2; zero on the free-fermion locus."""
    return w.a1 * w.a2 + w.b1 * w.b2 - w.c1 * w.c2 - w.d1 * w.d2


def pi_map(w: VertexWeights) -> PolyMatrix:
    """The 4x4 linearization under which compose becomes matrix multiplication."""
    zero = w.space.zero()
    if w.kind == "C":
        return PolyMatrix([
            [w.c1, zero, zero, zero],
            [zero, w.a1, w.b2, zero],
            [zero, -w.b1, w.a2, zero],
            [zero, zero, zero, w.c2]])
    i = IMAG
    return PolyMatrix([
        [zero, zero, zero, w.d1],
        [zero, w.a2 * i, -(w.b1 * i), zero],
        [zero, w.b2 * i, w.a1 * i, zero],
        [w.d2, zero, zero, zero]])


def delta_invariants(w: VertexWeights) -> tuple[tuple[Polynomial, Polynomial],
                                                tuple[Polynomial, Polynomial]]:
    """The two anisotropy invariants of a type-C system, as unreduced ratios.

    Returns ((num, 2*a1*b1), (num, 2*a2*b2)) with num = a1 a2 + b1 b2 - c1 c2.
    Ratios stay unreduced; compare them by cross-multiplication.
    """
    if w.kind != "C":
        raise ValueError("invariants are defined for type-C weights")
    den1 = 2 * (w.a1 * w.b1)
    den2 = 2 * (w.a2 * w.b2)
    if den1.is_zero() or den2.is_zero():
        raise ZeroDivisionError("invariant denominator vanishes")
    num = w.a1 * w.a2 + w.b1 * w.b2 - w.c1 * w.c2
    return (num, den1), (num, den2)


def invariants_match(s: VertexWeights, t: VertexWeights) -> tuple[Polynomial, Polynomial]:
    """Cross-multiplied residuals of both invariant equalities; zero means match."""
    (n_s, d1_s), (_, d2_s) = delta_invariants(s)
    (n_t, d1_t), (_, d2_t) = delta_invariants(t)
    return n_s * d1_t - n_t * d1_s, n_s * d2_t - n_t * d2_s


def compose(r: VertexWeights, t: VertexWeights) -> VertexWeights:
    """The group law: weights s with pi_map(s) = pi_map(r) @ pi_map(t).

    Both factors must be free-fermionic with a1 a2 + b1 b2 != 0.  The result
    type follows the index-two pattern C.C -> C, C.D -> D, D.C -> D, D.D -> C.
    """
    for w in (r, t):
        if not free_fermion(w).is_zero():
            raise ValueError("compose requires free-fermionic weights")
        if (w.a1 * w.a2 + w.b1 * w.b2).is_zero():
            raise ValueError("compose requires a1 a2 + b1 b2 != 0")
    if r.kind == "C" and t.kind == "C":
        return VertexWeights.type_c(
            r.a1 * t.a1 - r.b2 * t.b1,
            r.a2 * t.a2 - r.b1 * t.b2,
            r.b1 * t.a1 + r.a2 * t.b1,
            r.a1 * t.b2 + r.b2 * t.a2,
            r.c1 * t.c1,
            r.c2 * t.c2)
    if r.kind == "C" and t.kind == "D":
        return VertexWeights.type_d(
            r.a2 * t.a1 + r.b1 * t.b1,
            r.a1 * t.a2 + r.b2 * t.b2,
            r.a1 * t.b1 - r.b2 * t.a1,
            r.a2 * t.b2 - r.b1 * t.a2,
            r.c1 * t.d1,
            r.c2 * t.d2)
    if r.kind == "D" and t.kind == "C":
        return VertexWeights.type_d(
            r.a1 * t.a2 + r.b2 * t.b2,
            r.a2 * t.a1 + r.b1 * t.b1,
            r.b1 * t.a2 - r.a2 * t.b2,
            r.b2 * t.a1 - r.a1 * t.b1,
            r.d1 * t.c2,
            r.d2 * t.c1)
    return VertexWeights.type_c(
        r.b1 * t.b2 - r.a2 * t.a2,
        r.b2 * t.b1 - r.a1 * t.a1,
        r.b2 * t.a2 + r.a1 * t.b2,
        r.b1 * t.a1 + r.a2 * t.b1,
        r.d1 * t.d2,
        r.d2 * t.d1)


def inverse_scaled(w: VertexWeights) -> tuple[VertexWeights, Polynomial]:
    """A division-free inverse through pi: pi(inv) @ pi(w) = scalar * identity.

    The scalar is c1 c2 for type C and -(d1 d2) for type D; staying inside
    the polynomial ring costs this projective factor.
    """
    if w.kind == "C":
        inv = VertexWeights.type_c(w.a2, w.a1, -w.b1, -w.b2, w.c2, w.c1)
        return inv, w.c1 * w.c2
    inv = VertexWeights.type_d(w.a2, w.a1, -w.b1, -w.b2, -w.d1, -w.d2)
    return inv, -(w.d1 * w.d2)


def solve_R_from_ST(s: VertexWeights, t: VertexWeights) -> VertexWeights:
    """Construct type-C weights r with vanishing Yang-Baxter commutator [[r, s, t]].

    Requires all twelve weights of s and t nonzero and both invariant
    equalities (cross-multiplied).  Each of a1(r) and a2(r) has two printed
    forms whose agreement is exactly the invariant matching; both are
    computed and compared.  Divisions must stay in the polynomial ring.
    """
    for name, w in (("s", s), ("t", t)):
        if w.kind != "C":
            raise ValueError(f"{name} must be type C")
        for f in ("a1", "a2", "b1", "b2", "c1", "c2"):
            if getattr(w, f).is_zero():
                raise ValueError(f"{name}.{f} must be nonzero")
    res1, res2 = invariants_match(s, t)
    if res1 or res2:
        raise ValueError(f"invariant mismatch, residuals {res1} and {res2}")
    a1 = (s.b2 * t.a1 * t.b1 - s.a1 * t.b1 * t.b2 + s.a1 * t.c1 * t.c2).exact_div(t.a1)
    a1_alt = (s.a1 * s.b1 * t.a2 - s.a1 * s.a2 * t.b1 + s.c1 * s.c2 * t.b1).exact_div(s.b1)
    a2 = (s.b1 * t.a2 * t.b2 - s.a2 * t.b1 * t.b2 + s.a2 * t.c1 * t.c2).exact_div(t.a2)
    a2_alt = (s.a2 * s.b2 * t.a1 - s.a1 * s.a2 * t.b2 + s.c1 * s.c2 * t.b2).exact_div(s.b2)
    if a1 != a1_alt or a2 != a2_alt:
        raise ValueError("the two printed forms disagree; invariants do not match")
    return VertexWeights.type_c(
        a1, a2,
        s.b1 * t.a2 - s.a2 * t.b1,
        s.b2 * t.a1 - s.a1 * t.b2,
        s.c1 * t.c2,
        s.c2 * t.c1)


def _random_nonzero(rng: random.Random, space: VarSpace) -> Polynomial:
    num = rng.choice([k for k in range(-9, 10) if k])
    return space.const(Fraction(num, rng.randint(1, 9)))


def random_free_fermionic(kind: str, rng: random.Random,
                          space: VarSpace | None = None) -> VertexWeights:
    """Random constant free-fermionic weights of the given kind ("C" or "D").

    Five slots are drawn as small nonzero rationals and the last is solved
    from a1 a2 + b1 b2 = c1 c2 (or d1 d2), resampling when it degenerates.
    """
    if kind not in ("C", "D"):
        raise ValueError(f"kind must be 'C' or 'D', not {kind!r}")
    space = space if space is not None else VarSpace(0)
    while True:
        a1, a2, b1, b2, e1 = (_random_nonzero(rng, space) for _ in range(5))
        numerator = a1 * a2 + b1 * b2
        if numerator.is_zero():
            continue
        e2 = numerator.exact_div(e1)
        if kind == "C":
            return VertexWeights.type_c(a1, a2, b1, b2, e1, e2)
        return VertexWeights.type_d(a1, a2, b1, b2, e1, e2)


def _random_type_c(rng: random.Random, space: VarSpace) -> VertexWeights:
    """Random type-C weights with all six slots nonzero; no other relation."""
    return VertexWeights.type_c(*(_random_nonzero(rng, space) for _ in range(6)))


def random_matched_pair(rng: random.Random,
                        ) -> tuple[VertexWeights, VertexWeights]:
    """Random type-C pair (s, t) sharing both anisotropy invariants.

    Draws s freely (resampling while its invariants vanish, since the t
    construction divides by them), then solves t's b2 and c2 so that the
    invariant pair of t equals that of s; all twelve weights come out
    nonzero.
    """
    space = VarSpace(0)
    while True:
        s = _random_type_c(rng, space)
        (num_s, den1_s), (_, den2_s) = delta_invariants(s)
        if num_s.is_zero():
            continue
        a1, a2, b1, c1 = (_random_nonzero(rng, space) for _ in range(4))
        # Delta_1(t) = Delta_1(s) and Delta_2(t) = Delta_2(s) force:
        #   b2 = Delta_1(s) a1 b1 / Delta_2(s) a2
        #   c1 c2 = a1 a2 + b1 b2 - 2 Delta_1(s) a1 b1
        b2_num = num_s * den2_s * a1 * b1
        b2_den = num_s * den1_s * a2
        b2 = space.const(b2_num.constant_value() / b2_den.constant_value())
        if b2.is_zero():
            continue
        cc = a1 * a2 + b1 * b2 - (num_s * a1 * b1).exact_div(den1_s) * space.const(2)
        if cc.is_zero():
            continue
        c2 = cc.exact_div(c1)
        t = VertexWeights.type_c(a1, a2, b1, b2, c1, c2)
        res1, res2 = invariants_match(s, t)
        if res1.is_zero() and res2.is_zero():
            return s, t


def random_mismatched_pair(rng: random.Random,
                           ) -> tuple[VertexWeights, VertexWeights]:
    """Random type-C pair (s, t) whose anisotropy invariants differ."""
    space = VarSpace(0)
    while True:
        s = _random_type_c(rng, space)
        t = _random_type_c(rng, space)
        res1, res2 = invariants_match(s, t)
        if not (res1.is_zero() and res2.is_zero()):
            return s, t
