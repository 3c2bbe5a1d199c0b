"""Tensor lifts, the Yang-Baxter commutator, and the verification suite.

The commutator of three endomorphisms of V (x) V is the 8x8 matrix

    [[R, S, T]] = R_12 S_13 T_23 - T_23 S_13 R_12

acting on V (x) V (x) V; identities hold exactly when every entry is the
zero polynomial.  This module also verifies projective triangularity
R_XY(i,j) P R_YX(j,i) P = c * I and the eight axioms of a parametrized
Yang-Baxter system built from the R-matrix families.
"""

from __future__ import annotations

import itertools
from typing import Callable

from .matrix import PolyMatrix
from .poly import ONE, ZERO, GaussianRational, Polynomial, VarSpace
from .weights import IceKind, VertexWeights, ice_weights, r_weights_params

Family = Callable[[Polynomial, Polynomial, Polynomial, Polynomial], PolyMatrix]

_SLOTS = ("12", "13", "23")


def lift(phi: PolyMatrix, slot: str) -> PolyMatrix:
    """Extend a 4x4 endomorphism of V (x) V to V^3, identity on the omitted factor."""
    if phi.size != 4:
        raise ValueError("lift expects a 4x4 matrix")
    if slot not in _SLOTS:
        raise ValueError(f"slot must be one of {_SLOTS}")
    zero = phi.space.zero()
    out = [[zero] * 8 for _ in range(8)]
    for a, b, c in itertools.product(range(2), repeat=3):
        row = 4 * a + 2 * b + c
        for ap, bp, cp in itertools.product(range(2), repeat=3):
            col = 4 * ap + 2 * bp + cp
            if slot == "12" and c == cp:
                out[row][col] = phi[2 * a + b, 2 * ap + bp]
            elif slot == "13" and b == bp:
                out[row][col] = phi[2 * a + c, 2 * ap + cp]
            elif slot == "23" and a == ap:
                out[row][col] = phi[2 * b + c, 2 * bp + cp]
    return PolyMatrix(out)


def yb_commutator(r: PolyMatrix, s: PolyMatrix, t: PolyMatrix) -> PolyMatrix:
    """The 8x8 difference R_12 S_13 T_23 - T_23 S_13 R_12."""
    r12, s13, t23 = lift(r, "12"), lift(s, "13"), lift(t, "23")
    return r12 @ s13 @ t23 - t23 @ s13 @ r12


def star_triangle_sides(r: PolyMatrix, s: PolyMatrix, t: PolyMatrix,
                        sigma: int, tau: int, beta: int,
                        theta: int, rho: int, alpha: int,
                        ) -> tuple[Polynomial, Polynomial]:
    """Both sides of the star-triangle identity as explicit index sums.

    Spins are 0 for + and 1 for -; a weight W_{xy}^{uv} is the matrix entry
    W[2u+v, 2x+y].  For the fixed outer spins the two sides are

        sum over gamma, mu, nu of R_{sigma tau}^{nu mu} S_{nu beta}^{theta gamma}
            T_{mu gamma}^{rho alpha}
        sum over delta, phi, psi of T_{tau beta}^{psi delta} S_{sigma delta}^{phi alpha}
            R_{phi psi}^{theta rho}

    and the ((theta,rho,alpha), (sigma,tau,beta)) entry of [[R, S, T]]
    equals the second sum minus the first.
    """
    space = r.space
    lhs = space.zero()
    rhs = space.zero()
    for g, m, n in itertools.product(range(2), repeat=3):
        lhs = lhs + (r[2 * n + m, 2 * sigma + tau]
                     * s[2 * theta + g, 2 * n + beta]
                     * t[2 * rho + alpha, 2 * m + g])
    for d, f, p in itertools.product(range(2), repeat=3):
        rhs = rhs + (t[2 * p + d, 2 * tau + beta]
                     * s[2 * f + alpha, 2 * sigma + d]
                     * r[2 * theta + rho, 2 * f + p])
    return lhs, rhs


def swap_matrix(space: VarSpace) -> PolyMatrix:
    """The permutation P of V (x) V exchanging the two factors."""
    one, zero = space.one(), space.zero()
    return PolyMatrix([
        [one, zero, zero, zero],
        [zero, zero, one, zero],
        [zero, one, zero, zero],
        [zero, zero, zero, one]])


def r_family(x: IceKind, y: IceKind) -> Family:
    """The (x, y) R-matrix as a function of two full parameter pairs."""
    def fam(za, ta, zb, tb):
        return r_weights_params(x, y, za, ta, zb, tb).end2()
    return fam


def ddagger(family: Family) -> Family:
    """The dagger-swap of a family: X^dd(z1,t1,z2,t2) = P X(z2,t2,z1,t1) P."""
    def fam(za, ta, zb, tb):
        m = family(zb, tb, za, ta)
        p = swap_matrix(m.space)
        return p @ m @ p
    return fam


def hatted(family: Family) -> Family:
    """The hat-swap of a family: exchanges the z parameters but not the t."""
    def fam(za, ta, zb, tb):
        return family(zb, ta, za, tb)
    return fam


def report(check: str, residual: PolyMatrix) -> dict:
    """A verification report: pass iff the residual matrix is identically zero."""
    bad = residual.nonzero_entries()
    return {"check": check,
            "status": "pass" if not bad else "fail",
            "witness": None if not bad else bad[0][2].to_json()}


def check_ice_commutator(x: IceKind, y: IceKind) -> dict:
    """Verifies [[R_XY(1,2), X(1), Y(2)]] = 0 symbolically."""
    space = VarSpace(2)
    r = r_weights_params(x, y, space.z(1), space.t(1), space.z(2), space.t(2))
    residual = yb_commutator(r.end2(),
                             ice_weights(space, x, 1).end2(),
                             ice_weights(space, y, 2).end2())
    return report(f"ice-commutator {x.value},{y.value}", residual)


def check_parametrized_ybe(x: IceKind, y: IceKind, z: IceKind,
                           hat: bool = False) -> dict:
    """Verifies [[R_XY(1,2), R_XZ(1,3), R_YZ(2,3)]] = 0, plainly or hatted."""
    space = VarSpace(3)
    pairs = [(space.z(k), space.t(k)) for k in (1, 2, 3)]
    fams = [r_family(x, y), r_family(x, z), r_family(y, z)]
    if hat:
        fams = [hatted(f) for f in fams]
    f12 = fams[0](*pairs[0], *pairs[1])
    g13 = fams[1](*pairs[0], *pairs[2])
    h23 = fams[2](*pairs[1], *pairs[2])
    residual = yb_commutator(f12, g13, h23)
    tag = " hatted" if hat else ""
    return report(f"ybe {x.value},{y.value},{z.value}{tag}", residual)


def check_triangularity(x: IceKind, y: IceKind) -> Polynomial:
    """The scalar c with R_XY(1,2) P R_YX(2,1) P = c * I; errors if not scalar."""
    space = VarSpace(2)
    fwd = r_weights_params(x, y, space.z(1), space.t(1), space.z(2), space.t(2))
    rev = r_weights_params(y, x, space.z(2), space.t(2), space.z(1), space.t(1))
    p = swap_matrix(space)
    product = fwd.end2() @ p @ rev.end2() @ p
    scalar = product.scalar_value()
    if scalar is None:
        raise ValueError(f"product is not scalar: {product!r}")
    return scalar


# Matrix positions of the six type-C weights a1, a2, b1, b2, c1, c2.
_TYPE_C_POSITIONS = ((0, 0), (3, 3), (1, 1), (2, 2), (1, 2), (2, 1))


def r_solution_space(s: VertexWeights, t: VertexWeights,
                     ) -> list[tuple[GaussianRational, ...]]:
    """Basis of the type-C weight vectors (a1,a2,b1,b2,c1,c2) solving
    [[R, S, T]] = 0 for constant S and T.

    The commutator is linear in the weights of R, so the solutions form the
    nullspace of a 64x6 linear system; admissible R-matrices need nonzero
    c1 and c2, so an all-solutions basis with vanishing c-slots certifies
    that no admissible R exists.
    """
    space = s.space
    if t.space != space:
        raise ValueError("S and T span different variable spaces")
    s2, t2 = s.end2(), t.end2()
    zero, one = space.zero(), space.one()
    columns = []
    for pr, pc in _TYPE_C_POSITIONS:
        rows = [[one if (r, c) == (pr, pc) else zero for c in range(4)]
                for r in range(4)]
        comm = yb_commutator(PolyMatrix(rows), s2, t2)
        columns.append([comm[r, c].constant_value()
                        for r in range(8) for c in range(8)])
    system = [[columns[k][row] for k in range(6)] for row in range(64)]
    return _nullspace(system)


def _nullspace(rows: list[list[GaussianRational]],
               ) -> list[tuple[GaussianRational, ...]]:
    """Basis of the right nullspace by exact Gauss-Jordan elimination."""
    width = len(rows[0])
    work = [list(r) for r in rows if any(r)]
    pivots: list[int] = []
    rank = 0
    for col in range(width):
        pivot = next((i for i in range(rank, len(work)) if work[i][col]), None)
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        scale = work[rank][col]
        work[rank] = [v / scale for v in work[rank]]
        for i, row in enumerate(work):
            if i != rank and row[col]:
                factor = row[col]
                work[i] = [v - factor * p for v, p in zip(row, work[rank])]
        pivots.append(col)
        rank += 1
    basis = []
    for free in (c for c in range(width) if c not in pivots):
        vec = [ZERO] * width
        vec[free] = ONE
        for i, pc in enumerate(pivots):
            vec[pc] = -work[i][free]
        basis.append(tuple(vec))
    return basis


_AXIOMS = (("A", "A", "A"), ("D", "D", "D"),
           ("A", "C", "C"), ("D", "B", "B"),
           ("A", "B^dd", "B^dd"), ("D", "C^dd", "C^dd"),
           ("A", "C", "B^dd"), ("D", "B", "C^dd"))


def check_yb_system(x: IceKind, y: IceKind, hat: bool = False) -> list[dict]:
    """Verifies the eight Yang-Baxter system axioms for A = R_XX, C = B^dd = R_XY,
    D = R_YY^dd, with every family hat-swapped when requested."""
    space = VarSpace(3)
    pairs = [(space.z(k), space.t(k)) for k in (1, 2, 3)]
    wrap = hatted if hat else (lambda f: f)
    a = wrap(r_family(x, x))
    c = wrap(r_family(x, y))
    b = ddagger(c)
    d = ddagger(wrap(r_family(y, y)))
    roles = {"A": a, "B": b, "C": c, "D": d,
             "B^dd": ddagger(b), "C^dd": ddagger(c)}
    tag = " hatted" if hat else ""
    out = []
    for f, g, h in _AXIOMS:
        residual = yb_commutator(roles[f](*pairs[0], *pairs[1]),
                                 roles[g](*pairs[0], *pairs[2]),
                                 roles[h](*pairs[1], *pairs[2]))
        out.append(report(
            f"yb-system {x.value},{y.value}{tag} [[{f},{g},{h}]]", residual))
    return out
