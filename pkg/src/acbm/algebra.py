"""Frame conventions and fundamental-tensor computations for three-dimensional
real Lie algebras carrying an almost contact B-metric structure.

The ordered frame is (E0, E1, E2) with E0 the Reeb direction:

    phi(E0) = 0,  phi(E1) = E2,  phi(E2) = -E1,
    eta = (1, 0, 0),  g = diag(1, 1, -1).

Structure constants are stored only for the ordered pairs (0,1), (0,2) and
(1,2); antisymmetry is derived, never stored.  All relative tolerances in this
package are scaled by max(1, max-abs of the nine constants).

Two routes to the fundamental tensor F(x, y, z) = g((grad_x phi) y, z) are
provided: ``f_from_structure`` evaluates the direct closed-form component
formulas, and ``f_from_connection`` recomputes F from first principles through
the Levi-Civita connection of the left-invariant metric (Koszul formula with
constant metric coefficients on the frame).  Where the two disagree, the
connection route is ground truth; the discrepancy is recorded by the
verification report rather than silently patched.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

SIGNS = np.array([1.0, 1.0, -1.0])
METRIC = np.diag(SIGNS)
# column j is phi(E_j)
PHI = np.array([
    [0.0, 0.0, 0.0],
    [0.0, 0.0, -1.0],
    [0.0, 1.0, 0.0],
])
ETA = np.array([1.0, 0.0, 0.0])
XI_INDEX = 0

PAIRS = ((0, 1), (0, 2), (1, 2))


@dataclass
class StructureConstants:
    """Bracket coefficients [E_i, E_j] = sum_k C_ij^k E_k.

    c01[k] = C_01^k and so on.  Only the three ordered pairs are stored.
    """

    c01: np.ndarray
    c02: np.ndarray
    c12: np.ndarray

    def __post_init__(self):
        for name in ("c01", "c02", "c12"):
            v = np.asarray(getattr(self, name), dtype=float)
            if v.shape != (3,):
                raise ValueError(f"{name} must be a 3-vector, got shape {v.shape}")
            setattr(self, name, v)

    @classmethod
    def zero(cls):
        return cls(np.zeros(3), np.zeros(3), np.zeros(3))

    @classmethod
    def from_flat(cls, v):
        v = np.asarray(v, dtype=float)
        return cls(v[0:3], v[3:6], v[6:9])

    def flat(self):
        """The nine constants as one vector, pair order (01, 02, 12)."""
        return np.concatenate([self.c01, self.c02, self.c12])

    def full(self):
        """Full antisymmetric coefficient array c[i, j, k] = C_ij^k."""
        c = np.zeros((3, 3, 3))
        for (i, j), vec in zip(PAIRS, (self.c01, self.c02, self.c12)):
            c[i, j] = vec
            c[j, i] = -vec
        return c

    def pair(self, i, j):
        """C_ij as a vector, with antisymmetry applied for i > j."""
        if i == j:
            return np.zeros(3)
        if (i, j) in PAIRS:
            return (self.c01, self.c02, self.c12)[PAIRS.index((i, j))]
        return -self.pair(j, i)

    def is_finite(self):
        return bool(np.all(np.isfinite(self.flat())))

    def allclose(self, other, tol=0.0):
        d = np.max(np.abs(self.flat() - other.flat()))
        return d <= tol


def max_abs(C):
    return float(np.max(np.abs(C.flat())))


def scale_of(C):
    """Normalization used in every relative tolerance: max(1, max-abs)."""
    return max(1.0, max_abs(C))


def bracket(C, x, y):
    """[x, y] for coordinate vectors x, y on the frame.

    Expanded over the stored pairs so antisymmetry is exact: [x, x] is a
    bitwise zero vector, never a rounding residue.
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    return (
        (x[0] * y[1] - x[1] * y[0]) * C.c01
        + (x[0] * y[2] - x[2] * y[0]) * C.c02
        + (x[1] * y[2] - x[2] * y[1]) * C.c12
    )


@dataclass
class JacobiReport:
    ok: bool
    max_residual: float
    residuals: dict
    tol: float
    scale: float

    def __bool__(self):
        return self.ok


def validate_jacobi(C, tol=1e-9):
    """Check the Jacobi identity by brute-force cyclic-sum evaluation.

    Returns a JacobiReport; truthy iff the worst cyclic residual is at most
    tol * max(1, max-abs of the constants).  In dimension three the only index
    triple with three distinct entries is (0, 1, 2); triples with a repeated
    index vanish identically by antisymmetry.
    """
    if tol < 0:
        raise ValueError("tol must be nonnegative")
    if not C.is_finite():
        raise ValueError("structure constants contain non-finite entries")
    e = np.eye(3)
    res = (
        bracket(C, e[0], bracket(C, e[1], e[2]))
        + bracket(C, e[1], bracket(C, e[2], e[0]))
        + bracket(C, e[2], bracket(C, e[0], e[1]))
    )
    worst = float(np.max(np.abs(res)))
    scale = scale_of(C)
    return JacobiReport(
        ok=worst <= tol * scale,
        max_residual=worst,
        residuals={(0, 1, 2): res},
        tol=tol,
        scale=scale,
    )


def f_from_structure(C):
    """Fundamental tensor from the direct closed-form component formulas.

    The map is linear in C and needs no Jacobi validity.  Components not
    assigned below are zero; each assigned value fills an equal pair, so the
    symmetry F[i, j, k] = F[i, k, j] holds by construction.
    """
    c01, c02, c12 = C.c01, C.c02, C.c12
    F = np.zeros((3, 3, 3))
    F[1, 1, 1] = F[1, 2, 2] = 2.0 * c12[1]
    F[2, 1, 1] = F[2, 2, 2] = 2.0 * c12[2]
    F[1, 2, 0] = F[1, 0, 2] = -c01[1]
    F[0, 2, 0] = F[0, 0, 2] = -c01[0]
    F[2, 1, 0] = F[2, 0, 1] = -c02[2]
    F[0, 1, 0] = F[0, 0, 1] = c02[0]
    F[1, 1, 0] = F[1, 0, 1] = 0.5 * (c12[0] - c01[2] + c02[1])
    F[2, 2, 0] = F[2, 0, 2] = 0.5 * (c12[0] + c01[2] - c02[1])
    F[0, 1, 1] = F[0, 2, 2] = c12[0] + c01[2] + c02[1]
    return F


@dataclass
class LeeForms:
    """Components of the three Lee forms on the frame; omega[0] is always 0."""

    theta: np.ndarray
    theta_star: np.ndarray
    omega: np.ndarray


def lee_forms(C):
    """Lee forms from the direct linear formulas in the structure constants."""
    c01, c02, c12 = C.c01, C.c02, C.c12
    return LeeForms(
        theta=np.array([-c01[2] + c02[1], 2.0 * c12[1], -2.0 * c12[2]]),
        theta_star=np.array([-c01[1] - c02[2], 2.0 * c12[2], 2.0 * c12[1]]),
        omega=np.array([0.0, c02[0], -c01[0]]),
    )


def lee_forms_from_tensor(F):
    """Lee forms by componentwise contraction of a fundamental tensor.

    This is the independent evaluation route used to cross-check lee_forms and
    to read Lee forms off the connection-derived tensor.
    """
    return LeeForms(
        theta=np.array([
            F[1, 1, 0] - F[2, 2, 0],
            F[1, 1, 1] - F[2, 2, 1],
            F[1, 1, 2] - F[2, 1, 1],
        ]),
        theta_star=np.array([
            F[1, 2, 0] + F[2, 1, 0],
            F[1, 1, 2] + F[2, 1, 1],
            F[1, 1, 1] + F[2, 2, 1],
        ]),
        omega=np.array([0.0, F[0, 0, 1], F[0, 0, 2]]),
    )


def levi_civita(C, tol=1e-9):
    """Connection coefficients gamma[i, j, k] of E_k in grad_{E_i} E_j.

    For left-invariant fields the metric pairings are constant, so the Koszul
    identity reduces to bracket terms only:

        2 g(grad_X Y, Z) = g([X,Y],Z) - g([Y,Z],X) + g([Z,X],Y).

    A non-Lie C has no group and hence no left-invariant connection, so Jacobi
    validity is enforced first.
    """
    rep = validate_jacobi(C, tol)
    if not rep:
        raise ValueError(
            "structure constants violate the Jacobi identity "
            f"(max residual {rep.max_residual:.3e}, tolerance {tol:g} * {rep.scale:g})"
        )
    c = C.full()
    e = SIGNS
    gamma = np.zeros((3, 3, 3))
    for i in range(3):
        for j in range(3):
            for k in range(3):
                gamma[i, j, k] = 0.5 * (
                    c[i, j, k] - e[i] * e[k] * c[j, k, i] + e[j] * e[k] * c[k, i, j]
                )
    return gamma


def f_from_connection(C, tol=1e-9):
    """Fundamental tensor recomputed from the Levi-Civita connection.

    F[i, j, k] = g((grad_i phi) E_j, E_k) with
    (grad_X phi) Y = grad_X (phi Y) - phi(grad_X Y) expanded on the frame.
    Serves as ground truth wherever it disagrees with f_from_structure.
    """
    gamma = levi_civita(C, tol)
    t1 = np.einsum("mj,imk->ijk", PHI, gamma)
    t2 = np.einsum("km,ijm->ijk", PHI, gamma)
    return SIGNS[None, None, :] * (t1 - t2)


def change_basis(C, P):
    """Structure constants of the same algebra in the frame with columns P.

    New frame vectors are the columns of P expressed in the old frame.  The
    result of a valid input stays Jacobi-valid, which makes this the natural
    generator of random Lie-algebra constants from known ones.
    """
    P = np.asarray(P, dtype=float)
    Pinv = np.linalg.inv(P)
    cols = [P[:, i] for i in range(3)]
    vecs = [Pinv @ bracket(C, cols[i], cols[j]) for i, j in PAIRS]
    return StructureConstants(*vecs)


def derived_dimensions(C, tol=1e-9):
    """Dimensions of the derived algebra and of its own derived algebra."""
    scale = scale_of(C)
    rows = np.array([C.c01, C.c02, C.c12])
    d1 = int(np.linalg.matrix_rank(rows, tol=tol * scale))
    if d1 == 0:
        return 0, 0
    # orthonormal basis of the derived algebra from the right singular vectors
    _, _, vt = np.linalg.svd(rows)
    basis = vt[: d1]
    brackets = [
        bracket(C, basis[i], basis[j])
        for i in range(d1)
        for j in range(i + 1, d1)
    ]
    if not brackets:
        return d1, 0
    d2 = int(np.linalg.matrix_rank(np.array(brackets), tol=tol * scale))
    return d1, d2
