"""Matrix representations and closed-form exponentials for the basic classes.

Every class representation A(a, b, c) satisfies a two-term minimal-polynomial
family, so its exponential truncates to e^A = E + t A + u A^2:

    quadratic  A^2 = tau A      for F1, F5, F11   (tau the nonzero eigenvalue)
    cubic      A^3 = kappa A    for F4, F8, F9, F10  (kappa = tr(A^2) / 2)

Coefficients come in two modes.  mode="corrected" derives (t, u) from the
family above and is the only mode verification asserts on.  mode="printed"
evaluates the classical tabulated formulas verbatim, several of which carry
sign or argument slips; keeping them evaluable is what lets the verification
sweep document exactly which table cells are damaged.

Branch handling: the tabulated formulas are 0/0 at tau = 0 or kappa = 0.  An
exact zero takes the dedicated zero branch; a nonzero branch scalar below
1e-6 * scale^2 routes corrected mode to a four-term series fallback, where
scale = max(1, frobenius(A)).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .classify import BASIC_CLASSES

# tau = factor * tr(A) for the quadratic-family classes
_QUAD_TAU_FACTOR = {"F1": 1.0, "F5": 0.5, "F11": 1.0}
_CUBIC = ("F4", "F8", "F9", "F10")

BRANCH_EPS = 1e-6
FAMILY_TOL = 1e-10

BRANCH_TAGS = (
    "trace-zero",
    "trace-nonzero",
    "trsq-negative",
    "trsq-zero",
    "trsq-positive",
    "series-fallback",
)


class FamilyViolationError(ValueError):
    """The matrix does not satisfy the class's minimal-polynomial family."""


def _frob(A):
    return float(np.linalg.norm(A))


def basis_matrices(C):
    """The three representation matrices (M0, M1, M2) with M_i[j, k] = -C_ij^k.

    Row index j, column index k; this is the convention under which the
    combination a*M1 + b*M2 + c*M0 reproduces every class template of
    table1_matrix when C is the matching canonical algebra.
    """
    c = C.full()
    return -c[0], -c[1], -c[2]


def table1_matrix(s, alpha, beta, a, b, c):
    """Class representation matrix A(a, b, c) with parameters (alpha, beta).

    Trace identities (used for branch selection downstream):
      F1: tr A = alpha*b - beta*a        F4: tr A^2 = -2 alpha^2 c^2
      F5: tr A = -2 alpha*c              F8: tr A^2 = 2 alpha^2 (2a^2 - 2b^2 + c^2)
      F9, F10: tr A^2 = 2 alpha^2 c^2    F11: tr A = alpha*a + beta*b
    """
    al = float(alpha)
    bt = float(beta)
    a = float(a)
    b = float(b)
    c = float(c)
    if s == "F1":
        rows = [[0.0, 0.0, 0.0], [0.0, al * b, bt * b], [0.0, -al * a, -bt * a]]
    elif s == "F4":
        rows = [[0.0, -al * b, al * a], [0.0, 0.0, -al * c], [0.0, al * c, 0.0]]
    elif s == "F5":
        rows = [[0.0, al * a, al * b], [0.0, -al * c, 0.0], [0.0, 0.0, -al * c]]
    elif s == "F8":
        rows = [[0.0, al * b, al * a], [-2.0 * al * b, 0.0, -al * c], [2.0 * al * a, -al * c, 0.0]]
    elif s == "F9":
        rows = [[0.0, al * a, -al * b], [0.0, -al * c, 0.0], [0.0, 0.0, al * c]]
    elif s == "F10":
        rows = [[0.0, al * b, al * a], [0.0, 0.0, -al * c], [0.0, -al * c, 0.0]]
    elif s == "F11":
        rows = [[al * a + bt * b, 0.0, 0.0], [-al * c, 0.0, 0.0], [-bt * c, 0.0, 0.0]]
    else:
        raise ValueError(f"unknown basic class tag {s!r}")
    return np.array(rows)


@dataclass
class ExpCoefficients:
    t: float
    u: float
    branch: str
    mode: str


def _quad_coefficients(s, A, mode, scale):
    tau = _QUAD_TAU_FACTOR[s] * float(np.trace(A))
    A2 = A @ A
    if _frob(A2 - tau * A) > FAMILY_TOL * scale**2:
        raise FamilyViolationError(
            f"matrix is outside the quadratic family A^2 = tau*A of class {s}"
        )
    if tau == 0.0:
        return ExpCoefficients(1.0, 0.0, "trace-zero", mode)
    if mode == "corrected":
        if abs(tau) <= BRANCH_EPS * scale**2:
            t = 1.0 + tau / 2.0 + tau * tau / 6.0 + tau**3 / 24.0
            return ExpCoefficients(t, 0.0, "series-fallback", mode)
        return ExpCoefficients(math.expm1(tau) / tau, 0.0, "trace-nonzero", mode)
    # printed formulas, verbatim
    tr = float(np.trace(A))
    if s == "F1":
        t = (math.exp(tr) - 1.0) / tr
    elif s == "F5":
        half = 0.5 * tr
        t = (math.exp(half) - 1.0) / half
    else:  # F11 as tabulated, with the exponent sign it carries
        t = (math.exp(-tr) - 1.0) / tr
    return ExpCoefficients(t, 0.0, "trace-nonzero", mode)


def _cubic_coefficients(s, A, mode, scale):
    A2 = A @ A
    kappa = 0.5 * float(np.trace(A2))
    if _frob(A @ A2 - kappa * A) > FAMILY_TOL * scale**3:
        raise FamilyViolationError(
            f"matrix is outside the cubic family A^3 = kappa*A of class {s}"
        )
    if kappa == 0.0:
        if mode == "corrected":
            u = 0.5 if np.any(A2 != 0.0) else 0.0
        else:
            u = 0.5 if s == "F8" else 0.0
        return ExpCoefficients(1.0, u, "trsq-zero", mode)
    if mode == "corrected" and abs(kappa) <= BRANCH_EPS * scale**2:
        t = 1.0 + kappa / 6.0 + kappa**2 / 120.0 + kappa**3 / 5040.0
        u = 0.5 + kappa / 24.0 + kappa**2 / 720.0 + kappa**3 / 40320.0
        return ExpCoefficients(t, u, "series-fallback", mode)
    if kappa < 0.0:
        th = math.sqrt(-kappa)
        if mode == "corrected":
            t = math.sin(th) / th
            u = 2.0 * math.sin(0.5 * th) ** 2 / (th * th)
        elif s == "F4":
            t = math.sin(th) / th
            u = (1.0 - math.cos(th)) / (th * th)
        elif s == "F8":
            t = -math.sin(th) / th
            u = (math.cos(th) - 1.0) / kappa
        else:
            raise ValueError(
                f"tabulated coefficients of class {s} are not defined for tr(A^2) < 0"
            )
        return ExpCoefficients(t, u, "trsq-negative", mode)
    r = math.sqrt(kappa)
    if mode == "corrected":
        t = math.sinh(r) / r
        u = 2.0 * math.sinh(0.5 * r) ** 2 / kappa
    elif s == "F8":
        t = math.sinh(r) / r
        u = (math.cosh(r) - 1.0) / kappa
    elif s == "F9":
        t = math.sinh(r) / r
        u = (math.cosh(kappa) - 1.0) / kappa
    elif s == "F10":
        t = math.sinh(r) / r
        u = math.cosh(r) / kappa
    else:
        raise ValueError(
            f"tabulated coefficients of class {s} are not defined for tr(A^2) > 0"
        )
    return ExpCoefficients(t, u, "trsq-positive", mode)


def table1_coefficients(s, A, mode="corrected"):
    """Closed-form coefficients (t, u) for e^A = E + t A + u A^2.

    Raises FamilyViolationError when A does not satisfy the class's
    minimal-polynomial family within FAMILY_TOL (relative, degree-scaled).
    """
    if mode not in ("printed", "corrected"):
        raise ValueError(f"unknown mode {mode!r}")
    if s not in BASIC_CLASSES:
        raise ValueError(f"unknown basic class tag {s!r}")
    A = np.asarray(A, dtype=float)
    if A.shape != (3, 3):
        raise ValueError("A must be a 3x3 matrix")
    scale = max(1.0, _frob(A))
    if s in _QUAD_TAU_FACTOR:
        return _quad_coefficients(s, A, mode, scale)
    return _cubic_coefficients(s, A, mode, scale)


def closed_form_exp(A, coeffs):
    """E + t A + u A^2, exactly as written."""
    A = np.asarray(A, dtype=float)
    return np.eye(3) + coeffs.t * A + coeffs.u * (A @ A)


def reference_expm(A):
    """Matrix exponential by scaling and squaring with a truncated series.

    The scaling power is chosen so the scaled Frobenius norm is at most 2^-5;
    the series is summed until terms fall below machine precision.  Accurate to
    about 1e-13 relative for frobenius norms up to 50, which is what makes it
    usable as the arbiter for the closed forms.
    """
    A = np.asarray(A, dtype=float)
    if A.shape != (3, 3):
        raise ValueError("A must be a 3x3 matrix")
    if not np.all(np.isfinite(A)):
        raise ValueError("A contains non-finite entries")
    norm = _frob(A)
    m = 0
    scaled = norm
    while scaled > 2.0**-5:
        scaled *= 0.5
        m += 1
    S = A / (2.0**m) if m else A
    term = np.eye(3)
    total = np.eye(3)
    # frobenius(term_k) <= scaled^k / k!, so the bound recurrence is a valid
    # stopping test without reducing the actual term
    bound = 1.0
    for k in range(1, 40):
        term = term @ S / k
        total = total + term
        bound *= scaled / k
        if bound <= 1e-20:
            break
    for _ in range(m):
        total = total @ total
    return total


def spectral_exp(A, return_method=False):
    """Exponential through eigenvalue interpolation, a second oracle.

    With three sufficiently separated eigenvalues, e^A equals the Lagrange
    interpolation polynomial of exp on the spectrum, evaluated at A.  Near a
    degenerate spectrum (pairwise separation below 1e-3 * scale) the routine
    falls back to reference_expm; pass return_method=True to see which path
    was taken ("spectral" or "reference-fallback").
    """
    A = np.asarray(A, dtype=float)
    w = np.linalg.eigvals(A)
    scale = max(1.0, _frob(A))
    sep = min(
        abs(w[0] - w[1]),
        abs(w[0] - w[2]),
        abs(w[1] - w[2]),
    )
    if sep < 1e-3 * scale:
        result = reference_expm(A)
        method = "reference-fallback"
    else:
        acc = np.zeros((3, 3), dtype=complex)
        eye = np.eye(3)
        for i in range(3):
            term = np.exp(w[i]) * eye.astype(complex)
            for j in range(3):
                if j != i:
                    term = term @ (A - w[j] * eye) / (w[i] - w[j])
            acc += term
        result = acc.real
        method = "spectral"
    if return_method:
        return result, method
    return result


@dataclass
class GroupSample:
    tag: str
    alpha: float
    beta: float
    a: float
    b: float
    c: float
    matrix: np.ndarray
    coeffs: ExpCoefficients
    closed: np.ndarray
    reference: np.ndarray
    error: float


def verify_sample(s, alpha, beta, a, b, c, mode="corrected"):
    """One closed-form-versus-reference comparison, fully recorded.

    error is frobenius(closed - reference) / max(1, frobenius(reference)).
    """
    A = table1_matrix(s, alpha, beta, a, b, c)
    coeffs = table1_coefficients(s, A, mode)
    closed = closed_form_exp(A, coeffs)
    reference = reference_expm(A)
    err = _frob(closed - reference) / max(1.0, _frob(reference))
    return GroupSample(
        tag=s,
        alpha=float(alpha),
        beta=float(beta),
        a=float(a),
        b=float(b),
        c=float(c),
        matrix=A,
        coeffs=coeffs,
        closed=closed,
        reference=reference,
        error=float(err),
    )
