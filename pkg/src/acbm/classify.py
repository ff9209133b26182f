"""Basic-class membership of three-dimensional almost contact B-metric algebras.

In dimension three only the basic classes F1, F4, F5, F8, F9, F10, F11 carry
nonzero fundamental tensors; the all-zero tensor is the cosymplectic class F0.
Nine scalars decide membership:

    theta0, theta1, theta2   components of the Lee form theta
    theta_star0              component 0 of the starred Lee form
    lam, mu, nu              the F8 / F9 / F10 coefficients
    omega1, omega2           the nonzero components of omega

The linear map from structure constants to these scalars is invertible, so a
profile determines the constants and vice versa.  Zero-tests are relative:
a scalar counts as vanishing when |scalar| <= tol * scale.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import StructureConstants, lee_forms, lee_forms_from_tensor, scale_of

BASIC_CLASSES = ("F1", "F4", "F5", "F8", "F9", "F10", "F11")

# scalars whose non-vanishing puts an algebra in each class
_MEMBER_SCALARS = {
    "F1": ("theta1", "theta2"),
    "F4": ("theta0",),
    "F5": ("theta_star0",),
    "F8": ("lam",),
    "F9": ("mu",),
    "F10": ("nu",),
    "F11": ("omega1", "omega2"),
}


@dataclass
class ClassProfile:
    theta0: float
    theta1: float
    theta2: float
    theta_star0: float
    lam: float
    mu: float
    nu: float
    omega1: float
    omega2: float
    scale: float = 1.0

    def as_dict(self):
        """The nine scalars as a JSON-friendly mapping; F8's is keyed "lambda"."""
        return {
            "theta0": self.theta0,
            "theta1": self.theta1,
            "theta2": self.theta2,
            "theta_star0": self.theta_star0,
            "lambda": self.lam,
            "mu": self.mu,
            "nu": self.nu,
            "omega1": self.omega1,
            "omega2": self.omega2,
        }


@dataclass
class ClassSignature:
    members: tuple
    is_f0: bool

    def text(self):
        if self.is_f0:
            return "F0 (cosymplectic)"
        return " ⊕ ".join(self.members)

    def __str__(self):
        return self.text()


def extract_profile(C):
    """The nine class scalars of a set of structure constants."""
    lf = lee_forms(C)
    c01, c02, c12 = C.c01, C.c02, C.c12
    return ClassProfile(
        theta0=float(lf.theta[0]),
        theta1=float(lf.theta[1]),
        theta2=float(lf.theta[2]),
        theta_star0=float(lf.theta_star[0]),
        lam=float(0.5 * c12[0]),
        mu=float(0.5 * (-c01[1] + c02[2])),
        nu=float(c12[0] + c01[2] + c02[1]),
        omega1=float(c02[0]),
        omega2=float(-c01[0]),
        scale=scale_of(C),
    )


def profile_from_tensor(F, scale=1.0):
    """Class scalars read off a fundamental tensor by contraction.

    The symmetric/antisymmetric splits recover lam and mu from the component
    pairs they share with theta0 and theta_star0.
    """
    lf = lee_forms_from_tensor(F)
    return ClassProfile(
        theta0=float(lf.theta[0]),
        theta1=float(lf.theta[1]),
        theta2=float(lf.theta[2]),
        theta_star0=float(lf.theta_star[0]),
        lam=float(0.5 * (F[1, 1, 0] + F[2, 2, 0])),
        mu=float(0.5 * (F[1, 2, 0] - F[2, 1, 0])),
        nu=float(F[0, 1, 1]),
        omega1=float(F[0, 0, 1]),
        omega2=float(F[0, 0, 2]),
        scale=float(scale),
    )


def constants_from_profile(p):
    """Inverse of extract_profile; exact up to floating-point rounding."""
    c12 = np.array([2.0 * p.lam, 0.5 * p.theta1, -0.5 * p.theta2])
    c01 = np.array([
        -p.omega2,
        -(0.5 * p.theta_star0 + p.mu),
        0.5 * (p.nu - 2.0 * p.lam - p.theta0),
    ])
    c02 = np.array([
        p.omega1,
        0.5 * (p.nu - 2.0 * p.lam + p.theta0),
        p.mu - 0.5 * p.theta_star0,
    ])
    return StructureConstants(c01, c02, c12)


def classify(profile, tol=1e-9):
    """Decide class membership from a profile.

    Membership is per scalar group; several simultaneous members mean the
    algebra sits in the direct sum of those classes.  An empty set is F0.
    """
    if tol < 0:
        raise ValueError("tol must be nonnegative")
    cut = tol * profile.scale
    members = tuple(
        s
        for s in BASIC_CLASSES
        if any(abs(getattr(profile, name)) > cut for name in _MEMBER_SCALARS[s])
    )
    return ClassSignature(members=members, is_f0=not members)


def canonical_algebra(s, alpha, beta=0.0):
    """Structure constants of the canonical representative of a basic class.

    beta enters only for F1 and F11; the other classes are one-parameter
    families and ignore it.  Zero parameters yield the abelian algebra (F0).
    """
    al = float(alpha)
    bt = float(beta)
    z = np.zeros(3)
    if s == "F1":
        return StructureConstants(z.copy(), z.copy(), np.array([0.0, al, bt]))
    if s == "F4":
        return StructureConstants(np.array([0.0, 0.0, al]), np.array([0.0, -al, 0.0]), z.copy())
    if s == "F5":
        return StructureConstants(np.array([0.0, al, 0.0]), np.array([0.0, 0.0, al]), z.copy())
    if s == "F8":
        return StructureConstants(
            np.array([0.0, 0.0, al]), np.array([0.0, al, 0.0]), np.array([-2.0 * al, 0.0, 0.0])
        )
    if s == "F9":
        return StructureConstants(np.array([0.0, al, 0.0]), np.array([0.0, 0.0, -al]), z.copy())
    if s == "F10":
        return StructureConstants(np.array([0.0, 0.0, al]), np.array([0.0, al, 0.0]), z.copy())
    if s == "F11":
        return StructureConstants(np.array([al, 0.0, 0.0]), np.array([bt, 0.0, 0.0]), z.copy())
    raise ValueError(f"unknown basic class tag {s!r}")


def reconstruct_F(p):
    """Assemble the fundamental tensor from a profile, class by class.

    Composing with extract_profile reproduces f_from_structure, which is the
    completeness check for the nine scalars.
    """
    F = np.zeros((3, 3, 3))
    # F1 block
    F[1, 1, 1] += p.theta1
    F[1, 2, 2] += p.theta1
    F[2, 1, 1] += -p.theta2
    F[2, 2, 2] += -p.theta2
    # F4 block
    h = 0.5 * p.theta0
    F[1, 0, 1] += h
    F[1, 1, 0] += h
    F[2, 0, 2] -= h
    F[2, 2, 0] -= h
    # F5 block
    hs = 0.5 * p.theta_star0
    for idx in ((1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0)):
        F[idx] += hs
    # F8 block
    for idx in ((1, 0, 1), (1, 1, 0), (2, 0, 2), (2, 2, 0)):
        F[idx] += p.lam
    # F9 block
    F[1, 0, 2] += p.mu
    F[1, 2, 0] += p.mu
    F[2, 0, 1] -= p.mu
    F[2, 1, 0] -= p.mu
    # F10 block
    F[0, 1, 1] += p.nu
    F[0, 2, 2] += p.nu
    # F11 block
    F[0, 1, 0] += p.omega1
    F[0, 0, 1] += p.omega1
    F[0, 2, 0] += p.omega2
    F[0, 0, 2] += p.omega2
    return F


_RECOVER = {
    "F1": lambda p: (0.5 * p.theta1, -0.5 * p.theta2),
    "F4": lambda p: (-0.5 * p.theta0, 0.0),
    "F5": lambda p: (-0.5 * p.theta_star0, 0.0),
    "F8": lambda p: (-p.lam, 0.0),
    "F9": lambda p: (-p.mu, 0.0),
    "F10": lambda p: (0.5 * p.nu, 0.0),
    "F11": lambda p: (-p.omega2, p.omega1),
}


def recover_parameters(C, s, tol=1e-9):
    """(alpha, beta) such that canonical_algebra(s, alpha, beta) matches C.

    Refuses input that is not a pure member of class s; projecting mixed-class
    constants would hide modeling errors (reconstruct_F covers that use).
    beta is 0.0 for the one-parameter classes.
    """
    if s not in BASIC_CLASSES:
        raise ValueError(f"unknown basic class tag {s!r}")
    profile = extract_profile(C)
    sig = classify(profile, tol)
    if sig.members != (s,):
        raise ValueError(
            f"constants classify as {sig.text()}, not as the pure class {s}; "
            "parameter recovery is defined for pure classes only"
        )
    return _RECOVER[s](profile)
