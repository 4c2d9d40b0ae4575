"""Exact Whitney forms and the de Rham map on the standard n-simplex."""

import json
from fractions import Fraction

from ._core import (
    AffineForm,
    Cochain,
    Face,
    TheoremViolation,
    WhitneyError,
    derham,
    enumerate_faces,
    is_constant,
    lambda_e_dimension,
    pullback,
    solve_characterization,
    whitney,
    whitney_basis_form,
)
from . import _core

__all__ = [
    "AffineForm",
    "Cochain",
    "Face",
    "TheoremViolation",
    "WhitneyError",
    "derham",
    "enumerate_faces",
    "integrate_over_face",
    "is_constant",
    "kernel_is_trivial",
    "lambda_e_dimension",
    "proof_trace",
    "pullback",
    "solve_characterization",
    "verify",
    "whitney",
    "whitney_basis_form",
]


def integrate_over_face(form, face):
    """Exact integral of a k-form over an oriented k-face."""
    return Fraction(_core._integrate_over_face(form, face))


def kernel_is_trivial(n, k):
    """Returns (trivial, basis) with basis vectors as lists of Fractions."""
    trivial, basis = _core._kernel_is_trivial(n, k)
    return trivial, [[Fraction(x) for x in v] for v in basis]


def proof_trace(n, k):
    return json.loads(_core._proof_trace(n, k))


def verify(n_max, k=-1, samples=20, seed=0):
    """Runs the theorem checks for every cell up to n_max; returns per-cell reports."""
    return json.loads(_core._verify(n_max, k, samples, seed))
