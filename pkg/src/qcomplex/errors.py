"""Exception types shared across the package.

Every error carries a stable ``code`` string used by the CLI to render
machine-readable diagnostics. Errors split into two groups: usage errors
(bad input, out-of-range parameters) and computation errors (convergence,
precision, internal contract failures); the CLI maps them to exit codes
2 and 1 respectively.
"""

from __future__ import annotations

__all__ = [
    "QComplexError",
    "NotPure",
    "BadVertexId",
    "FaceNotInComplex",
    "VertexInFace",
    "TooLarge",
    "DimensionOutOfRange",
    "LengthMismatch",
    "NoConvergence",
    "NotPathConnected",
    "ResidualTooLarge",
    "SpectrumAmbiguous",
    "NotBasicHole",
    "BadParams",
    "FaceContainsApex",
    "DuplicateFace",
    "BettiMismatch",
    "BudgetExhausted",
    "NoApex",
    "PrecisionInsufficient",
    "USAGE_ERRORS",
]


class QComplexError(Exception):
    """Base class for all package errors."""

    code = "error"


class NotPure(QComplexError):
    """Facets of mixed dimension where a pure complex is required."""

    code = "not_pure"


class BadVertexId(QComplexError):
    """Vertex id negative or outside [0, n_vertices)."""

    code = "bad_vertex_id"


class FaceNotInComplex(QComplexError):
    code = "face_not_in_complex"


class VertexInFace(QComplexError):
    """A vertex that must lie outside a face was found inside it."""

    code = "vertex_in_face"


class TooLarge(QComplexError):
    """Instance exceeds the documented brute-force/desk-scale limits."""

    code = "too_large"


class DimensionOutOfRange(QComplexError):
    code = "dimension_out_of_range"


class LengthMismatch(QComplexError):
    """Vector length does not match the face-space dimension."""

    code = "length_mismatch"


class NoConvergence(QComplexError):
    """Iterative eigensolve failed to reach the requested residual."""

    code = "no_convergence"

    def __init__(self, message: str, iterations: int = 0, residual: float = float("nan")):
        super().__init__(message)
        self.iterations = iterations
        self.residual = residual


class NotPathConnected(QComplexError):
    code = "not_path_connected"


class ResidualTooLarge(QComplexError):
    """Input eigenpair residual above the documented threshold."""

    code = "residual_too_large"


class SpectrumAmbiguous(QComplexError):
    """An eigenvalue fell inside the zero-test guard band."""

    code = "spectrum_ambiguous"


class NotBasicHole(QComplexError):
    code = "not_basic_hole"


class BadParams(QComplexError):
    """Parameter outside its documented range."""

    code = "bad_params"


class FaceContainsApex(QComplexError):
    code = "face_contains_apex"


class DuplicateFace(QComplexError):
    code = "duplicate_face"


class BettiMismatch(QComplexError):
    """Internal assertion: a generated complex has the wrong Betti number.

    Signals a bug in the generator, not a user error.
    """

    code = "betti_mismatch"


class BudgetExhausted(QComplexError):
    """Rejection sampling ran out of attempts."""

    code = "budget_exhausted"


class NoApex(QComplexError):
    code = "no_apex"


class PrecisionInsufficient(QComplexError):
    """Eigenvalue error bound too large for the quantity being measured."""

    code = "precision_insufficient"


#: Errors that indicate invalid usage rather than a failed computation.
USAGE_ERRORS = (
    NotPure,
    BadVertexId,
    FaceNotInComplex,
    VertexInFace,
    TooLarge,
    DimensionOutOfRange,
    LengthMismatch,
    NotPathConnected,
    NotBasicHole,
    BadParams,
    FaceContainsApex,
    DuplicateFace,
    NoApex,
)
