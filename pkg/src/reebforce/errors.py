"""Exception taxonomy shared by all modules."""


class ReebforceError(Exception):
    """Base class for all package errors."""


class InputError(ReebforceError, ValueError):
    """Invalid input data (bad surd syntax, zero denominator, ...)."""


class FieldMixError(InputError):
    """Arithmetic attempted between surds of incompatible radicands."""


class ResonanceError(InputError):
    """A cover k of an elliptic orbit has integral rotation k*theta.

    Degenerate covers carry no Conley-Zehnder index here; callers must
    supply non-degenerate data.
    """


class HypothesisError(InputError):
    """A stated hypothesis of a formula is violated (e.g. theta_plus <
    theta_minus in the branched-cover bound)."""


class OracleError(ReebforceError):
    """The numerical oracle failed to produce a decisive answer."""
