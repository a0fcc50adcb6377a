class QSeriesError(Exception):
    """Root of every error raised by qseries."""


class ConfigError(QSeriesError):
    """Config document is missing or has invalid/missing keys."""


class SignatureMismatch(ConfigError):
    """Operands come from different scalar signatures (m, r) or ring sizes."""


class DivisionByZero(QSeriesError, ZeroDivisionError):
    """Inversion of the zero field element."""


class NotAUnitError(QSeriesError):
    """Series or Laurent element is not invertible (it lies in J)."""


class NoLeadingTermError(QSeriesError):
    """Leading term requested for the zero series."""


class DegenerateShearError(QSeriesError):
    """sigma(v, t0) == sigma(v, r): the shear cannot separate the two cosets."""


class SeparationError(QSeriesError):
    """No probe torus element separated two support monomials."""


class InvalidTorusElement(QSeriesError):
    """Torus element with a zero (or missing) entry."""


class PrecisionError(QSeriesError):
    """Operation needs more known terms than the precision provides."""


class NotApplicableError(QSeriesError):
    """Check only makes sense for generic q-matrices."""


class UnknownCommandError(QSeriesError):
    """Requested subcommand does not exist."""


class ParseError(QSeriesError):
    """Series expression could not be parsed."""

    def __init__(self, message: str, position: int | None = None) -> None:
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class BudgetExceeded(QSeriesError, RuntimeError):
    """Raised when a requested precision, variable count or term count breaches its cap."""
