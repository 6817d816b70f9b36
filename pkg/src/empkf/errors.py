"""Exception hierarchy shared by the library and the CLI."""


class EmpkfError(Exception):
    """Base class for all errors raised by this package."""


class DataError(EmpkfError):
    """Invalid or malformed input data (files, sample sets, dimensions)."""


class TooFewSamplesError(DataError):
    """Sample set is too small to place at least three knots."""


class DegenerateQuantilesError(DataError):
    """Empirical quantiles are not strictly increasing."""


class NumericalFailureError(EmpkfError):
    """A numerical operation produced non-finite values or could not proceed."""
