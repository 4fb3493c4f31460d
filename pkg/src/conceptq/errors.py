"""Exception hierarchy.

Each family maps onto one CLI exit code, so callers can catch a whole class of
failures (bad input, non-representable data, empty count tables) at once.
"""


class ConceptqError(Exception):
    pass


# -- input validation (exit code 2) -------------------------------------------


class ValidationError(ConceptqError, ValueError):
    pass


class LengthMismatch(ValidationError):
    pass


class NegativeWeight(ValidationError):
    pass


class SumOutOfTolerance(ValidationError):
    pass


class DuplicateLabel(ValidationError):
    pass


class DimensionMismatch(ValidationError):
    pass


class EmptyInput(ValidationError):
    pass


class IndexOutOfRange(ValidationError):
    pass


class InvalidConfig(ValidationError):
    pass


class InvalidGrid(ValidationError):
    pass


class NotNormalized(ValidationError):
    pass


class OutOfRange(ValidationError):
    pass


class OutOfRangeExpectation(OutOfRange):
    pass


# -- model construction (exit code 3) -----------------------------------------


class FitError(ConceptqError):
    pass


class NotRepresentable(FitError):
    """Interference exceeds sqrt(mu_a * mu_b) for some exemplar."""


class ConstraintViolated(FitError):
    pass


class ZeroAnchorMass(FitError):
    pass


class AnchorNotMaximal(FitError):
    pass


class OrthogonalityFailure(FitError):
    pass


# -- count tables (exit code 4) -----------------------------------------------


class EmptyCounts(ConceptqError):
    pass


class EmptyTable(EmptyCounts):
    pass


class EmptyMarginal(EmptyCounts):
    pass


class AllZeroTable(EmptyTable):
    """One or more coincidence tables has no counts at all.

    ``tables`` holds every table that was built, including the empty ones,
    and ``experiments`` names the empty ones.
    """

    def __init__(self, message, experiments=(), tables=None):
        super().__init__(message)
        self.experiments = tuple(experiments)
        self.tables = dict(tables or {})


# -- corpus I/O (exit code 1) -------------------------------------------------


class CorpusIOError(ConceptqError, OSError):
    pass


class EmptyCorpus(CorpusIOError):
    pass
