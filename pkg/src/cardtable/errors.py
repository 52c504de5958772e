"""Exception types shared across the package."""


class CardTableError(Exception):
    """Base class for all cardtable errors."""


class NonExactCellError(CardTableError):
    """An operation that needs precise card counts hit an interval or missing cell."""


class NonIntervalCellError(CardTableError):
    """An operation that needs bounded cells hit a missing cell."""


class NotConsistentError(CardTableError):
    """The table violates the additivity condition e_pk + e_kq + 1 = e_pq."""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__(f"table is inconsistent ({len(self.violations)} violated triples)")


class InfeasibleError(CardTableError):
    """No consistent table exists under the given cuts or bounds."""


class DomainExceededError(CardTableError):
    """A card count went past the configured maximum."""

    def __init__(self, message, bound):
        self.bound = bound
        super().__init__(f"{message} (bound: {bound})")


class EmptyPolytopeError(CardTableError):
    """The continuous feasible region of the table is empty."""


class BadRatioError(CardTableError):
    """Ratio z below 1, or a non-positive base weight."""


class BadRankingError(CardTableError):
    """A dummy-project ranking is malformed (duplicates, missing projects, bad cards)."""


class CapacityInvalidError(CardTableError):
    """A capacity failed the 2-additive monotonicity or normalization conditions."""


class OutOfRangeError(CardTableError):
    """A performance lies outside the coordinate range of the scale."""


class ComboExplosionError(CardTableError):
    """The combination product exceeds the configured limit; use sampling instead."""

    def __init__(self, count, limit):
        self.count = count
        self.limit = limit
        super().__init__(f"{count} combinations exceed the limit of {limit}")


class SchemaError(CardTableError):
    """A document does not match the expected schema."""

    def __init__(self, message, location=""):
        self.location = location
        super().__init__(f"{message}" + (f" (at {location})" if location else ""))
