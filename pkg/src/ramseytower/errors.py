"""Exception types raised across the package."""


class RamseyTowerError(Exception):
    """Base class for all errors raised by ramseytower."""


class EqualVertices(RamseyTowerError, ValueError):
    pass


class LevelMismatch(RamseyTowerError, ValueError):
    pass


class RankOutOfRange(RamseyTowerError, ValueError):
    pass


class NotASubset(RamseyTowerError, ValueError):
    pass


class AdjacentEqual(RamseyTowerError, ValueError):
    pass


class IllFormed(RamseyTowerError, ValueError):
    pass


class TooFewVertices(RamseyTowerError, ValueError):
    pass


class NotEnoughDistinct(RamseyTowerError, ValueError):
    pass


class ResourceLimit(RamseyTowerError, RuntimeError):
    """A representation or enumeration would exceed the configured budget."""
