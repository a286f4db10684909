"""Exception types shared across the package."""


class PerfectConesError(Exception):
    pass


class DimensionMismatch(PerfectConesError):
    pass


class NotPositiveDefinite(PerfectConesError):
    pass


class NotPSD(PerfectConesError):
    pass


class NotPerfect(PerfectConesError):
    pass


class RankTooLow(PerfectConesError):
    pass


class MinNormMismatch(PerfectConesError):
    pass


class FacetUnbounded(PerfectConesError):
    pass


class SearchOverflow(PerfectConesError):
    pass


class SearchBoundExceeded(PerfectConesError):
    pass


class DimensionTooLarge(PerfectConesError):
    pass


class NotMeetingInterior(PerfectConesError):
    pass
