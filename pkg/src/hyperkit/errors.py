"""Error types raised by the kit, one per failure condition."""


class HyperkitError(Exception):
    """Base class for all kit errors."""


class DimensionMismatch(HyperkitError):
    pass


class DuplicateLabel(HyperkitError):
    pass


class IdentityAxiomViolated(HyperkitError):
    pass


class IdentityMissing(HyperkitError):
    pass


class NotAMosaic(HyperkitError):
    pass


class NotMosaic(NotAMosaic):
    pass


class SearchCapExceeded(HyperkitError):
    pass


class NotParallel(HyperkitError):
    pass


class NoCommonCodomain(HyperkitError):
    pass


class UnsupportedCategory(HyperkitError):
    pass


class NotUnital(HyperkitError):
    pass


class NotUnitalTag(HyperkitError):
    pass


class CodomainNotUnital(HyperkitError):
    pass


class NotCommutativeMosaic(HyperkitError):
    pass


class NotMultiring(HyperkitError):
    pass


class AdditiveNotCanonical(NotMultiring):
    pass


class ZeroNotAbsorbing(NotMultiring):
    pass


class NotASubgroup(HyperkitError):
    pass


class NotAbelian(HyperkitError):
    pass


class NotAnAutomorphismGroup(HyperkitError):
    pass


class NotASemilattice(HyperkitError):
    pass


class NotUnitSubgroup(HyperkitError):
    pass


class CandidateDoesNotEqualize(HyperkitError):
    pass


class FlatsNotIntersectionClosed(HyperkitError):
    pass


class ExchangeFails(HyperkitError):
    pass


class NotSimplePointed(HyperkitError):
    pass


class FormatError(HyperkitError):
    """Malformed object file."""
