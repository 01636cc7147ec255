"""Exception hierarchy shared by all modules."""


class ToricMotiveError(Exception):
    """Base class for every error raised by the package."""


class ZeroVector(ToricMotiveError, ValueError):
    pass


class RankMismatch(ToricMotiveError, ValueError):
    pass


class BadParameters(ToricMotiveError, ValueError):
    pass


class WrongDimension(ToricMotiveError, ValueError):
    pass


class FanError(ToricMotiveError, ValueError):
    """A fan failed validation. Subclasses name the offending cone or ray."""


class EmptyFan(FanError):
    pass


class NonPrimitiveRay(FanError):
    pass


class DuplicateRay(FanError):
    pass


class NotStronglyConvex(FanError):
    pass


class RedundantRay(FanError):
    pass


class UnusedRay(FanError):
    pass


class BadFaceIntersection(FanError):
    pass


class CompletenessMismatch(FanError):
    pass


class RefinementError(FanError):
    """A supplied refinement is not smooth or does not refine the fan."""


class UnboundedLineality(ToricMotiveError, ValueError):
    pass


class UnsupportedSingularStratum(ToricMotiveError, ValueError):
    pass


class NegativeRank(ToricMotiveError, ValueError):
    pass


class HypothesisViolated(ToricMotiveError):
    """Even-degree group has torsion while the next odd degree is nonzero."""

    def __init__(self, degree_index, message=None):
        self.degree_index = degree_index
        super().__init__(
            message
            or f"H_{2 * degree_index} is not free and H_{2 * degree_index + 1} != 0"
        )


class NonCellularInput(ToricMotiveError, ValueError):
    pass


class CellularityNotCertified(ToricMotiveError):
    def __init__(self, certificate):
        self.certificate = certificate
        super().__init__(certificate.reason or "cellularity not certified")


class BadBranchCount(ToricMotiveError, ValueError):
    pass


class FormatError(ToricMotiveError, ValueError):
    """Malformed input file or motive text."""
