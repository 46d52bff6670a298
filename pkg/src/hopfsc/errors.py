"""Exception hierarchy shared by every module."""


class HopfSCError(Exception):
    """Base class for all errors raised by hopfsc."""


class DimensionMismatch(HopfSCError, ValueError):
    pass


class FieldMismatch(HopfSCError, ValueError):
    pass


class NonPrimeField(HopfSCError, ValueError):
    pass


class CharTwo(HopfSCError, ValueError):
    """Raised when a construction needs 2 to be invertible."""


class InternalError(HopfSCError, RuntimeError):
    """A theorem-guaranteed property failed: indicates a bug upstream."""


class NotWellDefined(HopfSCError, ValueError):
    """A formula does not map a cotensor subspace into the expected target."""


class RestrictionFailure(HopfSCError, ValueError):
    """A map does not preserve the subspace it was restricted to."""


class AxiomFailure(HopfSCError, ValueError):
    def __init__(self, axiom, report=None):
        super().__init__(f"axiom failed: {axiom}")
        self.axiom = axiom
        self.report = report


class NotHopf(HopfSCError, ValueError):
    pass
