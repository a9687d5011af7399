"""Exception hierarchy shared by all modules."""


class SatcombError(ValueError):
    """Base class for user-facing errors (bad input, precondition failures)."""


class InvalidRank(SatcombError):
    pass


class InvalidLattice(SatcombError):
    pass


class DimensionMismatch(SatcombError):
    pass


class NotARoot(SatcombError):
    pass


class NotACoroot(SatcombError):
    pass


class NotDominant(SatcombError):
    pass


class NotInOmega(SatcombError):
    pass


class NotMaximalRoot(SatcombError):
    pass


class ElementNotMinimal(SatcombError):
    pass


class InvalidPath(SatcombError):
    pass


class StepNotInOmega(SatcombError):
    pass


class GroupTooLarge(SatcombError):
    """Raised when an operation would materialize a Weyl group above the cap."""


class InvariantViolation(RuntimeError):
    """An exact identity that must hold did not. Always a bug, never bad input."""
