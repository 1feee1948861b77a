"""Exception types shared across the package."""


class GrouptrixError(Exception):
    """Base class for all library errors."""


class SpecError(GrouptrixError):
    """A construction descriptor or input file is malformed or invalid."""


class SizeGuardError(GrouptrixError):
    """An operation was refused because the input exceeds its size guard."""


class CliqueCapError(SizeGuardError):
    """Maximal-clique enumeration aborted after hitting the output cap."""


class NotNormalError(GrouptrixError):
    """Quotient requested by a subgroup that is not normal."""


class IndeterminateError(GrouptrixError):
    """A certificate-based test could neither confirm nor refute."""


class CoverageError(GrouptrixError):
    """A subgroup family does not cover the non-identity elements."""


class OrientationError(GrouptrixError):
    """No transitive orientation exists; carries a forbidden witness."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness
