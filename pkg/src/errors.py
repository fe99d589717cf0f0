"""
Exception hierarchy for the tropical Brill-Noether toolkit.

Every error raised by the library derives from TropicalError so the CLI can
report it by class name and exit with the domain-error code.
"""


class TropicalError(Exception):
    """Base class for all domain errors."""


# ============ Graph Errors ============

class Disconnected(TropicalError):
    pass


class NonpositiveLength(TropicalError):
    pass


class DanglingEdgeEndpoint(TropicalError):
    pass


class BadGenus(TropicalError):
    pass


class UnknownFamily(TropicalError):
    pass


class UnknownPoint(TropicalError):
    pass


class InvalidRational(TropicalError):
    pass


class InvalidParameter(TropicalError):
    """A required argument is missing or outside its range."""


# ============ File Errors ============

class MalformedFile(TropicalError):
    pass


class UnreadableFile(TropicalError):
    pass


# ============ Function & Subgraph Errors ============

class NonIntegerSlope(TropicalError):
    pass


class InconsistentFunction(TropicalError):
    pass


class MalformedOpenSet(TropicalError):
    pass


# ============ Reduction Errors ============

class NotEffectiveAwayFromBasepoint(TropicalError):
    pass


class FiringTimeTooLarge(TropicalError):
    pass


class InsufficientChips(TropicalError):
    pass


# ============ Scan & Oracle Errors ============

class ResourceBudgetExceeded(TropicalError):
    pass


class IncompatibleDenominator(TropicalError):
    pass


class CaseMismatch(TropicalError):
    """Internal consistency failure in a case analysis (an implementation bug, not bad input)."""


class UnsupportedGraph(TropicalError):
    """The graph does not have the shape an operation is defined for."""


class DuplicateIdentifier(TropicalError):
    pass
