"""Exception hierarchy. Every failure mode has a distinctly named class."""


class TreeInvError(Exception):
    """Base class for all errors raised by this package."""


# -- tree construction / validation ----------------------------------------

class WrongEdgeCount(TreeInvError):
    """Edge list does not contain exactly n - 1 edges."""


class Disconnected(TreeInvError):
    """Edge list does not connect all vertices."""


class SelfLoop(TreeInvError):
    """An edge joins a vertex to itself."""


class DuplicateEdge(TreeInvError):
    """The same unordered edge appears more than once."""


class IdOutOfRange(TreeInvError):
    """An edge endpoint is outside 0..n-1."""


class EntryOutOfRange(TreeInvError):
    """A Pruefer sequence entry is outside 0..n-1."""


class FormatError(TreeInvError):
    """Malformed text in one of the interchange formats."""


# -- constructions ----------------------------------------------------------

class InvalidParameters(TreeInvError):
    """Construction or formula parameters do not describe a valid tree."""


class NotASubtreeCut(TreeInvError):
    """A subtree move would not leave the reattachment vertex in the main component."""


# -- enumeration ------------------------------------------------------------

class OrderTooLarge(TreeInvError):
    """Requested order exceeds the configured enumeration cap."""


class InfeasibleFilter(TreeInvError):
    """No tree of the requested order has the requested internal-vertex count."""


# -- verification / reporting ------------------------------------------------

class UnknownClaim(TreeInvError):
    """No registered claim has the requested id."""


class UnknownStatistic(TreeInvError):
    """The requested search statistic is not supported."""


class IoFailure(TreeInvError):
    """A report could not be written to its destination."""
