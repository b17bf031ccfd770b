"""Exception types raised across the package."""

from __future__ import annotations


class ZagrebDomError(Exception):
    """Base class for all package errors."""


class TreeError(ZagrebDomError, ValueError):
    """An edge list does not describe a tree."""


class EdgeCountMismatch(TreeError):
    pass


class Disconnected(TreeError):
    pass


class DuplicateEdge(TreeError):
    pass


class SelfLoop(TreeError):
    pass


class IdOutOfRange(TreeError):
    pass


class ParseError(ZagrebDomError, ValueError):
    pass


class InstanceTooLarge(ZagrebDomError, ValueError):
    pass


class InfeasibleSpec(ZagrebDomError, ValueError):
    pass


class InfeasibleGamma(ZagrebDomError, ValueError):
    pass


class CapExceeded(ZagrebDomError, ValueError):
    pass


class PreconditionViolated(ZagrebDomError, ValueError):
    pass


class NotDominating(ZagrebDomError, ValueError):
    pass


class DomainError(ZagrebDomError, ValueError):
    pass


class IoError(ZagrebDomError, OSError):
    pass
