"""Exception types shared across the package.

Everything derives from FlsError (a ValueError) so callers can catch the
whole family with one clause while the CLI maps subclasses onto exit codes.
"""


class FlsError(ValueError):
    """Base class for all errors raised by this package."""


class LatticeMismatchError(FlsError):
    """Two lattice elements from different chain lattices were combined."""


class TokenError(FlsError):
    """A membership-value token could not be parsed."""


class DocumentError(FlsError):
    """A space document is malformed (bad JSON, schema, or references)."""


class AxiomViolationError(FlsError):
    """An operation required an axiom that the given space does not satisfy."""


class NoExactSolutionError(FlsError):
    """An exact integer equation has no solution for the given inputs."""


class ResourceLimitError(FlsError):
    """A brute-force enumeration would exceed its configured bound."""
