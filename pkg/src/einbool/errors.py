"""Exception types raised by the library.

Everything derives from :class:`EinboolError` so callers can catch the whole
family; the concrete classes also subclass the closest builtin so that code
written against plain ``ValueError`` keeps working.
"""


class EinboolError(Exception):
    """Base class for all errors raised by this package."""


class ShapeError(EinboolError, ValueError):
    """A shape precondition failed: bad dimensions, length mismatch,
    non-conformable contraction, or a non-square argument."""


class TensorFormatError(EinboolError, ValueError):
    """A tensor document could not be parsed or failed validation."""


class NotRegularError(EinboolError, ValueError):
    """An operation that requires a regular tensor was given a singular one."""


class WeightHypothesisError(EinboolError, ValueError):
    """The weighted Moore-Penrose hypotheses do not hold.

    ``failures`` lists the violated hypotheses by name.
    """

    def __init__(self, failures: tuple[str, ...]):
        self.failures = failures
        super().__init__("weight hypotheses violated: " + ", ".join(failures))


class CertificateError(EinboolError, ValueError):
    """A supplied decomposition certificate does not hold for the given tensor."""


class ResourceCapError(EinboolError, ValueError):
    """An exhaustive search or enumeration would exceed its hard cap.

    Caps are deliberate: a sampled oracle is not an oracle, so there is no
    silent fallback to a heuristic answer.
    """


class ConsistencyError(EinboolError, RuntimeError):
    """An internal cross-check failed; indicates a bug, not bad input."""
