"""Exception hierarchy shared by every module.

Validation problems (bad input files, malformed graphs) derive from
:class:`InputError`; failures raised while an algorithm runs derive from
:class:`AlgorithmError`. The CLI maps the two families to exit codes 1 and 2.
"""


class HellyError(Exception):
    """Base class for all package errors."""


class InputError(HellyError, ValueError):
    """The input violates a structural precondition."""


class NotConnectedError(InputError):
    def __init__(self, message="not connected"):
        super().__init__(message)


class OutOfRangeError(InputError):
    """Cost values too large for exact 64-bit accumulation."""


class InstanceTooLargeError(InputError):
    """A brute-force routine was asked to exceed its work budget."""


class AlgorithmError(HellyError, RuntimeError):
    """An algorithm could not finish; usually the Helly promise is broken."""


class GateNotFoundError(AlgorithmError):
    def __init__(self, pivot, vertex, kind="gate"):
        self.pivot = pivot
        self.vertex = vertex
        self.kind = kind
        super().__init__(
            f"{kind} not found for vertex {vertex} (pivot {pivot}): input is not Helly"
        )


class SamplingFailureError(AlgorithmError):
    pass


class StepBudgetExceededError(AlgorithmError):
    pass
