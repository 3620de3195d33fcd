"""Exception hierarchy shared by the package (the CLI maps these to exit codes)."""


class C67Error(Exception):
    pass


class GraphInputError(C67Error, ValueError):
    """Malformed graph, query or out-of-range vertex."""


class ContractViolation(C67Error, ValueError):
    """A documented precondition of an operation does not hold."""


class CapacityError(C67Error):
    """An exhaustive oracle was asked to search beyond its size guard."""


class InvariantError(C67Error, AssertionError):
    """An internal invariant failed; the input is probably outside the graph class."""


class InvalidWitnessError(InvariantError):
    """A computed witness did not re-validate against the host graph."""
