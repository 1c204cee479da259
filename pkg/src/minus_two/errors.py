"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the documented domain of an operation."""


class Graph6Error(DomainError):
    """Malformed graph6 input; ``position`` is the offending byte offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at byte {position})")
        self.position = position


class InternalConsistencyError(RuntimeError):
    """An invariant that must hold by construction was violated.

    Raised for implementation bugs or for outcomes that would contradict a
    classification result the code relies on; never for bad user input.
    """
