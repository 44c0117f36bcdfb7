"""Exceptions raised by conformal_type_lab.

Validation findings are returned as data (see ``line_complex.complex.Diagnostic``); the
classes below signal conditions under which an operation cannot produce a result.
"""

from typing import Iterable, Optional


class ConformalTypeLabError(Exception):
    """Base class for all library errors."""


class UnknownVertex(ConformalTypeLabError, KeyError):

    def __init__(self, vertex_id: str):
        self.vertex_id = vertex_id
        super().__init__(f"Unknown vertex: {vertex_id!r}")

    def __str__(self) -> str:
        return self.args[0]


class UnknownTriangle(ConformalTypeLabError, KeyError):

    def __init__(self, triangle_id: str):
        self.triangle_id = triangle_id
        super().__init__(f"Unknown triangle: {triangle_id!r}")

    def __str__(self) -> str:
        return self.args[0]


class UnresolvedExcess(ConformalTypeLabError):
    """An excess was requested at a vertex whose incident faces are not all traced."""

    def __init__(self, vertex_id: str, j: Optional[int] = None):
        self.vertex_id = vertex_id
        self.j = j
        where = f" inside B(p, {j})" if j is not None else ""
        super().__init__(
            f"Excess at vertex {vertex_id!r}{where} is unresolved: an incident face "
            f"touches the frontier (truncation too small)"
        )


class NonOrientableWalk(ConformalTypeLabError):

    def __init__(self, start: str, steps: int):
        self.start = start
        self.steps = steps
        super().__init__(
            f"Face walk from {start!r} did not close within {steps} steps"
        )


class InfeasibleScheme(ConformalTypeLabError):

    def __init__(self, reason: str):
        self.reason = reason
        super().__init__(f"Infeasible scheme: {reason}")


class TooSmall(ConformalTypeLabError):

    def __init__(self, size: int, required: int):
        self.size = size
        self.required = required
        super().__init__(f"Subgraph of size {size} is below the required size {required}")


class TooLarge(ConformalTypeLabError):

    def __init__(self, size: int, cap: int):
        self.size = size
        self.cap = cap
        super().__init__(f"Size {size} exceeds the cap {cap}")


class NotConnected(ConformalTypeLabError):

    def __init__(self, vertex_ids: Iterable[str]):
        self.vertex_ids = sorted(vertex_ids)
        preview = ", ".join(self.vertex_ids[:8])
        if len(self.vertex_ids) > 8:
            preview += ", ..."
        super().__init__(f"Vertex set is not connected: {{{preview}}}")


class InvalidPartition(ConformalTypeLabError):

    def __init__(self, reason: str):
        self.reason = reason
        super().__init__(f"Invalid partition: {reason}")


class DomainError(ConformalTypeLabError, ValueError):

    def __init__(self, name: str, value, domain: str):
        self.name = name
        self.value = value
        self.domain = domain
        super().__init__(f"{name}={value!r} is outside {domain}")


class PreconditionFailed(ConformalTypeLabError):

    def __init__(self, hypothesis: str):
        self.hypothesis = hypothesis
        super().__init__(f"Precondition failed: {hypothesis}")


class NoConvergence(ConformalTypeLabError):

    def __init__(self, steps: int):
        self.steps = steps
        super().__init__(f"No convergence after {steps} steps")


class StageMissing(ConformalTypeLabError):

    def __init__(self, n: int, built: int):
        self.n = n
        self.built = built
        super().__init__(f"Stage {n} is not available (record built through stage {built})")


class MissingCluster(ConformalTypeLabError):

    def __init__(self, triangle_id: str, reason: str = "is not assigned to any cluster"):
        self.triangle_id = triangle_id
        super().__init__(f"Triangle {triangle_id!r} {reason}")


class NotSimplyConnected(ConformalTypeLabError):

    def __init__(self, reason: str):
        self.reason = reason
        super().__init__(f"Triangle union is not simply connected: {reason}")


class ParseError(ConformalTypeLabError):

    def __init__(self, path: str, line: int, column: int, message: str):
        self.path = path
        self.line = line
        self.column = column
        self.message = message
        super().__init__(f"{path}:{line}:{column}: {message}")
