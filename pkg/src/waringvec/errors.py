"""Exception types shared across the package."""
from __future__ import annotations


class DegenerateInputError(RuntimeError):
    """A rank or kernel dimension differs from the generic expectation;
    the input is special (or defective) and the requested recovery does
    not apply to it."""


class DegenerateCaseError(RuntimeError):
    """Random startpoints keep producing ill-conditioned Jacobians; the
    case itself is degenerate (typically defective)."""


class DefectiveCaseError(RuntimeError):
    """The case has a positive secant defect; finite counting does not
    apply.  Carries the defect report."""

    def __init__(self, report):
        super().__init__(f"case is defective: defect {report.defect} "
                         f"(dim {report.dim}, expected {report.expected})")
        self.report = report


class InconclusiveError(RuntimeError):
    """A numerical rank decision stayed ambiguous after retries."""
