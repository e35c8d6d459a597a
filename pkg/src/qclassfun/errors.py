"""Exception types shared across the library.

The CLI maps these onto exit codes: usage problems exit 2 (handled by
argparse), :class:`DomainError` and subclasses exit 3.
"""

from __future__ import annotations


class DomainError(ValueError):
    """A parameter lies outside the mathematical domain of an operation."""


class FamilyError(DomainError):
    """A label or operation was used with the wrong fusion family."""


class KacTypeError(DomainError):
    """An operation requiring a non-Kac family received Kac-type data."""


class BudgetError(RuntimeError):
    """A size, term or precision budget was exhausted before completion."""
