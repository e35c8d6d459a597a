"""Classification arithmetic for the rational-scaling bicrossed products.

The construction attaches to a deformation parameter ``q`` in (-1,1) minus 0
and a nonzero real ``nu`` a compact quantum group whose scaling times,
center, and factor type are decided by one dichotomy: whether
``nu log|q| / pi`` is rational.  That question is undecidable from numeric
data, so it is a declared input (:class:`RatioRational` versus
:class:`RatioIrrational`) and every decision below is exact rational
arithmetic; no floating representation of a scaling time is ever consulted.

A scaling time is stored symbolically as ``t = r nu + s pi/log|q|`` with
rational ``r, s``; this is exactly the decidable fragment:

* trivial  <=>  ``t`` in ``(pi/log|q|) Z``,
* inner    <=>  ``t`` in ``nu Q + (pi/log|q|) Z``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from . import fusion
from .errors import DomainError
from .fusion import exact_fraction
from .intervals import Interval

FACTOR_II_INFINITY = "injective factor of type II-infinity"
NON_FACTOR = "non-factor; center isomorphic to bounded functions on the circle"


@dataclass(frozen=True)
class RatioRational:
    """Declares ``nu log|q| = ratio * pi`` with a nonzero rational ratio."""

    ratio: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "ratio", exact_fraction(self.ratio))
        if self.ratio == 0:
            raise DomainError("the rational ratio must be nonzero")


@dataclass(frozen=True)
class RatioIrrational:
    """Asserts ``nu log|q| / pi`` is irrational (recorded, not verified).

    `nu_note` is display-only; no decision consults it.
    """

    nu_note: str | None = None


NuMode = Union[RatioRational, RatioIrrational]


@dataclass(frozen=True)
class BicrossedParams:
    q: Fraction
    nu_mode: NuMode

    def __post_init__(self) -> None:
        object.__setattr__(self, "q", exact_fraction(self.q))
        if not (-1 < self.q < 1) or self.q == 0:
            raise DomainError(f"q must lie in (-1, 1) and be nonzero, got {self.q}")


@dataclass(frozen=True)
class ScalingTime:
    """The time ``t = r nu + s pi/log|q|`` as an exact rational pair."""

    r: Fraction
    s: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "r", exact_fraction(self.r))
        object.__setattr__(self, "s", exact_fraction(self.s))

    def __add__(self, other: "ScalingTime") -> "ScalingTime":
        return ScalingTime(self.r + other.r, self.s + other.s)

    def __neg__(self) -> "ScalingTime":
        return ScalingTime(-self.r, -self.s)

    def __sub__(self, other: "ScalingTime") -> "ScalingTime":
        return self + (-other)


def is_trivial_scaling(t: ScalingTime, params: BicrossedParams) -> bool:
    """Membership of `t` in ``(pi/log|q|) Z``.

    With an irrational ratio the nu-component must vanish and the integer
    part must be integral; with a declared ratio rho the condition becomes
    ``r rho + s`` integral.
    """
    mode = params.nu_mode
    if isinstance(mode, RatioIrrational):
        return t.r == 0 and t.s.denominator == 1
    combined = t.r * mode.ratio + t.s
    return combined.denominator == 1


def is_inner_scaling(t: ScalingTime, params: BicrossedParams) -> bool:
    """Membership of `t` in ``nu Q + (pi/log|q|) Z``.

    In the declared-rational mode that subgroup collapses onto
    ``(pi/log|q|) Q``, which contains every representable time.
    """
    mode = params.nu_mode
    if isinstance(mode, RatioIrrational):
        return t.s.denominator == 1
    return True


@dataclass(frozen=True)
class CenterDescription:
    is_trivial: bool
    #: positive generator of the rational cyclic group carried by the center
    #: (None when the center is trivial).
    generator: Fraction | None = None


def center_description(params: BicrossedParams) -> CenterDescription:
    """Center of the construction: trivial in the irrational mode,
    a circle algebra generated by ``|1/ratio|`` otherwise."""
    mode = params.nu_mode
    if isinstance(mode, RatioIrrational):
        return CenterDescription(True)
    return CenterDescription(False, abs(1 / mode.ratio))


@dataclass(frozen=True)
class FactorReport:
    is_factor: bool
    description: str
    coamenable: bool = True
    injective: bool = True


def factor_report(params: BicrossedParams) -> FactorReport:
    """Factor classification string; both modes are coamenable and injective."""
    if isinstance(params.nu_mode, RatioIrrational):
        return FactorReport(True, FACTOR_II_INFINITY)
    return FactorReport(False, NON_FACTOR)


def iso_necessary(
    params1: BicrossedParams,
    params2: BicrossedParams,
    nu_ratio: Fraction | None = None,
) -> bool | None:
    """Necessary isomorphism conditions: equal |q| and equal scaling-time
    subgroups ``nu Q + (pi/log|q|) Z``.

    Two declared-rational modes always agree once |q| matches.  Two
    irrational modes agree exactly when ``nu/nu'`` is rational; pass that
    ratio in `nu_ratio` to decide, otherwise the answer is ``None``
    (undetermined).  Structurally identical parameters describe the same
    group, so they trivially pass.  Mixed modes never agree.  A ``True``
    answer does not claim the two are isomorphic, only that no necessary
    condition fails.
    """
    if params1 == params2:
        return True
    if abs(params1.q) != abs(params2.q):
        return False
    mode1, mode2 = params1.nu_mode, params2.nu_mode
    if isinstance(mode1, RatioRational) != isinstance(mode2, RatioRational):
        return False
    if isinstance(mode1, RatioRational):
        return True
    if nu_ratio is None:
        return None
    ratio = exact_fraction(nu_ratio)
    if ratio == 0:
        raise DomainError("nu ratio must be nonzero")
    return True


@dataclass(frozen=True)
class HIrrep:
    """Irreducible label of the bicrossed product: a rational charge paired
    with a ladder index; the intertwiner is inherited from the inner label."""

    gamma: Fraction
    inner: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "gamma", exact_fraction(self.gamma))
        if self.inner < 0:
            raise DomainError(f"inner label must be a nonnegative int, got {self.inner}")

    def rho_spectrum(self, params: BicrossedParams) -> list[Interval]:
        return fusion.rho_spectrum(self.inner, abs(params.q))

    def rho_spectrum_exact(self, params: BicrossedParams) -> list[Fraction]:
        return fusion.rho_spectrum_exact(self.inner, abs(params.q))

    def character_label(self) -> str:
        return f"u[{self.gamma}]*chi[{self.inner}]"
