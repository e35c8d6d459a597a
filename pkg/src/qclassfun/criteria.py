"""Certified summability criteria, series bounds, thresholds and verdicts.

The central quantity is the series of square roots of classical-over-quantum
dimension ratios, summed over all irreducible labels.  A finite value
certifies the quasi-split property of the class-function inclusion; combined
with the absence of nontrivial labels with trivial intertwiner it yields the
"not a MASA" verdict (ladder families) or the relative-commutant conclusion
(free-unitary families, where the class-function algebra is non-abelian).

Every sum is certified: terms are enclosed with outward rounding and a
geometric majorant bounds the tail, so reported values are true enclosures,
never point estimates.  Root findings below use bisection on functions whose
monotonicity is first certified on a grid.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Callable, Sequence

import mpmath
from mpmath import iv

from . import fusion, intervals
from .errors import BudgetError, DomainError, FamilyError, KacTypeError
from .fusion import FusionFamily, Label
from .intervals import Interval, IntervalLike
from .scalars import q_number, solve_fundamental_q

DEFAULT_MAX_TERMS = 10_000
MAX_BITS = 1024

#: sup of the multiplicity of the top component in fundamental-times-ladder
#: fusion; both ladder kinds have multiplicity one there.
LADDER_SUP_C = 1

VERDICT_NOT_MASA = "not a MASA"
VERDICT_RELATIVE_COMMUTANT = (
    "quasi-split; relative commutant not contained in class functions"
)
VERDICT_NO_CONCLUSION = "no conclusion"


class Verdict(Enum):
    CONVERGES = "converges"
    DIVERGES = "diverges"
    UNDETERMINED = "undetermined"


class QuasiSplit(Enum):
    YES = "yes"
    NO = "no"
    UNDETERMINED = "undetermined"


@dataclass(frozen=True)
class SeriesResult:
    """Outcome of a certified summation.

    When `verdict` is CONVERGES, the true sum lies in ``partial_sum +
    tail_bound`` where `tail_bound` encloses the omitted tail from below by 0.
    """

    verdict: Verdict
    partial_sum: Interval | None = None
    tail_bound: Interval | None = None
    terms_used: int = 0

    def sum_enclosure(self) -> Interval:
        """Enclosure of the full series value (CONVERGES only)."""
        if self.verdict is not Verdict.CONVERGES:
            raise DomainError(f"series did not converge: {self.verdict.value}")
        assert self.partial_sum is not None and self.tail_bound is not None
        total = self.partial_sum + self.tail_bound
        return intervals.from_endpoints(
            intervals.lower(self.partial_sum), intervals.upper(total)
        )


def _tol_mpf(tol) -> mpmath.mpf:
    if isinstance(tol, Fraction):
        return mpmath.mpf(tol.numerator) / mpmath.mpf(tol.denominator)
    return mpmath.mpf(tol)


# ---------------------------------------------------------------------------
# ratios and exponential decay


def ratio_exact(label: Label, family: FusionFamily) -> Fraction:
    """Exact classical/quantum dimension ratio of a label (<= 1 always)."""
    return Fraction(fusion.dim(label, family, "classical")) / fusion.dim(
        label, family, "quantum"
    )


def ratio(label: Label, family: FusionFamily) -> Interval:
    """Enclosure of dim/dim_q; exactly 1 on the trivial label and in the
    Kac case."""
    return intervals.make(ratio_exact(label, family))


def decay_constant(a1: IntervalLike, sup_c: int) -> Interval:
    """The certified growth rate ``c = 1 + (a1 - 1)/sup_c > 1``.

    `a1` is the quantum/classical ratio of the fundamental; values not
    certified above 1 mean Kac type (or invalid data) and are rejected.
    """
    if sup_c < 1:
        raise DomainError(f"sup_c must be a positive integer, got {sup_c}")
    a = intervals.make(a1)
    if intervals.lower(a) <= 1:
        raise KacTypeError(f"need a1 > 1 certified, got {a}")
    return 1 + (a - 1) / sup_c


def _family_ratios(family: FusionFamily) -> Callable[[int], Fraction]:
    def a_n(n: int) -> Fraction:
        return Fraction(fusion.dim(n, family, "quantum")) / fusion.dim(
            n, family, "classical"
        )

    return a_n


def _iter_family_ratios(family: FusionFamily):
    """Yield A_n = dim_q(n)/dim(n) for n = 0, 1, 2, ... incrementally.

    Runs both dimension recursions in place so a long summation costs one
    rational step per term instead of a fresh recursion per label.
    """
    three_term = family.kind is fusion.FamilyKind.SO3_LADDER
    d1_c = Fraction(family.dim_c_fund)
    d1_q = family.dim_q_fund
    prev = (Fraction(1), Fraction(1))
    curr = (d1_c, d1_q)
    yield Fraction(1)
    while True:
        yield curr[1] / curr[0]
        if three_term:
            step = (d1_c * curr[0] - curr[0] - prev[0],
                    d1_q * curr[1] - curr[1] - prev[1])
        else:
            step = (d1_c * curr[0] - prev[0], d1_q * curr[1] - prev[1])
        prev, curr = curr, step


def _family_decay_exact(family: FusionFamily) -> Fraction:
    a1 = _family_ratios(family)(1)
    if a1 <= 1:
        raise KacTypeError("Kac-type family has no decay rate")
    return 1 + (a1 - 1) / LADDER_SUP_C


def verify_decay(family: FusionFamily, n_max: int) -> bool:
    """Exact check that ``A_(n+1) >= c A_n`` for ``1 <= n < n_max``."""
    if not family.is_ladder:
        raise FamilyError("decay verification applies to ladder families")
    c = _family_decay_exact(family)
    ratios = _iter_family_ratios(family)
    next(ratios)  # A_0
    previous = next(ratios)  # A_1
    for _ in range(1, n_max):
        current = next(ratios)
        if current < c * previous:
            return False
        previous = current
    return True


# ---------------------------------------------------------------------------
# certified series


def quasi_split_sum_ladder(
    family: FusionFamily,
    tol,
    bits: int | None = None,
    max_terms: int = DEFAULT_MAX_TERMS,
) -> SeriesResult:
    """Certified sum of sqrt(dim(n)/dim_q(n)) over all ladder labels.

    The tail after N computed terms is dominated by the geometric series
    obtained from ``A_n >= c^(n-1) A_1``; summation stops once that majorant
    drops below `tol`.  Kac families diverge (the general term is 1).
    """
    if not family.is_ladder:
        raise FamilyError("ladder summation applies to ladder families")
    if max_terms < 1:
        raise DomainError(f"need a positive term budget, got {max_terms}")
    if family.is_kac:
        return SeriesResult(Verdict.DIVERGES)
    c = _family_decay_exact(family)
    tol_value = _tol_mpf(tol)
    bits = bits or intervals.DEFAULT_BITS
    while bits <= MAX_BITS:
        with intervals.precision(bits):
            y = intervals.isqrt(intervals.make(1 / c))  # c^(-1/2) < 1
            ratios = _iter_family_ratios(family)
            next(ratios)  # A_0 = 1
            inv_sqrt_a1 = None
            partial = intervals.make(1)  # n = 0 term
            previous = Fraction(1)
            for n in range(1, max_terms + 1):
                current = next(ratios)
                if n == 1:
                    inv_sqrt_a1 = intervals.isqrt(intervals.make(1 / current))
                # Exact sanity check of the certified decay step.
                elif current < c * previous:
                    raise AssertionError("decay step violated; recursion bug")
                previous = current
                partial += intervals.isqrt(intervals.make(1 / current))
                majorant = inv_sqrt_a1 * y**n / (1 - y)
                if intervals.upper(majorant) <= tol_value:
                    tail = intervals.from_endpoints(0, intervals.upper(majorant))
                    return SeriesResult(Verdict.CONVERGES, partial, tail, n + 1)
            if intervals.lower(majorant) > tol_value:
                break  # the tail genuinely exceeds tol; more bits cannot help
        bits *= 2
    return SeriesResult(Verdict.UNDETERMINED, partial, None, max_terms + 1)


def _is_exact_one(x: Interval) -> bool:
    return intervals.lower(x) == 1 and intervals.upper(x) == 1


def block_sum_S(
    q_c: IntervalLike,
    q_q: IntervalLike,
    tol,
    bits: int | None = None,
    max_terms: int = DEFAULT_MAX_TERMS,
) -> SeriesResult:
    """Certified sum over one family of alternating blocks.

    Term n is ``sqrt(d_c(n) / d_q(n))`` where ``d(n)`` is the order-(n+1)
    deformed integer at `q_c` (classical; exactly ``n + 1`` at ``q_c = 1``)
    and at `q_q` (quantum).  The tail is bounded by a geometric majorant in
    ``sqrt(q_q/q_c)``.  Exactly equal deformation parameters mean Kac type,
    where every term is 1 and the sum diverges.
    """
    if max_terms < 1:
        raise DomainError(f"need a positive term budget, got {max_terms}")
    exact_kinds = (int, str, Fraction)
    if isinstance(q_c, exact_kinds) and isinstance(q_q, exact_kinds):
        if Fraction(q_c) == Fraction(q_q):
            return SeriesResult(Verdict.DIVERGES)
    tol_value = _tol_mpf(tol)
    bits = bits or intervals.DEFAULT_BITS
    while bits <= MAX_BITS:
        with intervals.precision(bits):
            qc = intervals.make(q_c)
            qq = intervals.make(q_q)
            if intervals.lower(qq) <= 0 or intervals.upper(qc) > 1:
                raise DomainError(f"need 0 < q_q <= q_c <= 1, got {qq}, {qc}")
            if intervals.identical(qc, qq) and intervals.width(qc) == 0:
                return SeriesResult(Verdict.DIVERGES)
            if not intervals.certainly_lt(qq, qc):
                raise DomainError(
                    f"cannot separate q_q={qq} from q_c={qc}; pass exact values"
                )
            dim2_case = _is_exact_one(qc)
            if not dim2_case and intervals.upper(qc) >= 1:
                raise DomainError(f"q_c must be exactly 1 or certified below 1, got {qc}")

            if dim2_case:
                x = intervals.isqrt(qq)
            else:
                x = intervals.isqrt(qq / qc)
                majorant_scale = 1 / intervals.isqrt((1 - qc * qc) * (1 + qq * qq))
            partial = intervals.make(0)
            for n in range(1, max_terms + 1):
                top = q_number(n + 1).evaluate(qc)
                bottom = q_number(n + 1).evaluate(qq)
                partial += intervals.isqrt(top / bottom)
                if dim2_case:
                    # sum_(m>n) sqrt(m+1) x^m <= x^(n+1)((n+2)-(n+1)x)/(1-x)^2
                    majorant = x ** (n + 1) * ((n + 2) - (n + 1) * x) / (1 - x) ** 2
                else:
                    majorant = majorant_scale * x ** (n + 1) / (1 - x)
                if intervals.upper(majorant) <= tol_value:
                    tail = intervals.from_endpoints(0, intervals.upper(majorant))
                    return SeriesResult(Verdict.CONVERGES, partial, tail, n)
            if intervals.lower(majorant) > tol_value:
                break  # the tail genuinely exceeds tol; more bits cannot help
        bits *= 2
    return SeriesResult(Verdict.UNDETERMINED, partial, None, max_terms)


def total_sum_free(block_sum: Interval | SeriesResult) -> SeriesResult:
    """Total over all free-unitary labels from the one-family block sum.

    Chained blocks contribute geometrically, so the total is
    ``1 + 2 S / (1 - S)`` when ``S < 1`` is certified and diverges when
    ``S >= 1``.  A block enclosure straddling 1 stays undetermined.
    """
    if isinstance(block_sum, SeriesResult):
        if block_sum.verdict is Verdict.DIVERGES:
            return SeriesResult(Verdict.DIVERGES)
        if block_sum.verdict is Verdict.UNDETERMINED:
            return SeriesResult(Verdict.UNDETERMINED)
        s = block_sum.sum_enclosure()
    else:
        s = intervals.make(block_sum)
    if intervals.lower(s) < 0:
        raise DomainError(f"block sum must be nonnegative, got {s}")
    if intervals.upper(s) < 1:
        total = 1 + 2 * s / (1 - s)
        return SeriesResult(
            Verdict.CONVERGES, total, intervals.make(0), 0
        )
    if intervals.lower(s) >= 1:
        return SeriesResult(Verdict.DIVERGES)
    return SeriesResult(Verdict.UNDETERMINED)


# ---------------------------------------------------------------------------
# closed-form bounds and certified thresholds


def bound_S_dim2(q: IntervalLike, bits: int | None = None) -> Interval:
    """Closed-form upper bound for the block sum when the fundamental has
    classical dimension 2:

        sqrt(q)(2 - sqrt(q)) / (sqrt(1 + q^2) (1 - sqrt(q))^2),

    monotone increasing on (0, 1).
    """
    with intervals.precision(bits or intervals.DEFAULT_BITS):
        point = intervals.make(q)
        if intervals.lower(point) <= 0 or intervals.upper(point) >= 1:
            raise DomainError(f"q must lie strictly inside (0, 1), got {point}")
        root = intervals.isqrt(point)
        return (
            root
            * (2 - root)
            / (intervals.isqrt(1 + point * point) * (1 - root) ** 2)
        )


def bound_S_dimge3(
    q_c: IntervalLike, q_q: IntervalLike, bits: int | None = None
) -> Interval:
    """Geometric majorant of the block sum for fundamental dimension >= 3:

        (1 - q_c^2)^(-1/2) * sqrt(q_q/q_c) / (1 - sqrt(q_q/q_c)).

    Its unit crossing in the ratio q_q/q_c, at the extreme admissible q_c,
    is exactly the ratio threshold reported by
    :func:`threshold_ratio_dimge3`.
    """
    with intervals.precision(bits or intervals.DEFAULT_BITS):
        qc = intervals.make(q_c)
        qq = intervals.make(q_q)
        if intervals.lower(qq) <= 0 or intervals.upper(qc) >= 1:
            raise DomainError(f"need 0 < q_q < q_c < 1, got {qq}, {qc}")
        if not intervals.certainly_lt(qq, qc):
            raise DomainError(f"need q_q < q_c certified, got {qq}, {qc}")
        root = intervals.isqrt(qq / qc)
        return 1 / intervals.isqrt(1 - qc * qc) * root / (1 - root)


def _certified_increasing(
    f: Callable[[Interval], Interval], grid: Sequence[Fraction]
) -> None:
    """Certify strict growth of `f` across consecutive grid points."""
    values = [f(intervals.make(x)) for x in grid]
    for left, right in zip(values, values[1:]):
        if not intervals.certainly_lt(left, right):
            raise DomainError("monotonicity could not be certified on the grid")


def _bisect_unit_crossing(
    f: Callable[[Interval], Interval],
    lo: Fraction,
    hi: Fraction,
    tol,
    bits: int,
    grid_points: int = 17,
) -> Interval:
    """Enclose the unique solution of ``f = 1`` in [lo, hi] to width `tol`.

    `f` must be increasing; this is certified on a coarse grid first.
    Midpoint sign evaluations that straddle 1 trigger precision escalation.
    """
    tol_fraction = Fraction(str(tol)) if not isinstance(tol, (int, Fraction)) else Fraction(tol)
    if tol_fraction <= 0:
        raise DomainError(f"tolerance must be positive, got {tol}")
    span = hi - lo
    grid = [lo + span * k / (grid_points - 1) for k in range(grid_points)]
    with intervals.precision(bits):
        _certified_increasing(f, grid)
        if not intervals.certainly_lt(f(intervals.make(lo)), 1):
            raise DomainError(f"no sign change: f({lo}) not certified below 1")
        if not intervals.certainly_gt(f(intervals.make(hi)), 1):
            raise DomainError(f"no sign change: f({hi}) not certified above 1")
    while hi - lo > tol_fraction:
        mid = (lo + hi) / 2
        eval_bits = bits
        while True:
            with intervals.precision(eval_bits):
                value = f(intervals.make(mid))
            if intervals.upper(value) < 1:
                lo = mid
                break
            if intervals.lower(value) > 1:
                hi = mid
                break
            eval_bits *= 2
            if eval_bits > MAX_BITS:
                raise BudgetError(
                    f"sign of f({mid}) undecided at {MAX_BITS} bits"
                )
    return intervals.from_endpoints(lo, hi)


def threshold_dim2(tol, bits: int | None = None) -> Interval:
    """Certified unit crossing of :func:`bound_S_dim2` (near 0.0861)."""
    bits = bits or intervals.DEFAULT_BITS

    def f(x: Interval) -> Interval:
        return bound_S_dim2(x, bits=iv.prec)

    return _bisect_unit_crossing(f, Fraction(1, 100), Fraction(1, 2), tol, bits)


def threshold_ratio_dimge3(bits: int | None = None) -> Interval:
    """Closed-form ratio threshold ``(1 + sqrt((3 sqrt(5) + 5)/10))^(-2)``,
    with decimal expansion starting 0.2306."""
    with intervals.precision(bits or intervals.DEFAULT_BITS):
        u = intervals.isqrt((3 * intervals.isqrt(intervals.make(5)) + 5) / 10)
        return (1 + u) ** (-2)


def _remark_two_term(x: Interval) -> Interval:
    two = q_number(2).evaluate(x)
    three = q_number(3).evaluate(x)
    return intervals.isqrt(2 / two) + intervals.isqrt(3 / three)


def threshold_remark(tol, bits: int | None = None) -> Interval:
    """Certified root of ``sqrt(2/[2]) + sqrt(3/[3]) = 1`` (near 0.2134).

    The left side is a two-term lower bound for the dimension-2 block sum,
    so above this root that sum certainly exceeds 1.
    """
    bits = bits or intervals.DEFAULT_BITS
    return _bisect_unit_crossing(
        _remark_two_term, Fraction(1, 100), Fraction(1, 2), tol, bits
    )


# ---------------------------------------------------------------------------
# verdict logic


def kac_part(family: FusionFamily, n_max: int) -> list[int]:
    """Ladder labels up to `n_max` whose intertwiner is certified trivial,
    i.e. whose quantum dimension equals the classical one exactly.

    Non-Kac families yield exactly the trivial label."""
    if not family.is_ladder:
        raise FamilyError("kac_part applies to ladder families")
    return [
        n
        for n in range(n_max + 1)
        if fusion.dim(n, family, "quantum") == fusion.dim(n, family, "classical")
    ]


@dataclass(frozen=True)
class MasaVerdict:
    """Combined verdict for one family.

    `verdict_text` is a fixed enumeration: ``"not a MASA"`` requires both a
    certified quasi-split inclusion and all nontrivial labels carrying a
    nontrivial intertwiner; the free-unitary conclusion addresses the
    relative commutant instead, since its class-function algebra is
    non-abelian.
    """

    quasi_split: QuasiSplit
    all_nontrivial_rho_nontrivial: bool
    verdict_text: str
    series: SeriesResult
    block_sum: SeriesResult | None = None


def masa_verdict(
    family: FusionFamily,
    tol=Fraction(1, 10**6),
    n_max: int = 50,
    bits: int | None = None,
    max_terms: int = DEFAULT_MAX_TERMS,
) -> MasaVerdict:
    """Run the summability criterion and the intertwiner scan for `family`."""
    if family.is_ladder:
        series = quasi_split_sum_ladder(family, tol, bits=bits, max_terms=max_terms)
        all_nontrivial = kac_part(family, n_max) == [0]
        block = None
    else:
        if family.is_kac:
            block = SeriesResult(Verdict.DIVERGES)
        else:
            q_c: IntervalLike
            if family.dim_c_fund == 2:
                q_c = 1
            else:
                with intervals.precision(bits or intervals.DEFAULT_BITS):
                    q_c = solve_fundamental_q(family.dim_c_fund)
            with intervals.precision(bits or intervals.DEFAULT_BITS):
                q_q = solve_fundamental_q(intervals.make(family.dim_q_fund))
            block = block_sum_S(q_c, q_q, tol, bits=bits, max_terms=max_terms)
        series = total_sum_free(block)
        # Non-Kac free-unitary families have nontrivial intertwiners on every
        # nontrivial word; Kac ones on none.
        all_nontrivial = not family.is_kac

    if series.verdict is Verdict.CONVERGES:
        quasi = QuasiSplit.YES
    else:
        quasi = QuasiSplit.UNDETERMINED

    if quasi is QuasiSplit.YES and all_nontrivial:
        text = VERDICT_NOT_MASA if family.is_ladder else VERDICT_RELATIVE_COMMUTANT
    else:
        text = VERDICT_NO_CONCLUSION
    return MasaVerdict(quasi, all_nontrivial, text, series, block)
