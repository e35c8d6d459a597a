"""Irreducible labels, tensor decompositions and dimension functions.

Three fusion families are modeled:

* ``SU2_LADDER`` -- self-conjugate ladder with ``1 (x) n = (n-1) + (n+1)``,
* ``SO3_LADDER`` -- self-conjugate ladder with ``1 (x) n = (n-1) + n + (n+1)``,
* ``FREE_UNITARY`` -- labels are words over ``{A, B}`` forming a free monoid,
  with the conjugate of a word obtained by reversing it and swapping letters.

Ladder labels are plain nonnegative ints (0 is trivial); free labels are
strings over ``A``/``B`` (the empty string is trivial).  All dimensions are
computed exactly: classical dimensions are ints, quantum dimensions are
:class:`~fractions.Fraction` values driven by the same linear recursions.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence, Union

from . import intervals
from .errors import DomainError, FamilyError
from .intervals import Interval, IntervalLike

Label = Union[int, str]
Decomposition = dict  # label -> positive multiplicity, canonically ordered

WORD_ALPHABET = "AB"
_CONJUGATE_LETTER = {"A": "B", "B": "A"}


class FamilyKind(Enum):
    SU2_LADDER = "su2-ladder"
    SO3_LADDER = "so3-ladder"
    FREE_UNITARY = "free-unitary"


def exact_fraction(value: int | str | Fraction) -> Fraction:
    """Exact conversion; floats are refused to avoid silent binary rounding."""
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(
            f"pass an int, Fraction or decimal string for exactness, got {value!r}"
        )
    return Fraction(value)


@dataclass(frozen=True)
class FusionFamily:
    """Fusion data of one family: kind plus fundamental dimensions.

    `dim_q_fund` must dominate `dim_c_fund`; equality is the Kac case, where
    every quantum dimension collapses onto the classical one.
    """

    kind: FamilyKind
    dim_c_fund: int
    dim_q_fund: Fraction

    def __post_init__(self) -> None:
        if self.dim_c_fund < 2:
            raise DomainError(f"fundamental dimension must be >= 2, got {self.dim_c_fund}")
        if self.dim_q_fund < self.dim_c_fund:
            raise DomainError(
                f"quantum dimension {self.dim_q_fund} may not fall below the "
                f"classical dimension {self.dim_c_fund}"
            )

    @property
    def is_kac(self) -> bool:
        return self.dim_q_fund == self.dim_c_fund

    @property
    def is_ladder(self) -> bool:
        return self.kind is not FamilyKind.FREE_UNITARY

    def trivial_label(self) -> Label:
        return 0 if self.is_ladder else ""


def _dim_q_from_args(
    dim_fund: int,
    dim_q_fund: int | str | Fraction | None,
    q: int | str | Fraction | None,
) -> Fraction:
    if dim_q_fund is not None and q is not None:
        raise DomainError("give either dim_q_fund or q, not both")
    if q is not None:
        qq = exact_fraction(q)
        if not (0 < qq <= 1):
            raise DomainError(f"deformation parameter must lie in (0, 1], got {qq}")
        return qq + 1 / qq
    if dim_q_fund is not None:
        return exact_fraction(dim_q_fund)
    return Fraction(dim_fund)  # Kac by default


def su2_ladder(dim_fund: int, dim_q_fund=None, q=None) -> FusionFamily:
    """Ladder family with two-term fusion; `q` sets dim_q = q + 1/q."""
    return FusionFamily(FamilyKind.SU2_LADDER, dim_fund, _dim_q_from_args(dim_fund, dim_q_fund, q))


def so3_ladder(dim_fund: int, dim_q_fund=None) -> FusionFamily:
    """Ladder family with three-term fusion (quantum automorphism type)."""
    return FusionFamily(FamilyKind.SO3_LADDER, dim_fund, _dim_q_from_args(dim_fund, dim_q_fund, None))


def free_unitary(dim_fund: int, dim_q_fund=None, q=None) -> FusionFamily:
    """Free-monoid family; labels are words over {A, B}."""
    return FusionFamily(FamilyKind.FREE_UNITARY, dim_fund, _dim_q_from_args(dim_fund, dim_q_fund, q))


# ---------------------------------------------------------------------------
# label handling


def check_label(label: Label, family: FusionFamily) -> Label:
    """Validate that `label` belongs to `family`; return it unchanged."""
    if family.is_ladder:
        if not isinstance(label, int) or isinstance(label, bool) or label < 0:
            raise FamilyError(f"ladder families use nonnegative int labels, got {label!r}")
        return label
    if not isinstance(label, str) or any(ch not in WORD_ALPHABET for ch in label):
        raise FamilyError(f"free-unitary labels are words over {{A, B}}, got {label!r}")
    return label


def label_sort_key(label: Label):
    if isinstance(label, int):
        return (label,)
    return (len(label), label)


def _canonical(terms: dict) -> Decomposition:
    return {k: terms[k] for k in sorted(terms, key=label_sort_key) if terms[k] > 0}


def conjugate_word(word: str) -> str:
    """Reverse the word and swap the two letters (antimultiplicative)."""
    return "".join(_CONJUGATE_LETTER[ch] for ch in reversed(word))


def conjugate(label: Label, family: FusionFamily) -> Label:
    """Conjugate label: ladder labels are self-conjugate, words reverse-swap."""
    check_label(label, family)
    if family.is_ladder:
        return label
    return conjugate_word(label)


def all_words(max_len: int, min_len: int = 0) -> Iterator[str]:
    """All words over {A, B} with length in [min_len, max_len], short first."""
    for length in range(min_len, max_len + 1):
        for letters in itertools.product(WORD_ALPHABET, repeat=length):
            yield "".join(letters)


def alternating_word(length: int, start: str = "A") -> str:
    """The alternating word of given length beginning with `start`."""
    if start not in WORD_ALPHABET:
        raise DomainError(f"start letter must be A or B, got {start!r}")
    other = _CONJUGATE_LETTER[start]
    return "".join(start if i % 2 == 0 else other for i in range(length))


# ---------------------------------------------------------------------------
# tensor products


def tensor_fundamental(n: int, family: FusionFamily) -> Decomposition:
    """Decomposition of fundamental (x) ladder-n."""
    if not family.is_ladder:
        raise FamilyError("tensor_fundamental applies to ladder families only")
    check_label(n, family)
    if n == 0:
        return {1: 1}
    if family.kind is FamilyKind.SU2_LADDER:
        return _canonical({n - 1: 1, n + 1: 1})
    return _canonical({n - 1: 1, n: 1, n + 1: 1})


def tensor_free(x: str, y: str) -> Decomposition:
    """Free fusion: sum of ``a * b`` over splits ``x = a c``, ``y = conj(c) b``."""
    for word in (x, y):
        if any(ch not in WORD_ALPHABET for ch in word):
            raise FamilyError(f"free-unitary labels are words over {{A, B}}, got {word!r}")
    terms: dict[str, int] = {}
    for cut in range(len(x) + 1):
        head, tail = x[:cut], x[cut:]
        mirrored = conjugate_word(tail)
        if y.startswith(mirrored):
            product = head + y[len(mirrored):]
            terms[product] = terms.get(product, 0) + 1
    return _canonical(terms)


def factorize(word: str) -> list[str]:
    """Split a nonempty word into maximal alternating blocks.

    Cuts fall exactly between equal adjacent letters; the last letter of each
    block then matches the first letter of the next, re-concatenation gives
    back the input, and the factorization is the unique chained one.
    """
    if not word:
        raise DomainError("the empty word has no block factorization")
    if any(ch not in WORD_ALPHABET for ch in word):
        raise FamilyError(f"expected a word over {{A, B}}, got {word!r}")
    blocks = []
    start = 0
    for i in range(1, len(word)):
        if word[i] == word[i - 1]:
            blocks.append(word[start:i])
            start = i
    blocks.append(word[start:])
    return blocks


def tensor_reduce(
    labels: Sequence[Label], family: FusionFamily, start: Label | None = None
) -> Decomposition:
    """Decomposition of ``start (x) labels[0] (x) ... (x) labels[-1]``.

    Ladder families are generated by their fundamental, so ladder entries
    must be 0 or 1; free-unitary entries may be arbitrary words.
    """
    state: dict[Label, int] = {check_label(start, family) if start is not None else family.trivial_label(): 1}
    for label in labels:
        check_label(label, family)
        if family.is_ladder and label not in (0, 1):
            raise DomainError(
                "ladder products are built from iterated fundamental factors; "
                f"use labels 0 or 1, got {label}"
            )
        next_state: dict[Label, int] = {}
        for current, mult in state.items():
            if family.is_ladder:
                parts = {current: 1} if label == 0 else tensor_fundamental(current, family)
            else:
                parts = tensor_free(current, label)
            for part, part_mult in parts.items():
                next_state[part] = next_state.get(part, 0) + mult * part_mult
        state = next_state
    return _canonical(state)


def invariant_multiplicity(labels: Sequence[Label], family: FusionFamily) -> int:
    """Multiplicity of the trivial label in the iterated tensor product."""
    return tensor_reduce(labels, family).get(family.trivial_label(), 0)


# ---------------------------------------------------------------------------
# dimensions


@lru_cache(maxsize=None)
def _ladder_value(kind: FamilyKind, d1: Fraction, n: int) -> Fraction:
    """n-th term of the dimension recursion forced by the fundamental fusion."""
    if n == 0:
        return Fraction(1)
    if n == 1:
        return d1
    prev2, prev1 = Fraction(1), d1
    for _ in range(n - 1):
        if kind is FamilyKind.SO3_LADDER:
            prev2, prev1 = prev1, d1 * prev1 - prev1 - prev2
        else:
            prev2, prev1 = prev1, d1 * prev1 - prev2
    return prev1


def _chebyshev_value(d1: Fraction, n: int) -> Fraction:
    """Two-term recursion value; equals the deformed integer of order n+1
    evaluated at the root of ``x + 1/x = d1`` (and n+1 itself when d1 = 2)."""
    return _ladder_value(FamilyKind.SU2_LADDER, d1, n)


def dim(label: Label, family: FusionFamily, which: str = "classical") -> int | Fraction:
    """Exact classical or quantum dimension of a label.

    Ladder dimensions follow the linear recursion of the family; a free word
    contributes the product over its alternating blocks, where a block of
    length n carries the order-(n+1) deformed integer of the fundamental
    dimension.
    """
    if which not in ("classical", "quantum"):
        raise DomainError(f"which must be 'classical' or 'quantum', got {which!r}")
    check_label(label, family)
    d1 = Fraction(family.dim_c_fund) if which == "classical" else family.dim_q_fund
    if family.is_ladder:
        value = _ladder_value(family.kind, d1, label)
    else:
        value = Fraction(1)
        if label:
            for block in factorize(label):
                value *= _chebyshev_value(d1, len(block))
    if which == "classical":
        assert value.denominator == 1
        return int(value)
    return value


def dim_interval(label: Label, family: FusionFamily, which: str = "classical") -> Interval:
    """The exact dimension wrapped as a rigorous enclosure."""
    return intervals.make(Fraction(dim(label, family, which)))


def rho_spectrum(n: int, q: IntervalLike) -> list[Interval]:
    """Spectrum ``{q^(-n+2k) : k = 0..n}`` of the positive intertwiner.

    Geometrically spaced so the trace is the order-(n+1) deformed integer and
    matches the trace of the inverse.
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise DomainError(f"ladder index must be a nonnegative int, got {n!r}")
    point = intervals.make(q)
    if intervals.lower(point) <= 0 or intervals.upper(point) > 1:
        raise DomainError(f"spectral parameter must lie in (0, 1], got {point}")
    return [point ** (-n + 2 * k) for k in range(n + 1)]


def rho_spectrum_exact(n: int, q: Fraction) -> list[Fraction]:
    """Exact rational form of :func:`rho_spectrum` for rational q."""
    if not (0 < q <= 1):
        raise DomainError(f"spectral parameter must lie in (0, 1], got {q}")
    return [q ** (-n + 2 * k) for k in range(n + 1)]
