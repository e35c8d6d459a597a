"""Labels, tensor decompositions, dimensions and spectra."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qclassfun import fusion, intervals
from qclassfun.errors import DomainError, FamilyError
from qclassfun.fusion import (
    all_words,
    conjugate,
    conjugate_word,
    dim,
    factorize,
    free_unitary,
    invariant_multiplicity,
    rho_spectrum,
    rho_spectrum_exact,
    so3_ladder,
    su2_ladder,
    tensor_free,
    tensor_fundamental,
    tensor_reduce,
)
from qclassfun.scalars import q_number, solve_fundamental_q

words = st.text(alphabet="AB", max_size=8)


# ---------------------------------------------------------------------------
# families


def test_family_requires_dominating_quantum_dimension():
    with pytest.raises(DomainError):
        su2_ladder(4, q=Fraction(3, 10))  # 0.3 + 1/0.3 < 4
    with pytest.raises(DomainError):
        so3_ladder(4, dim_q_fund=Fraction(7, 2))


def test_family_rejects_floats():
    with pytest.raises(TypeError):
        su2_ladder(2, q=0.3)


def test_kac_flag():
    assert su2_ladder(2).is_kac
    assert su2_ladder(2, q=1).is_kac
    assert not su2_ladder(2, q=Fraction(1, 2)).is_kac


# ---------------------------------------------------------------------------
# conjugation


def test_conjugate_examples():
    fam = su2_ladder(2, q=Fraction(1, 2))
    assert conjugate(3, fam) == 3
    uf = free_unitary(2)
    assert conjugate("AB", uf) == "AB"
    assert conjugate("AAB", uf) == "ABB"


@given(words)
def test_conjugation_involutive(w):
    assert conjugate_word(conjugate_word(w)) == w


@given(words, words)
def test_conjugation_antimultiplicative(x, y):
    assert conjugate_word(x + y) == conjugate_word(y) + conjugate_word(x)


# ---------------------------------------------------------------------------
# tensor products


def test_tensor_fundamental_examples():
    su2 = su2_ladder(2, q=Fraction(1, 2))
    assert tensor_fundamental(0, su2) == {1: 1}
    assert tensor_fundamental(4, su2) == {3: 1, 5: 1}
    so3 = so3_ladder(4, dim_q_fund=5)
    assert tensor_fundamental(1, so3) == {0: 1, 1: 1, 2: 1}


def test_tensor_fundamental_rejects_free_family():
    with pytest.raises(FamilyError):
        tensor_fundamental(1, free_unitary(2))


def test_tensor_free_examples():
    assert tensor_free("A", "B") == {"": 1, "AB": 1}
    assert tensor_free("A", "A") == {"AA": 1}
    assert tensor_free("", "BA") == {"BA": 1}


@given(words, words)
def test_tensor_free_conjugate_distributivity(x, y):
    direct = tensor_free(conjugate_word(y), conjugate_word(x))
    mirrored = {conjugate_word(t): m for t, m in tensor_free(x, y).items()}
    assert direct == mirrored


@given(words, words)
def test_tensor_free_decomposition_is_canonically_sorted(x, y):
    terms = list(tensor_free(x, y))
    assert terms == sorted(terms, key=lambda w: (len(w), w))


# ---------------------------------------------------------------------------
# block factorization


def test_factorize_examples():
    assert factorize("ABBA") == ["AB", "BA"]
    assert factorize("AAA") == ["A", "A", "A"]
    assert factorize("ABAB") == ["ABAB"]
    with pytest.raises(DomainError):
        factorize("")


def _is_alternating(block: str) -> bool:
    return all(a != b for a, b in zip(block, block[1:]))


def _chained(blocks: list[str]) -> bool:
    return all(x[-1] == y[0] for x, y in zip(blocks, blocks[1:]))


@given(words.filter(bool))
def test_factorize_properties(w):
    blocks = factorize(w)
    assert "".join(blocks) == w
    assert all(block and _is_alternating(block) for block in blocks)
    assert _chained(blocks)


def _all_chained_splittings(w: str):
    """Exhaustive oracle: every splitting into alternating chained blocks."""
    if len(w) == 1:
        yield [w]
        return
    for cut in range(1, len(w) + 1):
        head = w[:cut]
        if not _is_alternating(head):
            continue
        if cut == len(w):
            yield [head]
            continue
        rest = w[cut:]
        if rest[0] != head[-1]:
            continue
        for tail_blocks in _all_chained_splittings(rest):
            yield [head] + tail_blocks


@given(st.text(alphabet="AB", min_size=1, max_size=8))
def test_factorize_unique_among_chained_splittings(w):
    splittings = list(_all_chained_splittings(w))
    assert splittings == [factorize(w)]


# ---------------------------------------------------------------------------
# dimensions


def test_ladder_dim_examples():
    fam = su2_ladder(2, q=Fraction(1, 2))
    assert [dim(n, fam) for n in range(5)] == [1, 2, 3, 4, 5]
    assert dim(3, fam) == 4


def test_word_dim_examples():
    uf = free_unitary(2)
    assert dim("AB", uf) == 3
    assert dim("ABBA", uf) == 9
    # cross-check via additivity on AB (x) BA
    parts = tensor_free("AB", "BA")
    assert sum(m * dim(w, uf) for w, m in parts.items()) == dim("AB", uf) * dim("BA", uf)


def test_word_quantum_dim_is_deformed_integer_at_fundamental_root():
    # dual route: the exact block recursion against interval evaluation of
    # the deformed integer at the root of x + 1/x = dim_q.
    fam = free_unitary(2, dim_q_fund=Fraction(7, 2))
    with intervals.precision(128):
        root = solve_fundamental_q(Fraction(7, 2))
        for n in range(1, 8):
            word = fusion.alternating_word(n)
            expected = q_number(n + 1).evaluate(root)
            assert intervals.contains(expected, Fraction(dim(word, fam, "quantum")))


def test_dim_additivity_spot_checks():
    for fam in (su2_ladder(2, q=Fraction(1, 4)), so3_ladder(4, dim_q_fund=5)):
        for which in ("classical", "quantum"):
            d1 = Fraction(dim(1, fam, which))
            for n in range(8):
                total = sum(
                    m * Fraction(dim(k, fam, which))
                    for k, m in tensor_fundamental(n, fam).items()
                )
                assert total == d1 * Fraction(dim(n, fam, which))


def test_word_dim_additivity_exhaustive_length_6():
    fam = free_unitary(2, q=Fraction(1, 10))
    pool = list(all_words(6))
    for which in ("classical", "quantum"):
        cache: dict[str, Fraction] = {}

        def d(word: str) -> Fraction:
            if word not in cache:
                cache[word] = Fraction(dim(word, fam, which))
            return cache[word]

        for x in pool:
            for y in pool:
                total = sum(m * d(w) for w, m in tensor_free(x, y).items())
                assert total == d(x) * d(y)


def test_kac_degeneration_matches_classical():
    for fam in (su2_ladder(3), so3_ladder(5), free_unitary(2)):
        labels = range(9) if fam.is_ladder else all_words(4)
        for label in labels:
            assert dim(label, fam, "quantum") == dim(label, fam, "classical")


def test_dim_rejects_wrong_labels():
    with pytest.raises(FamilyError):
        dim("AB", su2_ladder(2))
    with pytest.raises(FamilyError):
        dim(2, free_unitary(2))
    with pytest.raises(FamilyError):
        dim("XY", free_unitary(2))


# ---------------------------------------------------------------------------
# spectra


def test_rho_spectrum_examples():
    with intervals.precision(128):
        trivial = rho_spectrum(0, Fraction(1, 2))
        assert len(trivial) == 1 and intervals.contains(trivial[0], 1)
        assert rho_spectrum_exact(1, Fraction(1, 2)) == [Fraction(2), Fraction(1, 2)]
        spectrum = rho_spectrum_exact(2, Fraction(1, 2))
        assert spectrum == [Fraction(4), Fraction(1), Fraction(1, 4)]
        assert sum(spectrum) == Fraction(21, 4)  # [3] at 1/2


def test_rho_spectrum_trace_balance_up_to_30():
    q = Fraction(2, 5)
    with intervals.precision(96):
        for n in range(31):
            spectrum = rho_spectrum_exact(n, q)
            assert sum(spectrum) == sum(1 / lam for lam in spectrum)
            enclosures = rho_spectrum(n, q)
            total = sum(enclosures, intervals.make(0))
            total_inv = sum((1 / lam for lam in enclosures), intervals.make(0))
            assert intervals.overlaps(total, total_inv)


def test_rho_spectrum_domain():
    with pytest.raises(DomainError):
        rho_spectrum(2, Fraction(3, 2))
    with pytest.raises(DomainError):
        rho_spectrum(-1, Fraction(1, 2))


# ---------------------------------------------------------------------------
# invariant multiplicities


def test_invariant_multiplicity_examples():
    assert invariant_multiplicity([1, 1, 1, 1], su2_ladder(2, q=Fraction(1, 2))) == 2
    assert invariant_multiplicity(list("ABAB"), free_unitary(2)) == 2
    assert invariant_multiplicity([1, 1, 1, 1], so3_ladder(4, dim_q_fund=5)) == 3


def test_invariant_multiplicity_rejects_mixed_families():
    with pytest.raises(FamilyError):
        invariant_multiplicity(["A", 1], su2_ladder(2))
    with pytest.raises(FamilyError):
        invariant_multiplicity([1], free_unitary(2))


def test_tensor_reduce_restricts_ladder_labels_to_fundamental():
    with pytest.raises(DomainError):
        tensor_reduce([2], su2_ladder(2))


def test_tensor_reduce_with_start_matches_manual_fold():
    fam = su2_ladder(2)
    state = tensor_reduce([1, 1], fam, start=3)
    # 1 (x) (1 (x) 3) = 1 (x) (2 + 4) = (1 + 3) + (3 + 5)
    assert state == {1: 1, 3: 2, 5: 1}


def test_tensor_reduce_empty_fold_is_trivial():
    assert tensor_reduce([], su2_ladder(2)) == {0: 1}
    assert tensor_reduce([], free_unitary(2)) == {"": 1}


def test_fundamental_power_multiplicities_are_ballot_numbers():
    # independent oracle: the multiplicity of label j in the k-th fundamental
    # power equals the count of nonnegative walks 0 -> j, i.e.
    # C(k, (k-j)/2) - C(k, (k-j)/2 - 1)
    import math

    fam = su2_ladder(2)
    for k in range(11):
        state = tensor_reduce([1] * k, fam)
        for j in range(k + 20):
            if (k - j) % 2 == 1 or j > k:
                expected = 0
            else:
                down = (k - j) // 2
                expected = math.comb(k, down) - (math.comb(k, down - 1) if down else 0)
            assert state.get(j, 0) == expected


@given(st.lists(st.sampled_from("AB"), max_size=7))
def test_free_moments_match_opposite_letter_matchings(letters):
    from qclassfun.noncrossing import count_ab_matchings

    word = "".join(letters)
    assert invariant_multiplicity(list(word), free_unitary(2)) == count_ab_matchings(word)
