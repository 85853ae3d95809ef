import math
import random
from decimal import Decimal

import pytest

from rumourlens.errors import EmptyText
from rumourlens.readability import (
    all_scores,
    dale_chall,
    flesch,
    flesch_kincaid,
    gunning_fog,
    smog,
)
from rumourlens.textprep import TextStats


def make_stats(words=10, sentences=1, syllables=10, polysyllables=0, complex_words=0, difficult_words=0):
    return TextStats(
        words=words,
        sentences=sentences,
        syllables=syllables,
        polysyllables=polysyllables,
        complex_words=complex_words,
        difficult_words=difficult_words,
    )


TOL = 1e-9


class TestFormulaValues:
    """Direct formula evaluations, exact to 1e-9."""

    def test_flesch_easy(self):
        assert flesch(make_stats(10, 1, 10)) == pytest.approx(112.085, abs=TOL)

    def test_flesch_mixed(self):
        assert flesch(make_stats(20, 2, 30)) == pytest.approx(69.785, abs=TOL)

    def test_flesch_kincaid_easy(self):
        assert flesch_kincaid(make_stats(10, 1, 10)) == pytest.approx(0.11, abs=TOL)

    def test_flesch_kincaid_negative_allowed(self):
        assert flesch_kincaid(make_stats(5, 1, 5)) == pytest.approx(-1.84, abs=TOL)

    def test_gunning_fog_no_complex(self):
        assert gunning_fog(make_stats(10, 1, 10)) == pytest.approx(4.0, abs=TOL)

    def test_gunning_fog_half_complex(self):
        assert gunning_fog(make_stats(10, 1, 10, complex_words=5)) == pytest.approx(24.0, abs=TOL)

    def test_smog_floor(self):
        assert smog(make_stats(10, 1, 10, polysyllables=0)) == pytest.approx(3.1291, abs=TOL)

    def test_smog_thirty_each(self):
        expected = 1.0430 * math.sqrt(30.0) + 3.1291
        assert smog(make_stats(300, 30, 400, polysyllables=30)) == pytest.approx(expected, abs=TOL)

    def test_dale_chall_no_difficult(self):
        assert dale_chall(make_stats(10, 1, 10)) == pytest.approx(0.496, abs=TOL)

    def test_dale_chall_adjustment(self):
        assert dale_chall(make_stats(10, 1, 10, difficult_words=2)) == pytest.approx(7.2905, abs=TOL)


def reference_scores(stats):
    """Independent re-derivation with Decimal arithmetic from the
    published coefficients; used only to cross-check the float path."""
    W = Decimal(stats.words)
    S = Decimal(stats.sentences)
    Y = Decimal(stats.syllables)
    wps = W / S
    spw = Y / W
    fle = Decimal("206.835") - Decimal("1.015") * wps - Decimal("84.6") * spw
    fk = Decimal("0.39") * wps + Decimal("11.8") * spw - Decimal("15.59")
    fog = Decimal("0.4") * (wps + 100 * Decimal(stats.complex_words) / W)
    smog_val = Decimal(
        1.0430 * math.sqrt(float(Decimal(stats.polysyllables) * 30 / S))
    ) + Decimal("3.1291")
    diff_pct = 100 * Decimal(stats.difficult_words) / W
    dc = Decimal("0.1579") * diff_pct + Decimal("0.0496") * wps
    if diff_pct > 5:
        dc += Decimal("3.6365")
    return [float(fle), float(fk), float(fog), float(smog_val), float(dc)]


class TestReferenceAgreement:
    def test_fifty_documents(self):
        rng = random.Random(2024)
        for _ in range(50):
            words = rng.randrange(3, 120)
            sentences = rng.randrange(1, max(2, words // 4))
            syllables = words + rng.randrange(0, 2 * words)
            polys = rng.randrange(0, words + 1)
            complexes = rng.randrange(0, words + 1)
            difficult = rng.randrange(0, words + 1)
            stats = make_stats(words, sentences, syllables, polys, complexes, difficult)
            got = all_scores(stats)
            ref = reference_scores(stats)
            values = [got.flesch, got.flesch_kincaid, got.gunning_fog, got.smog, got.dale_chall]
            for v, r in zip(values, ref):
                assert v == pytest.approx(r, abs=1e-6)


class TestProperties:
    def test_empty_raises(self):
        for fn in (flesch, flesch_kincaid, gunning_fog, smog, dale_chall):
            with pytest.raises(EmptyText):
                fn(make_stats(words=0, sentences=0, syllables=0))

    def test_flesch_decreases_fk_increases_with_syllables(self):
        previous_flesch = float("inf")
        previous_fk = float("-inf")
        for syllables in range(10, 40, 3):
            s = make_stats(10, 1, syllables)
            assert flesch(s) < previous_flesch
            assert flesch_kincaid(s) > previous_fk
            previous_flesch = flesch(s)
            previous_fk = flesch_kincaid(s)

    def test_duplicating_text_leaves_scores_unchanged(self):
        base = make_stats(12, 2, 19, polysyllables=2, complex_words=3, difficult_words=4)
        doubled = make_stats(24, 4, 38, polysyllables=4, complex_words=6, difficult_words=8)
        for fn in (flesch, flesch_kincaid, gunning_fog, smog, dale_chall):
            assert fn(base) == pytest.approx(fn(doubled), abs=1e-12)

    def test_unclamped(self):
        assert flesch(make_stats(1, 1, 1)) > 100
        assert flesch(make_stats(40, 1, 160)) < 0
