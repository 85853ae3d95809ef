"""Tokenization, syllable counting and the three cleaning pipelines.

Three distinct preparations feed the downstream feature families:

* ``clean_for_readability`` keeps sentence punctuation (the period matters
  for sentence counting) while stripping tweet markup.
* raw tokens (``tokenize``) feed the dictionary engine, which needs every
  word and punctuation mark.
* ``clean_for_senticnet`` lowercases, lemmatizes and drops stopwords while
  always preserving negation words.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from importlib import resources

from .errors import EmptyText

VOWELS = set("aeiouy")

#: Negations survive every stopword filter.
NEGATIONS = {"not", "no", "never", "nor", "neither", "cannot", "n't"}


class TokenKind(Enum):
    WORD = "word"
    PUNCTUATION = "punctuation"
    HASHTAG = "hashtag"
    MENTION = "mention"
    URL = "url"
    EMOJI = "emoji"
    NUMBER = "number"


@dataclass(frozen=True)
class Token:
    surface: str
    kind: TokenKind


# Emoji coverage: Misc Symbols, Misc Symbols and Pictographs, Emoticons,
# Transport and Map, Supplemental Symbols and Pictographs.
_EMOJI_RANGES = "☀-⛿\U0001f300-\U0001f5ff\U0001f600-\U0001f64f\U0001f680-\U0001f6ff\U0001f900-\U0001f9ff"

_TOKEN_RE = re.compile(
    r"""
    (?P<url>https?://\S+|www\.\S+)
  | (?P<mention>@\w+)
  | (?P<hashtag>\#\w+)
  | (?P<emoji>[{emoji}])
  | (?P<number>\d+(?:[.,]\d+)*)
  | (?P<word>[^\W\d_]+(?:'[^\W\d_]+)*)
  | (?P<punct>[^\w\s])
    """.format(emoji=_EMOJI_RANGES),
    re.VERBOSE,
)

_GROUP_KIND = {
    "url": TokenKind.URL,
    "mention": TokenKind.MENTION,
    "hashtag": TokenKind.HASHTAG,
    "emoji": TokenKind.EMOJI,
    "number": TokenKind.NUMBER,
    "word": TokenKind.WORD,
    "punct": TokenKind.PUNCTUATION,
}


def tokenize(text: str) -> list[Token]:
    """Split text into classified tokens. Total: never raises.

    URLs, mentions (@x), hashtags (#x) and emoji are recognised before
    words, so the kinds are mutually exclusive. Words are alphabetic runs
    with internal apostrophes; every other non-space character becomes a
    single punctuation token.
    """
    tokens = []
    for m in _TOKEN_RE.finditer(text):
        kind = _GROUP_KIND[m.lastgroup]
        tokens.append(Token(m.group(), kind))
    return tokens


def count_syllables(word: str) -> int:
    """Heuristic syllable count: maximal vowel groups (aeiouy), with a
    silent trailing 'e' subtracted unless the word ends in consonant+'le'.
    Never below 1.
    """
    w = word.lower().strip("'")
    groups = re.findall(r"[aeiouy]+", w)
    n = len(groups)
    if w.endswith("e") and not (
        len(w) >= 3 and w.endswith("le") and w[-3] not in VOWELS
    ):
        # only a lone trailing 'e' is silent ("see" keeps its group)
        if re.search(r"[^aeiouy]e$", w):
            n -= 1
    return max(n, 1)


_URL_RE = re.compile(r"https?://\S+|www\.\S+")
_MENTION_RE = re.compile(r"@\w+")
_HASHTAG_RE = re.compile(r"\#\w+")
_EMOJI_RE = re.compile(f"[{_EMOJI_RANGES}]")
_SPACE_BEFORE_PUNCT_RE = re.compile(r"\s+([.!?,;:])")


def clean_for_readability(text: str) -> str:
    """Remove tweet markup (hashtags, mentions, URLs, emoji) but keep
    sentence punctuation. Idempotent."""
    out = _URL_RE.sub(" ", text)
    out = _MENTION_RE.sub(" ", out)
    out = _HASHTAG_RE.sub(" ", out)
    out = _EMOJI_RE.sub(" ", out)
    out = re.sub(r"\s+", " ", out)
    out = _SPACE_BEFORE_PUNCT_RE.sub(r"\1", out)
    return out.strip()


class RuleLemmatizer:
    """Suffix-stripping lemmatizer with an exceptions table.

    The exceptions table (irregular form -> lemma) is consulted first;
    the suffix rules cover regular plural/-ing/-ed inflection.
    """

    def __init__(self, exceptions: dict[str, str] | None = None):
        self.exceptions = exceptions if exceptions is not None else load_lemma_exceptions()

    def lemmatize(self, word: str) -> str:
        w = word.lower()
        if w in self.exceptions:
            return self.exceptions[w]
        return self._apply_rules(w)

    @staticmethod
    def _undouble(stem: str) -> str:
        if len(stem) >= 2 and stem[-1] == stem[-2] and stem[-1] not in "lsz":
            return stem[:-1]
        return stem

    def _apply_rules(self, w: str) -> str:
        if len(w) > 5 and w.endswith("ing"):
            return self._undouble(w[:-3])
        if len(w) > 4 and w.endswith("ied"):
            return w[:-3] + "y"
        if len(w) > 4 and w.endswith("ed"):
            return self._undouble(w[:-2])
        if len(w) > 3 and w.endswith("ies"):
            return w[:-3] + "y"
        if len(w) > 3 and w.endswith(("ses", "xes", "zes", "ches", "shes", "oes")):
            return w[:-2]
        if len(w) > 3 and w.endswith("s") and not w.endswith(("ss", "us", "is")):
            return w[:-1]
        return w


def is_negation(word: str) -> bool:
    w = word.lower()
    return w in NEGATIONS or w.endswith("n't")


def clean_for_senticnet(
    text: str,
    stopwords: set[str] | None = None,
    lemmatizer: RuleLemmatizer | None = None,
) -> list[str]:
    """Lowercased, lemmatized word tokens with stopwords removed.

    Negation words always survive the stopword filter.
    """
    if stopwords is None:
        stopwords = load_stopwords()
    if lemmatizer is None:
        lemmatizer = RuleLemmatizer()
    out = []
    for tok in tokenize(text):
        if tok.kind is not TokenKind.WORD:
            continue
        w = tok.surface.lower()
        if is_negation(w):
            out.append(w)
            continue
        if w in stopwords:
            continue
        out.append(lemmatizer.lemmatize(w))
    return out


@dataclass(frozen=True)
class TextStats:
    words: int
    sentences: int
    syllables: int
    polysyllables: int
    complex_words: int
    difficult_words: int


_SENTENCE_END_RE = re.compile(r"[.!?]+(?:\s|$)")
_INFLECTION_RE = re.compile(r"(es|ed|ing)$")


def _is_complex(word: str) -> bool:
    # Gunning-Fog sense: three or more syllables, not counting words that
    # only cross the threshold through an -es/-ed/-ing suffix.
    if count_syllables(word) < 3:
        return False
    stripped = _INFLECTION_RE.sub("", word.lower())
    if stripped != word.lower() and len(stripped) >= 2:
        return count_syllables(stripped) >= 3
    return True


def text_stats(text: str, easy_words: set[str] | None = None) -> TextStats:
    """Counts over readability-cleaned text.

    Sentence boundaries are ``[.!?]+`` runs followed by space or end of
    text; any text containing a word has at least one sentence. Raises
    EmptyText when no word is present.
    """
    if easy_words is None:
        easy_words = load_easy_words()
    words = [t.surface for t in tokenize(text) if t.kind is TokenKind.WORD]
    if not words:
        raise EmptyText("no words in text")
    sentences = max(len(_SENTENCE_END_RE.findall(text)), 1)
    syllable_counts = [count_syllables(w) for w in words]
    return TextStats(
        words=len(words),
        sentences=sentences,
        syllables=sum(syllable_counts),
        polysyllables=sum(1 for c in syllable_counts if c >= 3),
        complex_words=sum(1 for w in words if _is_complex(w)),
        difficult_words=sum(1 for w in words if w.lower() not in easy_words),
    )


# ---------------------------------------------------------------------------
# bundled data files


def _read_data_text(name: str) -> str:
    return resources.files("rumourlens.data").joinpath(name).read_text(encoding="utf-8")


def load_wordlist(path=None, *, _default: str | None = None) -> set[str]:
    """One word per line; '#'-prefixed lines are comments."""
    if path is not None:
        with open(path, encoding="utf-8") as fh:
            raw = fh.read()
    else:
        raw = _read_data_text(_default)
    words = set()
    for line in raw.splitlines():
        line = line.strip().lower()
        if line and not line.startswith("#"):
            words.add(line)
    return words


def load_stopwords(path=None) -> set[str]:
    return load_wordlist(path, _default="stopwords.txt")


def load_easy_words(path=None) -> set[str]:
    return load_wordlist(path, _default="easy_words.txt")


def load_lemma_exceptions(path=None) -> dict[str, str]:
    """TSV of irregular form -> lemma."""
    if path is not None:
        with open(path, encoding="utf-8") as fh:
            raw = fh.read()
    else:
        raw = _read_data_text("lemma_exceptions.tsv")
    table = {}
    for line in raw.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        form, lemma = line.split("\t")
        table[form.lower()] = lemma.lower()
    return table
