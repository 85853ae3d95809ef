"""Per-tweet feature assembly across the four feature families.

One row per tweet: the dictionary profile (word count, every top-level
lexicon category, punctuation), the five readability indices, the five
concept-affect dimensions and the seven emotion scores. Families that
are undefined for a tweet (no words, no matched concepts, no emotion
provider configured) are absent, not zero; downstream consumers decide
whether to exclude (distribution tests) or impute (classification).
"""

from __future__ import annotations

from dataclasses import dataclass

from . import readability, senticnet
from .corpus import EventCorpus, Label, Role, Tweet
from .errors import EmptyText
from .lexicon import Lexicon, score
from .readability import SCORE_NAMES as READABILITY_FEATURES
from .senticnet import DIMENSIONS as SENTIC_FEATURES
from .emotions import LABELS as EMOTION_FEATURES
from .textprep import RuleLemmatizer, clean_for_readability, clean_for_senticnet, text_stats, tokenize

WC_FEATURE = "WC"
ALLPUNCT_FEATURE = "allpunct"

#: lexicon categories folded into engine-computed columns
_ENGINE_CATEGORY_NAMES = {"wc", "allpunct"}


@dataclass(frozen=True)
class TweetFeatures:
    tweet_id: str
    event: str
    role: Role
    label: Label
    empty_text: bool
    values: dict[str, float | None]


def lexicon_feature_names(lexicon: Lexicon) -> list[str]:
    cats = [c for c in lexicon.top_level() if c.lower() not in _ENGINE_CATEGORY_NAMES]
    return [WC_FEATURE] + cats + [ALLPUNCT_FEATURE]


def feature_names(lexicon: Lexicon, with_emotions: bool = True) -> list[str]:
    names = lexicon_feature_names(lexicon)
    names += list(READABILITY_FEATURES)
    names += list(SENTIC_FEATURES)
    if with_emotions:
        names += list(EMOTION_FEATURES)
    return names


class Featurizer:
    def __init__(
        self,
        lexicon: Lexicon,
        sentic_table: senticnet.SenticTable,
        emotion_provider=None,
        stopwords: set[str] | None = None,
        lemmatizer: RuleLemmatizer | None = None,
        easy_words: set[str] | None = None,
    ):
        self.lexicon = lexicon
        self.sentic_table = sentic_table
        self.emotion_provider = emotion_provider
        self.stopwords = stopwords
        self.lemmatizer = lemmatizer or RuleLemmatizer()
        self.easy_words = easy_words
        self.names = feature_names(lexicon, with_emotions=emotion_provider is not None)

    def featurize_corpus(self, corpus: EventCorpus) -> list[TweetFeatures]:
        tweets = list(corpus.sources) + list(corpus.reactions)
        rows = [self._text_features(t) for t in tweets]
        if self.emotion_provider is not None:
            dists = self.emotion_provider.classify([t.text for t in tweets])
            for row, dist in zip(rows, dists):
                row.update({lab: dist.scores[lab] for lab in EMOTION_FEATURES})
        return [
            TweetFeatures(
                tweet_id=t.id,
                event=t.event,
                role=t.role,
                label=t.label,
                empty_text=t.is_empty_text(),
                values=row,
            )
            for t, row in zip(tweets, rows)
        ]

    def _text_features(self, tweet: Tweet) -> dict[str, float | None]:
        values: dict[str, float | None] = {}

        tokens = tokenize(tweet.text)
        profile = score(tokens, self.lexicon)
        if profile.word_count == 0:
            for name in lexicon_feature_names(self.lexicon):
                values[name] = None
            values[WC_FEATURE] = 0.0
        else:
            values[WC_FEATURE] = float(profile.word_count)
            for cat in self.lexicon.top_level():
                if cat.lower() in _ENGINE_CATEGORY_NAMES:
                    continue
                values[cat] = profile.percentages[cat]
            values[ALLPUNCT_FEATURE] = profile.punctuation["all_punct"]

        try:
            stats = text_stats(clean_for_readability(tweet.text), self.easy_words)
            values.update(readability.all_scores(stats).as_dict())
        except EmptyText:
            for name in READABILITY_FEATURES:
                values[name] = None

        lemmas = clean_for_senticnet(tweet.text, self.stopwords, self.lemmatizer)
        sf = senticnet.sentic_features(lemmas, self.sentic_table)
        values.update(sf.as_dict())

        return values


def emotion_argmax(values: dict[str, float | None]) -> str | None:
    """Recover the argmax emotion label from stored scores (fixed-order
    tie breaking); None when emotion features are absent."""
    if any(values.get(lab) is None for lab in EMOTION_FEATURES):
        return None
    return max(EMOTION_FEATURES, key=lambda lab: values[lab])
