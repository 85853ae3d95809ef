"""Exception types shared across the toolkit."""


class RumourLensError(Exception):
    """Base class for all toolkit errors."""


# corpus
class MissingField(RumourLensError):
    pass


class OrphanReaction(RumourLensError):
    pass


class DuplicateId(RumourLensError):
    pass


class ParseError(RumourLensError):
    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


# text statistics / readability
class EmptyText(RumourLensError):
    pass


# lexicon
class CycleError(RumourLensError):
    pass


class EmptyCategory(RumourLensError):
    pass


class BadPattern(RumourLensError):
    pass


# senticnet
class OutOfRange(RumourLensError):
    pass


class DuplicateConcept(RumourLensError):
    pass


# emotions
class ProviderUnavailable(RumourLensError):
    pass


class MalformedResponse(RumourLensError):
    pass


# stats
class EmptySample(RumourLensError):
    pass


class NonFiniteValue(RumourLensError):
    pass


# classify
class TooFewSamples(RumourLensError):
    pass


class SingleClass(RumourLensError):
    pass


class FeatureMismatch(RumourLensError):
    pass


class TooManyFeatures(RumourLensError):
    pass


# cli
class ConfigError(RumourLensError):
    pass


class MissingArtifact(RumourLensError):
    pass
