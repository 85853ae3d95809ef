"""rumourlens: psycholinguistic comparison, classification and explanation
of rumour vs. non-rumour posts in threaded social-media corpora.

The pipeline stages (see `rumourlens.cli`):

    ingest -> featurize -> compare -> train -> explain -> report
"""

__version__ = "0.1.0"
