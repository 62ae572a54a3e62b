"""Exact double Hurwitz numbers: character oracle, infinite-wedge algorithm, chambers."""

__version__ = "0.1.0"
