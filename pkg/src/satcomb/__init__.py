"""Exact combinatorics of minimal coweights, mu-paths and Satake numerology."""

from .root_datum import CartanType, RootDatum, build, parse_datum

__all__ = ["CartanType", "RootDatum", "build", "parse_datum"]
__version__ = "0.1.0"
