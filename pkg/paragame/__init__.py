"""Reachability games against an unknown number of opponents."""

__version__ = "0.1.0"
