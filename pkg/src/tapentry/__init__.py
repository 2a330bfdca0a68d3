"""Tap-typing text entry: signal detection, finger classification, and decoding."""

__version__ = "0.1.0"
