"""Exact verification of the splitting of Kemmer-Duffin-Petiau equations into
three-component constituent systems."""

__version__ = "0.1.0"
