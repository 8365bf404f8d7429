"""Exact-arithmetic relative toric Mori theory."""

__version__ = "0.1.0"
