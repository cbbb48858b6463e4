"""Exact class algebra of the symmetric groups through differential operators."""
__version__ = "0.1.0"
