"""Exact symbolic engine for L-invariants of symmetric powers of ordinary forms."""

__version__ = "0.1.0"
