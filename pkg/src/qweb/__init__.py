"""Exact computer algebra for the type-Q quantum web calculus."""

__version__ = "0.1.0"
