"""Exact computation and certification of log-convexity and log-concavity
for classical combinatorial sequences."""

__version__ = "0.1.0"
