"""Realizability of integer sequences: exact generators, Dold and sign
checks, congruence sweeps, prime witnesses and explicit realizing maps."""

__version__ = "0.1.0"
