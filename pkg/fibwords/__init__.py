"""Biperiodic Fibonacci words, their overlapping self-similar cell
decompositions, and a brute-force verifier for the identities between them.
"""

__version__ = "0.1.0"
