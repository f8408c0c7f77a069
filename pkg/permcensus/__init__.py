"""
permcensus: exhaustive pattern censuses of permutations, the 123/132
counting formulas, and exact recurrence recovery.
"""

__version__ = "0.1.0"
