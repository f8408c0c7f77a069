"""
permcensus
Core Layer: value types, occurrence kernels, censuses and formulas.
"""
