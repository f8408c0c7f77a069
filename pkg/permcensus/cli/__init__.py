"""
permcensus
Command Line Layer
"""
