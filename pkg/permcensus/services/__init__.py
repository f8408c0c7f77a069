"""
permcensus
Service Layer: sharded census execution and verification runs.
"""
