"""
Hilbert-style proof scripts for sqL* and L*: checking, derived rules and
proof transformations.
"""
