"""
Exact commutative algebra for Hadamard products of projective varieties.
"""
