"""
CANREL
Finite relation categories, groupoids, double groupoids and hopfoids,
plus an exact rational linear symplectic category.
"""

__version__ = "1.0.0"
