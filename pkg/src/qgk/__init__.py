"""Exact computations for highest-weight modules of quantum groups: root data,
integral subsystems, Kazhdan-Lusztig a-function, GK dimensions, Shapovalov and
Jantzen machinery, and dimension growth at roots of unity."""

__version__ = "0.1.0"
