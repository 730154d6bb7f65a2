"""Bour minimal surfaces: exact Weierstrass data, certificates and implicitization."""

__version__ = "0.1.0"
