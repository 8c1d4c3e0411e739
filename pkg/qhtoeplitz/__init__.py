"""Quasihomogeneous Toeplitz operators on the Bergman and harmonic Bergman spaces"""

__version__ = "0.3.0"
