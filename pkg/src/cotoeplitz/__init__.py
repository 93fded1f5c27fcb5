"""Exact co-Toeplitz quantization with the SU_q(2) example."""

__version__ = "0.1.0"
