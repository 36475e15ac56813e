"""Threshold-adaptive replay planning on subpopulation-coded spiking sequence networks."""

__version__ = "0.1.0"
