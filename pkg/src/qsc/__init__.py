"""Exact verification of a family of q-supercongruences and their WZ certificate."""

__version__ = "0.1.0"
