"""ringlab: finite rings, element witnesses, and constructive theorem checks."""

__version__ = "0.1.0"
