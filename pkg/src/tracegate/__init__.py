"""tracegate: exact trace-index computations for number fields."""

__version__ = "0.1.0"
