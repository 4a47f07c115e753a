"""Linear-time K_t minor finder for dense graphs."""

__version__ = "0.1.0"
