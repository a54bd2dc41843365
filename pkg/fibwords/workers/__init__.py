"""Process fan-out for grid verification."""

from fibwords.workers.grid import GridRunner

__all__ = ["GridRunner"]
