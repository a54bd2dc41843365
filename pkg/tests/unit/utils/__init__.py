"""Utils unit tests package."""
