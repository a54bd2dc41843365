"""Unit tests for worker components."""
