"""Tangles of order at most four."""
