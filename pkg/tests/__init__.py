"""
Tests for the tropical Brill-Noether toolkit.
"""
