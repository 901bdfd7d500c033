"""Hypothesis strategies for pymotif."""
