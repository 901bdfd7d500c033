"""Hypothesis tests for the project."""
