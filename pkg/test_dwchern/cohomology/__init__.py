"""Unit tests for the cohomology package."""
