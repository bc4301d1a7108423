"""Unit tests for DWChern."""
