"""Unit tests for the ui package."""
