"""Unit tests for the topology package."""
