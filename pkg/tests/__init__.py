"""Test suite for the stpm package."""
