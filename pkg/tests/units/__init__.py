"""Unit tests for lovelock-forms."""
