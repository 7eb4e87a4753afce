"""Tests for lovelock-forms."""
