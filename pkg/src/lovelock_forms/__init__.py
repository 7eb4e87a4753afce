"""Exterior calculus and Lovelock gravity verification."""
