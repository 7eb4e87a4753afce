"""A package containing the actions supported by lovelock-forms."""
