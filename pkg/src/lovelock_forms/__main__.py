"""A runpy entry point for lovelock-forms.

This makes it possible to invoke CLI
via :command:`python3 -m lovelock_forms`.
"""

from __future__ import annotations

from .cli import main


if __name__ == "__main__":
    main()
