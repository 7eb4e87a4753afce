"""Constants with default values used throughout the tests."""

from __future__ import annotations

import shutil
import sys

from pathlib import Path


LOVELOCK_BIN = Path(sys.executable).parent / "lovelock-forms"
if not LOVELOCK_BIN.exists() and (_found := shutil.which("lovelock-forms")):
    LOVELOCK_BIN = Path(_found)

SCHWARZSCHILD_POINT = (0.0, 10.0, 1.0, 0.5)
