#!/usr/bin/env python3
"""
Entry point of the witt-smooth command line.

    python scripts/witt_smooth.py bracket pair.json
    python scripts/witt_smooth.py --degree 3 height module.json
    python scripts/witt_smooth.py --seed 7 suite jacobi --track
"""

import os
import sys

# === Import path: make the src/ package importable from a checkout ===
sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

from src.cli.main import main  # noqa: E402

if __name__ == "__main__":
    sys.exit(main())
