import json
import os
import sys
from typing import Any, Optional

from src.utils.errors import UsageError


def load_data(file_path: Optional[str] = None) -> Any:
    """
    Loads a JSON document from a file, or from stdin when no path (or "-") is given.

    Args:
        file_path (str): Path to the JSON file.

    Returns:
        The decoded JSON value.
    """
    if file_path in (None, "-"):
        text = sys.stdin.read()
        source = "<stdin>"
    else:
        if not os.path.exists(file_path):
            raise FileNotFoundError(f"File not found: {file_path}")
        with open(file_path, encoding="utf-8") as fh:
            text = fh.read()
        source = file_path
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{source} is not valid JSON: {exc}") from exc


def dump_data(value: Any, file_path: Optional[str] = None) -> None:
    """Writes ``value`` as UTF-8 JSON to ``file_path`` or stdout."""
    text = json.dumps(value, indent=2, ensure_ascii=False)
    if file_path in (None, "-"):
        sys.stdout.write(text + "\n")
    else:
        with open(file_path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
