import json

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib
from pathlib import Path
from typing import Any, Dict, Union

from spike_planner.config.config import CONFIG_SUFFIXES


def read_structured_file(path: Union[str, Path]) -> Dict[str, Any]:
    """
    Read a JSON or TOML file into a dict, the format is chosen by suffix.
    Raises ValueError for any other suffix or when the top level is not a table/object.
    """
    path = Path(path)
    file_format = CONFIG_SUFFIXES.get(path.suffix.lower())
    if file_format is None:
        raise ValueError(f"Unsupported file format '{path.suffix}' for {path} (expected .json or .toml)")

    if file_format == 'toml':
        with path.open('rb') as handle:
            data = tomllib.load(handle)
    else:
        with path.open('r', encoding='utf-8') as handle:
            data = json.load(handle)

    if not isinstance(data, dict):
        raise ValueError(f"{path} must contain a top-level object")
    return data


def format_symbol_list(symbols) -> str:
    return ",".join(symbols)


def format_bool(value: bool) -> str:
    return "true" if value else "false"
