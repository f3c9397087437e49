import json
from pathlib import Path
from typing import Any, Union

import numpy as np


def to_jsonable(value: Any) -> Any:
    """Convert numpy scalars, arrays and tuples into plain JSON values."""
    if isinstance(value, dict):
        return {str(key): to_jsonable(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(item) for item in value]
    if isinstance(value, np.ndarray):
        return to_jsonable(value.tolist())
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, complex):
        return {"re": value.real, "im": value.imag}
    return value


def format_json(payload: Any) -> str:
    """Indented, key-sorted JSON."""
    return json.dumps(to_jsonable(payload), indent=2, sort_keys=True)


def write_json(path: Union[str, Path], payload: Any) -> None:
    """Write ``payload`` as :func:`format_json` text with a trailing newline."""
    Path(path).write_text(format_json(payload) + "\n", encoding="utf-8")
