"""Facet-list JSON files."""

from pathlib import Path
from typing import Union

from pydantic import ValidationError

from .._core.exceptions import InvalidComplexError
from ..types.complexes import ComplexFile
from .complexes import SimplicialComplex, build_complex


def parse_complex(text: str) -> SimplicialComplex:
    try:
        data = ComplexFile.model_validate_json(text)
    except ValidationError as exc:
        raise InvalidComplexError(f"malformed complex file: {exc.error_count()} error(s)") from exc
    return build_complex(data.facets)


def load_complex(path: Union[str, Path]) -> SimplicialComplex:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InvalidComplexError(f"cannot read {str(path)!r}: {exc.strerror}") from exc
    return parse_complex(text)


def dump_complex(complex_: SimplicialComplex, path: Union[str, Path]) -> None:
    payload = ComplexFile(facets=[list(f) for f in complex_.facets])
    Path(path).write_text(payload.to_json() + "\n", encoding="utf-8")
