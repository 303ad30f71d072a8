"""Tensor file format.

A tensor is the JSON document
``{"row_dims": [..], "col_dims": [..], "bits": "0101..."}`` where ``bits`` is
the row-major bit string (last index fastest).  Round-trips are bit-exact;
``dumps`` is canonical (fixed key order, no whitespace variation), so CLI
output can be compared byte-for-byte.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Union

from .core import BooleanTensor, Shape, make_tensor
from .errors import EinboolError, TensorFormatError

__all__ = ["dumps", "loads", "dump_tensor", "load_tensor"]


def dumps(t: BooleanTensor) -> str:
    doc = {
        "row_dims": list(t.row_dims),
        "col_dims": list(t.col_dims),
        "bits": t.bits,
    }
    return json.dumps(doc, separators=(", ", ": "))


def loads(text: str, source: str = "<string>") -> BooleanTensor:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise TensorFormatError(f"{source}: not valid JSON ({exc})") from exc
    if not isinstance(doc, dict):
        raise TensorFormatError(f"{source}: expected a JSON object")
    missing = {"row_dims", "col_dims", "bits"} - doc.keys()
    if missing:
        raise TensorFormatError(f"{source}: missing keys {sorted(missing)}")
    row_dims, col_dims, bits = doc["row_dims"], doc["col_dims"], doc["bits"]
    if not isinstance(row_dims, list) or not isinstance(col_dims, list):
        raise TensorFormatError(f"{source}: row_dims and col_dims must be arrays")
    if not isinstance(bits, str) or not set(bits) <= {"0", "1"}:
        raise TensorFormatError(f"{source}: bits must be a string of 0/1 characters")
    try:
        shape = Shape(tuple(row_dims), tuple(col_dims))
        return make_tensor(shape, bits)
    except EinboolError as exc:
        raise TensorFormatError(f"{source}: {exc}") from exc


def dump_tensor(t: BooleanTensor, path: Union[str, Path]) -> None:
    Path(path).write_text(dumps(t) + "\n")


def load_tensor(path: Union[str, Path]) -> BooleanTensor:
    p = Path(path)
    try:
        text = p.read_text()
    except OSError as exc:
        raise TensorFormatError(f"{p}: cannot read ({exc.strerror})") from exc
    return loads(text, source=str(p))
