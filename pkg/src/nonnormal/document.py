"""Matrix documents (JSON with [re, im] entries) and CSV emission."""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import DomainError


@dataclass(frozen=True)
class MatrixDocument:
    name: str
    matrix: np.ndarray
    source_path: str = ""


def _entry(value) -> complex:
    if isinstance(value, (int, float)) and not isinstance(value, bool):
        z = complex(value, 0.0)
    elif isinstance(value, list) and len(value) == 2 and all(
        isinstance(x, (int, float)) and not isinstance(x, bool) for x in value
    ):
        z = complex(value[0], value[1])
    else:
        raise DomainError(f"matrix entry {value!r} is not a number or an [re, im] pair")
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise DomainError(f"matrix entry {value!r} is not finite")
    return z


def parse_matrix(rows) -> np.ndarray:
    if not isinstance(rows, list) or not rows or not all(isinstance(r, list) for r in rows):
        raise DomainError("matrix must be a non-empty array of rows")
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise DomainError("matrix must be square")
    return np.array([[_entry(x) for x in r] for r in rows], dtype=complex)


def loads(text: str, source_path: str = "") -> MatrixDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DomainError(f"malformed matrix document: {exc}") from exc
    if isinstance(data, list):
        data = {"matrix": data}
    if not isinstance(data, dict) or "matrix" not in data:
        raise DomainError("matrix document needs a 'matrix' field")
    name = data.get("name") or (Path(source_path).stem if source_path else "matrix")
    return MatrixDocument(str(name), parse_matrix(data["matrix"]), source_path)


def load(path) -> MatrixDocument:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise DomainError(f"cannot read {path}: {exc}") from exc
    return loads(text, str(path))


def dumps(doc: MatrixDocument) -> str:
    # float.__repr__ round-trips exactly through json
    rows = [[[float(z.real), float(z.imag)] for z in row] for row in np.asarray(doc.matrix)]
    return json.dumps({"name": doc.name, "matrix": rows}, indent=1) + "\n"


def dump(doc: MatrixDocument, path) -> Path:
    path = Path(path)
    path.write_text(dumps(doc))
    return path


def fmt(x: float) -> str:
    return format(float(x), ".17g")


def write_csv(path, header: tuple[str, str], rows, metadata: dict) -> Path:
    """Two-column CSV preceded by '# key=value' metadata lines."""
    path = Path(path)
    lines = [f"# {k}={v}" for k, v in metadata.items()]
    lines.append(",".join(header))
    lines.extend(f"{fmt(a)},{fmt(b)}" for a, b in rows)
    path.write_text("\n".join(lines) + "\n")
    return path


def read_csv(path) -> tuple[dict, np.ndarray]:
    meta, rows = {}, []
    for line in Path(path).read_text().splitlines():
        if line.startswith("#"):
            key, _, value = line[1:].strip().partition("=")
            meta[key] = value
        elif line and not line[0].isalpha():
            rows.append([float(x) for x in line.split(",")])
    return meta, np.array(rows)
