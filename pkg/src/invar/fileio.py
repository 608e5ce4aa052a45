"""JSON file formats for arrangements, fans, and invariant tables.

All rational data travels as integers or "p/q" strings; floating point
literals are rejected outright so nothing in the pipeline ever rounds.
"""

from __future__ import annotations

import json
import warnings
from typing import Sequence

from .arrangements import AffineSubspace
from .errors import InputError, InputWarning
from .fans import Fan3, primitive
from .qlinalg import parse_rational
from .tables import KIND_CDR, KIND_LYUBEZNIK, InvariantTable


def _reject_float(text: str):
    raise InputError(
        f"floating point literal {text!r} is not allowed; use integers or 'p/q' strings"
    )


def load_json(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh, parse_float=_reject_float)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise InputError(f"{path}: top level must be a JSON object")
    return doc


def parse_arrangement(doc: dict) -> tuple[int, list[AffineSubspace], list[str]]:
    """Read an arrangement file: ambient_dim plus named equation systems."""
    try:
        n = doc["ambient_dim"]
        subspaces = doc["subspaces"]
    except KeyError as exc:
        raise InputError(f"arrangement file is missing key {exc}") from exc
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise InputError("ambient_dim must be a positive integer")
    if not isinstance(subspaces, list) or not subspaces:
        raise InputError("subspaces must be a nonempty list")
    components = []
    names = []
    for i, entry in enumerate(subspaces):
        if not isinstance(entry, dict) or "equations" not in entry:
            raise InputError(f"subspace {i} must be an object with an 'equations' key")
        name = entry.get("name", f"subspace {i}")
        rows = entry["equations"]
        if not isinstance(rows, list) or not rows:
            raise InputError(f"{name}: equations must be a nonempty list of rows")
        parsed = []
        for row in rows:
            if not isinstance(row, list) or len(row) != n + 1:
                raise InputError(
                    f"{name}: every equation row needs exactly {n + 1} entries "
                    "(coefficients then constant)"
                )
            parsed.append([parse_rational(x) for x in row])
        try:
            components.append(AffineSubspace.from_rows(n, parsed))
        except InputError as exc:
            raise InputError(f"{name}: {exc}") from exc
        names.append(name)
    return n, components, names


def parse_fan(doc: dict) -> Fan3:
    """Read a fan file: integer rays plus maximal cones as ray index lists."""
    try:
        rays = doc["rays"]
        cones = doc["max_cones"]
    except KeyError as exc:
        raise InputError(f"fan file is missing key {exc}") from exc
    if not isinstance(rays, list) or not rays:
        raise InputError("rays must be a nonempty list of integer 3-vectors")
    if not isinstance(cones, list) or not cones:
        raise InputError("max_cones must be a nonempty list of ray index lists")
    clean_rays = []
    for i, ray in enumerate(rays):
        if (
            not isinstance(ray, list)
            or len(ray) != 3
            or any(not isinstance(x, int) or isinstance(x, bool) for x in ray)
        ):
            raise InputError(f"ray {i} must be a list of three integers")
        if ray == [0, 0, 0]:
            raise InputError(f"ray {i} is the zero vector")
        prim = primitive(ray)
        if tuple(ray) != prim:
            warnings.warn(f"ray {i} = {ray} rescaled to primitive {list(prim)}", InputWarning)
        clean_rays.append(prim)
    clean_cones = []
    for k, cone in enumerate(cones):
        if not isinstance(cone, list) or not cone:
            raise InputError(f"maximal cone {k} must be a nonempty list of ray indices")
        for idx in cone:
            if not isinstance(idx, int) or isinstance(idx, bool) or not 0 <= idx < len(rays):
                raise InputError(f"maximal cone {k} has a ray index out of range: {idx!r}")
        clean_cones.append(cone)
    return Fan3(clean_rays, clean_cones)


def parse_table(doc: dict) -> tuple[InvariantTable, int | None, list[int] | None, int | None]:
    """Read a table file; returns (table, ambient_dim, betti, bound)."""
    try:
        kind = doc["kind"]
        dim = doc["dim"]
        entries = doc["entries"]
    except KeyError as exc:
        raise InputError(f"table file is missing key {exc}") from exc
    if kind not in (KIND_LYUBEZNIK, KIND_CDR):
        raise InputError(f"kind must be '{KIND_LYUBEZNIK}' or '{KIND_CDR}', got {kind!r}")
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 0:
        raise InputError("dim must be a nonnegative integer")
    if (
        not isinstance(entries, list)
        or len(entries) != dim + 1
        or any(not isinstance(r, list) or len(r) != dim + 1 for r in entries)
    ):
        raise InputError(f"entries must be a {dim + 1}x{dim + 1} array matching dim")
    for row in entries:
        for v in row:
            if v is None:
                continue
            if not isinstance(v, int) or isinstance(v, bool) or v < 0:
                raise InputError(
                    f"table entries must be nonnegative integers or null, got {v!r}"
                )
    table = InvariantTable(kind, entries)
    ambient = doc.get("ambient_dim")
    if ambient is not None and (
        not isinstance(ambient, int) or isinstance(ambient, bool) or ambient < 1
    ):
        raise InputError("ambient_dim must be a positive integer")
    betti = doc.get("betti")
    if betti is not None:
        if not isinstance(betti, list) or any(
            not isinstance(v, int) or isinstance(v, bool) or v < 0 for v in betti
        ):
            raise InputError("betti must be a list of nonnegative integers")
    bound = doc.get("bound")
    if bound is not None and (not isinstance(bound, int) or isinstance(bound, bool) or bound < 0):
        raise InputError("bound must be a nonnegative integer")
    return table, ambient, betti, bound


def dumps_table(table: InvariantTable, notes: Sequence[str] = ()) -> str:
    """Serialize a table as a single JSON document with stable key order."""
    return json.dumps(table.as_json_dict(notes))


def dumps_doc(doc: dict) -> str:
    return json.dumps(doc)
