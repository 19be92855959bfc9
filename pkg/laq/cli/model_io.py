"""
Reading `laq-v1` model documents and building LA-groupoids from them.

Structural problems (bad JSON, missing keys, malformed rationals, matrices of
the wrong size) raise ModelParseError carrying either a line/column (JSON
syntax) or a JSON path. Mathematical problems found while building (for
example a lift that is not a Lie morphism) surface as the engine's own
LAQError subclasses. The document shapes are documented in
`laq.shared.json_formats`.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple, Union

from laq.builders import (
    GroupActionOnBundle,
    equivariant,
    pair_zero,
    product,
    trivial_algebroid,
    trivial_groupoid,
    vacant_matched_pair,
)
from laq.exactla import SparseMatrix
from laq.groupoid import FiniteGroupoid
from laq.groupoid import catalog as groupoid_catalog
from laq.lagroupoid import LAGroupoid
from laq.liealg import LieAlgebra, LieFiberBundle
from laq.liealg import catalog as lie_catalog
from laq.shared.errors import ModelParseError

FORMAT_TAG = "laq-v1"
BUILDERS = ("trivial_groupoid", "trivial_algebroid", "equivariant", "vacant", "pair_zero", "product")
MAP_KEYS = ("source_maps", "target_maps", "mult_maps", "unit_maps", "inverse_maps")


@dataclass(frozen=True)
class ModelDocument:
    """A parsed model: either a named builder with its fields, or explicit tables."""

    format_tag: str
    builder: Optional[str] = None
    fields: Mapping[str, Any] = field(default_factory=dict)
    explicit: Optional[Mapping[str, Any]] = None

    @property
    def kind(self) -> str:
        return self.builder if self.builder is not None else "explicit"


def _error(path: str, message: str) -> ModelParseError:
    return ModelParseError(message, path=path)


def _expect(value: Any, kind: type, path: str, what: str) -> Any:
    if not isinstance(value, kind) or (kind is int and isinstance(value, bool)):
        raise _error(path, f"{what} must be a {kind.__name__}")
    return value


def _get(obj: Mapping[str, Any], key: str, path: str) -> Any:
    if key not in obj:
        raise _error(path, f"missing required key {key!r}")
    return obj[key]


def parse_rational(value: Any, path: str) -> Fraction:
    """An optionally signed integer, or a "numerator/denominator" string."""
    if isinstance(value, bool):
        raise _error(path, "rational must be an integer or an 'a/b' string")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        numerator, _, denominator = text.partition("/")
        try:
            num = int(numerator)
            den = int(denominator) if denominator else 1
        except ValueError as exc:
            raise _error(path, f"cannot read {value!r} as a rational") from exc
        if den == 0:
            raise _error(path, "rational with zero denominator")
        return Fraction(num, den)
    raise _error(path, "rational must be an integer or an 'a/b' string")


def parse_matrix(value: Any, rows: int, cols: int, path: str) -> SparseMatrix:
    """Row-major rational matrix checked against the declared shape."""
    _expect(value, list, path, "matrix")
    if rows == 0 or cols == 0:
        if value and not (len(value) == rows and all(row == [] for row in value)):
            raise _error(path, f"expected an empty {rows}×{cols} matrix")
        return SparseMatrix.zeros(rows, cols)
    if len(value) != rows:
        raise _error(path, f"expected {rows} rows, got {len(value)}")
    entries = {}
    for i, row in enumerate(value):
        _expect(row, list, f"{path}[{i}]", "matrix row")
        if len(row) != cols:
            raise _error(f"{path}[{i}]", f"expected {cols} entries, got {len(row)}")
        for j, item in enumerate(row):
            entries[(i, j)] = parse_rational(item, f"{path}[{i}][{j}]")
    return SparseMatrix(rows, cols, entries)


def parse_algebra(value: Any, path: str) -> LieAlgebra:
    """{"dim": n, "brackets": [[i, j, k, c], ...]} with 1-based indices, or {"catalog": name}."""
    _expect(value, dict, path, "Lie algebra")
    if "catalog" in value:
        try:
            return lie_catalog.by_name(str(value["catalog"]))
        except ValueError as exc:
            raise _error(f"{path}.catalog", str(exc)) from exc
    dim = _expect(_get(value, "dim", path), int, f"{path}.dim", "dim")
    if dim < 0:
        raise _error(f"{path}.dim", "dim must be non-negative")
    entries = []
    for n, bracket in enumerate(_expect(value.get("brackets", []), list, f"{path}.brackets", "brackets")):
        where = f"{path}.brackets[{n}]"
        _expect(bracket, list, where, "bracket entry")
        if len(bracket) != 4:
            raise _error(where, "bracket entries are [i, j, k, c]")
        indices = [_expect(bracket[m], int, f"{where}[{m}]", "index") for m in range(3)]
        if not all(1 <= index <= dim for index in indices):
            raise _error(where, f"indices must lie in 1..{dim}")
        if indices[0] == indices[1]:
            raise _error(where, "a bracket needs two distinct basis indices")
        i, j, k = (index - 1 for index in indices)
        entries.append((i, j, k, parse_rational(bracket[3], f"{where}[3]")))
    return LieAlgebra.from_brackets(dim, entries)


def parse_bundle(value: Any, path: str) -> LieFiberBundle:
    """{point: algebra} or the shorthand {"points": [...], "algebra": algebra}."""
    _expect(value, dict, path, "bundle")
    if "points" in value and "algebra" in value:
        points = _expect(value["points"], list, f"{path}.points", "points")
        algebra = parse_algebra(value["algebra"], f"{path}.algebra")
        return LieFiberBundle({str(point): algebra for point in points})
    return LieFiberBundle({str(point): parse_algebra(raw, f"{path}.{point}") for point, raw in value.items()})


def parse_groupoid(value: Any, path: str) -> FiniteGroupoid:
    _expect(value, dict, path, "groupoid")
    if "catalog" in value:
        try:
            return groupoid_catalog.by_name(
                str(value["catalog"]), order=value.get("order"), points=value.get("points")
            )
        except (ValueError, TypeError) as exc:
            raise _error(f"{path}.catalog", str(exc)) from exc
    objects = [str(x) for x in _expect(_get(value, "objects", path), list, f"{path}.objects", "objects")]
    arrows = _expect(_get(value, "arrows", path), list, f"{path}.arrows", "arrows")
    src, tgt = {}, {}
    for n, arrow in enumerate(arrows):
        where = f"{path}.arrows[{n}]"
        _expect(arrow, dict, where, "arrow")
        label = str(_get(arrow, "id", where))
        if label in src:
            raise _error(f"{where}.id", f"duplicate arrow id {label!r}")
        src[label] = str(_get(arrow, "src", where))
        tgt[label] = str(_get(arrow, "tgt", where))
    mult = {}
    for n, entry in enumerate(_expect(_get(value, "mult", path), list, f"{path}.mult", "mult")):
        if not isinstance(entry, list) or len(entry) != 3:
            raise _error(f"{path}.mult[{n}]", "mult entries are [g, h, gh]")
        mult[(str(entry[0]), str(entry[1]))] = str(entry[2])
    units = _expect(_get(value, "units", path), dict, f"{path}.units", "units")
    inverses = _expect(_get(value, "inverses", path), dict, f"{path}.inverses", "inverses")
    try:
        return FiniteGroupoid(
            objects=tuple(objects),
            arrows=tuple(src),
            src=src,
            tgt=tgt,
            mult=mult,
            unit={str(k): str(v) for k, v in units.items()},
            inv={str(k): str(v) for k, v in inverses.items()},
        )
    except (ValueError, TypeError) as exc:
        raise _error(path, str(exc)) from exc


def parse(text: Union[str, bytes], *, source: str = "<input>") -> ModelDocument:
    """Parse a document; every input yields a ModelDocument or a positioned ModelParseError."""
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ModelParseError(f"{source} is not UTF-8", column=exc.start + 1) from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ModelParseError(f"{source}: {exc.msg}", line=exc.lineno, column=exc.colno) from exc
    except RecursionError as exc:
        raise ModelParseError(f"{source}: nesting too deep") from exc
    return document_from_data(data)


def document_from_data(data: Any, path: str = "$") -> ModelDocument:
    _expect(data, dict, path, "model document")
    tag = data.get("format")
    if tag != FORMAT_TAG:
        raise _error(f"{path}.format", f"format tag must be {FORMAT_TAG!r}")
    has_builder, has_explicit = "builder" in data, "explicit" in data
    if has_builder == has_explicit:
        raise _error(path, "a document has exactly one of 'builder' and 'explicit'")
    if has_builder:
        name = data["builder"]
        if name not in BUILDERS:
            raise _error(f"{path}.builder", f"unknown builder {name!r}; expected one of {', '.join(BUILDERS)}")
        fields = {k: v for k, v in data.items() if k not in ("format", "builder")}
        return ModelDocument(FORMAT_TAG, builder=name, fields=fields)
    return ModelDocument(FORMAT_TAG, explicit=_expect(data["explicit"], dict, f"{path}.explicit", "explicit"))


def read_model(path: Union[str, Path]) -> ModelDocument:
    path = Path(path)
    try:
        raw = path.read_bytes()
    except OSError as exc:
        raise ModelParseError(f"cannot read {path}: {exc.strerror}") from exc
    return parse(raw, source=str(path))


def _lifts_or_identity(
    raw: Mapping[str, Any],
    key: str,
    dims: Tuple[int, int],
    path: str,
) -> SparseMatrix:
    if key in raw:
        return parse_matrix(raw[key], dims[0], dims[1], f"{path}.{key}")
    if dims[0] != dims[1]:
        raise _error(path, f"missing lift for {key!r}")
    return SparseMatrix.identity(dims[0])


def _known_keys(raw: Mapping[str, Any], allowed: Sequence[str], path: str, what: str) -> None:
    for key in raw:
        if key not in allowed:
            raise _error(f"{path}.{key}", f"unknown {what} {key!r}")


def _build_equivariant(fields: Mapping[str, Any], path: str) -> LAGroupoid:
    bundle = parse_bundle(_get(fields, "algebroid", path), f"{path}.algebroid")
    group = parse_groupoid(_get(fields, "group", path), f"{path}.group")
    action = _expect(fields.get("action", {}), dict, f"{path}.action", "action")
    moves: Dict[Tuple[str, str], str] = {}
    if "moves" in action:
        for n, entry in enumerate(_expect(action["moves"], list, f"{path}.action.moves", "moves")):
            if not isinstance(entry, list) or len(entry) != 3:
                raise _error(f"{path}.action.moves[{n}]", "moves are [point, element, point·element]")
            x, gamma, y = (str(v) for v in entry)
            if gamma not in group.arrows:
                raise _error(f"{path}.action.moves[{n}]", f"unknown group element {gamma!r}")
            if x not in bundle.fibers or y not in bundle.fibers:
                raise _error(f"{path}.action.moves[{n}]", f"move ({x}, {gamma}) -> {y} uses an unknown point")
            moves[(x, gamma)] = y
    else:
        moves = {(x, gamma): x for x in bundle.base for gamma in group.arrows}
    raw_lifts = _expect(action.get("lifts", {}), dict, f"{path}.action.lifts", "lifts")
    _known_keys(raw_lifts, group.arrows, f"{path}.action.lifts", "group element")
    matrices = {}
    for (x, gamma), y in moves.items():
        per_point = raw_lifts.get(gamma, {})
        where = f"{path}.action.lifts.{gamma}"
        _expect(per_point, dict, where, "lifts per element")
        matrices[(x, gamma)] = _lifts_or_identity(per_point, x, (bundle.dim(x), bundle.dim(y)), where)
    return equivariant(bundle, GroupActionOnBundle.by_group(group, bundle, moves, matrices))


def _build_vacant(fields: Mapping[str, Any], path: str) -> LAGroupoid:
    groupoid = parse_groupoid(_get(fields, "groupoid", path), f"{path}.groupoid")
    bundle = parse_bundle(_get(fields, "algebroid", path), f"{path}.algebroid")
    raw_lifts = _expect(fields.get("lifts", {}), dict, f"{path}.lifts", "lifts")
    _known_keys(raw_lifts, groupoid.arrows, f"{path}.lifts", "arrow")
    if set(bundle.base) != set(groupoid.objects):
        raise _error(f"{path}.algebroid", "the bundle must live over the groupoid's objects")
    lifts = {
        g: _lifts_or_identity(raw_lifts, g, (bundle.dim(groupoid.tgt[g]), bundle.dim(groupoid.src[g])), f"{path}.lifts")
        for g in groupoid.arrows
    }
    action = GroupActionOnBundle.along_groupoid(groupoid, bundle, lifts)
    return vacant_matched_pair(groupoid, bundle, action)


def _build_explicit(raw: Mapping[str, Any], path: str) -> LAGroupoid:
    groupoid = parse_groupoid(raw, path)
    side = parse_bundle(_get(raw, "algebroid", path), f"{path}.algebroid")
    omega_path = f"{path}.omega"
    omega = _expect(_get(raw, "omega", path), dict, omega_path, "omega")
    if "fibers" in omega:
        top = parse_bundle(omega["fibers"], f"{omega_path}.fibers")
    else:
        top = parse_bundle({k: v for k, v in omega.items() if k not in MAP_KEYS}, omega_path)
    if set(side.base) != set(groupoid.objects):
        raise _error(f"{path}.algebroid", "algebroid points must be exactly the objects")
    if set(top.base) != set(groupoid.arrows):
        raise _error(omega_path, "omega fibers must be given for exactly the arrows")
    maps = {key: _expect(_get(omega, key, omega_path), dict, f"{omega_path}.{key}", key) for key in MAP_KEYS}

    def matrix(table: str, key: str, rows: int, cols: int) -> SparseMatrix:
        return parse_matrix(_get(maps[table], key, f"{omega_path}.{table}"), rows, cols, f"{omega_path}.{table}.{key}")

    g = groupoid
    mult_lin = {}
    for (a, b), ab in g.mult.items():
        mult_lin[(a, b)] = matrix("mult_maps", f"{a},{b}", top.dim(ab), top.dim(a) + top.dim(b))
    structure = dict(
        src_lin={a: matrix("source_maps", a, side.dim(g.src[a]), top.dim(a)) for a in g.arrows},
        tgt_lin={a: matrix("target_maps", a, side.dim(g.tgt[a]), top.dim(a)) for a in g.arrows},
        mult_lin=mult_lin,
        unit_lin={x: matrix("unit_maps", x, top.dim(g.unit[x]), side.dim(x)) for x in g.objects},
        inv_lin={a: matrix("inverse_maps", a, top.dim(g.inv[a]), top.dim(a)) for a in g.arrows},
    )
    try:
        return LAGroupoid(base=g, side=side, top=top, **structure)
    except ValueError as exc:
        raise _error(omega_path, str(exc)) from exc


def _factor(value: Any, path: str) -> ModelDocument:
    _expect(value, dict, path, "factor")
    return document_from_data({"format": FORMAT_TAG, **value}, path)


def build(doc: ModelDocument, path: str = "$") -> LAGroupoid:
    """Construct the LA-groupoid a document describes (builders validate their inputs)."""
    if doc.builder is None:
        return _build_explicit(doc.explicit, f"{path}.explicit")
    fields = doc.fields
    if doc.builder == "trivial_groupoid":
        return trivial_groupoid(parse_groupoid(_get(fields, "groupoid", path), f"{path}.groupoid"))
    if doc.builder == "trivial_algebroid":
        return trivial_algebroid(parse_bundle(_get(fields, "algebroid", path), f"{path}.algebroid"))
    if doc.builder == "pair_zero":
        points = _expect(_get(fields, "points", path), list, f"{path}.points", "points")
        return pair_zero([str(p) for p in points])
    if doc.builder == "equivariant":
        return _build_equivariant(fields, path)
    if doc.builder == "vacant":
        return _build_vacant(fields, path)
    factors: List[Any] = _expect(_get(fields, "factors", path), list, f"{path}.factors", "factors")
    if len(factors) != 2:
        raise _error(f"{path}.factors", "product takes exactly two factors")
    first = build(_factor(factors[0], f"{path}.factors[0]"), f"{path}.factors[0]")
    second = build(_factor(factors[1], f"{path}.factors[1]"), f"{path}.factors[1]")
    return product(first, second)


def load(path: Union[str, Path]) -> LAGroupoid:
    """read_model then build; malformed tables that slip past the shape checks become parse errors."""
    doc = read_model(path)
    try:
        return build(doc)
    except (ValueError, TypeError) as exc:
        raise ModelParseError(f"{path}: {exc}", path="$") from exc
    except KeyError as exc:
        raise ModelParseError(f"{path}: unknown key {exc}", path="$") from exc


__all__ = [
    "FORMAT_TAG",
    "BUILDERS",
    "ModelDocument",
    "parse_rational",
    "parse_matrix",
    "parse_algebra",
    "parse_bundle",
    "parse_groupoid",
    "parse",
    "document_from_data",
    "read_model",
    "build",
    "load",
]
