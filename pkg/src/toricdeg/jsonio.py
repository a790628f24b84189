"""JSON schemas for the CLI: polytopes, Bott data, and exact rationals.

Rationals travel as "p/q" strings (plain integers are accepted on input);
floats are rejected to keep every pipeline exact.
"""

from __future__ import annotations

from fractions import Fraction

from .bott import BottData
from .errors import SchemaError
from .geometry import HPolytope, LatticePointSet, hull


def parse_rational(value) -> Fraction:
    if isinstance(value, bool):
        raise SchemaError(f"expected a rational, got {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError):
            raise SchemaError(f"malformed rational {value!r}") from None
    raise SchemaError(f"expected an integer or 'p/q' string, got {value!r}")


def format_rational(value) -> str:
    f = Fraction(value)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def parse_int(value, field) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise SchemaError(f"field {field!r} must be an integer")
    return value


def load_polytope(obj) -> HPolytope:
    """Accepts {"dim", "inequalities"} or {"dim", "vertices"}."""
    if not isinstance(obj, dict):
        raise SchemaError("polytope must be a JSON object")
    dim = parse_int(obj.get("dim"), "dim")
    if "inequalities" in obj:
        rows = obj["inequalities"]
        if not isinstance(rows, list) or not rows:
            raise SchemaError("field 'inequalities' must be a nonempty list")
        parsed = []
        for row in rows:
            if not isinstance(row, list) or len(row) != dim + 1:
                raise SchemaError("each inequality needs dim coefficients and a bound")
            parsed.append([parse_rational(x) for x in row])
        try:
            return HPolytope.from_inequalities(dim, parsed)
        except ValueError as exc:
            raise SchemaError(str(exc)) from None
    if "vertices" in obj:
        verts = obj["vertices"]
        if not isinstance(verts, list) or not verts:
            raise SchemaError("field 'vertices' must be a nonempty list")
        pts = []
        for v in verts:
            if not isinstance(v, list) or len(v) != dim:
                raise SchemaError("each vertex needs dim coordinates")
            pts.append([parse_rational(x) for x in v])
        try:
            return hull(pts, dim)
        except ValueError as exc:
            raise SchemaError(str(exc)) from None
    raise SchemaError("polytope needs 'inequalities' or 'vertices'")


def dump_polytope(p: HPolytope) -> dict:
    return {
        "dim": p.dim,
        "inequalities": [[*h.normal, format_rational(h.rhs)] for h in p.halfspaces],
    }


def dump_vertices(dim, verts) -> dict:
    return {"dim": dim, "vertices": [[format_rational(x) for x in v] for v in verts]}


def dump_points(pts: LatticePointSet) -> list:
    return [list(p) for p in pts]


def load_bott(obj) -> BottData:
    if not isinstance(obj, dict):
        raise SchemaError("bott data must be a JSON object")
    n = parse_int(obj.get("n"), "n")
    rows = obj.get("A")
    if not isinstance(rows, list) or len(rows) != n:
        raise SchemaError("field 'A' must be an n x n integer matrix")
    for row in rows:
        if not isinstance(row, list) or len(row) != n:
            raise SchemaError("field 'A' must be an n x n integer matrix")
        for x in row:
            if isinstance(x, bool) or not isinstance(x, int):
                raise SchemaError("matrix entries must be integers")
    lam = obj.get("lambda")
    if not isinstance(lam, list) or len(lam) != n:
        raise SchemaError("field 'lambda' must be a length-n list of rationals")
    try:
        return BottData.make(rows, [parse_rational(x) for x in lam])
    except ValueError as exc:
        raise SchemaError(str(exc)) from None


def dump_bott(b: BottData) -> dict:
    return {
        "n": b.n,
        "A": [list(row) for row in b.a],
        "lambda": [format_rational(x) for x in b.lam],
    }
