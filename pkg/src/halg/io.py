"""JSON formats for algebras, quivers, group actions, modules and reports.

Coefficients are exact: integers, strings ``"p"`` / ``"p/q"`` or pairs
``[num, den]``.  Floats are rejected.  Every parse error is an
:class:`InputError` carrying a JSON-pointer location.
"""
from __future__ import annotations

import json
import os
import sys
from fractions import Fraction
from numbers import Integral

import numpy as np

from .algebra import Algebra, GroupAction, Quiver, path_algebra
from .errors import (
    DimensionCapExceeded, DimensionMismatch, HalgError, InputError, InvalidModule, NotAGroup,
    NotAHomomorphism, NotAssociative, NotInvertible, NotMultiplicative, NotUnital,
    OrderNotInvertible, UnitNotFixed,
)
from .exactlin import GF, QQ
from .modules import Module


def _ptr(path, key):
    return f"{path}/{str(key).replace('~', '~0').replace('/', '~1')}"


def _expect(cond, path, message):
    if not cond:
        raise InputError(path, message)


def read_json(path):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError("", f"cannot read {path}: {exc.strerror or exc}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError("", f"{path}: invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None


# ---------------------------------------------------------------------------
# scalars

def parse_coeff(x, field, path):
    if isinstance(x, bool):
        raise InputError(path, "booleans are not coefficients")
    if isinstance(x, float):
        raise InputError(path, f"floating-point coefficient {x!r} rejected; use an integer, 'p/q' or [num, den]")
    try:
        if isinstance(x, Integral):
            return field(int(x))
        if isinstance(x, str):
            if any(ch in x for ch in ".eE"):
                raise InputError(path, f"decimal {x!r} rejected; use 'p/q'")
            return field(Fraction(x.strip()))
        if isinstance(x, list) and len(x) == 2 and all(isinstance(v, int) and not isinstance(v, bool) for v in x):
            if x[1] == 0:
                raise InputError(path, "zero denominator")
            return field(Fraction(x[0], x[1]))
    except InputError:
        raise
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(path, f"bad coefficient {x!r}: {exc}") from None
    raise InputError(path, f"bad coefficient {x!r}")


def format_coeff(x, field):
    return field.format(x)


def field_from_json(obj, path="/field"):
    _expect(isinstance(obj, dict), path, "field must be an object")
    kind = obj.get("kind")
    if kind == "rational":
        return QQ
    if kind == "prime":
        p = obj.get("p")
        _expect(isinstance(p, int) and not isinstance(p, bool), _ptr(path, "p"), "p must be an integer")
        try:
            return GF(p)
        except ValueError as exc:
            raise InputError(_ptr(path, "p"), str(exc)) from None
    raise InputError(_ptr(path, "kind"), f"unknown field kind {kind!r}")


def matrix_from_json(obj, field, rows, cols, path):
    _expect(isinstance(obj, list) and len(obj) == rows, path, f"expected {rows} rows")
    out = field.zeros(rows, cols)
    for i, row in enumerate(obj):
        rp = _ptr(path, i)
        _expect(isinstance(row, list) and len(row) == cols, rp, f"expected {cols} entries")
        for j, v in enumerate(row):
            out[i, j] = parse_coeff(v, field, _ptr(rp, j))
    return out


def matrix_to_json(m, field):
    return [[field.format(v) for v in row] for row in m]


def _terms_from_json(obj, field, n, path):
    _expect(isinstance(obj, list), path, "expected a list of terms")
    acc = {}
    for t, term in enumerate(obj):
        tp = _ptr(path, t)
        _expect(isinstance(term, list) and len(term) in (2, 3), tp, "term must be [num, den, index] or [coeff, index]")
        idx = term[-1]
        _expect(isinstance(idx, int) and not isinstance(idx, bool) and 0 <= idx < n, _ptr(tp, len(term) - 1),
                f"basis index must be in 0..{n - 1}")
        c = parse_coeff(term[:2] if len(term) == 3 else term[0], field, tp)
        acc[idx] = acc.get(idx, field.zero) + c
    return tuple((k, c) for k, c in sorted(acc.items()) if c != 0)


def _terms_to_json(terms, field):
    out = []
    for k, c in terms:
        if field.characteristic:
            out.append([int(field(c).v), 1, int(k)])
        else:
            out.append([int(c.numerator), int(c.denominator), int(k)])
    return out


# ---------------------------------------------------------------------------
# algebras, quivers, actions

def algebra_from_json(obj, path=""):
    _expect(isinstance(obj, dict), path or "/", "algebra must be an object")
    if "vertices" in obj and "mul" not in obj:
        return path_algebra_from_json(obj, path)
    for key in ("field", "labels", "mul", "unit"):
        _expect(key in obj, path or "/", f"missing key {key!r}")
    field = field_from_json(obj["field"], _ptr(path, "field"))
    labels = obj["labels"]
    _expect(isinstance(labels, list) and all(isinstance(x, str) for x in labels), _ptr(path, "labels"),
            "labels must be a list of strings")
    n = len(labels)
    mul = obj["mul"]
    mp = _ptr(path, "mul")
    _expect(isinstance(mul, list) and len(mul) == n, mp, f"mul must have {n} rows")
    table = []
    for i, row in enumerate(mul):
        rp = _ptr(mp, i)
        _expect(isinstance(row, list) and len(row) == n, rp, f"row must have {n} entries")
        table.append([_terms_from_json(e, field, n, _ptr(rp, j)) for j, e in enumerate(row)])
    unit_terms = _terms_from_json(obj["unit"], field, n, _ptr(path, "unit"))
    unit = field.zero_vector(n)
    for k, c in unit_terms:
        unit[k] = c
    try:
        return Algebra(field, labels, table, unit, name=obj.get("name"))
    except NotAssociative as exc:
        i, j, k = exc.triple
        raise InputError(_ptr(mp, i), f"not associative: {exc} (triple {i},{j},{k})") from None
    except NotUnital as exc:
        raise InputError(_ptr(path, "unit"), str(exc)) from None
    except (DimensionCapExceeded, DimensionMismatch) as exc:
        raise InputError(path or "/", str(exc)) from None


def algebra_to_json(a):
    F = a.field
    return {
        "field": F.to_json(),
        "labels": list(a.labels),
        "mul": [[_terms_to_json(e, F) for e in row] for row in a.table],
        "unit": _terms_to_json([(k, a.unit[k]) for k in range(a.dim) if a.unit[k] != 0], F),
        "name": a.name or "algebra",
    }


def quiver_from_json(obj, path=""):
    _expect(isinstance(obj, dict), path or "/", "quiver must be an object")
    vs = obj.get("vertices")
    _expect(isinstance(vs, list) and all(isinstance(v, (str, int)) and not isinstance(v, bool) for v in vs),
            _ptr(path, "vertices"), "vertices must be a list of labels")
    arrows = obj.get("arrows", [])
    ap = _ptr(path, "arrows")
    _expect(isinstance(arrows, list), ap, "arrows must be a list")
    parsed = []
    for i, arr in enumerate(arrows):
        p = _ptr(ap, i)
        _expect(isinstance(arr, dict) and all(k in arr for k in ("name", "from", "to")), p,
                "arrow needs name, from, to")
        parsed.append((arr["name"], arr["from"], arr["to"]))
    try:
        return Quiver(vs, parsed)
    except ValueError as exc:
        raise InputError(ap, str(exc)) from None


def quiver_to_json(q):
    return {"vertices": list(q.vertices),
            "arrows": [{"name": a, "from": s, "to": t} for a, s, t in q.arrows]}


def path_algebra_from_json(obj, path=""):
    q = quiver_from_json(obj, path)
    field = field_from_json(obj["field"], _ptr(path, "field")) if "field" in obj else QQ
    try:
        a = path_algebra(field, q)
    except HalgError as exc:
        raise InputError(_ptr(path, "arrows"), str(exc)) from None
    a.name = obj.get("name", "kQ")
    return a


def action_from_json(obj, algebra, path=""):
    _expect(isinstance(obj, dict), path or "/", "action must be an object")
    elems = obj.get("elements")
    _expect(isinstance(elems, list) and elems and all(isinstance(e, str) for e in elems), _ptr(path, "elements"),
            "elements must be a non-empty list of labels")
    m = len(elems)
    tp = _ptr(path, "mul_table")
    table = obj.get("mul_table")
    _expect(isinstance(table, list) and all(isinstance(r, list) for r in table), tp, "mul_table must be a matrix")
    for i, row in enumerate(table):
        for j, x in enumerate(row):
            _expect(isinstance(x, int) and not isinstance(x, bool), _ptr(_ptr(tp, i), j), "entries are indices")
    images = obj.get("images")
    ip = _ptr(path, "images")
    _expect(isinstance(images, dict), ip, "images must map element labels to matrices")
    mats = []
    n = algebra.dim
    for e in elems:
        _expect(e in images, ip, f"missing image for {e!r}")
        mats.append(matrix_from_json(images[e], algebra.field, n, n, _ptr(ip, e)))
    identity = obj.get("identity")
    try:
        return GroupAction(algebra, elems, table, mats, identity)
    except NotAGroup as exc:
        raise InputError(tp, f"NotAGroup: {exc}") from None
    except NotAHomomorphism as exc:
        raise InputError(tp, f"NotAHomomorphism: {exc}") from None
    except OrderNotInvertible as exc:
        raise InputError(_ptr(path, "elements"), f"OrderNotInvertible: {exc}") from None
    except (NotMultiplicative, NotInvertible, UnitNotFixed, DimensionMismatch) as exc:
        raise InputError(ip, f"{type(exc).__name__}: {exc}") from None


def action_to_json(g):
    F = g.algebra.field
    return {"elements": list(g.labels), "mul_table": [list(r) for r in g.mul_table], "identity": g.identity,
            "images": {g.labels[s]: matrix_to_json(g.images[s].matrix, F) for s in range(g.order)}}


def module_from_json(obj, algebra=None, path="", base_dir="."):
    _expect(isinstance(obj, dict), path or "/", "module must be an object")
    if algebra is None:
        ref = obj.get("algebra")
        if isinstance(ref, str):
            algebra = algebra_from_json(read_json(os.path.join(base_dir, ref)), _ptr(path, "algebra"))
        else:
            algebra = algebra_from_json(ref, _ptr(path, "algebra"))
    d = obj.get("dim")
    _expect(isinstance(d, int) and not isinstance(d, bool) and d >= 0, _ptr(path, "dim"), "dim must be >= 0")
    act = obj.get("action")
    ap = _ptr(path, "action")
    _expect(isinstance(act, list) and len(act) == algebra.dim, ap, f"need {algebra.dim} action matrices")
    mats = [matrix_from_json(x, algebra.field, d, d, _ptr(ap, i)) for i, x in enumerate(act)]
    try:
        return Module(algebra, mats)
    except InvalidModule as exc:
        raise InputError(ap, str(exc)) from None


def module_to_json(m, inline_algebra=True):
    F = m.field
    out = {"dim": m.dim, "action": [matrix_to_json(x, F) for x in m.action]}
    if inline_algebra:
        out["algebra"] = algebra_to_json(m.algebra)
    return out


# ---------------------------------------------------------------------------
# reports

def _plain(x):
    """Make a report JSON-serializable with canonical scalars."""
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    if isinstance(x, np.ndarray):
        return [_plain(v) for v in x.tolist()]
    if isinstance(x, (bool, str)) or x is None:
        return x
    if isinstance(x, (int, np.integer)):
        return int(x)
    return str(x)


def dumps_report(report, fmt="json"):
    report = _plain(report)
    if fmt == "json":
        return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
    if fmt == "text":
        return _text(report)
    raise ValueError(f"unknown format {fmt!r}")


def _text(report):
    lines = []
    if "claim" in report:
        lines.append(f"claim: {report['claim']}")
    if "verdict" in report:
        lines.append(f"verdict: {report['verdict'].upper()}")
    for key in ("cutoff", "seed"):
        if key in report:
            lines.append(f"{key}: {report[key]}")
    ev = report.get("evidence", {})
    for k in sorted(ev):
        v = ev[k]
        s = json.dumps(v, sort_keys=True)
        if len(s) > 200:
            s = s[:197] + "..."
        lines.append(f"  {k}: {s}")
    certs = report.get("certificates") or []
    if certs:
        lines.append(f"certificates: {len(certs)}")
    if "command" in report:
        lines.append(f"command: {' '.join(report['command'])}")
    return "\n".join(lines) + "\n"


def emit_report(report, path=None, fmt="json", stream=None):
    text = dumps_report(report, fmt)
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        (stream or sys.stdout).write(text)
    return text
