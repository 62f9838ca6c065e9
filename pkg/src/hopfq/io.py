"""JSON structure files.

Scalars are strings.  Tensors are nested by input first:

* ``mu[i][j][k]``: coefficient of ``e_k`` in ``e_i e_j``
* ``delta[i][j][k]``: coefficient of ``e_j (x) e_k`` in ``delta(e_i)``
* ``rho[i][j][k]``: coefficient of ``a_j (x) h_k`` in ``rho(a_i)``
* ``lambda[i][j]``: coefficient of ``e_j`` in ``lambda(e_i)``
* ``eta[k]``: coefficient of ``e_k`` in the unit, ``eps[i]``: ``eps(e_i)``

A ``morphism`` file stores the matrix itself, ``entries[r][c]``, with column
``c`` the image of source basis vector ``c``.
"""

from __future__ import annotations

import json
from importlib import resources
from pathlib import Path

import numpy as np

from .comodules import ComoduleMagma
from .exactlin import FieldSpec, Morphism
from .loops import LoopError, loop_from_table
from .structures import HopfQuasigroup, UnitalMagma, loop_algebra

KINDS = ("hopf_quasigroup", "comodule_magma", "loop_table", "morphism")


class FormatError(ValueError):
    def __init__(self, msg, source=None, path=""):
        self.source = source
        self.path = path
        where = f"{source}" if source else "<input>"
        if path:
            where += f" at {path}"
        super().__init__(f"{where}: {msg}")


# -- tensors <-> morphisms -------------------------------------------------------


def _scalars(field, data, shape, src, path):
    arr = np.empty(shape, dtype=object)

    def walk(node, idx, depth):
        if depth == len(shape):
            if not isinstance(node, str):
                raise FormatError(f"scalar must be a string, got {node!r}", src, path + "".join(f"[{i}]" for i in idx))
            try:
                arr[tuple(idx)] = field.parse_scalar(node)
            except (ValueError, ZeroDivisionError) as e:
                raise FormatError(str(e), src, path + "".join(f"[{i}]" for i in idx)) from None
            return
        if not isinstance(node, list) or len(node) != shape[depth]:
            got = len(node) if isinstance(node, list) else type(node).__name__
            raise FormatError(f"expected length {shape[depth]}, got {got}", src, path + "".join(f"[{i}]" for i in idx))
        for k, child in enumerate(node):
            walk(child, idx + [k], depth + 1)

    walk(data, [], 0)
    return arr


def _fmt(field, arr):
    if not isinstance(arr, np.ndarray):
        return field.format_scalar(arr)
    if arr.ndim == 0:
        return field.format_scalar(arr[()])
    return [_fmt(field, a) for a in arr]


def tensor_to_morphism(field, data, kind, dims, src=None, path=""):
    if kind == "mu":
        n = dims[0]
        t = _scalars(field, data, (n, n, n), src, path)
        return Morphism._raw(field, t.reshape(n * n, n).T)
    if kind in ("delta", "rho"):
        n, a, b = dims
        t = _scalars(field, data, (n, a, b), src, path)
        return Morphism._raw(field, t.reshape(n, a * b).T)
    if kind == "lambda":
        n = dims[0]
        return Morphism._raw(field, _scalars(field, data, (n, n), src, path).T)
    if kind == "eta":
        return Morphism._raw(field, _scalars(field, data, (dims[0],), src, path).reshape(-1, 1))
    if kind == "eps":
        return Morphism._raw(field, _scalars(field, data, (dims[0],), src, path).reshape(1, -1))
    raise ValueError(kind)


def morphism_to_tensor(m, kind, dims):
    f = m.field
    d = m.data
    if kind == "mu":
        n = dims[0]
        return _fmt(f, d.T.reshape(n, n, n))
    if kind in ("delta", "rho"):
        n, a, b = dims
        return _fmt(f, d.T.reshape(n, a, b))
    if kind == "lambda":
        return _fmt(f, d.T)
    if kind == "eta":
        return _fmt(f, d[:, 0])
    if kind == "eps":
        return _fmt(f, d[0, :])
    raise ValueError(kind)


# -- documents --------------------------------------------------------------------


def hopf_to_dict(h: HopfQuasigroup, note=""):
    n = h.dim
    d = {
        "kind": "hopf_quasigroup",
        "field": str(h.field),
        "dim": n,
        "name": h.name,
        "mu": morphism_to_tensor(h.mu, "mu", [n]),
        "eta": morphism_to_tensor(h.eta, "eta", [n]),
        "delta": morphism_to_tensor(h.delta, "delta", [n, n, n]),
        "eps": morphism_to_tensor(h.eps, "eps", [n]),
        "lambda": morphism_to_tensor(h.lam, "lambda", [n]),
    }
    if h.basis_names:
        d["basis_names"] = list(h.basis_names)
    if h.loop is not None:
        d["loop_table"] = h.loop.as_lists()
    if note:
        d["note"] = note
    return d


def comodule_to_dict(a: ComoduleMagma, note=""):
    n, dh = a.dim, a.hopf.dim
    d = {
        "kind": "comodule_magma",
        "field": str(a.field),
        "dim": n,
        "name": a.name,
        "hopf": hopf_to_dict(a.hopf),
        "mu": morphism_to_tensor(a.magma.mu, "mu", [n]),
        "eta": morphism_to_tensor(a.magma.eta, "eta", [n]),
        "rho": morphism_to_tensor(a.rho, "rho", [n, n, dh]),
    }
    if note:
        d["note"] = note
    return d


def loop_to_dict(loop, note=""):
    d = {"kind": "loop_table", "order": loop.order, "table": loop.as_lists()}
    if note:
        d["note"] = note
    return d


def morphism_to_dict(m: Morphism, name="", note=""):
    d = {
        "kind": "morphism",
        "field": str(m.field),
        "rows": m.rows,
        "cols": m.cols,
        "entries": m.to_strings(),
    }
    if name:
        d["name"] = name
    if note:
        d["note"] = note
    return d


def _need(doc, key, src, path=""):
    if key not in doc:
        raise FormatError(f"missing key {key!r}", src, path)
    return doc[key]


def _field_of(doc, src, path=""):
    try:
        return FieldSpec.parse(str(_need(doc, "field", src, path)))
    except ValueError as e:
        raise FormatError(str(e), src, path + ".field") from None


def _dim(doc, key, src, path):
    n = _need(doc, key, src, path)
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise FormatError(f"{key} must be a positive integer", src, path + "." + key)
    return n


def hopf_from_dict(doc, src=None, path=""):
    f = _field_of(doc, src, path)
    n = _dim(doc, "dim", src, path)
    maps = {}
    for key, dims in (("mu", [n]), ("eta", [n]), ("delta", [n, n, n]), ("eps", [n]), ("lambda", [n])):
        maps[key] = tensor_to_morphism(f, _need(doc, key, src, path), key, dims, src, f"{path}.{key}")
    loop = None
    if "loop_table" in doc:
        try:
            loop = loop_from_table(doc["loop_table"])
        except LoopError as e:
            raise FormatError(str(e), src, path + ".loop_table") from None
    names = tuple(doc["basis_names"]) if "basis_names" in doc else None
    return HopfQuasigroup(
        f, n, maps["mu"], maps["eta"], maps["delta"], maps["eps"], maps["lambda"],
        name=doc.get("name", ""), loop=loop, basis_names=names,
    )


def comodule_from_dict(doc, src=None, path=""):
    hdoc = _need(doc, "hopf", src, path)
    if isinstance(hdoc, str):
        base = Path(src).parent if src else Path(".")
        h = load(hdoc if not (base / hdoc).exists() else base / hdoc)
        if not isinstance(h, HopfQuasigroup):
            raise FormatError("hopf reference is not a Hopf quasigroup", src, path + ".hopf")
    else:
        h = hopf_from_dict(hdoc, src, path + ".hopf")
    f = h.field
    n = _dim(doc, "dim", src, path)
    mu = tensor_to_morphism(f, _need(doc, "mu", src, path), "mu", [n], src, path + ".mu")
    eta = tensor_to_morphism(f, _need(doc, "eta", src, path), "eta", [n], src, path + ".eta")
    rho = tensor_to_morphism(f, _need(doc, "rho", src, path), "rho", [n, n, h.dim], src, path + ".rho")
    return ComoduleMagma(h, UnitalMagma(f, n, mu, eta), rho, name=doc.get("name", ""))


def morphism_from_dict(doc, src=None, path=""):
    f = _field_of(doc, src, path)
    r = _need(doc, "rows", src, path)
    c = _need(doc, "cols", src, path)
    arr = _scalars(f, _need(doc, "entries", src, path), (r, c), src, path + ".entries")
    return Morphism._raw(f, arr)


def from_dict(doc, src=None):
    if not isinstance(doc, dict):
        raise FormatError("top level must be an object", src)
    kind = doc.get("kind")
    if kind == "hopf_quasigroup":
        return hopf_from_dict(doc, src)
    if kind == "comodule_magma":
        return comodule_from_dict(doc, src)
    if kind == "morphism":
        return morphism_from_dict(doc, src)
    if kind == "loop_table":
        try:
            return loop_from_table(_need(doc, "table", src))
        except LoopError as e:
            raise FormatError(str(e), src, ".table") from None
    raise FormatError(f"unknown kind {kind!r}; expected one of {', '.join(KINDS)}", src)


def to_dict(obj, note=""):
    from .loops import LoopTable

    if isinstance(obj, HopfQuasigroup):
        return hopf_to_dict(obj, note)
    if isinstance(obj, ComoduleMagma):
        return comodule_to_dict(obj, note)
    if isinstance(obj, Morphism):
        return morphism_to_dict(obj, note=note)
    if isinstance(obj, LoopTable):
        return loop_to_dict(obj, note)
    raise TypeError(f"cannot serialise {type(obj).__name__}")


# -- files and the bundled corpus ------------------------------------------------------


def dumps(obj, note=""):
    return json.dumps(to_dict(obj, note), indent=1) + "\n"


def save(obj, path, note=""):
    Path(path).write_text(dumps(obj, note), encoding="utf-8")


def bundled_names():
    root = resources.files("hopfq") / "data"
    return sorted(p.name[:-5] for p in root.iterdir() if p.name.endswith(".json"))


ALIASES = {"fpz3": "f7z3"}


def resolve(path):
    """A filesystem path, or the name of a bundled structure such as ``qz2``."""
    p = Path(path)
    if p.exists():
        return p
    stem = p.name[:-5] if p.name.endswith(".json") else p.name
    stem = ALIASES.get(stem, stem)
    cand = resources.files("hopfq") / "data" / f"{stem}.json"
    if cand.is_file():
        return cand
    raise FileNotFoundError(f"no such file or bundled structure: {path}")


def load(path, field=None):
    p = resolve(path)
    try:
        doc = json.loads(p.read_text(encoding="utf-8"))
    except json.JSONDecodeError as e:
        raise FormatError(f"invalid JSON ({e.msg}, line {e.lineno})", str(p)) from None
    obj = from_dict(doc, str(p))
    return obj if field is None else change_field(obj, field)


def change_field(obj, field):
    """Reinterpret structure constants in another field (Q reduces mod p)."""
    from .loops import LoopTable

    if isinstance(obj, LoopTable):
        return obj
    if isinstance(obj, Morphism):
        if obj.field == field:
            return obj
        if obj.field.p is not None and field.p != obj.field.p:
            raise ValueError(f"cannot move {obj.field} data to {field}")
        try:
            return Morphism._raw(field, obj.data)
        except ZeroDivisionError:
            raise ValueError(f"a denominator vanishes in {field}") from None
    if isinstance(obj, HopfQuasigroup):
        if obj.field == field:
            return obj
        c = lambda m: change_field(m, field)
        return HopfQuasigroup(
            field, obj.dim, c(obj.mu), c(obj.eta), c(obj.delta), c(obj.eps), c(obj.lam),
            name=obj.name, loop=obj.loop, basis_names=obj.basis_names,
        )
    if isinstance(obj, ComoduleMagma):
        h = change_field(obj.hopf, field)
        m = UnitalMagma(field, obj.dim, change_field(obj.magma.mu, field), change_field(obj.magma.eta, field))
        return ComoduleMagma(h, m, change_field(obj.rho, field), name=obj.name)
    raise TypeError(type(obj).__name__)


def load_hopf(path, field=None):
    """Load a Hopf quasigroup; loop tables become loop algebras over ``field`` (default Q)."""
    obj = load(path, field)
    from .loops import LoopTable

    if isinstance(obj, LoopTable):
        f = field or FieldSpec()
        return loop_algebra(obj, f, name=f"{f}[{Path(str(path)).stem}]")
    return obj


def load_comodule(path, field=None):
    """A comodule magma; a Hopf quasigroup or loop table stands for H coacting on itself."""
    from .comodules import regular

    obj = load(path, field)
    if isinstance(obj, ComoduleMagma):
        return obj
    return regular(load_hopf(path, field))
