"""Exact JSON file format for algebras and bialgebras.

Top-level keys: field {kind[, p]}, dim, basis, unit, mult, and for
bialgebras comul, counit, plus optional antipode and r_matrix.  All
indices are 0-based, every coefficient is a string that parses exactly
in the declared field ("p/q" over the rationals, canonical residues
over a prime field).  Serialization is canonical: fixed key order,
entry lists sorted by index, zero entries dropped; parse-serialize-
parse is the identity.
"""

import json

from .linalg import Field, Matrix, QQ, GF
from .algebras import Algebra, check_algebra
from .hopf import Bialgebra, check_bialgebra


class SchemaError(ValueError):
    pass


def _need(doc, key, kind):
    if key not in doc:
        raise SchemaError("missing key %r" % key)
    v = doc[key]
    if not isinstance(v, kind):
        raise SchemaError("key %r has the wrong type" % key)
    return v


def _parse_field(doc):
    fd = _need(doc, "field", dict)
    kind = fd.get("kind")
    if kind == "QQ":
        if "p" in fd:
            raise SchemaError("rational field takes no modulus")
        return QQ
    if kind == "GF":
        p = fd.get("p")
        if not isinstance(p, int) or p < 2:
            raise SchemaError("GF needs an integer modulus >= 2")
        try:
            return GF(p)
        except AssertionError:
            raise SchemaError("GF modulus %d is not prime" % p)
    raise SchemaError("unknown field kind %r" % (kind,))


def _coeff(f, v, where):
    if not isinstance(v, str):
        raise SchemaError("%s: coefficients must be strings" % where)
    try:
        return f.of(v)
    except (ValueError, ZeroDivisionError, AssertionError):
        raise SchemaError("%s: %r does not parse in the field" % (where, v))


def _index(v, dim, where):
    if not isinstance(v, int) or not 0 <= v < dim:
        raise SchemaError("%s: index %r out of range" % (where, v))
    return v


def parse_algebra_file(text, check=True):
    """Parse a JSON document into an Algebra or Bialgebra.

    With check=True (the default) the parsed value must pass its axiom
    checks; the violating identity is reported otherwise.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError("not valid JSON: %s" % exc)
    if not isinstance(doc, dict):
        raise SchemaError("top level must be an object")
    f = _parse_field(doc)
    dim = _need(doc, "dim", int)
    if dim < 1:
        raise SchemaError("dim must be positive")
    basis = _need(doc, "basis", list)
    if len(basis) != dim or not all(isinstance(x, str) for x in basis):
        raise SchemaError("basis must list %d labels" % dim)
    unit_doc = _need(doc, "unit", list)
    if len(unit_doc) != dim:
        raise SchemaError("unit must have %d coefficients" % dim)
    unit = [_coeff(f, v, "unit") for v in unit_doc]
    table = [[{} for _ in range(dim)] for _ in range(dim)]
    for ent in _need(doc, "mult", list):
        if not isinstance(ent, list) or len(ent) != 4:
            raise SchemaError("mult entries are [i, j, k, coeff]")
        i = _index(ent[0], dim, "mult")
        j = _index(ent[1], dim, "mult")
        k = _index(ent[2], dim, "mult")
        c = _coeff(f, ent[3], "mult")
        if k in table[i][j]:
            raise SchemaError("mult repeats entry (%d, %d, %d)" % (i, j, k))
        if c != f.zero:
            table[i][j][k] = c
    alg = Algebra(f, list(basis), table, unit)

    has_comul = "comul" in doc
    has_counit = "counit" in doc
    if has_comul != has_counit:
        raise SchemaError("comul and counit come together")
    if not has_comul:
        for key in ("antipode", "r_matrix"):
            if key in doc:
                raise SchemaError("%s requires comul and counit" % key)
        if check:
            bad = check_algebra(alg)
            if bad is not None:
                raise SchemaError("algebra axioms fail: %r" % (bad,))
        return alg

    comul = Matrix.zeros(f, dim * dim, dim)
    seen = set()
    for ent in _need(doc, "comul", list):
        if not isinstance(ent, list) or len(ent) != 4:
            raise SchemaError("comul entries are [i, j, k, coeff]")
        i = _index(ent[0], dim, "comul")
        j = _index(ent[1], dim, "comul")
        k = _index(ent[2], dim, "comul")
        if (i, j, k) in seen:
            raise SchemaError("comul repeats entry (%d, %d, %d)" % (i, j, k))
        seen.add((i, j, k))
        comul.data[j * dim + k][i] = _coeff(f, ent[3], "comul")
    counit_doc = _need(doc, "counit", list)
    if len(counit_doc) != dim:
        raise SchemaError("counit must have %d coefficients" % dim)
    counit = [_coeff(f, v, "counit") for v in counit_doc]
    antipode = None
    if "antipode" in doc:
        rows = _need(doc, "antipode", list)
        if len(rows) != dim or any(
            not isinstance(r, list) or len(r) != dim for r in rows
        ):
            raise SchemaError("antipode must be a %d x %d matrix" % (dim, dim))
        antipode = Matrix(
            f, [[_coeff(f, v, "antipode") for v in row] for row in rows],
            copy=False,
        )
    r = None
    if "r_matrix" in doc:
        r = [f.zero] * (dim * dim)
        seen = set()
        for ent in _need(doc, "r_matrix", list):
            if not isinstance(ent, list) or len(ent) != 3:
                raise SchemaError("r_matrix entries are [i, j, coeff]")
            i = _index(ent[0], dim, "r_matrix")
            j = _index(ent[1], dim, "r_matrix")
            if (i, j) in seen:
                raise SchemaError("r_matrix repeats entry (%d, %d)" % (i, j))
            seen.add((i, j))
            r[i * dim + j] = _coeff(f, ent[2], "r_matrix")
    b = Bialgebra(alg, comul, counit, antipode=antipode, r=r)
    if check:
        rep = check_bialgebra(b)
        if not rep["ok"]:
            bad = sorted(k for k, v in rep.items() if v is False)
            raise SchemaError("bialgebra axioms fail: %s" % ", ".join(bad))
    return b


def _field_doc(f):
    if f.kind == "rationals":
        return {"kind": "QQ"}
    return {"kind": "GF", "p": f.p}


def serialize_algebra(value):
    """Canonical JSON text for an Algebra or Bialgebra."""
    b = value if isinstance(value, Bialgebra) else None
    a = b.algebra if b is not None else value
    f = a.field
    doc = {
        "field": _field_doc(f),
        "dim": a.dim,
        "basis": list(a.basis),
        "unit": [f.fmt(c) for c in a.unit],
        "mult": [
            [i, j, k, f.fmt(c)]
            for i in range(a.dim)
            for j in range(a.dim)
            for k, c in sorted(a.table[i][j].items())
            if c != f.zero
        ],
    }
    if b is not None:
        d = a.dim
        comul = []
        for i in range(d):
            for row in range(d * d):
                c = b.comul.data[row][i]
                if c != f.zero:
                    comul.append([i, row // d, row % d, f.fmt(c)])
        comul.sort(key=lambda e: e[:3])
        doc["comul"] = comul
        doc["counit"] = [f.fmt(c) for c in b.counit]
        if b.antipode is not None:
            doc["antipode"] = [
                [f.fmt(b.antipode.data[i][j]) for j in range(d)]
                for i in range(d)
            ]
        if b.r is not None:
            doc["r_matrix"] = [
                [idx // d, idx % d, f.fmt(c)]
                for idx, c in enumerate(b.r)
                if c != f.zero
            ]
    return json.dumps(doc, indent=1) + "\n"
