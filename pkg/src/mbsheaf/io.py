"""Canonical JSON formats: poset dumps, sheaf files, verification reports.

Every emitter builds plain dicts in a fixed key and entry order, so
serializing twice gives byte-identical output and parse/emit round-trips
are the identity on bytes.  Rationals travel as "num/den" strings with a
positive denominator.
"""

from __future__ import annotations

import json

from .coxeter import build_coxeter
from .linalg import RationalMatrix, fraction_from_str, fraction_to_str
from .sheaf import MixedBruhatSheaf
from .xi import enumerate_xi


class ParseError(ValueError):
    """Schema violation; the message carries the offending path."""


def xi_id(poset, m):
    c, d = poset.elements[m].pair
    left = "".join(map(str, c.type_I))
    right = "".join(map(str, d.type_I))
    return f"{left}:{c.rep_idx}|{right}:{d.rep_idx}"


def _parse_xi_id(poset, ident, path):
    try:
        left, right = ident.split("|")
        li, lw = left.split(":")
        ri, rw = right.split(":")
        c = poset.complex.face(tuple(int(ch) for ch in li), int(lw))
        d = poset.complex.face(tuple(int(ch) for ch in ri), int(rw))
        return poset.xi_orbit(c, d).index
    except (ValueError, KeyError) as exc:
        raise ParseError(f"{path}: bad cell id {ident!r}") from exc


def xi_dump(poset):
    """Poset dump: elements plus every strict comparability with its flags."""
    elements = []
    for m, e in enumerate(poset.elements):
        elements.append({
            "id": xi_id(poset, m),
            "typeI": list(e.typeIJ[0]),
            "typeJ": list(e.typeIJ[1]),
            "orbit_size": e.orbit_size,
            "hor": list(e.hor),
            "ver": list(e.ver),
            "flat_dim": e.flat.dim,
            "flat_id": e.flat.ident,
        })
    relations = []
    for m, n, kind, ano in sorted(poset.comparable_pairs()):
        relations.append({
            "from": xi_id(poset, m),
            "to": xi_id(poset, n),
            "kind": kind,
            "anodyne": ano,
        })
    return {
        "datum": {"type": poset.datum.type_label, "rank": poset.datum.rank},
        "element_count": len(elements),
        "relation_count": len(relations),
        "elements": elements,
        "relations": relations,
    }


def matrix_to_json(mat):
    return [[fraction_to_str(x) for x in row] for row in mat.rows]


def matrix_from_json(rows, nrows, ncols, path):
    if len(rows) != nrows or any(len(r) != ncols for r in rows):
        raise ParseError(f"{path}: matrix shape must be {nrows}x{ncols}")
    try:
        return RationalMatrix(tuple(tuple(fraction_from_str(x) for x in row)
                                    for row in rows), ncols)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"{path}: bad rational entry") from exc


def mbs_to_json(E, include_action=False):
    poset = E.poset
    dims = {xi_id(poset, m): E.dims[m] for m in range(len(poset.elements))}
    dprime = []
    for (m, n) in sorted(E.dprime):
        dprime.append({"from": xi_id(poset, m), "to": xi_id(poset, n),
                       "matrix": matrix_to_json(E.dprime[(m, n)])})
    dsecond = []
    for (m, n) in sorted(E.dsecond):
        dsecond.append({"from": xi_id(poset, m), "to": xi_id(poset, n),
                        "matrix": matrix_to_json(E.dsecond[(m, n)])})
    doc = {
        "datum": {"type": poset.datum.type_label, "rank": poset.datum.rank},
        "dims": dims,
        "dprime": dprime,
        "dsecond": dsecond,
    }
    if include_action:
        # point permutations per group element, for sheaves carrying an action
        act = poset.complex.action
        block = {}
        for w in range(poset.datum.order):
            per_cell = {}
            for m, e in enumerate(poset.elements):
                per_cell[xi_id(poset, m)] = [
                    e.point_index[(act[w][c], act[w][d])] for (c, d) in e.points]
            block[str(w)] = per_cell
        doc["group_action"] = block
    return doc


def mbs_from_json(doc, poset=None):
    """Rebuild a sheaf (and its poset) from the canonical format."""
    if not isinstance(doc, dict):
        raise ParseError("$: document must be an object")
    datum_doc = doc.get("datum")
    if (not isinstance(datum_doc, dict) or "type" not in datum_doc
            or "rank" not in datum_doc):
        raise ParseError("$.datum: must carry type and rank")
    if poset is None:
        from .coxeter import UnsupportedTypeError
        try:
            poset = enumerate_xi(build_coxeter(datum_doc["type"], datum_doc["rank"]))
        except UnsupportedTypeError as exc:
            raise ParseError(f"$.datum: {exc}") from exc
    dims_doc = doc.get("dims")
    if not isinstance(dims_doc, dict):
        raise ParseError("$.dims: must be an object")
    dims = [None] * len(poset.elements)
    for ident, d in dims_doc.items():
        m = _parse_xi_id(poset, ident, "$.dims")
        if not isinstance(d, int) or d < 0:
            raise ParseError(f"$.dims.{ident}: must be a nonnegative integer")
        dims[m] = d
    if any(d is None for d in dims):
        raise ParseError("$.dims: missing cells")
    dprime = {}
    for k, entry in enumerate(doc.get("dprime", ())):
        path = f"$.dprime[{k}]"
        m = _parse_xi_id(poset, entry["from"], path)
        n = _parse_xi_id(poset, entry["to"], path)
        dprime[(m, n)] = matrix_from_json(entry["matrix"], dims[n], dims[m], path)
    dsecond = {}
    for k, entry in enumerate(doc.get("dsecond", ())):
        path = f"$.dsecond[{k}]"
        m = _parse_xi_id(poset, entry["from"], path)
        n = _parse_xi_id(poset, entry["to"], path)
        dsecond[(m, n)] = matrix_from_json(entry["matrix"], dims[m], dims[n], path)
    return MixedBruhatSheaf(poset, dims, dprime, dsecond)


def dumps(doc):
    """The one serialization used everywhere: fixed separators, trailing newline."""
    return json.dumps(doc, indent=2, ensure_ascii=True) + "\n"


def loads(text):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"$: invalid JSON ({exc.msg} at line {exc.lineno})") from exc


def poly_dump(poset, polys, report):
    table = {}
    for m in range(len(poset.elements)):
        table[xi_id(poset, m)] = list(polys[m].coeffs)
    return {
        "datum": {"type": poset.datum.type_label, "rank": poset.datum.rank},
        "polynomials": table,
        "properties": "PASS" if report.ok else "FAIL",
        "failures": [repr(f) for f in report.failures],
    }


def check_dump(mbs_report, support, cosupport, constructibility):
    def entry(rep):
        return {"status": "PASS" if rep.ok else "FAIL",
                "failures": [repr(f) for f in rep.failures()]}
    return {
        "axioms": {
            "status": "PASS" if mbs_report.ok else "FAIL",
            "mbs1": [repr(f) for f in mbs_report.mbs1],
            "mbs2": [repr(f) for f in mbs_report.mbs2],
            "mbs3": [repr(f) for f in mbs_report.mbs3],
            "shape": [repr(f) for f in mbs_report.shape],
        },
        "support": entry(support),
        "cosupport": entry(cosupport),
        "constructibility": entry(constructibility),
    }
