"""JSON and CSV formats for posets, labels, co-ideals, tables and species elements.

Posets are ``{"elements": [...], "relations": [[a, b], ...]}``; any generating
set of relations is accepted and closed transitively.  Element names that are
decimal digit strings load as integers, everything else stays a string, so
``"1"`` and ``1`` name the same atom.  Labels are lists of ``[lo, hi]`` pairs
matched to atoms by their string form.
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from typing import Any

from .errors import SuperpatternError, UnknownAtomError
from .lattice import CoIdeal
from .nonnesting import NNPartition, enumerate_nn
from .poset import Poset, poset_from_relations
from .scalars import ZERO, RationalFunction, parse, render
from .supercharacters import Basis, value_matrix


class FormatError(SuperpatternError):
    pass


def _atom_in(value) -> Any:
    if isinstance(value, bool):
        raise FormatError("booleans are not atom labels")
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        return int(value) if value.isdigit() else value
    if isinstance(value, list):
        return tuple(_atom_in(v) for v in value)
    raise FormatError(f"unsupported atom label {value!r}")


def _atom_out(atom) -> Any:
    if isinstance(atom, tuple):
        return [_atom_out(a) for a in atom]
    return str(atom)


# posets -----------------------------------------------------------------------

def poset_to_json(P: Poset) -> dict:
    return {
        "elements": [_atom_out(a) for a in P.atoms],
        "relations": [[_atom_out(a), _atom_out(b)] for a, b in P.covers()],
    }


def poset_from_json(data: dict) -> Poset:
    if not isinstance(data, dict) or "elements" not in data:
        raise FormatError('poset JSON needs an "elements" list')
    atoms = [_atom_in(a) for a in data["elements"]]
    if len(set(atoms)) != len(atoms):
        raise FormatError("duplicate element labels")
    rels = data.get("relations", [])
    pairs = []
    for r in rels:
        if not isinstance(r, list) or len(r) != 2:
            raise FormatError(f"relation {r!r} is not a pair")
        pairs.append((_atom_in(r[0]), _atom_in(r[1])))
    return poset_from_relations(atoms, pairs)


def _lookup(P: Poset) -> dict:
    return {str(a): a for a in P.atoms} | {a: a for a in P.atoms}


def _resolve(value, table: dict):
    for key in (_atom_in(value), str(value)):
        if key in table:
            return table[key]
    raise UnknownAtomError(f"atom {value!r} not in the poset")


# labels -----------------------------------------------------------------------

def label_to_json(lam: NNPartition) -> list:
    return [[_atom_out(a), _atom_out(b)] for a, b in lam.sorted_arcs()]


def label_from_json(P: Poset, data) -> NNPartition:
    if isinstance(data, str):
        data = json.loads(data)
    if not isinstance(data, list):
        raise FormatError("a label is a list of [lo, hi] pairs")
    table = _lookup(P)
    arcs = []
    for pair in data:
        if not isinstance(pair, list) or len(pair) != 2:
            raise FormatError(f"arc {pair!r} is not a pair")
        arcs.append((_resolve(pair[0], table), _resolve(pair[1], table)))
    return NNPartition(P, arcs)


def coideal_to_json(N: CoIdeal) -> list:
    return [[_atom_out(a), _atom_out(b)] for a, b in N.sorted_members()]


def coideal_from_json(P: Poset, data) -> CoIdeal:
    """Member list of ``[lo, hi]`` pairs; upward closure is checked."""
    if isinstance(data, str):
        data = json.loads(data)
    if not isinstance(data, list):
        raise FormatError("co-ideal JSON must be a list of [lo, hi] pairs")
    table = _lookup(P)
    members = [(_resolve(a, table), _resolve(b, table)) for a, b in data]
    return CoIdeal(P, members)


# scalars and tables -------------------------------------------------------------

def scalar_out(x: RationalFunction, q0=None) -> str:
    if q0 is None:
        return render(x)
    return str(x.evaluate(q0))


def parse_q(text: str | None):
    """``None`` stays symbolic; otherwise a rational value for q."""
    if text is None:
        return None
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise FormatError(f"bad value for q: {text!r}") from exc
    return value


def table_rows(P: Poset, basis=Basis.CHI) -> tuple[list[NNPartition], list[list[RationalFunction]]]:
    return enumerate_nn(P), value_matrix(P, basis)


def table_to_json(P: Poset, basis=Basis.CHI, q0=None) -> dict:
    labels, rows = table_rows(P, basis)
    names = [label_to_json(lam) for lam in labels]
    return {
        "poset": poset_to_json(P),
        "basis": Basis.parse(basis).value,
        "q": None if q0 is None else str(q0),
        "labels": names,
        "rows": [[scalar_out(x, q0) for x in row] for row in rows],
    }


def table_to_csv(P: Poset, basis=Basis.CHI, q0=None) -> str:
    labels, rows = table_rows(P, basis)
    names = [json.dumps(label_to_json(lam), separators=(",", ":")) for lam in labels]
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["label"] + names)
    for name, row in zip(names, rows):
        w.writerow([name] + [scalar_out(x, q0) for x in row])
    return buf.getvalue()


# species elements ---------------------------------------------------------------

def species_to_json(x, q0=None) -> dict:
    terms = []
    for key, c in x.items():
        if len(key) == 1:
            lab = key[0]
            terms.append({
                "ambient": poset_to_json(lab.poset),
                "basis": x.basis.value,
                "label": label_to_json(lab),
                "coeff": scalar_out(c, q0),
            })
        else:
            terms.append({
                "basis": x.basis.value,
                "tensor": [{"ambient": poset_to_json(l.poset), "label": label_to_json(l)} for l in key],
                "coeff": scalar_out(c, q0),
            })
    return {"terms": terms}


def species_from_json(data: dict):
    from .hopf.species import SpeciesElement

    terms, basis = {}, None
    for t in data.get("terms", []):
        b = Basis.parse(t["basis"])
        if basis is not None and b != basis:
            raise FormatError("mixed bases in one element")
        basis = b
        parts = t["tensor"] if "tensor" in t else [t]
        key = []
        for part in parts:
            P = poset_from_json(part["ambient"])
            key.append(label_from_json(P, part["label"]))
        key = tuple(key)
        terms[key] = terms.get(key, ZERO) + parse(str(t["coeff"]))
    return SpeciesElement(basis or Basis.CHI, terms)


def dumps(obj) -> str:
    """Canonical JSON text: sorted keys, fixed separators, trailing newline."""
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"
