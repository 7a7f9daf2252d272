"""JSON encoding and decoding for posets, ideals, arrays, and tableaux.

Rationals travel as reduced "p/q" strings so files are exact and
backend-independent.  dumps_canonical fixes key order and spacing, which
makes reports byte-identical across runs with the same inputs.
"""

import json

from .posets import OrderIdeal, Poset, RcEmbedding, sorted_indices
from .rational import format_rat, parse_rat
from .tableaux import GtPattern, Tableau


def _label_to_json(label):
    return list(label) if isinstance(label, tuple) else label


def _label_from_json(obj):
    return tuple(obj) if isinstance(obj, list) else obj


def poset_to_json(poset):
    out = {
        "size": poset.size,
        "labels": [_label_to_json(lab) for lab in poset.labels],
        "covers": [list(pair) for pair in poset.covers],
    }
    if poset.rc is not None:
        out["rc"] = [list(pos) for pos in poset.rc.positions]
    if poset.rectangle_shape is not None:
        out["rectangle"] = list(poset.rectangle_shape)
    return out


def poset_from_json(obj):
    rc = obj.get("rc")
    shape = obj.get("rectangle")
    return Poset(
        obj["size"],
        [tuple(pair) for pair in obj["covers"]],
        labels=[_label_from_json(lab) for lab in obj["labels"]],
        rc=RcEmbedding(tuple(pos) for pos in rc) if rc is not None else None,
        rectangle_shape=tuple(shape) if shape is not None else None,
    )


def ideal_to_json(ideal):
    return list(sorted_indices(ideal.mask))


def ideal_from_json(poset, obj):
    mask = 0
    for x in obj:
        mask |= 1 << x
    return OrderIdeal.from_mask(poset, mask)


def array_to_json(f):
    return {
        "values": [format_rat(v) for v in f.values],
        "boundary": [format_rat(f.boundary[0]), format_rat(f.boundary[1])],
    }


def array_from_json(alg, poset, obj):
    return alg.array(
        poset,
        [parse_rat(v) for v in obj["values"]],
        boundary=tuple(parse_rat(v) for v in obj["boundary"]),
    )


def tableau_to_json(tableau):
    return {
        "rows": [list(row) for row in tableau.rows],
        "max_entry": tableau.max_entry,
    }


def tableau_from_json(obj):
    return Tableau(obj["rows"], obj["max_entry"])


def pattern_to_json(pattern):
    return {"rows": [list(row) for row in pattern.rows]}


def pattern_from_json(obj):
    return GtPattern(obj["rows"])


def dumps_canonical(obj):
    'Deterministic JSON text: sorted keys, two-space indent, trailing newline.'
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"
