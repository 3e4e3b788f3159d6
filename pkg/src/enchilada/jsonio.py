"""JSON wire formats for algebras, ideals, classes, and sequences.

Conventions: block indices are 1-based in files and 0-based in memory,
"inf" is the only non-integer matrix token, matrices are row-major, and
matrix dimensions must match the block counts of the endpoint algebras.
"""

from __future__ import annotations

from .algebras import FdCStarAlgebra, IdealRef, make_ideal
from .cardinal import Cardinal, card
from .corr import CorrClass
from .errors import ValidationError
from .exactness import SequenceSpec

__all__ = [
    "algebra_to_json",
    "algebra_from_json",
    "ideal_to_json",
    "ideal_from_json",
    "cardinal_to_json",
    "cardinal_from_json",
    "corr_to_json",
    "corr_from_json",
    "sequence_to_json",
    "sequence_from_json",
]


def _require_dict(obj, what: str) -> dict:
    if not isinstance(obj, dict):
        raise ValidationError(f"{what} must be a JSON object, got {type(obj).__name__}")
    return obj


def _require_list(obj, what: str) -> list:
    if not isinstance(obj, list):
        raise ValidationError(f"{what} must be a JSON array, got {type(obj).__name__}")
    return obj


def algebra_to_json(a: FdCStarAlgebra) -> dict:
    return {"blocks": list(a.blocks)}


def algebra_from_json(obj) -> FdCStarAlgebra:
    obj = _require_dict(obj, "algebra")
    blocks = _require_list(obj.get("blocks"), 'algebra "blocks"')
    return FdCStarAlgebra(tuple(blocks))


def ideal_to_json(ideal: IdealRef) -> dict:
    return {"members": [i + 1 for i in ideal.sorted_members]}


def ideal_from_json(parent: FdCStarAlgebra, obj) -> IdealRef:
    obj = _require_dict(obj, "ideal")
    members = _require_list(obj.get("members"), 'ideal "members"')
    shifted = set()
    for i in members:
        if isinstance(i, bool) or not isinstance(i, int) or i < 1:
            raise ValidationError(f"ideal members are 1-based block indices, got {i!r}")
        shifted.add(i - 1)
    return make_ideal(parent, shifted)


def cardinal_to_json(c: Cardinal) -> int | str:
    return int(c) if c.is_finite else "inf"


def cardinal_from_json(value) -> Cardinal:
    return card(value)


def corr_to_json(x: CorrClass) -> dict:
    return {
        "source": algebra_to_json(x.source),
        "target": algebra_to_json(x.target),
        "matrix": [[cardinal_to_json(v) for v in row] for row in x.matrix],
    }


def corr_from_json(obj) -> CorrClass:
    obj = _require_dict(obj, "correspondence")
    source = algebra_from_json(obj.get("source"))
    target = algebra_from_json(obj.get("target"))
    matrix = _require_list(obj.get("matrix"), 'correspondence "matrix"')
    rows = []
    for row in matrix:
        row = _require_list(row, "matrix row")
        rows.append(tuple(cardinal_from_json(v) for v in row))
    return CorrClass(source, target, tuple(rows))


def sequence_to_json(seq: SequenceSpec) -> dict:
    return {
        "algebras": [algebra_to_json(a) for a in seq.algebras],
        "correspondences": [corr_to_json(x) for x in seq.correspondences],
    }


def sequence_from_json(obj) -> SequenceSpec:
    obj = _require_dict(obj, "sequence")
    algebras = tuple(
        algebra_from_json(a) for a in _require_list(obj.get("algebras"), '"algebras"')
    )
    corrs = tuple(
        corr_from_json(x)
        for x in _require_list(obj.get("correspondences"), '"correspondences"')
    )
    return SequenceSpec(algebras, corrs)
