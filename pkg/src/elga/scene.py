"""Scene files: named entities plus a query list, evaluated to a report.

A scene is a JSON object::

    {
      "space": "el2",
      "entities": {
        "P": {"role": "point", "coeffs": {"e12": 1, "e20": 1}},
        "a": {"coeffs": {"e0": -2, "e1": 2, "e2": 1}}
      },
      "queries": [
        {"name": "r", "op": "distance_pp", "args": ["P", "Q"]},
        {"name": "rot", "op": "rotate", "args": ["P", "R", 0.785]}
      ],
      "figure": {"theta": 1.2566, "parallels": 32, "family": "both"}
    }

Roles gate validation at load time: "line" entities in el3 must satisfy
the Plucker condition, "point"/"plane"/"line" must be homogeneous of the
right grade, "bivector" must be grade 2.  Query args are entity names,
numbers, or keyword strings (family/side/direction/kind).  Angles are
radians; there is no degree mode.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field, is_dataclass, fields as dc_fields
from typing import Callable, Dict, List, Mapping, Sequence, Tuple

import numpy as np

from . import algebra, el1, el2, el3
from .algebra import (
    AlgebraError,
    Multivector,
    Space,
    from_coeff_dict,
    plucker_residual,
    is_simple_bivector,
    to_json_dict,
)


class SceneError(Exception):
    """Scene parse/validation failure (CLI exit code 1)."""


class QueryError(Exception):
    """Math-domain failure while evaluating a query (CLI exit code 2)."""

    def __init__(self, query_name: str, cause: Exception):
        super().__init__(f"query {query_name!r}: {cause}")
        self.query_name = query_name
        self.cause = cause


_ROLE_GRADES = {
    Space.EL1: {"point": 1},
    Space.EL2: {"line": 1, "point": 2},
    Space.EL3: {"plane": 1, "line": 2, "bivector": 2, "point": 3},
}


@dataclass(frozen=True)
class Query:
    name: str
    op: str
    args: Tuple[object, ...]


@dataclass(frozen=True)
class Scene:
    space: Space
    entities: Dict[str, Multivector]
    roles: Dict[str, str]
    queries: Tuple[Query, ...]
    figure: Dict[str, object] = field(default_factory=dict)


def _validate_entity(space: Space, name: str, role: str, mv: Multivector) -> None:
    if role == "any":
        return
    grades = _ROLE_GRADES[space]
    if role not in grades:
        raise SceneError(f"entity {name!r}: role {role!r} not valid in {space.value}")
    try:
        g = mv.pure_grade()
    except AlgebraError:
        raise SceneError(f"entity {name!r}: mixed grades, not a valid {role}")
    if g != grades[role]:
        raise SceneError(
            f"entity {name!r}: grade {g} does not match role {role!r}"
        )
    if role == "line" and space is Space.EL3 and not is_simple_bivector(mv):
        raise SceneError(
            f"entity {name!r}: plücker residual {plucker_residual(mv):.6g} "
            f"exceeds tolerance {algebra.epsilon():.1g}"
        )


def load_scene(obj: Mapping[str, object]) -> Scene:
    """Validate and bind a parsed scene JSON object."""
    if not isinstance(obj, Mapping):
        raise SceneError("scene must be a JSON object")
    try:
        space = Space.from_tag(obj.get("space"))
    except ValueError as e:
        raise SceneError(str(e))
    raw_entities = obj.get("entities", {})
    if not isinstance(raw_entities, Mapping):
        raise SceneError("entities must be an object")
    entities: Dict[str, Multivector] = {}
    roles: Dict[str, str] = {}
    for name, spec in raw_entities.items():
        if name in entities:
            raise SceneError(f"duplicate entity name {name!r}")
        if not isinstance(spec, Mapping):
            raise SceneError(f"entity {name!r} must be an object")
        role = spec.get("role", "any")
        coeffs = spec.get("coeffs")
        if coeffs is None:
            raise SceneError(f"entity {name!r} is missing coeffs")
        try:
            mv = from_coeff_dict(space, coeffs)
        except ValueError as e:
            raise SceneError(f"entity {name!r}: {e}")
        _validate_entity(space, name, role, mv)
        entities[name] = mv
        roles[name] = role
    raw_queries = obj.get("queries", [])
    if not isinstance(raw_queries, Sequence) or isinstance(raw_queries, str):
        raise SceneError("queries must be a list")
    ops = op_registry(space)
    queries: List[Query] = []
    for i, q in enumerate(raw_queries):
        if not isinstance(q, Mapping):
            raise SceneError(f"query #{i} must be an object")
        op = q.get("op")
        if op not in ops:
            raise SceneError(f"query #{i}: unknown op {op!r} for {space.value}")
        args = q.get("args", [])
        if not isinstance(args, Sequence) or isinstance(args, str):
            raise SceneError(f"query #{i}: args must be a list")
        name = q.get("name", f"q{i}")
        spec = ops[op]
        if len(args) != len(spec.arg_kinds):
            raise SceneError(
                f"query {name!r}: op {op!r} takes {len(spec.arg_kinds)} args, "
                f"got {len(args)}"
            )
        for a, kind in zip(args, spec.arg_kinds):
            if kind in ("mv", "xi") and (a not in entities if isinstance(a, str) else True):
                raise SceneError(f"query {name!r}: unknown entity {a!r}")
        queries.append(Query(name=name, op=op, args=tuple(args)))
    figure = obj.get("figure", {})
    if not isinstance(figure, Mapping):
        raise SceneError("figure must be an object")
    return Scene(space=space, entities=entities, roles=roles,
                 queries=tuple(queries), figure=dict(figure))


def load_scene_file(path: str) -> Scene:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            obj = json.load(fh)
    except OSError as e:
        raise SceneError(f"cannot read scene file: {e}")
    except json.JSONDecodeError as e:
        raise SceneError(f"scene file is not valid JSON: {e}")
    return load_scene(obj)


# ---------------------------------------------------------------------------
# op registry


@dataclass(frozen=True)
class OpSpec:
    func: Callable
    arg_kinds: Tuple[str, ...]  # mv | num | family | side | direction | kind | xi


def _shared_ops() -> Dict[str, OpSpec]:
    return {
        "norm": OpSpec(algebra.norm, ("mv",)),
        "dual_I": OpSpec(algebra.dual_I, ("mv",)),
        "regressive": OpSpec(algebra.regressive, ("mv", "mv")),
        "outer": OpSpec(algebra.outer, ("mv", "mv")),
        "inner": OpSpec(algebra.inner, ("mv", "mv")),
        "geometric_product": OpSpec(algebra.geometric_product, ("mv", "mv")),
        "commutator": OpSpec(algebra.commutator, ("mv", "mv")),
        "reverse": OpSpec(algebra.reverse, ("mv",)),
        "inverse_blade": OpSpec(algebra.inverse_blade, ("mv",)),
        "canonicalize_sign": OpSpec(algebra.canonicalize_sign, ("mv",)),
        "exp_bivector": OpSpec(algebra.exp_bivector, ("mv",)),
    }


def _triangle_area(p, q, r):
    return el2.triangle_area(el2.TriangleEl2(p, q, r))


_REGISTRY: Dict[Space, Dict[str, OpSpec]] = {}


def op_registry(space: Space) -> Dict[str, OpSpec]:
    """Query ops available for a given space."""
    if space in _REGISTRY:
        return _REGISTRY[space]
    ops = _shared_ops()
    if space is Space.EL1:
        ops.update({
            "distance": OpSpec(el1.distance, ("mv", "mv")),
            "polar": OpSpec(lambda a: el1.polar(a).mv, ("mv",)),
            "translate": OpSpec(lambda a, lam: el1.translate(a, lam).mv, ("mv", "num")),
            "reflect": OpSpec(lambda a, b: el1.reflect(a, b).mv, ("mv", "mv")),
            "project": OpSpec(el1.project, ("mv", "mv")),
            "reject": OpSpec(el1.reject, ("mv", "mv")),
        })
    elif space is Space.EL2:
        ops.update({
            "distance_pp": OpSpec(el2.distance_pp, ("mv", "mv")),
            "angle_ll": OpSpec(el2.angle_ll, ("mv", "mv")),
            "distance_lp": OpSpec(el2.distance_lp, ("mv", "mv")),
            "perpendicular_through": OpSpec(el2.perpendicular_through, ("mv", "mv")),
            "triangle_area": OpSpec(_triangle_area, ("mv", "mv", "mv")),
            "right_triangle_area": OpSpec(el2.right_triangle_area, ("mv", "mv", "mv")),
            "project": OpSpec(el2.project, ("mv", "mv")),
            "reject": OpSpec(el2.reject, ("mv", "mv")),
            "reflect_topdown": OpSpec(el2.reflect_topdown, ("mv", "mv")),
            "reflect_bottomup": OpSpec(el2.reflect_bottomup, ("mv", "mv")),
            "rotate": OpSpec(el2.rotate, ("mv", "mv", "num")),
            "classify_circle": OpSpec(el2.classify_circle, ("mv", "mv")),
        })
    else:
        ops.update({
            "distance_pp": OpSpec(el3.distance_pp, ("mv", "mv")),
            "distance_plane_point": OpSpec(el3.distance_plane_point, ("mv", "mv")),
            "distance_line_point": OpSpec(el3.distance_line_point, ("mv", "mv")),
            "angle_planes": OpSpec(el3.angle_planes, ("mv", "mv")),
            "angle_line_plane": OpSpec(el3.angle_line_plane, ("mv", "mv")),
            "axis_decompose": OpSpec(el3.axis_decompose, ("mv",)),
            "clifford_frame": OpSpec(el3.clifford_frame, ("mv",)),
            "clifford_parallel": OpSpec(el3.clifford_parallel, ("mv", "family", "num", "num")),
            "clifford_bivector": OpSpec(el3.clifford_bivector, ("mv", "family")),
            "parallel_through_point": OpSpec(el3.parallel_through_point, ("xi", "mv")),
            "line_line_metrics": OpSpec(el3.line_line_metrics, ("mv", "mv")),
            "project_on_plane": OpSpec(el3.project_on_plane, ("mv", "mv")),
            "reject_by_plane": OpSpec(el3.reject_by_plane, ("mv", "mv")),
            "project_on_point": OpSpec(el3.project_on_point, ("mv", "mv")),
            "reject_by_point": OpSpec(el3.reject_by_point, ("mv", "mv")),
            "project_on_line": OpSpec(el3.project_on_line, ("mv", "mv")),
            "reject_by_line": OpSpec(el3.reject_by_line, ("mv", "mv")),
            "project_line_on_line": OpSpec(el3.project_line_on_line, ("mv", "mv", "kind")),
            "reject_line_by_line": OpSpec(el3.reject_line_by_line, ("mv", "mv", "kind")),
            "perpendicular_through": OpSpec(el3.perpendicular_through, ("mv", "mv")),
            "reflect": OpSpec(el3.reflect, ("mv", "mv", "direction")),
            "double_rotation": OpSpec(el3.double_rotation, ("mv", "mv", "num", "num")),
            "clifford_translate": OpSpec(el3.clifford_translate, ("mv", "xi", "num")),
            "quaternion_bridge": OpSpec(el3.quaternion_bridge, ("mv",)),
            "clifford_translate_quat": OpSpec(
                el3.clifford_translate_quat, ("mv", "mv", "num", "side")),
        })
    _REGISTRY[space] = ops
    return ops


def _coerce(scene: Scene, kind: str, raw) :
    if kind == "mv":
        if not isinstance(raw, str):
            raise SceneError(f"expected an entity name, got {raw!r}")
        return scene.entities[raw]
    if kind == "xi":
        if not isinstance(raw, str):
            raise SceneError(f"expected an entity name, got {raw!r}")
        return el3.CliffordBivector.from_bivector(scene.entities[raw])
    if kind == "num":
        if isinstance(raw, bool) or not isinstance(raw, (int, float)):
            raise SceneError(f"expected a number, got {raw!r}")
        return float(raw)
    if kind == "family":
        return el3.Family(raw)
    if kind == "side":
        return el3.Side(raw)
    if kind == "direction":
        return el3.Direction(raw)
    if kind == "kind":
        if raw not in (1, 2):
            raise SceneError(f"kind must be 1 or 2, got {raw!r}")
        return int(raw)
    raise AssertionError(kind)


def _round_sig(x: float, digits: int = 15) -> float:
    if x == 0 or not math.isfinite(x):
        return x
    return float(f"{x:.{digits}g}")


def serialize_value(value, digits: int = 15):
    """JSON form of a query result.

    Numeric scalars are rounded to the requested significant digits;
    multivector coefficient arrays are emitted at full precision so the
    JSON round-trips to bit-identical coefficients.
    """
    if isinstance(value, Multivector):
        return to_json_dict(value)
    if isinstance(value, algebra.Spinor):
        return to_json_dict(value.mv)
    if isinstance(value, el3.CliffordBivector):
        return {"sign": value.sign.value, "value": to_json_dict(value.value)}
    if isinstance(value, bool):
        return value
    if isinstance(value, (int,)):
        return value
    if isinstance(value, float):
        return _round_sig(value, digits)
    if isinstance(value, np.ndarray):
        return [serialize_value(float(v), digits) for v in value]
    if isinstance(value, (el2.CircleKind, el3.Family, el3.Side, el3.LineRelation)):
        return value.value
    if is_dataclass(value):
        return {
            f.name: serialize_value(getattr(value, f.name), digits)
            for f in dc_fields(value)
        }
    if isinstance(value, (tuple, list)):
        return [serialize_value(v, digits) for v in value]
    raise TypeError(f"cannot serialise result of type {type(value).__name__}")


def evaluate_scene(scene: Scene) -> Dict[str, object]:
    """Run every query in file order and collect a report."""
    ops = op_registry(scene.space)
    results = []
    for query in scene.queries:
        spec = ops[query.op]
        args = [_coerce(scene, k, raw) for k, raw in zip(spec.arg_kinds, query.args)]
        try:
            value = spec.func(*args)
        except (AlgebraError, ValueError, ZeroDivisionError) as e:
            raise QueryError(query.name, e)
        results.append({
            "name": query.name,
            "op": query.op,
            "value": serialize_value(value),
        })
    return {"space": scene.space.value, "results": results}


def report_to_json(report: Mapping[str, object]) -> str:
    return json.dumps(report, indent=2) + "\n"


def round_report(obj, digits: int = 12):
    """Recursively round every float for golden-file comparison."""
    if isinstance(obj, float):
        return _round_sig(obj, digits)
    if isinstance(obj, dict):
        return {k: round_report(v, digits) for k, v in obj.items()}
    if isinstance(obj, list):
        return [round_report(v, digits) for v in obj]
    return obj
