"""
JSON file formats.

Fan file::

    {"rank": 2,
     "rays": [[-1, 0], [0, 1], [2, -1]],
     "cones": [[0, 1], [1, 2], [0, 2]],
     "flags": {"quasiprojective": true, "complete_hint": true},      # optional
     "refinement": {"rays": [...], "cones": [...]}}                  # optional

Homology file::

    {"top_degree": 6, "groups": [[3, 1, []], [4, 1, []], [6, 1, []]]}

where each group entry is ``[degree, free_rank, torsion_divisors]``; the
object form ``{"degree": 3, "free_rank": 1, "torsion": []}`` is accepted too.
Only exact integers are accepted: floats and booleans in numeric positions
are rejected.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Optional

from .errors import FormatError
from .fan import Fan
from .homology import GradedGroups, normalize_group
from .motive import Motive


def _int(x: Any, where: str) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise FormatError(f"{where}: expected an integer, got {x!r}")
    return x


def _int_list(xs: Any, where: str) -> list[int]:
    if not isinstance(xs, list):
        raise FormatError(f"{where}: expected a list, got {xs!r}")
    return [_int(x, where) for x in xs]


def _fan_part(obj: dict, rank: int, where: str) -> Fan:
    for key in ("rays", "cones"):
        if key not in obj or not isinstance(obj[key], list):
            raise FormatError(f"{where}: missing list {key!r}")
    rays = [_int_list(r, f"{where}.rays[{i}]") for i, r in enumerate(obj["rays"])]
    cones = [_int_list(c, f"{where}.cones[{i}]") for i, c in enumerate(obj["cones"])]
    return Fan.from_data(rank, rays, cones)


@dataclass(frozen=True)
class FanFile:
    fan: Fan
    quasiprojective: Optional[bool] = None
    complete_hint: Optional[bool] = None
    refinement: Optional[Fan] = None


def parse_fan(obj: Any) -> FanFile:
    if not isinstance(obj, dict):
        raise FormatError("fan file must hold a JSON object")
    rank = _int(obj.get("rank"), "rank")
    fan = _fan_part(obj, rank, "fan")
    flags = obj.get("flags") or {}
    if not isinstance(flags, dict):
        raise FormatError("flags must be an object")
    for key, value in flags.items():
        if key not in ("quasiprojective", "complete_hint"):
            raise FormatError(f"unknown flag {key!r}")
        if not isinstance(value, bool):
            raise FormatError(f"flag {key!r} must be true or false")
    refinement = None
    if obj.get("refinement") is not None:
        refinement = _fan_part(obj["refinement"], rank, "refinement")
    return FanFile(
        fan=fan,
        quasiprojective=flags.get("quasiprojective"),
        complete_hint=flags.get("complete_hint"),
        refinement=refinement,
    )


def fan_to_obj(ff: FanFile) -> dict:
    obj: dict = {"rank": ff.fan.rank, "rays": [list(r) for r in ff.fan.rays], "cones": [list(c) for c in ff.fan.cones]}
    flags = {k: v for k, v in (("quasiprojective", ff.quasiprojective), ("complete_hint", ff.complete_hint)) if v is not None}
    if flags:
        obj["flags"] = flags
    if ff.refinement is not None:
        obj["refinement"] = {"rays": [list(r) for r in ff.refinement.rays], "cones": [list(c) for c in ff.refinement.cones]}
    return obj


def parse_homology(obj: Any) -> GradedGroups:
    if not isinstance(obj, dict):
        raise FormatError("homology file must hold a JSON object")
    top = _int(obj.get("top_degree"), "top_degree")
    groups = {}
    for i, entry in enumerate(obj.get("groups", [])):
        where = f"groups[{i}]"
        if isinstance(entry, dict):
            deg = _int(entry.get("degree"), where + ".degree")
            free = _int(entry.get("free_rank", 0), where + ".free_rank")
            tors = _int_list(entry.get("torsion", []), where + ".torsion")
        elif isinstance(entry, list) and len(entry) in (2, 3):
            deg = _int(entry[0], where)
            free = _int(entry[1], where)
            tors = _int_list(entry[2], where) if len(entry) == 3 else []
        else:
            raise FormatError(f"{where}: expected [degree, free_rank, torsion]")
        if deg in groups:
            raise FormatError(f"{where}: degree {deg} listed twice")
        if free < 0 or any(t <= 0 for t in tors):
            raise FormatError(f"{where}: ranks must be >= 0 and divisors > 0")
        groups[deg] = normalize_group(free, tors)
    try:
        return GradedGroups(top, groups)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def homology_to_obj(h: GradedGroups) -> dict:
    return {
        "top_degree": h.top_degree,
        "groups": [[n, g.free_rank, list(g.torsion)] for n, g in h.by_degree.items()],
    }


def _load(path) -> Any:
    try:
        return json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: invalid JSON ({exc})") from exc


def load_fan(path) -> FanFile:
    return parse_fan(_load(path))


def load_homology(path) -> GradedGroups:
    return parse_homology(_load(path))


def motive_to_json(m: Motive) -> str:
    return json.dumps(m.to_records(), sort_keys=True)


def motive_from_json(text: str) -> Motive:
    records = json.loads(text)
    if not isinstance(records, list):
        raise FormatError("motive JSON must be a list of summands")
    for r in records:
        for key in ("twist", "shift", "free_rank"):
            _int(r.get(key), key)
        _int_list(r.get("torsion", []), "torsion")
    return Motive.from_records(records)
