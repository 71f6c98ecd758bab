"""JSON reading and writing of spaces.

Schema::

    {"points": ["a", "b", ...], "opens": [[0], [0, 1], ...]}

``opens`` may be any generating family; loading closes it into a topology
and records whether that added sets.  Point labels exist only here; the
library works with indices.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .errors import InvalidGenerator, TooLarge, TopolabError
from .fintop import FinSpace, bits, make_space, members, point_cap


class SpaceFormatError(TopolabError, ValueError):
    """The document is not a space description at all."""


@dataclass(frozen=True)
class LoadedSpace:
    space: FinSpace
    labels: tuple[str, ...]
    closure_added: bool


def space_from_json(data) -> LoadedSpace:
    if not isinstance(data, dict) or "points" not in data or "opens" not in data:
        raise SpaceFormatError('expected an object with "points" and "opens"')
    points, opens = data["points"], data["opens"]
    if not isinstance(points, list) or not isinstance(opens, list):
        raise SpaceFormatError('"points" and "opens" must be lists')
    labels = tuple(str(p) for p in points)
    if len(set(labels)) != len(labels):
        raise InvalidGenerator("duplicate point labels")
    n = len(labels)
    if n > point_cap():
        raise TooLarge(f"{n} points exceeds cap {point_cap()}")
    gens = []
    for o in opens:
        if not isinstance(o, list) or not all(isinstance(i, int) and not isinstance(i, bool) for i in o):
            raise SpaceFormatError("each open set must be a list of point indices")
        if any(i < 0 or i >= n for i in o):
            raise InvalidGenerator(f"open set {o} mentions a point outside 0..{n - 1}")
        gens.append(bits(o))
    X = make_space(n, gens)
    given = set(gens) | {0, X.full}
    return LoadedSpace(X, labels, given != X.open_set)


def load_space(path: str | Path) -> LoadedSpace:
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise SpaceFormatError(f"{path}: {exc}") from exc
    return space_from_json(data)


def space_to_json(X: FinSpace, labels=None) -> dict:
    if labels is None:
        labels = [str(i) for i in range(X.n)]
    return {"points": list(labels), "opens": [members(u) for u in X.opens]}


def dumps_space(X: FinSpace, labels=None) -> str:
    return json.dumps(space_to_json(X, labels), separators=(",", ":"))
