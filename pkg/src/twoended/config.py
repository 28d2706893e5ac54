"""Run configurations as JSON documents.

Example::

    {
      "delta": "cyclic:2",
      "quotient": "Z",
      "alpha": [0, 1],
      "generators": [[1, 0, 0], [0, 1, 0], [0, -1, 0]],
      "N": 120
    }

``delta`` is a named-group key (see :func:`twoended.finite_group.parse_group`)
or ``{"order": m, "table": [[...]]}``.  A top-level list, or an object with a
``"runs"`` list, is a batch.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .errors import InvalidInput
from .finite_group import Automorphism, FiniteGroup, make_group, parse_group
from .marked_group import MarkedGroupSpec


def load_delta(value: Any) -> FiniteGroup:
    if isinstance(value, str):
        return parse_group(value)
    if isinstance(value, dict) and "table" in value:
        g = make_group(value["table"])
        if "order" in value and int(value["order"]) != g.order:
            raise InvalidInput(f"declared order {value['order']} does not match the table")
        return g
    raise InvalidInput(f"cannot read group from {value!r}")


def spec_from_config(doc: dict) -> tuple[MarkedGroupSpec, int | None]:
    try:
        delta = load_delta(doc.get("delta", "trivial"))
        alpha = doc.get("alpha")
        rho = doc.get("rho")
        spec = MarkedGroupSpec(
            delta,
            doc.get("quotient", "Z"),
            tuple(tuple(int(x) for x in g) for g in doc["generators"]),
            alpha=Automorphism(tuple(alpha)) if alpha is not None else None,
            rho=Automorphism(tuple(rho)) if rho is not None else None,
            multiset=bool(doc.get("multiset", False)),
        )
    except KeyError as exc:
        raise InvalidInput(f"config is missing {exc.args[0]!r}") from exc
    N = doc.get("N")
    return spec, (int(N) if N is not None else None)


def load_configs(path: str | Path) -> list[dict]:
    doc = json.loads(Path(path).read_text())
    if isinstance(doc, list):
        return doc
    if isinstance(doc, dict) and "runs" in doc:
        return list(doc["runs"])
    return [doc]
