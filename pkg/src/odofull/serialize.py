"""JSON and CSV encodings for every value the package exchanges.

Exact rationals travel as ``"p/2^k"`` strings and are never rendered as
floating point in machine formats.  Cocycle entries ride as JSON numbers
while they fit in 53 bits and as decimal strings beyond that.
"""

from __future__ import annotations

import json
import os

from .clopen import ClopenSet
from .dyadic import Dyadic
from .element import FullGroupElement
from .errors import ParseError
from .escape import INFINITE
from .factor import (
    FactorizationCertificate,
    InducedFactor,
    OdometerPowerFactor,
    PeriodicFactor,
    TranspositionFactor,
)
from .skyscraper import CounterexampleReport, TowerElement, TowerSystem

ODOMETER_SYSTEM = "dyadic_odometer"
SKYSCRAPER_SYSTEM = "skyscraper"
_SAFE_INT = 1 << 53


def _int_obj(n: int):
    return n if -_SAFE_INT < n < _SAFE_INT else str(n)


def _int_from(obj) -> int:
    if isinstance(obj, bool) or not isinstance(obj, (int, str)):
        raise ParseError(f"expected an integer, got {obj!r}")
    try:
        return int(obj)
    except ValueError:
        raise ParseError(f"bad integer literal {obj!r}") from None


def dyadic_str(value: Dyadic) -> str:
    return str(value)


def dyadic_from_str(text) -> Dyadic:
    if not isinstance(text, str):
        raise ParseError(f"expected a 'p/2^k' string, got {text!r}")
    try:
        return Dyadic.from_string(text)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


# -- clopen sets --------------------------------------------------------------


def clopen_to_obj(subset: ClopenSet) -> dict:
    return {"depth": subset.depth, "prefixes": list(subset.prefixes())}


def clopen_from_obj(obj) -> ClopenSet:
    if not isinstance(obj, dict) or "depth" not in obj or "prefixes" not in obj:
        raise ParseError("clopen set needs 'depth' and 'prefixes'")
    depth = _int_from(obj["depth"])
    prefixes = [_int_from(p) for p in obj["prefixes"]]
    try:
        return ClopenSet.from_prefixes(depth, prefixes)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


# -- full group elements -------------------------------------------------------


def element_to_obj(u: FullGroupElement) -> dict:
    return {
        "system": ODOMETER_SYSTEM,
        "depth": u.depth,
        "cocycle": [_int_obj(n) for n in u.cocycle],
    }


def element_from_obj(obj) -> FullGroupElement:
    depth = _int_from(obj.get("depth"))
    cocycle = obj.get("cocycle")
    if not isinstance(cocycle, list):
        raise ParseError("'cocycle' must be a list")
    table = [_int_from(n) for n in cocycle]
    try:
        return FullGroupElement(depth, table)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def element_to_json(u: FullGroupElement) -> str:
    return json.dumps(element_to_obj(u))


# -- tower elements -------------------------------------------------------------


def tower_element_to_obj(u: TowerElement) -> dict:
    return {
        "system": SKYSCRAPER_SYSTEM,
        "towers": [
            {
                "height": tower.height,
                "base_measure": str(tower.base_measure),
                "moves": [[level, _int_obj(n)] for level, n in moves],
            }
            for tower, moves in zip(u.system.towers, u.moves)
        ],
    }


def tower_element_from_obj(obj) -> TowerElement:
    """Accepts ``moves`` pairs (canonical) or dense ``shifts`` tables."""
    towers = obj.get("towers")
    if not isinstance(towers, list) or not towers:
        raise ParseError("'towers' must be a nonempty list")
    params = []
    moves = []
    for entry in towers:
        if not isinstance(entry, dict):
            raise ParseError("each tower must be an object")
        params.append((_int_from(entry.get("height")), dyadic_from_str(entry.get("base_measure"))))
        if "moves" in entry:
            pairs = entry["moves"]
            if not isinstance(pairs, list):
                raise ParseError("'moves' must be a list of [level, shift] pairs")
            try:
                moves.append({_int_from(i): _int_from(n) for i, n in pairs})
            except (TypeError, ValueError):
                raise ParseError("'moves' must be a list of [level, shift] pairs") from None
        elif "shifts" in entry:
            table = entry["shifts"]
            if not isinstance(table, list):
                raise ParseError("'shifts' must be a list")
            moves.append({i: _int_from(n) for i, n in enumerate(table) if _int_from(n)})
        else:
            raise ParseError("each tower needs 'moves' or 'shifts'")
    try:
        return TowerElement.from_moves(TowerSystem(params), moves)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


# -- element parsing (path or inline JSON) ---------------------------------------


def parse_element(source: str):
    """Parse an element from inline JSON or from a file path.

    Returns a :class:`FullGroupElement` or a :class:`TowerElement`
    according to the ``system`` tag.  Malformed input raises
    :class:`ParseError`; a table that fails bijectivity raises
    ``NotBijectiveError`` naming the colliding prefixes.
    """
    text = source.strip()
    if not text.startswith("{"):
        if not os.path.exists(text):
            raise ParseError(f"no such file: {text}")
        with open(text, "r", encoding="utf-8") as handle:
            text = handle.read()
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"bad JSON: {exc}") from None
    if not isinstance(obj, dict):
        raise ParseError("element JSON must be an object")
    system = obj.get("system")
    if system == ODOMETER_SYSTEM:
        return element_from_obj(obj)
    if system == SKYSCRAPER_SYSTEM:
        return tower_element_from_obj(obj)
    raise ParseError(f"unknown system tag {system!r}")


# -- factorization certificates ----------------------------------------------------


def factor_to_obj(factor) -> dict:
    if isinstance(factor, (InducedFactor, TranspositionFactor)):
        return {"kind": factor.kind, "set": clopen_to_obj(factor.domain)}
    if isinstance(factor, PeriodicFactor):
        return {"kind": factor.kind, "element": element_to_obj(factor.element)}
    if isinstance(factor, OdometerPowerFactor):
        return {"kind": factor.kind, "power": _int_obj(factor.power)}
    raise TypeError(f"unknown factor {factor!r}")


def certificate_to_obj(cert: FactorizationCertificate) -> dict:
    return {
        "target": element_to_obj(cert.target),
        "word": [factor_to_obj(f) for f in cert.word],
        "verified": cert.verified,
    }


# -- reports ------------------------------------------------------------------------


def escape_rows_to_obj(rows) -> list[dict]:
    return [
        {
            "m": row.m,
            "depth": row.depth,
            "measure": str(row.measure),
            "integral": str(row.integral),
        }
        for row in rows
    ]


def escape_rows_to_csv(rows) -> str:
    lines = ["m,depth,measure,integral"]
    lines += [f"{r.m},{r.depth},{r.measure},{r.integral}" for r in rows]
    return "\n".join(lines) + "\n"


def counterexample_to_obj(report: CounterexampleReport) -> dict:
    return {
        "mass_deficit": str(report.mass_deficit),
        "rows": [
            {"n": r.n, "d_T": str(r.ambient_distance), "d_TA": str(r.induced_distance)}
            for r in report.rows
        ],
    }


def counterexample_to_csv(report: CounterexampleReport) -> str:
    lines = [f"# mass deficit {report.mass_deficit}", "n,d_T,d_TA"]
    lines += [
        f"{r.n},{r.ambient_distance},{r.induced_distance}" for r in report.rows
    ]
    return "\n".join(lines) + "\n"


def escape_result_to_obj(result) -> dict:
    if result.is_infinite:
        return {"integral": "infinite", "times": None}
    return {
        "integral": str(result.integral),
        "times": {str(s): tau for s, tau in sorted(result.times.items())},
    }


def approx(value) -> str:
    """Decimal approximation marker for text reports."""
    if value is INFINITE:
        return "infinite"
    return f"{value} (≈ {float(value):.6g})"
