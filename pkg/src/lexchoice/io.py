"""Reading and writing the YAML model files.

Rationals are written as integers or ``"p/q"`` strings; floats are refused
so nothing inexact sneaks in.  Every parse failure raises
:class:`~lexchoice.errors.ParseError` naming the file and the field.
"""

from __future__ import annotations

from fractions import Fraction

import yaml

from .cones import GambleCone
from .errors import ParseError
from .exactlp import format_rational
from .gambles import Gamble, OptionSet, PossibilitySpace
from .horselot import HorseLottery, RewardSet
from .lexsys import LexSystem


def read_document(path: str) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            doc = yaml.safe_load(fh)
    except OSError as exc:
        raise ParseError(path, "file", exc.strerror or str(exc)) from None
    except yaml.YAMLError as exc:
        mark = getattr(exc, "problem_mark", None)
        where = f"line {mark.line + 1}" if mark is not None else "document"
        raise ParseError(path, where, getattr(exc, "problem", None) or "invalid YAML") from None
    if not isinstance(doc, dict):
        raise ParseError(path, "document", "expected a mapping at the top level")
    return doc


def parse_rational(value, path: str, where: str) -> Fraction:
    if isinstance(value, bool) or isinstance(value, float):
        raise ParseError(path, where, f"{value!r} is not an exact rational; write it as an integer or 'p/q'")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            pass
        raise ParseError(path, where, f"cannot read {value!r} as a rational")
    raise ParseError(path, where, f"expected a rational, got {type(value).__name__}")


def _require(doc: dict, key: str, path: str):
    if key not in doc:
        raise ParseError(path, key, "missing field")
    return doc[key]


def _vector(value, n: int, path: str, where: str) -> list:
    if not isinstance(value, list):
        raise ParseError(path, where, "expected a list of rationals")
    if len(value) != n:
        raise ParseError(path, where, f"expected {n} entries, got {len(value)}")
    return [parse_rational(x, path, f"{where}[{i}]") for i, x in enumerate(value)]


def parse_space(doc: dict, path: str) -> PossibilitySpace:
    atoms = _require(doc, "space", path)
    if not isinstance(atoms, list) or not atoms:
        raise ParseError(path, "space", "expected a non-empty list of atom names")
    try:
        return PossibilitySpace(str(a) for a in atoms)
    except ValueError as exc:
        raise ParseError(path, "space", str(exc)) from None


def load_options(path: str, space: PossibilitySpace | None = None):
    """Return ``(OptionSet, names)`` where ``names`` maps gambles to names."""
    doc = read_document(path)
    file_space = parse_space(doc, path)
    if space is not None and file_space != space:
        raise ParseError(path, "space", f"expected atoms {list(space.atoms)}, got {list(file_space.atoms)}")
    opts = _require(doc, "options", path)
    if not isinstance(opts, dict) or not opts:
        raise ParseError(path, "options", "expected a non-empty mapping of name to gamble")
    names = {}
    gambles = []
    for name, values in opts.items():
        g = Gamble(file_space, _vector(values, file_space.n, path, f"options.{name}"))
        names.setdefault(g, str(name))
        gambles.append(g)
    return OptionSet(gambles, file_space), names


def load_cone(path: str) -> GambleCone:
    doc = read_document(path)
    return _cone_from(doc, path)


def _cone_from(doc: dict, path: str) -> GambleCone:
    space = parse_space(doc, path)
    gens = doc.get("generators") or []
    if not isinstance(gens, list):
        raise ParseError(path, "generators", "expected a list of gambles")
    vecs = [_vector(g, space.n, path, f"generators[{i}]") for i, g in enumerate(gens)]
    for i, v in enumerate(vecs):
        if not any(v):
            raise ParseError(path, f"generators[{i}]", "generators must be non-zero")
    flag = doc.get("include_positives", True)
    if not isinstance(flag, bool):
        raise ParseError(path, "include_positives", "expected true or false")
    return GambleCone(space, vecs, flag)


def load_system(path: str) -> LexSystem:
    doc = read_document(path)
    return _system_from(doc, path)


def _system_from(doc: dict, path: str) -> LexSystem:
    space = parse_space(doc, path)
    layers = _require(doc, "layers", path)
    if not isinstance(layers, list) or not layers:
        raise ParseError(path, "layers", "expected a non-empty list of mass functions")
    rows = [_vector(m, space.n, path, f"layers[{k}]") for k, m in enumerate(layers)]
    for k, m in enumerate(rows):
        if any(x < 0 for x in m):
            raise ParseError(path, f"layers[{k}]", "negative mass")
        if sum(m) != 1:
            raise ParseError(path, f"layers[{k}]", f"masses sum to {format_rational(sum(m))}, not 1")
    return LexSystem(space, rows)


def load_model(path: str):
    """A cone file (``generators``) or a system file (``layers``)."""
    doc = read_document(path)
    if "layers" in doc:
        return _system_from(doc, path)
    return _cone_from(doc, path)


def load_lotteries(path: str):
    """Return ``(space, rewards, {name: HorseLottery})``.

    A file holds either one ``table`` or a ``lotteries`` mapping of names to
    tables; each table has one row per state, one column per reward.
    """
    doc = read_document(path)
    space = parse_space(doc, path)
    rewards = _require(doc, "rewards", path)
    worst = _require(doc, "worst", path)
    try:
        R = RewardSet([str(r) for r in rewards], str(worst))
    except (TypeError, ValueError) as exc:
        raise ParseError(path, "rewards", str(exc)) from None
    if "lotteries" in doc:
        tables = doc["lotteries"]
        if not isinstance(tables, dict) or not tables:
            raise ParseError(path, "lotteries", "expected a non-empty mapping of name to table")
    else:
        tables = {"p": _require(doc, "table", path)}
    out = {}
    for name, table in tables.items():
        where = f"lotteries.{name}" if "lotteries" in doc else "table"
        if not isinstance(table, list):
            raise ParseError(path, where, "expected a list of rows")
        if len(table) != space.n:
            raise ParseError(path, where, f"expected {space.n} rows, got {len(table)}")
        rows = [_vector(r, len(R.rewards), path, f"{where}[{i}]") for i, r in enumerate(table)]
        try:
            out[str(name)] = HorseLottery(space, R, rows)
        except ValueError as exc:
            raise ParseError(path, where, str(exc)) from None
    return space, R, out


def _quote(q: Fraction) -> str:
    s = format_rational(q)
    return s if q.denominator == 1 else f'"{s}"'


def _flow(values) -> str:
    return "[" + ", ".join(_quote(v) for v in values) + "]"


def dump_system(M: LexSystem, comments: list | None = None) -> str:
    """Serialise a system; ``comments`` are appended as ``#`` lines."""
    atoms = yaml.safe_dump(list(M.space.atoms), default_flow_style=True).strip()
    lines = [f"space: {atoms}", "layers:"]
    lines += [f"  - {_flow(m)}" for m in M.layers]
    for c in comments or []:
        lines.append(f"# {c}")
    return "\n".join(lines) + "\n"
