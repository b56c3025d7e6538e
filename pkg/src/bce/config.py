"""Problem configuration: JSON documents with exact scalars carried as strings."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from .exactlin import ExactMatrix, ScalarSyntaxError, Vector, format_scalar, parse_scalar
from .fixtures import FIXTURES, expand_fixture, hyperbolic_form, zero_form

__all__ = ["ConfigError", "ProblemConfig", "parse_config", "parse_fixture_flag", "load_config"]

NAMED_FORMS = ("zero", "hyperbolic")


class ConfigError(ValueError):
    """Input error with the offending field path."""

    def __init__(self, where: str, message: str):
        super().__init__(f"{where}: {message}")
        self.where = where


@dataclass
class ProblemConfig:
    dimension: int
    braid: ExactMatrix
    form: Optional[ExactMatrix]
    splitting: Optional[Tuple[List[Vector], List[Vector]]] = None
    max_degree: int = 6
    fixture: Optional[Dict[str, Any]] = None
    echo: Dict[str, Any] = field(default_factory=dict)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ProblemConfig):
            return NotImplemented
        return (
            self.dimension == other.dimension
            and self.braid == other.braid
            and self.form == other.form
            and self.splitting == other.splitting
            and self.max_degree == other.max_degree
        )


def _scalar(text: Any, where: str):
    if isinstance(text, bool) or not isinstance(text, (str, int)):
        raise ConfigError(where, f"expected a scalar string, got {type(text).__name__}")
    try:
        return parse_scalar(str(text))
    except (ScalarSyntaxError, ZeroDivisionError, ValueError) as exc:
        raise ConfigError(where, str(exc)) from None


def _matrix(rows: Any, nrows: int, ncols: int, where: str) -> ExactMatrix:
    if not isinstance(rows, list) or len(rows) != nrows:
        raise ConfigError(where, f"expected {nrows} rows")
    cols: Dict[int, Vector] = {}
    for i, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != ncols:
            raise ConfigError(f"{where}[{i}]", f"expected {ncols} entries")
        for j, text in enumerate(row):
            x = _scalar(text, f"{where}[{i}][{j}]")
            if x != 0:
                cols.setdefault(j, {})[i] = x
    return ExactMatrix(nrows, ncols, cols)


def _vector_list(items: Any, n: int, where: str) -> List[Vector]:
    if not isinstance(items, list):
        raise ConfigError(where, "expected a list of indices or vectors")
    out = []
    for k, item in enumerate(items):
        if isinstance(item, int) and not isinstance(item, bool):
            if not 0 <= item < n:
                raise ConfigError(f"{where}[{k}]", f"index {item} out of range for dimension {n}")
            out.append({item: parse_scalar("1")})
        elif isinstance(item, list):
            if len(item) != n:
                raise ConfigError(f"{where}[{k}]", f"expected a vector of length {n}")
            v = {}
            for j, text in enumerate(item):
                x = _scalar(text, f"{where}[{k}][{j}]")
                if x != 0:
                    v[j] = x
            out.append(v)
        else:
            raise ConfigError(f"{where}[{k}]", "expected an index or a vector")
    return out


def _fixture_params(fixture: Any) -> Tuple[str, Dict[str, Any]]:
    if isinstance(fixture, str):
        return fixture, {}
    if isinstance(fixture, dict) and isinstance(fixture.get("name"), str):
        return fixture["name"], {k: v for k, v in fixture.items() if k != "name"}
    raise ConfigError("fixture", 'expected a name or {"name": ..., params}')


def parse_config(text: str, fixture_override: Optional[Dict[str, Any]] = None) -> ProblemConfig:
    try:
        doc = json.loads(text) if text.strip() else {}
    except json.JSONDecodeError as exc:
        raise ConfigError(f"line {exc.lineno} column {exc.colno}", exc.msg) from None
    if not isinstance(doc, dict):
        raise ConfigError("document", "expected a JSON object")
    if fixture_override is not None:
        doc = {k: v for k, v in doc.items() if k != "braid"}
        doc["fixture"] = fixture_override
        if "dimension" in fixture_override:
            doc["dimension"] = fixture_override["dimension"]
    unknown = sorted(set(doc) - {"dimension", "braid", "form", "splitting", "max_degree", "fixture"})
    if unknown:
        raise ConfigError(unknown[0], "unknown field")
    n = doc.get("dimension")
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ConfigError("dimension", "expected a positive integer")
    max_degree = doc.get("max_degree", 6)
    if not isinstance(max_degree, int) or isinstance(max_degree, bool) or max_degree < 0:
        raise ConfigError("max_degree", "expected a nonnegative integer")
    if ("fixture" in doc) == ("braid" in doc):
        raise ConfigError("braid", "give exactly one of 'braid' and 'fixture'")
    fixture = None
    if "fixture" in doc:
        name, params = _fixture_params(doc["fixture"])
        params = {k: v for k, v in params.items() if k != "dimension"}
        if name not in FIXTURES:
            raise ConfigError("fixture", f"unknown fixture {name!r}; known: {', '.join(FIXTURES)}")
        for key, value in params.items():
            if key != "q":
                raise ConfigError(f"fixture.{key}", "unknown fixture parameter")
            _scalar(value, f"fixture.{key}")
        try:
            braid = expand_fixture(name, n, params)
        except (ValueError, ZeroDivisionError) as exc:
            raise ConfigError("fixture", str(exc)) from None
        fixture = {"name": name, **params}
    else:
        braid = _matrix(doc["braid"], n * n, n * n, "braid")
    form = None
    if "form" in doc:
        f = doc["form"]
        if f == "zero":
            form = zero_form(n)
        elif f == "hyperbolic":
            if n % 2:
                raise ConfigError("form", "hyperbolic form needs even dimension")
            form = hyperbolic_form(n)
        elif isinstance(f, str):
            raise ConfigError("form", f"unknown named form {f!r}; known: {', '.join(NAMED_FORMS)}")
        else:
            form = _matrix(f, n, n, "form")
    splitting = None
    if "splitting" in doc:
        s = doc["splitting"]
        if not isinstance(s, dict) or set(s) != {"w1", "w2"}:
            raise ConfigError("splitting", "expected an object with keys 'w1' and 'w2'")
        splitting = (_vector_list(s["w1"], n, "splitting.w1"), _vector_list(s["w2"], n, "splitting.w2"))
    echo: Dict[str, Any] = {"dimension": n}
    if fixture is not None:
        echo["fixture"] = fixture
    else:
        echo["braid"] = [[format_scalar(x) for x in row] for row in braid.to_rows()]
    if form is not None:
        echo["form"] = doc["form"] if isinstance(doc["form"], str) else [[format_scalar(x) for x in row] for row in form.to_rows()]
    if splitting is not None:
        echo["splitting"] = doc["splitting"]
    echo["max_degree"] = max_degree
    return ProblemConfig(n, braid, form, splitting, max_degree, fixture, echo)


def parse_fixture_flag(text: str) -> Dict[str, Any]:
    """``name:key=value,key=value`` with keys ``dim`` and ``q``."""
    name, _, rest = text.partition(":")
    out: Dict[str, Any] = {"name": name}
    for part in filter(None, rest.split(",")):
        key, eq, value = part.partition("=")
        if not eq:
            raise ConfigError("--fixture", f"expected key=value, got {part!r}")
        key = key.strip()
        if key == "dim":
            try:
                out["dimension"] = int(value)
            except ValueError:
                raise ConfigError("--fixture", f"dim must be an integer, got {value!r}") from None
        elif key == "q":
            out["q"] = value.strip()
        else:
            raise ConfigError("--fixture", f"unknown parameter {key!r}")
    return out


def load_config(path: Optional[str], fixture_flag: Optional[str] = None) -> ProblemConfig:
    override = parse_fixture_flag(fixture_flag) if fixture_flag else None
    text = ""
    if path is not None:
        try:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise ConfigError(path, exc.strerror or str(exc)) from None
    elif override is None:
        raise ConfigError("--config", "a config file or --fixture is required")
    return parse_config(text, override)
