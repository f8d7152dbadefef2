"""JSON formats for solutions, semitrusses and matched systems.

Parsers reject unknown or missing fields and report the location of the
first bad entry.  ``dumps`` is the only emitter, so parse then dump
round-trips byte for byte.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Union

from .errors import InputError
from .matched import MatchedSystemSol, MatchedSystemST
from .semitruss import SemiTruss
from .solution import Solution

SOLUTION_KEYS = {"n", "lambda", "rho"}
SEMITRUSS_KEYS = {"m", "add", "mul", "lambda", "sigma", "unit"}
SYSTEM_ST_KEYS = {"A1", "A2", "alpha", "beta"}
SYSTEM_SOL_KEYS = {"S", "T", "alpha", "beta"}


def dumps(obj) -> str:
    if hasattr(obj, "to_json"):
        obj = obj.to_json()
    return json.dumps(obj, sort_keys=True)


def _keys(d, expected: set, where: str) -> None:
    if not isinstance(d, dict):
        raise InputError(f"{where}: expected a JSON object")
    extra = set(d) - expected
    if extra:
        raise InputError(f"{where}: unknown field(s) {sorted(extra)}")
    missing = expected - set(d)
    if missing:
        raise InputError(f"{where}: missing field(s) {sorted(missing)}")


def _int(v, where: str) -> int:
    if isinstance(v, bool) or not isinstance(v, int):
        raise InputError(f"{where}: expected an integer, got {v!r}")
    return v


def _matrix(rows, rows_n: int, cols_n: int, where: str) -> list:
    if not isinstance(rows, list) or len(rows) != rows_n:
        raise InputError(f"{where}: expected {rows_n} rows")
    out = []
    for i, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != cols_n:
            raise InputError(f"{where}[{i}]: expected {cols_n} entries")
        vals = []
        for j, v in enumerate(row):
            v = _int(v, f"{where}[{i}][{j}]")
            if not 0 <= v < cols_n:
                raise InputError(f"{where}[{i}][{j}] = {v} out of range [0, {cols_n})")
            vals.append(v)
        out.append(vals)
    return out


def parse_solution(d, where: str = "solution") -> Solution:
    _keys(d, SOLUTION_KEYS, where)
    n = _int(d["n"], f"{where}.n")
    if n < 1:
        raise InputError(f"{where}.n must be positive")
    return Solution(n, _matrix(d["lambda"], n, n, f"{where}.lambda"), _matrix(d["rho"], n, n, f"{where}.rho"))


def parse_semitruss(d, where: str = "semitruss") -> SemiTruss:
    _keys(d, SEMITRUSS_KEYS, where)
    m = _int(d["m"], f"{where}.m")
    if m < 1:
        raise InputError(f"{where}.m must be positive")
    unit = d["unit"]
    if unit is not None:
        unit = _int(unit, f"{where}.unit")
    return SemiTruss(
        m,
        _matrix(d["add"], m, m, f"{where}.add"),
        _matrix(d["mul"], m, m, f"{where}.mul"),
        _matrix(d["lambda"], m, m, f"{where}.lambda"),
        _matrix(d["sigma"], m, m, f"{where}.sigma"),
        unit,
    )


def parse_system(d, where: str = "system") -> Union[MatchedSystemST, MatchedSystemSol]:
    if isinstance(d, dict) and "A1" in d:
        _keys(d, SYSTEM_ST_KEYS, where)
        A1 = parse_semitruss(d["A1"], f"{where}.A1")
        A2 = parse_semitruss(d["A2"], f"{where}.A2")
        return MatchedSystemST(A1, A2, _matrix(d["alpha"], A2.m, A1.m, f"{where}.alpha"),
                               _matrix(d["beta"], A1.m, A2.m, f"{where}.beta"))
    _keys(d, SYSTEM_SOL_KEYS, where)
    S = parse_solution(d["S"], f"{where}.S")
    T = parse_solution(d["T"], f"{where}.T")
    return MatchedSystemSol(S, T, _matrix(d["alpha"], T.n, S.n, f"{where}.alpha"),
                            _matrix(d["beta"], S.n, T.n, f"{where}.beta"))


def parse_any(d):
    if isinstance(d, dict):
        if "n" in d:
            return parse_solution(d)
        if "m" in d:
            return parse_semitruss(d)
        if "alpha" in d:
            return parse_system(d)
    raise InputError("input is not a solution, semitruss or matched system")


def load(path) -> object:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: malformed JSON at line {exc.lineno} column {exc.colno}") from None
    return parse_any(data)
