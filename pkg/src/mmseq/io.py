"""File formats: sequence-set JSON, weight CSV, level CSV, run reports."""

from __future__ import annotations

import csv
import json
from pathlib import Path

import numpy as np

from .corr import WeightProfile


class FormatError(ValueError):
    pass


def sequence_set_to_dict(X: np.ndarray) -> dict:
    n, m = X.shape
    return {
        "n": n,
        "m": m,
        "encoding": "phases",
        "data": [[float(v) for v in np.angle(X[:, j])] for j in range(m)],
    }


def write_sequence_set(path, X: np.ndarray) -> None:
    Path(path).write_text(json.dumps(sequence_set_to_dict(X)) + "\n")


def read_phases(path) -> np.ndarray:
    """Phases (radians) as an ``N x M`` float array; ``encoding`` must be ``phases``."""
    doc = _load_json(path)
    if doc.get("encoding") != "phases":
        raise FormatError(f"{path}: phases requested but encoding is {doc.get('encoding')!r}")
    return _shaped(doc, path, np.asarray(doc["data"], dtype=float))


def read_sequence_set(path, atol: float = 1e-9) -> np.ndarray:
    """Load a set; ``encoding`` is ``phases`` or ``reim`` (``[re, im]`` pairs).

    ``reim`` entries must be unimodular within ``atol``.
    """
    doc = _load_json(path)
    enc = doc.get("encoding")
    try:
        data = np.asarray(doc["data"], dtype=float)
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"{path}: unreadable data field ({exc})") from None
    if enc == "phases":
        return np.exp(1j * _shaped(doc, path, data))
    if enc == "reim":
        if data.ndim != 3 or data.shape[2] != 2:
            raise FormatError(f"{path}: reim data must be m lists of [re, im] pairs")
        X = _shaped(doc, path, data[..., 0] + 1j * data[..., 1])
        dev = np.max(np.abs(np.abs(X) - 1.0))
        if dev > atol:
            raise FormatError(f"{path}: entries are not unimodular (max deviation {dev:.3e})")
        return X
    raise FormatError(f"{path}: unknown encoding {enc!r}")


def _load_json(path) -> dict:
    try:
        doc = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise FormatError(f"{path}: {exc}") from None
    if not isinstance(doc, dict) or not {"n", "m", "data"} <= doc.keys():
        raise FormatError(f"{path}: expected an object with n, m, encoding, data")
    return doc


def _shaped(doc: dict, path, data: np.ndarray) -> np.ndarray:
    n, m = doc["n"], doc["m"]
    if data.shape != (m, n):
        raise FormatError(f"{path}: data has shape {data.shape}, header says m={m}, n={n}")
    if not np.all(np.isfinite(data)):
        raise FormatError(f"{path}: non-finite values")
    return data.T.copy()


def read_weights(path, n: int | None = None) -> WeightProfile:
    """One nonnegative weight per line, lag 0 first."""
    vals = []
    try:
        with open(path) as fh:
            for lineno, line in enumerate(fh, 1):
                line = line.strip()
                if not line:
                    continue
                try:
                    vals.append(float(line.split(",")[0]))
                except ValueError:
                    raise FormatError(f"{path}:{lineno}: not a number: {line!r}") from None
    except OSError as exc:
        raise FormatError(str(exc)) from None
    if n is not None and len(vals) != n:
        raise FormatError(f"{path}: expected {n} weights, found {len(vals)}")
    try:
        return WeightProfile(np.asarray(vals))
    except ValueError as exc:
        raise FormatError(f"{path}: {exc}") from None


def write_levels_csv(path, lags: np.ndarray, levels: np.ndarray) -> None:
    with open(path, "w", newline="") as fh:
        wr = csv.writer(fh)
        wr.writerow(["lag", "level_db"])
        for k, v in zip(lags, levels):
            wr.writerow([int(k), repr(float(v))])


def read_levels_csv(path) -> tuple[np.ndarray, np.ndarray]:
    with open(path, newline="") as fh:
        rows = list(csv.DictReader(fh))
    return (np.array([int(r["lag"]) for r in rows]), np.array([float(r["level_db"]) for r in rows]))


def write_report(path, report: dict) -> None:
    Path(path).write_text(json.dumps(report, indent=2) + "\n")
