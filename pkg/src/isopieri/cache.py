"""On-disk cache of Bruhat posets, validated before reuse."""
from __future__ import annotations

import hashlib
import json
import logging
import os
from pathlib import Path

from .bruhat import DEFAULT_SIZE_CAP, BruhatPoset, build_poset, preceq
from .grassmannian import GrassmannianSpec, enumerate_symbols

log = logging.getLogger(__name__)


def cache_path(cache_dir: str | os.PathLike, spec: GrassmannianSpec) -> Path:
    return Path(cache_dir) / f"poset-{spec.lie_type}-{spec.m}-{spec.n}.json"


def _checksum(payload: dict) -> str:
    blob = json.dumps(payload, sort_keys=True, separators=(",", ":")).encode()
    return hashlib.sha256(blob).hexdigest()


def save(poset: BruhatPoset, path: str | os.PathLike) -> None:
    payload = poset.to_json()
    doc = dict(payload, checksum=_checksum(payload))
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(".tmp")
    tmp.write_text(json.dumps(doc, separators=(",", ":")))
    os.replace(tmp, path)


def load(path: str | os.PathLike, spec: GrassmannianSpec) -> BruhatPoset:
    """Load and validate; raises ValueError on any inconsistency."""
    doc = json.loads(Path(path).read_text())
    checksum = doc.pop("checksum", None)
    if checksum != _checksum(doc):
        raise ValueError("checksum mismatch")
    if (doc["spec"]["lie_type"], doc["spec"]["m"], doc["spec"]["n"]) != (spec.lie_type, spec.m, spec.n):
        raise ValueError("cached spec differs from the requested one")
    symbols = [tuple(P) for P in doc["symbols"]]
    if symbols != enumerate_symbols(spec):
        raise ValueError("cached symbol list is not the canonical enumeration")
    poset = BruhatPoset.from_covers(spec, symbols, [tuple(c) for c in doc["covers"]])
    if poset.rank != doc["rank"]:
        raise ValueError("cached ranks disagree with the cover relation")
    for lo, hi in poset.covers:
        if not preceq(spec, symbols[lo], symbols[hi]):
            raise ValueError("cached cover is not a Bruhat relation")
    # spot-check a deterministic sample of pairs against the direct criterion
    size = len(symbols)
    step = max(1, size * size // 2000)
    for k in range(0, size * size, step):
        i, j = divmod(k, size)
        if (j in poset.down[i]) != preceq(spec, symbols[j], symbols[i]):
            raise ValueError("cached order disagrees with the direct criterion")
    return poset


def load_or_build(
    spec: GrassmannianSpec,
    cache_dir: str | os.PathLike | None,
    size_cap: int = DEFAULT_SIZE_CAP,
) -> tuple[BruhatPoset, str]:
    """Return (poset, status) with status one of 'off', 'hit', 'built', 'rebuilt'."""
    if cache_dir is None:
        return build_poset(spec, size_cap), "off"
    path = cache_path(cache_dir, spec)
    status = "built"
    if path.exists():
        try:
            return load(path, spec), "hit"
        except (ValueError, KeyError, TypeError, json.JSONDecodeError) as exc:
            log.warning("ignoring corrupt poset cache %s (%s); rebuilding", path, exc)
            status = "rebuilt"
    poset = build_poset(spec, size_cap)
    try:
        save(poset, path)
    except OSError as exc:
        log.warning("could not write poset cache %s: %s", path, exc)
    return poset, status

