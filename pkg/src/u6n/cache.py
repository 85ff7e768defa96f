"""Single-file JSON cache for computed chain counts.

The cache maps "n:mode" keys to the JSON form of ChainCounts.  A broken
or unreadable cache is never fatal: it warns on stderr and recomputes.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path
from typing import Callable

from .chains import ChainCounts


def _load(path: Path) -> dict:
    try:
        data = json.loads(path.read_text())
    except FileNotFoundError:
        return {}
    except (OSError, json.JSONDecodeError) as exc:
        print(f"warning: ignoring unreadable cache {path}: {exc}", file=sys.stderr)
        return {}
    if not isinstance(data, dict):
        print(f"warning: ignoring malformed cache {path}", file=sys.stderr)
        return {}
    return data


def cache_lookup_store(
    path: str | Path,
    n: int,
    mode: str,
    compute: Callable[[], ChainCounts],
) -> ChainCounts:
    """Return cached counts for (n, mode), computing and storing on a miss."""
    path = Path(path)
    data = _load(path)
    key = f"{n}:{mode}"
    if key in data:
        try:
            return ChainCounts.from_json_dict(data[key])
        except (KeyError, TypeError, ValueError) as exc:
            print(
                f"warning: discarding corrupt cache entry {key}: {exc}",
                file=sys.stderr,
            )
    counts = compute()
    data[key] = counts.to_json_dict()
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(json.dumps(data, indent=2, sort_keys=True) + "\n")
    except OSError as exc:
        print(f"warning: could not write cache {path}: {exc}", file=sys.stderr)
    return counts
