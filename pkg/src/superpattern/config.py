"""Size caps guarding the combinatorial enumerations.

Defaults can be overridden process-wide through the ``SUPERPATTERN_CAPS``
environment variable, e.g. ``SUPERPATTERN_CAPS="nn=5000,group=4096"``.
Recognised keys: ``nn`` (non-nesting partitions per poset), ``group``
(concrete group order), ``compositions`` (set compositions in Takeuchi's
formula) and ``lattice`` (co-ideals when materialising a full lattice).
"""

from __future__ import annotations

import os
from dataclasses import dataclass, fields, replace

ENV_VAR = "SUPERPATTERN_CAPS"


@dataclass(frozen=True)
class Caps:
    nn: int = 10**6
    group: int = 2**20
    compositions: int = 10**6
    lattice: int = 10**6

    def __post_init__(self):
        for f in fields(self):
            if getattr(self, f.name) <= 0:
                raise ValueError(f"cap {f.name!r} must be positive")


def parse_caps(text: str, base: Caps | None = None) -> Caps:
    base = base or Caps()
    if not text.strip():
        return base
    known = {f.name for f in fields(Caps)}
    updates = {}
    for item in text.split(","):
        key, _, value = item.partition("=")
        key = key.strip()
        if key not in known:
            raise ValueError(f"unknown cap {key!r} in {ENV_VAR}")
        updates[key] = int(value)
    return replace(base, **updates)


_caps = parse_caps(os.environ.get(ENV_VAR, ""))


def get_caps() -> Caps:
    return _caps


def set_caps(caps: Caps) -> Caps:
    """Install ``caps`` globally and return the previous value."""
    global _caps
    old, _caps = _caps, caps
    return old
