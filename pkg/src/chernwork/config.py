"""Size guards. Both limits can be overridden per call; the dimension limit
also reads ``CHERNWORK_DIM_LIMIT`` from the environment."""

from __future__ import annotations

import os

SET_PARTITION_LIMIT = 12
DEFAULT_DIM_LIMIT = 8


def dim_limit(override: int | None = None) -> int:
    if override is not None:
        return int(override)
    env = os.environ.get("CHERNWORK_DIM_LIMIT")
    if env:
        return int(env)
    return DEFAULT_DIM_LIMIT
