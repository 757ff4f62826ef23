import logging
import os
from typing import List, Optional

import numpy as np

from nonassoclab.const import DEFAULT_SEED, SEED_ENV
from nonassoclab.helper.exceptions import ConfigurationException

_LOGGER = logging.getLogger(__name__)


def resolve_seed(seed: Optional[int] = None) -> int:
    """Explicit seed, else NONASSOC_LAB_SEED, else the pinned default."""
    if seed is not None:
        return int(seed)
    raw = os.environ.get(SEED_ENV)
    if raw:
        try:
            return int(raw)
        except ValueError as err:
            raise ConfigurationException(f"{SEED_ENV}={raw!r} is not an integer") from err
    return DEFAULT_SEED


def spawn_rngs(seed: int, count: int) -> List[np.random.Generator]:
    """One independent generator per trial, so trial k never depends on trial k-1."""
    children = np.random.SeedSequence(seed).spawn(count)
    return [np.random.default_rng(child) for child in children]


def trial_rng(seed: int, index: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(index,)))


def parse_expectations(items: Optional[List[str]]) -> dict:
    """--expect k=v pairs into a dict."""
    expectations = {}
    for item in items or []:
        key, sep, value = item.partition("=")
        if not sep or not key.strip():
            raise ConfigurationException(f"Expectation {item!r} must look like key=value")
        expectations[key.strip()] = value.strip()
    return expectations
