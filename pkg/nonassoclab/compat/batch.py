"""Batch classification of event pairs and the chain audit over them."""
from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from nonassoclab.algebra import CommAlgebra, State
from nonassoclab.const import DEFAULT_TOL
from nonassoclab.events import Event, default_events, spectral_events
from nonassoclab.helper.util import trial_rng

from .profile import CompatProfile, compat_profile

_LOGGER = logging.getLogger(__name__)

EventPair = Tuple[Event, Event]


@dataclass
class CompatBatch:
    profiles: List[CompatProfile] = field(default_factory=list)

    @property
    def level_counts(self) -> Dict[str, int]:
        return dict(Counter(p.level for p in self.profiles))

    @property
    def violations(self) -> List[Tuple[int, List[str]]]:
        return [(k, p.violations) for k, p in enumerate(self.profiles) if p.violations]

    @property
    def consistent(self) -> bool:
        return not self.violations


def random_event_pairs(
    algebra: CommAlgebra,
    count: int,
    seed: int = 0,
    events: Optional[Sequence[Event]] = None,
    tol: float = DEFAULT_TOL,
) -> List[EventPair]:
    """Seeded pairs drawn from a pool of events and their complements."""
    pool = list(events) if events is not None else (
        default_events(algebra, seed, tol=tol) + spectral_events(algebra, seed, 4, tol)
    )
    pool = pool + [ev.complement() for ev in pool]
    if not pool:
        return []
    rng = trial_rng(seed, 0)
    picks = rng.integers(0, len(pool), size=(count, 2))
    return [(pool[int(i)], pool[int(j)]) for i, j in picks]


def compat_batch(
    algebra: CommAlgebra,
    pairs: Sequence[EventPair],
    states: Optional[Sequence[State]] = None,
    tol: float = DEFAULT_TOL,
) -> CompatBatch:
    batch = CompatBatch([compat_profile(algebra, e, f, states, tol) for e, f in pairs])
    _LOGGER.info("Classified %d pairs in %s: %s", len(pairs), algebra.name, batch.level_counts)
    return batch
