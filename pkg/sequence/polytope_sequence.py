#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Polytope Sequences

A finite prefix (P_m) of a sequence of LCT-polytopes, produced on demand by
a pure index -> polytope function and memoized per index.
"""

import logging
import threading
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Dict, Iterable, List, Optional

from lct import LctPolytope

logger = logging.getLogger(__name__)


class SequenceError(ValueError):
    """Bad index, window or violated precondition in sequence analysis"""


class PolytopeSequence:
    """Lazily materialized, memoized prefix of a polytope sequence"""

    def __init__(self, generator: Callable[[int], LctPolytope], indices: Iterable[int], label: str = ""):
        """Initialize a sequence prefix

        Args:
            generator: Pure function from an index to the term at that index
            indices: Increasing indices of the prefix (m >= 1)
            label: Short description used in logs and reports
        """
        self.generator = generator
        self.indices: List[int] = list(indices)
        self.label = label
        if not self.indices:
            raise SequenceError("a sequence prefix needs at least one index")
        if any(m < 1 for m in self.indices) or self.indices != sorted(set(self.indices)):
            raise SequenceError(f"indices must be increasing and positive, got {self.indices}")
        self._memo: Dict[int, LctPolytope] = {}
        self._lock = threading.Lock()

    @property
    def prefix_length(self) -> int:
        return len(self.indices)

    def term(self, m: int) -> LctPolytope:
        if m not in self.indices:
            raise SequenceError(f"index {m} is not in the prefix {self.indices[0]}..{self.indices[-1]}")
        with self._lock:
            cached = self._memo.get(m)
        if cached is not None:
            return cached
        value = self.generator(m)
        with self._lock:
            # first writer wins; the generator is pure so both values agree
            return self._memo.setdefault(m, value)

    def materialize(self, threads: Optional[int] = None) -> List[LctPolytope]:
        """All terms of the prefix in index order"""
        if threads and threads > 1:
            with ThreadPoolExecutor(max_workers=threads) as pool:
                list(pool.map(self.term, self.indices))
        terms = [self.term(m) for m in self.indices]
        logger.debug(f"Materialized {len(terms)} terms of {self.label or 'sequence'}")
        return terms

    def __len__(self) -> int:
        return self.prefix_length

    def __repr__(self) -> str:
        return f"PolytopeSequence({self.label!r}, {self.indices[0]}..{self.indices[-1]})"
