"""Shared brute-force oracles, independent of the library's own paths."""

import itertools
from functools import cache

import pytest

from symwalk.partitions import Partition, cycle_type


@cache
def partition_count(n: int) -> int:
    """p(n) by the parts-bounded counting recurrence."""
    ways = [1] + [0] * n
    for part in range(1, n + 1):
        for total in range(part, n + 1):
            ways[total] += ways[total - part]
    return ways[n]


def all_permutations(n: int):
    return itertools.permutations(range(1, n + 1))


@cache
def brute_class_counts(n: int) -> dict:
    """Cycle-type histogram from exhaustively enumerating S_n."""
    counts: dict[Partition, int] = {}
    for perm in all_permutations(n):
        lam = cycle_type(perm)
        counts[lam] = counts.get(lam, 0) + 1
    return counts


@pytest.fixture
def count_oracle():
    return partition_count
