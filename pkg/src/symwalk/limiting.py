"""Exact limiting (time-averaged) distributions of the quantum walk.

Averaging e^{it(E_nu - E_eta)} over all time kills every cross term
except those with exactly equal eigenvalues, so the limiting probability
of class lam starting from c_mu is

    P_bar[lam] = |C_lam||C_mu|/(n!)^2 * sum_G ( sum_{nu in G}
                 chi_nu(lam) chi_nu(mu) )^2

with G running over the groups of irreps sharing one exact eigenvalue.
Everything on this route is a big-integer/rational identity; the only
collision detection is equality of exact rationals, never floats.

The closed-form n-cycle table for p-cycle generators is implemented
separately in ``table_ncycle_probability`` purely as an independent
cross-check on the grouping engine.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Literal

from .errors import ConsistencyError, DomainError, SupportMismatchError
from .partitions import Partition, class_size, is_even_class
from .walk_spectrum import (
    ClassDistribution,
    ClassFunction,
    WalkSpectrum,
    class_distribution,
)


@dataclass(frozen=True)
class EigenGroups:
    """Partition of the irreps of S_n by exact eigenvalue equality."""

    n: int
    f: ClassFunction
    groups: tuple[tuple[Partition, ...], ...]

    def group_of(self, nu: Partition) -> tuple[Partition, ...]:
        for g in self.groups:
            if nu in g:
                return g
        raise DomainError(f"{nu} is not a partition of {self.n}")


def eigenvalue_groups(spec: WalkSpectrum) -> EigenGroups:
    """Group irreps by equal exact E_nu (rational comparison only)."""
    groups = tuple(
        tuple(spec.table.reps[i] for i in members)
        for _, members in spec.eigenvalue_classes
    )
    return EigenGroups(n=spec.n, f=spec.f, groups=groups)


@dataclass(frozen=True)
class ExactDistribution:
    """Exact rational class probabilities of the limiting distribution."""

    n: int
    probs: dict[Partition, Fraction]
    per_element: dict[Partition, Fraction]

    def total(self) -> Fraction:
        return sum(self.probs.values(), Fraction(0))


def limiting_class_distribution(spec: WalkSpectrum, mu: Partition) -> ExactDistribution:
    """Exact time average of the class distribution started from c_mu."""
    if mu.n != spec.n:
        raise DomainError(f"start class {mu} is not a partition of {spec.n}")
    nfact = factorial(spec.n)
    col_mu = spec.table.column(mu)
    cmu = spec.class_sizes[mu]
    probs = {}
    per_element = {}
    for lam in spec.table.classes:
        col_lam = spec.table.column(lam)
        acc = 0
        for _, members in spec.eigenvalue_classes:
            s = sum(col_lam[i] * col_mu[i] for i in members)
            acc += s * s
        per = Fraction(cmu * acc, nfact * nfact)
        per_element[lam] = per
        probs[lam] = per * spec.class_sizes[lam]
    total = sum(probs.values(), Fraction(0))
    if total != 1:
        raise ConsistencyError(f"limiting distribution sums to {total}, not 1")
    return ExactDistribution(n=spec.n, probs=probs, per_element=per_element)


_TableRow = tuple[str, Fraction]


def table_ncycle_case(n: int, p: int) -> _TableRow:
    """Closed-form per-element n-cycle limiting probability and which of
    the eight parity/range cases produced it.

    Generator is the p-cycle class (p,1,...,1), start is the identity.
    Independent of the grouping engine by construction.
    """
    if not 2 <= p <= n:
        raise DomainError(f"p must lie in 2..{n}, got {p}")
    sq = factorial(n) ** 2

    def hooksq_sum(upper: int) -> int:
        return sum(comb(n - 1, k - 1) ** 2 for k in range(1, upper + 1))

    if p % 2 == 0:
        if p == n:
            return "even_p_full_cycle", Fraction(comb(2 * n - 2, n - 1), sq)
        if p <= (n + 1) // 2:
            return "even_p_low", Fraction(comb(2 * n - 2, n - 1), sq)
        if n % 2 == 0:
            return "even_n_even_p_high", Fraction(2 * hooksq_sum(n - p), sq)
        return (
            "odd_n_even_p_high",
            Fraction(2 * hooksq_sum(n - p) + 4 * comb(n - 2, p - 1) ** 2, sq),
        )
    if n % 2 == 0:
        return "even_n_odd_p", Fraction(0)
    folded = 2 * comb(2 * n - 2, n - 1) - comb(n - 1, (n - 1) // 2) ** 2
    if p == n:
        return "odd_n_odd_p_full_cycle", Fraction(folded, sq)
    if p <= (n + 1) // 2:
        return "odd_n_odd_p_low", Fraction(folded, sq)
    return (
        "odd_n_odd_p_high",
        Fraction(4 * hooksq_sum(n - p) + 4 * comb(n - 2, p - 1) ** 2, sq),
    )


def table_ncycle_probability(n: int, p: int) -> Fraction:
    """Per-element limiting probability of each n-cycle for the p-cycle walk."""
    return table_ncycle_case(n, p)[1]


Support = Literal["symmetric_group", "alternating_group"]


def tv_distance(dist: ExactDistribution, support: Support = "symmetric_group") -> Fraction:
    """Exact total variation distance from uniform on the given support.

    Both distributions are constant on classes, so the half-L1 sum runs
    classwise and stays exact.  Alternating support is only meaningful
    when every odd class carries zero probability.
    """
    n = dist.n
    nfact = factorial(n)
    if support == "symmetric_group":
        uniform = {lam: Fraction(class_size(lam), nfact) for lam in dist.probs}
    elif support == "alternating_group":
        odd_mass = sum(
            (p for lam, p in dist.probs.items() if not is_even_class(lam)), Fraction(0)
        )
        if odd_mass != 0:
            raise SupportMismatchError(
                "alternating-group support requested but odd classes carry mass"
            )
        uniform = {
            lam: Fraction(2 * class_size(lam), nfact) if is_even_class(lam) else Fraction(0)
            for lam in dist.probs
        }
    else:
        raise DomainError(f"unknown support {support!r}")
    return sum((abs(p - uniform[lam]) for lam, p in dist.probs.items()), Fraction(0)) / 2


def time_averaged_distribution(
    spec: WalkSpectrum, mu: Partition, horizon: float, samples: int
) -> ClassDistribution:
    """Numeric quadrature of (1/T) integral_0^T P_t dt by the midpoint rule.

    Converges to ``limiting_class_distribution`` as the horizon and the
    sample count grow; for integer eigenvalues, T = 2*pi is already the
    full period.
    """
    if horizon <= 0:
        raise DomainError("averaging horizon must be positive")
    if samples < 1:
        raise DomainError("need at least one sample")
    acc = {lam: 0.0 for lam in spec.table.classes}
    for j in range(samples):
        t = (j + 0.5) * horizon / samples
        dist = class_distribution(spec, mu, t)
        for lam, p in dist.probs.items():
            acc[lam] += p
    probs = {lam: v / samples for lam, v in acc.items()}
    per_element = {lam: p / spec.class_sizes[lam] for lam, p in probs.items()}
    return ClassDistribution(n=spec.n, t=horizon, probs=probs, per_element=per_element)
