"""Spectral engine for continuous-time walks on Cayley graphs of S_n.

For a class function f, the operator H[g,h] = f(g^{-1}h) acts as the
scalar E_nu = (1/dim rho_nu) sum_gamma |C_gamma| f(gamma) chi_nu(gamma)
on the nu-isotypic block, so class-to-class amplitudes of U(t) = e^{itH}
reduce to a sum of p(n) phase terms:

    <c_lam| U(t) |c_mu> = sqrt(|C_lam||C_mu|)/n!
                          * sum_nu e^{i t E_nu} chi_nu(lam) chi_nu(mu).

The Cayley graph's edge rule gh^{-1} in C_gamma matches H's g^{-1}h
convention because every S_n element is conjugate to its inverse, so
f(g^{-1}h) = f(gh^{-1}) for class functions (the oracle tests this
identity on the literal adjacency matrix).

Eigenvalues are exact rationals (exact integers for single-class
generators, the mechanism behind the walk's 2*pi periodicity); the only
floating-point step is the final e^{itE}.  Phase terms are accumulated
per distinct eigenvalue with exact integer coefficients, so destructive
interference that is exact in the algebra (e.g. odd classes under an
even generator) is exact in the output as well.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import factorial

from .characters import CharacterTable, character_table, dimension
from .errors import ConsistencyError, DegenerateGeneratorError, DomainError
from .partitions import Partition, class_size, enumerate_partitions, identity_partition


class ClassFunction:
    """Rational weights on the conjugacy classes of S_n, finitely supported.

    The common case is the indicator of a single generator class; general
    weighted mixtures are accepted everywhere the math allows them.
    """

    def __init__(self, n: int, weights: dict[Partition, Fraction]):
        self.n = n
        clean: dict[Partition, Fraction] = {}
        for lam, w in weights.items():
            if lam.n != n:
                raise DomainError(f"{lam} is not a partition of {n}")
            w = Fraction(w)
            if w != 0:
                clean[lam] = w
        # Canonical key order keeps downstream serialization deterministic.
        order = {p: i for i, p in enumerate(enumerate_partitions(n))}
        self.weights = dict(sorted(clean.items(), key=lambda kv: order[kv[0]]))

    @classmethod
    def indicator(cls, gamma: Partition) -> "ClassFunction":
        """Indicator of one generator class; the identity class is refused."""
        if gamma == identity_partition(gamma.n):
            raise DegenerateGeneratorError("the identity class does not generate a walk")
        return cls(gamma.n, {gamma: Fraction(1)})

    @classmethod
    def transpositions(cls, n: int) -> "ClassFunction":
        if n < 2:
            raise DomainError("transpositions need n >= 2")
        return cls.indicator(Partition((2,) + (1,) * (n - 2)))

    def __call__(self, lam: Partition) -> Fraction:
        return self.weights.get(lam, Fraction(0))

    def is_single_class_indicator(self) -> bool:
        return len(self.weights) == 1 and next(iter(self.weights.values())) == 1

    def is_zero_one(self) -> bool:
        return all(w == 1 for w in self.weights.values())

    def degree(self) -> Fraction:
        """sum_gamma |C_gamma| f(gamma); the graph degree for indicators."""
        return sum((class_size(g) * w for g, w in self.weights.items()), Fraction(0))

    def __repr__(self) -> str:
        body = ", ".join(f"{g}: {w}" for g, w in self.weights.items())
        return f"ClassFunction(n={self.n}, {{{body}}})"


@dataclass(frozen=True)
class EigenRecord:
    rep: Partition
    eigenvalue: Fraction
    dim: int


class WalkSpectrum:
    """The diagonalized walk operator: one exact eigenvalue per irrep."""

    def __init__(self, n: int, f: ClassFunction, table: CharacterTable,
                 records: list[EigenRecord]):
        self.n = n
        self.f = f
        self.table = table
        self.records = records

    @cached_property
    def class_sizes(self) -> dict[Partition, int]:
        return {lam: class_size(lam) for lam in self.table.classes}

    @cached_property
    def eigenvalue_classes(self) -> list[tuple[Fraction, list[int]]]:
        """Indices of reps sharing each exact eigenvalue, in canonical order."""
        groups: dict[Fraction, list[int]] = {}
        for i, rec in enumerate(self.records):
            groups.setdefault(rec.eigenvalue, []).append(i)
        return sorted(groups.items(), key=lambda kv: kv[1][0])

    def eigenvalue(self, nu: Partition) -> Fraction:
        return self.records[self.table.index(nu)].eigenvalue


def spectrum(n: int, f: ClassFunction, cap: int | None = None) -> WalkSpectrum:
    """Diagonalize the walk operator for generator weighting f.

    For a single-class indicator every eigenvalue must come out an exact
    integer; a non-integer here means the character engine is broken, so
    it raises rather than rounding.
    """
    if f.n != n:
        raise DomainError(f"class function is on n={f.n}, not {n}")
    table = character_table(n, cap=cap)
    single = f.is_single_class_indicator()
    records = []
    for nu in table.reps:
        dim = dimension(nu)
        total = Fraction(0)
        for gamma, w in f.weights.items():
            total += class_size(gamma) * w * table.value(nu, gamma)
        ev = total / dim
        if single and ev.denominator != 1:
            raise ConsistencyError(
                f"eigenvalue for rep {nu} is {ev}, expected an integer"
            )
        records.append(EigenRecord(rep=nu, eigenvalue=ev, dim=dim))
    return WalkSpectrum(n, f, table, records)


@dataclass(frozen=True)
class ClassDistribution:
    """Probability per conjugacy class after walking for time t."""

    n: int
    t: float
    probs: dict[Partition, float]
    per_element: dict[Partition, float]

    def total(self) -> float:
        return sum(self.probs.values())


def _phase_sum(spec: WalkSpectrum, lam: Partition, mu: Partition, phases) -> complex:
    """sum_nu phase(E_nu) chi_nu(lam) chi_nu(mu), grouped by exact eigenvalue.

    Grouping first and multiplying the exact integer coefficient after
    makes algebraically exact cancellations exact in floating point.
    """
    col_l = spec.table.column(lam)
    col_m = spec.table.column(mu)
    total = 0j
    for ev, members in spec.eigenvalue_classes:
        coeff = sum(col_l[i] * col_m[i] for i in members)
        if coeff:
            total += phases(ev) * float(coeff)
    return total


def class_amplitude(spec: WalkSpectrum, lam: Partition, mu: Partition, t: float) -> complex:
    """<c_lam| e^{itH} |c_mu> for class-uniform unit states c."""
    if lam.n != spec.n or mu.n != spec.n:
        raise DomainError("start and target classes must partition the walk's n")
    nfact = factorial(spec.n)
    pref = math.sqrt(Fraction(spec.class_sizes[lam] * spec.class_sizes[mu], nfact * nfact))
    return pref * _phase_sum(spec, lam, mu, lambda ev: cmath.exp(1j * t * float(ev)))


def class_distribution(spec: WalkSpectrum, mu: Partition, t: float) -> ClassDistribution:
    """Measurement distribution over classes at time t, started from c_mu."""
    probs = {}
    per_element = {}
    for lam in spec.table.classes:
        p = abs(class_amplitude(spec, lam, mu, t)) ** 2
        probs[lam] = p
        per_element[lam] = p / spec.class_sizes[lam]
    return ClassDistribution(n=spec.n, t=t, probs=probs, per_element=per_element)


def classical_class_distribution(spec: WalkSpectrum, mu: Partition, t: float) -> ClassDistribution:
    """Continuous-time random walk M(t) = e^{-tL}, aggregated per class.

    Started from the uniform distribution on C_mu; L shares the walk's
    eigenvectors with eigenvalue d - E_nu on the nu-block, d the degree.
    Only 0/1 generator weightings give a genuine Laplacian.
    """
    for w in spec.f.weights.values():
        if w < 0:
            raise DomainError("negative generator weights do not give a stochastic process")
    if not spec.f.is_zero_one():
        raise DomainError("classical walk requires a 0/1 generator indicator")
    d = spec.f.degree()
    nfact = factorial(spec.n)
    probs = {}
    per_element = {}
    for lam in spec.table.classes:
        s = _phase_sum(spec, lam, mu, lambda ev: math.exp(-t * float(d - ev)))
        p = spec.class_sizes[lam] / nfact * s.real
        p = max(p, 0.0)
        probs[lam] = p
        per_element[lam] = p / spec.class_sizes[lam]
    return ClassDistribution(n=spec.n, t=t, probs=probs, per_element=per_element)


def ncycle_amplitude_closed_form(n: int, t: float) -> complex:
    """(2i sin(tn/2))^(n-1) / sqrt(n*n!): identity-to-n-cycle amplitude
    for the transposition walk."""
    if n < 2:
        raise DomainError("closed form needs n >= 2")
    return (2j * math.sin(t * n / 2)) ** (n - 1) / math.sqrt(n * factorial(n))


def max_ncycle_probability(n: int) -> Fraction:
    """max_t of the identity-to-class-(n) probability: 2^(2n-2)/(n*n!),
    attained at t = (2k+1)*pi/n."""
    if n < 2:
        raise DomainError("needs n >= 2")
    return Fraction(2 ** (2 * n - 2), n * factorial(n))
