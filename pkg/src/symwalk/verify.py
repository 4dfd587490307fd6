"""Cross-engine verification: spectral formulas against the dense oracle
and the closed-form character formulas against the recursion.

Each check returns a CheckResult; the CLI ``verify`` subcommand runs the
whole battery for one n and reports per-check pass/fail with the worst
absolute error where a tolerance applies.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import oracle as oracle_mod
from .characters import (
    character,
    character_hook_pcycle,
    character_table,
    character_transposition,
    check_orthogonality,
    dimension,
)
from .errors import ConsistencyError
from .limiting import limiting_class_distribution, table_ncycle_probability
from .partitions import Partition, enumerate_partitions, hook, identity_partition
from .walk_spectrum import (
    ClassFunction,
    class_amplitude,
    class_distribution,
    classical_class_distribution,
    ncycle_amplitude_closed_form,
    spectrum,
)


@dataclass
class CheckResult:
    name: str
    passed: bool
    max_abs_error: float | None = None
    detail: list | None = None
    message: str | None = None


def generator_classes(n: int) -> list[Partition]:
    """Every nonidentity class of S_n, canonical order."""
    ident = identity_partition(n)
    return [lam for lam in enumerate_partitions(n) if lam != ident]


def check_quantum_vs_oracle(
    n: int, t_samples: int = 16, tol: float = 1e-9,
    oracle_cap: int | None = None, detailed: bool = False,
) -> CheckResult:
    """Spectral class probabilities against dense e^{itA}, identity start."""
    ident = identity_partition(n)
    times = [2 * math.pi * j / t_samples for j in range(t_samples)]
    worst = 0.0
    rows = []
    for gamma in generator_classes(n):
        walk = oracle_mod.build_cayley(n, gamma, cap=oracle_cap)
        spec = spectrum(n, ClassFunction.indicator(gamma))
        for t in times:
            dense = oracle_mod.class_aggregate(walk, oracle_mod.evolve_quantum(walk, ident, t))
            dist = class_distribution(spec, ident, t)
            for lam, p in dist.probs.items():
                err = abs(p - dense.sums.get(lam, 0.0))
                worst = max(worst, err)
                if detailed:
                    rows.append(
                        {"generator": str(gamma), "t": t, "class": str(lam),
                         "max_abs_error": err}
                    )
    return CheckResult(
        name="quantum_vs_oracle", passed=worst <= tol, max_abs_error=worst,
        detail=rows if detailed else None,
    )


def check_classical_vs_oracle(
    n: int, times=(0.1, 0.5, 2.0), tol: float = 1e-9, oracle_cap: int | None = None,
) -> CheckResult:
    """Spectral classical engine against dense e^{-tL}, identity start."""
    ident = identity_partition(n)
    worst = 0.0
    for gamma in generator_classes(n):
        walk = oracle_mod.build_cayley(n, gamma, cap=oracle_cap)
        spec = spectrum(n, ClassFunction.indicator(gamma))
        for t in times:
            dense = oracle_mod.class_sums(walk, oracle_mod.evolve_classical(walk, ident, t))
            dist = classical_class_distribution(spec, ident, t)
            for lam, p in dist.probs.items():
                worst = max(worst, abs(p - dense.get(lam, 0.0)))
    return CheckResult(name="classical_vs_oracle", passed=worst <= tol, max_abs_error=worst)


def check_transposition_closed_form(n: int) -> CheckResult:
    """Ingram's formula equals the recursion on every irrep (exact)."""
    if n < 2:
        return CheckResult(name="transposition_closed_form", passed=True)
    tau = hook(n, 2)
    ok = all(
        character_transposition(nu) == character(nu, tau)
        for nu in enumerate_partitions(n)
    )
    return CheckResult(name="transposition_closed_form", passed=ok)


def check_hook_ncycle_characters(n: int) -> CheckResult:
    """chi_nu((n)) is (-1)^(n-k) on hooks and 0 elsewhere (exact)."""
    ncycle = Partition((n,))
    ok = True
    hooks = {hook(n, k): k for k in range(1, n + 1)}
    for nu in enumerate_partitions(n):
        got = character(nu, ncycle)
        want = (-1) ** (n - hooks[nu]) if nu in hooks else 0
        ok = ok and got == want
    return CheckResult(name="hook_ncycle_characters", passed=ok)


def check_hook_pcycle_characters(n: int) -> CheckResult:
    """Closed form for hooks at p-cycles equals the recursion (exact)."""
    ok = True
    for p in range(1, n):
        pclass = hook(n, p)
        for k in range(1, n + 1):
            ok = ok and character_hook_pcycle(k, p, n) == character(hook(n, k), pclass)
    return CheckResult(name="hook_pcycle_characters", passed=ok)


def check_orthogonality_relations(n: int) -> CheckResult:
    try:
        check_orthogonality(character_table(n))
    except ConsistencyError as exc:
        return CheckResult(name="orthogonality", passed=False, message=str(exc))
    return CheckResult(name="orthogonality", passed=True)


def check_eigenvalue_integrality(n: int) -> CheckResult:
    """E_nu is an exact integer for every single-class generator."""
    try:
        for gamma in generator_classes(n):
            spectrum(n, ClassFunction.indicator(gamma))
    except ConsistencyError as exc:
        return CheckResult(name="eigenvalue_integrality", passed=False, message=str(exc))
    return CheckResult(name="eigenvalue_integrality", passed=True)


def check_sine_closed_form(n: int, t_samples: int = 64, tol: float = 1e-10) -> CheckResult:
    """(2i sin(tn/2))^(n-1)/sqrt(n*n!) against the full spectral sum."""
    if n < 2:
        return CheckResult(name="sine_closed_form", passed=True)
    spec = spectrum(n, ClassFunction.transpositions(n))
    ident = identity_partition(n)
    ncycle = Partition((n,))
    worst = 0.0
    for j in range(t_samples):
        t = 2 * math.pi * j / t_samples
        worst = max(
            worst,
            abs(class_amplitude(spec, ncycle, ident, t) - ncycle_amplitude_closed_form(n, t)),
        )
    return CheckResult(name="sine_closed_form", passed=worst <= tol, max_abs_error=worst)


def check_limiting_table(n: int) -> CheckResult:
    """Closed-form table rows equal the grouping engine, as reduced rationals."""
    ident = identity_partition(n)
    ncycle = Partition((n,))
    for p in range(2, n + 1):
        spec = spectrum(n, ClassFunction.indicator(hook(n, p)))
        exact = limiting_class_distribution(spec, ident).per_element[ncycle]
        if table_ncycle_probability(n, p) != exact:
            return CheckResult(
                name="limiting_table", passed=False,
                message=f"mismatch at n={n}, p={p}: table {table_ncycle_probability(n, p)}, engine {exact}",
            )
    return CheckResult(name="limiting_table", passed=True)


def check_limiting_vs_oracle(n: int, tol: float = 1e-9, oracle_cap: int | None = None) -> CheckResult:
    """Exact limiting distribution against the dense Cesaro average."""
    ident = identity_partition(n)
    worst = 0.0
    for gamma in generator_classes(n):
        walk = oracle_mod.build_cayley(n, gamma, cap=oracle_cap)
        dense = oracle_mod.limiting_distribution(walk, ident)
        spec = spectrum(n, ClassFunction.indicator(gamma))
        exact = limiting_class_distribution(spec, ident)
        for lam, p in exact.probs.items():
            worst = max(worst, abs(float(p) - dense.get(lam, 0.0)))
    return CheckResult(name="limiting_vs_oracle", passed=worst <= tol, max_abs_error=worst)


def check_dimension_agreement(n: int) -> CheckResult:
    """Hook-length dimensions equal recursion values at the identity."""
    ident = identity_partition(n)
    ok = all(dimension(nu) == character(nu, ident) for nu in enumerate_partitions(n))
    return CheckResult(name="dimension_agreement", passed=ok)


def run_suite(n: int, t_samples: int = 16, oracle_cap: int | None = None,
              detailed: bool = False) -> list[CheckResult]:
    """The full battery for one n, oracle checks included."""
    return [
        check_quantum_vs_oracle(n, t_samples=t_samples, oracle_cap=oracle_cap, detailed=detailed),
        check_classical_vs_oracle(n, oracle_cap=oracle_cap),
        check_transposition_closed_form(n),
        check_hook_ncycle_characters(n),
        check_hook_pcycle_characters(n),
        check_orthogonality_relations(n),
        check_eigenvalue_integrality(n),
        check_dimension_agreement(n),
        check_sine_closed_form(n),
        check_limiting_table(n),
        check_limiting_vs_oracle(n, oracle_cap=oracle_cap),
    ]
