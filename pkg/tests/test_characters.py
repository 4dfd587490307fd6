import json
from math import comb, factorial

import pytest

from symwalk.characters import (
    binom,
    character,
    character_hook_pcycle,
    character_table,
    character_transposition,
    check_orthogonality,
    dimension,
)
from symwalk.errors import DomainError, ResourceLimitError, SizeMismatchError
from symwalk.partitions import (
    Partition,
    class_size,
    enumerate_partitions,
    hook,
    identity_partition,
)


def count_fixed_points(lam):
    return sum(1 for p in lam.parts if p == 1)


def test_binom_out_of_range_is_zero():
    assert binom(1, -2) == 0
    assert binom(3, 5) == 0
    assert binom(5, 2) == 10


def test_trivial_representation_is_constant_one():
    for n in range(1, 9):
        nu = Partition((n,))
        assert all(character(nu, lam) == 1 for lam in enumerate_partitions(n))


def test_sign_representation_is_class_parity():
    for n in range(2, 9):
        nu = identity_partition(n)
        for lam in enumerate_partitions(n):
            want = (-1) ** (n - len(lam.parts))
            assert character(nu, lam) == want


def test_standard_representation_vs_fixed_point_oracle():
    # chi_(n-1,1)(lam) = #fixed points - 1, from the permutation module
    for n in range(2, 9):
        nu = hook(n, n - 1)
        for lam in enumerate_partitions(n):
            assert character(nu, lam) == count_fixed_points(lam) - 1


def test_s3_values():
    assert character(Partition((2, 1)), Partition((3,))) == -1
    table = character_table(3)
    assert table.classes == (Partition((3,)), Partition((2, 1)), Partition((1, 1, 1)))
    # canonical (descending) column order: (3), (2,1), (1,1,1)
    assert table.entries == ((1, 1, 1), (-1, 0, 2), (1, -1, 1))


def test_n1_table():
    table = character_table(1)
    assert table.entries == ((1,),)


def test_size_mismatch():
    with pytest.raises(SizeMismatchError):
        character(Partition((2, 1)), Partition((2, 2)))


def test_table_cap():
    with pytest.raises(ResourceLimitError):
        character_table(15)


@pytest.mark.parametrize("n", range(1, 11))
def test_orthogonality(n):
    check_orthogonality(character_table(n))


@pytest.mark.parametrize("n", range(1, 11))
def test_column_orthogonality_fact(n):
    # |C_lam| * sum_nu chi_nu(lam)^2 = n!
    table = character_table(n)
    for lam in table.classes:
        col = table.column(lam)
        assert class_size(lam) * sum(v * v for v in col) == factorial(n)


def test_dimension_examples():
    assert dimension(Partition((4,))) == 1
    assert dimension(Partition((2, 1))) == 2
    for n in range(2, 9):
        for k in range(1, n + 1):
            assert dimension(hook(n, k)) == comb(n - 1, k - 1)


@pytest.mark.parametrize("n", range(1, 13))
def test_dimension_hook_length_vs_recursion(n):
    ident = identity_partition(n)
    for nu in enumerate_partitions(n):
        assert dimension(nu) == character(nu, ident)


@pytest.mark.parametrize("n", range(1, 11))
def test_dimension_squares_sum_to_group_order(n):
    assert sum(dimension(nu) ** 2 for nu in enumerate_partitions(n)) == factorial(n)


def test_transposition_closed_form_examples():
    assert character_transposition(Partition((3,))) == 1
    assert character_transposition(Partition((2, 1))) == 0
    assert character_transposition(Partition((1, 1, 1, 1))) == -1
    with pytest.raises(DomainError):
        character_transposition(Partition((1,)))


@pytest.mark.parametrize("n", range(2, 11))
def test_transposition_closed_form_vs_recursion(n):
    tau = hook(n, 2)
    for nu in enumerate_partitions(n):
        assert character_transposition(nu) == character(nu, tau)


@pytest.mark.parametrize("n", range(2, 11))
def test_hook_characters_at_ncycle(n):
    ncycle = Partition((n,))
    hooks = {hook(n, k): k for k in range(1, n + 1)}
    for nu in enumerate_partitions(n):
        got = character(nu, ncycle)
        if nu in hooks:
            assert got == (-1) ** (n - hooks[nu])
        else:
            assert got == 0


def test_hook_pcycle_example():
    # n=5, p=3, k=2: C(1,-2) + C(1,1) = 1
    assert character_hook_pcycle(2, 3, 5) == 1
    with pytest.raises(DomainError):
        character_hook_pcycle(2, 5, 5)
    with pytest.raises(DomainError):
        character_hook_pcycle(0, 2, 5)


@pytest.mark.parametrize("n", range(2, 11))
def test_hook_pcycle_vs_recursion(n):
    for p in range(1, n):
        pclass = hook(n, p)
        for k in range(1, n + 1):
            assert character_hook_pcycle(k, p, n) == character(hook(n, k), pclass)


# starts at n=3: for n=2 the transposition class is the n-cycle class,
# which the p-cycle formula excludes
@pytest.mark.parametrize("n", range(3, 11))
def test_hook_pcycle_at_p2_matches_transposition_form(n):
    for k in range(1, n + 1):
        assert character_hook_pcycle(k, 2, n) == character_transposition(hook(n, k))


@pytest.mark.parametrize("n", range(1, 7))
def test_regular_representation_trace(n):
    # sum_nu dim(nu) * chi_nu(lam) = n! [lam = identity]
    ident = identity_partition(n)
    for lam in enumerate_partitions(n):
        total = sum(dimension(nu) * character(nu, lam) for nu in enumerate_partitions(n))
        assert total == (factorial(n) if lam == ident else 0)


def test_csv_serialization():
    table = character_table(3)
    lines = table.to_csv().splitlines()
    assert lines[0] == ',3,"2,1","1,1,1"'
    assert lines[1] == "3,1,1,1"
    assert lines[2] == '"2,1",-1,0,2'
    assert lines[3] == '"1,1,1",1,-1,1'


def test_json_serialization_uses_strings():
    payload = character_table(4).to_json_dict()
    assert payload["n"] == 4
    assert payload["classes"][0] == [4]
    assert all(isinstance(v, str) for row in payload["entries"] for v in row)
    json.dumps(payload)  # must be serializable as-is
