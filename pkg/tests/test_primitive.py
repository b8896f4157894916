"""Rank of apparition, primitivity marks, and the obstruction filter."""

import pytest

from lucasprod import (
    NotPrime,
    ProductEquation,
    enumerate_solutions,
    lucas_range,
    obstruction_filter,
    primitive_divisors,
    rank_of_apparition,
    rank_set,
)
from lucasprod.intmath import primes_below

from _oracles import rank_by_bigint


def test_rank_matches_bigint_scan(fib, pell):
    for params in (fib, pell):
        values = lucas_range(params, 600)
        for p in primes_below(100):
            z = rank_of_apparition(params, p).z
            assert z == rank_by_bigint(p, values)


def test_rank_divisibility_law(fib):
    values = lucas_range(fib, 300)
    for p in primes_below(100):
        z = rank_of_apparition(fib, p).z
        for n in range(1, 301):
            assert (values[n] % p == 0) == (n % z == 0)


def test_rank_at_discriminant_primes(fib, pell):
    assert rank_of_apparition(fib, 5).z == 5
    assert rank_of_apparition(pell, 2).z == 2


def test_rank_rejects_composites(fib):
    for bad in (1, 4, 0, -7, 91):
        with pytest.raises(NotPrime):
            rank_of_apparition(fib, bad)


def test_rank_always_found_within_bound(fib, pell):
    for params in (fib, pell):
        for p in primes_below(500):
            rank = rank_of_apparition(params, p)
            assert 1 <= rank.z <= p + 1


def test_rank_set(fib):
    assert rank_set(fib, 10) == frozenset((3, 5))
    assert rank_set(fib, 1) == frozenset()
    assert rank_set(fib, -1) == frozenset()


def test_primitive_marks_match_first_occurrence(fib, pell, shared_cache):
    for params in (fib, pell):
        for n in range(1, 81):
            report = primitive_divisors(params, n, cache=shared_cache)
            value = abs(
                lucas_range(params, n)[n]
            )
            rebuilt = 1
            for entry in report.entries:
                rebuilt *= entry.prime ** entry.multiplicity
                # first index where the prime divides the sequence
                u_prev, u = 0, 1 % entry.prime
                first = None
                for m in range(1, n + 1):
                    if u == 0:
                        first = m
                        break
                    u_prev, u = u, (params.p * u + params.q * u_prev) % entry.prime
                assert entry.primitive == (first == n)
            assert rebuilt == value


def test_known_primitive_reports(fib, shared_cache):
    report = primitive_divisors(fib, 12, cache=shared_cache)
    assert [(e.prime, e.multiplicity, e.primitive) for e in report.entries] == [
        (2, 4, False),
        (3, 2, False),
    ]
    report = primitive_divisors(fib, 10, cache=shared_cache)
    assert [(e.prime, e.multiplicity, e.primitive) for e in report.entries] == [
        (5, 1, False),
        (11, 1, True),
    ]
    assert primitive_divisors(fib, 1, cache=shared_cache).entries == ()


def test_fibonacci_zsigmondy_exceptions(fib, shared_cache):
    missing = []
    for n in range(1, 121):
        report = primitive_divisors(fib, n, cache=shared_cache)
        if not any(e.primitive for e in report.entries):
            missing.append(n)
    assert missing == [1, 2, 6, 12]


def test_obstruction_filter_known_cases(fib, pell, shared_cache):
    verdict = obstruction_filter(fib, 5, 10, cache=shared_cache)
    assert not verdict.admissible and verdict.prime == 11
    for n in (2, 5, 12):
        assert obstruction_filter(fib, 5, n, cache=shared_cache).admissible
    # rank membership admits outright: z(5) = 5
    assert "rank" in obstruction_filter(fib, 5, 5, cache=shared_cache).reason
    verdict = obstruction_filter(pell, 2, 3, cache=shared_cache)
    assert not verdict.admissible and verdict.prime == 5
    # U_7 = 169 = 13^2: the primitive prime has multiplicity two
    assert obstruction_filter(pell, 2, 7, cache=shared_cache).admissible


def test_obstruction_filter_validation(fib):
    with pytest.raises(ValueError):
        obstruction_filter(fib, 5, 1)
    with pytest.raises(ValueError):
        obstruction_filter(fib, 5, 10, k=1)


def test_solver_indices_pass_filter(fib, pell, shared_cache):
    cases = [(fib, 5), (fib, 1), (pell, 8)]
    for params, a in cases:
        eq = ProductEquation(params=params, a=a, k=2, max_index=40, max_factors=3)
        for cert in enumerate_solutions(eq, cache=shared_cache):
            for n in cert.indices:
                assert obstruction_filter(params, a, n, cache=shared_cache).admissible
