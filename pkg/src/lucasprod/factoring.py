"""Exact factorization of big integers, with budgeted rho and a line cache.

Pipeline: trial division up to 10^5, perfect-power peeling, Miller-Rabin
(deterministic below ~3.3e24, 40 fixed rounds above), then Brent's variant of
Pollard rho with deterministic restarts. The budget is counted in rho
iterations per composite; when it runs out the result is Partial and callers
that need completeness get a typed IncompleteFactorization.
"""

from __future__ import annotations

import math
import os
import threading
from dataclasses import dataclass, field

from .errors import IncompleteFactorization, NotPrime, ZeroInput
from .intmath import integer_kth_root, is_probable_prime, primes_below

TRIAL_DIVISION_LIMIT = 100_000
DEFAULT_RHO_BUDGET = 10 ** 8
CACHE_ENV_VAR = "LUCAS_FACTOR_CACHE"

_TRIAL_PRIMES = primes_below(TRIAL_DIVISION_LIMIT)
# Squares of numbers with no prime factor below the trial limit are at least this.
_TRIAL_LIMIT_SQUARED = TRIAL_DIVISION_LIMIT * TRIAL_DIVISION_LIMIT

# Polynomial increments for rho restarts; fixed so runs are reproducible.
_RHO_INCREMENTS = (1, 3, 5, 7, 11, 13, 17, 19, 23, 29)
_RHO_BATCH = 128


@dataclass
class Factorization:
    """Signed prime-exponent map; ``cofactor`` > 1 marks a partial result."""

    sign: int
    factors: dict[int, int]
    cofactor: int = 1

    @property
    def complete(self) -> bool:
        return self.cofactor == 1

    def value(self) -> int:
        """Reconstruct the input exactly, complete or not."""
        n = self.cofactor
        for p, e in self.factors.items():
            n *= p ** e
        return self.sign * n

    def radical(self) -> int:
        if not self.complete:
            raise IncompleteFactorization(self.cofactor)
        result = 1
        for p in self.factors:
            result *= p
        return result

    def support(self) -> tuple[int, ...]:
        if not self.complete:
            raise IncompleteFactorization(self.cofactor)
        return tuple(sorted(self.factors))

    def copy(self) -> "Factorization":
        return Factorization(self.sign, dict(self.factors), self.cofactor)


@dataclass(frozen=True)
class PowerFreeDecomposition:
    """N = e * s^k with e k-th-power-free and carrying the sign of N, s >= 1."""

    k: int
    e: int
    s: int


class FactorCache:
    """Persistent store of complete factorizations.

    File format, one record per line: ``N <sign> <p1>^<e1> <p2>^<e2> ...``.
    The file is loaded fully at construction and appended on new complete
    results; appends are serialized by a lock. ``path=None`` keeps the cache
    purely in memory.
    """

    def __init__(self, path: str | None = None):
        self.path = path
        self._entries: dict[int, Factorization] = {}
        self._lock = threading.Lock()
        if path is not None and os.path.exists(path):
            self._load(path)

    def __len__(self) -> int:
        return len(self._entries)

    def _load(self, path: str) -> None:
        with open(path, "r", encoding="ascii") as handle:
            for lineno, line in enumerate(handle, start=1):
                line = line.strip()
                if not line:
                    continue
                try:
                    fields = line.split()
                    n = int(fields[0])
                    sign = int(fields[1])
                    factors: dict[int, int] = {}
                    for item in fields[2:]:
                        p_text, e_text = item.split("^")
                        factors[int(p_text)] = int(e_text)
                except (ValueError, IndexError) as exc:
                    raise ValueError(f"{path}:{lineno}: malformed cache line {line!r}") from exc
                fac = Factorization(sign, factors)
                if fac.value() != n:
                    raise ValueError(f"{path}:{lineno}: record does not reconstruct {n}")
                self._entries[n] = fac

    def get(self, n: int) -> Factorization | None:
        hit = self._entries.get(n)
        return hit.copy() if hit is not None else None

    def add(self, n: int, fac: Factorization) -> None:
        if not fac.complete:
            return
        with self._lock:
            if n in self._entries:
                return
            self._entries[n] = fac.copy()
            if self.path is not None:
                items = " ".join(f"{p}^{e}" for p, e in sorted(fac.factors.items()))
                line = f"{n} {fac.sign} {items}".rstrip()
                with open(self.path, "a", encoding="ascii") as handle:
                    handle.write(line + "\n")


def cache_from_env(flag_path: str | None = None) -> FactorCache | None:
    """Cache selected by explicit path first, then LUCAS_FACTOR_CACHE, else none."""
    path = flag_path or os.environ.get(CACHE_ENV_VAR)
    return FactorCache(path) if path else None


def _brent_rho(n: int, budget: int) -> tuple[int | None, int]:
    """A nontrivial factor of odd composite n, or None when the budget is spent.

    Brent cycle detection with batched gcds; the (start, increment) sequence is
    fixed, so results are reproducible. Returns (factor, iterations_used).
    """
    used = 0
    for c in _RHO_INCREMENTS:
        y, r, q = 2, 1, 1
        g = 1
        x = ys = y
        while g == 1 and used < budget:
            x = y
            advance = min(r, budget - used)
            for _ in range(advance):
                y = (y * y + c) % n
            used += advance
            k = 0
            while k < r and g == 1 and used < budget:
                ys = y
                batch = min(_RHO_BATCH, r - k, budget - used)
                for _ in range(batch):
                    y = (y * y + c) % n
                    q = q * (x - y) % n
                used += batch
                g = math.gcd(q, n)
                k += batch
            r *= 2
        if g == 1:
            return None, used  # budget exhausted mid-cycle
        if g == n:
            # The batched gcd collapsed; replay one step at a time.
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g, used
        # g == n even stepwise: retry with the next increment.
    return None, used


def factorize(n: int, budget: int = DEFAULT_RHO_BUDGET, cache: FactorCache | None = None) -> Factorization:
    """Factor a nonzero integer; Partial (composite cofactor) when budget runs out."""
    if n == 0:
        raise ZeroInput("factorization input")
    if cache is not None:
        hit = cache.get(n)
        if hit is not None:
            return hit
    sign = 1 if n > 0 else -1
    m = abs(n)
    factors: dict[int, int] = {}
    for p in _TRIAL_PRIMES:
        if p * p > m:
            break
        while m % p == 0:
            factors[p] = factors.get(p, 0) + 1
            m //= p

    cofactor = 1
    pending = [m] if m > 1 else []
    while pending:
        c = pending.pop()
        if c < _TRIAL_LIMIT_SQUARED or is_probable_prime(c):
            # below the square of the trial limit, a survivor is prime
            factors[c] = factors.get(c, 0) + 1
            continue
        # Perfect-power peeling: rho converges slowly on high prime powers.
        peeled = False
        for j in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31):
            if (1 << j) > c:
                break
            root = integer_kth_root(c, j)
            if root ** j == c:
                pending.extend([root] * j)
                peeled = True
                break
        if peeled:
            continue
        divisor, _ = _brent_rho(c, budget)
        if divisor is None:
            cofactor *= c
            continue
        pending.append(divisor)
        pending.append(c // divisor)

    result = Factorization(sign, dict(sorted(factors.items())), cofactor)
    if cache is not None and result.complete:
        cache.add(n, result)
    return result


def valuation(n: int, p: int) -> int:
    """Largest t with p^t dividing n."""
    if n == 0:
        raise ZeroInput("valuation input")
    if p < 2 or not is_probable_prime(p):
        raise NotPrime(p)
    t = 0
    n = abs(n)
    while n % p == 0:
        n //= p
        t += 1
    return t


def radical(n: int, budget: int = DEFAULT_RHO_BUDGET, cache: FactorCache | None = None) -> int:
    """Product of the distinct primes dividing |n|; rad(+-1) = 1."""
    fac = factorize(n, budget=budget, cache=cache)
    return fac.radical()


def power_free_part(
    n: int,
    k: int,
    budget: int = DEFAULT_RHO_BUDGET,
    cache: FactorCache | None = None,
) -> PowerFreeDecomposition:
    """Unique decomposition n = e * s^k with e k-th-power-free, sign on e."""
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    fac = factorize(n, budget=budget, cache=cache)
    if not fac.complete:
        raise IncompleteFactorization(fac.cofactor)
    e = fac.sign
    s = 1
    for p, exp in fac.factors.items():
        e *= p ** (exp % k)
        s *= p ** (exp // k)
    return PowerFreeDecomposition(k=k, e=e, s=s)
