"""Exact arithmetic in the prime field GF(q) and discrete-log (index) tables.

Conventions used throughout the package:
  * q is an odd prime, q >= 3, q < 2**20.  Prime powers are not supported;
    every table is a dense Python list indexed by residue.
  * The canonical primitive root of q is the *smallest* integer g >= 2 of
    multiplicative order q-1.  Fixing g makes every downstream object
    (cyclotomic classes, sign calibrations, search reports) deterministic.
  * Ind(a) is the index (discrete logarithm) of a to base g:
    g**Ind(a) = a (mod q), with Ind(g) = 1 and Ind(1) = 0.
"""

from __future__ import annotations

from dataclasses import dataclass

Q_LIMIT = 1 << 20

# Witness set is deterministic for all n < 3.3 * 10**24, far beyond Q_LIMIT.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic primality test (Miller-Rabin with fixed witnesses)."""
    if n < 2:
        return False
    for p in _MR_WITNESSES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def pow_mod(a: int, e: int, q: int) -> int:
    """a**e mod q for 0 <= a < q, e >= 0."""
    if not 0 <= a < q:
        raise ValueError(f"residue {a} out of range for modulus {q}")
    if e < 0:
        raise ValueError("exponent must be nonnegative")
    return pow(a, e, q)


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def check_prime_modulus(q: int) -> None:
    """Reject moduli outside the supported domain (odd prime, q < 2**20)."""
    if q < 3 or q >= Q_LIMIT:
        raise ValueError(f"q={q} outside supported range [3, 2**20)")
    if not is_prime(q):
        raise ValueError(f"q={q} is not prime")


def multiplicative_order(a: int, q: int) -> int:
    """Order of a in GF(q)*; q must be prime."""
    if a % q == 0:
        raise ValueError("0 has no multiplicative order")
    order = q - 1
    for p in _prime_factors(q - 1):
        while order % p == 0 and pow(a, order // p, q) == 1:
            order //= p
    return order


def find_primitive_root(q: int) -> int:
    """Smallest g >= 2 generating GF(q)*.

    g is primitive iff g**((q-1)/p) != 1 for every prime p | q-1; the first
    candidate passing that test is returned.
    """
    check_prime_modulus(q)
    parts = _prime_factors(q - 1)
    for g in range(2, q):
        if all(pow(g, (q - 1) // p, q) != 1 for p in parts):
            return g
    raise ArithmeticError(f"no primitive root found for q={q}")  # unreachable for prime q


@dataclass(frozen=True)
class IndexTable:
    """Dense discrete-log table: ind[a] = Ind(a) for a in [1, q-1]; ind[0] unused."""

    q: int
    g: int
    ind: tuple[int, ...]

    def __call__(self, a: int) -> int:
        a %= self.q
        if a == 0:
            raise ValueError("Ind(0) is undefined")
        return self.ind[a]


def build_index_table(q: int, g: int) -> IndexTable:
    """Index table for primitive root g of q; rejects non-generators."""
    check_prime_modulus(q)
    if not 2 <= g < q or multiplicative_order(g, q) != q - 1:
        raise ValueError(f"g={g} is not a primitive root of q={q}")
    ind = [0] * q
    x = 1
    for k in range(q - 1):
        ind[x] = k
        x = x * g % q
    return IndexTable(q=q, g=g, ind=tuple(ind))
