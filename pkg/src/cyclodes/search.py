"""Exhaustive search over index-set pairs for product-set constructions at
cyclotomic orders 4, 6, 8, 10, 12, and cross-prime family aggregation.

Search space: ordered pairs (I, J) of class-index subsets with
|I| = |J| = d/2, optionally adjoining (0,0), over primes q = d*f + 1 with f
odd.  That is the only size split that can reach the target parameter shapes
(k = q - 1 or q).

Method: a construction's difference function is constant on 25 strata (24 for
general d: one per (slice, class) pair, plus the (1,0) shift), and each
stratum value is an exact sum of cyclotomic numbers:

    d_{I,J}(w) = sum over i in I, j in J of (i+h, j+h)_d,  w**-1 in D_h,

because multiplying by w**-1 is a bijection sending D_i + w to D_{i+h} + 1.
The whole C(d, d/2)**2 sweep therefore reduces to integer matrix products on
the exact cyclotomic-number table, evaluated with numpy.  The slow route
(adsets.distance_spectrum per pair) computes the same thing by direct pair
enumeration; the two are cross-checked in the test suite and the theorem
recipes are always re-verified through the slow route.

Determinism: hits are emitted sorted by (q, I, J); reports are
byte-identical for any worker count.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from math import comb

import numpy as np

from . import cyclotomy, dhm
from .ff import is_prime


@dataclass(frozen=True)
class SearchHit:
    q: int
    d: int
    I: tuple[int, ...]
    J: tuple[int, ...]
    include_zero: bool
    n: int
    k: int
    lam: int
    t: int

    def to_json(self) -> str:
        return json.dumps({
            "q": self.q, "d": self.d, "I": list(self.I), "J": list(self.J),
            "include_zero": self.include_zero,
            "n": self.n, "k": self.k, "lambda": self.lam, "t": self.t,
        }, sort_keys=True, separators=(",", ":"))


def enumerate_pairs(d: int, size_i: int, size_j: int):
    """All C(d,size_i)*C(d,size_j) ordered pairs, lexicographic."""
    if size_i > d or size_j > d:
        raise ValueError("subset sizes cannot exceed d")
    for I in combinations(range(d), size_i):
        for J in combinations(range(d), size_j):
            yield I, J


def pair_count(d: int, size_i: int, size_j: int) -> int:
    return comb(d, size_i) * comb(d, size_j)


def search_primes(d: int, bound: int) -> list[int]:
    """Primes q = d*f + 1 with f odd, q <= bound."""
    return [q for q in range(d + 1, bound + 1)
            if (q - 1) % d == 0 and ((q - 1) // d) % 2 == 1 and is_prime(q)]


def exhaustive_search(q: int, d: int, include_zero: bool) -> list[SearchHit]:
    """Every (I, J) whose construction is an ADS with the target shape.

    Complete over all C(d, d/2)**2 ordered pairs; deterministic output order.
    """
    if (q - 1) % d != 0:
        raise ValueError(f"d={d} does not divide q-1")
    f = (q - 1) // d
    if f % 2 == 0:
        raise ValueError(f"search requires f odd (q={q}, d={d})")
    sys = cyclotomy.build_classes(q, d)
    table = cyclotomy.cyclotomic_numbers(sys)
    tnp = np.array(table.counts, dtype=np.int64)

    half = d // 2
    subsets = list(combinations(range(d), half))
    ns = len(subsets)
    member = np.zeros((ns, d), dtype=np.int64)
    for i, s in enumerate(subsets):
        member[i, list(s)] = 1

    n, k, lam, tcount = dhm.theorem_parameters(q, include_zero)
    neg_class = d // 2  # class of -1 for f odd

    ok = np.ones((ns, ns), dtype=bool)
    lam_count = np.zeros((ns, ns), dtype=np.int64)
    for h in range(d):
        idx = [(i + h) % d for i in range(d)]
        th = tnp[np.ix_(idx, idx)]
        m = member @ th @ member.T   # m[a,b] = sum_{i in A, j in B} (i+h, j+h)
        diag = m.diagonal()
        if include_zero:
            delta = member[:, (-h) % d] + member[:, (neg_class - h) % d]
        else:
            delta = np.zeros(ns, dtype=np.int64)
        v0 = diag[:, None] + diag[None, :] + delta[:, None]
        v1 = m + m.T + delta[None, :]
        for v in (v0, v1):
            ok &= (v == lam) | (v == lam + 1)
            lam_count += (v == lam) * f
    z = 2 * f * (member @ member.T)
    ok &= (z == lam) | (z == lam + 1)
    lam_count += z == lam
    ok &= lam_count == tcount

    hits = []
    for a, b in zip(*np.nonzero(ok)):
        hits.append(SearchHit(q=q, d=d, I=subsets[a], J=subsets[b],
                              include_zero=include_zero,
                              n=n, k=k, lam=lam, t=tcount))
    hits.sort(key=lambda h: (h.q, h.I, h.J))
    return hits


def exhaustive_search_direct(q: int, d: int, include_zero: bool) -> list[SearchHit]:
    """Slow oracle route: per-pair direct spectra.  For cross-checks at small
    sizes; output identical to exhaustive_search."""
    from .adsets import CharacteristicSet, classify, distance_spectrum

    if (q - 1) % d != 0 or ((q - 1) // d) % 2 == 0:
        raise ValueError(f"search requires q = d*f + 1 with f odd (q={q}, d={d})")
    sys = cyclotomy.build_classes(q, d)
    n, k, lam, tcount = dhm.theorem_parameters(q, include_zero)
    target = (n, k, lam, tcount)
    hits = []
    for I, J in enumerate_pairs(d, d // 2, d // 2):
        part0 = sys.union(I)
        part1 = sys.union(J)
        if include_zero:
            part0 = part0 | {0}
        cls = classify(distance_spectrum(CharacteristicSet(q=q, part0=part0, part1=part1)))
        if cls.parameters == target:
            hits.append(SearchHit(q=q, d=d, I=I, J=J, include_zero=include_zero,
                                  n=n, k=k, lam=lam, t=tcount))
    hits.sort(key=lambda h: (h.q, h.I, h.J))
    return hits


def order4_triple_search(q: int, include_zero: bool) -> list[tuple[int, int, int]]:
    """All ordered distinct (i, j, l) reaching the target parameters, by
    direct spectra (q = 5 mod 8)."""
    if q % 8 != 5:
        raise ValueError(f"q={q} is not 5 mod 8")
    sys = cyclotomy.build_classes(q, 4)
    return sorted(dhm.order4_hit_triples(sys, include_zero))


def triple_as_pair(i: int, j: int, l: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(i, j, l) in the (I, J) search coordinates: I = {i,j}, J = {l,j}."""
    return tuple(sorted({i, j})), tuple(sorted({l, j}))


# ---------------------------------------------------------------------------
# parallel driver
# ---------------------------------------------------------------------------

def _search_one(args) -> list[SearchHit]:
    q, d, include_zero = args
    return exhaustive_search(q, d, include_zero)


def exhaustive_search_many(primes, d: int, include_zero: bool,
                           workers: int = 1) -> list[SearchHit]:
    """Search several primes; identical results at any worker count."""
    jobs = [(q, d, include_zero) for q in sorted(primes)]
    if workers <= 1:
        chunks = [_search_one(j) for j in jobs]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(_search_one, jobs))
    hits = [h for chunk in chunks for h in chunk]
    hits.sort(key=lambda h: (h.q, h.I, h.J))
    return hits


# ---------------------------------------------------------------------------
# cross-prime family aggregation
# ---------------------------------------------------------------------------

def canonical_shape(d: int, I, J) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Orbit representative of (I, J) under simultaneous class rotation."""
    best = None
    for h in range(d):
        cand = (tuple(sorted((i + h) % d for i in I)),
                tuple(sorted((j + h) % d for j in J)))
        if best is None or cand < best:
            best = cand
    return best


def _gate_conditions(d: int, q: int) -> dict[str, bool]:
    """Side conditions on the small partition parameters, per order."""
    if d == 12:
        sys = cyclotomy.build_classes(q, 12)
        part = dhm.calibrate_order12(sys)
        return {"x1": part.x == 1, "y1": part.y_signed == 1,
                "ym1": part.y_signed == -1}
    if d == 4:
        sys = cyclotomy.build_classes(q, 4)
        cal = dhm.match_order4_conditions(sys)
        part = cal.partition
        return {"t1": part.t_signed == 1, "tm1": part.t_signed == -1,
                "s1": part.s == 1}
    return {"always": True}


@dataclass
class FamilySearchReport:
    d: int
    include_zero: bool
    primes: list[int]
    hits: list[SearchHit]
    families: list[dict]
    sporadic: list[dict]

    def to_dict(self) -> dict:
        return {
            "d": self.d, "include_zero": self.include_zero, "primes": self.primes,
            "n_hits": len(self.hits),
            "families": self.families, "sporadic": self.sporadic,
        }

    def family_csv(self) -> str:
        lines = ["shape_id,condition,primes_tested,primes_passed"]
        tested = " ".join(map(str, self.primes))
        for fam in self.families:
            lines.append(f"{fam['shape_id']},{fam['condition']},"
                         f"{tested},{' '.join(map(str, fam['primes_passed']))}")
        for spo in self.sporadic:
            lines.append(f"{spo['shape_id']},sporadic,"
                         f"{tested},{' '.join(map(str, spo['primes_passed']))}")
        return "\n".join(lines) + "\n"


def cross_prime_family_report(d: int, bound: int, include_zero: bool,
                              primes=None, workers: int = 1) -> FamilySearchReport:
    """Aggregate exhaustive searches into rotation-orbit 'shapes' and decide
    which shapes form families.

    A family is a shape that succeeds at exactly the tested primes satisfying
    one uniform side condition (x=1 / y=+-1 for order 12, t=+-1 / s=1 for
    order 4, 'every tested prime' otherwise).  Shapes succeeding at some but
    not a full condition-set of primes are reported as sporadic, never
    silenced: a sporadic hit is a potential result, not a bug.
    """
    if primes is None:
        primes = search_primes(d, bound)
    primes = sorted(primes)
    hits = exhaustive_search_many(primes, d, include_zero, workers=workers)

    shape_primes: dict[tuple, list[int]] = {}
    for h in hits:
        key = canonical_shape(d, h.I, h.J)
        shape_primes.setdefault(key, [])
        if h.q not in shape_primes[key]:
            shape_primes[key].append(h.q)

    gates = {q: _gate_conditions(d, q) for q in primes}
    condition_sets = {}
    for name in (next(iter(gates.values())) if gates else {"always": True}):
        condition_sets[name] = [q for q in primes if gates[q][name]]

    families, sporadic = [], []
    for shape in sorted(shape_primes):
        passed = sorted(shape_primes[shape])
        shape_id = "I" + "".join(f"{i:x}" for i in shape[0]) + \
                   "-J" + "".join(f"{j:x}" for j in shape[1])
        matched = sorted(name for name, qs in condition_sets.items()
                         if qs and passed == qs)
        entry = {"shape_id": shape_id, "I": list(shape[0]), "J": list(shape[1]),
                 "primes_passed": passed}
        if matched:
            families.append({**entry, "condition": "|".join(matched)})
        else:
            sporadic.append(entry)
    return FamilySearchReport(d=d, include_zero=include_zero, primes=primes,
                              hits=hits, families=families, sporadic=sporadic)
