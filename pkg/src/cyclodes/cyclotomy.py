"""Cyclotomic classes, exact cyclotomic numbers, Jacobi sums, and the order-12
reference data (equality table and case-1 coefficient matrix).

Definitions, for q = d*f + 1 prime and g the fixed primitive root:

  * D_i = {g**(k*d + i) : 0 <= k < f} is the i-th cyclotomic class of order d,
    i.e. a lands in class Ind(a) mod d.  The classes partition GF(q)*.
  * The cyclotomic number (m,n)_d = |(D_m + 1) & D_n| is always computed here
    by one exact pass over GF(q)* (count a with a in D_m, a+1 in D_n); the
    closed-form coefficient matrix below is a cross-check, never the source
    of truth.
  * Jacobi sums live in the ring Z[beta], beta = exp(2*pi*1j/12), represented
    exactly on the integral basis {1, beta, beta**2, beta**3} with
    beta**4 = beta**2 - 1.  No floating point anywhere.
  * For q = 12f + 1 the splitting parameters are the quadratic partitions
    q = x**2 + 4*y**2 = A**2 + 3*B**2 with x = 1 (mod 4), A = 1 (mod 6); for
    q = 5 (mod 8) additionally q = s**2 + 4*t**2 with s = 1 (mod 4).  The
    congruences fix x, A, s; the signs of y, B, t are normalization-dependent
    and are resolved operationally (see resolve_signs and dhm.calibrate).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from pathlib import Path

from .ff import IndexTable, build_index_table, check_prime_modulus, find_primitive_root


# ---------------------------------------------------------------------------
# cyclotomic classes and numbers
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CyclotomicSystem:
    """Order-d class structure of GF(q)* for a fixed primitive root g.

    class_of[a] = Ind(a) mod d for a in [1, q-1]; class_of[0] is -1 (unused).
    """

    q: int
    d: int
    f: int
    g: int
    index: IndexTable
    class_of: tuple[int, ...]

    def klass(self, a: int) -> int:
        a %= self.q
        if a == 0:
            raise ValueError("0 belongs to no cyclotomic class")
        return self.class_of[a]

    def class_members(self, i: int) -> list[int]:
        return [a for a in range(1, self.q) if self.class_of[a] == i % self.d]

    def union(self, indices) -> frozenset[int]:
        idx = {i % self.d for i in indices}
        return frozenset(a for a in range(1, self.q) if self.class_of[a] in idx)

    @property
    def minus_one_class(self) -> int:
        # -1 = g**((q-1)/2), so its class is (d*f/2) mod d
        return (self.d * self.f // 2) % self.d


def build_classes(q: int, d: int, g: int | None = None) -> CyclotomicSystem:
    """Cyclotomic system of order d for GF(q); d must divide q-1."""
    check_prime_modulus(q)
    if d < 1 or (q - 1) % d != 0:
        raise ValueError(f"d={d} does not divide q-1={q - 1}")
    if g is None:
        g = find_primitive_root(q)
    index = build_index_table(q, g)
    class_of = [-1] * q
    for a in range(1, q):
        class_of[a] = index.ind[a] % d
    return CyclotomicSystem(q=q, d=d, f=(q - 1) // d, g=g, index=index,
                            class_of=tuple(class_of))


@dataclass(frozen=True)
class CyclotomicNumberTable:
    """Exact d x d table of cyclotomic numbers (m,n)_d."""

    q: int
    d: int
    counts: tuple[tuple[int, ...], ...]

    def __getitem__(self, mn: tuple[int, int]) -> int:
        m, n = mn
        return self.counts[m % self.d][n % self.d]

    def total(self) -> int:
        return sum(map(sum, self.counts))

    def row_sums(self) -> list[int]:
        return [sum(row) for row in self.counts]


def cyclotomic_numbers(sys: CyclotomicSystem) -> CyclotomicNumberTable:
    """All (m,n)_d by a single pass: each a not in {0, -1} contributes one count."""
    d, q, cls = sys.d, sys.q, sys.class_of
    counts = [[0] * d for _ in range(d)]
    for a in range(1, q - 1):
        counts[cls[a]][cls[a + 1]] += 1
    return CyclotomicNumberTable(q=q, d=d, counts=tuple(map(tuple, counts)))


# ---------------------------------------------------------------------------
# table cache (optional optimization; recomputation gives identical bytes)
# ---------------------------------------------------------------------------

def cache_filename(q: int, d: int, g: int) -> str:
    return f"cyc_q{q}_d{d}_g{g}.csv"


def table_to_csv(table: CyclotomicNumberTable) -> str:
    lines = ["m,n,count"]
    for m in range(table.d):
        for n in range(table.d):
            lines.append(f"{m},{n},{table.counts[m][n]}")
    return "\n".join(lines) + "\n"


def save_table(table: CyclotomicNumberTable, sys: CyclotomicSystem, cache_dir) -> Path:
    path = Path(cache_dir) / cache_filename(sys.q, sys.d, sys.g)
    path.write_text(table_to_csv(table))
    return path


def load_table(q: int, d: int, g: int, cache_dir) -> CyclotomicNumberTable | None:
    path = Path(cache_dir) / cache_filename(q, d, g)
    if not path.exists():
        return None
    counts = [[0] * d for _ in range(d)]
    lines = path.read_text().strip().splitlines()
    if lines[0] != "m,n,count":
        raise ValueError(f"bad cache header in {path}")
    for line in lines[1:]:
        m, n, c = map(int, line.split(","))
        counts[m][n] = c
    return CyclotomicNumberTable(q=q, d=d, counts=tuple(map(tuple, counts)))


def cyclotomic_numbers_cached(sys: CyclotomicSystem, cache_dir=None) -> CyclotomicNumberTable:
    """Table via cache when available; correctness never depends on the cache."""
    if cache_dir is not None:
        cached = load_table(sys.q, sys.d, sys.g, cache_dir)
        if cached is not None:
            return cached
    table = cyclotomic_numbers(sys)
    if cache_dir is not None:
        save_table(table, sys, cache_dir)
    return table


# ---------------------------------------------------------------------------
# quadratic partitions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class QuadraticPartition:
    """Integer representations of q with congruence-normalized first members.

    q = x**2 + 4*y_abs**2   with x = 1 (mod 4)          (requires q = 1 mod 4)
    q = A**2 + 3*B_abs**2   with A = 1 (mod 6)          (requires q = 1 mod 3)
    q = s**2 + 4*t_abs**2   with s = 1 (mod 4)          (only when q = 5 mod 8)

    y_signed / B_signed / t_signed stay None until calibrated against exact
    counts; B_signed is resolvable only for case-1 systems.
    """

    q: int
    x: int | None = None
    y_abs: int | None = None
    A: int | None = None
    B_abs: int | None = None
    s: int | None = None
    t_abs: int | None = None
    y_signed: int | None = None
    B_signed: int | None = None
    t_signed: int | None = None


def _two_square_partition(q: int, weight: int, residue: int, modulus: int):
    """Solve q = u**2 + weight*v**2 with u = residue (mod modulus), v >= 0."""
    for u_abs in range(int(math.isqrt(q)) + 1):
        rem = q - u_abs * u_abs
        if rem % weight:
            continue
        v2 = rem // weight
        v = math.isqrt(v2)
        if v * v != v2:
            continue
        for u in (u_abs, -u_abs):
            if u % modulus == residue % modulus:
                return u, v
    return None


def quadratic_partitions(q: int) -> QuadraticPartition:
    """All applicable partitions of q; unique given the congruence constraints."""
    check_prime_modulus(q)
    part = QuadraticPartition(q=q)
    if q % 4 == 1:
        xy = _two_square_partition(q, 4, 1, 4)
        if xy is None:
            raise ArithmeticError(f"no x,y partition for q={q}")  # impossible for prime q = 1 mod 4
        part = replace(part, x=xy[0], y_abs=xy[1])
    if q % 3 == 1:
        ab = _two_square_partition(q, 3, 1, 6)
        if ab is None:
            raise ArithmeticError(f"no A,B partition for q={q}")
        part = replace(part, A=ab[0], B_abs=ab[1])
    if q % 8 == 5:
        st = _two_square_partition(q, 4, 1, 4)
        part = replace(part, s=st[0], t_abs=st[1])
    return part


# ---------------------------------------------------------------------------
# exact arithmetic in Z[beta], beta a primitive 12th root of unity
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CyclotomicInteger12:
    """c0 + c1*beta + c2*beta**2 + c3*beta**3 with beta**4 = beta**2 - 1.

    The basis is integral and the representation unique, so equality is
    coefficient equality.  Complex conjugation is the automorphism
    beta -> beta**11.
    """

    c0: int = 0
    c1: int = 0
    c2: int = 0
    c3: int = 0

    @staticmethod
    def from_int(n: int) -> "CyclotomicInteger12":
        return CyclotomicInteger12(n, 0, 0, 0)

    @staticmethod
    def root_power(k: int) -> "CyclotomicInteger12":
        return _BETA_POWERS[k % 12]

    def __add__(self, other: "CyclotomicInteger12") -> "CyclotomicInteger12":
        return CyclotomicInteger12(self.c0 + other.c0, self.c1 + other.c1,
                                   self.c2 + other.c2, self.c3 + other.c3)

    def __sub__(self, other: "CyclotomicInteger12") -> "CyclotomicInteger12":
        return CyclotomicInteger12(self.c0 - other.c0, self.c1 - other.c1,
                                   self.c2 - other.c2, self.c3 - other.c3)

    def __neg__(self) -> "CyclotomicInteger12":
        return CyclotomicInteger12(-self.c0, -self.c1, -self.c2, -self.c3)

    def __mul__(self, other: "CyclotomicInteger12") -> "CyclotomicInteger12":
        a = (self.c0, self.c1, self.c2, self.c3)
        b = (other.c0, other.c1, other.c2, other.c3)
        prod = [0] * 7
        for i in range(4):
            if a[i] == 0:
                continue
            for j in range(4):
                prod[i + j] += a[i] * b[j]
        # reduce: beta**4 = beta**2 - 1, beta**5 = beta**3 - beta, beta**6 = -1
        return CyclotomicInteger12(
            prod[0] - prod[4] - prod[6],
            prod[1] - prod[5],
            prod[2] + prod[4],
            prod[3] + prod[5],
        )

    def conjugate(self) -> "CyclotomicInteger12":
        # beta -> beta**11 = beta - beta**3; beta**2 -> 1 - beta**2; beta**3 -> -beta**3
        return CyclotomicInteger12(
            self.c0 + self.c2, self.c1, -self.c2, -(self.c1 + self.c3)
        )

    def hermitian_square(self) -> int:
        """|z|**2 = z * conj(z), which must be a rational integer here.

        The product always lies in Z[sqrt(3)]; raises if the sqrt(3) part is
        nonzero (never the case for the Jacobi sums this is used on).
        """
        prod = self * self.conjugate()
        # Z[sqrt(3)] elements have the form a + b*(beta + beta**11)
        #   = a + b*(2*beta - beta**3): c2 must vanish and c1 = -2*c3.
        if prod.c2 != 0 or prod.c1 != -2 * prod.c3 or prod.c3 != 0:
            raise ArithmeticError(f"|z|^2 not a rational integer: {prod}")
        return prod.c0

    def is_zero(self) -> bool:
        return self.c0 == self.c1 == self.c2 == self.c3 == 0


def _beta_powers() -> tuple[CyclotomicInteger12, ...]:
    out = [CyclotomicInteger12(1, 0, 0, 0)]
    for _ in range(11):
        p = out[-1]
        # multiply by beta: (c0,c1,c2,c3) -> (-c3, c0, c1 + c3, c2)
        out.append(CyclotomicInteger12(-p.c3, p.c0, p.c1 + p.c3, p.c2))
    return tuple(out)


_BETA_POWERS = _beta_powers()


def jacobi_sum(sys: CyclotomicSystem, m: int, n: int) -> CyclotomicInteger12:
    """Sum of beta**(m*Ind(a) + n*Ind(b)) over a + b = 1, a, b in GF(q)*.

    Requires d = 12 so that exponents reduce mod 12.
    """
    if sys.d != 12:
        raise ValueError("Jacobi sums are implemented for order 12 only")
    q, ind = sys.q, sys.index.ind
    coeffs = [0, 0, 0, 0]
    for a in range(2, q):
        b = (1 - a) % q
        e = (m * ind[a] + n * ind[b]) % 12
        p = _BETA_POWERS[e]
        coeffs[0] += p.c0
        coeffs[1] += p.c1
        coeffs[2] += p.c2
        coeffs[3] += p.c3
    return CyclotomicInteger12(*coeffs)


def c_parameter(sys: CyclotomicSystem) -> int:
    """Index k in [0,12) with phi(beta**3, beta) = beta**k * phi(beta**5, beta).

    Division is realized as a 12-candidate multiplication test, which is exact
    in Z[beta].  Exactly one candidate matches (both sums have norm q != 0);
    anything else signals a bug or a violated precondition.
    """
    if sys.d != 12:
        raise ValueError("c parameter requires order 12")
    if sys.f % 2 == 0:
        raise ValueError("c parameter classification requires f odd")
    num = jacobi_sum(sys, 3, 1)
    den = jacobi_sum(sys, 5, 1)
    matches = [k for k in range(12) if _BETA_POWERS[k] * den == num]
    if len(matches) != 1:
        raise ArithmeticError(f"c-parameter test matched {matches} for q={sys.q}")
    return matches[0]


# ---------------------------------------------------------------------------
# six-way case classification (f odd)
# ---------------------------------------------------------------------------

OUTSIDE_TABLE = "outside table"

# (Ind(3) mod 4, Ind(2) mod 6, c exponent) -> case number
_CASE_TABLE = {
    (0, 1, 3): 1,
    (0, 3, 3): 2,
    (2, 1, 0): 3,
    (2, 1, 6): 4,
    (2, 3, 0): 5,
    (2, 3, 6): 6,
}


@dataclass(frozen=True)
class CaseClassification:
    """Residues of M = Ind(2), M' = Ind(3) plus the c root-of-unity exponent.

    case_number is 1..6 per the classical six-way split for f odd, or the
    string OUTSIDE_TABLE for combinations the split does not cover (with the
    smallest-primitive-root convention, c = beta**9 occurs and is not covered).
    """

    q: int
    f_odd: bool
    M: int
    M_prime: int
    c_index: int
    case_number: int | str

    @property
    def M_mod6(self) -> int:
        return self.M % 6

    @property
    def Mp_mod4(self) -> int:
        return self.M_prime % 4


def classify_case(sys: CyclotomicSystem) -> CaseClassification:
    """Case of an order-12 system with f odd; refuses f even."""
    if sys.d != 12:
        raise ValueError("case classification requires order 12")
    if sys.f % 2 == 0:
        raise ValueError("case classification requires f odd")
    M = sys.index(2)
    Mp = sys.index(3)
    k = c_parameter(sys)
    case = _CASE_TABLE.get((Mp % 4, M % 6, k), OUTSIDE_TABLE)
    return CaseClassification(q=sys.q, f_odd=True, M=M, M_prime=Mp,
                              c_index=k, case_number=case)


# ---------------------------------------------------------------------------
# equality table: the 144 order-12 numbers reduce to 31 for f odd
# ---------------------------------------------------------------------------

# Row h, column k; entry "hX" means (h,10), "hY" means (h,11).
_EQUALITY_ROWS = """
00 01 02 03 04 05 06 07 08 09 0X 0Y
10 11 12 13 14 15 07 05 15 19 1X 1Y
20 21 22 23 24 19 08 15 04 14 24 2Y
30 31 32 30 2Y 1X 09 19 14 03 13 23
22 32 42 31 20 1Y 0X 1X 24 13 02 12
11 21 31 32 21 10 0Y 1Y 2Y 23 12 01
00 10 20 30 22 11 00 10 20 30 22 11
10 0Y 1Y 2Y 23 12 01 11 21 31 32 21
20 1Y 0X 1X 24 13 02 12 22 32 42 31
30 2Y 1X 09 19 14 03 13 23 30 31 32
22 23 24 19 08 15 04 14 24 2Y 20 21
11 12 13 14 15 07 05 15 19 1X 1Y 10
""".split()

EQUALITY_TABLE: tuple[tuple[str, ...], ...] = tuple(
    tuple(_EQUALITY_ROWS[r * 12:(r + 1) * 12]) for r in range(12)
)


def label_to_pair(label: str) -> tuple[int, int]:
    h = int(label[0])
    k = {"X": 10, "Y": 11}.get(label[1])
    if k is None:
        k = int(label[1])
    return h, k


def pair_to_label(h: int, k: int) -> str:
    return f"{h}{'XY'[k - 10] if k >= 10 else k}"


def reduce_hk(h: int, k: int) -> str:
    """Canonical label of (h,k)_12 among the 31 distinct numbers (f odd)."""
    if not (0 <= h < 12 and 0 <= k < 12):
        raise ValueError("class indices must lie in [0, 12)")
    return EQUALITY_TABLE[h][k]


# The 31 canonical labels in (h,k) lexicographic order.
CANONICAL_LABELS: tuple[str, ...] = tuple(
    pair_to_label(h, k)
    for h, k in ([(0, k) for k in range(12)]
                 + [(1, k) for k in (0, 1, 2, 3, 4, 5, 9, 10, 11)]
                 + [(2, k) for k in (0, 1, 2, 3, 4, 11)]
                 + [(3, 0), (3, 1), (3, 2), (4, 2)])
)


def label_multiplicities() -> dict[str, int]:
    """How often each canonical label occurs among the 144 cells."""
    mult: dict[str, int] = {}
    for row in EQUALITY_TABLE:
        for lab in row:
            mult[lab] = mult.get(lab, 0) + 1
    return mult


# ---------------------------------------------------------------------------
# case-1 coefficient matrix: 144*(h,k)_12 = row . (q, A, B, x, y, 1)
# ---------------------------------------------------------------------------

# Validated end-to-end against exhaustive counts at every case-1 prime tested
# (the matrix satisfies sum-over-cells = 144q - 288 and the per-row-sum
# identities exactly; see tests).
M1_MATRIX: dict[str, tuple[int, int, int, int, int, int]] = {
    "00": (1, -6, 0, 0, -16, -23),
    "01": (1, 4, 24, -18, -24, 1),
    "02": (1, -2, -24, -12, 0, 1),
    "03": (1, 18, 0, 0, 32, 1),
    "04": (1, -12, 0, 6, -16, 1),
    "05": (1, -2, -24, -12, 0, 1),
    "06": (1, -14, 24, 0, 48, 1),
    "07": (1, 12, 0, 6, 8, 1),
    "08": (1, 6, 0, 12, -16, 1),
    "09": (1, -14, 0, 0, 0, 1),
    "0X": (1, 4, 0, 6, 0, 1),
    "0Y": (1, 6, 0, 12, -16, 1),
    "10": (1, 0, 12, 6, 8, -11),
    "11": (1, 6, 0, 0, 8, -11),
    "12": (1, -12, 0, 6, -16, 1),
    "13": (1, 4, -12, 6, -24, 1),
    "14": (1, 6, 36, -12, -16, 1),
    "15": (1, 0, -12, -6, 8, 1),
    "19": (1, -12, 12, 6, 8, 1),
    "1X": (1, -6, 0, 0, 8, 1),
    "1Y": (1, 4, 0, 6, 0, 1),
    "20": (1, 6, 0, 0, 8, -11),
    "21": (1, 0, -12, -6, 8, 1),
    "22": (1, -12, 0, -6, 8, -11),
    "23": (1, -6, 0, 0, 8, 1),
    "24": (1, 12, 0, 6, 8, 1),
    "2Y": (1, 0, -24, -6, -16, 1),
    "30": (1, 6, -12, 0, -16, -11),
    "31": (1, 0, 0, -6, 32, 1),
    "32": (1, -2, 12, 12, 0, 1),
    "42": (1, 4, 24, -18, -24, 1),
}


def m1_predicted(q: int, part: QuadraticPartition) -> dict[str, int]:
    """The 31 case-1 values from the coefficient matrix.

    Needs y_signed and B_signed resolved.  Every entry must come out a
    nonnegative integer; a non-integral result means wrong case or signs.
    """
    if part.y_signed is None or part.B_signed is None:
        raise ValueError("m1_predicted needs resolved y and B signs")
    vec = (q, part.A, part.B_signed, part.x, part.y_signed, 1)
    out = {}
    for label, row in M1_MATRIX.items():
        num = sum(c * v for c, v in zip(row, vec))
        if num % 144 != 0 or num < 0:
            raise ArithmeticError(
                f"144*({label}) = {num} not a nonnegative multiple of 144 at q={q}")
        out[label] = num // 144
    return out


def brute_force_canonical(table: CyclotomicNumberTable) -> dict[str, int]:
    """Exact values of the 31 canonical numbers from a full order-12 table."""
    if table.d != 12:
        raise ValueError("canonical labels are defined for order 12")
    out = {}
    for label in CANONICAL_LABELS:
        h, k = label_to_pair(label)
        out[label] = table.counts[h][k]
    return out


def cubic_residue_02_check(sys: CyclotomicSystem, part: QuadraticPartition,
                           table: CyclotomicNumberTable | None = None):
    """Side-condition identity 144*(0,2)_12 = q + 1 - 2A + 24B - 12x.

    Applies when 2 is a cubic residue, 3 is a biquadratic residue, and f is
    odd; B's sign is not pinned by the identity, so both are tried.  Returns
    None when the side conditions fail, else the set of B signs (+1/-1/0)
    satisfying the identity exactly.
    """
    if sys.f % 2 == 0:
        return None
    if sys.index(2) % 3 != 0 or sys.index(3) % 4 != 0:
        return None
    if table is None:
        table = cyclotomic_numbers(sys)
    target = 144 * table.counts[0][2]
    signs = set()
    cands = {part.B_abs, -part.B_abs}
    for b in cands:
        if part.q + 1 - 2 * part.A + 24 * b - 12 * part.x == target:
            signs.add(0 if part.B_abs == 0 else (1 if b > 0 else -1))
    return signs


# ---------------------------------------------------------------------------
# sign resolution
# ---------------------------------------------------------------------------

_CAL_SET = frozenset({0, 1, 4, 5, 8, 9})


def _restricted_distance_raw(q: int, members: frozenset[int], w: int) -> int:
    return sum(1 for a in members if (a + w) % q in members)


def resolve_signs(sys: CyclotomicSystem, part: QuadraticPartition) -> QuadraticPartition:
    """Pin the sign of y (and of B for case-1 systems) against exact counts.

    y: the unique sign for which the translate-overlap of the class union
    {0,1,4,5,8,9} equals (q - 2y - 3)/4 on every even-class shift (checked at
    one shift, then the uniqueness guard below).  Exactly one sign may fit.

    B: for case-1 systems, the unique sign making the full 31-row coefficient
    matrix reproduce the exhaustive table.  Left unresolved otherwise.
    """
    if sys.d != 12:
        raise ValueError("sign resolution requires order 12")
    if sys.f % 2 == 0:
        raise ValueError("sign resolution requires f odd")
    q = sys.q
    members = sys.union(_CAL_SET)
    even_w = [a for a in range(1, q) if sys.class_of[a] % 2 == 0]
    d_vals = {_restricted_distance_raw(q, members, w) for w in even_w}
    fits = [y for y in sorted({part.y_abs, -part.y_abs}, reverse=True)
            if d_vals == {(q - 2 * y - 3) // 4} and (q - 2 * y - 3) % 4 == 0]
    if len(fits) != 1:
        raise ArithmeticError(
            f"y-sign calibration found {len(fits)} fits at q={q} (d_I values {d_vals})")
    out = replace(part, y_signed=fits[0])

    case = classify_case(sys)
    if case.case_number == 1:
        table = cyclotomic_numbers(sys)
        actual = brute_force_canonical(table)
        good = []
        for b in sorted({part.B_abs, -part.B_abs}, reverse=True):
            cand = replace(out, B_signed=b)
            try:
                if m1_predicted(q, cand) == actual:
                    good.append(b)
            except ArithmeticError:
                pass
        if len(good) != 1:
            raise ArithmeticError(
                f"B-sign calibration found {len(good)} fits at case-1 prime q={q}")
        out = replace(out, B_signed=good[0])
    return out
