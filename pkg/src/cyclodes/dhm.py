"""Product-set constructions C = {0} x D_I u {1} x D_J over GF(2) x GF(q),
for cyclotomic classes of order 4 and order 12: condition lists, builders,
closed-form predicted spectra, and calibration of the sign conventions.

Order 4 (q = 5 mod 8, so f odd): recipes are triples (i, j, l) of distinct
class indices with part0 = D_i u D_j and part1 = D_l u D_j; the sufficient
conditions are three fixed 8-triple lists gated on t = 1, t = -1, or s = 1
(q = s**2 + 4t**2, s = 1 mod 4).

Order 12 (q = 12f + 1, f odd): recipes are pairs (I, J) of 6-element index
sets drawn from six named patterns; the sufficient conditions are families
gated on x = 1 or y = +-1 (q = x**2 + 4y**2, x = 1 mod 4).

Sign conventions: the congruences pin x, A, s but not y, B, t.  All signed
parameters are *outputs* of calibration against exact counts (never inputs),
keeping every verification non-circular:
  * y via the translate-overlap pattern of {0,1,4,5,8,9} (cyclotomy.resolve_signs),
  * t via which order-4 condition list the exhaustive triple search returns.

Closed-form branch convention: the restricted distances d_I(w), d_{I,J}(w)
are piecewise constant on cyclotomic classes, with branches indexed by the
class of w**-1 (equivalently, the negated class of w).  Indexing by w's own
class would transpose the odd-class branches {1,5,9} <-> {3,7,11}; the
w**-1 convention is the one that matches exact counts, verified at every
validation prime.

With (0,0) adjoined, the slot order of (I, J) matters whenever one of the
index sets is a parity pattern ({0,2,...,10} or {1,3,...,11}): exactly one
order per unordered pair passes, and which one is decided by sign(y).  The
x = 1 family passes in both orders.  predicted_classification reproduces
this from the closed forms; verify_family reports recipe-by-recipe truth.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from itertools import permutations

from . import cyclotomy
from .adsets import CharacteristicSet, classify, distance_spectrum
from .cyclotomy import CyclotomicSystem, QuadraticPartition

# ---------------------------------------------------------------------------
# named order-12 index-set patterns
# ---------------------------------------------------------------------------

SET_A = frozenset({0, 1, 4, 5, 8, 9})
SET_B = frozenset({2, 3, 6, 7, 10, 11})
SET_C = frozenset({0, 3, 4, 7, 8, 11})
SET_D = frozenset({1, 2, 5, 6, 9, 10})
SET_E = frozenset({0, 2, 4, 6, 8, 10})    # quadratic residues: even classes
SET_F = frozenset({1, 3, 5, 7, 9, 11})    # quadratic nonresidues: odd classes

NAMED_SETS = {"A": SET_A, "B": SET_B, "C": SET_C, "D": SET_D, "E": SET_E, "F": SET_F}
SET_NAMES = {v: k for k, v in NAMED_SETS.items()}

# ---------------------------------------------------------------------------
# condition lists (data)
# ---------------------------------------------------------------------------

COROLLARY1_TRIPLES: dict[str, tuple[tuple[int, int, int], ...]] = {
    "t1": ((0, 1, 3), (0, 2, 1), (1, 2, 0), (1, 3, 2),
           (2, 0, 3), (2, 3, 1), (3, 1, 0), (3, 0, 2)),
    "tm1": ((0, 2, 3), (0, 3, 1), (1, 0, 2), (1, 3, 0),
            (2, 0, 1), (2, 1, 3), (3, 1, 2), (3, 2, 0)),
    "s1": ((0, 1, 2), (0, 3, 2), (1, 0, 3), (1, 2, 3),
           (2, 1, 0), (2, 3, 0), (3, 0, 1), (3, 2, 1)),
}

COROLLARY2_TRIPLES: dict[str, tuple[tuple[int, int, int], ...]] = {
    "t1": ((0, 1, 3), (0, 2, 3), (1, 2, 0), (1, 3, 0),
           (2, 0, 1), (2, 3, 1), (3, 0, 2), (3, 1, 2)),
    "tm1": ((0, 2, 1), (0, 3, 1), (1, 0, 2), (1, 3, 2),
            (2, 0, 3), (2, 1, 3), (3, 1, 0), (3, 2, 0)),
    "s1": ((0, 1, 2), (0, 3, 2), (1, 0, 3), (1, 2, 3),
           (2, 1, 0), (2, 3, 0), (3, 0, 1), (3, 2, 1)),
}

ORDER4_CONDITIONS = ("t1", "tm1", "s1")

THEOREM12_FAMILIES: dict[str, tuple[frozenset[int], ...]] = {
    "x1": (SET_A, SET_C, SET_D, SET_B),
    "y1a": (SET_A, SET_B, SET_F),
    "y1b": (SET_C, SET_D, SET_E),
    "ym1a": (SET_A, SET_B, SET_E),
    "ym1b": (SET_C, SET_D, SET_F),
}

ORDER12_CONDITIONS = ("x1", "y1a", "y1b", "ym1a", "ym1b")


def corollary_triples(condition: str, with_zero: bool) -> tuple[tuple[int, int, int], ...]:
    """Verbatim 8-triple list for an order-4 condition."""
    table = COROLLARY2_TRIPLES if with_zero else COROLLARY1_TRIPLES
    if condition not in table:
        raise ValueError(f"unknown order-4 condition {condition!r}")
    return table[condition]


def theorem12_pairs(condition: str) -> tuple[tuple[frozenset[int], frozenset[int]], ...]:
    """All ordered (I, J) from the condition's family with |I & J| = 3."""
    if condition not in THEOREM12_FAMILIES:
        raise ValueError(f"unknown order-12 condition {condition!r}")
    fam = THEOREM12_FAMILIES[condition]
    return tuple((I, J) for I in fam for J in fam
                 if I != J and len(I & J) == 3)


# ---------------------------------------------------------------------------
# recipes and builders
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Order4Recipe:
    i: int
    j: int
    l: int
    include_zero: bool = False

    def __post_init__(self):
        if len({self.i, self.j, self.l}) != 3 or \
                not all(0 <= v < 4 for v in (self.i, self.j, self.l)):
            raise ValueError("recipe needs three pairwise distinct indices in [0,4)")


@dataclass(frozen=True)
class Order12Recipe:
    I: frozenset[int]
    J: frozenset[int]
    include_zero: bool = False

    def __post_init__(self):
        if len(self.I) != 6 or len(self.J) != 6 or \
                not (self.I | self.J) <= set(range(12)):
            raise ValueError("recipe needs two 6-element subsets of [0,12)")


def build_order4(sys: CyclotomicSystem, r: Order4Recipe) -> CharacteristicSet:
    """C = {0} x (D_i u D_j) u {1} x (D_l u D_j), plus (0,0) when requested."""
    if sys.d != 4:
        raise ValueError("build_order4 requires an order-4 system")
    if sys.q % 8 != 5:
        raise ValueError(f"q={sys.q} is not 5 mod 8")
    part0 = sys.union({r.i, r.j})
    part1 = sys.union({r.l, r.j})
    if r.include_zero:
        part0 = part0 | {0}
    return CharacteristicSet(q=sys.q, part0=part0, part1=part1)


def build_order12(sys: CyclotomicSystem, r: Order12Recipe) -> CharacteristicSet:
    """C = {0} x D_I u {1} x D_J, plus (0,0) when requested."""
    if sys.d != 12:
        raise ValueError("build_order12 requires an order-12 system")
    if sys.f % 2 == 0:
        raise ValueError("construction requires f odd")
    part0 = sys.union(r.I)
    part1 = sys.union(r.J)
    if r.include_zero:
        part0 = part0 | {0}
    return CharacteristicSet(q=sys.q, part0=part0, part1=part1)


def theorem_parameters(q: int, include_zero: bool) -> tuple[int, int, int, int]:
    """Target (n, k, lambda, t): (2q, q-1, (q-3)/2, 3(q-1)/2) without the zero
    pair, (2q, q, (q-1)/2, (3q-1)/2) with it."""
    if include_zero:
        return (2 * q, q, (q - 1) // 2, (3 * q - 1) // 2)
    return (2 * q, q - 1, (q - 3) // 2, 3 * (q - 1) // 2)


# ---------------------------------------------------------------------------
# closed-form restricted distances (order 12, f odd)
# ---------------------------------------------------------------------------

_ODD1 = frozenset({1, 5, 9})
_ODD2 = frozenset({3, 7, 11})
_EVEN1 = frozenset({0, 4, 8})
_EVEN2 = frozenset({2, 6, 10})


def _dI_table(I: frozenset[int], q: int, y: int) -> tuple[int, int]:
    """(value on even branch, value on odd branch), branch = parity of w's class."""
    if I in (SET_A, SET_B):
        return (q - 2 * y - 3) // 4, (q + 2 * y - 3) // 4
    if I in (SET_C, SET_D):
        return (q + 2 * y - 3) // 4, (q - 2 * y - 3) // 4
    if I == SET_E:
        return (q - 5) // 4, (q - 1) // 4
    if I == SET_F:
        return (q - 1) // 4, (q - 5) // 4
    raise ValueError("index set outside the closed-form families")


def predicted_dI(sys_or_q, I: frozenset[int], w_class_or_w: int,
                 part: QuadraticPartition) -> int:
    """Closed-form d_I(w) for the six named patterns; needs y_signed.

    Accepts either a CyclotomicSystem plus an element w, or a prime q plus
    w's class index directly.
    """
    if part.y_signed is None:
        raise ValueError("predicted_dI needs a calibrated y sign")
    if isinstance(sys_or_q, CyclotomicSystem):
        q = sys_or_q.q
        u = sys_or_q.klass(w_class_or_w)
    else:
        q, u = sys_or_q, w_class_or_w
    even_val, odd_val = _dI_table(I, q, part.y_signed)
    return even_val if u % 2 == 0 else odd_val


def _l4_IJ(q, x, y, e):
    if e % 2 == 0:
        return (q + x - 2) // 4
    return (q - x - 4) // 4 if e in _ODD1 else (q - x) // 4


def _l4_JI(q, x, y, e):
    if e % 2 == 0:
        return (q + x - 2) // 4
    return (q - x - 4) // 4 if e in _ODD2 else (q - x) // 4


def _l5_IJ(q, x, y, e):
    if e in _EVEN1:
        return (q - x - 2 * y - 2) // 4
    if e in _EVEN2:
        return (q + x + 2 * y - 4) // 4
    return (q + x - 2 * y) // 4 if e in _ODD1 else (q - x + 2 * y - 2) // 4


def _l5_JI(q, x, y, e):
    if e in _EVEN2:
        return (q - x - 2 * y - 2) // 4
    if e in _EVEN1:
        return (q + x + 2 * y - 4) // 4
    return (q + x - 2 * y) // 4 if e in _ODD2 else (q - x + 2 * y - 2) // 4


def _l6_IJ(q, x, y, e):
    if e in _EVEN1:
        return (q - x + 2 * y - 2) // 4
    if e in _EVEN2:
        return (q + x - 2 * y - 4) // 4
    return (q + x + 2 * y) // 4 if e in _ODD2 else (q - x - 2 * y - 2) // 4


def _l6_JI(q, x, y, e):
    if e in _EVEN2:
        return (q - x + 2 * y - 2) // 4
    if e in _EVEN1:
        return (q + x - 2 * y - 4) // 4
    return (q + x + 2 * y) // 4 if e in _ODD1 else (q - x - 2 * y - 2) // 4


_CROSS_REPS = (
    ((SET_A, SET_C), _l4_IJ, _l4_JI),
    ((SET_C, SET_E), _l5_IJ, _l5_JI),
    ((SET_A, SET_E), _l6_IJ, _l6_JI),
)


def _shift(S: frozenset[int], t: int) -> frozenset[int]:
    return frozenset((i + t) % 12 for i in S)


def _cross_formula(I: frozenset[int], J: frozenset[int]):
    """Resolve (I, J) to (branch function, rotation t) via the representatives."""
    for (rI, rJ), f_ij, f_ji in _CROSS_REPS:
        for t in range(12):
            if I == _shift(rI, t) and J == _shift(rJ, t):
                return f_ij, t
            if I == _shift(rJ, t) and J == _shift(rI, t):
                return f_ji, t
    raise ValueError("pair outside the closed-form families")


def predicted_dIJ(sys_or_q, I: frozenset[int], J: frozenset[int],
                  w_class_or_w: int, part: QuadraticPartition) -> int:
    """Closed-form d_{I,J}(w) for pairs of named patterns with |I & J| = 3.

    The branch is selected by h + t where h is the class of w**-1 and t the
    rotation aligning (I, J) with its representative pair.
    """
    if part.y_signed is None or part.x is None:
        raise ValueError("predicted_dIJ needs x and a calibrated y sign")
    if isinstance(sys_or_q, CyclotomicSystem):
        q = sys_or_q.q
        u = sys_or_q.klass(w_class_or_w)
    else:
        q, u = sys_or_q, w_class_or_w
    func, t = _cross_formula(I, J)
    h = (-u) % 12
    return func(q, part.x, part.y_signed, (h + t) % 12)


def _delta(I: frozenset[int], h: int) -> int:
    # |D_I & {w2, -w2}| with h the class of w2**-1 (f odd, so -1 has class 6)
    shifted = {(i + h) % 12 for i in I}
    return (1 if 0 in shifted else 0) + (1 if 6 in shifted else 0)


def predicted_spectrum(q: int, part: QuadraticPartition, I: frozenset[int],
                       J: frozenset[int], include_zero: bool) -> dict[int, int]:
    """Predicted difference histogram of the (I, J) construction, stratum by
    stratum, from the closed forms alone (no counting).

    Strata: for each h in [0,12) the f shifts (0, w2) with w2**-1 in D_h take
    one value, the f shifts (1, w2) another; (1, 0) contributes once.
    """
    f = (q - 1) // 12
    func_ij, t_ij = _cross_formula(I, J)
    func_ji, t_ji = _cross_formula(J, I)
    hist: dict[int, int] = {}
    for h in range(12):
        u = (-h) % 12
        v0 = predicted_dI(q, I, u, part) + predicted_dI(q, J, u, part)
        v1 = func_ij(q, part.x, part.y_signed, (h + t_ij) % 12) + \
            func_ji(q, part.x, part.y_signed, (h + t_ji) % 12)
        if include_zero:
            v0 += _delta(I, h)
            v1 += _delta(J, h)
        hist[v0] = hist.get(v0, 0) + f
        hist[v1] = hist.get(v1, 0) + f
    v = 2 * f * len(I & J)
    hist[v] = hist.get(v, 0) + 1
    return hist


def predicted_classification(q: int, part: QuadraticPartition, I: frozenset[int],
                             J: frozenset[int], include_zero: bool) -> bool:
    """Whether the closed forms predict the target ADS parameters for (I, J)."""
    n, k, lam, t = theorem_parameters(q, include_zero)
    hist = predicted_spectrum(q, part, I, J, include_zero)
    return sorted(hist) == [lam, lam + 1] and hist[lam] == t


def zero_slot_pairs(q: int, part: QuadraticPartition):
    """Ordered parity-pattern pairs whose with-zero construction is predicted
    to reach the target parameters; at |y| = 1 primes this is exactly one slot
    order for each of the eight unordered pairs drawn from both y families."""
    pairs = []
    for cond in ("y1a", "y1b", "ym1a", "ym1b"):
        for (I, J) in theorem12_pairs(cond):
            if (I, J) not in pairs and predicted_classification(q, part, I, J, True):
                pairs.append((I, J))
    return pairs


# ---------------------------------------------------------------------------
# calibration
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Order4Calibration:
    """Outcome of the order-4 triple search against the condition lists.

    matched_* hold the condition names whose list (or, at q = 5, whose union
    of lists) the exhaustive hit set equals; empty when nothing matches,
    which is the expected state at primes with s != 1 and |t| != 1.
    """

    q: int
    partition: QuadraticPartition
    matched_no_zero: tuple[str, ...]
    matched_with_zero: tuple[str, ...]
    unexplained_hits: bool = False

    @property
    def t_signed(self) -> int | None:
        return self.partition.t_signed


def order4_hit_triples(sys: CyclotomicSystem, include_zero: bool) -> list[tuple[int, int, int]]:
    """All ordered distinct triples whose construction reaches the target
    parameters, by exhaustive direct spectra."""
    target = theorem_parameters(sys.q, include_zero)
    hits = []
    for (i, j, l) in permutations(range(4), 3):
        cset = build_order4(sys, Order4Recipe(i, j, l, include_zero))
        cls = classify(distance_spectrum(cset))
        if cls.parameters == target:
            hits.append((i, j, l))
    return hits


def _match_lists(hit_set: set, table: dict) -> tuple[str, ...] | None:
    """Condition names whose lists exactly cover the hit set (singly, or as a
    union of an s1 and a t list when both gates hold at once)."""
    for name, trips in table.items():
        if hit_set == set(trips):
            return (name,)
    for tname in ("t1", "tm1"):
        if hit_set == set(table["s1"]) | set(table[tname]):
            return tuple(sorted(("s1", tname)))
    return None


def match_order4_conditions(sys: CyclotomicSystem) -> Order4Calibration:
    """Run the exhaustive triple search for both zero variants and match the
    hit sets against the condition lists (lenient: no-match is not an error)."""
    if sys.d != 4:
        raise ValueError("order-4 calibration needs an order-4 system")
    part = cyclotomy.quadratic_partitions(sys.q)
    matched = []
    unexplained = False
    for include_zero, table in ((False, COROLLARY1_TRIPLES), (True, COROLLARY2_TRIPLES)):
        hit_set = set(order4_hit_triples(sys, include_zero))
        m = _match_lists(hit_set, table)
        if m is None:
            m = ()
            unexplained = unexplained or bool(hit_set)
        matched.append(m)
    names = set(matched[0]) | set(matched[1])
    if "t1" in names and "tm1" not in names:
        part = replace(part, t_signed=1)
    elif "tm1" in names and "t1" not in names:
        part = replace(part, t_signed=-1)
    return Order4Calibration(q=sys.q, partition=part,
                             matched_no_zero=matched[0],
                             matched_with_zero=matched[1],
                             unexplained_hits=unexplained)


def calibrate_order4(sys: CyclotomicSystem) -> Order4Calibration:
    """Strict calibration at a gated prime (|t| = 1 or s = 1): both zero
    variants must match the same condition names, exactly one t-sign among
    them.  Anything else is a hard error; a gateless prime is a usage error."""
    cal = match_order4_conditions(sys)
    part = cal.partition
    if part.t_abs != 1 and part.s != 1:
        raise ValueError(
            f"q={sys.q} satisfies no order-4 condition (s={part.s}, |t|={part.t_abs})")
    if not cal.matched_no_zero or cal.matched_no_zero != cal.matched_with_zero:
        raise ArithmeticError(
            f"order-4 calibration at q={sys.q}: no-zero matched "
            f"{cal.matched_no_zero}, with-zero matched {cal.matched_with_zero}")
    return cal


def calibrate_order12(sys: CyclotomicSystem) -> QuadraticPartition:
    """Resolved quadratic partition for an order-12 system (delegates)."""
    return cyclotomy.resolve_signs(sys, cyclotomy.quadratic_partitions(sys.q))


def matching_conditions(order: int, part: QuadraticPartition) -> list[str]:
    """Condition names whose gate the calibrated partition satisfies."""
    out = []
    if order == 12:
        if part.x == 1:
            out.append("x1")
        if part.y_signed == 1:
            out += ["y1a", "y1b"]
        if part.y_signed == -1:
            out += ["ym1a", "ym1b"]
    elif order == 4:
        if part.t_signed == 1:
            out.append("t1")
        if part.t_signed == -1:
            out.append("tm1")
        if part.s == 1:
            out.append("s1")
    else:
        raise ValueError("conditions exist for orders 4 and 12 only")
    return out


# ---------------------------------------------------------------------------
# family verification
# ---------------------------------------------------------------------------

@dataclass
class FamilyReport:
    q: int
    order: int
    condition: str
    calibrated_sign: int | None
    recipes: list[dict] = field(default_factory=list)

    @property
    def all_pass(self) -> bool:
        return all(r["pass"] for r in self.recipes)

    def to_dict(self) -> dict:
        return {"q": self.q, "order": self.order, "condition": self.condition,
                "calibrated_sign": self.calibrated_sign, "recipes": self.recipes}


def _classification_dict(cls) -> dict:
    out = {"kind": cls.kind, "n": cls.n, "k": cls.k}
    if cls.lam is not None:
        out["lambda"] = cls.lam
    if cls.t is not None:
        out["t"] = cls.t
    return out


def verify_family(q: int, order: int, condition: str,
                  include_zero: bool | None = None) -> FamilyReport:
    """Build every recipe of a condition, classify it by exact counting, and
    report pass/fail against the target parameter tuple.

    include_zero=None checks both variants.  For order 12 the report also
    cross-checks the closed-form predicted histogram against the counted one
    whenever the pair lies in the closed-form families.
    """
    variants = (False, True) if include_zero is None else (include_zero,)
    if order == 4:
        if q % 8 != 5:
            raise ValueError(f"q={q} is not 5 mod 8")
        sys = cyclotomy.build_classes(q, 4)
        cal = calibrate_order4(sys)
        report = FamilyReport(q=q, order=4, condition=condition,
                              calibrated_sign=cal.partition.t_signed)
        for z in variants:
            target = theorem_parameters(q, z)
            for (i, j, l) in corollary_triples(condition, z):
                cset = build_order4(sys, Order4Recipe(i, j, l, z))
                cls = classify(distance_spectrum(cset))
                report.recipes.append({
                    "i": i, "j": j, "l": l, "include_zero": z,
                    "classification": _classification_dict(cls),
                    "pass": cls.parameters == target,
                })
        return report

    if order == 12:
        if (q - 1) % 12 != 0 or ((q - 1) // 12) % 2 == 0:
            raise ValueError(f"q={q} is not 12f+1 with f odd")
        sys = cyclotomy.build_classes(q, 12)
        part = calibrate_order12(sys)
        report = FamilyReport(q=q, order=12, condition=condition,
                              calibrated_sign=part.y_signed)
        for z in variants:
            target = theorem_parameters(q, z)
            for (I, J) in theorem12_pairs(condition):
                cset = build_order12(sys, Order12Recipe(I, J, z))
                spec = distance_spectrum(cset)
                cls = classify(spec)
                ok = cls.parameters == target
                predicted = predicted_spectrum(q, part, I, J, z)
                entry = {
                    "I": sorted(I), "J": sorted(J), "include_zero": z,
                    "classification": _classification_dict(cls),
                    "predicted_matches_counts": predicted == spec.histogram,
                    "pass": ok,
                }
                report.recipes.append(entry)
        return report

    raise ValueError("order must be 4 or 12")
