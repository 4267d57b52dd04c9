"""Census enumerators: per-pair sheaf counts by support stratum, the closed
generating-function count formulas, and the cuspidal / nilpotent-support /
full-support sub-censuses.

Two fully independent routes are kept apart on purpose:

* the *direct* route walks support strata (m, k, mu) and multiplies
  combinatorial counts computed by integer DP and diagram enumeration;
* the *formula* route extracts coefficients of exact rational products via
  :mod:`sheaf_census.qseries`.

Their agreement over sweeps is the artifact's central correctness check.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import qseries
from .diagrams import (
    SignedYoungDiagram,
    classify,
    diagram,
    enum_lambda,
    enum_lambda_b,
    enum_sigma,
    enum_sigma_b,
    format_diagram,
    in_sigma,
    join,
    mu_t,
    orbit_multiplicity,
    DELTA_NAMES,
)
from .groups import eta, kappa1_data_BDI, pi_size
from .partitions import (
    count_bipartitions,
    count_distinct_odd_partitions,
    count_distinct_partitions,
    count_partitions,
)

LOW_RANK_WARNING = "low-rank pair: outside the stable range (total size < 5)"


# ---------------------------------------------------------------------------
# Irreducible-representation counts of the Hecke algebras at parameter -1
# (all computed by integer DP, never by series expansion)
# ---------------------------------------------------------------------------

def hecke_count(family: str, n: int) -> int:
    """Number of irreducibles for the four Coxeter/Hecke families used here.

    A: symmetric group at parameter -1 (distinct partitions).
    B: type B at equal parameter -1.
    D: type D at parameter -1; the generating series carries constant 1/2
       but the trivial group has one irreducible, so n=0 returns 1.
    B11: type B at unequal parameters (1, -1), counted by partitions.
    """
    if n < 0:
        return 0
    if family == "A":
        return count_distinct_partitions(n)
    if family == "B":
        return sum(count_distinct_partitions(j)
                   * count_distinct_partitions((n - j) // 2)
                   for j in range(n % 2, n + 1, 2))
    if family == "D":
        if n == 0:
            return 1
        c = _mixed_distinct_count(n)
        if c % 2:
            raise ArithmeticError(f"odd two-sided count {c} at n={n}; "
                                  "the halving convention would break")
        return c // 2
    if family == "B11":
        return count_partitions(n)
    raise ValueError(f"unknown Hecke family {family!r}")


@lru_cache(maxsize=None)
def _mixed_distinct_count(n: int) -> int:
    # pairs (distinct-odd partition, distinct partition) with total weight n
    return sum(count_distinct_odd_partitions(j) * count_distinct_partitions(n - j)
               for j in range(n + 1))


def _unequal_parameter_count(n: int) -> int:
    # type B Weyl group at parameters (-1, 1); equals the full two-sided
    # count (no halving), with one irreducible for the trivial group
    if n == 0:
        return 1
    return _mixed_distinct_count(n)


# ---------------------------------------------------------------------------
# Cardinalities of the full-support representation sets
# ---------------------------------------------------------------------------

_THETA_VARIANTS = ("split-B", "split-D", "ind1-B", "ind1-D", "ind2-B", "ind2-D")


def theta_k0_count(variant: str, n: int) -> int:
    """Cardinality of the trivial-central-character module family.

    `split-*` counts the sets attached to the regular semisimple stratum of
    a split pair, `ind1-*`/`ind2-*` the variants induced along the class-1 /
    class-2 Richardson strata; B vs D is the parity of the defining pair.
    """
    if variant not in _THETA_VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    if n < 0:
        return 0
    if variant == "ind1-B":
        h = hecke_count
        return sum(h("B", k) * h("B", n - k) for k in range(n + 1))
    if variant == "ind1-D":
        return sum(_unequal_parameter_count(k) * _unequal_parameter_count(n - k)
                   for k in range(n + 1))
    if n == 0:
        return 1
    if variant in ("split-B", "ind2-B"):
        atom = lambda k: hecke_count("B", k)
        return _paired_count(atom, n, diagonal_weight=2, off_weight=1)
    if variant == "ind2-D":
        return _paired_count(_unequal_parameter_count, n, diagonal_weight=2, off_weight=1)
    # split-D: every interior cell doubles, the middle cell quadruples on the
    # diagonal, and the k=0 cell contributes singly
    hD = lambda k: hecke_count("D", k)
    total = hD(n)
    for m in range(1, (n + 1) // 2):
        total += 2 * hD(m) * hD(n - m)
    if n % 2 == 0:
        h = hD(n // 2)
        total += 2 * (h * (h - 1) // 2) + 4 * h
    return total


def _paired_count(atom, n: int, diagonal_weight: int, off_weight: int) -> int:
    total = 0
    for k in range((n + 1) // 2):
        total += off_weight * atom(k) * atom(n - k)
    if n % 2 == 0:
        h = atom(n // 2)
        total += off_weight * (h * (h - 1) // 2) + diagonal_weight * h
    return total


def theta_k1_count(m: int, t: int) -> int:
    """Cardinality of the nontrivial-central-character module family on the
    (m, t) stratum: eta(m, t) times the distinct-partition count of m."""
    if m < 0:
        return 0
    return eta(m, t) * count_distinct_partitions(m)


# ---------------------------------------------------------------------------
# Census reports
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class OrbitLabel:
    """A diagram plus the decoration naming one orbit over it.

    A given decoration is validated against the orbit multiplicity; census
    emitters always attach decorations where the orbit set splits (the n=n
    family never splits, whatever the diagram's orthogonal class would say).
    """

    diagram: SignedYoungDiagram
    delta: str | None = None

    def __post_init__(self) -> None:
        if self.delta is None:
            return
        mult = orbit_multiplicity(self.diagram) if in_sigma(self.diagram) else 1
        if mult == 1:
            raise ValueError(f"{self.diagram} carries a single orbit")
        if self.delta not in DELTA_NAMES[:mult]:
            raise ValueError(f"decoration {self.delta!r} out of range for "
                             f"multiplicity {mult}")

    def __str__(self) -> str:
        base = format_diagram(self.diagram)
        return f"{base} [{self.delta}]" if self.delta else base


@dataclass(frozen=True)
class StratumEntry:
    """One support stratum with its local-system count."""

    support: OrbitLabel
    m: int
    k: int
    mu: SignedYoungDiagram
    count: int
    family: str

    def __post_init__(self) -> None:
        if self.count <= 0:
            raise ValueError("stratum entries carry positive counts")


@dataclass(frozen=True)
class CensusReport:
    pair: tuple  # ("bdi", p, q) or ("diii", n)
    central: str  # "k0" | "k1"
    entries: tuple[StratumEntry, ...]
    warnings: tuple[str, ...] = ()

    @property
    def total(self) -> int:
        return sum(e.count for e in self.entries)

    def to_json_dict(self) -> dict:
        if self.pair[0] == "bdi":
            pair = {"type": "bdi", "p": self.pair[1], "q": self.pair[2]}
        else:
            pair = {"type": "diii", "n": self.pair[1]}
        return {
            "pair": pair,
            "central": self.central,
            "strata": [
                {
                    "support": format_diagram(e.support.diagram),
                    "delta": e.support.delta,
                    "m": e.m,
                    "k": e.k,
                    "mu": format_diagram(e.mu),
                    "family": e.family,
                    "count": e.count,
                }
                for e in self.entries
            ],
            "total": self.total,
            "warnings": list(self.warnings),
        }


_EMPTY = SignedYoungDiagram()


def _support(m: int, k: int, mu: SignedYoungDiagram) -> SignedYoungDiagram:
    return join(diagram((1, m, m), (2, k, k)) if m or k else _EMPTY, mu)


def census_bdi_k0(p: int, q: int) -> CensusReport:
    """Direct stratum-by-stratum census at the trivial central character.

    Strata are indexed by (m, k, mu) with mu a Richardson diagram of the
    residual signature (or empty when the pair is split down to nothing);
    for even total size only m of the same parity as q occurs.
    """
    if p < 0 or q < 0:
        raise ValueError("signature entries must be nonnegative")
    N = p + q
    b_variant = N % 2 == 1
    entries: list[StratumEntry] = []
    for m in range(min(p, q) + 1):
        if N % 2 == 0 and (m - q) % 2:
            continue
        for k in range((min(p, q) - m) // 2 + 1):
            p1, q1 = p - m - 2 * k, q - m - 2 * k
            pk = count_partitions(k)
            if p1 == 0 and q1 == 0:
                support = _support(m, k, _EMPTY)
                if m > 0:
                    count = theta_k0_count("split-D", m) * pk
                    entries.append(StratumEntry(OrbitLabel(support), m, k,
                                                _EMPTY, count, "empty-mu"))
                else:
                    for delta in DELTA_NAMES:
                        entries.append(StratumEntry(OrbitLabel(support, delta),
                                                    m, k, _EMPTY, pk, "empty-mu"))
                continue
            for mu in enum_sigma_b(p1, q1):
                cls = classify(mu)
                pi = pi_size(mu)
                support = _support(m, k, mu)
                if cls.index == 1:
                    f1 = theta_k0_count("ind1-B" if b_variant else "ind1-D", m)
                    entries.append(StratumEntry(OrbitLabel(support), m, k, mu,
                                                f1 * pk * pi, "sigma-b1"))
                elif m > 0:
                    f2 = theta_k0_count("ind2-B" if b_variant else "ind2-D", m)
                    entries.append(StratumEntry(OrbitLabel(support), m, k, mu,
                                                f2 * pk * pi, "sigma-b2"))
                else:
                    for delta in DELTA_NAMES[:2]:
                        entries.append(StratumEntry(OrbitLabel(support, delta),
                                                    m, k, mu, pk * pi, "sigma-b2"))
    warnings = (LOW_RANK_WARNING,) if N < 5 else ()
    return CensusReport(("bdi", p, q), "k0", tuple(entries), warnings)


def census_bdi_k1(p: int, q: int) -> CensusReport:
    """Direct census at the nontrivial central character: strata (m, k) with
    2m + 4k = N - t^2 over the uniform staircase, empty when N < t^2."""
    if p < 0 or q < 0:
        raise ValueError("signature entries must be nonnegative")
    N, t = p + q, p - q
    entries: list[StratumEntry] = []
    D = N - t * t
    if D >= 0:
        staircase = mu_t(t)
        for k in range(D // 4 + 1):
            m = (D - 4 * k) // 2
            base = count_bipartitions(k)
            if base == 0:
                continue
            support = _support(m, k, staircase)
            if m > 0:
                count = base * eta(m, t) * count_distinct_partitions(m)
                entries.append(StratumEntry(OrbitLabel(support), m, k,
                                            staircase, count, "kappa1-staircase"))
            else:
                mult = orbit_multiplicity(support)
                if mult == 1:
                    entries.append(StratumEntry(OrbitLabel(support), m, k, staircase,
                                                base * eta(0, t), "kappa1-staircase"))
                else:
                    for delta in DELTA_NAMES[:mult]:
                        entries.append(StratumEntry(OrbitLabel(support, delta), m, k,
                                                    staircase, base, "kappa1-staircase"))
    warnings = (LOW_RANK_WARNING,) if N < 5 else ()
    return CensusReport(("bdi", p, q), "k1", tuple(entries), warnings)


def census_diii(n: int) -> tuple[CensusReport, CensusReport]:
    """Both central-character censuses for the equal-signature pair."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    entries: list[StratumEntry] = []
    for k in range(n // 2 + 1):
        residual = n - 2 * k
        pk = count_partitions(k)
        mus = enum_lambda_b(residual) if residual else [_EMPTY]
        for mu in mus:
            support = join(diagram((1, 2 * k, 2 * k)) if k else _EMPTY, mu)
            entries.append(StratumEntry(OrbitLabel(support), 2 * k, 0, mu, pk, "diii"))
    warnings = (LOW_RANK_WARNING,) if 2 * n < 5 else ()
    k0 = CensusReport(("diii", n), "k0", tuple(entries), warnings)

    k1_entries: list[StratumEntry] = []
    if n >= 2 and n % 2 == 0:
        support = diagram((1, n, n))
        k1_entries.append(StratumEntry(OrbitLabel(support), n, 0, _EMPTY,
                                       count_bipartitions(n // 2), "diii"))
    k1 = CensusReport(("diii", n), "k1", tuple(k1_entries), warnings)
    return k0, k1


# ---------------------------------------------------------------------------
# Closed count formulas (series route)
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _k0_bases(order: int):
    odd_all = qseries.prod_series(order, (1, 1, 0, 1), (-1, 1, 0, -3))
    even_sq = qseries.prod_series(order, (1, 2, 0, 2), (-1, 2, 0, -3))
    part_even = qseries.prod_series(order, (-1, 2, 0, -1))
    return odd_all, even_sq, part_even


def count_formula_k0(p: int, q: int) -> int:
    """Coefficient extraction for the trivial-character total; inputs with
    p < q are swapped first (the census is symmetric under sign swap)."""
    if p < q:
        p, q = q, p
    t = p - q
    order = q
    base1, base2, base3 = _k0_bases(order)
    if t == 0:
        term1 = base1.scale(Fraction(1, 4))
        term2 = base2.scale(Fraction(3, 2))
        total = term1 + term2 + base3.scale(Fraction(9, 4))
    else:
        term1 = base1.scale(Fraction(1, 2))
        if t <= order:
            term1 = term1.mul_binomial(1, t, -1)
        term2 = base2.scale(Fraction(3, 2))
        if t <= order:
            term2 = term2.mul_binomial(1, t, 1)
        if 2 * t <= order:
            term2 = term2.mul_binomial(1, 2 * t, -1)
        total = term1 + term2
    c = total.coeff(q)
    if c.denominator != 1:
        raise ArithmeticError(f"non-integer count {c} at ({p},{q})")
    return int(c)


@lru_cache(maxsize=None)
def _k1_base(order: int) -> qseries.FormalSeries:
    return qseries.prod_series(order, (-1, 4, 0, -1), (-1, 2, 0, -1))


def count_formula_k1(p: int, q: int) -> int:
    """eta times a coefficient of 1/((x^4-products)(x^2-products))."""
    t = p - q
    D = p + q - t * t
    if D < 0:
        return 0
    c = _k1_base(D).coeff(D)
    if c.denominator != 1:
        raise ArithmeticError(f"non-integer count {c} at ({p},{q})")
    return eta(D // 2, t) * int(c)


# ---------------------------------------------------------------------------
# Sub-censuses and aggregates
# ---------------------------------------------------------------------------

def cuspidal_counts(p: int, q: int) -> tuple[int, int]:
    """(trivial, nontrivial) central-character cuspidal counts.

    The trivial-character part is nonzero only for split pairs, where it
    equals the full-support count; the nontrivial part is the k=0 stratum
    count, nonzero whenever N >= t^2.
    """
    N, t = p + q, p - q
    if abs(t) <= 1:
        variant = "split-B" if N % 2 else "split-D"
        k0 = theta_k0_count(variant, min(p, q))
    else:
        k0 = 0
    D = N - t * t
    k1 = theta_k1_count(D // 2, t) if D >= 0 else 0
    return k0, k1


def nilpotent_support_counts(p: int, q: int) -> tuple[int, int]:
    """(trivial, nontrivial) counts of sheaves supported on the nilpotent
    cone itself: class-1 Richardson diagrams contribute their character
    count once, class-2 twice (two orbits each); the nontrivial part lives
    only on the exact staircase pair."""
    b1, b2 = richardson_pi_sums(p, q)
    t = p - q
    k1 = eta(0, t) if p + q == t * t else 0
    return b1 + 2 * b2, k1


def full_support_counts(p: int, q: int) -> tuple[int, int]:
    """Counts of sheaves with full support; nonzero only for split pairs."""
    N, t = p + q, p - q
    if abs(t) > 1:
        return 0, 0
    k0 = theta_k0_count("split-B" if N % 2 else "split-D", min(p, q))
    k1 = theta_k1_count((N - t * t) // 2, t)
    return k0, k1


@lru_cache(maxsize=None)
def richardson_pi_sums(p: int, q: int) -> tuple[int, int]:
    """Sums of character counts over class-1 and class-2 Richardson diagrams."""
    b1 = b2 = 0
    for mu in enum_sigma_b(p, q):
        if classify(mu).index == 1:
            b1 += pi_size(mu)
        else:
            b2 += pi_size(mu)
    return b1, b2


def b_tilde(p: int, q: int) -> int:
    """Weighted Richardson count 2*b1 + b2 (the disconnected-group census)."""
    b1, b2 = richardson_pi_sums(p, q)
    return 2 * b1 + b2


def aggregate_T(N: int) -> tuple[int, int]:
    """Total trivial-character counts over all pairs p+q=N, by the formula
    route and by the direct census route."""
    t0 = sum(count_formula_k0(p, N - p) for p in range(N + 1))
    tprime = sum(census_bdi_k0(p, N - p).total for p in range(N + 1))
    return t0, tprime


def kappa0_orbit_sum(p: int, q: int) -> int:
    """Third route for the trivial character: orbits weighted by their
    component-group character counts."""
    return sum(orbit_multiplicity(d) * 2 ** classify(d).r for d in enum_sigma(p, q))


def kappa1_orbit_sum(p: int, q: int) -> int:
    """Third route for the nontrivial character, via the case table for the
    double cover's component groups."""
    return sum(orbit_multiplicity(d) * kappa1_data_BDI(d).count
               for d in enum_sigma(p, q))


def sigma23_r_sum(p: int, q: int) -> int:
    """Sum of 2^r over the class-2 and class-3 diagrams of the pair."""
    return sum(2 ** classify(d).r for d in enum_sigma(p, q)
               if classify(d).index in (2, 3))


def diii_closure_total(n: int) -> int:
    """Orbit count |Lambda^{n,n}|; each orbit carries exactly one
    trivial-character local system."""
    return len(enum_lambda(n))


# ---------------------------------------------------------------------------
# Subset filtering of reports (shared by the CLI)
# ---------------------------------------------------------------------------

SUBSETS = ("all", "cuspidal", "nilpotent", "full")


def subset_report(report: CensusReport, subset: str) -> CensusReport:
    """Restrict a census report to the cuspidal / nilpotent-support /
    full-support strata."""
    if subset not in SUBSETS:
        raise ValueError(f"unknown subset {subset!r}")
    if subset == "all":
        return report
    pred = _subset_predicate(report, subset)
    entries = tuple(e for e in report.entries if pred(e))
    return CensusReport(report.pair, report.central, entries, report.warnings)


def _subset_predicate(report: CensusReport, subset: str):
    kind = report.pair[0]
    if kind == "bdi":
        _, p, q = report.pair
        N, t = p + q, p - q
        full_m = (N - t * t) // 2 if abs(t) <= 1 else None
        if report.central == "k0":
            if subset == "nilpotent":
                return lambda e: e.m == 0 and e.k == 0 and e.family in ("sigma-b1", "sigma-b2")
            # cuspidal and full coincide at the trivial character
            return lambda e: full_m is not None and e.k == 0 and e.m == full_m
        if subset == "nilpotent":
            return lambda e: e.m == 0 and e.k == 0
        if subset == "cuspidal":
            return lambda e: e.k == 0
        return lambda e: full_m is not None and e.k == 0 and e.m == full_m
    n = report.pair[1]
    if report.central == "k0":
        if subset == "nilpotent":
            return lambda e: e.m == 0
        if subset == "full":
            return lambda e: e.m == 2 * (n // 2)
        return lambda e: False  # no cuspidal sheaves on this family
    if subset == "full":
        return lambda e: True
    return lambda e: False


def expected_subset_total(report: CensusReport, subset: str) -> int:
    """Independent expected total for --check: the closed formulas."""
    kind = report.pair[0]
    central = 0 if report.central == "k0" else 1
    if kind == "bdi":
        _, p, q = report.pair
        if subset == "all":
            return count_formula_k0(p, q) if central == 0 else count_formula_k1(p, q)
        table = {"cuspidal": cuspidal_counts, "nilpotent": nilpotent_support_counts,
                 "full": full_support_counts}
        return table[subset](p, q)[central]
    n = report.pair[1]
    if central == 1:
        if subset in ("all", "full"):
            return count_bipartitions(Fraction(n, 2))
        return 0
    if subset == "all":
        return diii_closure_total(n)
    if subset == "nilpotent":
        return len(enum_lambda_b(n)) if n else 1
    if subset == "full":
        return count_partitions(n // 2)
    return 0
