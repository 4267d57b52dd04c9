"""Signed Young diagrams and the orbit classification sets.

A signed Young diagram groups rows by length: each group stores the common
row length together with how many rows start with + and how many with -.
Boxes within a row alternate in sign, so a +row of length L holds ceil(L/2)
plus boxes and floor(L/2) minus boxes, and conversely for a -row.

The sets implemented here:

* ``enum_sigma(p, q)``    -- orthogonal-splitting diagrams: even lengths have
  equally many +rows and -rows; signature (p, q).
* ``enum_sigma_b(p, q)``  -- the Richardson subset: all lengths odd, rows of
  equal length share one starting sign, and consecutive rows pair up so that
  (sign bit + half-length) has constant parity inside each pair. Pairing
  starts at the second row when the total box count is odd, at the first row
  when it is even.
* ``enum_lambda(n)`` / ``enum_lambda_b(n)`` -- the n=n split variants: odd
  lengths have matched row counts, even lengths have even counts per sign
  (with single-sign groups and matched counts at most 1 for the ``_b`` set).
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

from .partitions import BiPartition, Partition, _gen_partitions


@dataclass(frozen=True)
class SignedYoungDiagram:
    """Grouped rows (length, plus-row count, minus-row count), lengths
    strictly decreasing, every group nonempty."""

    rows: tuple[tuple[int, int, int], ...] = ()

    def __post_init__(self) -> None:
        prev = None
        for length, plus, minus in self.rows:
            if length < 1:
                raise ValueError("row lengths must be positive")
            if plus < 0 or minus < 0 or plus + minus == 0:
                raise ValueError("each length group needs at least one row")
            if prev is not None and length >= prev:
                raise ValueError("row lengths must be strictly decreasing")
            prev = length

    @property
    def size(self) -> int:
        return sum(length * (plus + minus) for length, plus, minus in self.rows)

    @property
    def is_empty(self) -> bool:
        return not self.rows

    def signature(self) -> tuple[int, int]:
        p = q = 0
        for length, plus, minus in self.rows:
            up, down = (length + 1) // 2, length // 2
            p += plus * up + minus * down
            q += plus * down + minus * up
        return p, q

    def parts(self) -> list[int]:
        """Row lengths with multiplicity, decreasing."""
        out: list[int] = []
        for length, plus, minus in self.rows:
            out.extend([length] * (plus + minus))
        return out

    def sign_swap(self) -> SignedYoungDiagram:
        return SignedYoungDiagram(tuple((l, m, p) for l, p, m in self.rows))

    def all_parts_odd(self) -> bool:
        return all(length % 2 == 1 for length, _, _ in self.rows)

    def all_parts_even(self) -> bool:
        return all(length % 2 == 0 for length, _, _ in self.rows)

    def __str__(self) -> str:
        return format_diagram(self)


def format_diagram(d: SignedYoungDiagram) -> str:
    """Canonical text form: groups `<length><sign>[^<mult>]`, e.g. `3- 1+^2`;
    a group carrying both signs prints as two tokens; empty prints as `0`."""
    if d.is_empty:
        return "0"
    toks = []
    for length, plus, minus in d.rows:
        if plus:
            toks.append(f"{length}+" + (f"^{plus}" if plus > 1 else ""))
        if minus:
            toks.append(f"{length}-" + (f"^{minus}" if minus > 1 else ""))
    return " ".join(toks)


_TOKEN = re.compile(r"^(\d+)([+-])(?:\^(\d+))?$")


def parse_diagram(text: str) -> SignedYoungDiagram:
    """Parse the canonical format; grouped and ungrouped tokens both accepted
    (`1+ 1+` and `1+^2` are the same diagram)."""
    text = text.strip()
    if text == "0" or text == "":
        return SignedYoungDiagram()
    counts: dict[int, list[int]] = {}
    for tok in text.split():
        m = _TOKEN.match(tok)
        if not m:
            raise ValueError(f"bad diagram token {tok!r}")
        length, sign, mult = int(m.group(1)), m.group(2), int(m.group(3) or 1)
        if mult < 1:
            raise ValueError(f"bad multiplicity in token {tok!r}")
        entry = counts.setdefault(length, [0, 0])
        entry[0 if sign == "+" else 1] += mult
    rows = tuple((length, counts[length][0], counts[length][1])
                 for length in sorted(counts, reverse=True))
    return SignedYoungDiagram(rows)


def diagram(*groups: tuple[int, int, int]) -> SignedYoungDiagram:
    """Build a diagram from (length, plus, minus) groups in any order."""
    merged: dict[int, list[int]] = {}
    for length, plus, minus in groups:
        entry = merged.setdefault(length, [0, 0])
        entry[0] += plus
        entry[1] += minus
    rows = tuple((length, merged[length][0], merged[length][1])
                 for length in sorted(merged, reverse=True)
                 if merged[length][0] + merged[length][1] > 0)
    return SignedYoungDiagram(rows)


def join(d1: SignedYoungDiagram, d2: SignedYoungDiagram) -> SignedYoungDiagram:
    """Multiset union of rows, regrouped by length."""
    return diagram(*(d1.rows + d2.rows))


def in_sigma(d: SignedYoungDiagram) -> bool:
    """Membership in the orthogonal classification set: even lengths must
    carry equally many +rows and -rows."""
    return all(plus == minus for length, plus, minus in d.rows if length % 2 == 0)


def in_lambda(d: SignedYoungDiagram) -> bool:
    """Odd lengths matched, even lengths with both row counts even."""
    for length, plus, minus in d.rows:
        if length % 2 == 1 and plus != minus:
            return False
        if length % 2 == 0 and (plus % 2 or minus % 2):
            return False
    return True


@dataclass(frozen=True)
class DiagramClass:
    """The (a, b) invariants, the class index 1|2|3, and the 2-group rank r."""

    a: int
    b: int
    index: int
    r: int


def classify(d: SignedYoungDiagram) -> DiagramClass:
    if not in_sigma(d):
        raise ValueError(f"{d} is not in the orthogonal classification set")
    a = b = 0
    for length, plus, minus in d.rows:
        if length % 4 == 1:
            a += plus > 0
            b += minus > 0
        elif length % 4 == 3:
            a += minus > 0
            b += plus > 0
    if a > 0 and b > 0:
        return DiagramClass(a, b, 1, a + b - 2)
    if a + b > 0:
        return DiagramClass(a, b, 2, a + b - 1)
    return DiagramClass(0, 0, 3, 0)


def orbit_multiplicity(d: SignedYoungDiagram) -> int:
    """Number of orbits lying over the diagram: 1, 2, or 4 by class."""
    return {1: 1, 2: 2, 3: 4}[classify(d).index]


DELTA_NAMES = ("I", "II", "III", "IV")


def _sign_splits(mult: int, length: int):
    """All (plus, minus) splits of a group, subject to even lengths being
    balanced; plus descending for determinism."""
    if length % 2 == 0:
        if mult % 2 == 0:
            yield mult // 2, mult // 2
        return
    for plus in range(mult, -1, -1):
        yield plus, mult - plus


@lru_cache(maxsize=64)
def _sigma_by_signature(n: int) -> dict[tuple[int, int], tuple[SignedYoungDiagram, ...]]:
    table: dict[tuple[int, int], list[SignedYoungDiagram]] = {}
    for partition in _gen_partitions(n, n):
        groups: list[tuple[int, int]] = []
        for length in partition:
            if groups and groups[-1][0] == length:
                groups[-1] = (length, groups[-1][1] + 1)
            else:
                groups.append((length, 1))
        for d in _assign_signs(groups, 0, ()):
            table.setdefault(d.signature(), []).append(d)
    return {sig: tuple(ds) for sig, ds in table.items()}


def enum_sigma(p: int, q: int) -> list[SignedYoungDiagram]:
    """All diagrams of the orthogonal set with signature (p, q)."""
    if p < 0 or q < 0:
        raise ValueError("signature entries must be nonnegative")
    return list(_sigma_by_signature(p + q).get((p, q), ()))


def _assign_signs(groups, i, acc):
    if i == len(groups):
        yield SignedYoungDiagram(acc)
        return
    length, mult = groups[i]
    for plus, minus in _sign_splits(mult, length):
        yield from _assign_signs(groups, i + 1, acc + ((length, plus, minus),))


def _odd_grouped_candidates(n: int):
    """Grouped all-odd diagrams of total size n with one sign per group."""
    for partition in _gen_partitions(n, n if n % 2 else n - 1 if n else 0):
        if any(part % 2 == 0 for part in partition):
            continue
        groups: list[tuple[int, int]] = []
        for length in partition:
            if groups and groups[-1][0] == length:
                groups[-1] = (length, groups[-1][1] + 1)
            else:
                groups.append((length, 1))
        for signs in _sign_vectors(len(groups)):
            yield SignedYoungDiagram(tuple(
                (length, mult if s == 0 else 0, 0 if s == 0 else mult)
                for (length, mult), s in zip(groups, signs)))


def _sign_vectors(k: int):
    for bits in range(1 << k):
        yield tuple((bits >> (k - 1 - j)) & 1 for j in range(k))


def _row_parities(d: SignedYoungDiagram) -> list[int]:
    """Per individual row, the parity of sign bit + half-length, top down."""
    out = []
    for length, plus, minus in d.rows:
        eps = 0 if plus else 1
        mu = (length - 1) // 2
        out.extend([(eps + mu) % 2] * (plus + minus))
    return out


def is_sigma_b(d: SignedYoungDiagram, literal_top_sign: bool = False) -> bool:
    """Richardson-set membership test, intrinsic to the diagram.

    The operative condition pairs consecutive rows (starting from the second
    row for odd total size, from the first for even) and requires constant
    parity of (sign bit + half-length) within each pair. The
    ``literal_top_sign`` flag additionally enforces the top-row sign
    congruence epsilon_1 = min(p, q) mod 2; that stricter reading fails the
    series cross-checks and is kept only for comparison.
    """
    if d.is_empty:
        return False
    if not d.all_parts_odd():
        return False
    for length, plus, minus in d.rows:
        if plus and minus:
            return False
    parities = _row_parities(d)
    n = d.size
    start = 1 if n % 2 else 0
    for i in range(start, len(parities) - 1, 2):
        if parities[i] != parities[i + 1]:
            return False
    if literal_top_sign and n % 2:
        p, q = d.signature()
        eps1 = 0 if d.rows[0][1] else 1
        if eps1 % 2 != min(p, q) % 2:
            return False
    return True


@lru_cache(maxsize=None)
def _sigma_b_cache(p: int, q: int, literal: bool) -> tuple[SignedYoungDiagram, ...]:
    return tuple(d for d in _odd_grouped_candidates(p + q)
                 if d.signature() == (p, q) and is_sigma_b(d, literal))


def enum_sigma_b(p: int, q: int, literal_top_sign: bool = False) -> list[SignedYoungDiagram]:
    """Members of the Richardson subset with signature (p, q)."""
    if p < 0 or q < 0:
        raise ValueError("signature entries must be nonnegative")
    return list(_sigma_b_cache(p, q, literal_top_sign))


def enum_lambda(n: int) -> list[SignedYoungDiagram]:
    """All diagrams of size 2n with odd lengths matched and even lengths
    carrying even per-sign row counts (the signature is forced to (n, n))."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return [SignedYoungDiagram()]
    out = []
    for partition in _gen_partitions(2 * n, 2 * n):
        groups: list[tuple[int, int]] = []
        for length in partition:
            if groups and groups[-1][0] == length:
                groups[-1] = (length, groups[-1][1] + 1)
            else:
                groups.append((length, 1))
        if any(mult % 2 for _, mult in groups):
            continue
        out.extend(_assign_lambda_signs(groups, 0, ()))
    return out


def _assign_lambda_signs(groups, i, acc):
    if i == len(groups):
        yield SignedYoungDiagram(acc)
        return
    length, mult = groups[i]
    if length % 2 == 1:
        yield from _assign_lambda_signs(groups, i + 1, acc + ((length, mult // 2, mult // 2),))
    else:
        for plus in range(mult, -1, -2):
            yield from _assign_lambda_signs(groups, i + 1, acc + ((length, plus, mult - plus),))


def in_lambda_b(d: SignedYoungDiagram) -> bool:
    """Odd lengths with exactly one row of each sign; even lengths single-signed."""
    for length, plus, minus in d.rows:
        if length % 2 == 1 and not (plus == minus == 1):
            return False
        if length % 2 == 0 and plus * minus != 0:
            return False
    return in_lambda(d)


def enum_lambda_b(n: int) -> list[SignedYoungDiagram]:
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return [SignedYoungDiagram()]
    return [d for d in enum_lambda(n) if in_lambda_b(d)]


def mu_t(t: int) -> SignedYoungDiagram:
    """The uniform-sign staircase of odd lengths 2|t|-1, ..., 3, 1; empty at 0."""
    if t == 0:
        return SignedYoungDiagram()
    sign_plus = t > 0
    rows = tuple((length, 1 if sign_plus else 0, 0 if sign_plus else 1)
                 for length in range(2 * abs(t) - 1, 0, -2))
    return SignedYoungDiagram(rows)


def diii_kappa1_bijection(d: SignedYoungDiagram) -> BiPartition:
    """The explicit pairing of all-even diagrams with bipartitions of size/4:
    a group (2m)^{2p}_+(2m)^{2q}_- maps to m^p in the first slot and m^q in
    the second."""
    first: list[int] = []
    second: list[int] = []
    for length, plus, minus in d.rows:
        if length % 2:
            raise ValueError(f"{d} has an odd row length")
        if plus % 2 or minus % 2:
            raise ValueError(f"{d} has odd per-sign multiplicities")
        first.extend([length // 2] * (plus // 2))
        second.extend([length // 2] * (minus // 2))
    return BiPartition(Partition(tuple(first)), Partition(tuple(second)))
