"""Numerical shadows of centralizer component groups.

Only cardinalities, ranks, and representation counts/dimensions are modelled;
no group elements or presentations. The central-character-odd ("kappa1")
representation data follows the case tables for the double cover, and the
eta constant drives every kappa1 count downstream.
"""
from __future__ import annotations

from dataclasses import dataclass

from .diagrams import SignedYoungDiagram, classify, in_lambda, in_sigma, is_sigma_b, mu_t


@dataclass(frozen=True)
class GroupDescriptor:
    """kind: trivial | elementary-abelian | central-extension-by-Z2;
    rank is that of the 2-group quotient, so the order is 2^rank for the
    first two kinds and 2^(rank+1) for an extension."""

    kind: str
    rank: int
    label: str

    @property
    def order(self) -> int:
        if self.kind == "central-extension-by-Z2":
            return 2 ** (self.rank + 1)
        return 2 ** self.rank


@dataclass(frozen=True)
class Kappa1Data:
    """Count and common dimension of the kappa1-irreducibles; dim is None
    when the count is 0."""

    count: int
    dim: int | None

    def __post_init__(self) -> None:
        if self.count < 0:
            raise ValueError("count must be nonnegative")
        if self.count > 0 and (self.dim is None or self.dim < 1):
            raise ValueError("nonzero count needs a positive dimension")


def component_group_barK(d: SignedYoungDiagram) -> GroupDescriptor:
    """Component group downstairs: elementary abelian of rank r."""
    r = classify(d).r
    if r == 0:
        return GroupDescriptor("trivial", 0, "1")
    return GroupDescriptor("elementary-abelian", r, f"(Z/2)^{r}")


def _pair_parity_of(d: SignedYoungDiagram) -> str:
    p, q = d.signature()
    if (p + q) % 2:
        return "odd"
    return "even-outer" if p % 2 else "even-inner"


def kappa1_data_BDI(d: SignedYoungDiagram, pair_parity: str | None = None) -> Kappa1Data:
    """Count/dimension of kappa1-irreducibles of the component group upstairs.

    pair_parity is one of 'odd', 'even-outer', 'even-inner'; when omitted it
    is derived from the signature (outer means both signature entries odd).
    """
    if not in_sigma(d):
        raise ValueError(f"{d} is not in the orthogonal classification set")
    derived = _pair_parity_of(d)
    if pair_parity is None:
        pair_parity = derived
    elif pair_parity != derived:
        raise ValueError(f"pair parity {pair_parity!r} inconsistent with signature "
                         f"{d.signature()} (expected {derived!r})")
    for length, plus, minus in d.rows:
        if length % 2 == 1 and (plus >= 2 or minus >= 2):
            return Kappa1Data(0, None)
    cls = classify(d)
    r = cls.r
    if pair_parity == "odd":
        if cls.index == 1:
            return Kappa1Data(2, 2 ** ((r - 1) // 2))
        if cls.index == 2:
            return Kappa1Data(1, 2 ** (r // 2))
        raise ValueError("class 3 cannot occur for odd total size")
    if pair_parity == "even-outer":
        return Kappa1Data(1, 2 ** (r // 2))
    if cls.index == 1:
        return Kappa1Data(4, 2 ** ((r - 2) // 2))
    if cls.index == 2:
        return Kappa1Data(2, 2 ** ((r - 1) // 2))
    return Kappa1Data(1, 2 ** (r // 2))


def kappa1_data_DIII(d: SignedYoungDiagram) -> Kappa1Data:
    """(1, 1) exactly when every row length is even (vacuously for the empty
    diagram), else no kappa1-irreducibles."""
    if not in_lambda(d):
        raise ValueError(f"{d} is not in the equal-signature classification set")
    if d.all_parts_even():
        return Kappa1Data(1, 1)
    return Kappa1Data(0, None)


def eta(m: int, t: int) -> int:
    """The multiplicity constant: 2 for odd t; for even t, 4 when m and t/2
    have equal parity and 1 otherwise."""
    if t % 2:
        return 2
    return 4 if m % 2 == (t // 2) % 2 else 1


def imt_descriptor(m: int, t: int) -> tuple[GroupDescriptor, Kappa1Data]:
    """Isotropy data on the dual stratum indexed by (m, t), |t| >= 2.

    For m >= 1 the group is a 2-variable Clifford-type extension times an
    elementary abelian factor; its kappa1 part has 2^(m-1) irreducibles of
    dimension 2^((|t|-1)/2) for odd t and 2^m of dimension 2^((|t|-2)/2) for
    even t. For m = 0 it is the component group of the staircase orbit.
    """
    at = abs(t)
    if at < 2:
        raise ValueError("|t| >= 2 required; split pairs take the other path")
    if m < 0:
        raise ValueError("m must be nonnegative")
    if m == 0:
        rank = at - 2
        desc = GroupDescriptor("central-extension-by-Z2", rank,
                               f"A({mu_t(t)})")
        data = kappa1_data_BDI(mu_t(t))
        return desc, data
    rank = at + m - 2
    desc = GroupDescriptor("central-extension-by-Z2", rank,
                           f"Gamma_{at} x (Z/2)^{m - 1}")
    if t % 2:
        data = Kappa1Data(2 ** (m - 1), 2 ** ((at - 1) // 2))
    else:
        data = Kappa1Data(2 ** m, 2 ** ((at - 2) // 2))
    return desc, data


def stabilizer_type(m: int, t: int) -> tuple[int, str]:
    """(number of orbits of the type-B Weyl group on the kappa1-irreducibles,
    stabilizer shape): one orbit with stabilizer S_m when eta is 1, one orbit
    with stabilizer S_m extended by an involution when eta is 2, two orbits
    each with the extended stabilizer when eta is 4."""
    if m < 1 or abs(t) < 2:
        raise ValueError("need m >= 1 and |t| >= 2")
    e = eta(m, t)
    if e == 1:
        return 1, "S_m"
    if e == 2:
        return 1, "S_m x <tau>"
    return 2, "S_m x <tau>"


def _grouped_odd(d: SignedYoungDiagram) -> list[tuple[int, int, int]]:
    """(half-length, multiplicity, sign bit) per group, lengths decreasing."""
    out = []
    for length, plus, minus in d.rows:
        eps = 0 if plus else 1
        out.append(((length - 1) // 2, plus + minus, eps))
    return out


def omega_set(d: SignedYoungDiagram) -> frozenset[int]:
    """Indices j (1-based, over length groups) with an even tail row count
    and, past the first group, either a half-length gap of at least 2 or an
    equal sign bit with the previous group."""
    if not is_sigma_b(d):
        raise ValueError(f"{d} is not in the Richardson subset")
    groups = _grouped_odd(d)
    s = len(groups)
    tail = 0
    tails = [0] * (s + 1)
    for j in range(s, 0, -1):
        tail += groups[j - 1][1]
        tails[j] = tail
    out = set()
    for j in range(1, s + 1):
        if tails[j] % 2:
            continue
        if j >= 2:
            mu_prev, _, eps_prev = groups[j - 2]
            mu_j, _, eps_j = groups[j - 1]
            if not (mu_prev >= mu_j + 2 or eps_prev == eps_j):
                continue
        out.add(j)
    return frozenset(out)


def l_of(d: SignedYoungDiagram) -> int:
    return len(omega_set(d))


def pi_size(d: SignedYoungDiagram, n_parity: int | None = None) -> int:
    """Number of admissible component-group characters on the Richardson
    orbit: 2^(l-1) / 2^l for classes 1/2 when the total size is odd, halved
    again when it is even. A negative exponent signals an upstream bug."""
    cls = classify(d)
    if cls.index not in (1, 2):
        raise ValueError("Richardson diagrams are never of class 3")
    parity = d.size % 2
    if n_parity is not None and n_parity % 2 != parity:
        raise ValueError(f"parity flag {n_parity} inconsistent with size {d.size}")
    l = l_of(d)
    exponent = l - (1 if cls.index == 1 else 0) - (1 if parity == 0 else 0)
    if exponent < 0:
        raise ValueError(f"negative character-count exponent for {d}; "
                         "upstream classification is inconsistent")
    return 2 ** exponent


def count_sign_characters(d: SignedYoungDiagram) -> int:
    """Independent oracle for class-2 Richardson diagrams: enumerate all sign
    vectors on the s-1 adjacent-pair generators and keep those trivial
    outside the admissible set."""
    cls = classify(d)
    if cls.index != 2:
        raise ValueError("direct character enumeration applies to class 2 only")
    groups = _grouped_odd(d)
    s = len(groups)
    omega = omega_set(d)
    count = 0
    for bits in range(1 << (s - 1)):
        ok = True
        for r in range(1, s):
            value = (bits >> (r - 1)) & 1
            if value and (r + 1) not in omega:
                ok = False
                break
        if ok:
            count += 1
    return count
