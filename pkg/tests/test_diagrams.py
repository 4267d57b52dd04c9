"""Diagram enumeration against brute-force oracles and the structural
invariants (sign swap, parity of the invariants, staircase signatures)."""
import itertools

import pytest
from hypothesis import given, settings, strategies as st

from sheaf_census import diagrams as dg
from sheaf_census.partitions import count_bipartitions, enum_partitions


def brute_sigma(p, q):
    """Oracle: assign signs row by row over raw partitions and regroup."""
    out = set()
    for part in enum_partitions(p + q):
        rows = part.parts
        for signs in itertools.product("+-", repeat=len(rows)):
            counts = {}
            for length, sign in zip(rows, signs):
                entry = counts.setdefault(length, [0, 0])
                entry[0 if sign == "+" else 1] += 1
            if any(length % 2 == 0 and c[0] != c[1] for length, c in counts.items()):
                continue
            d = dg.diagram(*((length, c[0], c[1]) for length, c in counts.items()))
            if d.signature() == (p, q):
                out.add(d)
    return out


def test_signature_examples():
    assert dg.parse_diagram("5+").signature() == (3, 2)
    assert dg.parse_diagram("2+").signature() == (1, 1)
    assert dg.parse_diagram("2-").signature() == (1, 1)
    assert dg.parse_diagram("3- 1+ 1+").signature() == (3, 2)


def test_enum_sigma_examples():
    found = {str(d) for d in dg.enum_sigma(3, 2)}
    assert found == {"5+", "3+ 1+ 1-", "3- 1+^2", "2+ 2- 1+", "1+^3 1-^2"}
    assert dg.enum_sigma(0, 0) == [dg.SignedYoungDiagram()]
    # value fixed by the brute-force oracle below
    assert {str(d) for d in dg.enum_sigma(2, 1)} == {"3+", "1+^2 1-"}


def test_enum_sigma_against_bruteforce():
    for p in range(6):
        for q in range(6):
            assert set(dg.enum_sigma(p, q)) == brute_sigma(p, q), (p, q)


def test_classify_examples():
    c = dg.classify(dg.parse_diagram("5+"))
    assert (c.a, c.b, c.index, c.r) == (1, 0, 2, 0)
    c = dg.classify(dg.parse_diagram("1+^3 1-^2"))
    assert (c.a, c.b, c.index, c.r) == (1, 1, 1, 0)
    c = dg.classify(dg.SignedYoungDiagram())
    assert (c.a, c.b, c.index, c.r) == (0, 0, 3, 0)
    with pytest.raises(ValueError):
        dg.classify(dg.diagram((2, 1, 0)))


def test_orbit_multiplicity():
    assert dg.orbit_multiplicity(dg.parse_diagram("1+^3 1-^2")) == 1
    assert dg.orbit_multiplicity(dg.parse_diagram("5+")) == 2
    assert dg.orbit_multiplicity(dg.parse_diagram("2+ 2-")) == 4


def test_invariant_parity():
    # the parity pattern of (a, b) holds on the diagrams with at most one
    # row per sign for every odd length (the only ones whose component
    # groups extend); repeated odd rows break it, e.g. 1+^2 1-^2 in (2, 2)
    for p in range(8):
        for q in range(8):
            for d in dg.enum_sigma(p, q):
                if any(length % 2 and (plus > 1 or minus > 1)
                       for length, plus, minus in d.rows):
                    continue
                cls = dg.classify(d)
                if (p + q) % 2:
                    assert (cls.a + cls.b) % 2 == 1
                elif p % 2 == 1 and q % 2 == 1:
                    assert cls.a % 2 == 1 and cls.b % 2 == 1
                elif p % 2 == 0 and q % 2 == 0:
                    assert cls.a % 2 == 0 and cls.b % 2 == 0


def test_signature_recomputation():
    for p in range(7):
        for q in range(7):
            for d in dg.enum_sigma(p, q):
                assert d.signature() == (p, q)
    for n in range(7):
        for d in dg.enum_lambda(n):
            assert d.signature() == (n, n)


def test_enum_sigma_b_examples():
    assert {str(d) for d in dg.enum_sigma_b(3, 2)} == {"5+", "3- 1+^2"}
    assert {str(d) for d in dg.enum_sigma_b(2, 1)} == {"3+"}
    # two unit rows of opposite sign cannot share the mandatory common sign
    assert dg.enum_sigma_b(1, 1) == []
    assert {str(d) for d in dg.enum_sigma_b(2, 2)} == {"3+ 1-", "3- 1+"}
    assert {str(d) for d in dg.enum_sigma_b(4, 2)} == {"5+ 1+", "3+^2", "3- 1+^3"}


def test_sigma_b_literal_flag_differs():
    default = {str(d) for d in dg.enum_sigma_b(3, 2)}
    literal = {str(d) for d in dg.enum_sigma_b(3, 2, literal_top_sign=True)}
    assert literal == {"5+"}
    assert literal < default


def test_sigma_b_never_class3():
    for p in range(11):
        for q in range(11):
            if p + q > 20:
                continue
            for d in dg.enum_sigma_b(p, q):
                assert dg.classify(d).index in (1, 2)


def test_sigma_b_subset_of_sigma():
    for p in range(8):
        for q in range(8):
            sigma = set(dg.enum_sigma(p, q))
            for d in dg.enum_sigma_b(p, q):
                assert d in sigma


def test_sign_swap_bijection():
    for p in range(9):
        for q in range(9):
            if p + q > 16:
                continue
            swapped = {d.sign_swap() for d in dg.enum_sigma(p, q)}
            assert swapped == set(dg.enum_sigma(q, p))
            swapped_b = {d.sign_swap() for d in dg.enum_sigma_b(p, q)}
            assert swapped_b == set(dg.enum_sigma_b(q, p))
            for d in dg.enum_sigma(p, q):
                c, cs = dg.classify(d), dg.classify(d.sign_swap())
                assert (c.a, c.b, c.r, c.index) == (cs.b, cs.a, cs.r, cs.index)


def test_enum_lambda_examples():
    assert {str(d) for d in dg.enum_lambda(3)} == \
        {"3+ 3-", "2+^2 1+ 1-", "2-^2 1+ 1-", "1+^3 1-^3"}
    assert {str(d) for d in dg.enum_lambda_b(3)} == \
        {"3+ 3-", "2+^2 1+ 1-", "2-^2 1+ 1-"}
    assert dg.enum_lambda_b(0) == [dg.SignedYoungDiagram()]


def test_mu_t():
    assert str(dg.mu_t(2)) == "3+ 1+"
    assert dg.mu_t(0) == dg.SignedYoungDiagram()
    d = dg.mu_t(-3)
    assert str(d) == "5- 3- 1-"
    assert d.signature() == (3, 6)
    for t in range(-6, 7):
        expected = ((t * t + t) // 2, (t * t - t) // 2)
        assert dg.mu_t(t).signature() == expected


def test_join():
    unit_pair = dg.diagram((1, 1, 1))
    assert str(dg.join(unit_pair, dg.mu_t(2))) == "3+ 1+^2 1-"
    d = dg.parse_diagram("2+ 2-")
    assert dg.join(d, dg.SignedYoungDiagram()) == d
    assert str(dg.join(d, d)) == "2+^2 2-^2"


def test_diii_bijection_examples():
    b = dg.diii_kappa1_bijection(dg.parse_diagram("2+^2 2-^2"))
    assert (b.first.parts, b.second.parts) == ((1,), (1,))
    b = dg.diii_kappa1_bijection(dg.parse_diagram("4+^2"))
    assert (b.first.parts, b.second.parts) == ((2,), ())
    b = dg.diii_kappa1_bijection(dg.SignedYoungDiagram())
    assert (b.first.parts, b.second.parts) == ((), ())
    with pytest.raises(ValueError):
        dg.diii_kappa1_bijection(dg.parse_diagram("3+ 3-"))


def test_diii_bijection_counts():
    for n in range(2, 21, 2):
        all_even = [d for d in dg.enum_lambda(n) if d.all_parts_even()]
        images = {(dg.diii_kappa1_bijection(d).first.parts,
                   dg.diii_kappa1_bijection(d).second.parts) for d in all_even}
        assert len(images) == len(all_even)
        assert len(all_even) == count_bipartitions(n // 2)


def test_text_round_trip_fixed():
    for text in ("0", "5+", "3- 1+^2", "2+ 2- 1+", "1+^3 1-^2"):
        assert dg.format_diagram(dg.parse_diagram(text)) == text
    # ungrouped tokens collapse into groups
    assert dg.format_diagram(dg.parse_diagram("3- 1+ 1+")) == "3- 1+^2"
    with pytest.raises(ValueError):
        dg.parse_diagram("3* 1+")


@settings(max_examples=80, deadline=None)
@given(st.integers(min_value=0, max_value=7), st.integers(min_value=0, max_value=7),
       st.randoms(use_true_random=False))
def test_text_round_trip_random(p, q, rng):
    pool = dg.enum_sigma(p, q) + dg.enum_lambda(min(p, 5))
    if not pool:
        return
    d = rng.choice(pool)
    assert dg.parse_diagram(dg.format_diagram(d)) == d


def test_diagram_validation():
    with pytest.raises(ValueError):
        dg.SignedYoungDiagram(((2, 1, 0), (3, 1, 0)))  # increasing lengths
    with pytest.raises(ValueError):
        dg.SignedYoungDiagram(((2, 0, 0),))  # empty group
    with pytest.raises(ValueError):
        dg.SignedYoungDiagram(((0, 1, 0),))  # zero length
