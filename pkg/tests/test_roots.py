"""Root system generation, strings, pairings and co-roots."""

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import chevbasis as cb
from chevbasis.errors import DegeneratePair, NotARoot
from chevbasis.roots import add, negate, root_height, root_sign, sub
from conftest import DESK_TYPES, SIMPLY_LACED_TYPES, system

POSITIVE_COUNTS = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "E": lambda n: {6: 36, 7: 63, 8: 120}[n],
    "F": lambda n: 24,
    "G": lambda n: 6,
}


def test_a2_by_hand():
    rs = system("A2")
    assert set(rs.roots[: rs.positive_count]) == {(1, 0), (0, 1), (1, 1)}
    assert len(rs.roots) == 6


def test_d4_has_12_positive_roots():
    assert system("D4").positive_count == 12


def test_g2_positive_roots():
    rs = system("G2")
    assert set(rs.roots[: rs.positive_count]) == {
        (1, 0), (0, 1), (1, 1), (1, 2), (1, 3), (2, 3)
    }


def test_cardinalities_all_types():
    for label in DESK_TYPES:
        family, rank = cb.parse_type_label(label)
        rs = system(label)
        assert rs.positive_count == POSITIVE_COUNTS[family](rank), label
        assert len(rs.roots) == 2 * rs.positive_count


def test_ordering_and_negation_layout():
    for label in ("A3", "B3", "G2", "E6"):
        rs = system(label)
        p = rs.positive_count
        heights = [root_height(r) for r in rs.roots[:p]]
        assert heights == sorted(heights)
        for k in range(p):
            assert rs.roots[k + p] == negate(rs.roots[k])
            assert rs.neg_index(k) == k + p
            assert rs.neg_index(k + p) == k
        for r in rs.roots[:p]:
            assert root_sign(r) == 1
            assert all(c >= 0 for c in r)


def test_determinism():
    cm = cb.build_cartan("F", 4)
    assert cb.generate_roots(cm).roots == cb.generate_roots(cm).roots


def test_string_lengths_examples():
    rs = system("A2")
    assert rs.string_lengths((1, 0), (0, 1)) == (1, 0)
    g2 = system("G2")
    # alpha the short simple root (node 2), beta the long one: string of
    # length 3 upward.
    assert g2.string_lengths((0, 1), (1, 0)) == (3, 0)
    with pytest.raises(DegeneratePair):
        rs.string_lengths((1, 0), (1, 0))
    with pytest.raises(DegeneratePair):
        rs.string_lengths((1, 0), (-1, 0))
    with pytest.raises(NotARoot):
        rs.string_lengths((1, 0), (2, 2))


def test_simply_laced_strings_are_short():
    for label in ("A3", "D4", "E6"):
        rs = system(label)
        for alpha in rs.roots:
            for beta in rs.roots:
                if beta in (alpha, negate(alpha)):
                    continue
                p, q = rs.string_lengths(alpha, beta)
                assert 0 <= p + q <= 1


def test_string_convexity_and_bounds():
    # The full chain is present, nothing beyond it, and lengths <= 3.
    for label in ("B3", "C3", "G2", "F4"):
        rs = system(label)
        for alpha in rs.roots:
            for beta in rs.roots:
                if beta in (alpha, negate(alpha)):
                    continue
                p, q = rs.string_lengths(alpha, beta)
                assert p <= 3 and q <= 3
                for k in range(-q, p + 1):
                    member = tuple(b + k * a for a, b in zip(alpha, beta))
                    assert rs.contains(member)
                beyond_p = tuple(b + (p + 1) * a for a, b in zip(alpha, beta))
                beyond_q = tuple(b - (q + 1) * a for a, b in zip(alpha, beta))
                assert not rs.contains(beyond_p)
                assert not rs.contains(beyond_q)


def test_pairing_on_simple_roots_recovers_cartan():
    for label in ("A3", "B3", "G2", "F4"):
        rs = system(label)
        cm = rs.cartan
        for i in cm.nodes:
            for j in cm.nodes:
                if i == j:
                    continue
                assert rs.pairing(rs.simple_root(i), rs.simple_root(j)) == cm.a(i, j)


def test_pairing_self_is_two():
    for label in ("A2", "B2", "G2", "F4", "D4"):
        rs = system(label)
        for alpha in rs.roots:
            assert rs.pairing(alpha, alpha) == 2


def test_reflection_closure():
    # beta - <alpha,beta> alpha is always a root.
    for label in ("A3", "B3", "C3", "D4", "G2", "F4"):
        rs = system(label)
        for alpha in rs.roots:
            for beta in rs.roots:
                m = rs.pairing(alpha, beta)
                image = tuple(b - m * a for a, b in zip(alpha, beta))
                assert rs.contains(image), (label, alpha, beta)


def test_pairing_sign_controls_string():
    # m > 0 forces beta - alpha to be a root, m < 0 forces beta + alpha.
    for label in ("B3", "G2"):
        rs = system(label)
        for alpha in rs.roots:
            for beta in rs.roots:
                if beta in (alpha, negate(alpha)):
                    continue
                m = rs.pairing(alpha, beta)
                if m > 0:
                    assert rs.contains(sub(beta, alpha))
                elif m < 0:
                    assert rs.contains(add(beta, alpha))


def test_simply_laced_pairing_dictionary():
    for label in ("A3", "D4", "E6"):
        rs = system(label)
        for alpha in rs.roots:
            for beta in rs.roots:
                if beta in (alpha, negate(alpha)):
                    continue
                m = rs.pairing(alpha, beta)
                assert m in (-1, 0, 1)
                assert (m == 1) == rs.contains(sub(alpha, beta))
                assert (m == -1) == rs.contains(add(alpha, beta))
                assert m == rs.pairing(beta, alpha)


def test_coroot_simply_laced_is_identity():
    rs = system("D4")
    for alpha in rs.roots:
        assert rs.coroot(alpha) == alpha
    assert rs.coroot((1, 1, 1, 0)) == (1, 1, 1, 0)


def test_coroot_simple_roots_are_units():
    for label in ("A3", "B3", "C3", "G2", "F4"):
        rs = system(label)
        for i in rs.cartan.nodes:
            assert rs.coroot(rs.simple_root(i)) == rs.simple_root(i)


def test_coroot_g2_highest_root():
    rs = system("G2")
    c = rs.coroot((2, 3))
    assert c == (2, 1)
    assert sum(ci * rs.pairing_simple(i, (2, 3)) for ci, i in zip(c, rs.cartan.nodes)) == 2


def test_coroot_integral_everywhere():
    for label in ("B4", "C4", "F4", "G2"):
        rs = system(label)
        for alpha in rs.roots:
            c = rs.coroot(alpha)
            assert all(isinstance(x, int) for x in c)
            assert rs.coroot(negate(alpha)) == tuple(-x for x in c)


def test_symmetrizer_values():
    assert system("G2").symmetrizer() == (3, 1)
    assert system("B3").symmetrizer() == (1, 2, 2)
    assert system("C3").symmetrizer() == (2, 1, 1)
    assert system("F4").symmetrizer() == (2, 2, 1, 1)


@settings(deadline=None)
@given(st.sampled_from(("A3", "B3", "C3", "D4", "G2", "F4")), st.data())
def test_reflection_closure_property(label, data):
    rs = system(label)
    alpha = data.draw(st.sampled_from(rs.roots))
    beta = data.draw(st.sampled_from(rs.roots))
    m = rs.pairing(alpha, beta)
    assert rs.contains(tuple(b - m * a for a, b in zip(alpha, beta)))
