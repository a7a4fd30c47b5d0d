from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from weylslice.rootsys import (
    bruhat_leq,
    build_root_system,
    conjugacy_class,
    dot,
    involution_conjugacy_classes,
    is_bruhat_max_in_class,
    longest_element,
    minus_one_rank,
    orthogonal_subsystem,
    subsystem_highest_root,
    w0_wPi,
)

B2_ROOTS = {
    (1, 0), (0, 1), (-1, 0), (0, -1),
    (1, 1), (1, -1), (-1, 1), (-1, -1),
}


def test_a1_trivial():
    rs = build_root_system("A", 1)
    assert len(rs.roots) == 2
    assert len(rs.positive_roots) == 1


def test_b2_roots_against_explicit_list():
    rs = build_root_system("B", 2)
    got = {tuple(int(x) for x in r) for r in rs.roots}
    assert got == B2_ROOTS
    assert len(rs.positive_roots) == 4


def test_counts_all_types():
    for label, n, count in [("A", 4, 20), ("B", 3, 18), ("C", 4, 32),
                            ("D", 5, 40), ("E", 6, 72), ("E", 7, 126),
                            ("E", 8, 240), ("F", 4, 48), ("G", 2, 12)]:
        assert len(build_root_system(label, n).roots) == count


def test_e6_weyl_order_cross_check():
    rs = build_root_system("E", 6)
    assert rs.weyl_order() == 51840
    assert rs.weyl_order_by_orbit() == 51840


def test_invalid_types_rejected():
    for label, n in [("H", 3), ("E", 5), ("F", 3), ("G", 3), ("D", 2)]:
        with pytest.raises(ValueError):
            build_root_system(label, n)


def test_small_group_orders_by_enumeration():
    for label, n in [("A", 2), ("B", 2), ("C", 3), ("D", 4)]:
        rs = build_root_system(label, n)
        assert len(rs.all_elements()) == rs.weyl_order()


def _word_length_bfs(system, w):
    """Independent minimal-word-length oracle by breadth-first search."""
    gens = [system.simple_reflection(i) for i in range(system.rank)]
    frontier = {system.identity_element()}
    seen = set(frontier)
    depth = 0
    while True:
        if w in frontier:
            return depth
        nxt = set()
        for x in frontier:
            for s in gens:
                y = x.mul(s)
                if y not in seen:
                    seen.add(y)
                    nxt.add(y)
        frontier = nxt
        depth += 1


def test_length_equals_minimal_word_length():
    for label, n in [("A", 2), ("B", 2), ("C", 3)]:
        rs = build_root_system(label, n)
        for w in rs.all_elements():
            assert w.length() == _word_length_bfs(rs, w)
            word = w.reduced_word()
            assert len(word) == w.length()
            rebuilt = rs.identity_element()
            for i in word:
                rebuilt = rebuilt.mul(rs.simple_reflection(i))
            assert rebuilt == w


def test_length_examples():
    b2 = build_root_system("B", 2)
    assert b2.identity_element().length() == 0
    assert longest_element(b2, range(2)).length() == 4
    c2 = build_root_system("C", 2)
    assert c2.reflection(c2.highest_root()).length() == 3


def test_longest_element_parabolic():
    e6 = build_root_system("E", 6)
    assert longest_element(e6, ()).is_identity()
    a2 = build_root_system("A", 2)
    assert longest_element(a2, range(2)).length() == 3
    # Pi = {a3, a4, a5} spans an A3 inside E6: 6 positive roots
    assert longest_element(e6, (2, 3, 4)).length() == 6


def test_w0_wPi_examples_and_rejection():
    bn = build_root_system("B", 3)
    w = w0_wPi(bn, ())
    assert w == longest_element(bn, range(3))
    # C_n: Pi = {a3..an} gives s_{a1} s_{e1+e2} (the eps_1,eps_2 double flip)
    cn = build_root_system("C", 3)
    w = w0_wPi(cn, (2,))
    short_high = tuple(map(Fraction, (1, 1, 0)))
    expected = cn.simple_reflection(0).mul(cn.reflection(short_high))
    assert w == expected
    # E6: Pi = {a3,a4,a5} gives s_beta s_gamma
    e6 = build_root_system("E", 6)
    w = w0_wPi(e6, (2, 3, 4))
    beta = e6.highest_root()
    gamma = subsystem_highest_root(e6, orthogonal_subsystem(e6, beta))
    assert w == e6.reflection(beta).mul(e6.reflection(gamma))
    # an asymmetric subset is rejected in a type where w0 != -1
    a3 = build_root_system("A", 3)
    with pytest.raises(ValueError):
        w0_wPi(a3, (0,))


def test_minus_one_rank():
    b2 = build_root_system("B", 2)
    assert minus_one_rank(b2.identity_element()) == 0
    assert minus_one_rank(longest_element(b2, range(2))) == 2
    assert minus_one_rank(b2.reflection(b2.highest_root())) == 1


def _all_reduced_words(system, w):
    if w.is_identity():
        return [()]
    out = []
    for i in range(system.rank):
        if w.sends_simple_negative(i):
            for tail in _all_reduced_words(
                    system, w.mul(system.simple_reflection(i))):
                out.append(tail + (i,))
    return out


def _subword_oracle(system, u, v):
    """u <= v iff some reduced word of v has a subword equal to u."""
    from itertools import combinations

    u_len = u.length()
    for word in _all_reduced_words(system, v):
        for positions in combinations(range(len(word)), u_len):
            prod = system.identity_element()
            for p in positions:
                prod = prod.mul(system.simple_reflection(word[p]))
            if prod == u:
                return True
    return False


def test_bruhat_leq_matches_subword_enumeration():
    for label in ("A", "B"):
        rs = build_root_system(label, 2)
        elements = rs.all_elements()
        for u in elements:
            for v in elements:
                assert bruhat_leq(u, v) == _subword_oracle(rs, u, v), (
                    label, u.reduced_word(), v.reduced_word())


def test_bruhat_order_examples():
    a2 = build_root_system("A", 2)
    s1, s2 = a2.simple_reflection(0), a2.simple_reflection(1)
    w0 = longest_element(a2, range(2))
    for w in a2.all_elements():
        assert bruhat_leq(a2.identity_element(), w)
        assert bruhat_leq(w0, w) == (w == w0)
    assert bruhat_leq(s1, s1.mul(s2))
    assert not bruhat_leq(s1.mul(s2), s2.mul(s1))
    assert not bruhat_leq(s2.mul(s1), s1.mul(s2))


def test_bruhat_refines_length():
    b2 = build_root_system("B", 2)
    for u in b2.all_elements():
        for v in b2.all_elements():
            if bruhat_leq(u, v) and u != v:
                assert u.length() < v.length()


def test_bruhat_max_in_class():
    b2 = build_root_system("B", 2)
    w0 = longest_element(b2, range(2))
    assert is_bruhat_max_in_class(w0)
    assert is_bruhat_max_in_class(b2.reflection(b2.highest_root()))
    assert not is_bruhat_max_in_class(b2.simple_reflection(0))
    with pytest.raises(ValueError):
        s1, s2 = b2.simple_reflection(0), b2.simple_reflection(1)
        is_bruhat_max_in_class(s1.mul(s2))


def test_parabolic_length_identities():
    # l(w0 wPi) = l(w0) - l(wPi) for every subset, small ranks exhaustively
    for label, n in [("A", 3), ("B", 3), ("D", 4)]:
        rs = build_root_system(label, n)
        w0 = longest_element(rs, range(n))
        from itertools import combinations

        for k in range(n + 1):
            for pi in combinations(range(n), k):
                wpi = longest_element(rs, pi)
                assert w0.mul(wpi).length() == w0.length() - wpi.length()


def test_catalog_length_additivity():
    # l(w0 wPi sigma) = l(w0 wPi) + l(sigma) for sigma in W_Pi, B3 exhaustive
    rs = build_root_system("B", 3)
    pi = (2,)
    w0 = longest_element(rs, range(3))
    w = w0.mul(longest_element(rs, pi))
    # enumerate W_Pi
    frontier = {rs.identity_element()}
    seen = set(frontier)
    while frontier:
        nxt = set()
        for x in frontier:
            for i in pi:
                y = x.mul(rs.simple_reflection(i))
                if y not in seen:
                    seen.add(y)
                    nxt.add(y)
        frontier = nxt
    for sigma in seen:
        assert w.mul(sigma).length() == w.length() + sigma.length()


def test_length_subadditive_property():
    b2 = build_root_system("B", 2)
    els = b2.all_elements()
    for u in els:
        for v in els:
            assert u.mul(v).length() <= u.length() + v.length()


def test_debug_dump():
    rs = build_root_system("B", 2)
    dump = rs.debug_dump()
    assert dump.splitlines()[0] == "B2 roots (8)"
    assert len(dump.splitlines()) == 9
