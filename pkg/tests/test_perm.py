from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from permclass import Perm
from permclass.errors import (
    InvalidInflation,
    InvalidPointSet,
    InvalidSequence,
)
from permclass.perm import (
    EMPTY,
    all_perms,
    complement,
    contains,
    delete,
    direct_sum,
    identity,
    inflate,
    inverse,
    pattern_of,
    restriction,
    reverse,
    skew_sum,
)

from conftest import perms, perms_of

from permclass.antichain import mu

p = Perm.from_text


def contains_oracle(pat, host):
    k = len(pat)
    return any(
        restriction(host, idx) == pat
        for idx in combinations(range(1, len(host) + 1), k)
    )


class TestPatternOf:
    def test_rank_replacement(self):
        assert pattern_of((4, 7, 6)) == p("132")

    def test_identity(self):
        assert pattern_of(range(1, 6)) == identity(5)

    def test_mu9_prefix(self):
        assert pattern_of((6, 9, 8)) == p("132")

    def test_duplicates_rejected(self):
        with pytest.raises(InvalidSequence):
            pattern_of((1, 3, 3))

    @given(perms())
    def test_idempotent(self, q):
        assert pattern_of(q.values) == q


class TestRestriction:
    def test_mu7_prefix(self):
        assert restriction(mu(7), {1, 2, 3}) == p("132")

    def test_full(self):
        q = p("31524")
        assert restriction(q, range(1, 6)) == q

    def test_empty(self):
        assert restriction(p("312"), ()) == EMPTY

    def test_out_of_range(self):
        with pytest.raises(InvalidPointSet):
            restriction(p("312"), {0, 1})


class TestContains:
    def test_123_not_in_2143(self):
        assert not contains(p("123"), p("2143"))

    def test_singleton_in_anything(self):
        for q in ("1", "21", "2143", "52341"):
            assert contains(p("1"), p(q))

    def test_3214_not_in_mu7(self):
        assert not contains(p("3214"), mu(7))

    def test_descent(self):
        assert contains(p("21"), p("312"))

    def test_empty_pattern(self):
        assert contains(EMPTY, p("21"))
        assert contains(EMPTY, EMPTY)

    def test_matches_oracle_exhaustive(self):
        for np in range(1, 4):
            for nh in range(1, 6):
                for pat in all_perms(np):
                    for host in all_perms(nh):
                        assert contains(pat, host) == contains_oracle(pat, host)

    @given(perms(min_size=1, max_size=4), perms_of(9))
    @settings(max_examples=60, deadline=None)
    def test_matches_oracle_long_hosts(self, pat, host):
        assert contains(pat, host) == contains_oracle(pat, host)

    @given(perms())
    def test_reflexive(self, q):
        assert contains(q, q)


class TestSymmetries:
    def test_inverse(self):
        assert inverse(p("2413")) == p("3142")
        assert inverse(identity(4)) == identity(4)
        assert inverse(inverse(mu(9))) == mu(9)

    def test_reverse_complement(self):
        assert reverse(p("123")) == p("321")
        assert complement(p("2143")) == p("3412")

    @given(perms())
    def test_involutions(self, q):
        assert inverse(inverse(q)) == q
        assert reverse(reverse(q)) == q
        assert complement(complement(q)) == q

    @given(perms(min_size=1, max_size=4), perms(min_size=1, max_size=6))
    @settings(max_examples=120)
    def test_equivariance(self, pat, host):
        base = contains(pat, host)
        assert contains(inverse(pat), inverse(host)) == base
        assert contains(reverse(pat), reverse(host)) == base
        assert contains(complement(pat), complement(host)) == base


class TestSums:
    def test_examples(self):
        assert direct_sum(p("21"), p("1")) == p("213")
        assert skew_sum(p("1"), p("1")) == p("21")
        assert direct_sum(EMPTY, p("312")) == p("312")
        assert skew_sum(p("312"), EMPTY) == p("312")

    @given(perms(), perms())
    def test_lengths_and_prefix(self, s, t):
        out = direct_sum(s, t)
        assert len(out) == len(s) + len(t)
        assert restriction(out, range(1, len(s) + 1)) == s

    @given(perms_of(5), perms_of(5), st.data())
    @settings(max_examples=80)
    def test_sum_monotone(self, s, t, data):
        sub_s = data.draw(
            st.sets(st.integers(1, 5), min_size=1).map(
                lambda a: restriction(s, a)
            )
        )
        sub_t = data.draw(
            st.sets(st.integers(1, 5), min_size=1).map(
                lambda a: restriction(t, a)
            )
        )
        assert contains(direct_sum(sub_s, sub_t), direct_sum(s, t))
        assert contains(skew_sum(sub_s, sub_t), skew_sum(s, t))


class TestInflate:
    def test_generalizes_sums(self):
        assert inflate(p("12"), [p("21"), p("1")]) == direct_sum(p("21"), p("1"))
        assert inflate(p("21"), [p("1"), p("12")]) == p("312")

    @given(perms(min_size=1, max_size=5))
    def test_singleton_parts(self, q):
        assert inflate(q, [p("1")] * len(q)) == q

    def test_errors(self):
        with pytest.raises(InvalidInflation):
            inflate(p("12"), [p("1")])
        with pytest.raises(InvalidInflation):
            inflate(p("12"), [p("1"), EMPTY])

    @given(perms_of(3), st.lists(perms_of(3), min_size=3, max_size=3), st.data())
    @settings(max_examples=60)
    def test_partwise_monotone(self, skel, parts, data):
        subs = [
            data.draw(
                st.sets(st.integers(1, 3), min_size=1).map(
                    lambda a, t=t: restriction(t, a)
                )
            )
            for t in parts
        ]
        assert contains(inflate(skel, subs), inflate(skel, parts))


class TestOrderAxioms:
    def test_antisymmetry_small(self):
        for n in range(1, 5):
            for a in all_perms(n):
                for b in all_perms(n):
                    if a != b:
                        assert not (contains(a, b) and contains(b, a))

    def test_transitivity_small(self):
        universe = [q for n in range(1, 5) for q in all_perms(n)]
        down = {
            q: {r for r in universe if contains(r, q)} for q in universe
        }
        for q in universe:
            for r in down[q]:
                assert down[r] <= down[q]


class TestText:
    def test_round_trip_short(self):
        assert str(p("2143")) == "2143"
        assert Perm.from_text("2143").values == (2, 1, 4, 3)

    def test_round_trip_long(self):
        text = "8,11,10,6,9,4,7,1,5,3,2"
        assert str(Perm.from_text(text)) == text
        assert Perm.from_text(text) == mu(11)

    def test_empty(self):
        assert Perm.from_text("") == EMPTY

    def test_invalid(self):
        with pytest.raises(InvalidSequence):
            Perm.from_text("1,2,2")
        with pytest.raises(InvalidSequence):
            Perm.from_text("13")
        with pytest.raises(InvalidSequence):
            Perm.from_text("abc")

    def test_delete(self):
        assert delete(p("2143"), 2) == p("132")
        with pytest.raises(InvalidPointSet):
            delete(p("21"), 3)
