"""Unit tests for small-circuit enumeration and arrangement."""
import random

import pytest

from sqcirc.circuits import (
    SmallCircuit,
    all_small_circuits,
    cao_less,
    circuit_counts_by_order,
    circuit_order_ranges,
    elementary_cycles_oracle,
    independence_rank,
    maximal_edge,
    realize,
    small_circuits,
    vector_cycle,
)
from sqcirc.rauzy import build_rauzy, cyclomatic_number
from sqcirc.words import SymbolOrder, complexity_profile

B_BEFORE_A = SymbolOrder.from_string("ba")
# carries three nested circuits over aab, aaab, aaaab at order five
NEST_WORD = "abaaabaabaaaaba"


def random_word(rng, letters="ab", lo=1, hi=20):
    return "".join(rng.choice(letters) for _ in range(rng.randint(lo, hi)))


class TestSmallCircuitType:
    def test_root_normalizes_to_least_rotation(self):
        assert SmallCircuit("babb", 4) == SmallCircuit("abbb", 4)
        assert SmallCircuit("baaba", 5).root == "aabab"
        assert str(SmallCircuit("ba", 3)) == "C(ab,3)"

    def test_root_must_be_primitive(self):
        with pytest.raises(ValueError):
            SmallCircuit("abab", 4)

    def test_root_must_fit_order(self):
        with pytest.raises(ValueError):
            SmallCircuit("abc", 2)

    def test_empty_root(self):
        with pytest.raises(ValueError):
            SmallCircuit("", 1)


class TestSmallCircuits:
    def test_order_one_excludes_bigger_cycle(self):
        # the two-letter cycle through ab/ba is a circuit of size 2 > 1
        assert small_circuits("aababa", 1) == {SmallCircuit("a", 1)}

    def test_nest_word_order_five(self):
        got = small_circuits(NEST_WORD, 5)
        assert got == {SmallCircuit("aaaab", 5), SmallCircuit("aaab", 5),
                       SmallCircuit("aab", 5)}

    def test_order_three(self):
        got = small_circuits("aababa", 3)
        assert got == {SmallCircuit("ab", 3)}
        real = realize(next(iter(got)))
        assert real.vertices == {"aba", "bab"}
        assert real.edges == {"abab", "baba"}

    def test_top_order_is_empty(self):
        assert small_circuits("aababa", 6) == frozenset()

    def test_order_out_of_range(self):
        with pytest.raises(ValueError):
            small_circuits("ab", 3)


class TestAllSmallCircuits:
    def test_small_example(self):
        assert all_small_circuits("aababa") == {
            SmallCircuit("a", 1), SmallCircuit("ab", 2), SmallCircuit("ab", 3)}

    def test_single_letter_word_has_none(self):
        assert all_small_circuits("a") == frozenset()

    def test_agrees_with_per_order_enumeration(self):
        rng = random.Random(41)
        for _ in range(150):
            w = random_word(rng, "abc")
            direct = frozenset(c for r in range(1, len(w) + 1)
                               for c in small_circuits(w, r))
            assert all_small_circuits(w) == direct

    def test_order_ranges_are_contiguous_floors(self):
        rng = random.Random(42)
        for _ in range(150):
            w = random_word(rng)
            for root, (lo, hi) in circuit_order_ranges(w).items():
                assert lo == len(root) <= hi
                assert SmallCircuit(root, lo) in small_circuits(w, lo)
                assert SmallCircuit(root, hi) in small_circuits(w, hi)
                if hi < len(w):
                    assert SmallCircuit(root, hi + 1) not in small_circuits(w, hi + 1)

    def test_counts_by_order(self):
        assert circuit_counts_by_order("aababa") == {1: 1, 2: 1, 3: 1}


class TestRealize:
    def test_two_letter_circuit(self):
        real = realize(SmallCircuit("ab", 2))
        assert real.vertices == {"ab", "ba"}
        assert real.edges == {"aba", "bab"}

    def test_loop_circuit(self):
        real = realize(SmallCircuit("a", 1))
        assert real.vertices == {"a"}
        assert real.edges == {"aa"}

    def test_nest_word_circuit_edges(self):
        real = realize(SmallCircuit("aab", 5))
        assert real.edges == {"aabaab", "abaaba", "baabaa"}

    def test_cardinality_equals_root_length(self):
        rng = random.Random(43)
        for _ in range(150):
            w = random_word(rng, "abc")
            for c in all_small_circuits(w):
                real = realize(c)
                assert len(real.vertices) == len(real.edges) == len(c.root)


class TestMaximalEdge:
    def test_nest_word_maximal_edges(self):
        assert maximal_edge(SmallCircuit("aaaab", 5), B_BEFORE_A) == "aaaaba"
        assert maximal_edge(SmallCircuit("aaab", 5), B_BEFORE_A) == "aaabaa"
        assert maximal_edge(SmallCircuit("aab", 5), B_BEFORE_A) == "aabaab"

    def test_singleton_edge_set(self):
        assert maximal_edge(SmallCircuit("a", 1)) == "aa"
        assert maximal_edge(SmallCircuit("a", 1), B_BEFORE_A) == "aa"

    def test_natural_order_differs(self):
        assert maximal_edge(SmallCircuit("aab", 5)) == "baabaa"

    def test_is_the_unique_argmax(self):
        rng = random.Random(44)
        for order in (None, B_BEFORE_A):
            for _ in range(100):
                w = random_word(rng)
                for c in all_small_circuits(w):
                    edges = realize(c).edges
                    if order is None:
                        top = maximal_edge(c)
                        assert top in edges
                        assert all(e <= top for e in edges)
                    else:
                        top = maximal_edge(c, order)
                        assert top in edges
                        key = order.sort_key
                        assert all(key(e) <= key(top) for e in edges)

    def test_distinct_across_circuits_of_one_graph(self):
        rng = random.Random(45)
        for _ in range(150):
            w = random_word(rng, "abc")
            for r in range(1, len(w) + 1):
                tops = [maximal_edge(c) for c in small_circuits(w, r)]
                assert len(tops) == len(set(tops))


class TestCao:
    def test_nest_word_arrangement(self):
        assert cao_less(SmallCircuit("aab", 5), SmallCircuit("aaab", 5), B_BEFORE_A)
        assert not cao_less(SmallCircuit("aaab", 5), SmallCircuit("aab", 5), B_BEFORE_A)

    def test_irreflexive(self):
        c = SmallCircuit("ab", 3)
        assert not cao_less(c, c)

    def test_trichotomy_within_graph(self):
        circs = sorted(small_circuits(NEST_WORD, 5))
        for a in circs:
            for b in circs:
                if a == b:
                    continue
                assert cao_less(a, b, B_BEFORE_A) != cao_less(b, a, B_BEFORE_A)

    def test_rejects_different_graphs(self):
        with pytest.raises(ValueError):
            cao_less(SmallCircuit("ab", 2), SmallCircuit("ab", 3))


class TestVectorCycle:
    def test_two_letter_circuit_vector(self):
        g = build_rauzy("aababa", 2)
        vc = vector_cycle(SmallCircuit("ab", 2), g)
        assert vc.as_dict() == {"aab": 0, "aba": 1, "bab": 1}

    def test_loop_vector(self):
        g = build_rauzy("aababa", 1)
        vc = vector_cycle(SmallCircuit("a", 1), g)
        assert vc.as_dict() == {"aa": 1, "ab": 0, "ba": 0}

    def test_support_size_is_root_length(self):
        rng = random.Random(46)
        for _ in range(100):
            w = random_word(rng)
            for r in range(1, len(w) + 1):
                g = build_rauzy(w, r)
                for c in small_circuits(w, r):
                    vc = vector_cycle(c, g)
                    assert sum(vc.as_dict().values()) == len(c.root)

    def test_order_mismatch(self):
        with pytest.raises(ValueError):
            vector_cycle(SmallCircuit("ab", 3), build_rauzy("aababa", 2))

    def test_foreign_graph(self):
        with pytest.raises(ValueError):
            vector_cycle(SmallCircuit("ab", 2), build_rauzy("aacaca", 2))


class TestIndependenceRank:
    def test_nest_word_rank(self):
        assert independence_rank(NEST_WORD, 5) == 3

    def test_single_circuit(self):
        assert independence_rank("aababa", 2) == 1

    def test_no_circuits(self):
        assert independence_rank("abcabc", 1) == 0

    def test_equals_circuit_count(self):
        rng = random.Random(47)
        for _ in range(150):
            w = random_word(rng, "abc")
            for r in range(1, len(w) + 1):
                assert independence_rank(w, r) == len(small_circuits(w, r))


class TestCyclesOracle:
    def test_size_one_only_sees_loop(self):
        g = build_rauzy("aababa", 1)
        assert elementary_cycles_oracle(g, 1) == {frozenset({"aa"})}

    def test_size_two_adds_nonsmall_cycle(self):
        g = build_rauzy("aababa", 1)
        assert elementary_cycles_oracle(g, 2) == {
            frozenset({"aa"}), frozenset({"ab", "ba"})}

    def test_order_two_graph(self):
        g = build_rauzy("aababa", 2)
        assert elementary_cycles_oracle(g, 2) == {frozenset({"aba", "bab"})}

    def test_cycle_count_guard(self):
        g = build_rauzy("aababa", 1)
        with pytest.raises(RuntimeError):
            elementary_cycles_oracle(g, 2, max_cycles=1)

    def test_matches_periodicity_enumeration(self):
        rng = random.Random(48)
        for _ in range(80):
            w = random_word(rng, "abc", 1, 10)
            for r in range(1, len(w) + 1):
                g = build_rauzy(w, r)
                mine = {realize(c).edges for c in small_circuits(w, r)}
                assert mine == set(elementary_cycles_oracle(g, r))


class TestCountingBounds:
    def test_per_order_and_total(self):
        rng = random.Random(49)
        for _ in range(200):
            w = random_word(rng, "abc", 1, 18)
            prof = complexity_profile(w)
            counts = circuit_counts_by_order(w)
            for r in range(1, len(w) + 1):
                sc_r = counts.get(r, 0)
                assert sc_r <= prof[r + 1] - prof[r] + 1
                assert sc_r <= cyclomatic_number(build_rauzy(w, r))
            assert sum(counts.values()) <= len(w) - len(set(w))
