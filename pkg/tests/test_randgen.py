from itertools import islice

import pytest

from orthocat import Dfa, accepts, enumerate_accepted
from orthocat.randgen import random_dfa, splitmix64_stream


class TestSplitmix64:
    def test_reference_vectors_seed_zero(self):
        # first outputs of the standard splitmix64 constants for seed 0
        assert list(islice(splitmix64_stream(0), 3)) == [
            0xE220A8397B1DCDAF,
            0x6E789E6AA1B965F4,
            0x06C45D188009454F,
        ]

    def test_seed_42(self):
        assert next(splitmix64_stream(42)) == 0xBDD732262FEB6E95

    def test_seed_wraps_to_64_bits(self):
        assert list(islice(splitmix64_stream(1 << 64), 2)) == list(
            islice(splitmix64_stream(0), 2)
        )


class TestRandomDfa:
    def test_deterministic_in_seed(self):
        assert random_dfa(5, 3, 0.5, 77) == random_dfa(5, 3, 0.5, 77)
        assert random_dfa(5, 3, 0.5, 77) != random_dfa(5, 3, 0.5, 78)

    def test_golden_automaton(self):
        # pinned output of the documented draw order
        assert random_dfa(3, 2, 0.5, 42) == Dfa(
            alphabet=("a", "b"),
            delta=((1, 1), (0, 0), (1, 0)),
            start=0,
            accepting=frozenset({0, 2}),
        )

    def test_accept_prob_zero_gives_empty_language(self):
        d = random_dfa(4, 2, 0.0, 9)
        assert d.accepting == frozenset()
        assert enumerate_accepted(d, 5) == []

    def test_accept_prob_one_single_state_accepts_everything(self):
        d = random_dfa(1, 2, 1.0, 9)
        assert all(accepts(d, w) for w in [(), (0,), (1, 0, 1)])

    def test_shape_and_names(self):
        d = random_dfa(6, 4, 0.25, 123)
        assert d.alphabet == ("a", "b", "c", "d")
        assert d.state_count == 6
        assert d.start == 0

    def test_argument_validation(self):
        with pytest.raises(ValueError):
            random_dfa(0, 2, 0.5, 1)
        with pytest.raises(ValueError):
            random_dfa(2, 0, 0.5, 1)
        with pytest.raises(ValueError):
            random_dfa(2, 2, 1.5, 1)
