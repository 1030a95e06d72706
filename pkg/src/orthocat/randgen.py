"""Seed-reproducible random DFA generation.

The generator is splitmix64 with the standard constants, chosen so that any
implementation of the recipe reproduces identical automata from identical
seeds::

    state = (state + 0x9E3779B97F4A7C15) mod 2^64      # per draw
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) mod 2^64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) mod 2^64
    output = z ^ (z >> 31)

Draw order for a DFA: one draw per (state, symbol) pair in row-major order
with target = draw mod state_count, then one draw per state with the state
accepting iff draw < floor(accept_prob * 2^64).
"""

from __future__ import annotations

from typing import Iterator

from .core import Dfa

_MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB

_SYMBOL_POOL = "abcdefghijklmnopqrstuvwxyz"


def splitmix64_stream(seed: int) -> Iterator[int]:
    """Endless stream of splitmix64 outputs for a 64-bit seed."""
    state = seed & _MASK64
    while True:
        state = (state + _GAMMA) & _MASK64
        z = state
        z = ((z ^ (z >> 30)) * _MIX1) & _MASK64
        z = ((z ^ (z >> 27)) * _MIX2) & _MASK64
        yield z ^ (z >> 31)


def random_dfa(states: int, alphabet_size: int, accept_prob: float, seed: int) -> Dfa:
    """Uniform random complete DFA, fully determined by the seed.

    Transition targets are uniform over states, each state is accepting
    independently with ``accept_prob``, the start state is 0, and the
    alphabet is the first ``alphabet_size`` lowercase letters.
    """
    if states < 1:
        raise ValueError("states must be >= 1")
    if not 1 <= alphabet_size <= len(_SYMBOL_POOL):
        raise ValueError(f"alphabet_size must be in 1..{len(_SYMBOL_POOL)}")
    if not 0.0 <= accept_prob <= 1.0:
        raise ValueError("accept_prob must be in [0, 1]")
    draws = splitmix64_stream(seed)
    delta = tuple(
        tuple(next(draws) % states for _ in range(alphabet_size)) for _ in range(states)
    )
    threshold = int(accept_prob * 2**64)
    accepting = frozenset(q for q in range(states) if next(draws) < threshold)
    return Dfa(
        alphabet=tuple(_SYMBOL_POOL[:alphabet_size]),
        delta=delta,
        start=0,
        accepting=accepting,
    )
