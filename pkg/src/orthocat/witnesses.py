"""Generators for the hand-built automaton families driving the experiments.

The four-letter pair built by :func:`witness_a` / :func:`witness_b` pushes
the catenation construction to its largest possible minimal size while the
two languages still factor uniquely; the unary cycles and their fooling set
do the same for the nondeterministic measure.
"""

from __future__ import annotations

from .core import Dfa, Word

_SIGMA = ("a", "b", "c", "d")
_A, _B, _C, _D = range(4)


def witness_a(m: int) -> Dfa:
    """First automaton of the four-letter worst-case pair (m >= 3 states).

    State 0 loops on a, the single accepting state m-2 is reached by a b/d
    chain from 0 and jumps back to 0 on c or d, and every unlisted move
    falls into the dead state m-1.
    """
    if m < 3:
        raise ValueError("witness_a needs m >= 3")
    dead = m - 1
    delta = [[dead] * 4 for _ in range(m)]
    delta[0][_A] = 0
    delta[m - 2][_C] = 0
    for i in range(m - 2):  # b steps up on 0..m-3
        delta[i][_B] = i + 1
    for i in range(m - 3):  # d steps up on 0..m-4 only
        delta[i][_D] = i + 1
    delta[m - 2][_D] = 0
    return Dfa(_SIGMA, tuple(map(tuple, delta)), 0, frozenset({m - 2}))


def witness_b(n: int) -> Dfa:
    """Second automaton of the four-letter worst-case pair (n >= 3 states).

    The letter a cycles through 1..n-2, b/c/d act as identities on most of
    that cycle, c enters the cycle from the start state, and every unlisted
    move falls into the dead state n-1. State 1 is the only accepting state.
    """
    if n < 3:
        raise ValueError("witness_b needs n >= 3")
    dead = n - 1
    delta = [[dead] * 4 for _ in range(n)]
    for i in range(1, n - 2):  # a steps within the cycle on 1..n-3
        delta[i][_A] = i + 1
    delta[n - 2][_A] = 1
    for i in range(1, n - 1):  # b fixes 1..n-2
        delta[i][_B] = i
    for i in range(2, n - 1):  # c fixes only 2..n-2
        delta[i][_C] = i
    delta[0][_C] = 1
    for i in range(n - 1):  # d fixes 0..n-2
        delta[i][_D] = i
    return Dfa(_SIGMA, tuple(map(tuple, delta)), 0, frozenset({1}))


def unary_star_dfa(k: int, letter: str = "a") -> Dfa:
    """k-state cycle over a one-letter alphabet accepting lengths divisible by k."""
    if k < 1:
        raise ValueError("unary_star_dfa needs k >= 1")
    delta = tuple(((i + 1) % k,) for i in range(k))
    return Dfa((letter,), delta, 0, frozenset({0}))


def fooling_set_unary_catenation(m: int, n: int) -> list[tuple[Word, Word]]:
    """m+n word pairs witnessing the nondeterministic lower bound for
    (a^m)*(b^n)* over the alphabet (a, b).

    The prefix family starts at i = 0 (so the pair (ε, a^m b^n) replaces
    (a^m, b^n), whose cross products would both land in the language); the
    suffix family runs j = 1..n. Callers certify the set with
    :func:`orthocat.oracle.verify_fooling_set` rather than trusting it.
    """
    if m < 1 or n < 1:
        raise ValueError("fooling_set_unary_catenation needs m, n >= 1")
    a, b = 0, 1
    pairs: list[tuple[Word, Word]] = []
    for i in range(m):
        pairs.append(((a,) * i, (a,) * (m - i) + (b,) * n))
    for j in range(1, n + 1):
        pairs.append(((a,) * m + (b,) * j, (b,) * (n - j)))
    return pairs
