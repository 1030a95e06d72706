"""Finite-automata core: complete DFAs, NFAs, and the standard algorithms.

States are integers ``0..state_count-1`` and symbols are indices into an
ordered alphabet of printable names. A word is a tuple of symbol indices;
wherever every symbol name is a single character, a plain string works too.
All types are immutable values and every operation is a pure function.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Sequence

Symbol = int
Word = tuple[int, ...]

EMPTY_WORD: Word = ()


def parse_word(alphabet: Sequence[str], text: str) -> Word:
    """Turn a string into a word, one character per symbol name.

    Only usable when every alphabet name is a single character; automata
    with longer names must pass explicit index tuples instead.
    """
    index = {name: i for i, name in enumerate(alphabet)}
    word = []
    for ch in text:
        if ch not in index:
            raise ValueError(f"symbol {ch!r} not in alphabet {list(alphabet)}")
        word.append(index[ch])
    return tuple(word)


def format_word(alphabet: Sequence[str], word: Iterable[int]) -> str:
    """Render a word with the alphabet's symbol names; the empty word is shown as ε."""
    names = [alphabet[s] for s in word]
    if not names:
        return "ε"
    if all(len(n) == 1 for n in names):
        return "".join(names)
    return " ".join(names)


@dataclass(frozen=True)
class Dfa:
    """A complete deterministic finite automaton.

    ``delta[q][s]`` is the successor of state ``q`` on the ``s``-th alphabet
    symbol and must be present for every pair; incomplete tables are
    rejected at construction time rather than silently patched.
    """

    alphabet: tuple[str, ...]
    delta: tuple[tuple[int, ...], ...]
    start: int
    accepting: frozenset[int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        object.__setattr__(self, "delta", tuple(tuple(row) for row in self.delta))
        object.__setattr__(self, "accepting", frozenset(self.accepting))
        _check_alphabet(self.alphabet)
        n = len(self.delta)
        if n == 0:
            raise ValueError("an automaton needs at least one state")
        for q, row in enumerate(self.delta):
            if len(row) != len(self.alphabet):
                raise ValueError(
                    f"state {q}: expected {len(self.alphabet)} transitions, got {len(row)}"
                )
            for s, target in enumerate(row):
                if not 0 <= target < n:
                    raise ValueError(
                        f"transition ({q}, {self.alphabet[s]}) targets invalid state {target}"
                    )
        if not 0 <= self.start < n:
            raise ValueError(f"start state {self.start} out of range for {n} states")
        for q in self.accepting:
            if not 0 <= q < n:
                raise ValueError(f"accepting state {q} out of range for {n} states")

    @property
    def state_count(self) -> int:
        return len(self.delta)

    def word(self, w: str | Iterable[int]) -> Word:
        """Coerce a string or symbol-index iterable into a validated word."""
        if isinstance(w, str):
            return parse_word(self.alphabet, w)
        word = tuple(w)
        k = len(self.alphabet)
        for s in word:
            if not 0 <= s < k:
                raise ValueError(f"symbol index {s} out of range for alphabet size {k}")
        return word


@dataclass(frozen=True)
class Nfa:
    """A nondeterministic finite automaton with a set of initial states.

    ``delta[q][s]`` is the (possibly empty) successor set; a missing
    transition is just an empty set.
    """

    alphabet: tuple[str, ...]
    delta: tuple[tuple[frozenset[int], ...], ...]
    initial: frozenset[int]
    accepting: frozenset[int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        object.__setattr__(
            self, "delta", tuple(tuple(frozenset(cell) for cell in row) for row in self.delta)
        )
        object.__setattr__(self, "initial", frozenset(self.initial))
        object.__setattr__(self, "accepting", frozenset(self.accepting))
        _check_alphabet(self.alphabet)
        n = len(self.delta)
        if n == 0:
            raise ValueError("an automaton needs at least one state")
        for q, row in enumerate(self.delta):
            if len(row) != len(self.alphabet):
                raise ValueError(f"state {q}: expected {len(self.alphabet)} successor sets")
            for cell in row:
                for target in cell:
                    if not 0 <= target < n:
                        raise ValueError(f"state {q}: successor {target} out of range")
        for q in self.initial | self.accepting:
            if not 0 <= q < n:
                raise ValueError(f"state {q} out of range for {n} states")

    @property
    def state_count(self) -> int:
        return len(self.delta)

    @classmethod
    def from_edges(
        cls,
        alphabet: Sequence[str],
        state_count: int,
        initial: Iterable[int],
        accepting: Iterable[int],
        edges: Iterable[tuple[int, int, int]],
    ) -> "Nfa":
        """Build from sparse ``(state, symbol index, successor)`` triples."""
        rows: list[list[set[int]]] = [[set() for _ in alphabet] for _ in range(state_count)]
        for q, s, r in edges:
            rows[q][s].add(r)
        return cls(
            alphabet=tuple(alphabet),
            delta=tuple(tuple(frozenset(cell) for cell in row) for row in rows),
            initial=frozenset(initial),
            accepting=frozenset(accepting),
        )


def _check_alphabet(names: tuple[str, ...]) -> None:
    if not names:
        raise ValueError("alphabet must not be empty")
    if len(set(names)) != len(names):
        raise ValueError("alphabet symbols must be distinct")
    for name in names:
        if not name or not name.isprintable() or any(c.isspace() for c in name):
            raise ValueError(f"bad alphabet symbol {name!r}")


def _run(d: Dfa, word: Word) -> int:
    state = d.start
    for s in word:
        state = d.delta[state][s]
    return state


def accepts(d: Dfa, w: str | Iterable[int]) -> bool:
    """Decide whether the automaton accepts the word."""
    return _run(d, d.word(w)) in d.accepting


def nfa_accepts(n: Nfa, w: str | Iterable[int]) -> bool:
    """Decide membership by direct subset simulation."""
    word = parse_word(n.alphabet, w) if isinstance(w, str) else tuple(w)
    k = len(n.alphabet)
    current = n.initial
    for s in word:
        if not 0 <= s < k:
            raise ValueError(f"symbol index {s} out of range for alphabet size {k}")
        current = frozenset().union(*(n.delta[q][s] for q in current))
    return bool(current & n.accepting)


def reachable_states(d: Dfa) -> frozenset[int]:
    """States reachable from the start state."""
    seen = {d.start}
    frontier = deque([d.start])
    while frontier:
        q = frontier.popleft()
        for target in d.delta[q]:
            if target not in seen:
                seen.add(target)
                frontier.append(target)
    return frozenset(seen)


def dead_states(d: Dfa) -> frozenset[int]:
    """Non-accepting states whose every transition is a self-loop.

    Equivalent to "only q is reachable from q": if anything else were
    reachable, some transition would have to leave q.
    """
    return frozenset(
        q
        for q in range(d.state_count)
        if q not in d.accepting and all(t == q for t in d.delta[q])
    )


def _partition_blocks(d: Dfa, states: Iterable[int] | None = None) -> dict[int, int]:
    """Moore partition refinement: same block id iff no word distinguishes.

    When ``states`` is given it must be closed under transitions; by default
    all states participate (so unreachable states can be compared too).
    """
    pool = list(states) if states is not None else list(range(d.state_count))
    pool.sort()
    block = {q: (1 if q in d.accepting else 0) for q in pool}
    n_blocks = len(set(block.values()))
    while True:
        sigs: dict[tuple[int, ...], int] = {}
        new_block: dict[int, int] = {}
        for q in pool:
            sig = (block[q],) + tuple(block[t] for t in d.delta[q])
            new_block[q] = sigs.setdefault(sig, len(sigs))
        if len(sigs) == n_blocks:
            return new_block
        block = new_block
        n_blocks = len(sigs)


def state_equivalent(d: Dfa, q1: int, q2: int) -> bool:
    """True iff the two states accept exactly the same words."""
    for q in (q1, q2):
        if not 0 <= q < d.state_count:
            raise ValueError(f"state {q} out of range for {d.state_count} states")
    if q1 == q2:
        return True
    blocks = _partition_blocks(d)
    return blocks[q1] == blocks[q2]


def minimize(d: Dfa) -> Dfa:
    """Canonical minimal DFA for the same language.

    Unreachable states are dropped, equivalent states merged by partition
    refinement, and the quotient renumbered breadth-first from the start
    exploring symbols in alphabet order, so equal languages over equal
    alphabets always yield the bit-identical automaton.
    """
    reach = reachable_states(d)
    blocks = _partition_blocks(d, reach)
    rep: dict[int, int] = {}
    for q in sorted(reach):
        rep.setdefault(blocks[q], q)
    order: dict[int, int] = {blocks[d.start]: 0}
    bfs: list[int] = [blocks[d.start]]
    queue = deque(bfs)
    while queue:
        b = queue.popleft()
        for t in d.delta[rep[b]]:
            tb = blocks[t]
            if tb not in order:
                order[tb] = len(order)
                bfs.append(tb)
                queue.append(tb)
    delta = tuple(tuple(order[blocks[t]] for t in d.delta[rep[b]]) for b in bfs)
    accepting = frozenset(order[blocks[q]] for q in reach if q in d.accepting)
    return Dfa(alphabet=d.alphabet, delta=delta, start=0, accepting=accepting)


def language_equivalent(d1: Dfa, d2: Dfa) -> bool:
    """Exact language equality, by product search for a distinguishing pair."""
    if d1.alphabet != d2.alphabet:
        raise ValueError(f"alphabet mismatch: {list(d1.alphabet)} vs {list(d2.alphabet)}")
    start = (d1.start, d2.start)
    seen = {start}
    frontier = deque([start])
    while frontier:
        p, q = frontier.popleft()
        if (p in d1.accepting) != (q in d2.accepting):
            return False
        for s in range(len(d1.alphabet)):
            pair = (d1.delta[p][s], d2.delta[q][s])
            if pair not in seen:
                seen.add(pair)
                frontier.append(pair)
    return True


def determinize(n: Nfa) -> Dfa:
    """Subset construction over reachable subsets, numbered breadth-first.

    The empty subset shows up as an ordinary dead sink whenever some symbol
    has nowhere to go; a subset accepts iff it meets the NFA's accepting set.
    """
    k = len(n.alphabet)
    start = frozenset(n.initial)
    index: dict[frozenset[int], int] = {start: 0}
    subsets: list[frozenset[int]] = [start]
    pending = deque([start])
    rows: list[tuple[int, ...]] = []
    while pending:
        subset = pending.popleft()
        row = []
        for s in range(k):
            target = frozenset().union(*(n.delta[q][s] for q in subset))
            if target not in index:
                index[target] = len(subsets)
                subsets.append(target)
                pending.append(target)
            row.append(index[target])
        rows.append(tuple(row))
    accepting = frozenset(i for i, sub in enumerate(subsets) if sub & n.accepting)
    return Dfa(alphabet=n.alphabet, delta=tuple(rows), start=0, accepting=accepting)


def is_permutation_automaton(d: Dfa) -> bool:
    """True iff every symbol acts as a bijection on the state set."""
    n = d.state_count
    return all(
        len({d.delta[q][s] for q in range(n)}) == n for s in range(len(d.alphabet))
    )


def enumerate_accepted(d: Dfa, max_len: int) -> list[Word]:
    """All accepted words of length <= max_len, shortest first, then
    lexicographic in alphabet order. Brute force; meant for small bounds."""
    if max_len < 0:
        raise ValueError("max_len must be non-negative")
    k = len(d.alphabet)
    out: list[Word] = []
    for length in range(max_len + 1):
        for word in product(range(k), repeat=length):
            state = d.start
            for s in word:
                state = d.delta[state][s]
            if state in d.accepting:
                out.append(word)
    return out


def extend_alphabet(d: Dfa, alphabet: Sequence[str]) -> Dfa:
    """Re-express the automaton over a superset alphabet.

    Symbols are matched by name; genuinely new symbols all lead to a fresh
    non-accepting sink appended as the last state. Without new symbols the
    columns are merely reordered.
    """
    names = tuple(alphabet)
    _check_alphabet(names)
    dropped = [s for s in d.alphabet if s not in names]
    if dropped:
        raise ValueError(f"new alphabet drops symbols {dropped}")
    old_index = {name: i for i, name in enumerate(d.alphabet)}
    if all(name in old_index for name in names):
        delta = tuple(tuple(row[old_index[name]] for name in names) for row in d.delta)
        return Dfa(names, delta, d.start, d.accepting)
    sink = d.state_count
    rows = [
        tuple(row[old_index[name]] if name in old_index else sink for name in names)
        for row in d.delta
    ]
    rows.append(tuple(sink for _ in names))
    return Dfa(names, tuple(rows), d.start, d.accepting)
