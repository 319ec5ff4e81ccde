"""Words, letter alternation and the graphs words induce."""

from __future__ import annotations

from itertools import combinations
from typing import Hashable, Sequence

from .graph import Graph, from_edge_list

__all__ = [
    "alternate",
    "find_word_bounded",
    "format_word",
    "graph_of_word",
    "parse_word",
    "represents",
]

Word = Sequence[int]


def alternate(word: Sequence[Hashable], x: Hashable, y: Hashable) -> bool:
    """True iff ``x`` and ``y`` alternate in ``word``.

    A restriction with at most one letter in total alternates vacuously.
    """
    if x == y:
        raise ValueError("alternation is defined for distinct letters")
    last = None
    for letter in word:
        if letter == x or letter == y:
            if letter == last:
                return False
            last = letter
    return True


def _letter_key(letter: Hashable) -> tuple:
    if isinstance(letter, int):
        return (0, letter, "")
    text = str(letter)
    if text.isdigit():
        return (0, int(text), text)
    return (1, 0, text)


def graph_of_word(word: Sequence[Hashable]) -> Graph:
    """Graph on the distinct letters of ``word``, edges between alternating pairs.

    Vertices are the letters in natural order (numbers first, numerically);
    labels are the letters as strings.
    """
    if not word:
        raise ValueError("empty word")
    letters = sorted(set(word), key=_letter_key)
    index = {a: i for i, a in enumerate(letters)}
    seq = [index[a] for a in word]
    edges = [(i, j) for i, j in combinations(range(len(letters)), 2) if alternate(seq, i, j)]
    return from_edge_list(len(letters), edges, [str(a) for a in letters])


def represents(word: Word, g: Graph) -> bool:
    """True iff ``word`` (over the vertex ids of ``g``) represents ``g``."""
    present = set(word)
    for v in present:
        if not 0 <= v < g.n:
            raise ValueError(f"letter {v} is not a vertex of the graph")
    missing = [v for v in g.vertices if v not in present]
    if missing:
        raise ValueError(f"vertices {missing} do not occur in the word")
    for u, v in combinations(range(g.n), 2):
        if alternate(word, u, v) != g.has_edge(u, v):
            return False
    return True


def parse_word(text: str, g: Graph | None = None, *, one_based: bool = False) -> tuple:
    """Tokenise a word: whitespace-separated tokens, or one letter per character.

    With a graph, tokens resolve to vertex ids through its labels (decimal ids
    when unlabeled, shifted down by one if ``one_based``). Without a graph the
    raw tokens are returned.
    """
    tokens = text.split() if any(ch.isspace() for ch in text.strip()) else list(text.strip())
    if not tokens:
        raise ValueError("empty word")
    if g is None:
        return tuple(tokens)
    out = []
    for tok in tokens:
        if one_based and g.labels is None:
            v = int(tok) - 1
            if not 0 <= v < g.n:
                raise ValueError(f"letter {tok!r} is not a vertex")
        else:
            try:
                v = g.vertex(tok)
            except (KeyError, ValueError):
                raise ValueError(f"letter {tok!r} is not a vertex") from None
        out.append(v)
    return tuple(out)


def format_word(word: Word, g: Graph | None = None) -> str:
    return " ".join(g.label(v) if g is not None else str(v) for v in word)


def find_word_bounded(g: Graph, k: int, *, guard: int = 24) -> tuple[int, ...] | None:
    """Search for a ``k``-uniform word representing ``g``.

    Only positive certificates mean anything: ``None`` says no ``k``-uniform
    word exists, which does not rule out representability with more copies.
    Cyclic shifts of a uniform representant are representants, so the search
    fixes vertex 0 as the first letter.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    n = g.n
    if k * n > guard:
        raise ValueError(f"word length {k * n} exceeds the search guard {guard}")
    adj = g.adj
    total = k * n
    count = [0] * n
    word: list[int] = []

    def extend(seen_since: list[int]) -> bool:
        # seen_since[v]: letters placed after the latest copy of v
        if len(word) == total:
            return all(
                adj[u] >> v & 1 or not alternate(word, u, v)
                for u, v in combinations(range(n), 2)
            )
        candidates = range(n) if word else (0,)
        for v in candidates:
            if count[v] == k:
                continue
            if count[v] and adj[v] & ~seen_since[v]:
                continue
            bit = 1 << v
            nxt = [s | bit for s in seen_since]
            nxt[v] = 0
            word.append(v)
            count[v] += 1
            if extend(nxt):
                return True
            count[v] -= 1
            word.pop()
        return False

    return tuple(word) if extend([0] * n) else None
