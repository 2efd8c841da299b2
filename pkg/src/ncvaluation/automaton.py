"""Aho-Corasick automaton over generator indices.

Recognizes occurrences of a set of pattern words (the leading monomials of
a monic set).  Normal words are exactly the words whose run never enters a
state with a nonempty output set.
"""

from __future__ import annotations

from collections import deque
from typing import List, Optional, Sequence, Tuple

Word = Tuple[int, ...]


class NormalWordAutomaton:
    def __init__(self, patterns: Sequence[Word], n_letters: int, weights: Optional[Sequence[int]] = None):
        self.patterns = tuple(tuple(p) for p in patterns)
        if any(not p for p in self.patterns):
            raise ValueError("the empty word cannot be a pattern")
        self.n = n_letters
        self.weights = tuple(weights) if weights is not None else (1,) * n_letters
        goto = [{}]
        out: List[List[int]] = [[]]
        for idx, pat in enumerate(self.patterns):
            s = 0
            for a in pat:
                nxt = goto[s].get(a)
                if nxt is None:
                    nxt = len(goto)
                    goto[s][a] = nxt
                    goto.append({})
                    out.append([])
                s = nxt
            out[s].append(idx)

        n_states = len(goto)
        fail = [0] * n_states
        delta = [[0] * n_letters for _ in range(n_states)]
        depth = [0] * n_states
        queue = deque()
        for a in range(n_letters):
            t = goto[0].get(a)
            if t is not None:
                delta[0][a] = t
                depth[t] = 1
                queue.append(t)
        while queue:
            s = queue.popleft()
            out[s] = out[s] + [i for i in out[fail[s]] if i not in out[s]]
            for a in range(n_letters):
                t = goto[s].get(a)
                if t is None:
                    delta[s][a] = delta[fail[s]][a]
                else:
                    fail[t] = delta[fail[s]][a]
                    depth[t] = depth[s] + 1
                    delta[s][a] = t
                    queue.append(t)
        self.delta = delta
        self.fail = fail
        self.output = [tuple(o) for o in out]
        self.dead = [bool(o) for o in out]

    @property
    def n_states(self) -> int:
        return len(self.delta)

    def occurrences(self, word: Word):
        """All ``(pattern_index, start)`` pairs, in order of end position."""
        s = 0
        found = []
        pats = self.patterns
        for pos, a in enumerate(word):
            s = self.delta[s][a]
            for idx in self.output[s]:
                found.append((idx, pos + 1 - len(pats[idx])))
        return found

    def is_normal(self, word: Word) -> bool:
        s = 0
        delta, dead = self.delta, self.dead
        for a in word:
            s = delta[s][a]
            if dead[s]:
                return False
        return True

    def first_divisor(self, word: Word):
        """``(pattern_index, start)`` with the lowest pattern index, leftmost start.

        Returns None when ``word`` is normal.
        """
        best = None
        for idx, start in self.occurrences(word):
            if best is None or (idx, start) < best:
                best = (idx, start)
        return best

    def normal_words(self, max_deg: int) -> List[List[Word]]:
        """Normal words grouped by weighted degree ``0..max_deg``."""
        groups: List[List[Word]] = [[] for _ in range(max_deg + 1)]
        if max_deg < 0:
            return groups
        weights, delta, dead = self.weights, self.delta, self.dead
        stack = [((), 0, 0)]
        while stack:
            word, state, deg = stack.pop()
            groups[deg].append(word)
            for a in range(self.n - 1, -1, -1):
                d = deg + weights[a]
                if d > max_deg:
                    continue
                t = delta[state][a]
                if not dead[t]:
                    stack.append((word + (a,), t, d))
        for g in groups:
            g.sort()
        return groups

    def counts(self, max_deg: int) -> List[int]:
        """Number of normal words in each weighted degree, by dynamic programming."""
        if max_deg < 0:
            return []
        weights, delta, dead = self.weights, self.delta, self.dead
        # table[d][s]: normal words of degree d whose run ends in state s
        table = [dict() for _ in range(max_deg + 1)]
        table[0][0] = 1
        for d in range(max_deg + 1):
            for s, c in table[d].items():
                for a in range(self.n):
                    e = d + weights[a]
                    if e > max_deg:
                        continue
                    t = delta[s][a]
                    if not dead[t]:
                        table[e][t] = table[e].get(t, 0) + c
        return [sum(row.values()) for row in table]
