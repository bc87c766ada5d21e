"""Distinct square factors and their conjugacy classes.

A square is a factor uu. Squares are grouped by the conjugacy class of the
primitive root of the half u; each class carries an index, a canonical root
and per-member coordinates (i, j) with uu = v_s(i) v^{2j-1} v_p(i), i.e. the
member is rotation(v, i)^{2j}.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from .words import conjugacy_class, is_primitive, least_rotation, primitive_root

_MISMATCH = re.compile(rb"[^\x00]+")


@dataclass(frozen=True, order=True)
class Square:
    half: str
    word: str

    def __post_init__(self) -> None:
        if not self.half or self.word != self.half * 2:
            raise ValueError("a square is half + half with a nonempty half")


@dataclass(frozen=True)
class ClassCoordinates:
    i: int
    j: int


@dataclass(frozen=True)
class SquareClass:
    root: str
    index: int
    members: frozenset[Square]


def _encode(w: str) -> bytes | None:
    # one byte per symbol so xor tricks see aligned positions
    syms = set(w)
    if len(syms) > 256:
        return None
    table = {c: i for i, c in enumerate(sorted(syms))}
    return bytes(table[c] for c in w)


def match_runs(w: str, lag: int, _wb: bytes | None = None) -> list[tuple[int, int]]:
    """Maximal runs (start, length) of positions t with w[t] == w[t+lag].

    A run (s, L) certifies that w[s : s+L+lag] is periodic with period lag.
    """
    n = len(w)
    if not 1 <= lag:
        raise ValueError("lag must be positive")
    if lag >= n:
        return []
    wb = _encode(w) if _wb is None else _wb
    if wb is None:
        runs = []
        t = 0
        while t < n - lag:
            if w[t] != w[t + lag]:
                t += 1
                continue
            s = t
            while t < n - lag and w[t] == w[t + lag]:
                t += 1
            runs.append((s, t - s))
        return runs
    x = int.from_bytes(wb[:n - lag], "big") ^ int.from_bytes(wb[lag:], "big")
    z = x.to_bytes(n - lag, "big")
    runs = []
    prev = 0
    for m in _MISMATCH.finditer(z):
        if m.start() > prev:
            runs.append((prev, m.start() - prev))
        prev = m.end()
    if n - lag > prev:
        runs.append((prev, n - lag - prev))
    return runs


def _squares_scan(w: str) -> set[str]:
    # the contract algorithm: try every start and half length
    found: set[str] = set()
    n = len(w)
    for half in range(1, n // 2 + 1):
        for start in range(n - 2 * half + 1):
            mid = start + half
            if w[start:mid] == w[mid:mid + half]:
                found.add(w[start:mid + half])
    return found


def _squares_runs(w: str) -> set[str]:
    # same output through period runs; per run only the first few phases can
    # produce distinct squares (rotations repeat once the base root cycles)
    found: set[str] = set()
    n = len(w)
    wb = _encode(w)
    for half in range(1, n // 2 + 1):
        for s, run_len in match_runs(w, half, wb):
            starts = run_len - half + 1
            if starts <= 0:
                continue
            base_root = len(primitive_root(w[s:s + half])[0])
            for phi in range(min(base_root, starts)):
                p = s + phi
                found.add(w[p:p + 2 * half])
    return found


def distinct_squares(w: str) -> frozenset[Square]:
    """All nonempty factors of w of the form uu, as words (not occurrences).

    >>> sorted(sq.word for sq in distinct_squares("aababa"))
    ['aa', 'abab', 'baba']
    """
    words = _squares_scan(w) if len(w) <= 256 else _squares_runs(w)
    return frozenset(Square(s[:len(s) // 2], s) for s in words)


def _qualifying_rotations(w: str, root: str, index: int) -> list[str]:
    return [t for t in conjugacy_class(root) if t * (2 * index) in w]


def class_representative(w: str, any_root: str) -> str:
    """The canonical name v of the class of any_root in w.

    v is conjugate to any_root, v^{2*Index} is a factor of w, and among the
    qualifying rotations v is lexicographically least under the default order.
    """
    if not is_primitive(any_root):
        raise ValueError("root must be primitive")
    for cls in square_classes(w):
        if cls.root in conjugacy_class(any_root):
            return cls.root
    raise ValueError(f"no square of class [{any_root}] occurs in the word")


def square_classes(w: str) -> list[SquareClass]:
    """Partition of distinct_squares(w) by conjugacy of the half's root.

    Classes are sorted by (root length, root) under the default order. The
    index is the largest n such that u^{2n} is a factor for some u conjugate
    to the root; the stored root is the least qualifying rotation.
    """
    groups: dict[str, set[Square]] = {}
    indexes: dict[str, int] = {}
    for sq in distinct_squares(w):
        root, exp = primitive_root(sq.half)
        canon = least_rotation(root)
        groups.setdefault(canon, set()).add(sq)
        if exp > indexes.get(canon, 0):
            indexes[canon] = exp
    out = []
    for canon, members in groups.items():
        index = indexes[canon]
        rep = min(_qualifying_rotations(w, canon, index))
        out.append(SquareClass(rep, index, frozenset(members)))
    out.sort(key=lambda c: (len(c.root), c.root))
    return out


def square_coordinates(sq: Square, cls: SquareClass) -> ClassCoordinates:
    """The unique (i, j) with sq.word == v_s(i) v^{2j-1} v_p(i), v = cls.root.

    Equivalently sq.word == rotation(v, i)^{2j}; uniqueness holds because v
    is primitive.
    """
    if sq not in cls.members:
        raise ValueError("square does not belong to this class")
    v = cls.root
    q, j = primitive_root(sq.half)
    doubled = v + v
    off = doubled.find(q)
    if off < 0 or len(q) != len(v):
        raise ValueError("class root is not conjugate to the square's root")
    return ClassCoordinates(off + 1, j)


def rebuild_from_coordinates(v: str, coords: ClassCoordinates) -> str:
    """v_s(i) v^{2j-1} v_p(i): the square named by class-root coordinates."""
    i, j = coords.i, coords.j
    return v[i - 1:] + v * (2 * j - 1) + v[:i - 1]
