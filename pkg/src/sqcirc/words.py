"""Elementary combinatorics on words.

Words are plain ``str`` values; a symbol is a one-character string. Positions
are 1-based throughout the public API, so ``rotation(w, 1) == w`` and the
rotation at position i is w_i..w_t w_1..w_{i-1}.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional


@dataclass(frozen=True)
class SymbolOrder:
    """A total order on symbols.

    ``symbols is None`` means the natural codepoint order, which is the
    default everywhere. An explicit order is a permutation string such as
    "ba", read as b < a. Presentation helpers (extremal rotations, maximal
    edges, circuit arrangement) honour the order; structural identities
    (conjugacy, circuit roots, class partitions) never depend on it.
    """

    symbols: Optional[tuple[str, ...]] = None

    @classmethod
    def natural(cls) -> "SymbolOrder":
        return cls(None)

    @classmethod
    def from_string(cls, perm: str) -> "SymbolOrder":
        syms = tuple(perm)
        if len(set(syms)) != len(syms):
            raise ValueError(f"order string has repeated symbols: {perm!r}")
        if not syms:
            raise ValueError("order string is empty")
        return cls(syms)

    def check_covers(self, w: str) -> None:
        if self.symbols is None:
            return
        missing = sorted(set(w) - set(self.symbols))
        if missing:
            raise ValueError(f"order is missing symbols: {missing}")

    def sort_key(self, w: str):
        """Key usable with sorted/min/max; raises if a symbol is unranked."""
        if self.symbols is None:
            return w
        rank = {c: i for i, c in enumerate(self.symbols)}
        try:
            return tuple(rank[c] for c in w)
        except KeyError as exc:
            raise ValueError(f"order is missing symbol {exc.args[0]!r}") from None

    def less(self, a: str, b: str) -> bool:
        return self.sort_key(a) < self.sort_key(b)


NATURAL = SymbolOrder.natural()


@dataclass(frozen=True)
class RationalExponent:
    """An exponent a + i/|u| for powers of a base word u.

    integer_part is a >= 0 and remainder_len is i with 0 <= i < |u|, so the
    power u^alpha has the integral length a*|u| + i.
    """

    integer_part: int
    remainder_len: int

    def __post_init__(self) -> None:
        if self.integer_part < 0 or self.remainder_len < 0:
            raise ValueError("exponent parts must be non-negative")

    @classmethod
    def from_length(cls, base_len: int, total_len: int) -> "RationalExponent":
        """The exponent alpha with alpha * base_len == total_len."""
        if base_len < 1:
            raise ValueError("empty base word")
        if total_len < 0:
            raise ValueError("negative power length")
        return cls(total_len // base_len, total_len % base_len)


def rotation(w: str, i: int) -> str:
    """Rotation starting at 1-based position i: w_i..w_t w_1..w_{i-1}.

    >>> rotation("abc", 2)
    'bca'
    """
    if not w:
        raise IndexError("empty word has no rotations")
    if not 1 <= i <= len(w):
        raise IndexError(f"rotation position {i} out of range 1..{len(w)}")
    return w[i - 1:] + w[:i - 1]


def conjugacy_class(w: str) -> frozenset[str]:
    """All rotations of w, duplicates collapsed."""
    if not w:
        raise ValueError("empty word has no conjugacy class")
    return frozenset(w[i:] + w[:i] for i in range(len(w)))


def extremal_rotation(w: str, order: SymbolOrder = NATURAL,
                      direction: str = "least") -> str:
    """The least or greatest element of the conjugacy class of w under order."""
    order.check_covers(w)
    pick = min if direction == "least" else max
    if direction not in ("least", "greatest"):
        raise ValueError(f"direction must be least or greatest, got {direction!r}")
    return pick(conjugacy_class(w), key=order.sort_key)


def least_rotation(w: str) -> str:
    """Canonical conjugacy-class representative: least rotation, natural order."""
    return min(conjugacy_class(w))


def border_length(w: str) -> int:
    """Length of the longest proper border (prefix that is also a suffix)."""
    # failure function, last entry only
    b = 0
    fail = [0] * (len(w) + 1)
    for i in range(1, len(w)):
        c = w[i]
        while b and w[b] != c:
            b = fail[b]
        if w[b] == c:
            b += 1
        fail[i + 1] = b
    return fail[len(w)]


def smallest_period(w: str) -> int:
    if not w:
        raise ValueError("empty word has no period")
    return len(w) - border_length(w)


def is_primitive(w: str) -> bool:
    """True iff w is not an integer power of a strictly shorter word."""
    if not w:
        raise ValueError("empty word")
    p = smallest_period(w)
    return p == len(w) or len(w) % p != 0


def primitive_root(w: str) -> tuple[str, int]:
    """The unique (root, exponent) with w == root**exponent and root primitive.

    The smallest period p = |w| - border is the root length iff it divides
    |w|; otherwise w itself is primitive.

    >>> primitive_root("abab")
    ('ab', 2)
    """
    if not w:
        raise ValueError("empty word")
    p = smallest_period(w)
    if len(w) % p == 0:
        return w[:p], len(w) // p
    return w, 1


def has_period(w: str, p: int) -> bool:
    """True iff w_i == w_{i+p} for every valid i."""
    if not 1 <= p <= len(w):
        raise ValueError(f"period {p} out of range 1..{len(w)}")
    return w[p:] == w[:-p]


def fractional_power(u: str, alpha) -> str:
    """u^alpha: u repeated, then the prefix of u of length alpha.remainder_len.

    alpha may be a RationalExponent or a plain non-negative int.

    >>> fractional_power("ab", RationalExponent(2, 1))
    'ababa'
    """
    if not u:
        raise ValueError("empty base word")
    if isinstance(alpha, int):
        alpha = RationalExponent(alpha, 0)
    if alpha.remainder_len >= len(u):
        raise ValueError("remainder length must be shorter than the base")
    return u * alpha.integer_part + u[:alpha.remainder_len]


def power_to_length(u: str, total_len: int) -> str:
    """u extended periodically to exactly total_len characters."""
    return fractional_power(u, RationalExponent.from_length(len(u), total_len))


def factors(w: str, n: int) -> set[str]:
    """L_w(n): the distinct length-n factors of w.

    n == 0 gives {""}; n > |w| gives the empty set, so complexity vanishes
    beyond the length of the word.
    """
    if n < 0:
        raise ValueError("factor length must be non-negative")
    if n == 0:
        return {""}
    return {w[i:i + n] for i in range(len(w) - n + 1)}


def complexity(w: str, n: int) -> int:
    """C_w(n) = |L_w(n)|."""
    return len(factors(w, n))


def _suffix_array(w: str) -> list[int]:
    # desk scale: direct sort on suffix slices
    return sorted(range(len(w)), key=lambda i: w[i:])


def _lcp_array(w: str, sa: list[int]) -> list[int]:
    # Kasai; lcp[r] = longest common prefix of sa[r] and sa[r+1]
    n = len(w)
    rank = [0] * n
    for r, i in enumerate(sa):
        rank[i] = r
    lcp = [0] * (n - 1) if n > 1 else []
    h = 0
    for i in range(n):
        r = rank[i]
        if r == n - 1:
            h = 0
            continue
        j = sa[r + 1]
        while i + h < n and j + h < n and w[i + h] == w[j + h]:
            h += 1
        lcp[r] = h
        if h:
            h -= 1
    return lcp


def complexity_profile(w: str) -> tuple[int, ...]:
    """C_w(n) for n = 0..|w|+1 in one pass (last entry is always 0).

    C_w(n) counts distinct length-n windows: of the |w|-n+1 windows, one per
    suffix long enough, duplicates are adjacent in suffix order and a window
    is repeated exactly when the neighbouring lcp reaches n.
    """
    n = len(w)
    if n == 0:
        return (1, 0)
    sa = _suffix_array(w)
    lcp = _lcp_array(w, sa)
    at_least = [0] * (n + 2)
    for v in lcp:
        at_least[min(v, n)] += 1
    for k in range(n - 1, 0, -1):
        at_least[k] += at_least[k + 1]
    prof = [1]
    for k in range(1, n + 1):
        prof.append((n - k + 1) - at_least[k])
    prof.append(0)
    return tuple(prof)


def common_root(x: str, y: str) -> Optional[str]:
    """The primitive p with x, y both powers of p, if xy == yx; else None."""
    if not x or not y:
        raise ValueError("empty word")
    if x + y != y + x:
        return None
    return primitive_root(x + y)[0]


def three_words_decomposition(x: str, y: str, z: str) -> Optional[tuple[str, str, int]]:
    """Solve xy == yz: returns (u, v, k) with x=uv, y=(uv)^k u, z=vu, or None.

    Found by direct search over the cut of x; the equation forces |x| == |z|.
    """
    if not x or not y:
        raise ValueError("x and y must be nonempty")
    if x + y != y + z:
        return None
    for cut in range(len(x) + 1):
        u, v = x[:cut], x[cut:]
        if z != v + u:
            continue
        rem = len(y) - cut
        if rem < 0 or rem % len(x):
            continue
        k = rem // len(x)
        if y == x * k + u:
            return u, v, k
    return None


def alphabet(w: str) -> frozenset[str]:
    """Alph(w): the set of distinct symbols of w."""
    return frozenset(w)
