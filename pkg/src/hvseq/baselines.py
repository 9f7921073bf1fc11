"""String-similarity baselines: Levenshtein variants and open-bigram kernels."""

from __future__ import annotations

from collections import Counter
from math import sqrt

from .encoder import double_edges

WILDCARD = "*"


def levenshtein(x: str, y: str) -> int:
    """Unit-cost edit distance (insert, delete, substitute)."""
    if len(x) < len(y):
        x, y = y, x
    prev = list(range(len(y) + 1))
    for i, cx in enumerate(x, 1):
        cur = [i]
        for j, cy in enumerate(y, 1):
            cur.append(min(prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + (cx != cy)))
        prev = cur
    return prev[-1]


def lev_sim(x: str, y: str, norm: str = "max", db: bool = False) -> float:
    """Levenshtein similarity normalised by the summed or the larger length.

    ``norm="sum"`` gives ``1 - lev / (|x| + |y|)``, ``norm="max"`` gives
    ``1 - lev / max(|x|, |y|)``. With `db`, both strings are edge-doubled
    first and the doubled lengths are used.
    """
    if not x or not y:
        raise ValueError("lev_sim needs nonempty strings")
    if db:
        x, y = double_edges(x), double_edges(y)
    dist = levenshtein(x, y)
    if norm == "sum":
        return 1.0 - dist / (len(x) + len(y))
    if norm == "max":
        return 1.0 - dist / max(len(x), len(y))
    raise ValueError(f"norm must be 'sum' or 'max', got {norm!r}")


def ordered_pairs(s: str, max_gap: int | None = None) -> list[tuple[str, str, int]]:
    """All ``(s[i], s[j], j - i)`` with ``i < j`` and ``j - i <= max_gap``."""
    out = []
    for i in range(len(s)):
        stop = len(s) if max_gap is None else min(len(s), i + max_gap + 1)
        for j in range(i + 1, stop):
            out.append((s[i], s[j], j - i))
    return out


def _cosine(a: Counter, b: Counter) -> float:
    na = sqrt(sum(v * v for v in a.values()))
    nb = sqrt(sum(v * v for v in b.values()))
    if na == 0.0 or nb == 0.0:
        return 0.0
    return sum(v * b[k] for k, v in a.items() if k in b) / (na * nb)


def uob_gvh_sim(x: str, y: str) -> float:
    """Shared unconstrained open bigrams over those of the target `y`.

    Bigrams are ordered letter pairs at any distance, counted once each.
    """
    if len(y) < 2:
        raise ValueError("target must contain at least two symbols")
    xs = {(a, b) for a, b, _ in ordered_pairs(x)}
    ys = {(a, b) for a, b, _ in ordered_pairs(y)}
    return len(xs & ys) / len(ys)


def bigram_counts(s: str, window: int = 3) -> Counter:
    """Counts of ordered letter pairs whose positions differ by < `window`."""
    if window < 2:
        raise ValueError(f"window must be >= 2, got {window}")
    return Counter((a, b) for a, b, _ in ordered_pairs(s, window - 1))


def kernel_uob_sim(x: str, y: str, window: int = 3) -> float:
    """Cosine between windowed open-bigram count vectors (0 for short strings)."""
    return _cosine(bigram_counts(x, window), bigram_counts(y, window))


def wildcard3_counts(s: str) -> Counter:
    """Length-3 wildcard patterns of every letter pair at most two apart.

    Adjacent ``ab`` gives ``ab*`` and ``*ab``; ``a?b`` gives ``a*b``.
    """
    counts: Counter = Counter()
    for a, b, gap in ordered_pairs(s, 2):
        if gap == 1:
            counts[a + b + WILDCARD] += 1
            counts[WILDCARD + a + b] += 1
        else:
            counts[a + WILDCARD + b] += 1
    return counts


def wildcard3_sim(x: str, y: str) -> float:
    if len(x) < 2 or len(y) < 2:
        raise ValueError("3-wildcard similarity needs strings of length >= 2")
    return _cosine(wildcard3_counts(x), wildcard3_counts(y))
