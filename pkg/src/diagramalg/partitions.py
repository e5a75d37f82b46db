"""Integer-partition combinatorics and the labelling of irreducible modules.

Partitions are tuples of weakly decreasing positive ints; () is the empty
partition.  Lists of partitions of a given size are always produced in
descending lexicographic order, which is the row/column order used by the
character tables.
"""

import itertools
from functools import cache
from math import comb

from .diagrams import (
    BRAUER,
    MOTZKIN,
    PLANAR_PARTITION,
    PLANAR_ROOK,
    SYMMETRIC_GROUP,
    TEMPERLEY_LIEB,
    normalize_family,
)
from .errors import FamilyUnsupported, IndexOutOfRange

_SINGLE_ROW = (TEMPERLEY_LIEB, MOTZKIN, PLANAR_ROOK)


def check_partition(p):
    """Validate and return a partition as a tuple."""
    p = tuple(p)
    if any(not isinstance(x, int) or x < 1 for x in p):
        raise ValueError("partition parts must be positive ints: %r" % (p,))
    if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise ValueError("partition parts must weakly decrease: %r" % (p,))
    return p


@cache
def partitions(m):
    """All partitions of m, descending lexicographic: (m,) first."""
    if m < 0:
        return ()

    def rec(rest, maxpart):
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, maxpart), 0, -1):
            for tail in rec(rest - first, first):
                yield (first,) + tail

    return tuple(rec(m, m))


def multiplicities(p):
    """Map part size i to its multiplicity m_i(p)."""
    out = {}
    for part in p:
        out[part] = out.get(part, 0) + 1
    return out


def divisors(kappa):
    """Coordinatewise divisors of a partition, ascending lexicographic.

    nu divides kappa when they have the same length and nu_i | kappa_i.
    The result is a list of tuples (compositions, not sorted)."""
    kappa = check_partition(kappa)
    choices = [
        [d for d in range(1, part + 1) if part % d == 0] for part in kappa
    ]
    return [tuple(c) for c in itertools.product(*choices)]


def binom(a, b):
    """Binomial coefficient, zero outside 0 <= b <= a."""
    if b < 0 or a < 0 or b > a:
        return 0
    return comb(a, b)


@cache
def stirling2(n, j):
    """Stirling number of the second kind, zero outside 0 <= j <= n."""
    if n == 0 and j == 0:
        return 1
    if j <= 0 or j > n or n < 0:
        return 0
    return j * stirling2(n - 1, j) + stirling2(n - 1, j - 1)


def double_factorial(n):
    """n!! with the conventions (-1)!! = 1 and n!! = 0 for n < -1."""
    if n < -1:
        return 0
    out = 1
    while n > 1:
        out *= n
        n -= 2
    return out


@cache
def bell(n):
    """Number of set partitions of an n-element set."""
    return sum(stirling2(n, j) for j in range(n + 1))


def rank_set(family, k):
    """Possible numbers of propagating blocks for diagrams of the family."""
    family = normalize_family(family)
    if not isinstance(k, int) or k < 1:
        raise IndexOutOfRange("k must be a positive integer, got %r" % (k,))
    if family == SYMMETRIC_GROUP:
        return [k]
    if family in (BRAUER, TEMPERLEY_LIEB):
        return list(range(k % 2, k + 1, 2))
    return list(range(k + 1))


def lambda_star_labels(family, k):
    """Module labels lambda* for the family, grouped by size ascending.

    Within each size labels run in descending lexicographic order; the
    single-row families only carry (m,).
    """
    family = normalize_family(family)
    if family == PLANAR_PARTITION:
        raise FamilyUnsupported(
            "PlanarPartition has no module labelling here"
        )
    labels = []
    for m in rank_set(family, k):
        if family in _SINGLE_ROW:
            labels.append((m,) if m else ())
        elif family == SYMMETRIC_GROUP:
            labels.extend(partitions(k))
        else:
            labels.extend(partitions(m))
    return labels


def index_set(family, k, n):
    """Full partitions lambda = (n - |lambda*|, lambda*) indexing the
    irreducibles, for an integer n >= 2k."""
    family = normalize_family(family)
    if not isinstance(n, int) or n < 2 * k:
        raise ValueError("need an integer n >= 2k, got n=%r, k=%r" % (n, k))
    out = []
    for star in lambda_star_labels(family, k):
        m = sum(star)
        out.append((n - m,) + star)
    return out


def num_partitions(m):
    return len(partitions(m))
