"""Two-row set-partition diagrams and the diagram families.

A diagram on k strands is a set partition of the 2k vertices
{1,...,k, 1',...,k'}.  Internally the bottom vertex j' is stored as the
integer k + j, so a diagram is simply a set partition of {1,...,2k} in a
fixed canonical form.  Concatenation stacks one diagram on top of another,
fuses blocks through the shared middle row, and reports how many connected
components vanished from the middle; the algebra layer turns that count
into a power of the parameter n.
"""

import itertools
import os
import re
from collections import namedtuple
from functools import lru_cache

from .errors import (
    CapExceeded,
    DiagramSyntaxError,
    DuplicateVertex,
    IndexOutOfRange,
    MissingVertex,
    RankMismatch,
)

PARTITION = "Partition"
BRAUER = "Brauer"
ROOK_BRAUER = "RookBrauer"
ROOK = "Rook"
TEMPERLEY_LIEB = "TemperleyLieb"
MOTZKIN = "Motzkin"
PLANAR_ROOK = "PlanarRook"
PLANAR_PARTITION = "PlanarPartition"
SYMMETRIC_GROUP = "SymmetricGroup"

FAMILIES = (
    PARTITION,
    BRAUER,
    ROOK_BRAUER,
    ROOK,
    TEMPERLEY_LIEB,
    MOTZKIN,
    PLANAR_ROOK,
    PLANAR_PARTITION,
    SYMMETRIC_GROUP,
)

_ALIASES = {f.lower(): f for f in FAMILIES}
_ALIASES.update(
    {
        "rook-brauer": ROOK_BRAUER,
        "temperley-lieb": TEMPERLEY_LIEB,
        "tl": TEMPERLEY_LIEB,
        "planar-rook": PLANAR_ROOK,
        "planar-partition": PLANAR_PARTITION,
        "symmetric-group": SYMMETRIC_GROUP,
        "symmetric": SYMMETRIC_GROUP,
    }
)


def normalize_family(name):
    """Return the canonical family tag for a (possibly lowercase) name."""
    try:
        return _ALIASES[str(name).strip().lower()]
    except KeyError:
        raise ValueError("unknown family: %r" % (name,)) from None


class Diagram:
    """A set partition of {1..2k}, hashed and compared in canonical form.

    blocks is a tuple of tuples of ints: each block sorted ascending (top
    vertices 1..k precede bottom vertices k+1..2k automatically), blocks
    sorted by their least vertex.
    """

    __slots__ = ("k", "blocks")

    def __init__(self, k, blocks):
        if not isinstance(k, int) or k < 1:
            raise IndexOutOfRange("k must be a positive integer, got %r" % (k,))
        canon = tuple(sorted(tuple(sorted(b)) for b in blocks))
        seen = [v for b in canon for v in b]
        if sorted(seen) != list(range(1, 2 * k + 1)):
            raise ValueError("blocks must partition {1..%d}" % (2 * k))
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "blocks", canon)

    def __setattr__(self, name, value):
        raise AttributeError("Diagram is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, Diagram)
            and self.k == other.k
            and self.blocks == other.blocks
        )

    def __hash__(self):
        return hash((self.k, self.blocks))

    def __lt__(self, other):
        return (self.k, self.blocks) < (other.k, other.blocks)

    def text(self):
        return format_diagram(self)

    def __repr__(self):
        return "Diagram(%d, %r)" % (self.k, self.text())


ConcatResult = namedtuple("ConcatResult", ["product", "deleted"])

_VERTEX_RE = re.compile(r"^(\d+)(')?$")


def vertex_name(v, k):
    """Render internal vertex number v as `i` or `i'`."""
    return str(v) if v <= k else "%d'" % (v - k)


def parse_diagram(text, k):
    """Parse `block ('|' block)*` notation, e.g. "1 1' | 2 2'" at k = 2.

    Every vertex 1..k and 1'..k' must appear exactly once.
    """
    if not isinstance(k, int) or k < 1:
        raise IndexOutOfRange("k must be a positive integer, got %r" % (k,))
    pieces = text.split("|")
    blocks = []
    seen = set()
    for piece in pieces:
        tokens = piece.split()
        if not tokens:
            raise DiagramSyntaxError("empty block in %r" % (text,))
        block = []
        for tok in tokens:
            match = _VERTEX_RE.match(tok)
            if match is None:
                raise DiagramSyntaxError("bad vertex token %r" % (tok,))
            idx = int(match.group(1))
            if not 1 <= idx <= k:
                raise IndexOutOfRange("vertex index %d outside 1..%d" % (idx, k))
            v = idx if match.group(2) is None else k + idx
            if v in seen:
                raise DuplicateVertex("vertex %s listed twice" % vertex_name(v, k))
            seen.add(v)
            block.append(v)
        blocks.append(tuple(block))
    missing = [v for v in range(1, 2 * k + 1) if v not in seen]
    if missing:
        raise MissingVertex("vertex %s missing" % vertex_name(missing[0], k))
    return Diagram(k, blocks)


def format_diagram(d):
    return " | ".join(
        " ".join(vertex_name(v, d.k) for v in block) for block in d.blocks
    )


class _DSU:
    __slots__ = ("parent",)

    def __init__(self, size):
        self.parent = list(range(size))

    def find(self, x):
        parent = self.parent
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra


def concat(d1, d2):
    """Stack d1 above d2; return (product diagram, deleted middle components).

    The bottom row of d1 is identified with the top row of d2; connected
    components living entirely in that shared middle row are removed and
    counted.
    """
    if d1.k != d2.k:
        raise RankMismatch("cannot concatenate k=%d with k=%d" % (d1.k, d2.k))
    k = d1.k
    # node layout: 1..k top of d1, k+1..2k middle, 2k+1..3k bottom of d2
    dsu = _DSU(3 * k + 1)
    for block in d1.blocks:
        for v in block[1:]:
            dsu.union(block[0], v)
    for block in d2.blocks:
        shifted = [v + k for v in block]
        for v in shifted[1:]:
            dsu.union(shifted[0], v)
    groups = {}
    for v in range(1, 3 * k + 1):
        groups.setdefault(dsu.find(v), []).append(v)
    blocks = []
    deleted = 0
    for members in groups.values():
        outer = [v if v <= k else v - k for v in members if v <= k or v > 2 * k]
        if outer:
            blocks.append(tuple(outer))
        else:
            deleted += 1
    return ConcatResult(Diagram(k, blocks), deleted)


def transpose(d):
    """Mirror over the horizontal axis: i <-> i'."""
    k = d.k
    return Diagram(
        k, [tuple(v + k if v <= k else v - k for v in b) for b in d.blocks]
    )


def rank(d):
    """Number of propagating blocks (blocks meeting both rows)."""
    k = d.k
    return sum(1 for b in d.blocks if b[0] <= k < b[-1])


def _positions(block, k):
    # boundary reading order 1..k, k'..1'; bottom j' sits at 2k+1-j
    return sorted(v if v <= k else 2 * k + 1 - (v - k) for v in block)


def _interleave(pa, pb):
    # two sorted position lists cross iff the merged label word switches
    # between them at least three times
    merged = sorted([(p, 0) for p in pa] + [(p, 1) for p in pb])
    switches = 0
    for (_, label), (_, prev) in zip(merged[1:], merged[:-1]):
        if label != prev:
            switches += 1
    return switches >= 3


def is_planar(d):
    """True iff no two blocks cross in the boundary order 1..k, k'..1'."""
    k = d.k
    pos = [_positions(b, k) for b in d.blocks]
    for i in range(len(pos)):
        for j in range(i + 1, len(pos)):
            if _interleave(pos[i], pos[j]):
                return False
    return True


def in_family(d, family):
    """Membership predicate for each diagram family."""
    family = normalize_family(family)
    k = d.k
    if family == PARTITION:
        return True
    if family == PLANAR_PARTITION:
        return is_planar(d)
    if family == BRAUER:
        return all(len(b) == 2 for b in d.blocks)
    if family == TEMPERLEY_LIEB:
        return all(len(b) == 2 for b in d.blocks) and is_planar(d)
    if family == ROOK_BRAUER:
        return all(len(b) <= 2 for b in d.blocks)
    if family == MOTZKIN:
        return all(len(b) <= 2 for b in d.blocks) and is_planar(d)
    rookish = all(
        sum(1 for v in b if v <= k) <= 1 and sum(1 for v in b if v > k) <= 1
        for b in d.blocks
    )
    if family == ROOK:
        return rookish
    if family == PLANAR_ROOK:
        return rookish and is_planar(d)
    if family == SYMMETRIC_GROUP:
        return all(len(b) == 2 and b[0] <= k < b[1] for b in d.blocks)
    raise AssertionError("unreachable")


def identity_diagram(k):
    return Diagram(k, [(i, k + i) for i in range(1, k + 1)])


def perm_diagram(images):
    """Diagram of a permutation: bottom j joins top images[j-1]."""
    k = len(images)
    if sorted(images) != list(range(1, k + 1)):
        raise ValueError("not a permutation of 1..%d: %r" % (k, images))
    return Diagram(k, [(images[j - 1], k + j) for j in range(1, k + 1)])


def generator(kind, i, k):
    """The standard generators s_i, p_i, b_i, e_i, l_i, r_i as diagrams.

    kind is one of S, P, B, E, L, R (case-insensitive).  P allows
    1 <= i <= k; the others need 1 <= i <= k-1.
    """
    kind = str(kind).upper()
    if kind not in ("S", "P", "B", "E", "L", "R"):
        raise ValueError("unknown generator kind %r" % (kind,))
    hi = k if kind == "P" else k - 1
    if not 1 <= i <= hi:
        raise IndexOutOfRange("generator %s_%d needs 1 <= i <= %d" % (kind, i, hi))
    touched = {i} if kind == "P" else {i, i + 1}
    blocks = [(j, k + j) for j in range(1, k + 1) if j not in touched]
    if kind == "S":
        blocks += [(i, k + i + 1), (i + 1, k + i)]
    elif kind == "P":
        blocks += [(i,), (k + i,)]
    elif kind == "B":
        blocks += [(i, i + 1, k + i, k + i + 1)]
    elif kind == "E":
        blocks += [(i, i + 1), (k + i, k + i + 1)]
    elif kind == "L":
        blocks += [(i, k + i + 1), (i + 1,), (k + i,)]
    else:  # R
        blocks += [(i + 1, k + i), (i,), (k + i + 1,)]
    return Diagram(k, blocks)


def set_partitions(n):
    """All set partitions of {1..n} as tuples of tuples, generated
    by assigning each element to an existing block or a new one."""
    if n == 0:
        yield ()
        return
    blocks = []

    def rec(i):
        if i > n:
            yield tuple(tuple(b) for b in blocks)
            return
        for b in blocks:
            b.append(i)
            yield from rec(i + 1)
            b.pop()
        blocks.append([i])
        yield from rec(i + 1)
        blocks.pop()

    yield from rec(1)


def _perfect_matchings(verts):
    if not verts:
        yield ()
        return
    first, rest = verts[0], verts[1:]
    for idx, partner in enumerate(rest):
        remaining = rest[:idx] + rest[idx + 1 :]
        for sub in _perfect_matchings(remaining):
            yield ((first, partner),) + sub


def _partial_matchings(verts):
    if not verts:
        yield ()
        return
    first, rest = verts[0], verts[1:]
    for sub in _partial_matchings(rest):
        yield ((first,),) + sub
    for idx, partner in enumerate(rest):
        remaining = rest[:idx] + rest[idx + 1 :]
        for sub in _partial_matchings(remaining):
            yield ((first, partner),) + sub


def _noncrossing(points, singles, pair_ok):
    # points listed in boundary order; a pair encloses a segment that must
    # resolve internally, which is exactly planarity
    if not points:
        yield ()
        return
    first = points[0]
    if singles:
        for rest in _noncrossing(points[1:], singles, pair_ok):
            yield ((first,),) + rest
    for idx in range(1, len(points)):
        if not pair_ok(first, points[idx]):
            continue
        pair = tuple(sorted((first, points[idx])))
        for inner in _noncrossing(points[1:idx], singles, pair_ok):
            for outer in _noncrossing(points[idx + 1 :], singles, pair_ok):
                yield (pair,) + inner + outer


def _rook_block_sets(k):
    bottoms = list(range(k + 1, 2 * k + 1))

    def rec(i, used):
        if i > k:
            tail = tuple((b,) for b in bottoms if b not in used)
            yield tail
            return
        for rest in rec(i + 1, used):
            yield ((i,),) + rest
        for b in bottoms:
            if b not in used:
                used.add(b)
                for rest in rec(i + 1, used):
                    yield ((i, b),) + rest
                used.discard(b)

    yield from rec(1, set())


def _default_cap(family):
    return 5 if family in (PARTITION, PLANAR_PARTITION) else 7


def enumeration_cap(family):
    """Current basis-enumeration cap for a family.

    DIAGRAMALG_CAP in the environment overrides the defaults (5 for the
    partition families, 7 elsewhere).
    """
    family = normalize_family(family)
    env = os.environ.get("DIAGRAMALG_CAP")
    if env is not None:
        return int(env)
    return _default_cap(family)


def enumerate_basis(family, k):
    """All diagrams of the family on k strands, in canonical order."""
    family = normalize_family(family)
    if not isinstance(k, int) or k < 1:
        raise IndexOutOfRange("k must be a positive integer, got %r" % (k,))
    cap = enumeration_cap(family)
    if k > cap:
        raise CapExceeded(
            "enumerate_basis(%s, %d) exceeds cap %d" % (family, k, cap)
        )
    boundary = list(range(1, k + 1)) + list(range(2 * k, k, -1))
    verts = list(range(1, 2 * k + 1))
    if family in (PARTITION, PLANAR_PARTITION):
        diagrams = (Diagram(k, blocks) for blocks in set_partitions(2 * k))
        if family == PLANAR_PARTITION:
            diagrams = (d for d in diagrams if is_planar(d))
    elif family == BRAUER:
        diagrams = (Diagram(k, blocks) for blocks in _perfect_matchings(verts))
    elif family == ROOK_BRAUER:
        diagrams = (Diagram(k, blocks) for blocks in _partial_matchings(verts))
    elif family == ROOK:
        diagrams = (Diagram(k, blocks) for blocks in _rook_block_sets(k))
    elif family == SYMMETRIC_GROUP:
        diagrams = (
            perm_diagram(sigma)
            for sigma in itertools.permutations(range(1, k + 1))
        )
    elif family == TEMPERLEY_LIEB:
        diagrams = (
            Diagram(k, blocks)
            for blocks in _noncrossing(boundary, False, lambda a, b: True)
        )
    elif family == MOTZKIN:
        diagrams = (
            Diagram(k, blocks)
            for blocks in _noncrossing(boundary, True, lambda a, b: True)
        )
    else:  # PlanarRook
        diagrams = (
            Diagram(k, blocks)
            for blocks in _noncrossing(
                boundary, True, lambda a, b: (a <= k) != (b <= k)
            )
        )
    return sorted(diagrams)


@lru_cache(maxsize=None)
def _motzkin_numbers(n):
    m = [1, 1]
    for i in range(1, n):
        m.append(m[i] + sum(m[j] * m[i - 1 - j] for j in range(i)))
    return m[n]


def algebra_dim(family, k):
    """Dimension of the diagram algebra (size of its basis), closed form."""
    from math import comb, factorial

    family = normalize_family(family)
    if family in (PARTITION, PLANAR_PARTITION):
        if family == PARTITION:
            from .partitions import bell

            return bell(2 * k)
        return _catalan(2 * k)
    if family == BRAUER:
        return _double_fact(2 * k - 1)
    if family == ROOK_BRAUER:
        return sum(
            comb(2 * k, 2 * t) * _double_fact(2 * t - 1) for t in range(k + 1)
        )
    if family == ROOK:
        return sum(comb(k, i) ** 2 * factorial(i) for i in range(k + 1))
    if family == TEMPERLEY_LIEB:
        return _catalan(k)
    if family == MOTZKIN:
        return _motzkin_numbers(2 * k)
    if family == PLANAR_ROOK:
        return comb(2 * k, k)
    return factorial(k)


def _catalan(n):
    from math import comb

    return comb(2 * n, n) // (n + 1)


def _double_fact(n):
    if n == -1:
        return 1
    out = 1
    while n > 1:
        out *= n
        n -= 2
    return out
