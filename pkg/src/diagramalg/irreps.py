"""Irreducible modules for the diagram families.

Two models of the same module are built side by side.  The twisted model
has basis w (x) n_t where w is a symmetric diagram with m propagating
blocks and t a standard tableau; a diagram acts by conjugation w -> d w d^T
together with the permutation it induces on the propagating blocks.  The
combinatorial model has basis N_T indexed by standard set-partition
tableaux; a diagram acts directly on the blocks of T.  Both actions delete
components in the middle row and each deletion contributes a factor n.
"""

from collections import namedtuple
from functools import lru_cache
from itertools import combinations

from .coeff import LaurentPoly
from .diagrams import (
    BRAUER,
    MOTZKIN,
    PARTITION,
    PLANAR_PARTITION,
    PLANAR_ROOK,
    ROOK,
    ROOK_BRAUER,
    SYMMETRIC_GROUP,
    TEMPERLEY_LIEB,
    Diagram,
    _DSU,
    in_family,
    is_planar,
    normalize_family,
    set_partitions,
    _partial_matchings,
    _perfect_matchings,
)
from .errors import (
    AlgebraMismatch,
    InvalidRank,
    LabelNotInFamily,
    RankMismatch,
    ShapeMismatch,
)
from .partitions import check_partition, lambda_star_labels, rank_set
from .symrep import standard_tableaux, straighten, tableau_shape


class SymmetricMDiagram:
    """A mirror-symmetric diagram, stored as its top half.

    top is a set partition of {1..k}; propagating lists the blocks that
    connect to their own mirror image below.  The remaining blocks appear
    once on top and once, mirrored, on the bottom.
    """

    __slots__ = ("k", "top", "propagating")

    def __init__(self, k, top, propagating):
        if not isinstance(k, int) or k < 1:
            raise ValueError("k must be a positive integer, got %r" % (k,))
        canon_top = tuple(sorted(tuple(sorted(b)) for b in top))
        if sorted(v for b in canon_top for v in b) != list(range(1, k + 1)):
            raise ValueError("top blocks must partition {1..%d}" % k)
        canon_prop = tuple(sorted(tuple(sorted(b)) for b in propagating))
        top_set = set(canon_top)
        for b in canon_prop:
            if b not in top_set:
                raise ValueError("propagating block %r is not a top block" % (b,))
        if len(set(canon_prop)) != len(canon_prop):
            raise ValueError("repeated propagating block")
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "top", canon_top)
        object.__setattr__(self, "propagating", canon_prop)

    def __setattr__(self, name, value):
        raise AttributeError("SymmetricMDiagram is immutable")

    @property
    def m(self):
        return len(self.propagating)

    def prop_max_order(self):
        """Propagating blocks sorted by largest entry."""
        return tuple(sorted(self.propagating, key=max))

    def to_diagram(self):
        k = self.k
        prop = set(self.propagating)
        blocks = []
        for b in self.top:
            mirror = tuple(v + k for v in b)
            if b in prop:
                blocks.append(b + mirror)
            else:
                blocks.append(b)
                blocks.append(mirror)
        return Diagram(k, blocks)

    @classmethod
    def from_diagram(cls, d):
        k = d.k
        top = []
        prop = []
        for block in d.blocks:
            above = tuple(v for v in block if v <= k)
            below = tuple(v - k for v in block if v > k)
            if above and below:
                if above != below:
                    raise ValueError(
                        "propagating block %r is not mirror-symmetric" % (block,)
                    )
                top.append(above)
                prop.append(above)
            elif above:
                top.append(above)
            else:
                mirror = tuple(v + k for v in below)
                if mirror not in d.blocks:
                    raise ValueError("diagram is not mirror-symmetric")
        return cls(k, top, prop)

    def __eq__(self, other):
        return (
            isinstance(other, SymmetricMDiagram)
            and self.k == other.k
            and self.top == other.top
            and self.propagating == other.propagating
        )

    def __hash__(self):
        return hash((self.k, self.top, self.propagating))

    def __lt__(self, other):
        return (self.k, self.top, self.propagating) < (
            other.k,
            other.top,
            other.propagating,
        )

    def text(self):
        pieces = []
        for b in self.top:
            body = " ".join(str(v) for v in b)
            if b in set(self.propagating):
                pieces.append("[%s]" % body)
            else:
                pieces.append("{%s}" % body)
        return " ".join(pieces)

    def __repr__(self):
        return "SymmetricMDiagram(k=%d, %s)" % (self.k, self.text())


def _symmetric_candidates(family, k, m):
    one_to_k = list(range(1, k + 1))
    if family in (PARTITION, PLANAR_PARTITION):
        for top in set_partitions(k):
            for prop in combinations(top, m):
                yield SymmetricMDiagram(k, top, prop)
    elif family in (BRAUER, TEMPERLEY_LIEB):
        for singles in combinations(one_to_k, m):
            rest = [v for v in one_to_k if v not in singles]
            for pairs in _perfect_matchings(rest):
                top = tuple((s,) for s in singles) + pairs
                yield SymmetricMDiagram(k, top, [(s,) for s in singles])
    elif family in (ROOK_BRAUER, MOTZKIN):
        for top in _partial_matchings(one_to_k):
            singles = [b for b in top if len(b) == 1]
            for prop in combinations(singles, m):
                yield SymmetricMDiagram(k, top, prop)
    elif family in (ROOK, PLANAR_ROOK):
        top = tuple((v,) for v in one_to_k)
        for prop in combinations(top, m):
            yield SymmetricMDiagram(k, top, prop)
    else:  # SymmetricGroup, m == k
        top = tuple((v,) for v in one_to_k)
        yield SymmetricMDiagram(k, top, top)


@lru_cache(maxsize=None)
def _enumerate_symmetric(family, k, m):
    planar_only = family in (
        TEMPERLEY_LIEB,
        MOTZKIN,
        PLANAR_ROOK,
        PLANAR_PARTITION,
    )
    out = []
    for w in _symmetric_candidates(family, k, m):
        if planar_only and not is_planar(w.to_diagram()):
            continue
        out.append(w)
    out.sort()
    return tuple(out)


def enumerate_symmetric(family, k, m):
    """All symmetric diagrams of the family with m propagating blocks."""
    family = normalize_family(family)
    if m not in rank_set(family, k):
        raise InvalidRank(
            "%s diagrams on %d strands have no rank %r" % (family, k, m)
        )
    return list(_enumerate_symmetric(family, k, m))


ConjugateResult = namedtuple(
    "ConjugateResult", ["w_prime", "m_prime", "deleted", "twist"]
)


@lru_cache(maxsize=1 << 16)
def _conjugate(d, w):
    k = d.k
    # layers: L0 = result top (v), L1 = top of w (k+v), L2 = bottom of w
    # (2k+v), L3 = result bottom (3k+v); d spans L0-L1 and its transpose
    # spans L2-L3, so the whole stack is d w d^T
    dsu = _DSU(4 * k + 1)
    for block in d.blocks:
        # top vertex v sits at L0 index v, bottom vertex k+j at L1 index k+j
        for v in block[1:]:
            dsu.union(block[0], v)
        mirrored = [3 * k + v if v <= k else v + k for v in block]
        for v in mirrored[1:]:
            dsu.union(mirrored[0], v)
    prop = set(w.propagating)
    for b in w.top:
        nodes = [k + v for v in b]
        if b in prop:
            nodes += [2 * k + v for v in b]
        for v in nodes[1:]:
            dsu.union(nodes[0], v)
        mirror = [2 * k + v for v in b]
        for v in mirror[1:]:
            dsu.union(mirror[0], v)
    components = {}
    for v in range(1, 4 * k + 1):
        components.setdefault(dsu.find(v), []).append(v)
    out_blocks = []
    deleted = 0
    for members in components.values():
        outer = [v for v in members if v <= k or v > 3 * k]
        if outer:
            out_blocks.append(
                tuple(v if v <= k else v - 2 * k for v in outer)
            )
        elif all(k < v <= 2 * k for v in members):
            deleted += 1
    w_prime = SymmetricMDiagram.from_diagram(Diagram(k, out_blocks))
    m_prime = w_prime.m
    twist = None
    if m_prime == w.m:
        new_props = w_prime.prop_max_order()
        root_of_new = {
            dsu.find(b[0]): j + 1 for j, b in enumerate(new_props)
        }
        twist = tuple(
            root_of_new[dsu.find(k + b[0])] for b in w.prop_max_order()
        )
    return ConjugateResult(w_prime, m_prime, deleted, twist)


def conjugate(d, w):
    """Conjugate a symmetric diagram: the stack d w d^T.

    Returns (w', m', deleted, twist) where deleted counts the middle
    components removed when d is stacked on w, and twist is the induced
    permutation of propagating blocks (max-entry order), or None when the
    rank drops.
    """
    if d.k != w.k:
        raise RankMismatch(
            "diagram on %d strands against w on %d" % (d.k, w.k)
        )
    return _conjugate(d, w)


def act_twisted(d, v, family=None):
    """Act on a twisted vector {(w, t): coeff}.

    Terms where the rank drops are killed; otherwise w goes to w', the
    twist permutation acts on the tableau factor, and each deleted middle
    component contributes a factor n.
    """
    if family is not None and not in_family(d, family):
        raise AlgebraMismatch(
            "diagram %s is not in the %s family" % (d.text(), family)
        )
    out = {}
    for (w, t), coeff in v.items():
        res = conjugate(d, w)
        if res.twist is None:
            continue
        factor = LaurentPoly.coerce(coeff) * LaurentPoly.monomial(res.deleted)
        relabeled = tuple(
            tuple(res.twist[x - 1] for x in row) for row in t
        )
        for ts, c in straighten(relabeled).items():
            key = (res.w_prime, ts)
            out[key] = out.get(key, LaurentPoly()) + factor * c
    return {key: c for key, c in out.items() if c}


class SetPartitionTableau:
    """Blocks of {1..k} arranged as a first row plus a tableau body.

    The first row holds the non-propagating blocks (always kept sorted by
    largest entry); the body holds the propagating blocks in the cells of
    a partition shape.
    """

    __slots__ = ("k", "first_row", "body")

    def __init__(self, k, first_row, body):
        if not isinstance(k, int) or k < 1:
            raise ValueError("k must be a positive integer, got %r" % (k,))
        first = tuple(
            sorted((tuple(sorted(b)) for b in first_row), key=max)
        )
        rows = tuple(
            tuple(tuple(sorted(b)) for b in row) for row in body
        )
        shape = tuple(len(row) for row in rows)
        if any(shape[i] < shape[i + 1] for i in range(len(shape) - 1)) or (
            shape and shape[-1] == 0
        ):
            raise ValueError("body rows must form a partition shape")
        everything = [v for b in first for v in b] + [
            v for row in rows for b in row for v in b
        ]
        if sorted(everything) != list(range(1, k + 1)):
            raise ValueError("blocks must partition {1..%d}" % k)
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "first_row", first)
        object.__setattr__(self, "body", rows)

    def __setattr__(self, name, value):
        raise AttributeError("SetPartitionTableau is immutable")

    @property
    def lambda_star(self):
        return tuple(len(row) for row in self.body)

    @property
    def m(self):
        return sum(len(row) for row in self.body)

    def body_blocks(self):
        return [b for row in self.body for b in row]

    def body_filling(self):
        """The body with each block replaced by its rank in max-entry
        order, as an integer tableau."""
        order = sorted(self.body_blocks(), key=max)
        index = {b: i + 1 for i, b in enumerate(order)}
        return tuple(tuple(index[b] for b in row) for row in self.body)

    def is_standard(self):
        """Rows increase left to right and columns top to bottom, in the
        max-entry order on blocks."""
        from .symrep import is_standard as filling_standard

        return filling_standard(self.body_filling())

    def __eq__(self, other):
        return (
            isinstance(other, SetPartitionTableau)
            and self.k == other.k
            and self.first_row == other.first_row
            and self.body == other.body
        )

    def __hash__(self):
        return hash((self.k, self.first_row, self.body))

    def __lt__(self, other):
        return (self.k, self.first_row, self.body) < (
            other.k,
            other.first_row,
            other.body,
        )

    def text(self):
        def fmt_blocks(blocks):
            if not blocks:
                return "-"
            return " ".join(
                "{%s}" % ",".join(str(v) for v in b) for b in blocks
            )

        rows = " / ".join(fmt_blocks(row) for row in self.body)
        return "%s ; %s" % (fmt_blocks(self.first_row), rows if rows else "-")

    def __repr__(self):
        return "SetPartitionTableau(k=%d, %s)" % (self.k, self.text())


def tableau_from_pair(w, t):
    """Place the i-th propagating block of w (max-entry order) at the cell
    holding i in the tableau t."""
    shape = tableau_shape(t)
    if sum(shape) != w.m:
        raise ShapeMismatch(
            "tableau with %d cells for %d propagating blocks"
            % (sum(shape), w.m)
        )
    prop = w.prop_max_order()
    nonprop = [b for b in w.top if b not in set(w.propagating)]
    body = tuple(tuple(prop[x - 1] for x in row) for row in t)
    return SetPartitionTableau(w.k, nonprop, body)


def pair_from_tableau(tab):
    """Inverse of tableau_from_pair."""
    props = tab.body_blocks()
    w = SymmetricMDiagram(
        tab.k, tab.first_row + tuple(props), props
    )
    return w, tab.body_filling()


def enumerate_sspt(family, k, lam_star):
    """All standard set-partition tableaux for the family and shape,
    ordered to match the twisted basis (w outer, tableau inner)."""
    family = normalize_family(family)
    lam_star = check_partition(lam_star)
    if lam_star not in lambda_star_labels(family, k):
        raise LabelNotInFamily(
            "%r does not label a %s module at k=%d" % (lam_star, family, k)
        )
    m = sum(lam_star)
    return [
        tableau_from_pair(w, t)
        for w in enumerate_symmetric(family, k, m)
        for t in standard_tableaux(lam_star)
    ]


def act_tableau(d, tab):
    """Push a tableau through a diagram placed above it.

    Returns (new tableau or None, deleted middle components).  The result
    is None when two propagating blocks collide or a propagating block
    fails to reach the top; the new tableau may have a non-standard body.
    """
    if d.k != tab.k:
        raise RankMismatch(
            "diagram on %d strands against a tableau on %d" % (d.k, tab.k)
        )
    k = d.k
    dsu = _DSU(2 * k + 1)
    for block in d.blocks:
        for v in block[1:]:
            dsu.union(block[0], v)
    body = tab.body_blocks()
    prop_root = []
    for block in tab.first_row + tuple(body):
        nodes = [k + v for v in block]
        for v in nodes[1:]:
            dsu.union(nodes[0], v)
    components = {}
    for v in range(1, k + 1):
        components.setdefault(dsu.find(v), {"top": [], "props": []})[
            "top"
        ].append(v)
    for block in tab.first_row:
        components.setdefault(dsu.find(k + block[0]), {"top": [], "props": []})
    for idx, block in enumerate(body):
        comp = components.setdefault(
            dsu.find(k + block[0]), {"top": [], "props": []}
        )
        comp["props"].append(idx)
    cell_of = {}
    pos = 0
    for r, row in enumerate(tab.body):
        for c in range(len(row)):
            cell_of[pos] = (r, c)
            pos += 1
    new_body = [[None] * len(row) for row in tab.body]
    first_row = []
    deleted = 0
    for comp in components.values():
        top = tuple(sorted(comp["top"]))
        props = comp["props"]
        if len(props) >= 2:
            return None, 0
        if props:
            if not top:
                return None, 0
            r, c = cell_of[props[0]]
            new_body[r][c] = top
        elif top:
            first_row.append(top)
        else:
            deleted += 1
    return (
        SetPartitionTableau(k, first_row, [tuple(row) for row in new_body]),
        deleted,
    )


def act_natural(d, v, family=None):
    """Act on a combinatorial vector {tableau: coeff} and rewrite any
    non-standard bodies over standard ones."""
    if family is not None and not in_family(d, family):
        raise AlgebraMismatch(
            "diagram %s is not in the %s family" % (d.text(), family)
        )
    out = {}
    for tab, coeff in v.items():
        moved, deleted = act_tableau(d, tab)
        if moved is None:
            continue
        factor = LaurentPoly.coerce(coeff) * LaurentPoly.monomial(deleted)
        order = sorted(moved.body_blocks(), key=max)
        filling = moved.body_filling()
        for ustd, c in straighten(filling).items():
            body = tuple(
                tuple(order[x - 1] for x in row) for row in ustd
            )
            tstd = SetPartitionTableau(moved.k, moved.first_row, body)
            out[tstd] = out.get(tstd, LaurentPoly()) + factor * c
    return {key: c for key, c in out.items() if c}


TWISTED = "Twisted"
TABLEAU = "Tableau"


def _normalize_basis(basis):
    b = str(basis).strip().lower()
    if b == "twisted":
        return TWISTED
    if b == "tableau":
        return TABLEAU
    raise ValueError("unknown basis %r" % (basis,))


def _validated_label(family, k, lam_star):
    lam_star = check_partition(lam_star)
    if lam_star not in lambda_star_labels(family, k):
        raise LabelNotInFamily(
            "%r does not label a %s module at k=%d" % (lam_star, family, k)
        )
    return lam_star


def rep_columns(d, family, k, lam_star, basis=TWISTED):
    """Sparse matrix of d on the module: column j maps row index to the
    coefficient of basis vector i in d . (basis vector j)."""
    family = normalize_family(family)
    lam_star = _validated_label(family, k, lam_star)
    basis = _normalize_basis(basis)
    if d.k != k:
        raise RankMismatch("diagram on %d strands, module at k=%d" % (d.k, k))
    if not in_family(d, family):
        raise AlgebraMismatch(
            "diagram %s is not in the %s family" % (d.text(), family)
        )
    m = sum(lam_star)
    ws = enumerate_symmetric(family, k, m)
    ts = standard_tableaux(lam_star)
    if basis == TWISTED:
        index = {}
        for w in ws:
            for t in ts:
                index[(w, t)] = len(index)
        cols = []
        for w in ws:
            for t in ts:
                image = act_twisted(d, {(w, t): 1})
                cols.append({index[key]: c for key, c in image.items()})
        return cols
    tabs = [
        tableau_from_pair(w, t) for w in ws for t in ts
    ]
    index = {tab: i for i, tab in enumerate(tabs)}
    cols = []
    for tab in tabs:
        image = act_natural(d, {tab: 1})
        cols.append({index[key]: c for key, c in image.items()})
    return cols


def rep_columns_element(elem, lam_star, basis=TWISTED):
    """Sparse matrix of an algebra element (linear combination)."""
    total = None
    for diag, coeff in elem.terms():
        cols = rep_columns(diag, elem.family, elem.k, lam_star, basis)
        if total is None:
            total = [{} for _ in cols]
        for j, col in enumerate(cols):
            for i, c in col.items():
                total[j][i] = total[j].get(i, LaurentPoly()) + coeff * c
    if total is None:
        m = sum(check_partition(lam_star))
        size = len(enumerate_symmetric(elem.family, elem.k, m)) * len(
            standard_tableaux(tuple(lam_star))
        )
        total = [{} for _ in range(size)]
    return [
        {i: c for i, c in col.items() if c} for col in total
    ]


def rep_matrix_irrep(d, family, k, lam_star, basis=TWISTED):
    """Dense matrix of d on the module, rows and columns in basis order."""
    cols = rep_columns(d, family, k, lam_star, basis)
    size = len(cols)
    mat = [[LaurentPoly() for _ in range(size)] for _ in range(size)]
    for j, col in enumerate(cols):
        for i, c in col.items():
            mat[i][j] = c
    return mat


def compose_columns(a_cols, b_cols):
    """Columns of the product: apply b first, then a."""
    out = []
    for col in b_cols:
        acc = {}
        for i, c in col.items():
            for r, ac in a_cols[i].items():
                acc[r] = acc.get(r, LaurentPoly()) + c * ac
        out.append({r: c for r, c in acc.items() if c})
    return out


def column_trace(cols):
    total = LaurentPoly()
    for j, col in enumerate(cols):
        total = total + col.get(j, LaurentPoly())
    return total
