"""Exact sparse linear algebra over the rationals.

Linear maps between based Q-vector spaces are stored column-wise as
dicts {row index: coefficient}, with coefficients Python ints or
Fractions (never floats).  Rank computation splits a matrix into the
connected components of its row/column support graph before
eliminating; chain complexes of graded algebras decompose into many
small blocks this way, which keeps exact Gaussian elimination cheap.
"""

from __future__ import annotations

from fractions import Fraction


class LinMap:
    """A sparse linear map Q^ncols -> Q^nrows."""

    __slots__ = ("nrows", "ncols", "cols")

    def __init__(self, nrows, ncols, cols=None):
        self.nrows = nrows
        self.ncols = ncols
        # cols[j] maps row index -> nonzero coefficient
        self.cols = [dict() for _ in range(ncols)] if cols is None else cols

    @classmethod
    def identity(cls, n):
        return cls(n, n, [{i: 1} for i in range(n)])

    @classmethod
    def zero(cls, nrows, ncols):
        return cls(nrows, ncols)

    def add_entry(self, i, j, value):
        if value == 0:
            return
        col = self.cols[j]
        new = col.get(i, 0) + value
        if new == 0:
            col.pop(i, None)
        else:
            col[i] = new

    def entry(self, i, j):
        return self.cols[j].get(i, 0)

    def is_zero(self):
        return all(not col for col in self.cols)

    def apply(self, vec):
        """Apply to a sparse vector {index: coeff}; returns a sparse vector."""
        out = {}
        for j, v in vec.items():
            if v == 0:
                continue
            for i, c in self.cols[j].items():
                new = out.get(i, 0) + c * v
                if new == 0:
                    out.pop(i, None)
                else:
                    out[i] = new
        return out

    def compose(self, other):
        """self o other, i.e. first apply `other`."""
        if other.nrows != self.ncols:
            raise ValueError("shape mismatch in composition")
        cols = [self.apply(col) for col in other.cols]
        return LinMap(self.nrows, other.ncols, cols)

    def add(self, other):
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError("shape mismatch in sum")
        out = LinMap(self.nrows, self.ncols)
        for j in range(self.ncols):
            col = dict(self.cols[j])
            for i, v in other.cols[j].items():
                new = col.get(i, 0) + v
                if new == 0:
                    col.pop(i, None)
                else:
                    col[i] = new
            out.cols[j] = col
        return out

    def scale(self, k):
        if k == 0:
            return LinMap(self.nrows, self.ncols)
        return LinMap(
            self.nrows,
            self.ncols,
            [{i: k * v for i, v in col.items()} for col in self.cols],
        )

    def sub(self, other):
        return self.add(other.scale(-1))

    def to_dense(self):
        rows = [[Fraction(0)] * self.ncols for _ in range(self.nrows)]
        for j, col in enumerate(self.cols):
            for i, v in col.items():
                rows[i][j] = Fraction(v)
        return rows

    def __eq__(self, other):
        if not isinstance(other, LinMap):
            return NotImplemented
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            return False
        return self.sub(other).is_zero()

    def __repr__(self):
        nnz = sum(len(c) for c in self.cols)
        return f"LinMap({self.nrows}x{self.ncols}, nnz={nnz})"

    def rank(self):
        return sum(
            _rank_component(block) for block in _split_components(self.cols)
        )


def _split_components(cols):
    """Group columns by connected components of the row/column graph."""
    parent = {}

    def find(x):
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[rx] = ry

    for j, col in enumerate(cols):
        if not col:
            continue
        cj = ("c", j)
        parent.setdefault(cj, cj)
        for i in col:
            ri = ("r", i)
            parent.setdefault(ri, ri)
            union(cj, ri)

    blocks = {}
    for j, col in enumerate(cols):
        if not col:
            continue
        blocks.setdefault(find(("c", j)), []).append(col)
    return list(blocks.values())


def _rank_component(cols):
    """Rank of one connected block via sparse Gaussian elimination."""
    # pivots[row] = column dict normalized to have coefficient 1 at `row`
    pivots = {}
    for col in sorted(cols, key=len):
        col = dict(col)
        while True:
            hit = next((r for r in col if r in pivots), None)
            if hit is None:
                break
            factor = col[hit]
            for r, v in pivots[hit].items():
                new = col.get(r, 0) - factor * v
                if new == 0:
                    col.pop(r, None)
                else:
                    col[r] = new
        if not col:
            continue
        # prefer a sparse unit pivot when available
        prow = min(col, key=lambda r: (col[r] != 1 and col[r] != -1, r))
        inv = Fraction(1, 1) / col[prow]
        pivots[prow] = {r: v * inv for r, v in col.items()}
    return len(pivots)


def betti_numbers(dims, boundaries, through):
    """Homology dimensions of a chain complex in degrees 0..through.

    `dims[n]` is the dimension of the degree-n term and `boundaries[n]`
    the map from degree n to degree n-1 (index 0 unused).  Degrees up
    to `through` must have both their incoming and outgoing boundaries
    present.
    """
    if through + 1 >= len(dims):
        raise ValueError(
            f"complex truncated at degree {len(dims) - 1}; homology is "
            f"reliable only through degree {len(dims) - 2}"
        )
    ranks = [0] * (through + 2)
    for n in range(1, through + 2):
        ranks[n] = boundaries[n].rank()
    out = []
    for n in range(through + 1):
        out.append(dims[n] - ranks[n] - ranks[n + 1])
    return out
