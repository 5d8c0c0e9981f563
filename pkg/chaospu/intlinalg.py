# -*- coding: utf-8 -*-
"""
Exact sparse integer linear algebra: Smith normal form with optional
unimodular transforms, integer solving, saturated kernels and cokernels.

Elimination works on a dict-of-dicts row store. Pivots are chosen among unit
entries first, then by Markowitz cost (r - 1)(c - 1), then by magnitude, so
fill-in and coefficient growth stay small on the sparse differentials this
package feeds in.
"""
from typing import Dict, Iterable, List, Mapping, NamedTuple, Optional, \
    Sequence, Set, Tuple

from logzero import logger
from sympy import factorint
try:
    from sympy.core.intfunc import igcdex
except ImportError:  # sympy < 1.13
    from sympy.core.numbers import igcdex

from chaospu.exceptions import InvalidInput

__all__ = ["SparseIntMatrix", "SmithForm", "AbelianGroup", "IntegerSolver",
           "smith_normal_form", "cokernel_invariants", "solve_integer",
           "kernel_basis", "cokernel_generators", "invariant_factors_of"]


class SparseIntMatrix:
    __slots__ = ("rows", "cols", "_data")

    def __init__(self, rows: int, cols: int,
                 entries: Mapping[Tuple[int, int], int] = None):
        if rows < 0 or cols < 0:
            raise InvalidInput("negative matrix shape {r}x{c}".format(
                r=rows, c=cols))
        self.rows = rows
        self.cols = cols
        self._data = {}  # type: Dict[int, Dict[int, int]]
        for (i, j), v in (entries or {}).items():
            self._set(i, j, int(v))

    def _set(self, i: int, j: int, v: int):
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise InvalidInput("entry ({i},{j}) outside {r}x{c}".format(
                i=i, j=j, r=self.rows, c=self.cols))
        if v:
            self._data.setdefault(i, {})[j] = v
        elif i in self._data:
            self._data[i].pop(j, None)
            if not self._data[i]:
                del self._data[i]

    @classmethod
    def from_rows(cls, cols: int,
                  rows: Iterable[Mapping[int, int]]) -> "SparseIntMatrix":
        rows = list(rows)
        matrix = cls(len(rows), cols)
        for i, row in enumerate(rows):
            for j, v in row.items():
                matrix._set(i, j, int(v))
        return matrix

    @classmethod
    def from_dense(cls, values: Sequence[Sequence[int]],
                   cols: int = None) -> "SparseIntMatrix":
        if cols is None:
            cols = len(values[0]) if values else 0
        return cls.from_rows(
            cols, ({j: v for j, v in enumerate(row) if v} for row in values))

    def get(self, i: int, j: int) -> int:
        return self._data.get(i, {}).get(j, 0)

    def row(self, i: int) -> Dict[int, int]:
        return dict(self._data.get(i, {}))

    def column(self, j: int) -> Dict[int, int]:
        return {i: row[j] for i, row in self._data.items() if j in row}

    def items(self) -> List[Tuple[Tuple[int, int], int]]:
        return sorted(((i, j), v) for i, row in self._data.items()
                      for j, v in row.items())

    @property
    def nnz(self) -> int:
        return sum(len(row) for row in self._data.values())

    def to_dense(self) -> List[List[int]]:
        return [[self.get(i, j) for j in range(self.cols)]
                for i in range(self.rows)]

    def transpose(self) -> "SparseIntMatrix":
        return SparseIntMatrix(
            self.cols, self.rows, {(j, i): v for (i, j), v in self.items()})

    def apply(self, vector: Sequence[int]) -> List[int]:
        if len(vector) != self.cols:
            raise InvalidInput("vector of length {l} for {c} columns".format(
                l=len(vector), c=self.cols))
        result = [0] * self.rows
        for i, row in self._data.items():
            result[i] = sum(v * vector[j] for j, v in row.items())
        return result

    def __matmul__(self, other: "SparseIntMatrix") -> "SparseIntMatrix":
        if self.cols != other.rows:
            raise InvalidInput("cannot multiply {a}x{b} by {c}x{d}".format(
                a=self.rows, b=self.cols, c=other.rows, d=other.cols))
        entries = {}  # type: Dict[Tuple[int, int], int]
        for i, row in self._data.items():
            for k, v in row.items():
                for j, w in other._data.get(k, {}).items():
                    entries[(i, j)] = entries.get((i, j), 0) + v * w
        return SparseIntMatrix(self.rows, other.cols, entries)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparseIntMatrix):
            return NotImplemented
        return (self.rows, self.cols, self._data) == \
            (other.rows, other.cols, other._data)

    def __repr__(self) -> str:
        return "SparseIntMatrix({r}x{c}, nnz={z})".format(
            r=self.rows, c=self.cols, z=self.nnz)

    def dump(self) -> str:
        """
        Coordinate text format, one `row col value` line per entry.
        """
        lines = ["# {r} {c}".format(r=self.rows, c=self.cols)]
        lines.extend("{i} {j} {v}".format(i=i, j=j, v=v)
                     for (i, j), v in self.items())
        return "\n".join(lines) + "\n"

    @classmethod
    def load(cls, text: str) -> "SparseIntMatrix":
        lines = [l.strip() for l in text.splitlines() if l.strip()]
        if not lines or not lines[0].startswith("#"):
            raise InvalidInput("matrix dump lacks its '# rows cols' header")
        try:
            rows, cols = (int(v) for v in lines[0][1:].split())
            entries = {}
            for line in lines[1:]:
                i, j, v = (int(x) for x in line.split())
                entries[(i, j)] = v
        except ValueError as x:
            raise InvalidInput("malformed matrix dump: {x}".format(x=str(x)))
        return cls(rows, cols, entries)


class AbelianGroup(NamedTuple):
    """
    Z^free_rank plus the cyclic groups Z/d for the invariant factors d, each
    dividing the next.
    """
    free_rank: int
    torsion: Tuple[int, ...] = ()

    @classmethod
    def from_orders(cls, free_rank: int,
                    orders: Iterable[int]) -> "AbelianGroup":
        """
        Canonical form of Z^free_rank plus cyclic groups of arbitrary orders.
        """
        return cls(free_rank, invariant_factors_of(orders))

    def __add__(self, other):
        if not isinstance(other, AbelianGroup):
            return NotImplemented
        return AbelianGroup.from_orders(
            self.free_rank + other.free_rank, self.torsion + other.torsion)

    def elementary_divisors(self, p: int) -> Tuple[int, ...]:
        """
        The p-power parts of the invariant factors, smallest first.
        """
        found = []
        for d in self.torsion:
            e = factorint(d).get(p, 0)
            if e:
                found.append(p ** e)
        return tuple(found)

    def primary_part(self, p: int) -> "AbelianGroup":
        return AbelianGroup(0, self.elementary_divisors(p))

    @property
    def order_of_torsion(self) -> int:
        order = 1
        for d in self.torsion:
            order *= d
        return order

    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def __str__(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append("Z^{r}".format(r=self.free_rank))
        parts.extend("Z/{d}".format(d=d) for d in self.torsion)
        return "+".join(parts) or "0"

    def to_json(self) -> Dict[str, object]:
        return {"free_rank": self.free_rank,
                "torsion": [str(d) for d in self.torsion]}


class SmithForm(NamedTuple):
    """
    Invariant factors d_1 | d_2 | ... of a matrix M and its rank. With
    transforms, also unimodular U and V with U M V the diagonal matrix, and
    the inverse of V.
    """
    factors: Tuple[int, ...]
    rank: int
    U: Optional[SparseIntMatrix] = None
    V: Optional[SparseIntMatrix] = None
    V_inverse: Optional[SparseIntMatrix] = None


def invariant_factors_of(orders: Iterable[int]) -> Tuple[int, ...]:
    """
    Canonical invariant factors (each > 1) of the direct sum of the cyclic
    groups Z/d, d in `orders`.
    """
    per_prime = {}  # type: Dict[int, List[int]]
    for d in orders:
        d = abs(int(d))
        if d == 0:
            raise InvalidInput("Z/0 is not a torsion group")
        for p, e in factorint(d).items():
            per_prime.setdefault(int(p), []).append(int(p) ** int(e))

    if not per_prime:
        return ()
    length = max(len(v) for v in per_prime.values())
    factors = [1] * length
    for p, powers in per_prime.items():
        powers.sort(reverse=True)
        for t, q in enumerate(powers):
            factors[length - 1 - t] *= q
    return tuple(factors)


def _axpy(target: Dict[int, int], source: Dict[int, int], m: int):
    for k, v in source.items():
        w = target.get(k, 0) + m * v
        if w:
            target[k] = w
        else:
            target.pop(k, None)


def _combine(first: Dict[int, int], a: int, second: Dict[int, int],
             b: int) -> Dict[int, int]:
    result = {}  # type: Dict[int, int]
    _axpy(result, first, a)
    _axpy(result, second, b)
    return result


class _Elimination:
    """
    Sparse elimination of a matrix to a permuted diagonal. With `track`,
    row operations are recorded as rows of U, column operations as columns
    of V and, inversely, as rows of V^-1.
    """

    def __init__(self, matrix: SparseIntMatrix, track: bool):
        self.track = track
        self.rows = {i: dict(r) for i, r in matrix._data.items()}
        self.cols = {}  # type: Dict[int, Set[int]]
        for i, row in self.rows.items():
            for j in row:
                self.cols.setdefault(j, set()).add(i)
        self.urows = {}  # type: Dict[int, Dict[int, int]]
        self.vcols = {}  # type: Dict[int, Dict[int, int]]
        self.vinv_rows = {}  # type: Dict[int, Dict[int, int]]
        self.pivots = []  # type: List[Tuple[int, int, int]]

    @staticmethod
    def _unit(store: Dict[int, Dict[int, int]], i: int) -> Dict[int, int]:
        if i not in store:
            store[i] = {i: 1}
        return store[i]

    def add_row(self, k: int, i: int, m: int):
        """
        row_k += m * row_i
        """
        target = self.rows[k]
        for j, v in self.rows[i].items():
            w = target.get(j, 0) + m * v
            if w:
                if j not in target:
                    self.cols[j].add(k)
                target[j] = w
            elif j in target:
                del target[j]
                self.cols[j].discard(k)
        if self.track:
            _axpy(self._unit(self.urows, k), self._unit(self.urows, i), m)

    def add_col_on_pivot_row(self, l: int, j: int, i: int, m: int):
        """
        col_l += m * col_j where col_j holds a single entry, in row i.
        """
        row = self.rows[i]
        w = row.get(l, 0) + m * row[j]
        if w:
            if l not in row:
                self.cols.setdefault(l, set()).add(i)
            row[l] = w
        elif l in row:
            del row[l]
            self.cols[l].discard(i)
        if self.track:
            _axpy(self._unit(self.vcols, l), self._unit(self.vcols, j), m)
            _axpy(self._unit(self.vinv_rows, j),
                  self._unit(self.vinv_rows, l), -m)

    def choose_pivot(self) -> Tuple[int, int]:
        best = None
        best_key = None
        for i, row in self.rows.items():
            rlen = len(row) - 1
            for j, v in row.items():
                key = (abs(v) != 1, rlen * (len(self.cols[j]) - 1), abs(v),
                       i, j)
                if best_key is None or key < best_key:
                    best_key = key
                    best = (i, j)
        return best

    def run(self):
        self.rows = {k: r for k, r in self.rows.items() if r}
        while self.rows:
            i, j = self.reduce_pivot(*self.choose_pivot())
            self.pivots.append((i, j, self.rows[i][j]))
            del self.rows[i]
            del self.cols[j]
            self.rows = {k: r for k, r in self.rows.items() if r}

    def reduce_pivot(self, i: int, j: int) -> Tuple[int, int]:
        while True:
            a = self.rows[i][j]
            for k in sorted(self.cols[j] - {i}):
                q = self.rows[k][j] // a
                if q:
                    self.add_row(k, i, -q)
            left = self.cols[j] - {i}
            if left:
                i = min(left, key=lambda k: (abs(self.rows[k][j]), k))
                continue

            for l in sorted(set(self.rows[i]) - {j}):
                q = self.rows[i][l] // a
                if q:
                    self.add_col_on_pivot_row(l, j, i, -q)
            left = set(self.rows[i]) - {j}
            if left:
                j = min(left, key=lambda l: (abs(self.rows[i][l]), l))
                continue
            return i, j


def _chain_fix(diagonal: List[int], urows: List[Dict[int, int]] = None,
               vcols: List[Dict[int, int]] = None,
               vinv_rows: List[Dict[int, int]] = None):
    """
    Turn a positive diagonal into a divisibility chain with 2x2 unimodular
    moves: diag(a, b) -> diag(gcd, lcm). Only the leading
    `len(diagonal)` slots of the transform lists are touched.
    """
    k = len(diagonal)
    for t in range(k):
        for s in range(t + 1, k):
            a, b = diagonal[t], diagonal[s]
            if b % a == 0:
                continue
            x, y, g = (int(v) for v in igcdex(a, b))
            if urows is not None:
                ut, us = urows[t], urows[s]
                urows[t] = _combine(ut, x, us, y)
                urows[s] = _combine(ut, -(b // g), us, a // g)
                vt, vs = vcols[t], vcols[s]
                vcols[t] = _combine(vt, 1, vs, 1)
                vcols[s] = _combine(vt, -y * (b // g), vs, x * (a // g))
                wt, ws = vinv_rows[t], vinv_rows[s]
                vinv_rows[t] = _combine(wt, x * (a // g), ws, y * (b // g))
                vinv_rows[s] = _combine(wt, -1, ws, 1)
            diagonal[t], diagonal[s] = g, a * b // g


def smith_normal_form(matrix: SparseIntMatrix,
                      transforms: bool = False) -> SmithForm:
    elimination = _Elimination(matrix, transforms)
    elimination.run()
    pivots = elimination.pivots
    rank = len(pivots)
    logger.debug("Eliminated {r}x{c} matrix with {z} entries: rank {k}".format(
        r=matrix.rows, c=matrix.cols, z=matrix.nnz, k=rank))

    diagonal = [abs(a) for _, _, a in pivots]
    if not transforms:
        _chain_fix(diagonal)
        return SmithForm(tuple(diagonal), rank)

    pivot_rows = [i for i, _, _ in pivots]
    pivot_cols = [j for _, j, _ in pivots]
    row_order = pivot_rows + sorted(set(range(matrix.rows)) - set(pivot_rows))
    col_order = pivot_cols + sorted(set(range(matrix.cols)) - set(pivot_cols))

    unit = _Elimination._unit
    urows = [dict(unit(elimination.urows, i)) for i in row_order]
    vcols = [dict(unit(elimination.vcols, j)) for j in col_order]
    vinv_rows = [dict(unit(elimination.vinv_rows, j)) for j in col_order]
    for t, (_, _, a) in enumerate(pivots):
        if a < 0:
            urows[t] = {c: -v for c, v in urows[t].items()}

    _chain_fix(diagonal, urows, vcols, vinv_rows)

    U = SparseIntMatrix(matrix.rows, matrix.rows, {
        (t, c): v for t, row in enumerate(urows) for c, v in row.items()})
    V = SparseIntMatrix(matrix.cols, matrix.cols, {
        (r, t): v for t, col in enumerate(vcols) for r, v in col.items()})
    V_inverse = SparseIntMatrix(matrix.cols, matrix.cols, {
        (t, c): v for t, row in enumerate(vinv_rows) for c, v in row.items()})
    return SmithForm(tuple(diagonal), rank, U, V, V_inverse)


def cokernel_invariants(matrix: SparseIntMatrix) -> AbelianGroup:
    """
    The group Z^cols / (row span of M): rows are relations, columns the
    ambient basis.
    """
    form = smith_normal_form(matrix)
    return AbelianGroup(matrix.cols - form.rank,
                        tuple(d for d in form.factors if d > 1))


class IntegerSolver:
    """
    Solves M x = b over the integers for many right-hand sides against one
    Smith decomposition of M.
    """

    def __init__(self, matrix: SparseIntMatrix):
        self.matrix = matrix
        self.form = smith_normal_form(matrix, transforms=True)

    def solve(self, target: Sequence[int]) -> Optional[List[int]]:
        matrix, form = self.matrix, self.form
        if len(target) != matrix.rows:
            raise InvalidInput(
                "right-hand side of length {l} for {r} rows".format(
                    l=len(target), r=matrix.rows))
        c = form.U.apply(list(target))
        y = [0] * matrix.cols
        for t, d in enumerate(form.factors):
            if c[t] % d:
                return None
            y[t] = c[t] // d
        if any(c[t] for t in range(form.rank, matrix.rows)):
            return None
        return form.V.apply(y)


def solve_integer(matrix: SparseIntMatrix,
                  target: Sequence[int]) -> Optional[List[int]]:
    """
    An integer x with M x = b, or `None` when there is none.
    """
    return IntegerSolver(matrix).solve(target)


def kernel_basis(matrix: SparseIntMatrix) -> List[List[int]]:
    """
    A basis of the integer null space {x : M x = 0}. The lattice it spans is
    saturated; each vector has a positive first non-zero entry.
    """
    form = smith_normal_form(matrix, transforms=True)
    basis = []
    for t in range(form.rank, matrix.cols):
        column = form.V.column(t)
        vector = [column.get(r, 0) for r in range(matrix.cols)]
        lead = next((v for v in vector if v), 0)
        if lead < 0:
            vector = [-v for v in vector]
        basis.append(vector)
    return basis


def cokernel_generators(matrix: SparseIntMatrix) -> List[
        Tuple[int, List[int]]]:
    """
    Generators of Z^cols / (row span of M) as `(order, vector)` pairs, order 0
    standing for a free generator. Trivial summands are left out.
    """
    form = smith_normal_form(matrix, transforms=True)
    generators = []
    for t in range(matrix.cols):
        order = form.factors[t] if t < form.rank else 0
        if order == 1:
            continue
        row = form.V_inverse.row(t)
        generators.append((order, [row.get(c, 0) for c in range(matrix.cols)]))
    return generators
