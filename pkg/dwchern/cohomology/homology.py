"""This module computes integral homology of finite groups from the bar
complex and decides whether cochains are coboundaries.

Both rest on :func:`smith_normal_form`, an exact Smith normal form of a
sparse integer matrix ``A``. It returns unimodular ``U`` and ``V`` with
``U A V = D``, where ``D`` has one nonzero entry (a *pivot*) in each of
its first ``rank`` rows and columns up to a permutation, and the pivot
values divide each other. ``U`` and ``V`` are never formed; they are kept
as logs of elementary operations on pairs of rows or columns.

The elimination runs in three stages:

    1. Sparse elimination with pivots of absolute value ``1``, chosen by a
       Markowitz-type rule (the column with the fewest entries, then the
       row with the fewest entries) to limit fill-in. The boundary
       matrices of the bar complex have mostly ``±1`` entries, so this
       stage does nearly all of the work.
    2. A dense Smith normal form of whatever remains.
    3. ``2 x 2`` transformations that make the pivots divide each other.

For a group ``G`` and ``n >= 1`` the homology ``H_n(G; Z)`` is finite. If
``U ∂_{n+1} V = D``, then ``H_n`` is ``⊕ Z/d_i`` over the pivots ``d_i >
1``, the chains ``U^-1 e_i`` are generating cycles and the cochains
``(row i of U) / d_i`` are ``Q/Z``-valued cocycles dual to them.

..
    Aliases for Sphinx.

.. |DEFAULT_SNF_CAP| replace:: :const:`DEFAULT_SNF_CAP`
"""

import heapq
import logging
import math
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np

from dwchern.cohomology.bockstein import bockstein_one
from dwchern.cohomology.chains import (
    BarChain, Cochain, NotACocycleError, NotACycleError, Ring,
    VerificationError, character, cup, pair)
from dwchern.cohomology.groups import SizeBoundError


logger = logging.getLogger(__name__)


DEFAULT_SNF_CAP = 12
"""The default largest group order for Smith normal form computations."""

HARD_SNF_CAP = 16
"""The largest group order any caller may request."""


### Sparse matrices ###

class SparseMatrix():
    """An integer matrix stored as a :class:`dict` of rows, each row a
    :class:`dict` from column indices to nonzero entries.
    """

    def __init__(self, shape, rows=None):
        self.shape = tuple(shape)
        self.rows = {}
        for r, row in (rows or {}).items():
            row = {int(c): int(v) for c, v in row.items() if v}
            if row:
                self.rows[int(r)] = row

    @classmethod
    def from_dense(cls, array):
        array = [[int(v) for v in row] for row in array]
        shape = (len(array), len(array[0]) if array else 0)
        return cls(shape, {r: dict(enumerate(row))
                           for r, row in enumerate(array)})

    def to_dense(self):
        m, k = self.shape
        dense = [[0] * k for _ in range(m)]
        for r, row in self.rows.items():
            for c, v in row.items():
                dense[r][c] = v
        return dense

    def transpose(self):
        rows = {}
        for r, row in self.rows.items():
            for c, v in row.items():
                rows.setdefault(c, {})[r] = v
        return SparseMatrix(self.shape[::-1], rows)

    @property
    def nnz(self):
        """The number of nonzero entries."""
        return sum(len(row) for row in self.rows.values())

    def __repr__(self):
        return f'<{self.shape[0]}x{self.shape[1]} sparse matrix, ' \
               f'{self.nnz} nonzeros>'


def _apply(ops, v):
    """Apply logged pair operations to the vector *v* in place.

    An operation ``(a, b, m00, m01, m10, m11)`` replaces ``(v_a, v_b)`` with
    ``(m00 v_a + m01 v_b, m10 v_a + m11 v_b)``; if ``a == b`` it multiplies
    ``v_a`` by ``m00``.
    """
    for a, b, m00, m01, m10, m11 in ops:
        if a == b:
            v[a] *= m00
        else:
            va, vb = v[a], v[b]
            if va or vb:
                v[a] = m00 * va + m01 * vb
                v[b] = m10 * va + m11 * vb
    return v


def _apply_inverse(ops, v):
    """Undo the operations of :func:`_apply` in place."""
    for a, b, m00, m01, m10, m11 in reversed(ops):
        if a == b:
            v[a] *= m00
        else:
            det = m00 * m11 - m01 * m10
            va, vb = v[a], v[b]
            if va or vb:
                v[a] = det * (m11 * va - m01 * vb)
                v[b] = det * (m00 * vb - m10 * va)
    return v


def _apply_transpose(ops, r):
    """Multiply the row vector *r* from the right by the product of the
    operations, in place.
    """
    for a, b, m00, m01, m10, m11 in reversed(ops):
        if a == b:
            r[a] *= m00
        else:
            ra, rb = r[a], r[b]
            if ra or rb:
                r[a] = ra * m00 + rb * m10
                r[b] = ra * m01 + rb * m11
    return r


def _xgcd(a, b):
    """Return ``(g, s, t)`` with ``g = gcd(a, b) = s a + t b``."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        return -a, -s0, -t0
    return a, s0, t0


@dataclass
class SmithDecomposition():
    """The result of :func:`smith_normal_form`.

    ``U A V`` has the entry ``d`` at ``(row, col)`` for each pivot
    ``(row, col, d)`` and zeros elsewhere.
    """

    shape: tuple
    """The shape of ``A``."""

    pivots: list
    """``(row, col, d)`` triples sorted so that each ``d`` divides the
    next; every ``d`` is positive.
    """

    row_ops: list = field(repr=False)
    """The operations whose product is ``U``."""

    col_ops: list = field(default=None, repr=False)
    """The operations whose product is ``V``, or ``None`` if they were not
    recorded.
    """

    @property
    def divisors(self):
        """The elementary divisors ``d_1 | d_2 | ...``."""
        return [d for _, _, d in self.pivots]

    @property
    def rank(self):
        return len(self.pivots)

    def apply_u(self, v):
        """Return ``U v`` for a sequence *v* of integers."""
        return _apply(self.row_ops, [int(x) for x in v])

    def apply_u_inverse(self, v):
        """Return ``U^-1 v``."""
        return _apply_inverse(self.row_ops, [int(x) for x in v])

    def u_row(self, i):
        """Return row *i* of ``U``."""
        r = [0] * self.shape[0]
        r[i] = 1
        return _apply_transpose(self.row_ops, r)

    def apply_v(self, y):
        """Return ``V y``.

        Raises:
            ValueError: If column operations were not recorded.
        """
        if self.col_ops is None:
            raise ValueError('column operations were not recorded')
        return _apply(reversed(self.col_ops), [int(x) for x in y])

    def u_matrix(self):
        """Return ``U`` as a dense list of rows."""
        m = self.shape[0]
        columns = [self.apply_u([int(i == j) for i in range(m)])
                   for j in range(m)]
        return [list(row) for row in zip(*columns)] if m else []

    def v_matrix(self):
        """Return ``V`` as a dense list of rows."""
        k = self.shape[1]
        columns = [self.apply_v([int(i == j) for i in range(k)])
                   for j in range(k)]
        return [list(row) for row in zip(*columns)] if k else []

    def diagonal_matrix(self):
        """Return ``U A V`` as a dense list of rows."""
        m, k = self.shape
        d = [[0] * k for _ in range(m)]
        for r, c, v in self.pivots:
            d[r][c] = v
        return d


class _Eliminator():
    """The mutable state of a Smith normal form computation."""

    def __init__(self, matrix, track_columns, seed):
        self.shape = matrix.shape
        self.rows = {r: dict(row) for r, row in matrix.rows.items()}
        self.cols = {}
        for r, row in self.rows.items():
            for c in row:
                self.cols.setdefault(c, set()).add(r)
        self.row_ops = []
        self.col_ops = [] if track_columns else None
        self.pivots = []
        rng = random.Random(seed)
        m, k = self.shape
        self.row_rank = list(range(m))
        self.col_rank = list(range(k))
        if seed is not None:
            rng.shuffle(self.row_rank)
            rng.shuffle(self.col_rank)

    def row_add(self, t, s, k):
        """``row_t += k row_s``; returns the columns that changed."""
        self.row_ops.append((t, s, 1, k, 0, 1))
        target = self.rows.setdefault(t, {})
        for c, v in self.rows.get(s, {}).items():
            new = target.get(c, 0) + k * v
            if new:
                target[c] = new
                self.cols.setdefault(c, set()).add(t)
            else:
                del target[c]
                self.cols[c].discard(t)
        return self.rows.get(s, {}).keys()

    def unit_pivots(self):
        """Eliminate with pivots of absolute value 1."""
        heap = [(len(rs), self.col_rank[c], c) for c, rs in self.cols.items()]
        heapq.heapify(heap)
        while heap:
            count, _, c = heapq.heappop(heap)
            if c not in self.cols or len(self.cols[c]) != count or not count:
                continue
            units = [r for r in self.cols[c] if abs(self.rows[r][c]) == 1]
            if not units:
                continue
            p = min(units, key=lambda r: (len(self.rows[r]), self.row_rank[r]))
            u = self.rows[p][c]
            changed = set()
            for r in list(self.cols[c]):
                if r != p:
                    changed.update(self.row_add(r, p, -self.rows[r][c] * u))
            pivot_row = self.rows.pop(p)
            if self.col_ops is not None:
                for j, v in pivot_row.items():
                    if j != c:
                        self.col_ops.append((j, c, 1, 0, -v * u, 1))
            for j in pivot_row:
                self.cols[j].discard(p)
            del self.cols[c]
            self.pivots.append((p, c, u))
            for j in changed | set(pivot_row):
                if j in self.cols:
                    heapq.heappush(
                        heap, (len(self.cols[j]), self.col_rank[j], j))

    def dense_remainder(self):
        """Finish the elimination densely on the remaining entries."""
        rows = sorted((r for r, row in self.rows.items() if row),
                      key=lambda r: self.row_rank[r])
        cols = sorted((c for c, rs in self.cols.items() if rs),
                      key=lambda c: self.col_rank[c])
        if not rows:
            return
        logger.debug('dense remainder of size %dx%d', len(rows), len(cols))
        col_pos = {c: j for j, c in enumerate(cols)}
        m = [[0] * len(cols) for _ in rows]
        for i, r in enumerate(rows):
            for c, v in self.rows[r].items():
                m[i][col_pos[c]] = v

        def row_add(i, s, k):
            self.row_ops.append((rows[i], rows[s], 1, k, 0, 1))
            m[i] = [a + k * b for a, b in zip(m[i], m[s])]

        def col_add(j, s, k):
            if self.col_ops is not None:
                self.col_ops.append((cols[j], cols[s], 1, 0, k, 1))
            for row in m:
                row[j] += k * row[s]

        def swap(i, j):
            if i[0] != j[0]:
                self.row_ops.append((rows[i[0]], rows[j[0]], 0, 1, 1, 0))
                m[i[0]], m[j[0]] = m[j[0]], m[i[0]]
            if i[1] != j[1]:
                if self.col_ops is not None:
                    self.col_ops.append(
                        (cols[i[1]], cols[j[1]], 0, 1, 1, 0))
                for row in m:
                    row[i[1]], row[j[1]] = row[j[1]], row[i[1]]

        nr, nc = len(rows), len(cols)
        for t in range(min(nr, nc)):
            entries = [(abs(m[i][j]), i, j) for i in range(t, nr)
                       for j in range(t, nc) if m[i][j]]
            if not entries:
                break
            _, i, j = min(entries)
            swap((t, t), (i, j))
            while True:
                p = m[t][t]
                for i in range(t + 1, nr):
                    if m[i][t] // p:
                        row_add(i, t, -(m[i][t] // p))
                for j in range(t + 1, nc):
                    if m[t][j] // p:
                        col_add(j, t, -(m[t][j] // p))
                rest = [(abs(m[i][t]), i, t) for i in range(t + 1, nr)
                        if m[i][t]]
                rest += [(abs(m[t][j]), t, j) for j in range(t + 1, nc)
                         if m[t][j]]
                if not rest:
                    break
                _, i, j = min(rest)
                swap((t, t), (i, j))
            self.pivots.append((rows[t], cols[t], m[t][t]))

    def divisibility(self):
        """Make the pivots positive and each divide the next."""
        pivots = []
        for r, c, d in self.pivots:
            if d < 0:
                self.row_ops.append((r, r, -1, 0, 0, -1))
                d = -d
            pivots.append([r, c, d])
        pivots.sort(key=lambda p: p[2])
        units = [p for p in pivots if p[2] == 1]
        rest = [p for p in pivots if p[2] != 1]
        for i in range(len(rest)):
            for j in range(i + 1, len(rest)):
                (ra, ca, x), (rb, cb, y) = rest[i], rest[j]
                if y % x == 0:
                    continue
                g, s, t = _xgcd(x, y)
                self.row_ops.append((ra, rb, s, t, -y // g, x // g))
                if self.col_ops is not None:
                    self.col_ops.append(
                        (ca, cb, 1, -t * y // g, 1, s * x // g))
                rest[i][2], rest[j][2] = g, x * y // g
        self.pivots = [tuple(p) for p in units + rest]


def smith_normal_form(matrix, track_columns=True, seed=None):
    """Return the :class:`SmithDecomposition` of an integer matrix.

    Args:
        matrix: A :class:`SparseMatrix` or a dense array-like.
        track_columns: If ``False``, ``V`` isn't recorded; this saves memory
            when only ``U`` is needed.
        seed: If not ``None``, ties in the pivot order are broken randomly
            with this seed instead of by index. The divisors don't depend
            on it.
    """
    if not isinstance(matrix, SparseMatrix):
        matrix = SparseMatrix.from_dense(matrix)
    start = time.perf_counter()
    state = _Eliminator(matrix, track_columns, seed)
    state.unit_pivots()
    units = len(state.pivots)
    state.dense_remainder()
    state.divisibility()
    logger.info('Smith normal form of a %dx%d matrix with %d nonzeros: '
                'rank %d (%d unit pivots), %d operations, %.2f s',
                matrix.shape[0], matrix.shape[1], matrix.nnz,
                len(state.pivots), units, len(state.row_ops),
                time.perf_counter() - start)
    return SmithDecomposition(matrix.shape, state.pivots, state.row_ops,
                              state.col_ops)


### Bar complex ###

def effective_cap(cap=None):
    """Return *cap*, or |DEFAULT_SNF_CAP| if it is ``None``, clamped to
    :const:`HARD_SNF_CAP`.
    """
    return DEFAULT_SNF_CAP if cap is None else min(cap, HARD_SNF_CAP)


def check_cap(group, cap=None):
    """Return the effective order cap, raising :class:`SizeBoundError` if
    *group* exceeds it.

    See :func:`effective_cap`.
    """
    cap = effective_cap(cap)
    if group.order > cap:
        raise SizeBoundError(f'{group!r} is larger than the Smith normal '
                             f'form cap {cap}')
    return cap


def boundary_matrix(group, n):
    """Return ``∂_n`` as a :class:`SparseMatrix`.

    Rows are indexed by ``(n-1)``-tuples and columns by ``n``-tuples, both
    in the flattening order of cochain tables.
    """
    size = group.order
    if n < 1:
        raise ValueError(f'no boundary from degree {n}')
    shape = (size**(n - 1), size**n)
    if n == 1:
        return SparseMatrix(shape)
    idx = list(np.indices((size,) * n).reshape(n, -1))
    faces = [(1, idx[1:])]
    for i in range(1, n):
        merged = idx[:i - 1] + [group.mul[idx[i - 1], idx[i]]] + idx[i + 1:]
        faces.append(((-1)**i, merged))
    faces.append(((-1)**n, idx[:n - 1]))

    columns = np.arange(shape[1])
    keys = np.concatenate(
        [np.ravel_multi_index(face, (size,) * (n - 1)) * shape[1] + columns
         for _, face in faces])
    signs = np.concatenate([np.full(shape[1], s) for s, _ in faces])
    unique, inverse = np.unique(keys, return_inverse=True)
    values = np.bincount(inverse.ravel(), weights=signs).astype(np.int64)
    rows = {}
    for key, v in zip(unique.tolist(), values.tolist()):
        if v:
            r, c = divmod(key, shape[1])
            rows.setdefault(r, {})[c] = v
    return SparseMatrix(shape, rows)


@lru_cache(maxsize=32)
def _boundary_snf(group, n):
    """The decomposition of ``∂_{n+1}`` used for ``H_n``."""
    matrix = boundary_matrix(group, n + 1)
    return smith_normal_form(matrix, track_columns=False)


@lru_cache(maxsize=32)
def _coboundary_snf(group, n):
    """The decomposition of ``δ_{n-1} = ∂_n^T`` used for degree-*n*
    coboundary problems.
    """
    matrix = boundary_matrix(group, n).transpose()
    return smith_normal_form(matrix, track_columns=True)


def _chain_from_vector(group, n, vector):
    shape = (group.order,) * n
    terms = [(c, np.unravel_index(i, shape) if n else ())
             for i, c in enumerate(vector) if c]
    return BarChain(group, n, terms)


@dataclass
class HomologyGroup():
    """A homology group ``H_n(G; Z) ≅ ⊕ Z/d_i`` with generating cycles and
    dual cocycles.

    ``generators[i]`` is a cycle of order ``divisors[i]`` and ``duals[i]``
    is a ``Q/Z``-valued cocycle with ``<duals[i], generators[j]> = δ_ij /
    d_i``. By universal coefficients the duals also generate
    ``H^n(G; Q/Z) ≅ Hom(H_n, Q/Z)``.
    """

    group: object
    degree: int
    divisors: list
    generators: list = field(repr=False)
    duals: list = field(repr=False)

    @property
    def order(self):
        """``|H_n|``."""
        return math.prod(self.divisors)

    def check(self):
        """Raise :class:`VerificationError` unless the generators are
        cycles, the duals cocycles, and their pairings ``δ_ij / d_i``.
        """
        for z in self.generators:
            if not z.is_cycle():
                raise NotACycleError('homology generator is not a cycle')
        for i, c in enumerate(self.duals):
            if not c.is_cocycle():
                raise NotACocycleError('dual class is not a cocycle')
            for j, z in enumerate(self.generators):
                expected = Fraction(int(i == j), self.divisors[i])
                if pair(c, z) != expected:
                    raise VerificationError(
                        f'dual {i} pairs to {pair(c, z)} with generator {j}')

    def coordinates(self, z):
        """Return the class of the cycle *z* in ``⊕ Z/d_i``.

        Raises:
            NotACycleError: If *z* isn't a cycle.
        """
        if not z.is_cycle():
            raise NotACycleError('only cycles have homology classes')
        return tuple(int(pair(c, z) * d) % d
                     for c, d in zip(self.duals, self.divisors))

    def is_boundary(self, z):
        """Return ``True`` if the cycle *z* is a boundary."""
        return not any(self.coordinates(z))

    def homologous(self, z1, z2):
        """Return ``True`` if the cycles *z1* and *z2* are homologous."""
        return self.is_boundary(z1 - z2)

    def cohomology_coordinates(self, c):
        """Return the class of the ``Q/Z``-valued cocycle *c* in
        ``⊕ Z/d_i``; coordinate ``i`` is ``d_i <c, generators[i]>``.
        """
        return tuple(int(pair(c, z) * d) % d
                     for z, d in zip(self.generators, self.divisors))

    def cocycle(self, coordinates):
        """Return ``Σ a_i duals[i]`` for the coordinates ``a_i``."""
        total = None
        for a, c in zip(coordinates, self.duals):
            total = a * c if total is None else total + a * c
        if total is None:
            return Cochain(self.group, self.degree, Ring.QMODZ,
                           np.zeros((self.group.order,) * self.degree,
                                    dtype=np.int64))
        return total

    def cycle(self, coordinates):
        """Return ``Σ a_i generators[i]``."""
        total = BarChain(self.group, self.degree)
        for a, z in zip(coordinates, self.generators):
            total = total + a * z
        return total


def homology_group(group, n, cap=None):
    """Return ``H_n(G; Z)`` for ``n >= 1`` as a :class:`HomologyGroup`.

    Raises:
        SizeBoundError: If the order of *group* exceeds the cap.
    """
    if n < 1:
        raise ValueError(f'degree must be positive, got {n}')
    check_cap(group, cap)
    return _homology(group, n)


@lru_cache(maxsize=32)
def _homology(group, n):
    snf = _boundary_snf(group, n)
    generators, duals, divisors = [], [], []
    shape = (group.order,) * n
    for row, _, d in snf.pivots:
        if d == 1:
            continue
        e = [0] * snf.shape[0]
        e[row] = 1
        generators.append(
            _chain_from_vector(group, n, snf.apply_u_inverse(e)))
        numerators = np.array([x % d for x in snf.u_row(row)],
                              dtype=np.int64).reshape(shape)
        duals.append(Cochain(group, n, Ring.QMODZ, numerators,
                             denominator=d))
        divisors.append(d)
    logger.info('H_%d(%r) = %s', n, group,
                ' + '.join(f'Z/{d}' for d in divisors) or '0')
    return HomologyGroup(group, n, divisors, generators, duals)


def lens_cycle(group, g, q=1):
    """Return ``q Σ_i [g | g^i | g]``, the fundamental cycle of a lens
    space on the cyclic group generated by *g*.
    """
    n = group.element_order(g)
    terms = [(q, (g, group.power(g, i), g)) for i in range(n)]
    return BarChain(group, 3, terms)


def lens_homology(group, g):
    """Return ``H_3`` of a cyclic group with generator *g* without a Smith
    normal form.

    The generator is :func:`lens_cycle` and the dual is ``φ ⌣ βφ`` with
    ``φ(g) = 1/n``, which pairs to ``1/n`` with it.

    Raises:
        ValueError: If *g* doesn't generate *group*.
    """
    n = group.order
    if group.element_order(g) != n:
        raise ValueError(f'{g} does not generate {group!r}')
    if n == 1:
        return HomologyGroup(group, 3, [], [], [])
    phi = character(group, [g], [Fraction(1, n)])
    return HomologyGroup(group, 3, [n], [lens_cycle(group, g)],
                         [cup(phi, bockstein_one(phi))])


### Cohomology deciders ###

def _solve(snf, target, modulus):
    """Solve ``U^-1 D V^-1 b = target`` for ``b``.

    Arithmetic is exact over ``Z`` if *modulus* is ``None``, over ``Q`` if
    it is ``0`` and over ``Z/modulus`` otherwise. Returns ``None`` if there
    is no solution.
    """
    w = snf.apply_u(target) if modulus != 0 else None
    if modulus == 0:
        den = math.lcm(*(x.denominator for x in target)) if target else 1
        w = [Fraction(x, den) for x in snf.apply_u(
            [int(t * den) for t in target])]
    y = [0] * snf.shape[1]
    pivot_rows = set()
    for r, c, d in snf.pivots:
        pivot_rows.add(r)
        if modulus is None:
            if w[r] % d:
                return None
            y[c] = w[r] // d
        elif modulus == 0:
            y[c] = w[r] / d
        else:
            g = math.gcd(d, modulus)
            if w[r] % g:
                return None
            m = modulus // g
            y[c] = (w[r] // g) * pow(d // g, -1, m) % m if m > 1 else 0
    for r, x in enumerate(w):
        if r not in pivot_rows and (x % modulus if modulus else x):
            return None
    if modulus == 0:
        den = math.lcm(*(x.denominator for x in y)) if y else 1
        return [Fraction(x, den) for x in snf.apply_v(
            [int(v * den) for v in y])]
    return snf.apply_v(y)


def solve_lattice(columns, target):
    """Return integers ``x`` with ``Σ x_j columns[j] = target``, or
    ``None`` if *target* isn't in the lattice spanned by *columns*.
    """
    target = [int(t) for t in target]
    if not columns:
        return [] if not any(target) else None
    matrix = [list(row) for row in zip(*columns)]
    return _solve(smith_normal_form(matrix), target, None)


def is_coboundary(c, cap=None):
    """Decide whether the cocycle *c* of degree ``n >= 1`` is a coboundary.

    ``Q/Z``-valued problems are solved over ``Z/N`` with ``N = |G| D``,
    ``D`` the denominator of *c*.

    Returns:
        ``(True, b)`` with ``δb = c`` or ``(False, None)``.

    Raises:
        SizeBoundError: If the order of the group exceeds the cap.
    """
    group, n = c.group, c.degree
    if n < 1:
        raise ValueError('degree-0 cochains are never coboundaries of '
                         'anything but 0')
    check_cap(group, cap)
    snf = _coboundary_snf(group, n)
    shape = (group.order,) * (n - 1)

    if c.ring == Ring.QMODZ:
        modulus = group.order * c.denominator
        target = c.to_modular(modulus).table.ravel().tolist()
        b = _solve(snf, target, modulus)
        if b is None:
            return False, None
        witness = Cochain(group, n - 1, Ring.MODULAR,
                          np.array(b, dtype=object).reshape(shape) % modulus,
                          modulus=modulus)
        return True, witness.to_qmodz()

    if c.ring == Ring.RATIONAL:
        target = [Fraction(int(x), c.denominator)
                  for x in c.table.ravel().tolist()]
        b = _solve(snf, target, 0)
        if b is None:
            return False, None
        den = math.lcm(*(x.denominator for x in b)) if b else 1
        table = np.array([int(x * den) for x in b], dtype=object)
        table = table.reshape(shape)
        return True, Cochain(group, n - 1, Ring.RATIONAL, table,
                             denominator=den)

    modulus = c.modulus if c.ring == Ring.MODULAR else None
    b = _solve(snf, c.table.ravel().tolist(), modulus)
    if b is None:
        return False, None
    table = np.array(b, dtype=object).reshape(shape)
    if modulus:
        table = table % modulus
    return True, Cochain(group, n - 1, c.ring, table, modulus=c.modulus)


def classes_equal(c1, c2, cap=None):
    """Return ``True`` if the cocycles *c1* and *c2* are cohomologous."""
    return is_coboundary(c1 - c2, cap)[0]


def class_order(c, cap=None):
    """Return the order of the class of the cocycle *c*.

    Classes of positive degree are annihilated by ``|G|``, so the
    divisors of ``|G|`` are tried in increasing order.
    """
    order = c.group.order
    for k in range(1, order + 1):
        if order % k == 0 and is_coboundary(k * c, cap)[0]:
            return k
    raise VerificationError(f'class is not annihilated by |G| = {order}')


def pairing_fingerprint(c, generators=None, cap=None):
    """Return ``<c, z_i>`` for the generating cycles ``z_i``.

    If *generators* isn't given, the generators of
    :func:`homology_group` are used.

    Raises:
        SizeBoundError: If no generators are given and the group exceeds
            the cap.
    """
    if generators is None:
        generators = homology_group(c.group, c.degree, cap).generators
    return [pair(c, z) for z in generators]
