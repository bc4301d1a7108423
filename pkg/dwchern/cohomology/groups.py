"""This module defines finite groups, their subgroups and homomorphisms.

A finite group is stored as a multiplication table on the element indices
``0, ..., order - 1``. The identity is always the element ``0``, so every
constructor below documents how it numbers the elements; the numbering is
part of the public interface and tests depend on it.

Constructors and their element numbering:

    ===================== ============= ===================================
    Constructor           Order         Element ``k``
    ===================== ============= ===================================
    :func:`make_cyclic`   ``n``         ``k`` (addition mod ``n``)
    :func:`make_dihedral` ``2n``        ``r^a s^f`` with ``k = a + n*f``
    :func:`make_quaternion` ``4n``      ``x^a y^b`` with ``k = a + 2n*b``
    :func:`make_symmetric` ``d!``       the ``k``:th permutation in
                                        lexicographic order
    :func:`make_sl2`      ``q(q^2-1)``  the identity, then the remaining
                                        matrices in row-major lex order
    :func:`make_wreath`   ``|H|^d d!``  ``(h, p)`` with ``k = rank(p) *
                                        |H|^d + sum(h_i |H|^i)``
    ===================== ============= ===================================

Permutations compose right to left: ``(s*t)(i) = s(t(i))``.

..
    Aliases for Sphinx.

.. |EAGER_LIMIT| replace:: :const:`EAGER_LIMIT`
"""

import itertools
import logging
import math
from functools import cached_property

import numpy as np


logger = logging.getLogger(__name__)


EAGER_LIMIT = 4096
"""The largest group order for which a multiplication table is built."""

ASSOCIATIVITY_LIMIT = 48
"""Groups up to this order are checked on every triple of elements; larger
groups are checked on a random sample of triples.
"""

ASSOCIATIVITY_SAMPLES = 20000
"""The number of random triples checked for groups larger than
:const:`ASSOCIATIVITY_LIMIT`.
"""


class GroupError(ValueError):
    """Raised when group data violates the group axioms."""


class SizeBoundError(ValueError):
    """Raised when a table or a search would exceed a configured bound."""


class FiniteGroup():
    """A finite group given by its multiplication table.

    Instances are immutable. Two groups compare equal if their tables are
    equal; labels and names are cosmetic.
    """

    def __init__(self, table, labels=None, name='', check=True):
        """Initialize a new :class:`FiniteGroup`.

        Args:
            table: A square array-like of element indices; ``table[a][b]``
                is the product ``ab``.
            labels: Optional element names, one per element.
            name: A human-readable name of the group.
            check: If ``True``, the group axioms are verified.

        Raises:
            GroupError: If *table* is not the multiplication table of a
                group with identity ``0``.
        """
        table = np.array(table, dtype=np.int64)
        if table.ndim != 2 or table.shape[0] != table.shape[1]:
            raise GroupError(f'table must be square, got shape {table.shape}')
        if table.shape[0] == 0:
            raise GroupError('a group must have at least one element')

        self._mul = table
        self._mul.setflags(write=False)
        self.name = name
        if labels is None:
            labels = [str(k) for k in range(len(table))]
        if len(labels) != len(table):
            raise GroupError(f'expected {len(table)} labels, got {len(labels)}')
        self.labels = tuple(labels)

        if check:
            self._check_axioms()

        inv = np.argmin(self._mul, axis=1)
        self._inv = inv.astype(np.int64)
        self._inv.setflags(write=False)

    def _check_axioms(self):
        n = self.order
        mul = self._mul
        if mul.min() < 0 or mul.max() >= n:
            raise GroupError('table entries must be element indices')

        arange = np.arange(n)
        if not (np.array_equal(mul[0], arange)
                and np.array_equal(mul[:, 0], arange)):
            raise GroupError('element 0 must be the identity')

        # Every row and column of a group table is a permutation.
        rows_ok = (np.sort(mul, axis=1) == arange).all()
        cols_ok = (np.sort(mul, axis=0) == arange[:, None]).all()
        if not (rows_ok and cols_ok):
            raise GroupError('table is not a Latin square')

        if n <= ASSOCIATIVITY_LIMIT:
            a, b, c = np.indices((n, n, n))
        else:
            rng = np.random.default_rng(0)
            a, b, c = rng.integers(0, n, size=(3, ASSOCIATIVITY_SAMPLES))
        if not np.array_equal(mul[mul[a, b], c], mul[a, mul[b, c]]):
            raise GroupError('table is not associative')

    @property
    def order(self) -> int:
        """The number of elements."""
        return len(self._mul)

    @property
    def identity(self) -> int:
        """The identity element, always ``0``."""
        return 0

    @property
    def mul(self):
        """The read-only multiplication table as a :mod:`numpy` array."""
        return self._mul

    @property
    def inv(self):
        """The read-only inversion table as a :mod:`numpy` array."""
        return self._inv

    def multiply(self, a, b):
        """Return the product *a* *b*."""
        return int(self._mul[a, b])

    def inverse(self, a):
        """Return the inverse of *a*."""
        return int(self._inv[a])

    def power(self, a, k):
        """Return *a* raised to the integer power *k*."""
        if k < 0:
            a, k = self.inverse(a), -k
        result = 0
        for _ in range(k % self.element_order(a)):
            result = self.multiply(result, a)
        return result

    def element_order(self, a):
        """Return the order of the element *a*."""
        k, x = 1, a
        while x != 0:
            x = self.multiply(x, a)
            k += 1
        return k

    def conjugate(self, a, g):
        """Return ``g a g^-1``."""
        return self.multiply(self.multiply(g, a), self.inverse(g))

    def label(self, a):
        """Return the label of the element *a*."""
        return self.labels[a]

    @cached_property
    def is_abelian(self) -> bool:
        """``True`` if the group is commutative."""
        return bool(np.array_equal(self._mul, self._mul.T))

    def __len__(self):
        return self.order

    def __eq__(self, other):
        if not isinstance(other, FiniteGroup):
            return NotImplemented
        return np.array_equal(self._mul, other._mul)

    def __hash__(self):
        return hash((self.order, self._mul.tobytes()))

    def __repr__(self):
        name = self.name or 'FiniteGroup'
        return f'<{name} of order {self.order}>'


class WreathProduct():
    """A wreath product ``H^d ⋊ S_d`` whose products are computed on demand.

    Elements are indexed as in :func:`make_wreath`. The product is

        ``(a, p) (b, q) = (i -> a_i b_{p(i)}, q∘p)``

    so that the second factor is read along the permutation of the first.
    This is the convention under which the map of
    :func:`monomial_representation` is a homomorphism.
    """

    def __init__(self, base, d):
        if d < 1:
            raise ValueError(f'd must be positive, got {d}')
        self.base = base
        self.d = d
        self.permutations = tuple(itertools.permutations(range(d)))
        self._perm_rank = {p: i for i, p in enumerate(self.permutations)}
        self.name = f'{base.name or "H"} wr S{d}'

    @property
    def order(self) -> int:
        """The number of elements, ``|H|^d * d!``."""
        return self.base.order**self.d * len(self.permutations)

    @property
    def identity(self) -> int:
        """The identity element, always ``0``."""
        return 0

    def element(self, vector, perm):
        """Return the index of the element ``(vector, perm)``."""
        n = self.base.order
        code = sum(h * n**i for i, h in enumerate(vector))
        return self._perm_rank[tuple(perm)] * n**self.d + code

    def components(self, index):
        """Return the ``(vector, perm)`` pair of the element *index*."""
        n = self.base.order
        rank, code = divmod(index, n**self.d)
        vector = []
        for _ in range(self.d):
            code, h = divmod(code, n)
            vector.append(h)
        return tuple(vector), self.permutations[rank]

    def multiply(self, a, b):
        """Return the product *a* *b*."""
        va, pa = self.components(a)
        vb, pb = self.components(b)
        vector = [self.base.multiply(va[i], vb[pa[i]]) for i in range(self.d)]
        perm = [pb[pa[i]] for i in range(self.d)]
        return self.element(vector, perm)

    def inverse(self, a):
        """Return the inverse of *a*."""
        va, pa = self.components(a)
        perm = [0] * self.d
        for i, j in enumerate(pa):
            perm[j] = i
        vector = [self.base.inverse(va[perm[j]]) for j in range(self.d)]
        return self.element(vector, perm)

    def label(self, a):
        vector, perm = self.components(a)
        hs = ','.join(self.base.label(h) for h in vector)
        return f'(({hs}), {perm})'

    def materialize(self):
        """Return the same group as a :class:`FiniteGroup`.

        Raises:
            SizeBoundError: If the order exceeds |EAGER_LIMIT|.
        """
        if self.order > EAGER_LIMIT:
            raise SizeBoundError(
                f'{self.name} has order {self.order} > {EAGER_LIMIT}')
        n = self.order
        table = [[self.multiply(a, b) for b in range(n)] for a in range(n)]
        labels = [self.label(a) for a in range(n)]
        return FiniteGroup(table, labels, name=self.name)

    def __repr__(self):
        return f'<{self.name} of order {self.order} (lazy)>'


class Subgroup():
    """A subgroup of a :class:`FiniteGroup` together with a transversal.

    The transversal holds one representative ``g_i`` of each coset
    ``H g_i``, and ``transversal[0]`` is the identity. The subgroup is also
    available as a group in its own right through :attr:`group`, where the
    element ``k`` is ``members[k]``.
    """

    def __init__(self, parent, members, transversal=None):
        """Initialize a new :class:`Subgroup`.

        Args:
            parent: The ambient :class:`FiniteGroup`.
            members: The elements of the subgroup.
            transversal: Coset representatives. If omitted, they are chosen
                greedily: the smallest element not yet in a known coset
                represents a new coset.

        Raises:
            GroupError: If *members* isn't a subgroup or *transversal*
                doesn't represent every coset exactly once starting with the
                identity.
        """
        self.parent = parent
        self.members = tuple(sorted(set(int(m) for m in members)))
        self._check_closed()

        position = np.full(parent.order, -1, dtype=np.int64)
        position[list(self.members)] = np.arange(len(self.members))
        self._position = position

        if transversal is None:
            transversal = self._greedy_transversal()
        self.transversal = tuple(int(t) for t in transversal)
        self._coset = self._coset_table()

    def _check_closed(self):
        members = set(self.members)
        if 0 not in members:
            raise GroupError('a subgroup must contain the identity')
        mul = self.parent.mul
        for a in self.members:
            if self.parent.inverse(a) not in members:
                raise GroupError(f'{a} has no inverse in the subgroup')
            for b in self.members:
                if int(mul[a, b]) not in members:
                    raise GroupError(
                        f'product of {a} and {b} is not in the subgroup')

    def _greedy_transversal(self):
        assigned = np.zeros(self.parent.order, dtype=bool)
        transversal = []
        for g in range(self.parent.order):
            if not assigned[g]:
                transversal.append(g)
                assigned[self.parent.mul[list(self.members), g]] = True
        return transversal

    def _coset_table(self):
        coset = np.full(self.parent.order, -1, dtype=np.int64)
        for i, g in enumerate(self.transversal):
            elements = self.parent.mul[list(self.members), g]
            if (coset[elements] != -1).any():
                raise GroupError(f'representative {g} repeats a coset')
            coset[elements] = i
        if (coset == -1).any() or not self.transversal \
                or self.transversal[0] != 0:
            raise GroupError('transversal must start with the identity and '
                             'cover every coset once')
        coset.setflags(write=False)
        return coset

    @property
    def order(self) -> int:
        """The number of elements of the subgroup."""
        return len(self.members)

    @property
    def index(self) -> int:
        """The number of cosets, ``|G/H|``."""
        return len(self.transversal)

    @cached_property
    def group(self):
        """The subgroup as a :class:`FiniteGroup` of its own."""
        members = np.array(self.members)
        table = self._position[self.parent.mul[np.ix_(members, members)]]
        labels = [self.parent.label(m) for m in self.members]
        return FiniteGroup(table, labels, name=f'subgroup of {self.parent.name}',
                           check=False)

    @cached_property
    def inclusion(self):
        """The inclusion of :attr:`group` into the parent as a
        :class:`GroupHom`.
        """
        return GroupHom(self.group, self.parent, self.members, check=False)

    def __contains__(self, g):
        return self._position[g] != -1

    def local(self, g):
        """Return the index of the parent element *g* in :attr:`group`."""
        k = int(self._position[g])
        if k == -1:
            raise GroupError(f'{g} is not in the subgroup')
        return k

    def coset_of(self, g):
        """Return ``i`` such that *g* lies in the coset ``H g_i``."""
        return int(self._coset[g])

    def representative(self, g):
        """Return the representative of the coset ``H g``."""
        return self.transversal[self.coset_of(g)]

    def h_component(self, g):
        """Return ``g (rep g)^-1``, the unique element of the subgroup with
        ``g = h * rep(g)``.
        """
        return self.parent.multiply(g, self.parent.inverse(self.representative(g)))

    @cached_property
    def walk(self):
        """The tables that drive coset walks.

        Returns:
            ``(next_coset, step)``: two integer arrays of shape
            ``(index, |G|)``. Starting in coset ``i`` and multiplying by
            ``g`` on the right leads to coset ``next_coset[i, g]`` and picks
            up the subgroup element ``step[i, g]`` (in :attr:`group`
            numbering), that is ``g_i g = h g_j``.
        """
        t = np.array(self.transversal)
        products = self.parent.mul[t]                   # g_i g
        next_coset = self._coset[products]
        reps = t[next_coset]
        h = self.parent.mul[products, self.parent.inv[reps]]
        step = self._position[h]
        next_coset.setflags(write=False)
        step.setflags(write=False)
        return next_coset, step

    def with_transversal(self, transversal):
        """Return the same subgroup with another transversal."""
        return Subgroup(self.parent, self.members, transversal)

    def __eq__(self, other):
        if not isinstance(other, Subgroup):
            return NotImplemented
        return (self.parent == other.parent and self.members == other.members
                and self.transversal == other.transversal)

    def __hash__(self):
        return hash((self.parent, self.members, self.transversal))

    def __repr__(self):
        return (f'<subgroup of order {self.order} and index {self.index} '
                f'in {self.parent!r}>')


class GroupHom():
    """A homomorphism between groups given by the image of every element."""

    def __init__(self, source, target, image, check=True):
        """Initialize a new :class:`GroupHom`.

        Raises:
            GroupError: If *check* is ``True`` and *image* doesn't define a
                homomorphism.
        """
        self.source = source
        self.target = target
        image = np.array(image, dtype=np.int64)
        if image.shape != (source.order,):
            raise GroupError(f'expected {source.order} images, got {image.shape}')
        image.setflags(write=False)
        self.image = image
        if check:
            self._check()

    def _check(self):
        image = self.image
        if image.min() < 0 or image.max() >= self.target.order:
            raise GroupError('images must be elements of the target')
        if image[0] != 0:
            raise GroupError('the identity must map to the identity')

        if isinstance(self.target, FiniteGroup):
            lhs = image[self.source.mul]
            rhs = self.target.mul[image[:, None], image[None, :]]
            ok = np.array_equal(lhs, rhs)
        else:
            n = self.source.order
            ok = all(
                image[self.source.multiply(a, b)]
                == self.target.multiply(int(image[a]), int(image[b]))
                for a in range(n) for b in range(n))
        if not ok:
            raise GroupError('map is not a homomorphism')

    def __call__(self, g):
        return int(self.image[g])

    def compose(self, other):
        """Return ``self ∘ other``."""
        return GroupHom(other.source, self.target, self.image[other.image],
                        check=False)

    @cached_property
    def kernel(self):
        """The kernel as a sorted tuple of source elements."""
        return tuple(int(g) for g in np.flatnonzero(self.image == 0))

    @property
    def is_injective(self) -> bool:
        return len(self.kernel) == 1

    def __eq__(self, other):
        if not isinstance(other, GroupHom):
            return NotImplemented
        return (self.source == other.source and self.target == other.target
                and np.array_equal(self.image, other.image))

    def __hash__(self):
        return hash((self.source, self.image.tobytes()))

    def __repr__(self):
        return f'GroupHom({list(self.image)})'


def identity_hom(group):
    """Return the identity homomorphism of *group*."""
    return GroupHom(group, group, np.arange(group.order), check=False)


### Constructors ###

def make_cyclic(n):
    """Return the cyclic group ``Z/n`` with element ``k`` at index ``k``."""
    if n < 1:
        raise ValueError(f'n must be positive, got {n}')
    k = np.arange(n)
    table = (k[:, None] + k[None, :]) % n
    return FiniteGroup(table, name=f'Z/{n}', check=False)


def make_dihedral(n):
    """Return the dihedral group ``D_n = Z/n ⋊ Z/2`` of order ``2n``.

    The element ``r^a s^f`` has index ``a + n*f``; ``s r s = r^-1``.
    """
    if n < 1:
        raise ValueError(f'n must be positive, got {n}')

    def index(a, f):
        return a % n + n * (f % 2)

    table = [[0] * (2 * n) for _ in range(2 * n)]
    for a, f, b, g in itertools.product(range(n), range(2), range(n), range(2)):
        sign = -1 if f else 1
        table[index(a, f)][index(b, g)] = index(a + sign * b, f + g)
    labels = [f'r^{a} s^{f}' for f in range(2) for a in range(n)]
    return FiniteGroup(table, labels, name=f'D{n}')


def make_quaternion(n):
    """Return the generalized quaternion group ``Q_4n`` of order ``4n``.

    The presentation is ``<x, y | x^n = y^2, xyx = y>``. The element
    ``x^a y^b`` (``0 <= a < 2n``, ``b`` in ``{0, 1}``) has index
    ``a + 2n*b``, so ``x`` is ``1`` and ``y`` is ``2n``.
    """
    if n < 1:
        raise ValueError(f'n must be positive, got {n}')
    m = 2 * n

    def product(a, b, c, d):
        # y^b x^c = x^((-1)^b c) y^b and y^2 = x^n.
        exponent = a + (-c if b else c)
        if b + d == 2:
            return (exponent + n) % m
        return exponent % m + m * (b + d)

    table = [[0] * (2 * m) for _ in range(2 * m)]
    for a, b, c, d in itertools.product(range(m), range(2), range(m), range(2)):
        table[a + m * b][c + m * d] = product(a, b, c, d)
    labels = [f'x^{a} y^{b}' for b in range(2) for a in range(m)]
    return FiniteGroup(table, labels, name=f'Q{4 * n}')


def make_symmetric(d):
    """Return the symmetric group ``S_d``.

    Permutations are numbered in lexicographic order (so the identity is
    ``0``) and ``(s*t)(i) = s(t(i))``.

    Raises:
        SizeBoundError: If ``d!`` exceeds |EAGER_LIMIT|.
    """
    if d < 1:
        raise ValueError(f'd must be positive, got {d}')
    if math.factorial(d) > EAGER_LIMIT:
        raise SizeBoundError(f'S{d} has order {math.factorial(d)} > {EAGER_LIMIT}')
    perms = list(itertools.permutations(range(d)))
    rank = {p: i for i, p in enumerate(perms)}
    table = [[rank[tuple(s[t[i]] for i in range(d))] for t in perms]
             for s in perms]
    return FiniteGroup(table, [str(p) for p in perms], name=f'S{d}')


def make_sl2(q):
    """Return ``SL_2(F_q)`` for an odd prime ``q <= 7``.

    The identity matrix is element ``0``; the other matrices follow in
    row-major lexicographic order of their entries.

    Raises:
        ValueError: If *q* is not an odd prime at most 7.
    """
    if q not in (3, 5, 7):
        raise ValueError(f'q must be an odd prime at most 7, got {q}')
    matrices = [m for m in itertools.product(range(q), repeat=4)
                if (m[0] * m[3] - m[1] * m[2]) % q == 1]
    identity = (1, 0, 0, 1)
    matrices.remove(identity)
    matrices.insert(0, identity)
    rank = {m: i for i, m in enumerate(matrices)}

    def product(x, y):
        a, b, c, d = x
        e, f, g, h = y
        return ((a * e + b * g) % q, (a * f + b * h) % q,
                (c * e + d * g) % q, (c * f + d * h) % q)

    table = [[rank[product(x, y)] for y in matrices] for x in matrices]
    labels = [f'[[{a},{b}],[{c},{d}]]' for a, b, c, d in matrices]
    return FiniteGroup(table, labels, name=f'SL2({q})')


def make_wreath(base, d, lazy=None):
    """Return the wreath product ``base^d ⋊ S_d``.

    Args:
        base: A :class:`FiniteGroup`.
        d: The number of coordinates.
        lazy: ``True`` for a :class:`WreathProduct`, ``False`` for a
            materialized :class:`FiniteGroup` and ``None`` to choose by
            comparing the order with |EAGER_LIMIT|.

    Raises:
        SizeBoundError: If *lazy* is ``False`` and the order exceeds
            |EAGER_LIMIT|.
    """
    wreath = WreathProduct(base, d)
    if lazy is None:
        lazy = wreath.order > EAGER_LIMIT
    if lazy:
        return wreath
    return wreath.materialize()


### Subgroups ###

def generated_elements(group, gens):
    """Return the sorted elements of the subgroup generated by *gens*."""
    members = {0}
    frontier = [0]
    gens = [int(g) for g in gens]
    while frontier:
        new = []
        for a in frontier:
            for g in gens:
                b = group.multiply(a, g)
                if b not in members:
                    members.add(b)
                    new.append(b)
        frontier = new
    return sorted(members)


def subgroup_from_generators(group, gens):
    """Return the subgroup of *group* generated by *gens* with the greedy
    transversal.
    """
    return Subgroup(group, generated_elements(group, gens))


def sylow_subgroup(group, p):
    """Return a Sylow *p*-subgroup of *group*.

    The subgroup is grown one factor of *p* at a time: as long as ``P`` is
    not a Sylow subgroup, its normalizer contains an element ``g`` outside
    ``P`` with ``g^p`` in ``P``, and ``<P, g>`` is a *p*-group of order
    ``p|P|``. Candidates are tried in index order, so the result is
    deterministic.

    Raises:
        ValueError: If *p* is not a prime dividing the order.
    """
    n = group.order
    if p < 2 or any(p % k == 0 for k in range(2, math.isqrt(p) + 1)) \
            or n % p:
        raise ValueError(f'{p} is not a prime dividing {n}')
    target = 1
    while n % (target * p) == 0:
        target *= p

    members = [0]
    while len(members) < target:
        current = set(members)
        for g in range(n):
            if g in current:
                continue
            if not all(group.conjugate(h, g) in current for h in members):
                continue
            if group.power(g, p) in current:
                members = generated_elements(group, members + [g])
                break
        else:
            raise GroupError(f'no extension of a {p}-subgroup of order '
                             f'{len(members)} found')
    logger.debug('Sylow %d-subgroup of %r has order %d', p, group, target)
    return Subgroup(group, members)


def coset_permutation(subgroup, g):
    """Return the permutation ``i -> j`` with ``g_i g`` in ``H g_j``."""
    next_coset, _ = subgroup.walk
    return tuple(int(j) for j in next_coset[:, g])


def permutation_sign(perm):
    """Return ``1`` for an even permutation and ``-1`` for an odd one."""
    seen = [False] * len(perm)
    cycles = 0
    for i in range(len(perm)):
        if not seen[i]:
            cycles += 1
            j = i
            while not seen[j]:
                seen[j] = True
                j = perm[j]
    return -1 if (len(perm) - cycles) % 2 else 1


def monomial_representation(subgroup):
    """Return the monomial representation ``G -> H^d ⋊ S_d``.

    The element ``s`` maps to ``((h_0, ..., h_{d-1}), p)`` where
    ``g_i s = h_i g_{p(i)}``. The target is :func:`make_wreath` of
    ``subgroup.group``; the result is checked to be a homomorphism.
    """
    wreath = make_wreath(subgroup.group, subgroup.index)
    lazy = wreath if isinstance(wreath, WreathProduct) \
        else WreathProduct(subgroup.group, subgroup.index)
    next_coset, step = subgroup.walk
    image = [lazy.element(step[:, s], next_coset[:, s])
             for s in range(subgroup.parent.order)]
    return GroupHom(subgroup.parent, wreath, image)


def image_subgroup(hom):
    """Return the image of *hom* as a :class:`Subgroup` of its target."""
    return Subgroup(hom.target, set(int(g) for g in hom.image))


def preimage_subgroup(hom, subgroup):
    """Return ``hom^-1(subgroup)`` as a :class:`Subgroup` of the source."""
    members = [g for g in range(hom.source.order) if hom(g) in subgroup]
    return Subgroup(hom.source, members)


def cyclic_generator(group):
    """Return the smallest element generating *group*, or ``None`` if the
    group isn't cyclic.
    """
    for g in range(group.order):
        if group.element_order(g) == group.order:
            return g
    return None


### Homomorphisms ###

def hom_from_generators(source, gens, images, target):
    """Return the homomorphism sending ``gens[k]`` to ``images[k]``.

    Raises:
        GroupError: If *gens* don't generate *source* or the assignment
            doesn't extend to a homomorphism.
    """
    image = {0: 0}
    frontier = [0]
    pairs = list(zip((int(g) for g in gens), (int(h) for h in images)))
    while frontier:
        new = []
        for a in frontier:
            for g, h in pairs:
                b = source.multiply(a, g)
                value = target.multiply(image[a], h)
                if b not in image:
                    image[b] = value
                    new.append(b)
                elif image[b] != value:
                    raise GroupError('assignment is not a homomorphism')
        frontier = new
    if len(image) != source.order:
        raise GroupError('elements do not generate the source group')
    return GroupHom(source, target, [image[g] for g in range(source.order)])


def generating_set(group):
    """Return a small generating set, found greedily by element index."""
    gens = []
    span = {0}
    for g in range(group.order):
        if g not in span:
            gens.append(g)
            span = set(generated_elements(group, gens))
    return gens


def find_isomorphism(group, other):
    """Return an isomorphism ``group -> other`` or ``None``.

    This is a brute-force search over images of a generating set and is
    meant for small groups in tests.
    """
    if group.order != other.order or group.is_abelian != other.is_abelian:
        return None
    gens = generating_set(group)
    orders = [group.element_order(g) for g in gens]
    candidates = [[h for h in range(other.order)
                   if other.element_order(h) == k] for k in orders]
    for images in itertools.product(*candidates):
        try:
            hom = hom_from_generators(group, gens, images, other)
        except GroupError:
            continue
        if hom.is_injective:
            return hom
    return None
