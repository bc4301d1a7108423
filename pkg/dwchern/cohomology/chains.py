"""This module defines chains and cochains of the bar complex of a finite
group.

A degree-*n* cochain is a function ``G^n -> A`` where the coefficient ring
``A`` is one of the members of :class:`Ring`. Cochains are stored as
:mod:`numpy` integer tables of *numerators*: the value at a tuple is the
numerator divided by :attr:`Cochain.denominator` (for ``Q`` and ``Q/Z``) or
taken modulo :attr:`Cochain.modulus` (for ``Z/N``). Numerators are
``int64`` while :attr:`Cochain.bound` shows that no operation can leave
that range, and Python integers (``dtype=object``) otherwise. Tables
with more than :const:`DENSE_LIMIT` entries are never built; such cochains
are evaluated lazily from the cochains they were computed from.

A tuple ``(g_1, ..., g_n)`` of element indices is stored at the table
position ``table[g_1, ..., g_n]``. Cochains are not assumed to be
normalized.

Chains are formal integer combinations of tuples (:class:`BarChain`).
The differentials are

    ``(δc)(g_1..g_{n+1}) = c(g_2..g_{n+1})
    + Σ_i (-1)^i c(g_1..g_i g_{i+1}..g_{n+1}) + (-1)^(n+1) c(g_1..g_n)``

and its dual ``∂`` on chains, so that ``<δc, z> = <c, ∂z>`` exactly.
The boundary of a degree-1 chain is ``0``.
"""

import enum as e
import logging
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from dwchern.cohomology.groups import (
    GroupError, SizeBoundError, hom_from_generators, make_cyclic)


logger = logging.getLogger(__name__)


DENSE_LIMIT = 2**24
"""The largest number of entries in a stored cochain table."""

MAX_DEGREE = 5
"""The largest supported cochain degree.

Degree 5 is only needed for checking that 4-cochains are cocycles.
"""

_BLOCK = 2**20
# Tables larger than this are evaluated one first coordinate at a time.


class RingMismatchError(TypeError):
    """Raised when cochains over incompatible rings are combined."""


class VerificationError(AssertionError):
    """Raised when an identity that the library asserts fails."""


class NotACocycleError(VerificationError):
    """Raised when a cochain required to be a cocycle is not one."""


class NotACycleError(VerificationError):
    """Raised when a chain required to be a cycle is not one."""


class Ring(e.Enum):
    """The coefficient rings of cochains.

    Members have the following fields:

        **value**
            The symbol of the ring.

        **periodic**
            ``True`` if numerators are only defined modulo a period
            (the modulus or the denominator).

        **description**
            A verbal description of the ring.

    This enum contains the following members:

    ============ ========== ============ ==========================
    Member name  Value      Periodic     Description
    ============ ========== ============ ==========================
    ``INTEGER``  ``'Z'``    ``False``    ``'Integers'``
    ``MODULAR``  ``'Z/N'``  ``True``     ``'Integers modulo N'``
    ``RATIONAL`` ``'Q'``    ``False``    ``'Rational numbers'``
    ``QMODZ``    ``'Q/Z'``  ``True``     ``'Rationals modulo 1'``
    ============ ========== ============ ==========================
    """

    def __new__(cls, value, periodic, description):
        obj = object.__new__(cls)
        obj._value_ = value
        obj.periodic = periodic
        obj.description = description
        return obj

    def __repr__(self):
        return str(self)

#   Name       Value  Periodic Description
    INTEGER  = ('Z',   False,  'Integers')
    MODULAR  = ('Z/N', True,   'Integers modulo N')
    RATIONAL = ('Q',   False,  'Rational numbers')
    QMODZ    = ('Q/Z', True,   'Rationals modulo 1')


@dataclass(frozen=True)
class Residue():
    """An element of ``Z/N``."""

    value: int
    """The representative in ``0, ..., modulus - 1``."""

    modulus: int
    """``N``."""

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError(f'modulus must be positive, got {self.modulus}')
        object.__setattr__(self, 'value', int(self.value) % self.modulus)

    def _other(self, other):
        if isinstance(other, Residue):
            if other.modulus != self.modulus:
                raise RingMismatchError(
                    f'moduli {self.modulus} and {other.modulus} differ')
            return other.value
        if isinstance(other, int):
            return other
        return NotImplemented

    def __add__(self, other):
        value = self._other(other)
        if value is NotImplemented:
            return value
        return Residue(self.value + value, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        value = self._other(other)
        if value is NotImplemented:
            return value
        return Residue(self.value - value, self.modulus)

    def __neg__(self):
        return Residue(-self.value, self.modulus)

    def __mul__(self, other):
        value = self._other(other)
        if value is NotImplemented:
            return value
        return Residue(self.value * value, self.modulus)

    __rmul__ = __mul__

    def __int__(self):
        return self.value

    def __str__(self):
        return f'{self.value} mod {self.modulus}'


def qmodz(x):
    """Return the rational number *x* reduced into ``[0, 1)``."""
    return Fraction(x) % 1


def _lcm(*values):
    return math.lcm(*(int(v) for v in values))


INT64_BOUND = 2**62
"""Arithmetic whose results may reach this magnitude is done with Python
integers instead of ``int64``.
"""


def magnitude(table):
    """Return the largest absolute value in an integer array."""
    table = np.asarray(table)
    if not table.size:
        return 0
    if table.dtype == object:
        return max(abs(int(x)) for x in table.ravel().tolist())
    return int(np.abs(table).max())


def numerators(table):
    """Return the integer array-like *table* as an ``int64`` array, or as
    an array of Python integers if some entry doesn't fit.
    """
    if not isinstance(table, np.ndarray):
        table = np.array(table, dtype=object)
    if table.dtype.kind in 'bi' \
            or (table.dtype.kind == 'u' and table.dtype.itemsize < 8):
        return np.array(table, dtype=np.int64)
    table = np.array([int(x) for x in table.ravel().tolist()],
                     dtype=object).reshape(table.shape)
    if magnitude(table) < INT64_BOUND:
        return table.astype(np.int64)
    return table


def wide_values(c, bound):
    """Return a reader of the numerators of *c* that yields Python integers
    if arithmetic on them may reach *bound*, and ``c.values`` otherwise.
    """
    if bound < INT64_BOUND:
        return c.values
    return lambda *idx: np.asarray(c.values(*idx), dtype=object)


def reduce_mod(values, period):
    """Return the numerators *values* reduced into ``[0, period)``."""
    if period >= INT64_BOUND:
        values = np.asarray(values, dtype=object)
    return values % period


class Cochain():
    """A cochain of the bar complex of a finite group.

    Instances are immutable. Use the module-level functions and the
    arithmetic operators ``+``, ``-``, ``*`` (by an integer) and ``/`` (by
    an integer, into ``Q``) to build new cochains.
    """

    def __init__(self, group, degree, ring, table=None, *, func=None,
                 denominator=1, modulus=None, bound=None):
        """Initialize a new :class:`Cochain`.

        Exactly one of *table* and *func* must be given.

        Args:
            group: A :class:`~dwchern.cohomology.groups.FiniteGroup`.
            degree: The degree, ``0 <= degree <=`` :const:`MAX_DEGREE`.
            ring: A :class:`Ring` member.
            table: An integer array-like of shape ``(|G|,) * degree`` of
                numerators.
            func: A function that maps *degree* broadcastable integer index
                arrays to the numerators at those tuples.
            denominator: The common denominator of ``Q`` and ``Q/Z``
                values.
            modulus: ``N`` for ``Z/N`` values.
            bound: An upper bound of the absolute values of the numerators
                *func* returns. Without it, lazy cochains over ``Z`` and
                ``Q`` are assumed to need Python integers.

        Raises:
            ValueError: If the arguments are inconsistent.
            SizeBoundError: If *table* has more than :const:`DENSE_LIMIT`
                entries.
        """
        if not 0 <= degree <= MAX_DEGREE:
            raise ValueError(f'degree must be between 0 and {MAX_DEGREE}, '
                             f'got {degree}')
        if (table is None) == (func is None):
            raise ValueError('exactly one of table and func must be given')

        ring = Ring(ring)
        if ring == Ring.MODULAR:
            if modulus is None or modulus < 1:
                raise ValueError(f'Z/N cochains need a modulus, got {modulus}')
            denominator = 1
        else:
            if modulus is not None:
                raise ValueError(f'{ring.value} cochains have no modulus')
            if ring == Ring.INTEGER:
                denominator = 1
        if denominator < 1:
            raise ValueError(f'denominator must be positive, '
                             f'got {denominator}')

        self.group = group
        self.degree = degree
        self.ring = ring
        self.denominator = int(denominator)
        self.modulus = None if modulus is None else int(modulus)

        if table is not None:
            table = numerators(table)
            shape = (group.order,) * degree
            if table.shape != shape:
                raise ValueError(f'expected a table of shape {shape}, '
                                 f'got {table.shape}')
            if table.size > DENSE_LIMIT:
                raise SizeBoundError(f'{table.size} entries > {DENSE_LIMIT}')
            if self.period is not None:
                table = numerators(reduce_mod(table, self.period))
            if table.dtype == object:
                logger.debug('%d-cochain on %r needs Python integers',
                             degree, group)
            table.setflags(write=False)
            bound = magnitude(table)
        elif bound is None:
            bound = INT64_BOUND
        if self.period is not None:
            bound = min(bound, self.period - 1)
        self.bound = int(bound)
        """An upper bound of the absolute values of the numerators."""
        self._table = table
        self._func = func

    @property
    def period(self):
        """The number modulo which numerators are defined, or ``None``."""
        if self.ring == Ring.MODULAR:
            return self.modulus
        if self.ring == Ring.QMODZ:
            return self.denominator
        return None

    @property
    def size(self):
        """The number of tuples, ``|G|^degree``."""
        return self.group.order**self.degree

    @property
    def is_dense(self):
        """``True`` if the values are stored in a table."""
        return self._table is not None

    @property
    def table(self):
        """The read-only numerator table.

        Lazy cochains are evaluated first.

        Raises:
            SizeBoundError: If the table would exceed :const:`DENSE_LIMIT`.
        """
        if self._table is None:
            if self.size > DENSE_LIMIT:
                raise SizeBoundError(
                    f'{self.size} entries > {DENSE_LIMIT}')
            dtype = np.int64 if self.bound < INT64_BOUND else object
            table = np.empty((self.group.order,) * self.degree, dtype=dtype)
            for index, block in self._blocks():
                table[index] = block
            table = numerators(table)
            table.setflags(write=False)
            self._table = table
        return self._table

    def values(self, *idx):
        """Return the numerators at the tuples given by the broadcastable
        index arrays *idx*.

        The result is normalized into ``[0, period)`` for periodic rings.
        """
        if len(idx) != self.degree:
            raise ValueError(f'expected {self.degree} index arrays, '
                             f'got {len(idx)}')
        if self._table is not None:
            return self._table[idx] if idx else self._table[()]
        values = self._func(*idx)
        if self.period is not None:
            values = reduce_mod(values, self.period)
        return values

    def _blocks(self):
        """Yield ``(index, numerators)`` pairs that cover the whole table."""
        n, d = self.group.order, self.degree
        if d == 0:
            yield (), self.values()
        elif self.size <= _BLOCK or d == 1:
            yield (...,), self.values(*np.indices((n,) * d, sparse=True))
        else:
            rest = np.indices((n,) * (d - 1), sparse=True)
            for a in range(n):
                yield (a,), self.values(np.int64(a), *rest)

    def scalar(self, numerator):
        """Return the ring element with the given numerator."""
        numerator = int(numerator)
        if self.ring == Ring.INTEGER:
            return numerator
        if self.ring == Ring.MODULAR:
            return Residue(numerator, self.modulus)
        if self.ring == Ring.RATIONAL:
            return Fraction(numerator, self.denominator)
        return qmodz(Fraction(numerator, self.denominator))

    def __call__(self, *elements):
        """Return the value at the tuple *elements*."""
        return self.scalar(self.values(*(np.int64(g) for g in elements)))

    def is_zero(self):
        """Return ``True`` if every value is zero."""
        return all(not np.any(block) for _, block in self._blocks())

    def is_cocycle(self):
        """Return ``True`` if ``δ self = 0``."""
        return coboundary(self).is_zero()

    def compatible(self, other):
        """Return ``True`` if *other* lives in the same cochain group."""
        return (isinstance(other, Cochain)
                and same_group(self.group, other.group)
                and self.degree == other.degree and self.ring == other.ring
                and self.modulus == other.modulus)

    def _check_compatible(self, other):
        if not isinstance(other, Cochain):
            raise TypeError(f'expected a Cochain, got {type(other).__name__}')
        if not same_group(self.group, other.group):
            raise ValueError('cochains live on different groups')
        if self.degree != other.degree:
            raise ValueError(f'degrees {self.degree} and {other.degree} '
                             f'differ')
        if self.ring != other.ring or self.modulus != other.modulus:
            raise RingMismatchError(
                f'cannot combine {self.ring_name} and {other.ring_name}')

    @property
    def ring_name(self):
        """The ring as text, with the modulus filled in for ``Z/N``."""
        if self.ring == Ring.MODULAR:
            return f'Z/{self.modulus}'
        return self.ring.value

    def _derive(self, func, denominator=None, ring=None, modulus=...,
                bound=None):
        """Return a cochain on the same group whose numerators are
        ``func(*idx)``; it is materialized if small enough.

        *bound* bounds the numerators; it defaults to :attr:`bound`.
        """
        ring = self.ring if ring is None else ring
        modulus = self.modulus if modulus is ... else modulus
        denominator = self.denominator if denominator is None else denominator
        bound = self.bound if bound is None else bound
        return build(self.group, self.degree, ring, func,
                     denominator=denominator, modulus=modulus, bound=bound)

    def __add__(self, other):
        if not isinstance(other, Cochain):
            return NotImplemented
        self._check_compatible(other)
        den = _lcm(self.denominator, other.denominator)
        a, b = den // self.denominator, den // other.denominator
        bound = a * max(self.bound, 1) + b * max(other.bound, 1)
        left, right = wide_values(self, bound), wide_values(other, bound)
        return self._derive(lambda *idx: a * left(*idx) + b * right(*idx),
                            den, bound=bound)

    def __neg__(self):
        return self._derive(lambda *idx: -self.values(*idx))

    def __sub__(self, other):
        if not isinstance(other, Cochain):
            return NotImplemented
        return self + (-other)

    def __mul__(self, k):
        if not isinstance(k, (int, np.integer)):
            return NotImplemented
        k = int(k)
        bound = abs(k) * max(self.bound, 1)
        values = wide_values(self, bound)
        return self._derive(lambda *idx: k * values(*idx), bound=bound)

    __rmul__ = __mul__

    def __truediv__(self, k):
        """Divide an integral or rational cochain by a nonzero integer."""
        if not isinstance(k, (int, np.integer)):
            return NotImplemented
        if self.ring not in (Ring.INTEGER, Ring.RATIONAL):
            raise RingMismatchError(f'cannot divide {self.ring_name} values')
        k = int(k)
        if k == 0:
            raise ZeroDivisionError('division of a cochain by zero')
        sign = 1 if k > 0 else -1
        return self._derive(lambda *idx: sign * self.values(*idx),
                            self.denominator * abs(k), Ring.RATIONAL)

    def __eq__(self, other):
        if not isinstance(other, Cochain):
            return NotImplemented
        return self.compatible(other) and (self - other).is_zero()

    __hash__ = None

    ### Ring conversions ###

    def lift(self):
        """Return the ``Q``-valued cochain of ``[0, 1)`` representatives
        of a ``Q/Z``-valued cochain.
        """
        if self.ring != Ring.QMODZ:
            raise RingMismatchError(f'cannot lift {self.ring_name} values')
        return self._derive(self.values, ring=Ring.RATIONAL)

    def to_integer(self):
        """Return a ``Q``-valued cochain with integral values as a
        ``Z``-valued one.

        Raises:
            VerificationError: If some value isn't an integer.
        """
        if self.ring == Ring.INTEGER:
            return self
        if self.ring != Ring.RATIONAL:
            raise RingMismatchError(
                f'cannot convert {self.ring_name} values to integers')
        den = self.denominator
        for _, block in self._blocks():
            if np.any(block % den):
                raise VerificationError('cochain has non-integral values')
        values = wide_values(self, den)
        return self._derive(lambda *idx: values(*idx) // den, 1,
                            Ring.INTEGER)

    def to_qmodz(self):
        """Return the image of this cochain in ``Q/Z``.

        Integral and rational values are reduced modulo 1, and ``r mod N``
        is mapped to ``r/N``.
        """
        if self.ring == Ring.QMODZ:
            return self
        if self.ring == Ring.MODULAR:
            return self._derive(self.values, self.modulus, Ring.QMODZ, None)
        return self._derive(self.values, ring=Ring.QMODZ)

    def to_modular(self, modulus):
        """Return this cochain with values in ``Z/modulus``.

        Integers are reduced modulo *modulus*. A ``Q/Z``-valued cochain is
        multiplied by *modulus*, which requires its denominator to divide
        *modulus*; this is the inverse of :meth:`to_qmodz`.

        Raises:
            ValueError: If the denominator doesn't divide *modulus*.
        """
        if self.ring == Ring.INTEGER:
            return self._derive(self.values, ring=Ring.MODULAR,
                                modulus=modulus)
        if self.ring == Ring.QMODZ:
            if modulus % self.denominator:
                raise ValueError(f'denominator {self.denominator} does not '
                                 f'divide {modulus}')
            k = modulus // self.denominator
            bound = k * max(self.bound, 1)
            values = wide_values(self, bound)
            return self._derive(lambda *idx: k * values(*idx), 1,
                                Ring.MODULAR, modulus, bound)
        raise RingMismatchError(
            f'cannot convert {self.ring_name} values to Z/{modulus}')

    ### Serialization ###

    def to_json(self):
        """Return a JSON-compatible :class:`dict` with the dense values."""
        data = {'degree': self.degree, 'ring': self.ring.value,
                'values': self.table.ravel().tolist()}
        if self.ring in (Ring.RATIONAL, Ring.QMODZ):
            data['denominator'] = self.denominator
        if self.ring == Ring.MODULAR:
            data['modulus'] = self.modulus
        return data

    @classmethod
    def from_json(cls, group, data):
        """Inverse of :meth:`to_json`."""
        degree = int(data['degree'])
        table = np.array(data['values'], dtype=object)
        table = table.reshape((group.order,) * degree)
        return cls(group, degree, data['ring'], table,
                   denominator=int(data.get('denominator', 1)),
                   modulus=data.get('modulus'))

    def __repr__(self):
        storage = 'dense' if self.is_dense else 'lazy'
        return (f'<{self.ring_name}-valued {self.degree}-cochain on '
                f'{self.group!r} ({storage})>')


def same_group(a, b):
    """Return ``True`` if *a* and *b* are the same group."""
    return a is b or a == b


def _reduce(table, denominator, ring):
    """Cancel common factors of the numerators and the denominator."""
    if ring not in (Ring.RATIONAL, Ring.QMODZ) or denominator == 1:
        return table, denominator
    g = math.gcd(denominator, *(int(x) for x in table.ravel().tolist())) \
        if table.dtype == object \
        else math.gcd(denominator, int(np.gcd.reduce(table.ravel())))
    if g > 1:
        if g >= INT64_BOUND:
            table = table.astype(object)
        table = table // g
        denominator //= g
    return table, denominator


def build(group, degree, ring, func, denominator=1, modulus=None,
          bound=None):
    """Return the cochain with numerators ``func(*idx)``.

    The cochain is materialized and its denominator reduced if it has at
    most :const:`DENSE_LIMIT` entries; otherwise it is lazy. *bound* is an
    upper bound of the absolute values *func* returns.
    """
    lazy = Cochain(group, degree, ring, func=func, denominator=denominator,
                   modulus=modulus, bound=bound)
    if lazy.size > DENSE_LIMIT:
        return lazy
    table = lazy.table
    table, denominator = _reduce(np.array(table), denominator, lazy.ring)
    return Cochain(group, degree, ring, table, denominator=denominator,
                   modulus=modulus)


def zero_cochain(group, degree, ring=Ring.QMODZ, modulus=None):
    """Return the zero cochain."""
    table = np.zeros((group.order,) * degree, dtype=np.int64)
    return Cochain(group, degree, ring, table, modulus=modulus)


def constant_cochain(group, degree, value, ring=Ring.INTEGER, modulus=None):
    """Return the cochain with every value equal to *value*."""
    value = Fraction(value)
    if ring in (Ring.INTEGER, Ring.MODULAR) and value.denominator != 1:
        raise ValueError(f'{value} is not an integer')
    table = np.full((group.order,) * degree, value.numerator, dtype=object)
    return Cochain(group, degree, ring, table, denominator=value.denominator,
                   modulus=modulus)


def cochain_from_function(group, degree, ring, function, modulus=None):
    """Return the cochain whose value at ``(g_1, ..., g_n)`` is
    ``function(g_1, ..., g_n)``.

    The function is called once per tuple, so this is meant for small
    cochains such as test data.
    """
    ring = Ring(ring)
    n = group.order
    tuples = list(np.ndindex(*(n,) * degree))
    values = [Fraction(int(v) if isinstance(v, Residue) else v)
              for v in (function(*t) for t in tuples)]
    den = _lcm(1, *(v.denominator for v in values))
    if ring in (Ring.INTEGER, Ring.MODULAR) and den != 1:
        raise ValueError(f'{ring.value} values must be integers')
    table = np.array([int(v * den) for v in values], dtype=object)
    return Cochain(group, degree, ring, table.reshape((n,) * degree),
                   denominator=den, modulus=modulus)


def character(group, gens, values):
    """Return the homomorphism ``G -> Q/Z`` sending ``gens[k]`` to
    ``values[k]`` as a 1-cocycle.

    Raises:
        GroupError: If the assignment doesn't extend to a homomorphism or
            *gens* don't generate *group*.
    """
    values = [qmodz(v) for v in values]
    den = _lcm(1, *(v.denominator for v in values))
    target = make_cyclic(den)
    images = [int(v * den) for v in values]
    hom = hom_from_generators(group, gens, images, target)
    return Cochain(group, 1, Ring.QMODZ, hom.image, denominator=den)


def check_homomorphism(cochain):
    """Raise :class:`GroupError` unless the 1-cochain *cochain* is a
    homomorphism.
    """
    if cochain.degree != 1:
        raise GroupError(f'a homomorphism has degree 1, not {cochain.degree}')
    if not cochain.is_cocycle():
        raise GroupError('cochain is not a homomorphism')


### Differentials and products ###

def coboundary(c):
    """Return ``δc``."""
    if c.degree >= MAX_DEGREE:
        raise ValueError(f'no coboundary of a degree-{c.degree} cochain')
    mul = c.group.mul
    n = c.degree
    bound = (n + 2) * c.bound
    values = wide_values(c, bound)

    def func(*idx):
        total = values(*idx[1:]) + (-1)**(n + 1) * values(*idx[:n])
        for i in range(1, n + 1):
            merged = idx[:i - 1] + (mul[idx[i - 1], idx[i]],) + idx[i + 1:]
            total = total + (-1)**i * values(*merged)
        return np.broadcast_to(total, np.broadcast(*idx).shape)

    return build(c.group, n + 1, c.ring, func, denominator=c.denominator,
                 modulus=c.modulus, bound=bound)


def _cup_ring(a, b):
    """Return ``(ring, denominator, modulus)`` of ``a ⌣ b``."""
    if a.ring == Ring.INTEGER:
        return b.ring, b.denominator, b.modulus
    if b.ring == Ring.INTEGER:
        return a.ring, a.denominator, a.modulus
    if a.ring == b.ring == Ring.MODULAR and a.modulus == b.modulus:
        return Ring.MODULAR, 1, a.modulus
    raise RingMismatchError(f'no cup product pairing of {a.ring_name} and '
                            f'{b.ring_name}')


def cup(a, b):
    """Return the Alexander-Whitney cup product ``a ⌣ b``.

    The pairing of the coefficient rings is the multiplication of the
    values, which is defined when one factor is integral (``Z`` acting on
    ``Z``, ``Z/N``, ``Q`` or ``Q/Z``) or both factors are in the same
    ``Z/N``.

    Raises:
        RingMismatchError: If the rings have no pairing.
    """
    if not same_group(a.group, b.group):
        raise ValueError('cochains live on different groups')
    ring, den, modulus = _cup_ring(a, b)
    p, q = a.degree, b.degree
    if p + q > MAX_DEGREE:
        raise ValueError(f'cup product degree {p + q} > {MAX_DEGREE}')

    bound = a.bound * b.bound
    left, right = wide_values(a, bound), wide_values(b, bound)
    if a.is_dense and b.is_dense and a.size * b.size <= DENSE_LIMIT:
        dtype = np.int64 if bound < INT64_BOUND else object
        table = np.multiply.outer(a.table.astype(dtype),
                                  b.table.astype(dtype))
        return Cochain(a.group, p + q, ring, table, denominator=den,
                       modulus=modulus)
    return build(a.group, p + q, ring,
                 lambda *idx: left(*idx[:p]) * right(*idx[p:]),
                 denominator=den, modulus=modulus, bound=bound)


class BarChain():
    """A formal integer combination of tuples of group elements.

    The terms are kept canonical: each tuple occurs at most once, zero
    coefficients are dropped and the terms are sorted by tuple.
    """

    def __init__(self, group, degree, terms=()):
        """Initialize a new :class:`BarChain`.

        Args:
            group: The :class:`~dwchern.cohomology.groups.FiniteGroup`.
            degree: The length of the tuples.
            terms: An iterable of ``(coefficient, tuple)`` pairs or a
                :class:`dict` from tuples to coefficients. Repeated tuples
                are added together.

        Raises:
            ValueError: If a tuple has the wrong length or contains
                something other than an element index.
        """
        self.group = group
        self.degree = degree
        if isinstance(terms, dict):
            terms = ((c, t) for t, c in terms.items())
        totals = {}
        for coefficient, tuple_ in terms:
            tuple_ = tuple(int(g) for g in tuple_)
            if len(tuple_) != degree:
                raise ValueError(f'{tuple_} is not a {degree}-tuple')
            if any(not 0 <= g < group.order for g in tuple_):
                raise ValueError(f'{tuple_} contains a non-element')
            totals[tuple_] = totals.get(tuple_, 0) + int(coefficient)
        self.terms = tuple((c, t) for t, c in sorted(totals.items()) if c)

    def __iter__(self):
        return iter(self.terms)

    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def as_dict(self):
        """Return the terms as a :class:`dict` from tuples to
        coefficients.
        """
        return {t: c for c, t in self.terms}

    def _check(self, other):
        if not isinstance(other, BarChain):
            raise TypeError(f'expected a BarChain, got {type(other).__name__}')
        if not same_group(self.group, other.group) \
                or self.degree != other.degree:
            raise ValueError('chains live in different chain groups')

    def __add__(self, other):
        self._check(other)
        return BarChain(self.group, self.degree, self.terms + other.terms)

    def __neg__(self):
        return BarChain(self.group, self.degree,
                        [(-c, t) for c, t in self.terms])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, k):
        if not isinstance(k, (int, np.integer)):
            return NotImplemented
        return BarChain(self.group, self.degree,
                        [(int(k) * c, t) for c, t in self.terms])

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, BarChain):
            return NotImplemented
        return (same_group(self.group, other.group)
                and self.degree == other.degree and self.terms == other.terms)

    def __hash__(self):
        return hash((self.degree, self.terms))

    def boundary(self):
        """Return ``∂ self``."""
        return boundary(self)

    def is_cycle(self):
        """Return ``True`` if ``∂ self = 0``."""
        return not boundary(self)

    def to_json(self):
        """Return a JSON-compatible :class:`dict`."""
        return {'degree': self.degree,
                'terms': [[c, list(t)] for c, t in self.terms]}

    @classmethod
    def from_json(cls, group, data):
        """Inverse of :meth:`to_json`."""
        return cls(group, int(data['degree']),
                   [(c, t) for c, t in data['terms']])

    def __repr__(self):
        terms = ' + '.join(f'{c}[{"|".join(map(str, t))}]'
                           for c, t in self.terms[:4])
        more = ' + ...' if len(self.terms) > 4 else ''
        return f'BarChain({terms or "0"}{more})'


def boundary(z):
    """Return the bar boundary ``∂z``."""
    n = z.degree
    if n < 1:
        raise ValueError('a degree-0 chain has no boundary')
    mul = z.group.mul
    terms = []
    for c, t in z.terms:
        terms.append((c, t[1:]))
        for i in range(1, n):
            merged = t[:i - 1] + (int(mul[t[i - 1], t[i]]),) + t[i + 1:]
            terms.append(((-1)**i * c, merged))
        terms.append(((-1)**n * c, t[:-1]))
    return BarChain(z.group, n - 1, terms)


def pair(c, z):
    """Return the Kronecker pairing ``<c, z> = Σ coefficient * c(tuple)``.

    The value lies in the ring of *c*.
    """
    if not same_group(c.group, z.group):
        raise ValueError('cochain and chain live on different groups')
    if c.degree != z.degree:
        raise ValueError(f'cannot pair a degree-{c.degree} cochain with a '
                         f'degree-{z.degree} chain')
    if not z.terms:
        return c.scalar(0)
    coefficients = np.array([k for k, _ in z.terms], dtype=object)
    tuples = np.array([t for _, t in z.terms], dtype=np.int64)
    tuples = tuples.reshape(len(z.terms), c.degree)
    numerators = c.values(*tuples.T)
    numerators = np.broadcast_to(numerators, coefficients.shape)
    total = sum(int(k) * int(v) for k, v in zip(coefficients, numerators))
    return c.scalar(total)


### Functoriality ###

def pullback_cochain(f, c):
    """Return ``f^*(c) = c ∘ (f × ... × f)``, a cochain on ``f.source``."""
    if not same_group(f.target, c.group):
        raise ValueError('cochain does not live on the target of the hom')
    image = f.image
    if c.is_dense and f.source.order**c.degree <= DENSE_LIMIT:
        table = c.table[np.ix_(*(image,) * c.degree)] if c.degree \
            else c.table
        return Cochain(f.source, c.degree, c.ring, table,
                       denominator=c.denominator, modulus=c.modulus)
    return build(f.source, c.degree, c.ring,
                 lambda *idx: c.values(*(image[i] for i in idx)),
                 denominator=c.denominator, modulus=c.modulus, bound=c.bound)


def pushforward_chain(f, z):
    """Return ``f_*(z)``, a chain on ``f.target``."""
    if not same_group(f.source, z.group):
        raise ValueError('chain does not live on the source of the hom')
    image = f.image
    return BarChain(f.target, z.degree,
                    [(c, tuple(image[list(t)])) for c, t in z.terms])
