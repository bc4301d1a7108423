"""This module defines the Bockstein map of the coefficient sequence
``0 -> Z -> Q -> Q/Z -> 0`` and an inverse of it in degree 4.

All lifts ``Q/Z -> Q`` use the representative in ``[0, 1)``.
"""

import logging

import numpy as np

from dwchern.cohomology.chains import (
    INT64_BOUND, Cochain, NotACocycleError, Ring, RingMismatchError,
    VerificationError, build, coboundary, wide_values)


logger = logging.getLogger(__name__)


def bockstein_one(phi):
    """Return ``β(φ)`` for a ``Q/Z``-valued 1-cochain *phi*.

    The value at ``(g, h)`` is ``1`` if the ``[0, 1)`` representatives of
    ``φ(g)`` and ``φ(h)`` add up to at least ``1``, and ``0`` otherwise.
    The formula is applied pointwise; if *phi* is a homomorphism, the result
    is a 2-cocycle.
    """
    if phi.ring != Ring.QMODZ or phi.degree != 1:
        raise RingMismatchError('expected a Q/Z-valued 1-cochain')
    v = phi.table
    table = (np.add.outer(v, v) >= phi.denominator).astype(np.int64)
    return Cochain(phi.group, 2, Ring.INTEGER, table)


def bockstein(c, check=True):
    """Return ``β(c) = δ(lift of c)`` for a ``Q/Z``-valued cocycle *c*.

    Raises:
        NotACocycleError: If *check* is ``True`` and *c* isn't a cocycle.
        VerificationError: If the result isn't integral.
    """
    if c.ring != Ring.QMODZ:
        raise RingMismatchError(f'expected Q/Z values, got {c.ring_name}')
    if check and not c.is_cocycle():
        raise NotACocycleError(f'Bockstein of a {c.degree}-cochain that is '
                               f'not a cocycle')
    return coboundary(c.lift()).to_integer()


def average_first(c4):
    """Return ``S(g_1, g_2, g_3) = Σ_g C(g, g_1, g_2, g_3)``."""
    n = c4.group.order
    bound = n * c4.bound
    if c4.is_dense:
        dtype = np.int64 if bound < INT64_BOUND else object
        return Cochain(c4.group, 3, Ring.INTEGER,
                       c4.table.astype(dtype).sum(axis=0))
    values = wide_values(c4, bound)

    def func(*idx):
        return sum(values(np.int64(g), *idx) for g in range(n))

    return build(c4.group, 3, Ring.INTEGER, func, bound=bound)


def bockstein_inverse_four(c4, check=True):
    """Return a ``Q/Z``-valued 3-cocycle ``ψ`` with ``β(ψ)`` cohomologous
    to the integral 4-cocycle *c4*.

    With ``S(g_1, g_2, g_3) = Σ_g C(g, g_1, g_2, g_3)`` the cocycle
    condition of ``C`` gives ``δS = |G| C`` exactly, so ``ψ = S/|G|``
    reduced modulo 1 satisfies ``β(ψ) = C - δk`` for an integral ``k``.

    Raises:
        NotACocycleError: If *check* is ``True`` and *c4* isn't a cocycle.
        VerificationError: If ``δS != |G| C``.
    """
    if c4.ring != Ring.INTEGER or c4.degree != 4:
        raise RingMismatchError('expected an integral 4-cochain')
    if check and not c4.is_cocycle():
        raise NotACocycleError('inverse Bockstein of a 4-cochain that is not '
                               'a cocycle')
    order = c4.group.order
    s = average_first(c4)
    if coboundary(s) != order * c4:
        raise VerificationError('δ of the averaged cochain is not |G| times '
                                'the 4-cocycle')
    logger.debug('inverse Bockstein on %r computed', c4.group)
    return (s / order).to_qmodz()
