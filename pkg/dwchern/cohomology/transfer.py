"""This module defines transfers (corestrictions) of cochains and chains
along a subgroup, restriction of cochains, and the degree-4 cocycle of the
multiplicative (Evens) norm of ``1 + c_1(φ)``.

All of them are computed by coset walks. For a subgroup ``H`` with
transversal ``g_0, ..., g_{d-1}`` and a tuple ``(σ_1, ..., σ_n)``, the walk
that starts from coset ``i`` sets ``t_0 = g_i`` and

    ``t_{k-1} σ_k = h_k t_k``

with ``h_k`` in ``H`` and ``t_k`` in the transversal. The tuple
``(h_1, ..., h_n)`` is the *strand* of the walk; the transfer of a cochain
sums the cochain over the ``d`` strands, and the transfer of a chain
replaces each tuple by its ``d`` strands. The two are adjoint:
``<Tr ψ, z> = <ψ, Tr z>``.
"""

import logging

import numpy as np

from dwchern.cohomology.chains import (
    INT64_BOUND, BarChain, NotACocycleError, NotACycleError,
    VerificationError, build, coboundary, pullback_cochain, same_group,
    wide_values)
from dwchern.cohomology.bockstein import bockstein_one


logger = logging.getLogger(__name__)


def _check_subgroup(subgroup, cochain):
    if not same_group(subgroup.group, cochain.group):
        raise ValueError('cochain does not live on the subgroup')


def _strands(subgroup, idx):
    """Yield the strands of the walks through *idx*, one per coset.

    Each strand is a list of index arrays into ``subgroup.group``.
    """
    next_coset, step = subgroup.walk
    for i in range(subgroup.index):
        t = i
        strand = []
        for s in idx:
            strand.append(step[t, s])
            t = next_coset[t, s]
        yield strand


def transfer_cochain(subgroup, psi):
    """Return the transfer ``Tr(ψ)`` of a cochain *psi* on
    ``subgroup.group`` to a cochain of the same degree on the parent group.

    The value at ``(σ_1, ..., σ_n)`` is the sum of ``ψ`` over the strands
    of the coset walks through the tuple. In degree 0 this is
    multiplication by the index.
    """
    _check_subgroup(subgroup, psi)
    parent = subgroup.parent
    bound = subgroup.index * psi.bound
    values = wide_values(psi, bound)
    dtype = np.int64 if bound < INT64_BOUND else object

    def func(*idx):
        shape = np.broadcast(*idx).shape if idx else ()
        total = np.zeros(shape, dtype=dtype)
        for strand in _strands(subgroup, idx):
            total = total + values(*strand)
        return total

    return build(parent, psi.degree, psi.ring, func,
                 denominator=psi.denominator, modulus=psi.modulus,
                 bound=bound)


def restrict_cochain(subgroup, c):
    """Return the restriction of a cochain *c* on the parent group to
    ``subgroup.group``.
    """
    return pullback_cochain(subgroup.inclusion, c)


def chain_transfer(subgroup, z, check=True):
    """Return the transfer of the chain *z* on the parent group to a chain
    on ``subgroup.group``.

    Every term ``c[σ_1|...|σ_n]`` contributes ``c[h_1|...|h_n]`` for each
    strand. The transfer of a cycle is a cycle whose image in the parent
    group is homologous to ``index * z``.

    Raises:
        NotACycleError: If *check* is ``True`` and *z* isn't a cycle.
    """
    if not same_group(subgroup.parent, z.group):
        raise ValueError('chain does not live on the parent group')
    if check and z.degree > 0 and not z.is_cycle():
        raise NotACycleError('transfer of a chain that is not a cycle')
    if not z.terms:
        return BarChain(subgroup.group, z.degree)
    tuples = np.array([t for _, t in z.terms], dtype=np.int64)
    tuples = tuples.reshape(len(z.terms), z.degree)
    coefficients = [c for c, _ in z.terms]
    terms = []
    for strand in _strands(subgroup, tuple(tuples.T)):
        rows = np.stack(strand, axis=1) if strand \
            else np.zeros((len(coefficients), 0), dtype=np.int64)
        terms.extend(zip(coefficients, map(tuple, rows)))
    return BarChain(subgroup.group, z.degree, terms)


def norm_sum(coordinates, c1):
    """Return the four-fold norm sum in wreath product coordinates.

    Args:
        coordinates: Four pairs ``(vectors, perms)``, one per argument. In
            each pair, ``vectors[i]`` and ``perms[i]`` are index arrays
            holding the ``i``:th base coordinate and the image of ``i``
            under the permutation of the argument.
        c1: An integral 2-cochain on the base group.

    Returns:
        ``Σ c1(v_1[i], v_2[p_1 i]) c1(v_3[j], v_4[p_3 j])`` over the pairs
        ``(i, j)`` with ``j != p_2 p_1 i``, i.e. the pairs whose two
        factors sit on different coordinates once both are read in the frame
        of the third argument.
    """
    (v1, p1), (v2, p2), (v3, p3), (v4, p4) = coordinates
    d = len(v1)
    lefts = []
    ends = []
    for i in range(d):
        q = p1[i]
        lefts.append(c1.values(v1[i], _pick(v2, q)))
        ends.append(_pick(p2, q))
    total = 0
    for j in range(d):
        right = c1.values(v3[j], _pick(v4, p3[j]))
        for i in range(d):
            total = total + np.where(ends[i] != j, lefts[i] * right, 0)
    return total


def _pick(arrays, which):
    """Return ``arrays[which]`` elementwise for an index array *which*."""
    stacked = np.stack(np.broadcast_arrays(*arrays))
    which = np.broadcast_to(which, stacked.shape[1:])
    return np.take_along_axis(stacked, which[None], axis=0)[0]


def evens_norm_four_cocycle(subgroup, phi, check=True):
    """Return the integral 4-cocycle on the parent group that represents
    the norm sum of ``c_1(φ)`` pulled back along the monomial
    representation.

    With ``x = β(φ)`` the result equals ``Tr(x) ⌣ Tr(x) - Tr(x ⌣ x)``
    pointwise. The monomial representation maps ``σ`` to the wreath element
    with base coordinates ``step[i, σ]`` and permutation
    ``i -> next_coset[i, σ]``, so the norm sum is evaluated directly on
    those coordinates.

    Raises:
        NotACocycleError: If *check* is ``True`` and *phi* isn't a
            homomorphism, or the result isn't a cocycle.
    """
    _check_subgroup(subgroup, phi)
    if check and not phi.is_cocycle():
        raise NotACocycleError('φ is not a homomorphism')
    c1 = bockstein_one(phi)
    next_coset, step = subgroup.walk
    d = subgroup.index

    def func(*idx):
        coordinates = [([step[i, s] for i in range(d)],
                        [next_coset[i, s] for i in range(d)]) for s in idx]
        total = norm_sum(coordinates, c1)
        return np.broadcast_to(total, np.broadcast(*idx).shape)

    result = build(subgroup.parent, 4, c1.ring, func, bound=d * d)
    if check and not result.is_cocycle():
        raise VerificationError('norm sum is not a 4-cocycle')
    logger.debug('norm cocycle of index %d computed on %r', d,
                 subgroup.parent)
    return result


def check_chain_map(subgroup, psi):
    """Raise :class:`VerificationError` unless ``δ Tr(ψ) = Tr(δψ)``."""
    if coboundary(transfer_cochain(subgroup, psi)) \
            != transfer_cochain(subgroup, coboundary(psi)):
        raise VerificationError('transfer does not commute with δ')
