"""This module builds ``Q/Z``-valued 3-cocycles whose classes are
(multiples of) ``β^-1`` of Chern classes of induced representations.

A one-dimensional representation of a subgroup ``H`` is given by a
homomorphism ``φ: H -> Q/Z`` (an :class:`InducedRepSpec`); its Chern class
is ``c_1(φ) = β(φ)``. Two routes lead to ``12 β^-1 c_2(Ind φ)``:

    * :func:`twelve_c2_cocycle`, from the integral Riemann-Roch theorem:
      ``6 (Tr φ ⌣ β(Tr φ) - Tr(φ ⌣ βφ))``;
    * :func:`twelve_c2_evens`, from the multiplicative transfer of
      ``1 + c_1(φ)`` and the permutation representation ``π = Ind 1``.

The first Chern class of ``π`` is ``β(ε)`` for the sign ``ε`` of the
coset permutation (:func:`sign_character`), and ``12 c_2(π) = 0``, which
is why the second route only reaches the 12-multiple in general.
"""

import logging
from dataclasses import dataclass

from dwchern.cohomology.bockstein import bockstein_inverse_four, bockstein_one
from dwchern.cohomology.chains import (
    Cochain, NotACocycleError, Ring, VerificationError, cup, same_group)
from dwchern.cohomology.groups import (
    coset_permutation, permutation_sign)
from dwchern.cohomology.homology import is_coboundary
from dwchern.cohomology.transfer import (
    evens_norm_four_cocycle, transfer_cochain)


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class InducedRepSpec():
    """The representation ``Ind_H^G φ`` induced from a one-dimensional
    representation of a subgroup.
    """

    subgroup: object
    """The :class:`~dwchern.cohomology.groups.Subgroup` ``H``."""

    phi: Cochain
    """A homomorphism ``H -> Q/Z`` as a 1-cocycle on ``subgroup.group``."""

    def __post_init__(self):
        phi = self.phi
        if not same_group(phi.group, self.subgroup.group):
            raise ValueError('φ does not live on the subgroup')
        if phi.degree != 1 or phi.ring != Ring.QMODZ:
            raise ValueError('φ must be a Q/Z-valued 1-cochain')
        if not phi.is_cocycle():
            raise ValueError('φ is not a homomorphism')

    @property
    def group(self):
        """The ambient group ``G``."""
        return self.subgroup.parent

    @property
    def dimension(self):
        """The dimension of the induced representation, ``|G/H|``."""
        return self.subgroup.index


@dataclass(frozen=True)
class VirtualBrauerRep():
    """A virtual representation ``Σ n_i Ind(φ_i)`` of a group."""

    terms: tuple
    """``(n_i, spec_i)`` pairs with integer ``n_i`` and
    :class:`InducedRepSpec` ``spec_i``.
    """

    def __post_init__(self):
        terms = tuple((int(n), spec) for n, spec in self.terms)
        if not terms:
            raise ValueError('a virtual representation needs a term')
        group = terms[0][1].group
        if not all(same_group(spec.group, group) for _, spec in terms):
            raise ValueError('terms live on different groups')
        object.__setattr__(self, 'terms', terms)

    @property
    def group(self):
        return self.terms[0][1].group


def _verified(c, what):
    if not c.is_cocycle():
        raise NotACocycleError(f'{what} is not a cocycle')
    return c


def _linking(phi):
    """``φ ⌣ βφ``."""
    return cup(phi, bockstein_one(phi))


def twelve_c2_cocycle(spec):
    """Return ``6 (Tr φ ⌣ β(Tr φ) - Tr(φ ⌣ βφ))``, a cocycle whose class
    is ``12 β^-1 c_2(Ind φ)``.
    """
    tr = transfer_cochain(spec.subgroup, spec.phi)
    c = 6 * (cup(tr, bockstein_one(tr))
             - transfer_cochain(spec.subgroup, _linking(spec.phi)))
    return _verified(c, '12 c_2 cocycle')


def two_c1c1_cocycle(spec, spec2):
    """Return ``2 Tr φ ⌣ β(Tr φ')``, a cocycle whose class is
    ``2 β^-1(c_1(Ind φ) c_1(Ind φ'))``.
    """
    if not same_group(spec.group, spec2.group):
        raise ValueError('representations of different groups')
    tr = transfer_cochain(spec.subgroup, spec.phi)
    tr2 = transfer_cochain(spec2.subgroup, spec2.phi)
    return _verified(2 * cup(tr, bockstein_one(tr2)), '2 c_1 c_1 cocycle')


def twelve_c2_virtual(rep):
    """Return ``6 Σ_k n_k ((Σ_j n_j Tr φ_j) ⌣ β(Tr φ_k) - Tr(φ_k ⌣
    βφ_k))``, a cocycle whose class is ``12 β^-1 c_2(ρ)`` for the virtual
    representation ``ρ = Σ n_i Ind φ_i``.
    """
    transfers = [transfer_cochain(spec.subgroup, spec.phi)
                 for _, spec in rep.terms]
    total_tr = sum((n * tr for (n, _), tr in zip(rep.terms, transfers)),
                   start=0 * transfers[0])
    total = None
    for (n, spec), tr in zip(rep.terms, transfers):
        term = n * (cup(total_tr, bockstein_one(tr))
                    - transfer_cochain(spec.subgroup, _linking(spec.phi)))
        total = term if total is None else total + term
    return _verified(6 * total, '12 c_2 cocycle of a virtual representation')


def sign_character(subgroup):
    """Return ``ε: G -> Q/Z``, ``1/2`` on elements that permute the cosets
    of *subgroup* oddly and ``0`` otherwise.
    """
    parent = subgroup.parent
    table = [int(permutation_sign(coset_permutation(subgroup, g)) == -1)
             for g in range(parent.order)]
    return Cochain(parent, 1, Ring.QMODZ, table, denominator=2)


def first_chern_cocycle(spec):
    """Return ``Tr φ + ε``, a 1-cocycle with ``β(Tr φ + ε) = c_1(Ind φ)``.
    """
    return transfer_cochain(spec.subgroup, spec.phi) \
        + sign_character(spec.subgroup)


def c1c1_cocycle(spec, spec2):
    """Return ``(Tr φ + ε) ⌣ β(Tr φ' + ε')``, a cocycle whose class is
    ``β^-1(c_1(Ind φ) c_1(Ind φ'))``.
    """
    if not same_group(spec.group, spec2.group):
        raise ValueError('representations of different groups')
    return cup(first_chern_cocycle(spec),
               bockstein_one(first_chern_cocycle(spec2)))


def _evens_terms(spec):
    """Return the norm sum and ``β(ε) ⌣ Tr(βφ)`` as integral 4-cocycles."""
    norm = evens_norm_four_cocycle(spec.subgroup, spec.phi)
    correction = cup(bockstein_one(sign_character(spec.subgroup)),
                     transfer_cochain(spec.subgroup,
                                      bockstein_one(spec.phi)))
    return norm, correction


def twelve_c2_evens(spec):
    """Return a cocycle whose class is ``12 β^-1 c_2(Ind φ)``, computed
    from the multiplicative transfer.

    The norm sum of :func:`~dwchern.cohomology.transfer.evens_norm_four_cocycle`
    runs over ordered pairs of cosets and so represents twice the degree-4
    part of the norm of ``1 + c_1(φ)``. With ``12 c_2(π) = 0`` this gives
    ``6 β^-1(norm sum) + 12 β^-1(β(ε) ⌣ Tr(βφ))``.

    Raises:
        VerificationError: From the inverse Bockstein.
    """
    norm, correction = _evens_terms(spec)
    c = 6 * bockstein_inverse_four(norm) \
        + 12 * bockstein_inverse_four(correction)
    return _verified(c, 'Evens 12 c_2 cocycle')


def two_c2_evens(spec):
    """Return a cocycle whose class is ``2 β^-1 c_2(Ind φ)`` for a
    subgroup of index at most 2.

    For such subgroups ``π = 1 ⊕ ε`` has ``c_2(π) = 0``, so
    ``β^-1(norm sum) + 2 β^-1(β(ε) ⌣ Tr(βφ))`` is exact.

    Raises:
        ValueError: If the index is larger than 2.
    """
    if spec.subgroup.index > 2:
        raise ValueError(f'index {spec.subgroup.index} > 2')
    norm, correction = _evens_terms(spec)
    c = bockstein_inverse_four(norm) + 2 * bockstein_inverse_four(correction)
    return _verified(c, 'Evens 2 c_2 cocycle')


def dihedral_c2_class(spec):
    """Return ``-2^-1 Tr(φ ⌣ βφ)`` (the inverse of 2 taken modulo
    ``|H|``) for a subgroup ``H`` of odd order and index 2.

    Its restriction to ``H`` is ``-φ ⌣ βφ = β^-1 c_2(φ ⊕ φ^-1)``, so it
    is ``β^-1 c_2(Ind φ)`` on the odd part, where dividing the 12-multiple
    isn't possible when 3 divides ``|H|``.

    Raises:
        ValueError: If the index isn't 2 or ``|H|`` is even.
    """
    h = spec.subgroup
    if h.index != 2 or h.order % 2 == 0:
        raise ValueError('expected a subgroup of odd order and index 2')
    tr = transfer_cochain(h, _linking(spec.phi))
    return _verified((h.order - 1) // 2 * tr, 'dihedral c_2 cocycle')


def divide_class(c, k, order, check=True, cap=None):
    """Return ``u c`` with ``u k ≡ 1 (mod order)``.

    If the class of *c* has order dividing *order*, the class of the result
    is the unique class ``x`` of such order with ``k x = [c]``.

    Raises:
        ValueError: If ``gcd(k, order) != 1``.
        VerificationError: If *check* is ``True`` and ``order c`` isn't a
            coboundary.
    """
    try:
        u = pow(k, -1, order)
    except ValueError as error:
        raise ValueError(f'{k} is not invertible modulo {order}') from error
    if check and not is_coboundary(order * c, cap)[0]:
        raise VerificationError(f'class is not annihilated by {order}')
    logger.debug('dividing a class by %d modulo %d: multiplier %d',
                 k, order, u)
    return u * c
