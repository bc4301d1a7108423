"""This module computes Dijkgraaf-Witten invariants

    ``DW_ψ(M) = Σ_f e(<f^* ψ, [M]>)``

over the homomorphisms ``f: π_1(M) -> G``, as elements of the group ring
``Z[Q/Z]`` (:class:`GroupRingElement`), and evaluates them a second way
through finite coverings (:func:`dw_via_covering`).
"""

import logging
import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from dwchern.cohomology.bockstein import bockstein_one
from dwchern.cohomology.chains import (
    NotACocycleError, Ring, RingMismatchError, VerificationError,
    check_homomorphism, cup, pair, pushforward_chain, qmodz, same_group)
from dwchern.cohomology.groups import (
    GroupHom, Subgroup, image_subgroup)
from dwchern.cohomology.transfer import restrict_cochain, transfer_cochain
from dwchern.cohomology.workers import run_sharded
from dwchern.topology.manifolds import covering_model, enumerate_homs


logger = logging.getLogger(__name__)


class GroupRingElement():
    """An element ``Σ n_a e(a)`` of ``Z[Q/Z]``.

    Keys are :class:`~fractions.Fraction` objects in ``[0, 1)`` and
    multiplicities are nonzero integers. Instances are immutable and
    hashable.
    """

    def __init__(self, terms=()):
        """Initialize a new :class:`GroupRingElement`.

        Args:
            terms: A mapping or an iterable of ``(value, multiplicity)``
                pairs. Values are reduced modulo 1 and repeated values are
                added together.
        """
        if hasattr(terms, 'items'):
            terms = terms.items()
        totals = Counter()
        for value, multiplicity in terms:
            totals[qmodz(value)] += int(multiplicity)
        self._terms = {a: n for a, n in sorted(totals.items()) if n}

    @classmethod
    def from_values(cls, values):
        """Return ``Σ e(a)`` over the values *a*."""
        return cls(Counter(qmodz(a) for a in values))

    @property
    def terms(self):
        """``(value, multiplicity)`` pairs in ascending order of value."""
        return list(self._terms.items())

    @property
    def total(self):
        """The sum of the multiplicities."""
        return sum(self._terms.values())

    def __getitem__(self, value):
        return self._terms.get(qmodz(value), 0)

    def __add__(self, other):
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        return GroupRingElement(self.terms + other.terms)

    def __neg__(self):
        return GroupRingElement((a, -n) for a, n in self.terms)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        """The group ring product ``e(a) e(b) = e(a + b)``, or scaling by an
        integer.
        """
        if isinstance(other, int):
            return GroupRingElement((a, other * n) for a, n in self.terms)
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        return GroupRingElement((a + b, n * k) for a, n in self.terms
                                for b, k in other.terms)

    __rmul__ = __mul__

    def negated(self):
        """Return ``Σ n_a e(-a)``, the value for the reversed orientation."""
        return GroupRingElement((-a, n) for a, n in self.terms)

    def __eq__(self, other):
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(tuple(self.terms))

    def to_json(self):
        """Return the canonical JSON form,
        ``{"terms":[["0/1",1],["1/3",2]]}``.
        """
        return {'terms': [[f'{a.numerator}/{a.denominator}', n]
                          for a, n in self.terms]}

    @classmethod
    def from_json(cls, data):
        """Inverse of :meth:`to_json`."""
        return cls((Fraction(a), n) for a, n in data['terms'])

    def __str__(self):
        """Return a rendering like ``1 + 2·e(1/3)``."""
        parts = []
        for a, n in self.terms:
            if a == 0:
                body = str(abs(n))
            elif abs(n) == 1:
                body = f'e({a})'
            else:
                body = f'{abs(n)}·e({a})'
            if not parts:
                parts.append(body if n > 0 else f'-{body}')
            else:
                parts.append(f'+ {body}' if n > 0 else f'- {body}')
        return ' '.join(parts) or '0'

    def __repr__(self):
        return f'GroupRingElement({self})'


def _check_cocycle(psi, group=None):
    if psi.ring != Ring.QMODZ:
        raise RingMismatchError(f'expected a Q/Z-valued cocycle, got '
                                f'{psi.ring_name}')
    if psi.degree != 3:
        raise ValueError(f'expected a 3-cocycle, got degree {psi.degree}')
    if group is not None and not same_group(psi.group, group):
        raise ValueError('the cocycle does not live on the gauge group')
    if not psi.is_cocycle():
        raise NotACocycleError('ψ is not a cocycle')


def hom_values(model, group, psi, homs=None, threads=1, check=True):
    """Return ``(f, <f^* ψ, [M]>)`` for every homomorphism ``f``.

    Args:
        model: A :class:`~dwchern.topology.manifolds.ManifoldModel`.
        group: The gauge group ``G``.
        psi: A ``Q/Z``-valued 3-cocycle on *group*.
        homs: The homomorphisms to sum over; all of them by default.
        threads: The number of worker threads.
        check: If ``True``, *psi* is checked to be a cocycle.
    """
    if check:
        _check_cocycle(psi, group)
    if homs is None:
        homs = enumerate_homs(model, group, threads)
    cycle = model.fundamental_cycle

    def evaluate(f):
        return pair(psi, pushforward_chain(f, cycle))

    values = run_sharded(evaluate, homs, threads)
    for f, value in zip(homs, values):
        logger.debug('%s -> %s', list(f.image), value)
    return list(zip(homs, values))


def dw_invariant(model, group, psi, homs=None, threads=1):
    """Return the Dijkgraaf-Witten invariant ``DW_ψ(M)``.

    The result doesn't depend on *threads*; passing *homs* restricts the
    sum to a family of homomorphisms.

    Raises:
        NotACocycleError: If *psi* isn't a cocycle.
        SizeBoundError: From the homomorphism search.
    """
    values = hom_values(model, group, psi, homs, threads)
    result = GroupRingElement.from_values(v for _, v in values)
    logger.info('DW of %s over %d homomorphisms to %r: %s', model.name,
                len(values), group, result)
    return result


def linking_pairing(model, f, phi1, phi2):
    """Return ``<f^*(φ_1 ⌣ βφ_2), [M]>`` for homomorphisms ``φ_1, φ_2:
    G -> Q/Z``.

    Raises:
        GroupError: If ``φ_1`` or ``φ_2`` isn't a homomorphism.
    """
    for phi in (phi1, phi2):
        check_homomorphism(phi)
        if not same_group(phi.group, f.target):
            raise ValueError('φ does not live on the target of f')
    return pair(cup(phi1, bockstein_one(phi2)),
                pushforward_chain(f, model.fundamental_cycle))


@dataclass(frozen=True)
class CoveringRecord():
    """Both sides of the covering identity for one homomorphism."""

    f: GroupHom
    lhs: Fraction
    """``m^2 <Tr ψ_H, f_*[M]>``."""

    rhs: Fraction
    """``m^2 <ψ_H, (f|)_*[M_{f,H}]>``."""

    sheets: int
    """The degree of the covering."""

    reduced: bool
    """``True`` if ``Im f · H != G`` and *lhs* was computed over ``Im f``
    (the identity then holds for ``Im f`` in place of ``G``).
    """


def _reduced_lhs(model, f, subgroup, psi_h):
    """Return ``<Tr ψ, f_*[M]>`` computed in ``K = Im f`` with ``H ∩ K``."""
    k = image_subgroup(f)
    inner = [g for g in subgroup.members if g in k]
    f_k = GroupHom(f.source, k.group, [k.local(f(g))
                                       for g in range(f.source.order)],
                   check=False)
    in_k = Subgroup(k.group, [k.local(g) for g in inner])
    in_h = Subgroup(subgroup.group, [subgroup.local(g) for g in inner])
    tr = transfer_cochain(in_k, restrict_cochain(in_h, psi_h))
    return pair(tr, pushforward_chain(f_k, model.fundamental_cycle))


def covering_records(model, group, subgroup, psi_h, m=1, homs=None,
                     threads=1, cap=None):
    """Return a :class:`CoveringRecord` for each homomorphism.

    Raises:
        ValueError: If *m* doesn't divide ``gcd(|H|, |G/H|)``.
        VerificationError: If the two sides differ for some ``f``.
    """
    if math.gcd(subgroup.order, subgroup.index) % m:
        raise ValueError(f'm = {m} does not divide gcd(|H|, |G/H|)')
    if not same_group(subgroup.parent, group):
        raise ValueError('H is not a subgroup of G')
    _check_cocycle(psi_h, subgroup.group)
    if homs is None:
        homs = enumerate_homs(model, group, threads)
    tr = transfer_cochain(subgroup, psi_h)
    scale = m * m

    def evaluate(f):
        cover = covering_model(model, f, subgroup, cap)
        rhs = qmodz(scale * pair(
            psi_h, pushforward_chain(cover.restricted_hom, cover.cover_cycle)))
        full = qmodz(scale * pair(
            tr, pushforward_chain(f, model.fundamental_cycle)))
        reduced = cover.degree != subgroup.index
        lhs = qmodz(scale * _reduced_lhs(model, f, subgroup, psi_h)) \
            if reduced else full
        if lhs != rhs:
            raise VerificationError(
                f'covering identity fails for f = {list(f.image)}: '
                f'{lhs} != {rhs}')
        return CoveringRecord(f, full, rhs, cover.degree, reduced)

    records = run_sharded(evaluate, homs, threads)
    logger.info('covering identity holds for %d homomorphisms (%d reduced)',
                len(records), sum(r.reduced for r in records))
    return records


def dw_via_covering(model, group, subgroup, psi_h, m=1, homs=None,
                    threads=1, cap=None):
    """Return ``DW_{m^2 Tr ψ_H}(M)``, checking the covering identity for
    every homomorphism on the way.

    See :func:`covering_records`.
    """
    records = covering_records(model, group, subgroup, psi_h, m, homs,
                               threads, cap)
    return GroupRingElement.from_values(r.lhs for r in records)
