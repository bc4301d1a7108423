"""This module checks whether a small group is of type ``C_m``.

A group ``G`` is of type ``C_m`` for witnesses ``(H_i, φ_i)`` if

    (i) ``m H^4(G; Z)`` lies in the subgroup generated by the Chern classes
        ``c_2(Ind φ_i)`` and the products ``c_1(Ind φ_i) c_1(Ind φ_j)``,
        and
    (ii) for each ``i``, ``m`` is a multiple of ``gcd(|H_i|, |G/H_i|)`` and
         some ``κ_i`` in ``H^3(G; Q/Z)`` restricts to ``m φ_i ⌣ βφ_i``.

Everything is computed in ``H^3(G; Q/Z) ≅ H^4(G; Z)`` through the
coordinates of :class:`~dwchern.cohomology.homology.HomologyGroup`.

Condition (i) is decided one prime at a time. The library knows
``12 β^-1 c_2`` exactly, ``2 β^-1 c_2`` for subgroups of index at most 2,
the odd part of ``β^-1 c_2`` for odd subgroups of index 2, and the
products of first Chern classes exactly. A prime ``p`` gets the verdict
``VERIFIED`` if the known elements already span ``m`` times the
``p``-part, ``FAILED`` if they don't and every ``c_2`` is known exactly at
``p``, and ``INDETERMINATE`` otherwise.
"""

import enum as e
import itertools
import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction

import sympy

from dwchern.cohomology.bockstein import bockstein_one
from dwchern.cohomology.chains import (
    Cochain, VerificationError, character, cup)
from dwchern.cohomology.chern import (
    InducedRepSpec, c1c1_cocycle, dihedral_c2_class, twelve_c2_cocycle,
    two_c2_evens)
from dwchern.cohomology.groups import (
    SizeBoundError, Subgroup, cyclic_generator, generated_elements,
    sylow_subgroup)
from dwchern.cohomology.homology import (
    HomologyGroup, homology_group, is_coboundary, lens_homology,
    smith_normal_form, solve_lattice)
from dwchern.cohomology.transfer import restrict_cochain
from dwchern.cohomology.workers import run_sharded


logger = logging.getLogger(__name__)


MAX_SEARCH = 10**4
"""The largest ``|H^3(G; Q/Z)|`` for which ``κ`` is searched for."""


class Verdict(e.Enum):
    """The outcome of a check.

    ================= =================== ================================
    Member name       Value               Description
    ================= =================== ================================
    ``VERIFIED``      ``'verified'``      ``'The condition holds'``
    ``FAILED``        ``'failed'``        ``'The condition does not hold'``
    ``INDETERMINATE`` ``'indeterminate'`` ``'Not decidable from the known
                                          multiples'``
    ================= =================== ================================
    """

    def __new__(cls, value, description):
        obj = object.__new__(cls)
        obj._value_ = value
        obj.description = description
        return obj

    def __repr__(self):
        return str(self)

#   Name              Value            Description
    VERIFIED      = ('verified',      'The condition holds')
    FAILED        = ('failed',        'The condition does not hold')
    INDETERMINATE = ('indeterminate', 'Not decidable from the known '
                                      'multiples')


def combine(verdicts):
    """Return the verdict of a conjunction."""
    verdicts = list(verdicts)
    if Verdict.FAILED in verdicts:
        return Verdict.FAILED
    if Verdict.INDETERMINATE in verdicts:
        return Verdict.INDETERMINATE
    return Verdict.VERIFIED


@dataclass
class Witness():
    """Condition (ii) for one ``(H_i, φ_i)``."""

    spec: InducedRepSpec
    gcd: int
    """``gcd(|H_i|, |G/H_i|)``."""

    kappa: Cochain = None
    """A class restricting to ``m φ_i ⌣ βφ_i``, or ``None`` if none
    exists.
    """

    coordinates: tuple = ()
    """The coordinates of :attr:`kappa` in ``H^3(G; Q/Z)``."""


@dataclass
class CmCertificate():
    """The result of :func:`cm_check`."""

    group: object
    m: int
    candidates: list = field(repr=False)
    condition_one: dict
    """Prime -> :class:`Verdict` for condition (i)."""

    witnesses: list
    """:class:`Witness` objects for condition (ii)."""

    report: list = field(default_factory=list, repr=False)
    """Human-readable lines describing the checks."""

    @property
    def condition_two(self):
        if all(w.kappa is not None and self.m % w.gcd == 0
               for w in self.witnesses):
            return Verdict.VERIFIED
        return Verdict.FAILED

    @property
    def verdict(self):
        """The combined :class:`Verdict` of both conditions."""
        return combine(list(self.condition_one.values())
                       + [self.condition_two])

    def to_json(self):
        return {
            'group': getattr(self.group, 'name', ''),
            'order': self.group.order,
            'm': self.m,
            'verdict': self.verdict.value,
            'condition_one': {str(p): v.value
                              for p, v in self.condition_one.items()},
            'witnesses': [{
                'subgroup': list(w.spec.subgroup.members),
                'phi': [str(w.spec.phi(h)) for h in
                        range(w.spec.subgroup.order)],
                'gcd': w.gcd,
                'kappa': list(w.coordinates) if w.kappa is not None
                else None,
            } for w in self.witnesses],
            'report': self.report,
        }


def theorem_multiplier(m):
    """Return ``m' = lcm(12, m^2)``."""
    return math.lcm(12, m * m)


def _known_multiples(specs):
    """Yield ``(k, cocycle, primes, spec)``: ``cocycle`` represents ``k``
    times a class of the span; *primes* is ``None`` if this holds at every
    prime, else a predicate on the primes where it does. *spec* is the
    witness whose ``c_2`` the element comes from, or ``None`` for products
    of first Chern classes.
    """
    for spec in specs:
        yield 12, twelve_c2_cocycle(spec), None, spec
        if spec.subgroup.index <= 2:
            yield 2, two_c2_evens(spec), None, spec
        if spec.subgroup.index == 2 and spec.subgroup.order % 2:
            yield 1, dihedral_c2_class(spec), (lambda p: p % 2 == 1), spec
    for a, b in itertools.combinations_with_replacement(specs, 2):
        yield 1, c1c1_cocycle(a, b), None, None


def _p_part(coordinates, divisors, p):
    """Return the ``p``-primary components and their orders."""
    orders = [p**sympy.multiplicity(p, d) for d in divisors]
    return [a % q for a, q in zip(coordinates, orders)], orders


def condition_one(group, m, specs, cap=None, homology=None, report=None):
    """Return prime -> :class:`Verdict` for condition (i)."""
    homology = homology or homology_group(group, 3, cap)
    divisors = homology.divisors
    report = [] if report is None else report
    order = homology.order
    if order == 1:
        report.append('H^3(G; Q/Z) = 0')
        return {}

    multiples = [(k, homology.cohomology_coordinates(c), primes, spec)
                 for k, c, primes, spec in _known_multiples(specs)]
    verdicts = {}
    for p in sympy.primefactors(order):
        _, orders = _p_part([0] * len(divisors), divisors, p)
        span = []
        exact = set()
        for k, coordinates, primes, spec in multiples:
            if primes is not None and not primes(p):
                continue
            vector, _ = _p_part(coordinates, divisors, p)
            span.append(vector)
            if k % p and spec is not None:
                exact.add(id(spec))
        relations = [[q if i == j else 0 for i in range(len(orders))]
                     for j, q in enumerate(orders)]
        contained = all(
            solve_lattice(span + relations,
                          [m if i == j else 0 for i in range(len(orders))])
            is not None
            for j, q in enumerate(orders) if q > 1)
        if contained:
            verdicts[p] = Verdict.VERIFIED
        elif all(id(spec) in exact for spec in specs):
            verdicts[p] = Verdict.FAILED
        else:
            verdicts[p] = Verdict.INDETERMINATE
        report.append(f'condition (i) at p = {p}: {verdicts[p].value} '
                      f'({len(span)} known elements, p-part orders '
                      f'{[q for q in orders if q > 1]})')
    return verdicts


def subgroup_homology(subgroup, cap=None):
    """Return ``H_3`` of ``subgroup.group``, without a Smith normal form if
    it is cyclic.
    """
    group = subgroup.group
    g = cyclic_generator(group)
    if g is not None:
        return lens_homology(group, g)
    return homology_group(group, 3, cap)


def restriction_matrix(homology, subgroup, sub_homology):
    """Return the coordinates in ``H^3(H)`` of the restrictions of the dual
    cocycles of ``H^3(G)``.
    """
    return [sub_homology.cohomology_coordinates(
                restrict_cochain(subgroup, dual))
            for dual in homology.duals]


def find_kappa(homology, spec, m, cap=None):
    """Search ``H^3(G; Q/Z)`` for a class restricting to ``m φ ⌣ βφ``.

    Returns:
        ``(kappa, coordinates)`` or ``(None, ())``.

    Raises:
        SizeBoundError: If ``|H^3(G)|`` exceeds :const:`MAX_SEARCH`.
    """
    if homology.order > MAX_SEARCH:
        raise SizeBoundError(f'|H^3| = {homology.order} > {MAX_SEARCH}')
    sub = subgroup_homology(spec.subgroup, cap)
    images = restriction_matrix(homology, spec.subgroup, sub)
    target = sub.cohomology_coordinates(
        m * cup(spec.phi, bockstein_one(spec.phi)))
    for coordinates in itertools.product(*(range(d) for d in
                                           homology.divisors)):
        image = [sum(a * row[i] for a, row in zip(coordinates, images)) % e
                 for i, e in enumerate(sub.divisors)]
        if tuple(image) == tuple(target):
            return homology.cocycle(coordinates), coordinates
    return None, ()


def cm_check(group, m, candidates, cap=None, threads=1):
    """Check whether *group* is of type ``C_m`` with the witnesses
    *candidates*.

    Args:
        group: A :class:`~dwchern.cohomology.groups.FiniteGroup`.
        m: A positive integer.
        candidates: :class:`~dwchern.cohomology.chern.InducedRepSpec`
            objects.
        cap: The Smith normal form order cap.
        threads: The number of threads searching for the ``κ`` of
            different candidates.

    Returns:
        A :class:`CmCertificate`; its :attr:`~CmCertificate.verdict` tells
        whether it is a certificate or a failure report.
    """
    if m < 1:
        raise ValueError(f'm must be positive, got {m}')
    candidates = list(candidates)
    homology = homology_group(group, 3, cap)
    report = [f'H^3({group.name or "G"}; Q/Z) = '
              + (' + '.join(f'Z/{d}' for d in homology.divisors) or '0')]
    verdicts = condition_one(group, m, candidates, cap, homology, report)
    found = run_sharded(lambda spec: find_kappa(homology, spec, m, cap),
                        candidates, threads)
    witnesses = []
    for spec, (kappa, coordinates) in zip(candidates, found):
        h = spec.subgroup
        witness = Witness(spec, math.gcd(h.order, h.index), kappa,
                          coordinates)
        witnesses.append(witness)
        report.append(f'condition (ii) for |H| = {h.order}: gcd '
                      f'{witness.gcd}, kappa '
                      f'{"found" if kappa is not None else "not found"} '
                      f'{list(coordinates)}')
    certificate = CmCertificate(group, m, candidates, verdicts, witnesses,
                                report)
    logger.info('C_%d check of %r: %s', m, group, certificate.verdict.value)
    return certificate


def revalidate(certificate, cap=None):
    """Re-check every field of *certificate* from scratch.

    Raises:
        VerificationError: If a stored field doesn't hold.
    """
    m = certificate.m
    for w in certificate.witnesses:
        if w.kappa is None:
            continue
        restricted = restrict_cochain(w.spec.subgroup, w.kappa)
        target = m * cup(w.spec.phi, bockstein_one(w.spec.phi))
        if not is_coboundary(restricted - target, cap)[0]:
            raise VerificationError('κ does not restrict to m φ ⌣ βφ')
        if not w.kappa.is_cocycle():
            raise VerificationError('κ is not a cocycle')
        h = w.spec.subgroup
        if w.gcd != math.gcd(h.order, h.index):
            raise VerificationError('stored gcd is wrong')
    verdicts = condition_one(certificate.group, m, certificate.candidates,
                             cap)
    if verdicts != certificate.condition_one:
        raise VerificationError('condition (i) verdicts changed')
    return True


def scale_certificate(certificate, k, cap=None):
    """Return the certificate for ``m k`` obtained by multiplying every
    ``κ`` by *k*.
    """
    homology = homology_group(certificate.group, 3, cap)
    witnesses = []
    for w in certificate.witnesses:
        if w.kappa is None:
            witnesses.append(Witness(w.spec, w.gcd))
            continue
        coordinates = tuple(k * a % d for a, d in
                            zip(w.coordinates, homology.divisors))
        witnesses.append(Witness(w.spec, w.gcd, k * w.kappa, coordinates))
    m = certificate.m * k
    verdicts = condition_one(certificate.group, m, certificate.candidates,
                             cap, homology)
    return CmCertificate(certificate.group, m, certificate.candidates,
                         verdicts, witnesses,
                         certificate.report + [f'scaled by {k}'])


### Sylow reduction ###

def default_candidates(group):
    """Return cyclic witnesses for *group*: the group itself if it is
    cyclic, else the first cyclic subgroup of index 2, else nothing.
    """
    g = cyclic_generator(group)
    if g is not None:
        subgroup = Subgroup(group, range(group.order))
        phi = character(group, [g], [Fraction(1, group.order)])
        return [InducedRepSpec(subgroup, phi)]
    for g in range(group.order):
        if 2 * group.element_order(g) == group.order:
            subgroup = Subgroup(group, generated_elements(group, [g]))
            local = subgroup.local(g)
            phi = character(subgroup.group, [local],
                            [Fraction(1, subgroup.order)])
            return [InducedRepSpec(subgroup, phi)]
    return []


@dataclass
class SylowReport():
    """The result of :func:`sylow_reduction`."""

    group: object
    m: int
    surjective: dict
    """Prime -> ``True`` if restriction to the Sylow subgroup is onto its
    ``H^3``.
    """

    certificates: dict
    """Prime -> :class:`CmCertificate` of the Sylow subgroup."""

    @property
    def verdict(self):
        if not all(self.surjective.values()):
            return Verdict.INDETERMINATE
        return combine(c.verdict for c in self.certificates.values())

    def to_json(self):
        return {
            'group': getattr(self.group, 'name', ''),
            'm': self.m,
            'verdict': self.verdict.value,
            'primes': {str(p): {
                'surjective': self.surjective[p],
                'sylow': self.certificates[p].to_json(),
            } for p in self.surjective},
        }


def is_surjective(images, divisors):
    """Return ``True`` if the vectors *images* generate ``⊕ Z/divisors``."""
    divisors = [d for d in divisors]
    if not divisors:
        return True
    columns = [list(v) for v in images]
    columns += [[d if i == j else 0 for i in range(len(divisors))]
                for j, d in enumerate(divisors)]
    matrix = [list(row) for row in zip(*columns)]
    snf = smith_normal_form(matrix, track_columns=False)
    return snf.rank == len(divisors) and all(d == 1 for d in snf.divisors)


def sylow_reduction(group, m=1, candidates=None, cap=None, threads=1):
    """Apply the Sylow reduction to *group*.

    For each prime ``p`` dividing ``|G|``, the restriction of ``H^3(G)`` to
    a Sylow ``p``-subgroup ``P`` is tested for surjectivity and ``P`` is
    checked for type ``C_m``.

    Args:
        candidates: A :class:`dict` from primes to witness lists for the
            Sylow subgroups; primes without an entry use
            :func:`default_candidates`.
        threads: Passed on to :func:`cm_check`.
    """
    candidates = candidates or {}
    homology = homology_group(group, 3, cap)
    surjective = {}
    certificates = {}
    for p in sympy.primefactors(group.order):
        sylow = sylow_subgroup(group, p)
        sub = subgroup_homology(sylow, cap)
        images = restriction_matrix(homology, sylow, sub)
        surjective[p] = is_surjective(images, sub.divisors)
        specs = candidates.get(p, default_candidates(sylow.group))
        certificates[p] = cm_check(sylow.group, m, specs, cap, threads)
        logger.info('Sylow %d-subgroup of %r: restriction %s, %s', p, group,
                    'onto' if surjective[p] else 'not onto',
                    certificates[p].verdict.value)
    return SylowReport(group, m, surjective, certificates)
