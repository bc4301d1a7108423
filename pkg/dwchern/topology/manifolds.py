"""This module models closed 3-manifolds by a finite presentation of the
fundamental group, a finite quotient ``Γ`` and a fundamental 3-cycle in
the bar complex of ``Γ``.

For the spherical space forms used here ``Γ`` is the fundamental group
itself, so the homomorphisms ``π_1(M) -> G`` are exactly those out of
``Γ``. Words in a :class:`Presentation` are tuples of signed generator
numbers starting from ``1``: ``(1, 1, -2)`` is ``x_1 x_1 x_2^-1``.

..
    Aliases for Sphinx.

.. |MAX_GENERATORS| replace:: :const:`MAX_GENERATORS`
.. |MAX_TARGET_ORDER| replace:: :const:`MAX_TARGET_ORDER`
"""

import dataclasses
import itertools
import logging
import math
from dataclasses import dataclass

from dwchern.cohomology.chains import (
    BarChain, NotACycleError, VerificationError, pushforward_chain,
    same_group)
from dwchern.cohomology.groups import (
    GroupError, GroupHom, SizeBoundError, Subgroup, cyclic_generator,
    generated_elements, hom_from_generators, make_cyclic, make_quaternion,
    preimage_subgroup)
from dwchern.cohomology.homology import (
    effective_cap, homology_group, lens_cycle, lens_homology)
from dwchern.cohomology.transfer import chain_transfer
from dwchern.cohomology.workers import run_sharded


logger = logging.getLogger(__name__)


MAX_GENERATORS = 4
"""The largest number of generators :func:`enumerate_homs` accepts."""

MAX_TARGET_ORDER = 360
"""The largest target group order :func:`enumerate_homs` accepts."""


def free_reduce(word):
    """Cancel adjacent ``x x^-1`` pairs in *word*."""
    stack = []
    for letter in word:
        if stack and stack[-1] == -letter:
            stack.pop()
        else:
            stack.append(letter)
    return tuple(stack)


@dataclass(frozen=True)
class Presentation():
    """A finite presentation ``<x_1, ..., x_k | r_1, ..., r_l>``."""

    generators: int
    relators: tuple = ()

    def __post_init__(self):
        if self.generators < 0:
            raise ValueError(f'negative generator count {self.generators}')
        relators = []
        for word in self.relators:
            word = tuple(int(x) for x in word)
            if any(x == 0 or abs(x) > self.generators for x in word):
                raise ValueError(f'relator {word} uses an unknown generator')
            relators.append(free_reduce(word))
        object.__setattr__(self, 'relators', tuple(relators))

    def evaluate(self, group, images, word):
        """Return the element of *group* that *word* maps to when ``x_i``
        maps to ``images[i - 1]``.
        """
        result = group.identity
        for letter in word:
            g = images[abs(letter) - 1]
            if letter < 0:
                g = group.inverse(g)
            result = group.multiply(result, g)
        return result

    def satisfied(self, group, images):
        """Return ``True`` if *images* kill every relator."""
        return all(self.evaluate(group, images, r) == group.identity
                   for r in self.relators)

    def to_json(self):
        return {'generators': self.generators,
                'relators': [list(r) for r in self.relators]}


@dataclass(frozen=True)
class ManifoldModel():
    """A closed oriented 3-manifold modelled by a finite quotient of its
    fundamental group.
    """

    name: str
    presentation: Presentation
    quotient: object
    """The finite group ``Γ``."""

    images: tuple
    """The images of the generators in ``Γ``."""

    fundamental_cycle: BarChain
    """A 3-cycle on ``Γ`` representing the image of ``[M]``."""

    orientation: int = 1
    """``1`` or ``-1``; :meth:`reversed` flips it together with the
    cycle.
    """

    def __post_init__(self):
        object.__setattr__(self, 'images',
                           tuple(int(g) for g in self.images))
        if len(self.images) != self.presentation.generators:
            raise ValueError(f'{len(self.images)} images for '
                             f'{self.presentation.generators} generators')
        if not self.presentation.satisfied(self.quotient, self.images):
            raise GroupError('generator images do not satisfy the relators')
        if len(generated_elements(self.quotient, self.images)) \
                != self.quotient.order:
            raise GroupError('generator images do not generate the quotient')
        cycle = self.fundamental_cycle
        if not same_group(cycle.group, self.quotient) or cycle.degree != 3:
            raise ValueError('the fundamental cycle must be a 3-chain on the '
                             'quotient')
        if not cycle.is_cycle():
            raise NotACycleError('the fundamental chain is not a cycle')
        if self.orientation not in (1, -1):
            raise ValueError(f'orientation must be 1 or -1, got '
                             f'{self.orientation}')

    def reversed(self):
        """Return the same manifold with the opposite orientation."""
        name = self.name[1:] if self.name.startswith('-') \
            else '-' + self.name
        return dataclasses.replace(
            self, name=name, fundamental_cycle=-self.fundamental_cycle,
            orientation=-self.orientation)

    def __repr__(self):
        return f'ManifoldModel({self.name!r}, |Γ| = {self.quotient.order})'


### Space forms ###

def lens_space(n, q=1):
    """Return the lens space ``L(n, q)``.

    ``Γ = Z/n`` with generator ``1``, and the fundamental cycle is
    ``q Σ_i [1 | i | 1]``. With this convention the identity pairs with
    ``φ ⌣ βφ``, ``φ(k) = k/n``, to ``q/n``.

    Raises:
        ValueError: If ``n < 1`` or ``gcd(q, n) != 1``.
    """
    if n < 1:
        raise ValueError(f'n must be positive, got {n}')
    if math.gcd(q, n) != 1:
        raise ValueError(f'gcd({q}, {n}) != 1')
    group = make_cyclic(n)
    g = 1 % n
    presentation = Presentation(1, [(1,) * n])
    return ManifoldModel(f'L({n},{q})', presentation, group, (g,),
                         lens_cycle(group, g, q))


def _is_lens_generator(subgroup, generator, z):
    """Return the coordinate of ``Tr z`` in ``H_3`` of the cyclic
    *subgroup* generated by *generator*, if it is a generator, else
    ``None``.
    """
    sub = lens_homology(subgroup.group, subgroup.local(generator))
    if not sub.divisors:
        return 0
    (q,) = sub.coordinates(chain_transfer(subgroup, z))
    return q if math.gcd(q, sub.divisors[0]) == 1 else None


def quaternionic_space_form(n):
    """Return ``S^3/Q_4n`` for odd *n*.

    The fundamental cycle is the first combination ``a inc(z_x) + b
    inc(z_y)`` of the lens cycles of ``<x> ≅ Z/2n`` and ``<y> ≅ Z/4`` whose
    transfers to ``<x>``, ``<x^2>`` and ``<y>`` are generators of their
    ``H_3``. Since ``<x^2>`` and ``<y>`` are Sylow subgroups, this makes it
    a generator of ``H_3(Q_4n) ≅ Z/4n``; no Smith normal form is needed.

    Raises:
        ValueError: If *n* is even or smaller than 1.
        VerificationError: If no combination qualifies.
    """
    if n < 1 or n % 2 == 0:
        raise ValueError(f'n must be odd and positive, got {n}')
    group = make_quaternion(n)
    x, y = 1, 2 * n
    presentation = Presentation(2, [(1,) * n + (-2, -2), (1, 2, 1, -2)])

    def included(g):
        sub = Subgroup(group, generated_elements(group, [g]))
        z = lens_cycle(sub.group, sub.local(g))
        return pushforward_chain(sub.inclusion, z)

    z_x, z_y = included(x), included(y)
    checks = [(Subgroup(group, generated_elements(group, [g])), g)
              for g in (x, group.power(x, 2), y)]
    for a, b in itertools.product(range(1, 2 * n), range(1, 4)):
        z = a * z_x + b * z_y
        if all(_is_lens_generator(h, g, z) is not None for h, g in checks):
            logger.debug('quaternionic cycle of Q%d: a = %d, b = %d',
                         4 * n, a, b)
            return ManifoldModel(f'S3/Q{4 * n}', presentation, group,
                                 (x, y), z)
    raise VerificationError(f'no generator of H_3(Q{4 * n}) found')


def cyclic_cover_parameter(model, subgroup, generator):
    """Return ``q`` such that the transfer of the fundamental cycle to the
    cyclic *subgroup* of ``Γ`` is homologous to ``q`` times the lens cycle
    of *generator*.

    For ``S^3/Q_4n`` and ``<x^2>`` this is the ``q`` of the covering lens
    space ``L(n, q)``.
    """
    if not same_group(subgroup.parent, model.quotient):
        raise ValueError('subgroup is not a subgroup of the quotient')
    sub = lens_homology(subgroup.group, subgroup.local(generator))
    if not sub.divisors:
        return 0
    (q,) = sub.coordinates(chain_transfer(subgroup,
                                          model.fundamental_cycle))
    return q


### Homomorphisms ###

def _check_scale(presentation, group):
    if presentation.generators > MAX_GENERATORS:
        raise SizeBoundError(f'{presentation.generators} generators > '
                             f'{MAX_GENERATORS}')
    if group.order > MAX_TARGET_ORDER:
        raise SizeBoundError(f'|G| = {group.order} > {MAX_TARGET_ORDER}')


def _extensions(presentation, group, prefix):
    """Yield the relator-satisfying image tuples starting with *prefix* in
    lexicographic order.
    """
    k = presentation.generators
    # Relators are checked as soon as all their generators have images.
    ready = [[r for r in presentation.relators
              if max((abs(x) for x in r), default=0) == i + 1]
             for i in range(k)]
    ready[0] = [r for r in presentation.relators
                if max((abs(x) for x in r), default=0) <= 1]

    def extend(images):
        i = len(images)
        if images and any(
                presentation.evaluate(group, images, r) != group.identity
                for r in ready[i - 1]):
            return
        if i == k:
            yield tuple(images)
            return
        for g in range(group.order):
            yield from extend(images + [g])

    if k == 0:
        yield ()
        return
    yield from extend(list(prefix))


def enumerate_homs(source, group, threads=1):
    """Return the homomorphisms from *source* to *group*.

    Args:
        source: A :class:`Presentation` or a :class:`ManifoldModel`.
        group: The target :class:`~dwchern.cohomology.groups.FiniteGroup`.
        threads: The number of worker threads; the search is sharded over
            the image of the first generator.

    Returns:
        For a :class:`Presentation`, the image tuples of the generators; for
        a :class:`ManifoldModel`, :class:`~dwchern.cohomology.groups.GroupHom`
        objects out of its quotient. Both are in lexicographic order of the
        image tuples.

    Raises:
        SizeBoundError: If the presentation has more than |MAX_GENERATORS|
            generators or *group* is larger than |MAX_TARGET_ORDER|.
    """
    model = source if isinstance(source, ManifoldModel) else None
    presentation = model.presentation if model else source
    _check_scale(presentation, group)

    if presentation.generators == 0:
        shards = [()]
    else:
        shards = [(g,) for g in range(group.order)]
    found = run_sharded(
        lambda prefix: list(_extensions(presentation, group, prefix)),
        shards, threads)
    tuples = [t for shard in found for t in shard]
    logger.info('%d homomorphisms from %s to %r', len(tuples),
                model.name if model else 'the presentation', group)
    if model is None:
        return tuples
    return [hom_from_generators(model.quotient, model.images, t, group)
            for t in tuples]


### Coverings ###

@dataclass(frozen=True)
class CoveringData():
    """The finite covering ``M_{f,H}`` of a :class:`ManifoldModel` defined
    by ``f: Γ -> G`` and a subgroup ``H`` of ``G``.
    """

    base: ManifoldModel
    f: GroupHom
    subgroup: Subgroup
    """``H``, a subgroup of ``G``."""

    cover_group: Subgroup
    """``f^-1(H)``, a subgroup of ``Γ``."""

    cover_cycle: BarChain
    """The transfer of the fundamental cycle to :attr:`cover_group`."""

    @property
    def degree(self):
        """The number of sheets, ``[Γ : f^-1(H)]``."""
        return self.cover_group.index

    @property
    def restricted_hom(self):
        """``f`` restricted to the cover, as a homomorphism
        ``f^-1(H) -> H``.
        """
        image = [self.subgroup.local(self.f(g))
                 for g in self.cover_group.members]
        return GroupHom(self.cover_group.group, self.subgroup.group, image,
                        check=False)


def _homology_of(group, cap):
    g = cyclic_generator(group)
    if g is not None:
        return lens_homology(group, g)
    if group.order <= effective_cap(cap):
        return homology_group(group, 3, cap)
    return None


def covering_model(model, f, subgroup, cap=None):
    """Return the :class:`CoveringData` of *model* for ``f`` and the
    subgroup ``H``.

    The pushforward of the cover cycle is checked to be homologous to the
    degree times the fundamental cycle when ``H_3(Γ)`` is available, i.e.
    ``Γ`` is cyclic or within the Smith normal form cap.

    Raises:
        ValueError: If the groups don't match.
        VerificationError: If a check fails.
    """
    if not same_group(f.source, model.quotient):
        raise ValueError('f is not defined on the quotient of the manifold')
    if not same_group(f.target, subgroup.parent):
        raise ValueError('H is not a subgroup of the target of f')
    cover_group = preimage_subgroup(f, subgroup)
    cover_cycle = chain_transfer(cover_group, model.fundamental_cycle)
    if not cover_cycle.is_cycle():
        raise NotACycleError('transferred fundamental cycle is not a cycle')

    homology = _homology_of(model.quotient, cap)
    if homology is not None:
        pushed = pushforward_chain(cover_group.inclusion, cover_cycle)
        if not homology.homologous(
                pushed, cover_group.index * model.fundamental_cycle):
            raise VerificationError('covering cycle does not push forward '
                                    'to a multiple of [M]')
    return CoveringData(model, f, subgroup, cover_group, cover_cycle)
