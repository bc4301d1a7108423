"""This module turns command-line specs into groups, manifolds and
cocycles.

Every spec is either a shorthand string or JSON; JSON may be given inline
or as ``@path/to/file.json`` (read as UTF-8).

Group specs:

    ============================== =========================================
    Shorthand                      JSON
    ============================== =========================================
    ``cyclic:3``                   ``{"kind": "cyclic", "n": 3}``
    ``dihedral:5``                 ``{"kind": "dihedral", "n": 5}``
    ``quaternion:2``               ``{"kind": "quaternion", "n": 2}``
    ``symmetric:3``                ``{"kind": "symmetric", "d": 3}``
    ``sl2:3``                      ``{"kind": "sl2", "q": 3}``
    \\-                             ``{"kind": "table", "table": [[...]]}``
    ============================== =========================================

Manifold specs: ``lens:n,q``, ``quaternionic:n`` or JSON with the kinds
``lens``, ``quaternionic`` and ``presentation`` (``generators``,
``relators``, ``quotient``, ``images``, ``cycle``). An ``"orientation":
-1`` entry reverses the orientation.

Cocycle specs: ``zero``, ``linking:phi=1`` (``φ ⌣ βφ`` with ``φ`` sending
the smallest generator of a cyclic group to ``1/n``) or JSON with a
``kind`` and an optional integer ``times``:

    =================== ==================================================
    Kind                Fields
    =================== ==================================================
    ``zero``            \\-
    ``linking``         ``phi``, optionally ``phi2``
    ``twelve_c2``       ``rep``
    ``twelve_c2_evens`` ``rep``
    ``two_c2_evens``    ``rep``
    ``dihedral_c2``     ``rep``
    ``two_c1c1``        ``rep``, ``rep2``
    ``c1c1``            ``rep``, ``rep2``
    ``virtual``         ``terms``: ``[[n, rep], ...]``
    ``beta_inverse_c2`` ``rep``, ``order``
    ``transfer``        ``subgroup``, ``cocycle`` (a spec on the subgroup)
    ``explicit``        ``cochain`` (the JSON of a cochain)
    =================== ==================================================

A character (``phi``) is an integer ``k`` for ``k/n`` on the generator of
a cyclic group, a list of values on the generators of
:func:`~dwchern.cohomology.groups.generating_set`, or ``{"generators":
[...], "values": [...]}``. A ``rep`` is ``{"subgroup": [generators],
"phi": [values]}`` with one value per subgroup generator.
"""

import json
import logging
from fractions import Fraction
from pathlib import Path

from dwchern.cohomology import chern
from dwchern.cohomology.bockstein import bockstein_one
from dwchern.cohomology.chains import (
    BarChain, Cochain, Ring, character, cup, zero_cochain)
from dwchern.cohomology.groups import (
    FiniteGroup, GroupError, Subgroup, cyclic_generator, generated_elements,
    generating_set, make_cyclic, make_dihedral, make_quaternion, make_sl2,
    make_symmetric)
from dwchern.cohomology.transfer import transfer_cochain
from dwchern.topology.manifolds import (
    ManifoldModel, Presentation, lens_space, quaternionic_space_form)


logger = logging.getLogger(__name__)


class SpecError(ValueError):
    """Raised for malformed input; the message starts with the JSON path
    of the offending item.
    """

    def __init__(self, message, path=''):
        self.path = path
        super().__init__(f"at '{path}': {message}" if path else message)


def load(text, path=''):
    """Return the JSON value or the shorthand string in *text*.

    Raises:
        SpecError: If the file can't be read or the JSON is invalid.
    """
    if not isinstance(text, str):
        return text
    text = text.strip()
    if text.startswith('@'):
        logger.debug('reading %s from %s', path or 'input', text[1:])
        try:
            text = Path(text[1:]).read_text(encoding='utf-8').strip()
        except OSError as error:
            raise SpecError(f'cannot read {text[1:]}: {error}', path) \
                from error
    if text[:1] in ('{', '['):
        try:
            return json.loads(text)
        except json.JSONDecodeError as error:
            raise SpecError(f'invalid JSON (line {error.lineno}, column '
                            f'{error.colno}): {error.msg}', path) from error
    return text


def _shorthand(text):
    """Split ``'kind:a,b'`` into ``('kind', ['a', 'b'])``."""
    kind, _, rest = text.partition(':')
    return kind.strip().lower(), [a.strip() for a in rest.split(',') if a]


def _int(value, path):
    if isinstance(value, bool):
        raise SpecError(f'expected an integer, got {value!r}', path)
    try:
        return int(value)
    except (TypeError, ValueError) as error:
        raise SpecError(f'expected an integer, got {value!r}', path) \
            from error


def _fraction(value, path):
    try:
        return Fraction(str(value))
    except (TypeError, ValueError, ZeroDivisionError) as error:
        raise SpecError(f'expected a fraction, got {value!r}', path) \
            from error


def _field(data, key, path):
    if not isinstance(data, dict):
        raise SpecError(f'expected an object, got {type(data).__name__}',
                        path)
    if key not in data:
        raise SpecError(f'missing field {key!r}', path)
    return data[key]


def _join(path, key):
    if isinstance(key, int):
        return f'{path}[{key}]'
    return f'{path}.{key}' if path else key


### Groups ###

_MAKERS = {
    'cyclic': (make_cyclic, 'n'),
    'dihedral': (make_dihedral, 'n'),
    'quaternion': (make_quaternion, 'n'),
    'symmetric': (make_symmetric, 'd'),
    'sl2': (make_sl2, 'q'),
}


def parse_group(spec, path='group'):
    """Return the :class:`~dwchern.cohomology.groups.FiniteGroup` of a
    group spec.
    """
    data = load(spec, path)
    try:
        if isinstance(data, str):
            kind, args = _shorthand(data)
            if kind == 'trivial':
                return make_cyclic(1)
            if kind not in _MAKERS or len(args) != 1:
                raise SpecError(f'unknown group {data!r}', path)
            maker, _ = _MAKERS[kind]
            return maker(_int(args[0], path))

        kind = _field(data, 'kind', path)
        if kind == 'table':
            table = _field(data, 'table', path)
            return FiniteGroup(table, data.get('labels'),
                               name=data.get('name', ''))
        if kind not in _MAKERS:
            raise SpecError(f'unknown group kind {kind!r}',
                            _join(path, 'kind'))
        maker, key = _MAKERS[kind]
        return maker(_int(_field(data, key, path), _join(path, key)))
    except SpecError:
        raise
    except ValueError as error:
        raise SpecError(str(error), path) from error


### Manifolds ###

def parse_manifold(spec, path='manifold'):
    """Return the :class:`~dwchern.topology.manifolds.ManifoldModel` of a
    manifold spec.
    """
    data = load(spec, path)
    try:
        if isinstance(data, str):
            kind, args = _shorthand(data)
            if kind == 'lens' and len(args) in (1, 2):
                q = _int(args[1], path) if len(args) == 2 else 1
                return lens_space(_int(args[0], path), q)
            if kind == 'quaternionic' and len(args) == 1:
                return quaternionic_space_form(_int(args[0], path))
            raise SpecError(f'unknown manifold {data!r}', path)

        kind = _field(data, 'kind', path)
        if kind == 'lens':
            model = lens_space(_int(_field(data, 'n', path), path),
                               _int(data.get('q', 1), _join(path, 'q')))
        elif kind == 'quaternionic':
            model = quaternionic_space_form(
                _int(_field(data, 'n', path), _join(path, 'n')))
        elif kind == 'presentation':
            model = _presentation_model(data, path)
        else:
            raise SpecError(f'unknown manifold kind {kind!r}',
                            _join(path, 'kind'))
        orientation = _int(data.get('orientation', 1),
                           _join(path, 'orientation'))
        if orientation not in (1, -1):
            raise SpecError(f'orientation must be 1 or -1, got '
                            f'{orientation}', _join(path, 'orientation'))
        if orientation == -1:
            model = model.reversed()
        logger.debug('%s parsed as %s', path, model.name)
        return model
    except SpecError:
        raise
    except ValueError as error:
        raise SpecError(str(error), path) from error


def _presentation_model(data, path):
    generators = _int(_field(data, 'generators', path),
                      _join(path, 'generators'))
    relators = _field(data, 'relators', path)
    presentation = Presentation(generators, relators)
    quotient = parse_group(_field(data, 'quotient', path),
                           _join(path, 'quotient'))
    images = [_int(g, _join(_join(path, 'images'), i))
              for i, g in enumerate(_field(data, 'images', path))]
    cycle_data = _field(data, 'cycle', path)
    try:
        cycle = BarChain.from_json(quotient, cycle_data)
    except (KeyError, TypeError, ValueError) as error:
        raise SpecError(f'invalid chain: {error}', _join(path, 'cycle')) \
            from error
    return ManifoldModel(data.get('name', 'M'), presentation, quotient,
                         images, cycle)


### Characters and representations ###

def parse_character(group, value, path='phi'):
    """Return a homomorphism ``G -> Q/Z`` as a 1-cocycle."""
    if isinstance(value, str):
        value = _int(value, path)
    try:
        if isinstance(value, int) and not isinstance(value, bool):
            g = cyclic_generator(group)
            if g is None:
                raise SpecError('an integer character needs a cyclic group',
                                path)
            return character(group, [g], [Fraction(value, group.order)])
        if isinstance(value, list):
            gens = generating_set(group)
            if len(value) != len(gens):
                raise SpecError(f'expected {len(gens)} values for the '
                                f'generators {gens}', path)
            return character(group, gens, [
                _fraction(v, _join(path, i)) for i, v in enumerate(value)])
        gens = [_int(g, _join(_join(path, 'generators'), i)) for i, g
                in enumerate(_field(value, 'generators', path))]
        values = [_fraction(v, _join(_join(path, 'values'), i)) for i, v
                  in enumerate(_field(value, 'values', path))]
        if len(gens) != len(values):
            raise SpecError('generators and values differ in length', path)
        return character(group, gens, values)
    except GroupError as error:
        raise SpecError(str(error), path) from error


def parse_subgroup(group, value, path='subgroup'):
    """Return the subgroup generated by the element list *value*."""
    if not isinstance(value, list):
        raise SpecError('expected a list of generators', path)
    gens = [_int(g, _join(path, i)) for i, g in enumerate(value)]
    for i, g in enumerate(gens):
        if not 0 <= g < group.order:
            raise SpecError(f'{g} is not an element', _join(path, i))
    return Subgroup(group, generated_elements(group, gens)), gens


def parse_rep(group, data, path='rep'):
    """Return the :class:`~dwchern.cohomology.chern.InducedRepSpec` of
    ``{"subgroup": [...], "phi": [...]}``.
    """
    subgroup, gens = parse_subgroup(group, _field(data, 'subgroup', path),
                                    _join(path, 'subgroup'))
    values = _field(data, 'phi', path)
    if isinstance(values, int) and len(gens) == 1:
        values = [Fraction(values, subgroup.order)]
    if not isinstance(values, list) or len(values) != len(gens):
        raise SpecError('expected one value per subgroup generator',
                        _join(path, 'phi'))
    values = [_fraction(v, _join(_join(path, 'phi'), i))
              for i, v in enumerate(values)]
    try:
        phi = character(subgroup.group, [subgroup.local(g) for g in gens],
                        values)
    except GroupError as error:
        raise SpecError(str(error), _join(path, 'phi')) from error
    return chern.InducedRepSpec(subgroup, phi)


### Cocycles ###

_SINGLE = {
    'twelve_c2': chern.twelve_c2_cocycle,
    'twelve_c2_evens': chern.twelve_c2_evens,
    'two_c2_evens': chern.two_c2_evens,
    'dihedral_c2': chern.dihedral_c2_class,
}

_DOUBLE = {
    'two_c1c1': chern.two_c1c1_cocycle,
    'c1c1': chern.c1c1_cocycle,
}


def parse_cocycle(group, spec, path='cocycle', cap=None):
    """Return the ``Q/Z``-valued cochain of a cocycle spec on *group*.

    Raises:
        SpecError: For malformed specs and arguments the constructions
            reject.
    """
    data = load(spec, path)
    if isinstance(data, str):
        kind, args = _shorthand(data)
        if kind == 'zero':
            return zero_cochain(group, 3)
        if kind == 'linking':
            fields = dict(a.partition('=')[::2] for a in args)
            unknown = set(fields) - {'phi', 'phi2'}
            if unknown or 'phi' not in fields:
                raise SpecError(f'invalid linking spec {data!r}', path)
            data = {'kind': 'linking', 'phi': _int(fields['phi'], path)}
            if 'phi2' in fields:
                data['phi2'] = _int(fields['phi2'], path)
        else:
            raise SpecError(f'unknown cocycle {data!r}', path)

    kind = _field(data, 'kind', path)
    times = _int(data.get('times', 1), _join(path, 'times'))
    try:
        cocycle = _cocycle(group, kind, data, path, cap)
    except SpecError:
        raise
    except (ValueError, TypeError) as error:
        raise SpecError(str(error), path) from error
    return cocycle if times == 1 else times * cocycle


def _cocycle(group, kind, data, path, cap):
    def rep(key='rep'):
        return parse_rep(group, _field(data, key, path), _join(path, key))

    if kind == 'zero':
        return zero_cochain(group, 3)
    if kind == 'linking':
        phi = parse_character(group, _field(data, 'phi', path),
                              _join(path, 'phi'))
        phi2 = parse_character(group, data['phi2'], _join(path, 'phi2')) \
            if 'phi2' in data else phi
        return cup(phi, bockstein_one(phi2))
    if kind in _SINGLE:
        return _SINGLE[kind](rep())
    if kind in _DOUBLE:
        return _DOUBLE[kind](rep(), rep('rep2'))
    if kind == 'virtual':
        terms = []
        for i, term in enumerate(_field(data, 'terms', path)):
            where = _join(_join(path, 'terms'), i)
            if not isinstance(term, list) or len(term) != 2:
                raise SpecError('expected [multiplicity, rep]', where)
            terms.append((_int(term[0], _join(where, 0)),
                          parse_rep(group, term[1], _join(where, 1))))
        return chern.twelve_c2_virtual(chern.VirtualBrauerRep(tuple(terms)))
    if kind == 'beta_inverse_c2':
        order = _int(_field(data, 'order', path), _join(path, 'order'))
        return chern.divide_class(chern.twelve_c2_cocycle(rep()), 12, order,
                                  cap=cap)
    if kind == 'transfer':
        subgroup, _ = parse_subgroup(group, _field(data, 'subgroup', path),
                                     _join(path, 'subgroup'))
        inner = parse_cocycle(subgroup.group, _field(data, 'cocycle', path),
                              _join(path, 'cocycle'), cap)
        return transfer_cochain(subgroup, inner)
    if kind == 'explicit':
        cochain = _field(data, 'cochain', path)
        try:
            c = Cochain.from_json(group, cochain)
        except (KeyError, TypeError, ValueError) as error:
            raise SpecError(f'invalid cochain: {error}',
                            _join(path, 'cochain')) from error
        if c.ring != Ring.QMODZ:
            raise SpecError('expected a Q/Z-valued cochain',
                            _join(path, 'cochain'))
        return c
    raise SpecError(f'unknown cocycle kind {kind!r}', _join(path, 'kind'))
