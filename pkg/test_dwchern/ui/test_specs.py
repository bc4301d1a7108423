"""Unit tests for the specs module."""

import json
import tempfile
import unittest
from fractions import Fraction
from pathlib import Path

from dwchern.cohomology.bockstein import bockstein_one
from dwchern.cohomology.chains import character, cup, zero_cochain
from dwchern.cohomology.chern import (
    InducedRepSpec, dihedral_c2_class, twelve_c2_cocycle)
from dwchern.cohomology.groups import (
    make_cyclic, make_dihedral, make_quaternion, make_symmetric,
    subgroup_from_generators)
from dwchern.cohomology.homology import classes_equal, lens_cycle
from dwchern.cohomology.transfer import transfer_cochain
from dwchern.ui import specs
from dwchern.ui.specs import SpecError


class TestLoad(unittest.TestCase):

    def test_inline(self):
        self.assertEqual(specs.load('{"kind": "cyclic", "n": 3}'),
                         {'kind': 'cyclic', 'n': 3})
        self.assertEqual(specs.load(' cyclic:3 '), 'cyclic:3')
        self.assertEqual(specs.load([1, 2]), [1, 2])

    def test_file(self):
        with tempfile.TemporaryDirectory() as directory:
            path = Path(directory) / 'group.json'
            path.write_text(json.dumps({'kind': 'dihedral', 'n': 5}),
                            encoding='utf-8')
            self.assertEqual(specs.load(f'@{path}'),
                             {'kind': 'dihedral', 'n': 5})
            with self.assertRaises(SpecError):
                specs.load(f'@{Path(directory) / "missing.json"}', 'group')

    def test_invalid_json(self):
        with self.assertRaises(SpecError) as cm:
            specs.load('{"kind": }', 'group')
        self.assertEqual(cm.exception.path, 'group')
        self.assertIn('line 1', str(cm.exception))


class TestGroups(unittest.TestCase):

    def test_shorthand(self):
        self.assertEqual(specs.parse_group('cyclic:3'), make_cyclic(3))
        self.assertEqual(specs.parse_group('Dihedral:5'), make_dihedral(5))
        self.assertEqual(specs.parse_group('quaternion:2'),
                         make_quaternion(2))
        self.assertEqual(specs.parse_group('symmetric:3'),
                         make_symmetric(3))
        self.assertEqual(specs.parse_group('trivial').order, 1)
        self.assertEqual(specs.parse_group('sl2:3').order, 24)

    def test_json(self):
        self.assertEqual(specs.parse_group({'kind': 'dihedral', 'n': 3}),
                         make_dihedral(3))
        group = specs.parse_group('{"kind": "table", "table": [[0, 1], '
                                  '[1, 0]], "name": "C2"}')
        self.assertEqual(group, make_cyclic(2))
        self.assertEqual(group.name, 'C2')

    def test_errors(self):
        cases = [
            ('cyclic', 'group'),
            ('cyclic:x', 'group'),
            ('cyclic:0', 'group'),
            ('sl2:4', 'group'),
            ('torus:1', 'group'),
            ({'kind': 'dihedral', 'n': 'a'}, 'group.n'),
            ({'kind': 'dihedral', 'n': True}, 'group.n'),
            ({'kind': 'heisenberg'}, 'group.kind'),
            ({'n': 3}, 'group'),
            ({'kind': 'table', 'table': [[0, 1], [0, 1]]}, 'group'),
        ]
        for spec, path in cases:
            with self.subTest(spec=spec):
                with self.assertRaises(SpecError) as cm:
                    specs.parse_group(spec)
                self.assertEqual(cm.exception.path, path)


class TestManifolds(unittest.TestCase):

    def test_shorthand(self):
        self.assertEqual(specs.parse_manifold('lens:5,2').name, 'L(5,2)')
        self.assertEqual(specs.parse_manifold('lens:3').name, 'L(3,1)')
        self.assertEqual(specs.parse_manifold('quaternionic:3').name,
                         'S3/Q12')

    def test_json(self):
        model = specs.parse_manifold({'kind': 'lens', 'n': 7, 'q': 3,
                                      'orientation': -1})
        self.assertEqual(model.name, '-L(7,3)')
        self.assertEqual(model.orientation, -1)

    def test_presentation(self):
        cycle = lens_cycle(make_cyclic(3), 1)
        model = specs.parse_manifold({
            'kind': 'presentation', 'name': 'L',
            'generators': 1, 'relators': [[1, 1, 1]],
            'quotient': 'cyclic:3', 'images': [1],
            'cycle': cycle.to_json()})
        self.assertEqual(model.name, 'L')
        self.assertEqual(model.fundamental_cycle, cycle)

    def test_errors(self):
        cases = [
            ('lens:6,3', 'manifold'),
            ('lens:1,2,3', 'manifold'),
            ('quaternionic:4', 'manifold'),
            ({'kind': 'klein'}, 'manifold.kind'),
            ({'kind': 'lens'}, 'manifold'),
            ({'kind': 'lens', 'n': 7, 'q': 3, 'orientation': 2},
             'manifold.orientation'),
            ({'kind': 'lens', 'n': 7, 'q': 3, 'orientation': 0},
             'manifold.orientation'),
            ({'kind': 'lens', 'n': 7, 'q': 3, 'orientation': 'x'},
             'manifold.orientation'),
            ({'kind': 'presentation', 'generators': 1,
              'relators': [[1, 1, 1]], 'quotient': 'cyclic:3',
              'images': [1], 'cycle': {'degree': 3}}, 'manifold.cycle'),
            ({'kind': 'presentation', 'generators': 1,
              'relators': [[1, 1, 1]], 'quotient': 'cyclic:3',
              'images': ['a'], 'cycle': {}}, 'manifold.images[0]'),
        ]
        for spec, path in cases:
            with self.subTest(spec=spec):
                with self.assertRaises(SpecError) as cm:
                    specs.parse_manifold(spec)
                self.assertEqual(cm.exception.path, path)


class TestCharacters(unittest.TestCase):

    def test_forms(self):
        c6 = make_cyclic(6)
        expected = character(c6, [1], [Fraction(2, 6)])
        self.assertEqual(specs.parse_character(c6, 2), expected)
        self.assertEqual(specs.parse_character(c6, '2'), expected)
        self.assertEqual(specs.parse_character(c6, ['1/3']), expected)
        self.assertEqual(specs.parse_character(
            c6, {'generators': [5], 'values': ['2/3']}), expected)

    def test_non_abelian(self):
        d3 = make_dihedral(3)
        # D3 is generated by r = 1 and s = 3.
        phi = specs.parse_character(d3, [0, '1/2'])
        self.assertEqual(phi(3), Fraction(1, 2))
        with self.assertRaises(SpecError):
            specs.parse_character(d3, 1)

    def test_errors(self):
        d3 = make_dihedral(3)
        cases = [
            ([0], 'phi'),
            (['1/3', 0], 'phi'),
            (['x', 0], 'phi[0]'),
            ({'generators': [1], 'values': []}, 'phi'),
            ({'generators': [1]}, 'phi'),
        ]
        for value, path in cases:
            with self.subTest(value=value):
                with self.assertRaises(SpecError) as cm:
                    specs.parse_character(d3, value)
                self.assertEqual(cm.exception.path, path)


class TestReps(unittest.TestCase):

    def test_subgroup(self):
        group = make_dihedral(3)
        subgroup, gens = specs.parse_subgroup(group, [3])
        self.assertEqual(subgroup.members, (0, 3))
        self.assertEqual(gens, [3])
        with self.assertRaises(SpecError) as cm:
            specs.parse_subgroup(group, [1, 6])
        self.assertEqual(cm.exception.path, 'subgroup[1]')
        with self.assertRaises(SpecError):
            specs.parse_subgroup(group, 1)

    def test_rep(self):
        group = make_dihedral(3)
        rep = specs.parse_rep(group, {'subgroup': [1], 'phi': 1})
        self.assertIsInstance(rep, InducedRepSpec)
        self.assertEqual(rep.phi(1), Fraction(1, 3))
        self.assertEqual(specs.parse_rep(group, {'subgroup': [1],
                                                 'phi': ['1/3']}).phi, rep.phi)

    def test_rep_errors(self):
        group = make_dihedral(3)
        cases = [
            ({'subgroup': [1]}, 'rep'),
            ({'subgroup': [1], 'phi': [1, 2]}, 'rep.phi'),
            ({'subgroup': [1], 'phi': ['1/2']}, 'rep.phi'),
            ({'subgroup': [9], 'phi': 1}, 'rep.subgroup[0]'),
        ]
        for data, path in cases:
            with self.subTest(data=data):
                with self.assertRaises(SpecError) as cm:
                    specs.parse_rep(group, data)
                self.assertEqual(cm.exception.path, path)


class TestCocycles(unittest.TestCase):

    def setUp(self):
        self.c5 = make_cyclic(5)
        phi = character(self.c5, [1], [Fraction(1, 5)])
        self.link = cup(phi, bockstein_one(phi))

    def test_shorthand(self):
        self.assertEqual(specs.parse_cocycle(self.c5, 'zero'),
                         zero_cochain(self.c5, 3))
        self.assertEqual(specs.parse_cocycle(self.c5, 'linking:phi=1'),
                         self.link)
        phi2 = character(self.c5, [1], [Fraction(2, 5)])
        self.assertEqual(
            specs.parse_cocycle(self.c5, 'linking:phi=1,phi2=2'),
            cup(character(self.c5, [1], [Fraction(1, 5)]),
                bockstein_one(phi2)))

    def test_times(self):
        self.assertEqual(
            specs.parse_cocycle(self.c5, {'kind': 'linking', 'phi': 1,
                                          'times': 3}),
            3 * self.link)

    def test_chern_kinds(self):
        group = make_dihedral(5)
        rep = {'subgroup': [1], 'phi': 1}
        h = subgroup_from_generators(group, [1])
        spec = InducedRepSpec(h, character(h.group, [1], [Fraction(1, 5)]))
        self.assertEqual(
            specs.parse_cocycle(group, {'kind': 'twelve_c2', 'rep': rep}),
            twelve_c2_cocycle(spec))
        x = specs.parse_cocycle(group, {'kind': 'beta_inverse_c2',
                                        'rep': rep, 'order': 5})
        self.assertTrue(classes_equal(x, dihedral_c2_class(spec)))
        virtual = specs.parse_cocycle(group, {'kind': 'virtual',
                                              'terms': [[1, rep]]})
        self.assertEqual(virtual, twelve_c2_cocycle(spec))

    def test_transfer(self):
        group = make_dihedral(3)
        h = subgroup_from_generators(group, [1])
        psi = specs.parse_cocycle(group, {'kind': 'transfer',
                                          'subgroup': [1],
                                          'cocycle': 'linking:phi=1'})
        phi = character(h.group, [1], [Fraction(1, 3)])
        self.assertEqual(psi, transfer_cochain(h, cup(phi,
                                                      bockstein_one(phi))))

    def test_explicit(self):
        data = {'kind': 'explicit', 'cochain': self.link.to_json()}
        self.assertEqual(specs.parse_cocycle(self.c5, json.dumps(data)),
                         self.link)

    def test_errors(self):
        s3 = make_symmetric(3)
        cases = [
            (self.c5, 'linking', 'cocycle'),
            (self.c5, 'linking:psi=1', 'cocycle'),
            (self.c5, 'torsion', 'cocycle'),
            (self.c5, {'kind': 'chern'}, 'cocycle.kind'),
            (self.c5, {'kind': 'zero', 'times': 'x'}, 'cocycle.times'),
            (self.c5, {'kind': 'explicit', 'cochain': {'degree': 3}},
             'cocycle.cochain'),
            (self.c5, {'kind': 'explicit',
                       'cochain': bockstein_one(character(
                           self.c5, [1], [Fraction(1, 5)])).to_json()},
             'cocycle.cochain'),
            (s3, {'kind': 'two_c2_evens',
                  'rep': {'subgroup': [1], 'phi': ['1/2']}}, 'cocycle'),
            (s3, {'kind': 'c1c1', 'rep': {'subgroup': [1], 'phi': 1}},
             'cocycle'),
        ]
        for group, spec, path in cases:
            with self.subTest(spec=spec):
                with self.assertRaises(SpecError) as cm:
                    specs.parse_cocycle(group, spec)
                self.assertEqual(cm.exception.path, path)


if __name__ == '__main__':
    unittest.main()
