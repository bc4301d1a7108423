"""Unit tests for the table module."""

import unittest
from fractions import Fraction

from dwchern.cohomology.bockstein import bockstein_one
from dwchern.cohomology.chains import character, cup
from dwchern.cohomology.cmtype import cm_check, default_candidates
from dwchern.cohomology.groups import (
    make_cyclic, make_dihedral, subgroup_from_generators)
from dwchern.cohomology.homology import homology_group
from dwchern.topology.dw import covering_records, hom_values
from dwchern.topology.manifolds import lens_space
from dwchern.ui import table


class TestHomTables(unittest.TestCase):

    def setUp(self):
        # Print long strings when a test fails.
        self.maxDiff = None
        group = make_cyclic(3)
        phi = character(group, [1], [Fraction(1, 3)])
        self.values = hom_values(lens_space(3), group,
                                 cup(phi, bockstein_one(phi)))

    def test_hom_array(self):
        self.assertEqual(table.hom_array(self.values, [1]), [
            ['0', '0', '0'],
            ['1', '1', '1/3'],
            ['2', '2', '1/3'],
        ])

    def test_hom_table(self):
        lines = table.hom_table(self.values, [1]).splitlines()
        self.assertEqual(lines[0].split(), ['#', 'IMAGES', 'VALUE'])
        self.assertEqual(lines[2].split(), ['1', '1', '1/3'])
        self.assertEqual(len(lines), 4)

    def test_labels(self):
        group = make_dihedral(3)
        h = subgroup_from_generators(group, [1])
        phi = character(h.group, [1], [Fraction(1, 3)])
        records = covering_records(lens_space(6), group, h,
                                   cup(phi, bockstein_one(phi)))
        rows = table.covering_array(records, [1])
        self.assertEqual(len(rows), 6)
        self.assertEqual(rows[0], ['0', group.label(0), '0', '0', '1',
                                   'yes'])
        self.assertTrue(all(row[5] in ('yes', 'no') for row in rows))
        header = table.covering_table(records, [1]).splitlines()[0]
        self.assertEqual(header.split(),
                         ['#', 'IMAGES', 'LHS', 'RHS', 'SHEETS', 'REDUCED'])


class TestHomologyTable(unittest.TestCase):

    def test_cyclic(self):
        homology = homology_group(make_cyclic(4), 3)
        rows = table.homology_array(homology)
        self.assertEqual([row[:2] for row in rows], [['0', 'Z/4']])
        text = table.homology_table(homology)
        self.assertTrue(text.startswith('H_3(Z/4) = Z/4\n\n'))

    def test_trivial(self):
        homology = homology_group(make_dihedral(3), 2)
        self.assertEqual(table.homology_array(homology), [])
        self.assertEqual(table.homology_table(homology), 'H_2(D3) = 0')


class TestCertificateTable(unittest.TestCase):

    def test_rows(self):
        group = make_cyclic(5)
        certificate = cm_check(group, 1, default_candidates(group))
        rows = table.certificate_array(certificate)
        self.assertEqual(rows[0][:2], ['(i) p = 5', 'verified'])
        self.assertEqual(rows[1][:2], ['(ii) |H| = 5', 'found'])
        self.assertEqual(rows[-1][:2], ['verdict', 'verified'])
        self.assertIn('gcd 1', rows[1][2])
        text = table.certificate_table(certificate)
        self.assertEqual(text.splitlines()[0].split(),
                         ['CHECK', 'RESULT', 'DETAILS'])


if __name__ == '__main__':
    unittest.main()
