"""Unit tests for the cmtype module."""

import unittest
from fractions import Fraction
from unittest import mock

from dwchern.cohomology.chains import VerificationError
from dwchern.cohomology.chern import InducedRepSpec
from dwchern.cohomology.cmtype import (
    CmCertificate, Verdict, cm_check, combine, default_candidates,
    find_kappa, is_surjective, revalidate, scale_certificate,
    sylow_reduction, theorem_multiplier)
from dwchern.cohomology.chains import character
from dwchern.cohomology.groups import (
    SizeBoundError, make_cyclic, make_dihedral, make_quaternion,
    make_symmetric, subgroup_from_generators)
from dwchern.cohomology.homology import homology_group


class TestVerdicts(unittest.TestCase):

    def test_combine(self):
        v, f, i = Verdict.VERIFIED, Verdict.FAILED, Verdict.INDETERMINATE
        self.assertEqual(combine([]), v)
        self.assertEqual(combine([v, v]), v)
        self.assertEqual(combine([v, i]), i)
        self.assertEqual(combine([i, f, v]), f)

    def test_members(self):
        self.assertEqual(Verdict('failed'), Verdict.FAILED)
        self.assertEqual(Verdict.VERIFIED.description, 'The condition holds')

    def test_theorem_multiplier(self):
        self.assertEqual([theorem_multiplier(m) for m in (1, 2, 3, 4)],
                         [12, 12, 36, 48])


class TestDefaultCandidates(unittest.TestCase):

    def test_cyclic(self):
        [spec] = default_candidates(make_cyclic(6))
        self.assertEqual(spec.subgroup.index, 1)
        self.assertEqual(spec.phi(1), Fraction(1, 6))

    def test_index_two(self):
        [spec] = default_candidates(make_quaternion(2))
        self.assertEqual(spec.subgroup.members, (0, 1, 2, 3))
        self.assertEqual(spec.phi(1), Fraction(1, 4))

    def test_none(self):
        self.assertEqual(default_candidates(make_symmetric(4)), [])


class TestCmCheck(unittest.TestCase):

    def test_cyclic_is_c1(self):
        for n in (2, 5, 6):
            group = make_cyclic(n)
            with self.subTest(n=n):
                certificate = cm_check(group, 1, default_candidates(group))
                self.assertEqual(certificate.verdict, Verdict.VERIFIED)
                self.assertTrue(revalidate(certificate))

    def test_dihedral_is_c2(self):
        for n in (3, 5):
            group = make_dihedral(n)
            with self.subTest(n=n):
                certificate = cm_check(group, 2, default_candidates(group))
                self.assertEqual(certificate.verdict, Verdict.VERIFIED)
                self.assertEqual(set(certificate.condition_one), {2, n})
                self.assertTrue(revalidate(certificate))

    def test_quaternion_is_c2(self):
        group = make_quaternion(2)
        certificate = cm_check(group, 2, default_candidates(group))
        self.assertEqual(certificate.verdict, Verdict.VERIFIED)
        [witness] = certificate.witnesses
        self.assertEqual(witness.gcd, 2)
        self.assertIsNotNone(witness.kappa)
        self.assertTrue(revalidate(certificate))

    def test_quaternion_is_not_c1(self):
        group = make_quaternion(2)
        certificate = cm_check(group, 1, default_candidates(group))
        self.assertEqual(certificate.condition_two, Verdict.FAILED)
        self.assertEqual(certificate.verdict, Verdict.FAILED)

    def test_no_candidates(self):
        group = make_cyclic(3)
        certificate = cm_check(group, 1, [])
        self.assertEqual(certificate.condition_one, {3: Verdict.FAILED})
        self.assertEqual(certificate.verdict, Verdict.FAILED)

    def test_trivial_group(self):
        group = make_cyclic(1)
        certificate = cm_check(group, 1, default_candidates(group))
        self.assertEqual(certificate.condition_one, {})
        self.assertEqual(certificate.verdict, Verdict.VERIFIED)

    def test_threads(self):
        group = make_dihedral(3)
        specs = default_candidates(group) * 3
        one = cm_check(group, 2, specs)
        many = cm_check(group, 2, specs, threads=3)
        self.assertEqual([w.coordinates for w in one.witnesses],
                         [w.coordinates for w in many.witnesses])

    def test_invalid_m(self):
        with self.assertRaises(ValueError):
            cm_check(make_cyclic(2), 0, [])

    def test_json(self):
        group = make_cyclic(5)
        data = cm_check(group, 1, default_candidates(group)).to_json()
        self.assertEqual(data['verdict'], 'verified')
        self.assertEqual(data['order'], 5)
        self.assertEqual(data['condition_one'], {'5': 'verified'})
        [witness] = data['witnesses']
        self.assertEqual(witness['subgroup'], [0, 1, 2, 3, 4])
        self.assertEqual(witness['phi'], ['0', '1/5', '2/5', '3/5', '4/5'])
        self.assertEqual(witness['gcd'], 1)
        self.assertEqual(len(witness['kappa']), 1)


class TestRevalidation(unittest.TestCase):

    def setUp(self):
        self.group = make_cyclic(5)
        self.certificate = cm_check(self.group, 1,
                                    default_candidates(self.group))

    def test_tampered_kappa(self):
        witness = self.certificate.witnesses[0]
        witness.kappa = 2 * witness.kappa
        with self.assertRaises(VerificationError):
            revalidate(self.certificate)

    def test_tampered_verdicts(self):
        self.certificate.condition_one = {5: Verdict.FAILED}
        with self.assertRaises(VerificationError):
            revalidate(self.certificate)

    def test_tampered_gcd(self):
        self.certificate.witnesses[0].gcd = 5
        with self.assertRaises(VerificationError):
            revalidate(self.certificate)

    def test_scaling(self):
        scaled = scale_certificate(self.certificate, 2)
        self.assertIsInstance(scaled, CmCertificate)
        self.assertEqual(scaled.m, 2)
        self.assertEqual(scaled.verdict, Verdict.VERIFIED)
        self.assertTrue(revalidate(scaled))
        old = self.certificate.witnesses[0].coordinates
        new = scaled.witnesses[0].coordinates
        self.assertEqual(new, tuple(2 * a % 5 for a in old))


class TestFindKappa(unittest.TestCase):

    def test_search_bound(self):
        group = make_cyclic(5)
        homology = homology_group(group, 3)
        [spec] = default_candidates(group)
        with mock.patch('dwchern.cohomology.cmtype.MAX_SEARCH', 2):
            with self.assertRaises(SizeBoundError):
                find_kappa(homology, spec, 1)

    def test_restriction_to_subgroup(self):
        group = make_dihedral(3)
        homology = homology_group(group, 3)
        h = subgroup_from_generators(group, [1])
        spec = InducedRepSpec(h, character(h.group, [1], [Fraction(1, 3)]))
        kappa, coordinates = find_kappa(homology, spec, 1)
        self.assertIsNotNone(kappa)
        self.assertEqual(len(coordinates), 1)


class TestSylowReduction(unittest.TestCase):

    def test_surjectivity(self):
        self.assertTrue(is_surjective([[1]], [4]))
        self.assertFalse(is_surjective([[2]], [4]))
        self.assertTrue(is_surjective([[2], [3]], [6]))
        self.assertTrue(is_surjective([], []))
        self.assertFalse(is_surjective([[1, 0]], [2, 2]))

    def test_cyclic(self):
        report = sylow_reduction(make_cyclic(6))
        self.assertEqual(report.surjective, {2: True, 3: True})
        self.assertEqual(report.verdict, Verdict.VERIFIED)
        data = report.to_json()
        self.assertEqual(set(data['primes']), {'2', '3'})

    def test_symmetric(self):
        report = sylow_reduction(make_symmetric(3))
        self.assertTrue(report.surjective[3])
        self.assertEqual(report.certificates[3].verdict, Verdict.VERIFIED)

    def test_trivial(self):
        report = sylow_reduction(make_cyclic(1))
        self.assertEqual(report.surjective, {})
        self.assertEqual(report.verdict, Verdict.VERIFIED)


if __name__ == '__main__':
    unittest.main()
