"""Unit tests for the transfer module."""

import unittest
from fractions import Fraction

import numpy as np
from hypothesis import given, settings, strategies as st

from dwchern.cohomology.bockstein import bockstein_one
from dwchern.cohomology.chains import (
    BarChain, Cochain, NotACocycleError, NotACycleError, Ring, character,
    constant_cochain, cup, pair)
from dwchern.cohomology.chern import InducedRepSpec, twelve_c2_cocycle
from dwchern.cohomology.groups import (
    make_cyclic, make_dihedral, make_quaternion, make_symmetric,
    subgroup_from_generators)
from dwchern.cohomology.homology import (
    class_order, classes_equal, is_coboundary, lens_cycle)
from dwchern.cohomology.transfer import (
    chain_transfer, check_chain_map, evens_norm_four_cocycle,
    restrict_cochain, transfer_cochain)


HALF = Fraction(1, 2)

# (group, subgroup generators, a character of the subgroup on its
# local generator 1)
CASES = [
    (make_cyclic(4), [2], HALF),
    (make_cyclic(6), [2], Fraction(1, 3)),
    (make_dihedral(3), [1], Fraction(1, 3)),
    (make_quaternion(2), [1], Fraction(1, 4)),
    (make_symmetric(3), [1], HALF),
]

# One character of each parent group in CASES, on generating elements.
PARENT_CHARACTERS = [([1], [Fraction(1, 4)]), ([1], [Fraction(1, 6)]),
                     ([1, 3], [0, HALF]), ([1, 4], [HALF, HALF]),
                     ([1, 3], [HALF, 0])]


### Hypothesis strategies ###

subgroups = st.sampled_from(CASES).map(
    lambda case: subgroup_from_generators(case[0], case[1]))


@st.composite
def retransversed(draw):
    """Generate a subgroup with the greedy transversal and the same
    subgroup with randomly chosen coset representatives.
    """
    h = draw(subgroups)
    mul = h.parent.mul
    transversal = [0] + [int(mul[draw(st.sampled_from(h.members)), g])
                         for g in h.transversal[1:]]
    return h, h.with_transversal(transversal)


@st.composite
def subgroup_cochains(draw, degree):
    """Generate a subgroup and a random integer cochain on it."""
    h = draw(subgroups)
    size = h.order**degree
    values = draw(st.lists(st.integers(-9, 9), min_size=size,
                           max_size=size))
    table = np.array(values, dtype=np.int64).reshape((h.order,) * degree)
    return h, Cochain(h.group, degree, Ring.INTEGER, table)


@st.composite
def parent_chains(draw, subgroup, degree):
    """Generate a random chain on the parent group of *subgroup*."""
    n = subgroup.parent.order
    terms = draw(st.lists(
        st.tuples(st.integers(-4, 4),
                  st.tuples(*[st.integers(0, n - 1)] * degree)),
        max_size=6))
    return BarChain(subgroup.parent, degree, terms)


class TestTransfer(unittest.TestCase):

    @settings(max_examples=100, deadline=None)
    @given(st.integers(1, 3).flatmap(subgroup_cochains), st.data())
    def test_adjoint(self, args, data):
        h, psi = args
        z = data.draw(parent_chains(h, psi.degree))
        self.assertEqual(pair(transfer_cochain(h, psi), z),
                         pair(psi, chain_transfer(h, z, check=False)))

    @settings(max_examples=50, deadline=None)
    @given(st.integers(0, 2).flatmap(subgroup_cochains))
    def test_chain_map(self, args):
        h, psi = args
        check_chain_map(h, psi)

    def test_degree_zero(self):
        h = subgroup_from_generators(make_dihedral(3), [1])
        c = constant_cochain(h.group, 0, 5)
        self.assertEqual(transfer_cochain(h, c)(), 10)

    def test_transfer_of_restricted_character(self):
        for (group, gens, _), (pgens, values) in zip(CASES,
                                                     PARENT_CHARACTERS):
            h = subgroup_from_generators(group, gens)
            phi = character(group, pgens, values)
            with self.subTest(group=group):
                self.assertEqual(
                    transfer_cochain(h, restrict_cochain(h, phi)),
                    h.index * phi)

    def test_large_values(self):
        h = subgroup_from_generators(make_symmetric(3), [3])
        tr = transfer_cochain(h, constant_cochain(h.group, 2, 2**62))
        self.assertEqual(tr(1, 4), 2**63)
        self.assertEqual(tr.table.dtype, object)

    def test_wrong_group(self):
        h = subgroup_from_generators(make_cyclic(4), [2])
        with self.assertRaises(ValueError):
            transfer_cochain(h, constant_cochain(make_cyclic(4), 1, 1))
        with self.assertRaises(ValueError):
            chain_transfer(h, BarChain(make_cyclic(2), 1))


class TestClassLaws(unittest.TestCase):

    def setUp(self):
        self.cases = []
        for group, gens, value in CASES:
            h = subgroup_from_generators(group, gens)
            self.cases.append((h, character(h.group, [1], [value])))

    def test_bockstein_commutes_with_transfer(self):
        for h, phi in self.cases:
            with self.subTest(subgroup=h):
                self.assertTrue(classes_equal(
                    bockstein_one(transfer_cochain(h, phi)),
                    transfer_cochain(h, bockstein_one(phi))))

    def test_projection_formula(self):
        for (h, phi), (pgens, values) in zip(self.cases, PARENT_CHARACTERS):
            chi = character(h.parent, pgens, values)
            y = bockstein_one(phi)
            with self.subTest(subgroup=h):
                self.assertTrue(classes_equal(
                    transfer_cochain(h, cup(restrict_cochain(h, chi), y)),
                    cup(chi, transfer_cochain(h, y))))

    def test_extension_vanishes(self):
        # The class is 6 d(d - 1) χ ⌣ βχ for the index d.
        cases = [(make_cyclic(4), [2], [1], [Fraction(1, 4)]),
                 (make_cyclic(6), [2], [1], [Fraction(1, 6)]),
                 (make_quaternion(2), [1], [1, 4], [HALF, HALF]),
                 (make_symmetric(3), [1], [1, 3], [HALF, 0]),
                 (make_dihedral(3), [3], [1, 3], [0, HALF])]
        for group, gens, pgens, values in cases:
            h = subgroup_from_generators(group, gens)
            phi = restrict_cochain(h, character(group, pgens, values))
            with self.subTest(group=group, subgroup=gens):
                self.assertFalse(phi.is_zero())
                exact, _ = is_coboundary(
                    twelve_c2_cocycle(InducedRepSpec(h, phi)))
                self.assertTrue(exact)

    def test_restriction_after_transfer_kills_order_three(self):
        h = subgroup_from_generators(make_symmetric(3), [3])
        phi = character(h.group, [1], [Fraction(1, 3)])
        self.assertEqual(class_order(phi), 3)
        tr = transfer_cochain(h, phi)
        self.assertTrue(tr.is_zero())
        self.assertEqual(class_order(restrict_cochain(h, tr)), 1)

        whole = subgroup_from_generators(h.group, [1])
        self.assertEqual(whole.index, 1)
        back = restrict_cochain(whole, transfer_cochain(whole, phi))
        self.assertEqual([back(g) for g in range(3)],
                         [phi(g) for g in range(3)])
        self.assertEqual(class_order(back), 3)

    @settings(max_examples=100, deadline=None)
    @given(retransversed(), st.data())
    def test_transversal_invariance(self, args, data):
        greedy, other = args
        k = data.draw(st.integers(1, greedy.order - 1))
        phi = character(greedy.group, [1], [Fraction(k, greedy.order)])
        self.assertEqual(transfer_cochain(greedy, phi),
                         transfer_cochain(other, phi))
        psi = cup(phi, bockstein_one(phi))
        self.assertTrue(classes_equal(transfer_cochain(greedy, psi),
                                      transfer_cochain(other, psi)))


class TestChainTransfer(unittest.TestCase):

    def test_lens_cover(self):
        c6 = make_cyclic(6)
        h = subgroup_from_generators(c6, [2])
        z = chain_transfer(h, lens_cycle(c6, 1))
        self.assertTrue(z.is_cycle())
        phi = character(h.group, [1], [Fraction(1, 3)])
        self.assertEqual(pair(cup(phi, bockstein_one(phi)), z),
                         Fraction(1, 3))

    def test_cycles_go_to_cycles(self):
        for group, gens, _ in CASES:
            h = subgroup_from_generators(group, gens)
            g = gens[0]
            with self.subTest(group=group):
                self.assertTrue(
                    chain_transfer(h, lens_cycle(group, g)).is_cycle())

    def test_not_a_cycle(self):
        h = subgroup_from_generators(make_cyclic(4), [2])
        with self.assertRaises(NotACycleError):
            chain_transfer(h, BarChain(h.parent, 2, [(1, (1, 1))]))

    def test_empty(self):
        h = subgroup_from_generators(make_cyclic(4), [2])
        self.assertFalse(chain_transfer(h, BarChain(h.parent, 3)))


class TestEvensNorm(unittest.TestCase):

    def test_matches_transfer_products(self):
        for group, gens, value in CASES:
            h = subgroup_from_generators(group, gens)
            phi = character(h.group, [1], [value])
            with self.subTest(group=group):
                x = bockstein_one(phi)
                tx = transfer_cochain(h, x)
                expected = cup(tx, tx) - transfer_cochain(h, cup(x, x))
                self.assertEqual(evens_norm_four_cocycle(h, phi), expected)

    def test_index_one(self):
        group = make_cyclic(3)
        h = subgroup_from_generators(group, [1])
        phi = character(h.group, [1], [Fraction(1, 3)])
        self.assertTrue(evens_norm_four_cocycle(h, phi).is_zero())

    def test_requires_homomorphism(self):
        h = subgroup_from_generators(make_cyclic(4), [2])
        bad = Cochain(h.group, 1, Ring.QMODZ, [1, 1], denominator=2)
        with self.assertRaises(NotACocycleError):
            evens_norm_four_cocycle(h, bad)


if __name__ == '__main__':
    unittest.main()
