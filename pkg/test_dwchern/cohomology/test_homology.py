"""Unit tests for the homology module."""

import unittest
from fractions import Fraction

import numpy as np
import sympy
from hypothesis import given, settings, strategies as st

from dwchern.cohomology.bockstein import bockstein_one
from dwchern.cohomology.chains import (
    BarChain, Cochain, NotACycleError, Ring, character, coboundary,
    cup, pair, zero_cochain)
from dwchern.cohomology.groups import (
    SizeBoundError, make_cyclic, make_dihedral, make_quaternion,
    make_symmetric)
from dwchern.cohomology.homology import (
    HARD_SNF_CAP, SparseMatrix, boundary_matrix, check_cap, class_order,
    classes_equal, homology_group, is_coboundary, lens_cycle, lens_homology,
    pairing_fingerprint, smith_normal_form, solve_lattice)


### Hypothesis strategies ###

@st.composite
def integer_matrices(draw, max_side=5, bound=6):
    """Generate small dense integer matrices."""
    m = draw(st.integers(1, max_side))
    k = draw(st.integers(1, max_side))
    row = st.lists(st.integers(-bound, bound), min_size=k, max_size=k)
    return draw(st.lists(row, min_size=m, max_size=m))


@st.composite
def small_cochains(draw, degree, groups=(make_cyclic(3), make_cyclic(4),
                                        make_dihedral(3))):
    """Generate an integer cochain of the given degree."""
    group = draw(st.sampled_from(groups))
    size = group.order**degree
    values = draw(st.lists(st.integers(-5, 5), min_size=size,
                           max_size=size))
    table = np.array(values, dtype=np.int64).reshape((group.order,) * degree)
    return Cochain(group, degree, Ring.INTEGER, table)


def _product(*matrices):
    result = np.array(matrices[0], dtype=object)
    for matrix in matrices[1:]:
        result = result.dot(np.array(matrix, dtype=object))
    return result.tolist()


class TestSmithNormalForm(unittest.TestCase):

    @settings(max_examples=100, deadline=None)
    @given(integer_matrices())
    def test_decomposition(self, matrix):
        snf = smith_normal_form(matrix)
        u, v = snf.u_matrix(), snf.v_matrix()
        self.assertEqual(_product(u, matrix, v), snf.diagonal_matrix())
        self.assertIn(sympy.Matrix(u).det(), (1, -1))
        self.assertIn(sympy.Matrix(v).det(), (1, -1))
        divisors = snf.divisors
        self.assertTrue(all(d > 0 for d in divisors))
        self.assertTrue(all(b % a == 0 for a, b in zip(divisors,
                                                      divisors[1:])))
        self.assertEqual(snf.rank, sympy.Matrix(matrix).rank())

    @settings(max_examples=50, deadline=None)
    @given(integer_matrices(), st.integers(0, 100))
    def test_seed_independence(self, matrix, seed):
        self.assertEqual(smith_normal_form(matrix).divisors,
                         smith_normal_form(matrix, seed=seed).divisors)

    @settings(max_examples=50, deadline=None)
    @given(integer_matrices(), st.data())
    def test_inverse(self, matrix, data):
        snf = smith_normal_form(matrix)
        v = data.draw(st.lists(st.integers(-9, 9), min_size=snf.shape[0],
                               max_size=snf.shape[0]))
        self.assertEqual(snf.apply_u_inverse(snf.apply_u(v)), v)

    def test_known_divisors(self):
        self.assertEqual(smith_normal_form([[2, 4], [6, 8]]).divisors, [2, 4])
        self.assertEqual(smith_normal_form([[0, 0], [0, 0]]).divisors, [])
        self.assertEqual(smith_normal_form([[4, 0], [0, 6]]).divisors,
                         [2, 12])

    def test_untracked_columns(self):
        snf = smith_normal_form([[2, 1]], track_columns=False)
        with self.assertRaises(ValueError):
            snf.apply_v([1, 0])

    def test_sparse_matrix(self):
        matrix = SparseMatrix.from_dense([[0, 1, 0], [2, 0, 0]])
        self.assertEqual(matrix.nnz, 2)
        self.assertEqual(matrix.transpose().to_dense(),
                         [[0, 2], [1, 0], [0, 0]])


class TestBarComplex(unittest.TestCase):

    def test_boundary_squared(self):
        for group in (make_cyclic(3), make_dihedral(3)):
            for n in (2, 3):
                with self.subTest(group=group, n=n):
                    a = np.array(boundary_matrix(group, n).to_dense())
                    b = np.array(boundary_matrix(group, n + 1).to_dense())
                    self.assertFalse(np.any(a @ b))

    def test_matches_chain_boundary(self):
        group = make_cyclic(3)
        z = BarChain(group, 2, [(1, (1, 2)), (3, (2, 2))])
        vector = np.zeros(9, dtype=np.int64)
        for c, t in z:
            vector[np.ravel_multi_index(t, (3, 3))] = c
        image = np.array(boundary_matrix(group, 2).to_dense()) @ vector
        expected = np.zeros(3, dtype=np.int64)
        for c, t in z.boundary():
            expected[t[0]] = c
        np.testing.assert_array_equal(image, expected)

    def test_cap(self):
        self.assertEqual(check_cap(make_cyclic(5)), 12)
        self.assertEqual(check_cap(make_dihedral(8), 100), HARD_SNF_CAP)
        with self.assertRaises(SizeBoundError):
            check_cap(make_symmetric(4))
        with self.assertRaises(SizeBoundError):
            homology_group(make_symmetric(4), 3, cap=100)


class TestHomology(unittest.TestCase):

    def test_cyclic(self):
        for n in range(2, 7):
            with self.subTest(n=n):
                homology = homology_group(make_cyclic(n), 3)
                self.assertEqual(homology.divisors, [n])
                homology.check()

    def test_known_groups(self):
        cases = [
            (make_quaternion(3), 1, [4]),
            (make_quaternion(2), 1, [2, 2]),
            (make_quaternion(2), 2, []),
            (make_quaternion(2), 3, [8]),
            (make_symmetric(3), 1, [2]),
            (make_symmetric(3), 2, []),
            (make_symmetric(3), 3, [6]),
            (make_dihedral(5), 3, [10]),
        ]
        for group, n, divisors in cases:
            with self.subTest(group=group, n=n):
                homology = homology_group(group, n)
                self.assertEqual(homology.divisors, divisors)
                homology.check()

    def test_invalid_degree(self):
        with self.assertRaises(ValueError):
            homology_group(make_cyclic(2), 0)

    def test_coordinates(self):
        group = make_cyclic(5)
        homology = homology_group(group, 3)
        z = homology.generators[0]
        self.assertEqual(homology.coordinates(3 * z), (3,))
        self.assertTrue(homology.is_boundary(5 * z))
        self.assertEqual(homology.coordinates(homology.cycle((4,))), (4,))
        self.assertEqual(
            homology.cohomology_coordinates(homology.cocycle((2,))), (2,))
        with self.assertRaises(NotACycleError):
            homology.coordinates(BarChain(group, 3, [(1, (1, 1, 1))]))

    def test_lens_cycle_class(self):
        group = make_cyclic(5)
        homology = homology_group(group, 3)
        z = lens_cycle(group, 1)
        self.assertEqual(homology.order, 5)
        self.assertNotEqual(homology.coordinates(z), (0,))
        self.assertTrue(homology.homologous(lens_cycle(group, 1, q=2),
                                            2 * z))

    def test_lens_homology(self):
        for n in (2, 5, 6):
            group = make_cyclic(n)
            with self.subTest(n=n):
                lens = lens_homology(group, 1)
                lens.check()
                self.assertEqual(lens.divisors, [n])
                self.assertEqual(lens.coordinates(lens_cycle(group, 1, 3)),
                                 (3 % n,))
        self.assertEqual(lens_homology(make_cyclic(1), 0).divisors, [])
        with self.assertRaises(ValueError):
            lens_homology(make_cyclic(6), 2)

    def test_lens_pairing(self):
        group = make_cyclic(7)
        phi = character(group, [1], [Fraction(1, 7)])
        self.assertEqual(pair(cup(phi, bockstein_one(phi)),
                              lens_cycle(group, 1)), Fraction(1, 7))


class TestCoboundaries(unittest.TestCase):

    @settings(max_examples=30, deadline=None)
    @given(st.integers(1, 2).flatmap(small_cochains))
    def test_coboundaries_are_detected(self, b):
        c = coboundary(b)
        exact, witness = is_coboundary(c)
        self.assertTrue(exact)
        self.assertEqual(coboundary(witness), c)

    def test_qmodz(self):
        group = make_cyclic(4)
        phi = character(group, [1], [Fraction(1, 4)])
        self.assertEqual(is_coboundary(phi), (False, None))
        link = cup(phi, bockstein_one(phi))
        self.assertFalse(is_coboundary(link)[0])
        exact, witness = is_coboundary(4 * link)
        self.assertTrue(exact)
        self.assertEqual(coboundary(witness), 4 * link)

    def test_rational_cocycles_are_exact(self):
        group = make_dihedral(3)
        phi = character(group, [1, 3], [0, Fraction(1, 2)])
        c = cup(phi, bockstein_one(phi)).lift()
        c = coboundary(c)
        exact, witness = is_coboundary(c)
        self.assertTrue(exact)
        self.assertEqual(coboundary(witness), c)

    def test_modular(self):
        group = make_cyclic(3)
        m = character(group, [1], [Fraction(1, 3)]).to_modular(3)
        self.assertTrue(m.is_cocycle())
        self.assertFalse(is_coboundary(m)[0])
        self.assertTrue(is_coboundary(3 * m)[0])

    def test_invalid_degree(self):
        with self.assertRaises(ValueError):
            is_coboundary(zero_cochain(make_cyclic(2), 0))

    def test_class_order(self):
        group = make_cyclic(6)
        phi = character(group, [1], [Fraction(1, 6)])
        link = cup(phi, bockstein_one(phi))
        self.assertEqual(class_order(link), 6)
        self.assertEqual(class_order(2 * link), 3)
        self.assertEqual(class_order(zero_cochain(group, 3)), 1)
        self.assertTrue(classes_equal(7 * link, link))
        self.assertFalse(classes_equal(5 * link, link))

    def test_fingerprint(self):
        group = make_cyclic(5)
        phi = character(group, [1], [Fraction(2, 5)])
        link = cup(phi, bockstein_one(phi))
        self.assertEqual(pairing_fingerprint(link, [lens_cycle(group, 1)]),
                         [Fraction(4, 5)])
        self.assertEqual(len(pairing_fingerprint(link)), 1)


class TestSolveLattice(unittest.TestCase):

    def test_solutions(self):
        columns = [[2, 0], [0, 3]]
        self.assertEqual(solve_lattice(columns, [4, 6]), [2, 2])
        self.assertIsNone(solve_lattice(columns, [1, 0]))
        self.assertEqual(solve_lattice([], [0, 0]), [])
        self.assertIsNone(solve_lattice([], [1]))

    @settings(max_examples=50, deadline=None)
    @given(integer_matrices(max_side=4), st.data())
    def test_found_solutions_are_solutions(self, columns, data):
        coefficients = data.draw(st.lists(
            st.integers(-3, 3), min_size=len(columns),
            max_size=len(columns)))
        target = [sum(a * col[i] for a, col in zip(coefficients, columns))
                  for i in range(len(columns[0]))]
        x = solve_lattice(columns, target)
        self.assertIsNotNone(x)
        self.assertEqual([sum(a * col[i] for a, col in zip(x, columns))
                          for i in range(len(columns[0]))], target)


if __name__ == '__main__':
    unittest.main()
