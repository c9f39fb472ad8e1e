"""
Tests for functionality in the products module

"""
import unittest

from polyprod import generators
from polyprod import graph
from polyprod import planar
from polyprod import products


class KroneckerTests(unittest.TestCase):

    def test_k4_cover_is_cube(self):
        """K4 x K2 should be the cube"""
        product = products.kronecker(generators.tetrahedron(), products.K2)
        self.assertTrue(graph.is_isomorphic(product.graph, generators.cube()))

    def test_triangle_cover_is_hexagon(self):
        product = products.kronecker(graph.cycle(3), products.K2)
        self.assertTrue(graph.is_isomorphic(product.graph, graph.cycle(6)))

    def test_even_cycle_cover_is_disconnected(self):
        product = products.kronecker(graph.cycle(4), products.K2)
        self.assertEqual(product.graph.n, 8)
        self.assertFalse(graph.is_connected(product.graph))
        self.assertEqual(graph.degree_sequence(product.graph), (2,) * 8)

    def test_sizes(self):
        first, second = generators.petersen(), graph.cycle(5)
        product = products.kronecker(first, second).graph
        self.assertEqual(product.n, first.n * second.n)
        self.assertEqual(len(product.edges),
                         2 * len(first.edges) * len(second.edges))

    def test_degrees_multiply(self):
        product = products.kronecker(generators.petersen(), graph.cycle(4))
        self.assertEqual(set(graph.degree_sequence(product.graph)), {6})

    def test_labeling(self):
        product = products.kronecker(graph.path(3), graph.path(2))
        self.assertEqual(product.labeling[3], (1, 1))
        self.assertEqual(product.labeling.vertex(2, 0), 4)
        self.assertEqual(product.labeling.label(5), '(2,1)')


class CartesianTests(unittest.TestCase):

    def test_square_times_k2_is_cube(self):
        product = products.cartesian(graph.cycle(4), products.K2)
        self.assertTrue(graph.is_isomorphic(product.graph, generators.cube()))

    def test_k2_squared_is_square(self):
        product = products.cartesian(products.K2, products.K2)
        self.assertTrue(graph.is_isomorphic(product.graph, graph.cycle(4)))

    def test_sizes(self):
        first, second = graph.cycle(5), graph.path(3)
        product = products.cartesian(first, second).graph
        self.assertEqual(product.n, 15)
        self.assertEqual(len(product.edges),
                         first.n * len(second.edges) +
                         second.n * len(first.edges))

    def test_commutes_up_to_isomorphism(self):
        first, second = graph.cycle(3), graph.path(4)
        self.assertTrue(graph.is_isomorphic(
            products.cartesian(first, second).graph,
            products.cartesian(second, first).graph))


class CoverTests(unittest.TestCase):

    def test_petersen_cover_is_desargues(self):
        """the cover of the Petersen graph should be the Desargues graph"""
        cover = products.cover(generators.petersen()).graph
        self.assertTrue(graph.is_isomorphic(cover, generators.desargues()))

    def test_cover_of_stacked_triangle(self):
        cover = products.cover(generators.stacked_prism(3, 3)).graph
        self.assertTrue(graph.is_isomorphic(cover,
                                            generators.stacked_prism(6, 3)))

    def test_cover_is_bipartite(self):
        cover = products.cover(generators.petersen()).graph
        self.assertIsNotNone(graph.bipartition(cover))

    def test_cover_tags(self):
        labeling = products.cover(generators.tetrahedron()).labeling
        self.assertEqual(labeling.label(0), '(0,x)')
        self.assertEqual(labeling.label(1), '(0,y)')
        self.assertEqual(labeling.vertex(3, 1), 7)

    def test_involution(self):
        """the cover involution should be a fixed-point-free automorphism
        never mapping a vertex to a neighbor"""
        factor = generators.tetrahedron()
        cover = products.cover(factor).graph
        involution = products.cover_involution(factor)
        self.assertEqual(cover.relabel(involution), cover)
        for vertex in range(cover.n):
            self.assertNotEqual(involution[vertex], vertex)
            self.assertFalse(cover.has_edge(vertex, involution[vertex]))


class PrismTests(unittest.TestCase):

    def test_prism_over_k2(self):
        self.assertTrue(graph.is_isomorphic(products.prism(products.K2),
                                            graph.cycle(4)))

    def test_prism_over_ladder(self):
        """the prism over F12 should be C4 x P6"""
        self.assertTrue(graph.is_isomorphic(
            products.prism(generators.ladder(6)),
            generators.stacked_prism(4, 6)))

    def test_prism_over_pentagon(self):
        prism = products.prism(graph.cycle(5))
        self.assertTrue(graph.is_isomorphic(prism,
                                            generators.stacked_prism(5, 2)))


class PolyhedralBoundsTests(unittest.TestCase):

    def test_cube(self):
        self.assertEqual(products.polyhedral_bounds(generators.cube()),
                         (8, 6))

    def test_tetrahedron(self):
        self.assertEqual(products.polyhedral_bounds(generators.tetrahedron()),
                         (4, 0))

    def test_cover_of_pentagonal_prism(self):
        cover = products.cover(generators.stacked_prism(5, 2)).graph
        degree3, quadrilaterals = products.polyhedral_bounds(cover)
        self.assertGreaterEqual(degree3, 8)
        self.assertGreaterEqual(quadrilaterals, 6)

    def test_non_planar_raises(self):
        self.assertRaises(planar.NonPlanarInput, products.polyhedral_bounds,
                          generators.complete(5))
