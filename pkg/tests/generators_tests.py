"""
Tests for functionality in the generators module

"""
import unittest

from polyprod import generators
from polyprod import graph
from polyprod import planar
from polyprod import products
from polyprod import recognition


def truncated_cube():
    """The cube with vertex 0 replaced by the triangle 0, 8, 9"""
    cube = generators.cube()
    edges = [e for e in cube.edges if e not in ((0, 2), (0, 6))]
    edges.extend([(8, 2), (9, 6), (0, 8), (8, 9), (0, 9)])
    return graph.build_graph(10, edges)


class BasicFamilyTests(unittest.TestCase):

    def test_ladder(self):
        """the ladder F_2l should be P_l x K2"""
        for ell in range(2, 7):
            self.assertTrue(graph.is_isomorphic(
                generators.ladder(ell),
                products.cartesian(graph.path(ell), products.K2).graph))

    def test_ladder_of_one_is_k2(self):
        self.assertEqual(generators.ladder(1), products.K2)

    def test_ladder_rungs(self):
        self.assertEqual(generators.ladder(4),
                         graph.cycle(8).with_edges([(1, 6), (2, 5)]))

    def test_ladder_of_zero_raises(self):
        self.assertRaises(generators.BadParams, generators.ladder, 0)

    def test_cube(self):
        self.assertEqual(graph.degree_sequence(generators.cube()), (3,) * 8)
        self.assertTrue(planar.is_polyhedron(generators.cube()))

    def test_petersen(self):
        petersen = generators.petersen()
        self.assertEqual((petersen.n, len(petersen.edges)), (10, 15))

    def test_desargues(self):
        desargues = generators.desargues()
        self.assertEqual((desargues.n, len(desargues.edges)), (20, 30))

    def test_generalized_petersen_prism(self):
        self.assertTrue(graph.is_isomorphic(
            generators.generalized_petersen(5, 1),
            generators.stacked_prism(5, 2)))

    def test_generalized_petersen_bad_step(self):
        self.assertRaises(generators.BadParams,
                          generators.generalized_petersen, 6, 3)

    def test_basic(self):
        self.assertEqual(generators.basic('cycle', n=5), graph.cycle(5))
        self.assertEqual(generators.basic('tetrahedron'),
                         generators.complete(4))

    def test_basic_out_of_range(self):
        self.assertRaises(generators.BadParams, generators.basic, 'cycle',
                          n=2)

    def test_basic_unknown_family(self):
        self.assertRaises(generators.BadParams, generators.basic, 'wheel',
                          n=5)

    def test_basic_wrong_parameters(self):
        self.assertRaises(generators.BadParams, generators.basic,
                          'stacked_prism', n=5)

    def test_bad_params_message(self):
        self.assertEqual(str(generators.BadParams('n too small')),
                         'Bad generator parameters: n too small')


class FactorTests(unittest.TestCase):

    def test_stacked_cube_factor_cover(self):
        """the cover of the stacked cube factor should be C4N x P2M"""
        for N, M in ((1, 1), (1, 2), (2, 1), (1, 3)):
            factor, _witness = generators.stacked_cube_factor(N, M)
            self.assertTrue(graph.is_isomorphic(
                products.cover(factor).graph,
                generators.stacked_prism(4 * N, 2 * M)),
                'stacked_cube_factor(%s, %s)' % (N, M))

    def test_smallest_stacked_cube_factor_is_k4(self):
        factor, _witness = generators.stacked_cube_factor(1, 1)
        self.assertTrue(graph.is_isomorphic(factor, generators.tetrahedron()))

    def test_stacked_cube_factor_is_not_planar(self):
        factor, _witness = generators.stacked_cube_factor(1, 2)
        self.assertFalse(planar.is_planar(factor))

    def test_stacked_cube_factor_witness(self):
        _factor, witness = generators.stacked_cube_factor(1, 2)
        self.assertEqual(witness.pairs, ((0, 4), (2, 6)))
        self.assertEqual(witness.region, (0, 2, 4, 6))

    def test_odd_prism_factor_cover(self):
        for N, M in ((1, 1), (1, 3), (2, 2)):
            factor = generators.odd_prism_factor(N, M)
            self.assertTrue(graph.is_isomorphic(
                products.cover(factor).graph,
                products.cartesian(graph.cycle(4 * N + 2),
                                   graph.path(M)).graph))

    def test_factor_bad_params(self):
        self.assertRaises(generators.BadParams,
                          generators.stacked_cube_factor, 0, 1)
        self.assertRaises(generators.BadParams, generators.odd_prism_factor,
                          1, 0)

    def test_quad_factor_k4(self):
        factor, _witness, quad = generators.quad_factor(2, 1)
        self.assertEqual(factor, generators.tetrahedron())
        self.assertEqual((quad.r, quad.s), ((1, 2), (3, 4)))

    def test_quad_factor_cover(self):
        factor, _witness, _quad = generators.quad_factor(5, 2)
        self.assertTrue(planar.is_quadrangulation(
            products.cover(factor).graph))

    def test_quad_factor_fill(self):
        factor, _witness, _quad = generators.quad_factor(4, 1)
        self.assertEqual(factor.n, 15)
        self.assertTrue(factor.has_edge(0, 3))
        self.assertEqual(factor.neighbors(14), (8, 10, 12))

    def test_quad_factor_min_degree(self):
        """every vertex of J should have degree at least three"""
        for m in range(2, 9):
            for i in range(1, m):
                factor, _witness, _quad = generators.quad_factor(m, i)
                self.assertGreaterEqual(
                    min(factor.degree(v) for v in range(factor.n)), 3,
                    'quad_factor(%s, %s)' % (m, i))

    def test_quad_factor_polyhedral_cover(self):
        """J should be a polyhedron with a quadrangulated polyhedral cover"""
        for m in range(2, 7):
            for i in range(1, m):
                factor, _witness, _quad = generators.quad_factor(m, i)
                cover = products.cover(factor).graph
                label = 'quad_factor(%s, %s)' % (m, i)
                self.assertTrue(planar.is_polyhedron(factor), label)
                self.assertTrue(planar.is_polyhedron(cover), label)
                self.assertTrue(planar.is_quadrangulation(cover), label)

    def test_quad_factor_triangles_at_a1(self):
        """a1 should lie on 2i + 1 triangles, the other odd face having
        2i + 1 sides"""
        factor, _witness, _quad = generators.quad_factor(6, 3)
        face_set = planar.planar_embed(factor).faces()
        odd = [face_set.walks[k] for k in face_set.odd_faces()]
        triangles = [walk for walk in odd if len(walk) == 3]
        self.assertEqual(len(triangles), 7)
        self.assertTrue(all(0 in walk for walk in triangles))
        self.assertEqual([sorted(walk) for walk in odd if len(walk) != 3],
                         [[1, 2, 3, 4, 5, 6, 7]])

    def test_quad_factor_bad_params(self):
        self.assertRaises(generators.BadParams, generators.quad_factor, 2, 2)
        self.assertRaises(generators.BadParams, generators.quad_factor, 1, 1)


class FourTriangleTests(unittest.TestCase):

    def test_start_graph(self):
        factor = generators.t3333_build(generators.T3333Script((), 'F1'))
        self.assertEqual(factor.n, 7)
        self.assertEqual(str(graph.degree_sequence(factor)), '4^3,3^4')
        self.assertTrue(planar.is_polyhedron(factor))

    def test_second_final(self):
        factor = generators.t3333_build(generators.T3333Script((), 'F2'))
        self.assertEqual(factor.n, 10)

    def test_move_adds_three_vertices(self):
        for move in generators.MOVES:
            factor = generators.t3333_build(
                generators.T3333Script((move, move), 'F1'))
            self.assertEqual(factor.n, 13)

    def test_cover_degrees(self):
        """the cover should have exactly eight vertices of degree three"""
        factor = generators.t3333_build(generators.T3333Script(('T1',),
                                                               'F1'))
        cover = products.cover(factor).graph
        self.assertEqual(str(graph.degree_sequence(cover)), '4^12,3^8')

    def test_bad_script(self):
        self.assertRaises(generators.BadParams, generators.t3333_build,
                          generators.T3333Script(('T9',), 'F1'))
        self.assertRaises(generators.BadParams, generators.t3333_build,
                          generators.T3333Script((), 'F3'))

    def test_scripts(self):
        scripts = generators.t3333_scripts(1)
        self.assertEqual(len(scripts), 8)
        self.assertEqual(scripts[0], generators.T3333Script((), 'F1'))
        self.assertEqual(scripts[1], generators.T3333Script((), 'F2'))
        self.assertEqual(len(generators.t3333_scripts(2)), 26)


class CubicBuildTests(unittest.TestCase):

    def test_cube_demo(self):
        factor, witness = generators.cubic_build(
            generators.cube_build_demo())
        self.assertEqual(factor.n, 12)
        self.assertEqual(set(graph.degree_sequence(factor)), {3})
        self.assertTrue(recognition.verify_factor_witness(factor,
                                                          witness)[0])

    def test_cube_demo_cover(self):
        factor, _witness = generators.cubic_build(
            generators.cube_build_demo())
        cover = products.cover(factor).graph
        self.assertTrue(planar.is_polyhedron(cover))
        self.assertEqual(set(graph.degree_sequence(cover)), {3})

    def assertViolates(self, spec, clause):
        with self.assertRaises(generators.SpecViolation) as context:
            generators.cubic_build(spec)
        self.assertEqual(context.exception.clause, clause)

    def test_j2_not_cubic(self):
        spec = generators.cube_build_demo()._replace(
            j2=graph.Multigraph.from_graph(graph.cycle(4)))
        self.assertViolates(spec, 'j2_structure')

    def test_odd_region(self):
        spec = generators.cube_build_demo()._replace(
            j2=graph.Multigraph.from_graph(generators.tetrahedron()),
            region=(0, 1, 3))
        self.assertViolates(spec, 'even_region')

    def test_region_not_a_face(self):
        cube = generators.cube()
        region = tuple(cube.edge_index(u, v) for u, v in
                       ((0, 1), (1, 3), (3, 2), (2, 4), (4, 6), (6, 0)))
        spec = generators.cube_build_demo()._replace(region=region)
        self.assertViolates(spec, 'even_region')

    def test_region_away_from_odd_face(self):
        """the square opposite the triangle shares no edge with it"""
        truncated = truncated_cube()
        region = tuple(truncated.edge_index(u, v) for u, v in
                       ((2, 3), (3, 5), (5, 4), (4, 2)))
        spec = generators.CubicBuildSpec(
            graph.Multigraph.from_graph(truncated), region,
            {region[0]: 2, region[2]: 2}, ((0, 2), (1, 3)),
            recognition.ORD2)
        self.assertViolates(spec, 'adjacent_odd')

    def test_one_split(self):
        spec = generators.cube_build_demo()
        self.assertViolates(spec._replace(splits={spec.region[0]: 2}),
                            'two_splits')

    def test_split_parity(self):
        spec = generators.cube_build_demo()
        self.assertViolates(spec._replace(splits={spec.region[0]: 1,
                                                  spec.region[2]: 1}),
                            'split_parity')

    def test_order(self):
        spec = generators.cube_build_demo()
        self.assertViolates(spec._replace(pairing=((0, 1), (2, 3))), 'order')

    def test_violation_message(self):
        self.assertEqual(str(generators.SpecViolation('order', 'bad')),
                         'Clause order violated: bad')


class QuadExpandTests(unittest.TestCase):

    def test_cube(self):
        expanded = generators.quad_expand(generators.cube(), (0, 2, 3, 1))
        self.assertEqual(expanded.n, 12)
        self.assertEqual(set(graph.degree_sequence(expanded)), {3})
        self.assertTrue(planar.is_polyhedron(expanded))
        stats = planar.face_stats(planar.planar_embed(expanded).faces())
        self.assertTrue(all(length % 2 == 0 for length in stats.r_k))

    def test_keeps_condition(self):
        expanded = generators.quad_expand(generators.stacked_prism(5, 2),
                                          (0, 2, 3, 1))
        self.assertEqual(expanded.n, 14)
        self.assertEqual(recognition.classify_odd_faces(expanded).tag, 'C1')

    def test_not_cubic_raises(self):
        self.assertRaises(generators.NotCubic, generators.quad_expand,
                          generators.complete(5), (0, 1, 2, 3))

    def test_triangle_raises(self):
        self.assertRaises(generators.NotQuadFace, generators.quad_expand,
                          generators.tetrahedron(), (0, 1, 2))

    def test_non_facial_raises(self):
        self.assertRaises(generators.NotQuadFace, generators.quad_expand,
                          generators.cube(), (0, 1, 3, 5))


class OuterplanarFamilyTests(unittest.TestCase):

    def test_ladder_spec(self):
        """the chords u2u7 and u3u6 should make H the ladder F8"""
        spec = generators.DouHSpec(4, ((2, 7), (3, 6)))
        H = generators.dou_H(spec)
        self.assertEqual(H, generators.ladder(4))
        self.assertTrue(graph.is_isomorphic(products.prism(H),
                                            generators.stacked_prism(4, 4)))

    def test_prism_is_cover_even(self):
        H = generators.dou_H(generators.DouHSpec(4, ((2, 7), (3, 6))))
        self.assertTrue(graph.is_isomorphic(
            products.prism(H), products.cover(generators.dou_J(H)).graph))

    def test_prism_is_cover_odd(self):
        H = generators.dou_H(generators.DouHSpec(5, ((1, 4), (6, 9))))
        J = generators.dou_J(H)
        self.assertEqual(J.n, 10)
        self.assertTrue(graph.is_isomorphic(products.prism(H),
                                            products.cover(J).graph))

    def test_empty_odd(self):
        H = generators.dou_H(generators.DouHSpec(5, ()))
        self.assertTrue(graph.is_isomorphic(generators.dou_J(H),
                                            generators.stacked_prism(5, 2)))

    def assertViolates(self, spec, clause):
        with self.assertRaises(generators.SpecViolation) as context:
            generators.dou_H(spec)
        self.assertEqual(context.exception.clause, clause)

    def test_range(self):
        self.assertViolates(generators.DouHSpec(1, ()), 'range')
        self.assertViolates(generators.DouHSpec(4, ((1, 9),)), 'range')

    def test_cycle_edge(self):
        self.assertViolates(generators.DouHSpec(4, ((1, 2),)), 'cycle_edge')

    def test_antipodal(self):
        self.assertViolates(generators.DouHSpec(4, ((1, 5),)), 'antipodal')

    def test_parity(self):
        self.assertViolates(generators.DouHSpec(4, ((1, 3), (5, 7))),
                            'parity')

    def test_half_cycle_neighbours_fail_parity(self):
        """for odd l, chords l - 1 or l + 1 apart are caught by parity"""
        self.assertViolates(generators.DouHSpec(5, ((1, 5), (6, 10))),
                            'parity')
        self.assertViolates(generators.DouHSpec(5, ((1, 7), (2, 6))),
                            'parity')

    def test_odd_specs_reduce_to_chords(self):
        """folded onto the half cycle, no chord of an odd spec becomes a
        cycle edge"""
        for ell in (3, 5):
            for spec in generators.dou_specs(ell):
                for i, j in spec.chords:
                    x, y = sorted(((i - 1) % ell, (j - 1) % ell))
                    self.assertNotIn(y - x, (0, 1, ell - 1), spec)

    def test_shift_closed(self):
        self.assertViolates(generators.DouHSpec(4, ((1, 4),)),
                            'shift_closed')

    def test_crossing(self):
        self.assertViolates(
            generators.DouHSpec(6, ((1, 4), (7, 10), (2, 5), (8, 11))),
            'crossing')

    def test_specs(self):
        specs = generators.dou_specs(4)
        self.assertEqual(specs[0], generators.DouHSpec(4, ()))
        self.assertIn(generators.DouHSpec(4, ((2, 7), (3, 6))), specs)

    def test_dou_j_rejects_non_cycle(self):
        self.assertRaises(generators.BadParams, generators.dou_J,
                          generators.cube())


class RepresentativeTests(unittest.TestCase):

    def test_two_connected_representative(self):
        c0 = generators.c0_representative()
        self.assertEqual(c0.n, 12)
        self.assertEqual(set(graph.degree_sequence(c0)), {3})
        self.assertEqual(graph.vertex_connectivity(c0), 2)
        self.assertTrue(planar.is_planar(c0))

    def test_pairwise_meeting_representative(self):
        c2 = generators.c2_representative()
        self.assertEqual(c2.n, 28)
        self.assertEqual(set(graph.degree_sequence(c2)), {3})
        self.assertTrue(planar.is_polyhedron(c2))
