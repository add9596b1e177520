# Tests for colored regularity graphs, their constructions, formats and blow-ups
import unittest
import sys
import os
import tempfile

# Add the parent directory to the path to import modules
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from fractions import Fraction

import numpy as np
from hypothesis import given, settings, strategies as st

from config.constants import CatalogSide
from crg.canonical import canonical_crg, canonical_form, crg_isomorphic, relabel
from crg.colored_graph import (
    ColoredGraph, blowup_mass, blowup_uniform, gray_blowup_report, max_p_degree, p_degrees,
)
from crg.constructions import (
    complement_crg, dalmatian, delete_vertex, gray_join, is_one_core, is_zero_core,
    make_kwb, make_path_crg, random_crg, recolor_edge, sub_crg, white_join, white_join_paths,
    white_split,
)
from crg.crg_io import (
    crg_from_dict, crg_to_dict, emit_crg_text, parse_crg_text, read_crg_file, write_crg_file,
)
from crg.model import Crg, EdgeColor, ProbMass, VertexColor, pair_index
from utils.error_handler import CrgFormatError, EmptyCrgError, NotCoreError, PreconditionError

W, B = VertexColor.WHITE, VertexColor.BLACK
seeds = st.integers(min_value=0, max_value=2 ** 32 - 1)


class TestCrgModel(unittest.TestCase):
    """Test cases for Crg and ProbMass"""

    def test_pair_index(self):
        k = 5
        positions = [pair_index(k, i, j) for i in range(k) for j in range(i + 1, k)]
        self.assertEqual(positions, list(range(10)))
        self.assertEqual(pair_index(k, 3, 1), pair_index(k, 1, 3))

    def test_invalid_crg(self):
        with self.assertRaises(EmptyCrgError):
            Crg((), ())
        with self.assertRaises(PreconditionError):
            Crg((W, B), ())

    def test_name_does_not_affect_equality(self):
        self.assertEqual(make_kwb(1, 1), make_kwb(1, 1).renamed("other"))
        self.assertEqual(hash(make_kwb(2, 1)), hash(make_kwb(2, 1).renamed("x")))

    def test_prob_mass(self):
        self.assertTrue(ProbMass.uniform(3).is_exact)
        self.assertEqual(ProbMass.normalized([1, 3]).weights, (Fraction(1, 4), Fraction(3, 4)))
        self.assertEqual(ProbMass((Fraction(1, 2), Fraction(0), Fraction(1, 2))).support, (0, 2))
        with self.assertRaises(PreconditionError):
            ProbMass((Fraction(1, 2), Fraction(1, 3)))
        with self.assertRaises(PreconditionError):
            ProbMass((1.5, -0.5))


class TestConstructions(unittest.TestCase):
    """Test cases for K(w,b), paths, joins and dalmatians"""

    def test_kwb(self):
        crg = make_kwb(2, 3)
        self.assertEqual(crg.white_vertices, [0, 1])
        self.assertEqual(len(crg.gray_edges), 10)
        self.assertEqual(crg.label(), "K(2,3)")
        with self.assertRaises(EmptyCrgError):
            make_kwb(0, 0)

    def test_path(self):
        path = make_path_crg(4)
        self.assertEqual(path.gray_edges, [(0, 1), (1, 2), (2, 3)])
        self.assertEqual(len(path.white_edges), 3)
        self.assertEqual(path.black_vertices, [0, 1, 2, 3])
        self.assertTrue(is_zero_core(path))

    def test_joins(self):
        joined = white_join_paths([3, 2])
        self.assertEqual(joined.k, 5)
        self.assertEqual(joined.edge(2, 3), EdgeColor.WHITE)
        self.assertEqual(joined.edge(3, 4), EdgeColor.GRAY)
        self.assertEqual(joined.label(), "P3vP2")
        self.assertEqual(gray_join(make_kwb(1, 0), make_kwb(0, 1)), make_kwb(1, 1))
        self.assertEqual(white_join(make_path_crg(1), make_path_crg(1)).edge(0, 1), EdgeColor.WHITE)

    def test_complement(self):
        path = make_path_crg(3)
        co = complement_crg(path)
        self.assertEqual(co.white_vertices, [0, 1, 2])
        self.assertEqual(co.edge(0, 2), EdgeColor.BLACK)
        self.assertEqual(co.label(), "co-P3")
        self.assertEqual(complement_crg(co), path)
        self.assertTrue(is_one_core(co))

    @given(seeds)
    def test_complement_is_involution(self, seed):
        crg = random_crg(5, np.random.default_rng(seed))
        self.assertEqual(complement_crg(complement_crg(crg)), crg)

    def test_core_structure(self):
        self.assertTrue(is_zero_core(make_kwb(2, 2)))
        self.assertTrue(is_one_core(make_kwb(2, 2)))
        white_between_whites = Crg.build([W, W], lambda i, j: EdgeColor.WHITE)
        self.assertFalse(is_zero_core(white_between_whites))
        self.assertFalse(is_zero_core(Crg.build([B, B], lambda i, j: EdgeColor.BLACK)))

    @given(seeds)
    def test_random_side_crgs_are_core(self, seed):
        rng = np.random.default_rng(seed)
        self.assertTrue(is_zero_core(random_crg(6, rng, CatalogSide.ZERO_CORE)))
        self.assertTrue(is_one_core(random_crg(6, rng, CatalogSide.ONE_CORE)))

    def test_sub_and_delete(self):
        path = make_path_crg(4)
        self.assertEqual(sub_crg(path, [0, 1]), make_path_crg(2).renamed(""))
        self.assertEqual(delete_vertex(path, 3), make_path_crg(3))
        with self.assertRaises(PreconditionError):
            sub_crg(path, [7])

    def test_recolor(self):
        recolored = recolor_edge(make_path_crg(3), (2, 0), EdgeColor.GRAY)
        self.assertEqual(len(recolored.gray_edges), 3)

    def test_white_split(self):
        crg = gray_join(make_kwb(2, 0), make_path_crg(3))
        whites, black = white_split(crg)
        self.assertEqual(whites, 2)
        self.assertEqual(black, make_path_crg(3))
        self.assertEqual(white_split(make_kwb(3, 0)), (3, None))
        with self.assertRaises(NotCoreError):
            white_split(complement_crg(make_path_crg(3)))

    def test_dalmatian(self):
        crg = make_kwb(2, 1)
        spotted = dalmatian(crg, 3, 1)
        self.assertEqual(spotted.k, 5)
        self.assertEqual(len(spotted.white_vertices), 1)
        # copies of the replaced vertex are joined by white edges
        self.assertEqual(spotted.edge(0, 1), EdgeColor.WHITE)
        self.assertEqual(spotted.edge(0, 3), EdgeColor.GRAY)
        self.assertTrue(is_zero_core(spotted))
        with self.assertRaises(PreconditionError):
            dalmatian(crg, 2, 3)


class TestCanonicalForm(unittest.TestCase):
    """Test cases for canonical labeling"""

    def test_distinguishes(self):
        self.assertNotEqual(canonical_form(make_kwb(1, 1)), canonical_form(make_kwb(2, 0)))
        self.assertNotEqual(canonical_form(make_path_crg(3)), canonical_form(white_join_paths([2, 1])))
        self.assertEqual(canonical_form(make_kwb(1, 0)), "W|")

    @given(seeds)
    @settings(max_examples=50, deadline=None)
    def test_invariant_under_relabeling(self, seed):
        rng = np.random.default_rng(seed)
        crg = random_crg(6, rng)
        order = [int(v) for v in rng.permutation(crg.k)]
        shuffled = relabel(crg, order)
        self.assertEqual(canonical_form(shuffled), canonical_form(crg))
        self.assertTrue(crg_isomorphic(shuffled, crg))
        self.assertEqual(canonical_crg(shuffled), canonical_crg(crg))

    def test_path_orientations(self):
        path = make_path_crg(5)
        self.assertEqual(canonical_form(relabel(path, [4, 3, 2, 1, 0])), canonical_form(path))


class TestCrgIO(unittest.TestCase):
    """Test cases for the CRG text and JSON formats"""

    def setUp(self):
        self.crg = gray_join(make_kwb(1, 0), make_path_crg(2))

    def test_emit_text(self):
        self.assertEqual(emit_crg_text(self.crg), "3\nWBB\ngg\ng\n")
        self.assertEqual(parse_crg_text("3\nWBB\ngg\ng\n"), self.crg)

    def test_dict(self):
        data = crg_to_dict(self.crg)
        self.assertEqual(data, {"k": 3, "vcolors": "WBB", "ecolors": ["gg", "g"]})
        self.assertEqual(crg_from_dict(data), self.crg)

    def test_files(self):
        with tempfile.TemporaryDirectory() as root:
            for name in ("k.crg", "k.json"):
                path = os.path.join(root, name)
                write_crg_file(self.crg, path)
                self.assertEqual(read_crg_file(path), self.crg)

    def test_errors_carry_lines(self):
        with self.assertRaises(CrgFormatError) as ctx:
            parse_crg_text("x\n")
        self.assertEqual(ctx.exception.line, 1)
        with self.assertRaises(CrgFormatError) as ctx:
            parse_crg_text("2\nWX\ng\n")
        self.assertEqual(ctx.exception.line, 2)
        with self.assertRaises(CrgFormatError) as ctx:
            parse_crg_text("3\nWBB\ngq\ng\n")
        self.assertEqual(ctx.exception.line, 3)
        with self.assertRaises(CrgFormatError):
            crg_from_dict({"k": 2, "vcolors": "WB"})


class TestBlowups(unittest.TestCase):
    """Test cases for colored graphs and blow-ups"""

    def test_uniform_blowup(self):
        blown = blowup_uniform(make_path_crg(2), 3)
        self.assertEqual(blown.size, 6)
        self.assertEqual(blown.edge(0, 1), EdgeColor.BLACK)
        self.assertEqual(blown.edge(0, 4), EdgeColor.GRAY)
        self.assertEqual(blown.expand().edge(2, 3), EdgeColor.GRAY)

    def test_degrees_match_expansion(self):
        blown = blowup_uniform(white_join_paths([2, 1]), 2)
        p = Fraction(1, 3)
        explicit = p_degrees(blown.expand(), p)
        self.assertEqual(max(explicit), max_p_degree(blown, p))

    def test_explicit_graph(self):
        graph = ColoredGraph.explicit(3, [EdgeColor.WHITE, EdgeColor.BLACK, EdgeColor.GRAY])
        self.assertEqual(graph.edge(0, 2), EdgeColor.BLACK)
        self.assertEqual(p_degrees(graph, 0.5), [1.0, 0.5, 0.5])
        with self.assertRaises(PreconditionError):
            ColoredGraph.explicit(3, [EdgeColor.WHITE])

    def test_blowup_mass_converges_at_rate_one_over_n(self):
        # K(1,2) at p=1/4 has minimizer (3/5, 1/5, 1/5) and g = 3/20
        crg, p, g = make_kwb(1, 2), Fraction(1, 4), Fraction(3, 20)
        mu = ProbMass((Fraction(3, 5), Fraction(1, 5), Fraction(1, 5)))
        errors = []
        for n in (100, 1000, 10000):
            blown = blowup_mass(crg, mu, n)
            self.assertEqual(blown.size, n)
            errors.append(abs(max_p_degree(blown, p) / blown.size - g))
            self.assertEqual(errors[-1] * n, Fraction(1, 4))
        self.assertEqual(errors[0] / errors[1], 10)

    def test_gray_blowup_report(self):
        crg = make_kwb(1, 2)
        mu = ProbMass((Fraction(3, 5), Fraction(1, 5), Fraction(1, 5)))
        report = gray_blowup_report(crg, mu, 101)
        self.assertTrue(report["size_window_ok"])
        self.assertTrue(report["degree_bounds_ok"])
        self.assertEqual(report["max_part"], 60)


if __name__ == '__main__':
    unittest.main()
