# Tests for envelopes, q curves and the reports built on them
import unittest
import sys
import os

# Add the parent directory to the path to import modules
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from fractions import Fraction
from unittest.mock import patch

from config.constants import WITHIN_WINDOW, CatalogSide
from crg.constructions import make_kwb
from embed.graph_embed import embeds
from enumeration.catalog import Catalog, CatalogEntry, enumerate_catalog
from envelope.curves import (
    ed_upper_bound_chi, envelope, path_catalog, q_curve, uniform_grid,
)
from envelope.probes import (
    accumulation_probe, path_joins, path_upper_bound, path_upper_bound_check, pathbound_check,
    slope_at_zero_demo, symmetry_check, zero_regularity_probe,
)
from graphs.family import FamilySpec, bipartite, cycles_ge
from graphs.simple_graph import complete_bipartite, complete_graph, empty_graph, star_graph
from utils.error_handler import PreconditionError

K33 = FamilySpec(generators=(bipartite(3, 3),))
SLOW = os.environ.get("EDFN_SLOW_TESTS") == "1"


def single_white_catalog() -> Catalog:
    return Catalog(K33, CatalogSide.ZERO_CORE, 1, 0, (CatalogEntry("c000", make_kwb(1, 0), "W|"),))


class TestGrid(unittest.TestCase):
    """Test cases for uniform_grid"""

    def test_exact_grid(self):
        self.assertEqual(uniform_grid(4, exact=True), [Fraction(1, 8), Fraction(1, 4), Fraction(3, 8), Fraction(1, 2)])

    def test_float_grid(self):
        grid = uniform_grid(5, upper=1)
        self.assertEqual(len(grid), 5)
        self.assertAlmostEqual(grid[-1], 1.0)
        with self.assertRaises(PreconditionError):
            uniform_grid(0)


class TestEnvelope(unittest.TestCase):
    """Test cases for the lower envelope over a catalog"""

    def test_single_white_vertex(self):
        curve = envelope(single_white_catalog(), uniform_grid(8, exact=True), threads=1)
        for point in curve.points:
            self.assertEqual(point.value, point.p)
            self.assertEqual(point.attainers, ("c000",))
        self.assertEqual(curve.changepoints, ())
        self.assertEqual(curve.concavity_violation, 0)

    def test_changepoint_is_located(self):
        entries = (CatalogEntry("c000", make_kwb(1, 0), "W|"), CatalogEntry("c001", make_kwb(0, 1), "B|"))
        catalog = Catalog(K33, CatalogSide.ZERO_CORE, 1, 1, entries)
        curve = envelope(catalog, [0.2, 0.4, 0.6, 0.8], threads=1)
        self.assertEqual(len(curve.changepoints), 1)
        self.assertAlmostEqual(curve.changepoints[0], 0.5, places=5)
        self.assertAlmostEqual(curve.value_at(0.8), 0.2)

    def test_concave_and_threaded(self):
        catalog = enumerate_catalog(K33, 1, 3, threads=1)
        grid = uniform_grid(32)
        serial = envelope(catalog, grid, threads=1)
        parallel = envelope(catalog, grid, threads=4)
        self.assertLessEqual(serial.concavity_violation, 1e-9)
        self.assertEqual(serial.values, parallel.values)
        self.assertEqual(serial.attainers, parallel.attainers)

    def test_to_dict(self):
        data = envelope(single_white_catalog(), [Fraction(1, 4)], threads=1).to_dict()
        self.assertEqual(data["points"], [{"p": "1/4", "value": "1/4", "attainer_ids": ["c000"]}])
        self.assertEqual(data["names"], {"c000": "K(1,0)"})
        self.assertEqual(data["bounds"], {"max_white": 1, "max_black": 0})

    def test_preconditions(self):
        empty = Catalog(K33, CatalogSide.ZERO_CORE, 1, 0, ())
        with self.assertRaises(PreconditionError):
            envelope(empty, [0.2])
        with self.assertRaises(PreconditionError):
            envelope(single_white_catalog(), [0.0, 0.2])
        with self.assertRaises(PreconditionError):
            envelope(single_white_catalog(), [0.3, 0.2])
        with self.assertRaises(KeyError):
            envelope(single_white_catalog(), [0.2], threads=1).value_at(0.3)


class TestQCurve(unittest.TestCase):
    """Test cases for the small-p minimand"""

    def test_k33(self):
        grid = uniform_grid(16, exact=True)
        curve = q_curve(K33, grid, max_black=3, threads=1)
        self.assertEqual(len(curve.points), 16)
        for point in curve.points:
            p = point.p
            self.assertEqual(point.value, p * (1 - p) / (1 + p))
            self.assertEqual(curve.names[point.attainers[0]], "K(1,2)")

    def test_k33_attainer_is_certified(self):
        k33 = complete_bipartite(3, 3)
        self.assertFalse(embeds(k33, make_kwb(1, 2)).embeds)
        self.assertTrue(embeds(k33, make_kwb(1, 3)).embeds)

    def test_k29(self):
        spec = FamilySpec(generators=(bipartite(2, 9),))
        curve = q_curve(spec, uniform_grid(16, exact=True), max_black=4, threads=1)
        self.assertEqual(len(curve.points), 16)
        for point in curve.points:
            self.assertEqual(point.value, point.p * (1 - point.p))

    def test_k22_attainer(self):
        spec = FamilySpec((complete_bipartite(2, 2),))
        catalog = enumerate_catalog(spec, 2, 3, threads=1)
        curve = q_curve(spec, [0.1, 0.2, 0.3, 0.4], catalog=catalog, threads=1)
        for index in range(len(curve.points)):
            self.assertEqual(curve.attainer_names(index), ["K(1,1)"])

    def test_requires_chromatic_number(self):
        with self.assertRaises(PreconditionError):
            q_curve(FamilySpec((empty_graph(3),)), [0.2])

    def test_chi_bound(self):
        self.assertEqual(ed_upper_bound_chi(K33, Fraction(1, 5)), Fraction(1, 5))
        self.assertEqual(ed_upper_bound_chi(FamilySpec((complete_graph(4),)), Fraction(3, 10)), Fraction(1, 10))
        self.assertAlmostEqual(ed_upper_bound_chi(FamilySpec((complete_graph(4),), (cycles_ge(5),)), 0.3), 0.3)
        catalog = enumerate_catalog(K33, 1, 3, threads=1)
        self.assertEqual(ed_upper_bound_chi(K33, Fraction(1, 5), catalog), Fraction(1, 5))


class TestPathProbes(unittest.TestCase):
    """Test cases for gray paths at and near 1/4"""

    def test_pathbound(self):
        report = pathbound_check(list(path_joins(5)))
        self.assertTrue(report["ok"])
        self.assertEqual(len(report["rows"]), 18)
        for row in report["rows"]:
            self.assertEqual(row["residual"], "0")
            self.assertTrue(row["identity_holds"])
        by_name = {row["name"]: row for row in report["rows"]}
        self.assertEqual(by_name["P3"]["g"], "3/10")

    def test_pathbound_requires_identity(self):
        with patch('envelope.probes.path_identity_residual', return_value=Fraction(1)):
            report = pathbound_check([[3]])
        self.assertTrue(report["rows"][0]["exceeds_quarter"])
        self.assertFalse(report["rows"][0]["identity_holds"])
        self.assertFalse(report["ok"])

    @unittest.skipUnless(SLOW, "set EDFN_SLOW_TESTS=1 for path joins up to ten vertices")
    def test_pathbound_up_to_ten(self):
        report = pathbound_check(list(path_joins(10)))
        self.assertTrue(report["ok"])
        self.assertEqual(len(report["rows"]), 138)
        self.assertTrue(all(row["residual"] == "0" for row in report["rows"]))

    def test_path_upper_bound(self):
        self.assertEqual(path_upper_bound(3, Fraction(1, 4)), Fraction(13, 36))
        self.assertTrue(path_upper_bound_check(3, Fraction(1, 4))["holds"])
        self.assertTrue(path_upper_bound_check(12, 0.3)["holds"])
        with self.assertRaises(PreconditionError):
            path_upper_bound_check(0, 0.3)

    def test_accumulation_toward_quarter(self):
        spec = FamilySpec((star_graph(4),), (cycles_ge(5),))
        approach = [0.30, 0.27, 0.26, 0.255]
        report = accumulation_probe(path_catalog(spec, 40), Fraction(1, 4), approach)
        for row, p in zip(report["rows"], approach):
            self.assertLess(float(row["value"]), p)
            self.assertIsNotNone(row["path_index"])
        # longer paths attain as p falls toward 1/4
        indices = [row["path_index"] for row in report["rows"]]
        self.assertEqual(indices, sorted(indices))
        self.assertTrue(report["path_index_nondecreasing"])
        self.assertGreaterEqual(indices[2], 3)
        self.assertEqual(report["label"], WITHIN_WINDOW)

    def test_accumulation_preconditions(self):
        catalog = path_catalog(K33, 5)
        with self.assertRaises(PreconditionError):
            accumulation_probe(catalog, 0.25, [])
        with self.assertRaises(PreconditionError):
            accumulation_probe(catalog, 0.25, [0.3, 0.2])
        with self.assertRaises(PreconditionError):
            accumulation_probe(catalog, 0.25, [0.26, 0.3])


class TestSymmetryAndSmallP(unittest.TestCase):
    """Test cases for the complement symmetry and the slope at zero"""

    def test_symmetry(self):
        catalog = enumerate_catalog(K33, 2, 3, threads=1)
        self.assertTrue(all(entry.crg.k <= 5 for entry in catalog.entries))
        report = symmetry_check(catalog, [Fraction(i, 9) for i in range(1, 9)])
        self.assertTrue(report["ok"])
        self.assertEqual(report["max_entry_residual"], 0)

    def test_slope_demo(self):
        catalog = enumerate_catalog(FamilySpec((complete_graph(3),)), 2, 1, threads=1)
        report = slope_at_zero_demo(catalog, [Fraction(1, 1000), Fraction(1, 10)])
        self.assertEqual(report["chi"], 3)
        self.assertTrue(report["demonstration"])
        self.assertEqual([row["ratio"] for row in report["rows"]], ["1/2", "1/2"])
        self.assertEqual([row["in_regime"] for row in report["rows"]], [True, False])
        with self.assertRaises(PreconditionError):
            slope_at_zero_demo(catalog, [0])

    def test_zero_regularity(self):
        catalog = enumerate_catalog(FamilySpec((complete_graph(3),)), 2, 1, threads=1)
        report = zero_regularity_probe(catalog, [Fraction(1, 100)])
        self.assertTrue(report["rows"][0]["equal"])
        self.assertEqual(report["rows"][0]["beaters"], [])


if __name__ == '__main__':
    unittest.main()
