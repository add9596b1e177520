# Tests for catalog enumeration of core CRGs avoiding a family
import unittest
import sys
import os
from fractions import Fraction
from itertools import product

# Add the parent directory to the path to import modules
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from config.constants import CatalogSide
from crg.canonical import canonical_form
from crg.constructions import (
    complement_crg, gray_join, is_zero_core, make_kwb, white_join, make_path_crg, white_join_paths,
)
from crg.model import Crg, EdgeColor, VertexColor
from embed.graph_embed import family_embeds
from enumeration.catalog import (
    Catalog, describe, enumerate_catalog, filter_p_core, one_core_window,
)
from envelope.probes import path_joins
from graphs.family import FamilySpec, bipartite, complement_family, cycles_ge, star
from graphs.simple_graph import complete_bipartite, complete_graph, star_graph
from utils.error_handler import CrgFormatError, PreconditionError, SizeCapError


def brute_force_keys(spec: FamilySpec, max_white: int, max_black: int):
    """Canonical keys of every 0-core F-free CRG in the window, by trying every coloring."""
    keys = set()
    for w in range(max_white + 1):
        for b in range(max_black + 1):
            k = w + b
            if k == 0:
                continue
            vcolors = [VertexColor.WHITE] * w + [VertexColor.BLACK] * b
            pairs = k * (k - 1) // 2
            for colors in product(list(EdgeColor), repeat=pairs):
                crg = Crg(tuple(vcolors), colors)
                if is_zero_core(crg) and not family_embeds(spec, crg).embeds:
                    keys.add(canonical_form(crg))
    return keys


def black_pair() -> Crg:
    """Two black vertices joined by a white edge."""
    return white_join(make_path_crg(1), make_path_crg(1))


class TestEnumerateCatalog(unittest.TestCase):
    """Test cases for enumerate_catalog"""

    def test_star_and_long_cycles(self):
        spec = FamilySpec((star_graph(4),), (cycles_ge(5),))
        catalog = enumerate_catalog(spec, 2, 6, threads=1)
        expected = {canonical_form(make_kwb(1, 0))}
        expected |= {canonical_form(white_join_paths(lengths)) for lengths in path_joins(6)}
        self.assertEqual(len(catalog), 30)
        self.assertEqual({e.canonical_key for e in catalog}, expected)
        self.assertGreater(catalog.bounded_verdicts, 0)
        names = {e.crg.name for e in catalog}
        self.assertIn("K(1,0)", names)
        self.assertIn("P3vP2", names)

    def test_single_edge(self):
        catalog = enumerate_catalog(FamilySpec((complete_graph(2),)), 1, 0, threads=1)
        self.assertEqual([e.crg.name for e in catalog], ["K(1,0)"])
        self.assertEqual(catalog.entries[0].id, "c000")

    def test_k33_one_white_slice(self):
        spec = FamilySpec(generators=(bipartite(3, 3),))
        sliced = enumerate_catalog(spec, 1, 3, threads=1).white_slice(1)
        expected = {
            canonical_form(make_kwb(1, 0)),
            canonical_form(make_kwb(1, 1)),
            canonical_form(make_kwb(1, 2)),
            canonical_form(gray_join(make_kwb(1, 0), black_pair())),
        }
        self.assertEqual({e.canonical_key for e in sliced}, expected)

    def test_matches_brute_force(self):
        spec = FamilySpec(generators=(star(3),))
        catalog = enumerate_catalog(spec, 2, 3, threads=1)
        self.assertEqual({e.canonical_key for e in catalog}, brute_force_keys(spec, 2, 3))

    def test_entries_are_zero_core_and_free(self):
        spec = FamilySpec((complete_bipartite(2, 2),))
        for entry in enumerate_catalog(spec, 2, 3, threads=1):
            self.assertTrue(is_zero_core(entry.crg))
            self.assertFalse(family_embeds(spec, entry.crg).embeds)

    def test_deterministic(self):
        spec = FamilySpec(generators=(bipartite(3, 3),))
        first = enumerate_catalog(spec, 2, 3, threads=1)
        second = enumerate_catalog(spec, 2, 3, threads=4)
        self.assertEqual(first.to_dict(), second.to_dict())
        ids = [e.id for e in first]
        self.assertEqual(ids, [f"c{i:03d}" for i in range(len(ids))])

    def test_bounds(self):
        spec = FamilySpec((complete_graph(3),))
        with self.assertRaises(SizeCapError):
            enumerate_catalog(spec, 5, 5)
        with self.assertRaises(PreconditionError):
            enumerate_catalog(spec, -1, 2)


class TestOneCoreWindow(unittest.TestCase):
    """Test cases for the color-swapped side"""

    def test_mirror_of_complement_family(self):
        spec = FamilySpec(generators=(star(3),))
        one_core = one_core_window(spec, 2, 1, threads=1)
        zero_core = enumerate_catalog(complement_family(spec), 1, 2, threads=1)
        self.assertEqual({e.canonical_key for e in one_core},
                         {canonical_form(complement_crg(e.crg)) for e in zero_core})
        self.assertEqual(one_core.side, CatalogSide.ONE_CORE)

    def test_names(self):
        self.assertEqual(describe(make_kwb(2, 1), CatalogSide.ONE_CORE), "K(2,1)")
        self.assertEqual(describe(complement_crg(white_join_paths([2, 1])), CatalogSide.ONE_CORE), "co-P2vP1")


class TestCatalogOperations(unittest.TestCase):
    """Test cases for catalog filtering and serialization"""

    def setUp(self):
        self.spec = FamilySpec(generators=(bipartite(3, 3),))
        self.catalog = enumerate_catalog(self.spec, 1, 3, threads=1)

    def test_filter_p_core(self):
        half = Fraction(1, 2)
        filtered = filter_p_core(self.catalog, half)
        keys = {e.canonical_key for e in filtered}
        self.assertIn(canonical_form(make_kwb(1, 2)), keys)
        self.assertNotIn(canonical_form(black_pair()), keys)
        self.assertEqual(filtered.core_p, half)
        self.assertLess(len(filtered), len(self.catalog))

    def test_filter_rejects_wrong_side(self):
        with self.assertRaises(PreconditionError):
            filter_p_core(self.catalog, Fraction(3, 4))

    def test_round_trip(self):
        restored = Catalog.from_dict(self.catalog.to_dict())
        self.assertEqual(restored, self.catalog)
        self.assertEqual([e.crg.name for e in restored], [e.crg.name for e in self.catalog])

    def test_malformed(self):
        data = self.catalog.to_dict()
        del data["entries"]
        with self.assertRaises(CrgFormatError):
            Catalog.from_dict(data)

    def test_lookup(self):
        first = self.catalog.entries[0]
        self.assertIs(self.catalog.by_id(first.id), first)
        with self.assertRaises(KeyError):
            self.catalog.by_id("missing")


if __name__ == '__main__':
    unittest.main()
