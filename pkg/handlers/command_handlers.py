"""
Command handlers for the edfn command line.
Each handler takes the parsed argparse namespace and returns an exit code.
"""
import logging
from fractions import Fraction
from typing import List, Optional

from config.config_manager import (
    crg_bounds, crg_hash, digest, load_crg_file, load_json, load_property_spec, spec_hash,
)
from config.constants import CatalogSide, SolveMode, WITHIN_WINDOW
from cache.catalog_store import get_catalog
from crg.colored_graph import blowup_mass, max_p_degree
from crg.constructions import is_one_core, is_zero_core
from distoracle.oracle import dist_to_property, max_dist_at_density
from embed.graph_embed import embeds, family_embeds
from enumeration.catalog import Catalog, filter_p_core
from envelope.curves import ed_upper_bound_chi, envelope, path_catalog, q_curve, uniform_grid
from envelope.probes import (
    accumulation_probe, path_joins, path_upper_bound_check, pathbound_check,
    slope_at_zero_demo, symmetry_check, zero_regularity_probe,
)
from graphs.family import family_chi, family_clique_cover
from graphs.graph6_io import parse_graph6
from graphs.invariants import chromatic_number, clique_cover_number
from solver.core import core_record
from solver.qp import solve_g
from utils.error_handler import SpecFormatError, safe_command
from utils.numeric import format_number, mode_for, parse_probability
from utils.output import write_curve_csv, write_json
from utils.version import output_metadata

logger = logging.getLogger(__name__)


###############################################################################
#                              HELPERS
###############################################################################

def _probability_list(text: str, field: str) -> List:
    try:
        return [parse_probability(item, field) for item in text.split(",") if item.strip()]
    except SpecFormatError:
        raise
    except ValueError as e:
        raise SpecFormatError(field, str(e))


def _int_list(text: str, field: str) -> List[int]:
    try:
        return [int(item) for item in text.split(",") if item.strip()]
    except ValueError:
        raise SpecFormatError(field, f"expected comma-separated integers, got {text!r}")


def _mode(args, p) -> Optional[SolveMode]:
    return mode_for(p, True) if getattr(args, "exact", False) else None


def _catalog(args) -> Catalog:
    """Catalog from --catalog, or --spec with --paths or --max-white/--max-black."""
    if getattr(args, "catalog", None):
        return Catalog.from_dict(load_json(args.catalog))
    if not args.spec:
        raise SpecFormatError("spec", "either --spec or --catalog is required")
    spec = load_property_spec(args.spec)
    if getattr(args, "paths", None):
        return path_catalog(spec, args.paths)
    side = CatalogSide(getattr(args, "side", CatalogSide.ZERO_CORE.value))
    return get_catalog(spec, args.max_white, args.max_black, side,
                       threads=args.threads, use_cache=not args.no_cache)


def _grid(args):
    points = uniform_grid(args.grid, exact=args.exact, upper=parse_probability(args.upper, "upper"))
    return [p for p in points if p < 1]


def _curve_rows(curve):
    return [(pt.p, pt.value, pt.attainers) for pt in curve.points]


def _crg_metadata(crg, spec=None) -> dict:
    """spec_hash names the property when one was given, else the CRG itself."""
    metadata = output_metadata(spec_hash(spec) if spec is not None else crg_hash(crg), crg_bounds(crg))
    metadata["crg_hash"] = crg_hash(crg)
    return metadata


###############################################################################
#                          CRG COMMANDS
###############################################################################

@safe_command("g-value")
def g_value_command(args) -> int:
    crg = load_crg_file(args.crg)
    p = parse_probability(args.p)
    record = solve_g(crg, p, _mode(args, p))
    result = {"crg": crg.label(), "p": format_number(p), **record.to_dict(), **_crg_metadata(crg)}
    write_json(result, args.out)
    return 0


@safe_command("core-check")
def core_check_command(args) -> int:
    crg = load_crg_file(args.crg)
    p = parse_probability(args.p)
    result = {"crg": crg.label(), "p": format_number(p), **_crg_metadata(crg)}
    if p == 0:
        result["core"] = is_zero_core(crg)
    elif p == 1:
        result["core"] = is_one_core(crg)
    else:
        record = core_record(crg, p, _mode(args, p))
        result.update(record.to_dict())
        result["core"] = record.p_core
    write_json(result, args.out)
    return 0


@safe_command("embed")
def embed_command(args) -> int:
    crg = load_crg_file(args.crg)
    spec = None
    if args.graph:
        graph = parse_graph6(args.graph)
        result = embeds(graph, crg).to_dict()
    else:
        spec = load_property_spec(args.spec)
        verdict = family_embeds(spec, crg)
        if verdict.bounded:
            logger.warning(f"negative verdict for {crg.label()} only covers cycles up to {verdict.cycle_bound}")
        result = verdict.to_dict()
    result.update({"crg": crg.label(), **_crg_metadata(crg, spec)})
    write_json(result, args.out)
    return 0


@safe_command("blowup-degree")
def blowup_degree_command(args) -> int:
    """|Delta_p(K[mu,n])/|K[mu,n]| - g_K(p)| for growing n, with mu the minimizer."""
    crg = load_crg_file(args.crg)
    p = parse_probability(args.p)
    record = solve_g(crg, p, _mode(args, p))
    rows = []
    previous = None
    for n in _int_list(args.sizes, "sizes"):
        blown = blowup_mass(crg, record.minimizer, n)
        ratio = max_p_degree(blown, p) / Fraction(blown.size) if isinstance(p, Fraction) \
            else max_p_degree(blown, p) / blown.size
        error = abs(ratio - record.g)
        rows.append({
            "n": n,
            "size": blown.size,
            "ratio": format_number(ratio),
            "error": format_number(error),
            "error_times_n": format_number(error * n),
            "error_ratio": format_number(previous / error) if previous and error else None,
        })
        previous = error
    write_json({"crg": crg.label(), "p": format_number(p), "g": format_number(record.g),
                "rows": rows, **_crg_metadata(crg)}, args.out)
    return 0


###############################################################################
#                        CATALOG COMMANDS
###############################################################################

@safe_command("enumerate")
def enumerate_command(args) -> int:
    catalog = _catalog(args)
    if args.p_core:
        catalog = filter_p_core(catalog, parse_probability(args.p_core, "p-core"))
    data = catalog.to_dict()
    data.update(output_metadata(catalog.property_hash, catalog.bounds))
    write_json(data, args.out)
    return 0


@safe_command("envelope")
def envelope_command(args) -> int:
    catalog = _catalog(args)
    curve = envelope(catalog, _grid(args), threads=args.threads)
    metadata = output_metadata(catalog.property_hash, catalog.bounds)
    write_curve_csv(_curve_rows(curve), args.out, {**metadata, "label": WITHIN_WINDOW})
    if args.json:
        write_json({**curve.to_dict(), **metadata}, args.json)
    return 0


@safe_command("q-curve")
def q_curve_command(args) -> int:
    spec = load_property_spec(args.spec)
    curve = q_curve(spec, _grid(args), max_black=args.max_black, threads=args.threads)
    metadata = output_metadata(curve.property_hash, curve.bounds)
    write_curve_csv(_curve_rows(curve), args.out, {**metadata, "label": WITHIN_WINDOW})
    if args.json:
        write_json({**curve.to_dict(), **metadata}, args.json)
    return 0


@safe_command("pathbound")
def pathbound_command(args) -> int:
    mode = SolveMode.EXACT if args.exact else SolveMode.FLOAT
    report = pathbound_check(list(path_joins(args.max_total)), mode)
    if args.upper_n:
        p = parse_probability(args.p)
        report["upper_bound"] = [path_upper_bound_check(n, p) for n in _int_list(args.upper_n, "upper-n")]
    write_json({**report, **output_metadata(bounds={"max_total": args.max_total})}, args.out)
    return 0 if report["ok"] else 1


@safe_command("probe")
def probe_command(args) -> int:
    catalog = _catalog(args)
    report = accumulation_probe(catalog, parse_probability(args.target, "target"),
                                _probability_list(args.approach, "approach"))
    write_json({**report, **output_metadata(catalog.property_hash, catalog.bounds)}, args.out)
    return 0


@safe_command("symmetry")
def symmetry_command(args) -> int:
    catalog = _catalog(args)
    report = symmetry_check(catalog, _grid(args))
    write_json({**report, **output_metadata(catalog.property_hash, catalog.bounds)}, args.out)
    return 0


@safe_command("slope-demo")
def slope_demo_command(args) -> int:
    catalog = _catalog(args)
    probes = _probability_list(args.probes, "probes")
    report = slope_at_zero_demo(catalog, probes)
    report["chi_bound"] = [format_number(ed_upper_bound_chi(catalog.spec, p, catalog)) for p in probes]
    if args.zero_regularity:
        report["zero_regularity"] = zero_regularity_probe(catalog, probes)
    write_json({**report, **output_metadata(catalog.property_hash, catalog.bounds)}, args.out)
    return 0


###############################################################################
#                        GRAPH COMMANDS
###############################################################################

@safe_command("dist-exact")
def dist_exact_command(args) -> int:
    spec = load_property_spec(args.spec)
    if args.graph:
        graph = parse_graph6(args.graph)
        result = {"graph6": args.graph.strip(), "n": graph.n,
                  "dist": format_number(dist_to_property(graph, spec))}
    else:
        p = parse_probability(args.p)
        result = max_dist_at_density(args.n, p, spec).to_dict()
    write_json({**result, **output_metadata(spec_hash(spec))}, args.out)
    return 0


@safe_command("chi")
def chi_command(args) -> int:
    if args.graph:
        graph = parse_graph6(args.graph)
        result = {"chi": chromatic_number(graph), "clique_cover": clique_cover_number(graph)}
        input_hash = digest(args.graph.strip())
    else:
        spec = load_property_spec(args.spec)
        result = {"chi": family_chi(spec), "clique_cover": family_clique_cover(spec)}
        input_hash = spec_hash(spec)
    write_json({**result, **output_metadata(input_hash)}, args.out)
    return 0
