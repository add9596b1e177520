# Bounded catalogs of core CRGs for a forbidden family
from enumeration.catalog import Catalog, CatalogEntry, enumerate_catalog, filter_p_core, one_core_window

__all__ = ["Catalog", "CatalogEntry", "enumerate_catalog", "filter_p_core", "one_core_window"]
