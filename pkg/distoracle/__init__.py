# Exhaustive edit-distance oracle for small graphs
from distoracle.oracle import DensitySample, dist_graphs, dist_to_property, is_family_free, max_dist_at_density

__all__ = ["DensitySample", "dist_graphs", "dist_to_property", "is_family_free", "max_dist_at_density"]
