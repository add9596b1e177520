# Envelope curves and the reports built on them
from envelope.curves import EnvelopeCurve, envelope, ed_upper_bound_chi, path_catalog, q_curve, uniform_grid

__all__ = ["EnvelopeCurve", "envelope", "ed_upper_bound_chi", "path_catalog", "q_curve", "uniform_grid"]
