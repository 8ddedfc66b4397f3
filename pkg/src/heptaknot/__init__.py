"""Figure-8 recognition for heptagonal knots from penetration sign tables,
checked against an Alexander-matrix oracle, plus knot censuses of K6/K7 drawings."""

__version__ = "0.1.0"

from .geometry import (  # noqa: E402
    DegenerateInput,
    Point3,
    epsilon,
    general_position_check,
    orient3d,
    point,
    side_of_plane,
)
from .oracle import KnotClass, classify_knot, knot_determinant, linking_number  # noqa: E402
from .radon import Heptagon, Labeling, PenetrationTable, build_table, classify_by_radon, match_rs  # noqa: E402
from .census import census, enumerate_cycles, max_search, sample_embedding  # noqa: E402
