"""Exact quasi-orthogonality toolkit for hypergeometric and q-hypergeometric
orthogonal polynomial families: family construction, parameter-shift relation
verification and discovery, quasi-orthogonality order, and certified zero
location / interlacing.
"""

from .exactnum import (
    GaussianRational,
    QBase,
    as_fraction,
    as_scalar,
    format_scalar,
    parse_scalar,
    pochhammer,
    qpochhammer,
    qpochhammer_multi,
)
from .polyalg import (
    Poly,
    RootBox,
    count_roots_in,
    expand_in_basis,
    make_monic,
    refine_root,
    sturm_isolate,
    ttrr_extract,
)

__version__ = "0.1.0"

__all__ = [
    "GaussianRational",
    "QBase",
    "Poly",
    "RootBox",
    "as_fraction",
    "as_scalar",
    "count_roots_in",
    "expand_in_basis",
    "format_scalar",
    "make_monic",
    "parse_scalar",
    "pochhammer",
    "qpochhammer",
    "qpochhammer_multi",
    "refine_root",
    "sturm_isolate",
    "ttrr_extract",
]
