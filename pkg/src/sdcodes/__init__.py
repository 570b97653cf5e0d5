"""Self-dual codes from circulant blocks over F2, F2+uF2 and the 16-element ring.

The package builds generator matrices with the classic, modified and
bordered four-circulant constructions and the two-coordinate extension,
maps ring codes to binary through the Gray maps, enumerates weight
distributions with a bit-packed Gray-code walk, and classifies extremal
codes of lengths 64/66/68 into their weight-enumerator families.
"""

from .bits import BitMatrix, BitVector, is_doubly_even, is_self_dual, rank, rref
from .circulant import (
    CirculantKind,
    CirculantSpec,
    RingMatrix,
    backdiagonal,
    build,
    is_lambda_circulant,
    is_lambda_reverse_circulant,
    rho_lambda,
    sigma_lambda,
)
from .codec import (
    format_element,
    format_row,
    parse_element,
    parse_record,
    parse_row,
    read_records,
    serialize_record,
    write_records,
)
from .constructions import (
    CodeRecord,
    analyze_record,
    binary_generator,
    bordered_four_circulant,
    extend,
    four_circulant_classic,
    gray_image_record,
    modified_four_circulant,
    phi_u_record,
)
from .errors import CodesError, ConfigInvalid
from .rings import (
    Alphabet,
    RingElement,
    RingVector,
    gray_phi1,
    gray_phi2,
    inner_product,
    phi_u,
    units,
)
from .search import SearchConfig, SearchReport, Target, run_search
from .tables import TABLES, build_row, check_table_integrity, verify_table
from .weightdist import (
    CodeAnalysis,
    EnumeratorClass,
    Family,
    WeightProfile,
    classify,
    is_extremal,
    minimum_distance,
    rains_bound,
    weight_distribution,
)

__version__ = "0.1.0"

__all__ = [
    "Alphabet",
    "BitMatrix",
    "BitVector",
    "CirculantKind",
    "CirculantSpec",
    "CodeAnalysis",
    "CodeRecord",
    "CodesError",
    "ConfigInvalid",
    "EnumeratorClass",
    "Family",
    "RingElement",
    "RingMatrix",
    "RingVector",
    "SearchConfig",
    "SearchReport",
    "TABLES",
    "Target",
    "WeightProfile",
    "analyze_record",
    "backdiagonal",
    "binary_generator",
    "bordered_four_circulant",
    "build",
    "build_row",
    "check_table_integrity",
    "classify",
    "extend",
    "format_element",
    "format_row",
    "four_circulant_classic",
    "gray_image_record",
    "gray_phi1",
    "gray_phi2",
    "inner_product",
    "is_doubly_even",
    "is_extremal",
    "is_lambda_circulant",
    "is_lambda_reverse_circulant",
    "is_self_dual",
    "minimum_distance",
    "modified_four_circulant",
    "parse_element",
    "parse_record",
    "parse_row",
    "phi_u",
    "phi_u_record",
    "rains_bound",
    "rank",
    "read_records",
    "rho_lambda",
    "rref",
    "run_search",
    "serialize_record",
    "sigma_lambda",
    "units",
    "verify_table",
    "weight_distribution",
    "write_records",
]
