"""Fractional repetition codes: construction, hierarchies, bounds, products,
design-based optimality, and an end-to-end MDS + replication storage demo."""

from .bounds import (
    BoundProfile,
    bound_profile,
    dual_bound,
    dual_g_sequence,
    floor_bound,
    mbr_capacity,
    min_reconstruction_degree,
    recursive_bound,
)
from .catalog import (
    CatalogEntry,
    complete_graph_code,
    design_7_4_2,
    entries,
    fano_plane,
    octahedron_code,
    prism_code,
    repetition_code,
    trivial_code,
)
from .designs import (
    OptimalityReport,
    OptimalityRow,
    TDesign,
    block_count,
    check_design_optimality,
    design_from_json_text,
    design_hierarchy,
    design_to_fr,
    intersection_number,
    verify_t_design,
)
from .dress import (
    DressSystem,
    RepairResult,
    Transfer,
    distribute,
    mds_decode,
    mds_encode,
    reconstruct,
    repair,
)
from .errors import (
    DesignError,
    EnumerationLimitError,
    FormatError,
    FrCodesError,
    NotTacticalError,
    ParameterError,
    ReconstructionError,
    RepairError,
    StructureError,
)
from .hierarchy import (
    Hierarchy,
    ParetoPoint,
    complementary_size,
    dual_n_chain,
    full_hierarchy,
    hierarchy_from_dual,
    pareto_points,
    staircase_csv,
    supported_file_size,
)
from .incidence import (
    FrCode,
    IncidenceStructure,
    dual,
    from_blocks,
    from_json_text,
    from_matrix,
    from_matrix_text,
    is_simple,
    to_json_text,
    to_matrix_text,
    validate_fr,
)
from .products import (
    ProductSpec,
    gfr,
    gfr_hierarchy,
    repeat_blocks,
    stretch_chain,
    tensor,
    tensor_hierarchy,
)

__version__ = "0.1.0"

__all__ = [
    "BoundProfile",
    "CatalogEntry",
    "DesignError",
    "DressSystem",
    "EnumerationLimitError",
    "FormatError",
    "FrCode",
    "FrCodesError",
    "Hierarchy",
    "IncidenceStructure",
    "NotTacticalError",
    "OptimalityReport",
    "OptimalityRow",
    "ParameterError",
    "ParetoPoint",
    "ProductSpec",
    "ReconstructionError",
    "RepairError",
    "RepairResult",
    "StructureError",
    "TDesign",
    "Transfer",
    "block_count",
    "bound_profile",
    "check_design_optimality",
    "complementary_size",
    "complete_graph_code",
    "design_7_4_2",
    "design_from_json_text",
    "design_hierarchy",
    "design_to_fr",
    "distribute",
    "dual",
    "dual_bound",
    "dual_g_sequence",
    "dual_n_chain",
    "entries",
    "fano_plane",
    "floor_bound",
    "from_blocks",
    "from_json_text",
    "from_matrix",
    "from_matrix_text",
    "full_hierarchy",
    "gfr",
    "gfr_hierarchy",
    "hierarchy_from_dual",
    "intersection_number",
    "is_simple",
    "mbr_capacity",
    "mds_decode",
    "mds_encode",
    "min_reconstruction_degree",
    "octahedron_code",
    "pareto_points",
    "prism_code",
    "reconstruct",
    "recursive_bound",
    "repair",
    "repeat_blocks",
    "repetition_code",
    "staircase_csv",
    "stretch_chain",
    "supported_file_size",
    "tensor",
    "tensor_hierarchy",
    "to_json_text",
    "to_matrix_text",
    "trivial_code",
    "validate_fr",
    "verify_t_design",
]
