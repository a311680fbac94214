"""Combinatorics of spinor tensor powers for even orthogonal Lie algebras.

The library connects five indexing gadgets: dominant half-integer weights,
regular cell diagrams and tables, short Young diagrams and their chains,
Gelfand-Tsetlin patterns for the nested orthogonal family, and the type-D
spin crystal with its tensor powers. On top of those it builds the crystal
commutor, the cactus-group action on regular cell tables (hence on patterns),
and an exact exterior-algebra verifier for the explicit top vectors.
"""

from .cactus import (
    XiCache,
    act_on_table,
    apply_cactus_word,
    orbit,
    parse_cactus_word,
    word_to_permutation,
)
from .celldiag import (
    CellDiagram,
    CellTable,
    contains,
    diagram_of_weight,
    enumerate_delta,
    enumerate_tables,
    steps_from_diagram_chain,
    table_from_steps,
    weight_of_diagram,
)
from .clifford import (
    ExteriorAlgebra,
    ExteriorVector,
    OperatorSpec,
    contract,
    kappa,
    kappa_sigma,
    top_vector_report,
    wedge_insert,
)
from .crystal import Component, SpinCrystal, census_json, crystal_dot
from .errors import BudgetExceededError, ValidationError
from .weights import (
    OrthWeight,
    Weight,
    delta_membership,
    is_dominant_d,
    omega_minus,
    omega_plus,
    spinor_weights,
    w0_image,
)
from .youngt import (
    GTPattern,
    SSYTable,
    ShortYoungDiagram,
    associated,
    branch_syd,
    count_sssyt,
    enumerate_gtp,
    enumerate_sssyt,
    f_inverse,
    f_map,
    interlaces,
    is_self_associated,
    j_inverse,
    j_map,
    shorter,
    syd_to_orthweight,
    y_inverse,
    y_map,
)

__all__ = [name for name in dir() if not name.startswith("_")]
