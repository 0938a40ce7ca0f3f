"""Virtual knots and links on Gauss diagrams."""

from .errors import (
    BudgetExceeded,
    GaussSyntaxError,
    NotAKnot,
    PreconditionViolated,
    ValidationError,
    VKnotError,
)
from .gauss import (
    Arrow,
    GaussDiagram,
    Position,
    Token,
    canonical_diagram,
    canonical_form,
    component_count,
    connected_sum,
    mirror,
    parse,
    reverse_component,
    serialize,
)
from .invariants import ParityVector, bracket, f_polynomial, interlacement, odd_writhe, parity, writhe
from .moves import Move, MoveKind, MoveSet, apply, enumerate_moves, inverse, random_walk
from .poly import LaurentPoly
from .search import (
    Distinguished,
    Proven,
    SearchBudget,
    Unknown,
    equivalent_within,
    orbit,
    unknot_with_forbidden,
)
from .surface import GenusReport, genus, genus_upper_bound, is_realizable

__version__ = "0.1.0"
