"""Decision procedures for intuitionistic propositional logic and modal S4
via three-valued non-deterministic truth tables refined to their stable
rows, with a sequent-calculus oracle for cross-validation."""

from .decision import (
    CrossCheckReport,
    Verdict,
    cross_check,
    decide_ipl,
    decide_s4,
    decide_s4_direct,
    entail_via_deduction,
    fold_premises,
    verdict_to_json,
)
from .formula import (
    And,
    Atom,
    Box,
    Formula,
    Imp,
    IPL,
    Neg,
    Or,
    ParseError,
    S4,
    SubformulaClosure,
    atoms,
    complexity,
    parse,
    pretty,
    signature_of,
    subformula_closure,
    subformulas,
)
from .nmatrix import (
    AND,
    BOX,
    F,
    IMP,
    M_IPL,
    M_S4,
    M_S4_PRIME,
    NEG,
    Nmatrix,
    OR,
    T,
    U,
    branching_factor,
    lookup,
)
from .oracle import Sequent, g4ip_prove
from .refinement import (
    CycleRecord,
    ValidatorsTrace,
    find_validators,
    is_compatible,
    refine,
    refine_cycle,
    refine_fixpoint,
)
from .tabulation import (
    Row,
    Table,
    closure_bounds,
    generate_table,
    lower_bound,
    upper_bound,
)
from .translation import (
    TranslationResult,
    box_translate,
    derive_ipl_multiop,
    semi_translate,
    translate,
)

__version__ = "0.1.0"
