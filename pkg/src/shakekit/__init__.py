"""shakekit: exact-arithmetic knot invariants and complexity certificates.

Laurent-polynomial Alexander polynomials, classical and Levine-Tristram
signatures from Seifert and Goeritz data, a term calculus for
dualizable satellite patterns, and replayable lower-bound certificates
for the complexity of shake-slice knots.
"""

from .complexity import (
    CompatibleInvariant,
    ComplexityCertificate,
    WitnessNotFound,
    certify_complexity,
    find_witness_root,
    half_lt_signature,
    sigma_q_vanishes_check,
)
from .errors import DomainError
from .exactlinalg import (
    Inertia,
    InvalidRoot,
    NearSingular,
    det_laurent,
    inertia_hermitian_at_root,
    inertia_symmetric_exact,
    signature,
)
from .goeritz import (
    Band,
    BandPresentation,
    GoeritzData,
    add_two_twists,
    classical_signature_goeritz,
    goeritz_form,
    torus_band_presentation,
    verify_two_twist_stability,
)
from .laurent import (
    LaurentPoly,
    UnitCirclePoint,
    format_laurent,
    lp_add,
    lp_eval_unit,
    lp_is_symmetric,
    lp_mul,
    parse_laurent,
)
from .patterns import (
    Atom,
    Bar,
    Compose,
    Inverse,
    NormalForm,
    PatternSyntaxError,
    Pound,
    Power,
    Star,
    Twist,
    UnassignedAtom,
    eval_invariant,
    normalize,
    parse_pattern,
    render_term,
    retrace_term,
    table_profile,
)
from .seifert import (
    OddDimension,
    alexander,
    an_family,
    classical_signature_seifert,
    delta_n_closed,
    delta_sign_scan,
    lt_signature,
)

__version__ = "0.1.0"

__all__ = [
    "Atom",
    "Band",
    "BandPresentation",
    "Bar",
    "CompatibleInvariant",
    "ComplexityCertificate",
    "Compose",
    "DomainError",
    "GoeritzData",
    "Inertia",
    "InvalidRoot",
    "Inverse",
    "LaurentPoly",
    "NearSingular",
    "NormalForm",
    "OddDimension",
    "PatternSyntaxError",
    "Pound",
    "Power",
    "Star",
    "Twist",
    "UnassignedAtom",
    "UnitCirclePoint",
    "WitnessNotFound",
    "add_two_twists",
    "alexander",
    "an_family",
    "certify_complexity",
    "classical_signature_goeritz",
    "classical_signature_seifert",
    "delta_n_closed",
    "delta_sign_scan",
    "det_laurent",
    "eval_invariant",
    "find_witness_root",
    "format_laurent",
    "goeritz_form",
    "half_lt_signature",
    "inertia_hermitian_at_root",
    "inertia_symmetric_exact",
    "lp_add",
    "lp_eval_unit",
    "lp_is_symmetric",
    "lp_mul",
    "lt_signature",
    "normalize",
    "parse_laurent",
    "parse_pattern",
    "render_term",
    "retrace_term",
    "sigma_q_vanishes_check",
    "signature",
    "table_profile",
    "torus_band_presentation",
    "verify_two_twist_stability",
]
