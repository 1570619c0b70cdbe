"""Square-free ternary words: disposability, irreducibility, morphisms and census."""

__version__ = "0.1.0"

from .constructor import construct, small_word, special_word
from .disposability import (
    DeletionSite,
    IrreducibilityReport,
    delete_factor,
    failing_ks,
    is_disposable,
    is_irreducibly_square_free,
    is_k_irreducible,
)
from .enumerator import census, census_range, enumerate_square_free, exists_irreducible
from .morphisms import (
    ALPHA3,
    PHI,
    TAU,
    Morphism,
    alignment_test,
    apply_morphism,
    crochemore_test,
    fixed_point_prefix,
    power,
    procedure_I,
    procedure_I_k,
)
from .words import (
    SquareWitness,
    Symmetry,
    apply_symmetry,
    canonical_key,
    extends_square_free,
    find_square,
    is_square_free,
    parse_word,
)
