"""The multitilde operad: composition, actions on languages, closures, enumeration."""

from .boolvec import BoolVectorSet, bool_compose_partial, free_subsets, vectorize
from .enumeration import (
    CountReport,
    count_distinct_languages,
    count_ptt,
    enumerate_ptt,
    verify_distinct_actions,
)
from .errors import (
    ArityError,
    CompositionIndexError,
    InputError,
    ParseError,
    StarNotSupported,
    TildeError,
    UnsupportedArity,
)
from .lang import (
    EMPTY,
    EPSILON,
    FiniteLanguage,
    act_bool,
    act_tilde,
    catenate,
    factor_tilde,
    factors,
    letter,
    prefix_tilde,
    prefixes,
    subword_tilde,
    suffix_tilde,
    suffixes,
)
from .poset import (
    Relation,
    diamond,
    equivalent,
    is_ptt,
    phi,
    phi_inv,
    pseudo_closure,
    shift_diamond,
    transitive_closure,
)
from .tilde import (
    Multitilde,
    compose_full,
    compose_partial,
    dec,
    dec_set,
    identity,
    shift,
    shift_set,
    union_tilde,
)

__version__ = "0.1.0"
