"""Inverse semigroups of one-sided subshifts, computed exactly.

Subshifts (full, finite type, sofic) compile to a safety automaton; sets
``C(F; v)``, semigroup elements and finite levels of the tight spectrum are
decided on that automaton, and a brute-force oracle checks them on samples
of eventually periodic points.
"""
from .errors import (
    EmptyLanguageError,
    IndexOrderError,
    IndexTooCoarseError,
    NotInLanguageError,
    RectangleTooSmallError,
    SampleMismatchError,
    SpecError,
    SubshiftError,
    UndefinedOnZeroError,
)
from .freegroup import FreeWord
from .language import (
    BUILTINS,
    LanguageModel,
    SubshiftSpec,
    acceptance,
    compile_shift,
    end_states,
    enumerate_points,
    even_shift,
    factors,
    full_shift,
    golden_mean,
    in_shift,
    is_factor,
    load_spec,
    parse_spec,
    pred_set,
    profile_of,
    realizable_profiles,
)
from .literals import parse_edata, parse_element
from .oracle import (
    ConcreteMap,
    brute_member,
    check_products,
    compose,
    concretize,
    map_equal,
    point_sample,
    reference_map,
    set_extension,
)
from .semigroup import (
    AuditReport,
    Element,
    apply,
    audit,
    enumerate_ball,
    equal,
    generator,
    identity,
    idempotent,
    is_idempotent,
    leq,
    make_element,
    max_above,
    multiply,
    phi,
    range_,
    source,
    star,
    zero,
)
from .sets import (
    CanonSet,
    ConstraintSet,
    contains_point,
    conjugate_idem,
    enumerate_edata,
    intersect,
    is_empty,
    make_set,
    product_idem,
    set_equal,
    subset,
)
from .spectrum import (
    FilterSet,
    IndexPair,
    LevelClass,
    LevelSpace,
    Relation,
    Tower,
    bonding,
    class_of,
    class_vs_set,
    decompose_set,
    filter_extensions,
    filter_violations,
    idempotent_universe,
    index_join,
    index_leq,
    kl_equiv,
    lemma_index,
    level_space,
    past_equiv,
    theta_restrict,
    tower_of,
    ultrafilter_restrict,
)
from .words import Alphabet, Point, parse_point

__version__ = "0.1.0"
