"""rankarg: ranking-based acceptability semantics for abstract argumentation
frameworks, with mechanical checking of the classical axioms."""

from .axioms import (
    DEPENDENCY_RULES,
    EXTENDED_DEPENDENCY_RULES,
    INCOMPATIBLE_PAIRS,
    PROPERTY_ORDER,
    Demand,
    IncompatibilityWitness,
    PropertyId,
    PropertyVerdict,
    VerdictStatus,
    Witness,
    audit_dependencies,
    branch_roots,
    check,
    defense_is_distributed,
    defense_is_simple,
    incompatibility_witness,
    parse_property,
    replay_incompatibility,
    verdict_record,
)
from .framework import (
    ApxError,
    ArgFramework,
    BranchProfile,
    CyclicFrameworkError,
    FrameworkError,
    UnknownArgumentError,
    WalkCountTable,
    branch_profile,
    branch_profiles,
    clone_fresh,
    connected_components,
    direct_attackers,
    disjoint_union,
    find_isomorphism,
    framework_key,
    graft_branch,
    has_cycle,
    parse_apx,
    rename,
    serialize_apx,
    walk_counts,
)
from .game import GameSolution, GameSolverError, game_value
from .orders import (
    Ranking,
    group_geq,
    group_gt,
    lex_compare,
    ranking_from_scores,
    ranking_from_vectors,
)
from .semantics import (
    SEMANTICS_IDS,
    NonConvergenceError,
    SemanticsRef,
    SizeCapExceededError,
    SolverConfig,
    TupledValue,
    bbs_ranking,
    bbs_vectors,
    categoriser_ranking,
    categoriser_scores,
    compare_tuples,
    dbs_ranking,
    dbs_vectors,
    grounded_extension,
    grounded_labelling,
    grounded_ranking,
    mt_ranking,
    mt_reward_matrix,
    mt_scores,
    saf_ranking,
    saf_scores,
    tuples_ranking,
    tuples_values,
)

__version__ = "0.1.0"
