"""Supereulerian digraphs: exact decision, degree-sum hypotheses, and sweeps."""
from .conditions import (
    Hypothesis,
    HypothesisResult,
    PairClassification,
    classify_pairs,
    hypothesis_holds,
    sharpness_audit,
)
from .decider import Decision, Guard, SizeGuardError, decide, decide_bruteforce
from .digraph import (
    DegreeRecord,
    Digraph,
    DigraphError,
    NotMultipartite,
    PartitionCertificate,
    degree,
    degree_toward,
    format_edge_list,
    is_strong,
    nonadjacent_pairs,
    parse_edge_list,
    recognize_semicomplete_multipartite,
    strong_components,
    to_dot,
)
from .enumeration import (
    PopulationSpec,
    VerificationReport,
    enumerate_digraphs,
    lemma_trials,
    verify_implication,
    verify_many,
)
from .family import Family, FamilyParams, audit_family, build_family
from .trails import (
    ArcSubset,
    CheckResult,
    Ditrail,
    check_corollary_notSx,
    check_lemma_notST,
    check_smd_lemma,
    eulerian_circuit,
    exists_ditrail_with_vertex_set,
    is_spanning_eulerian,
)

__version__ = "0.1.0"
