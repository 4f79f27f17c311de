//! Diagnosability computations: classical `t(G)`, the PMC core formula,
//! edge-tolerable `t_h^e(G)`, upper-bound witnesses and the table verifier.

mod diagnosability;
mod tolerable;
mod verify;
mod witness;

pub use diagnosability::{
    diagnosability, diagnosability_with_certificate, is_t_diagnosable, pmc_diagnosability_by_core, Verdict,
    MAX_CORE_VERTICES,
};
pub use tolerable::{
    edge_tolerable_diagnosability, Certificate, DiagnosabilityReport, ProbeSummary, Strategy, TopologyDescriptor,
    MAX_EXHAUSTIVE_EDGE_SETS, MAX_EXHAUSTIVE_VERTICES,
};
pub use verify::{
    expected_bh_value, verify_paper_results, CellVerdict, VerdictCell, VerdictTable, VerifyOptions, EXACT_MAX_N,
};
pub use witness::{degree_witness, lemma_ll1_witness, UpperBoundWitness};
