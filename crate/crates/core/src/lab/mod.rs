//! Random instance generation, brute-force oracles, fixed counterexamples and
//! the seeded result-checking harness.

pub mod generate;
pub mod oracle;
pub mod verify;
pub mod witness;

pub use generate::{default_grid, generate, generate_with_rng, GenKind, GenSpec, SFIG_ATTEMPT_CAP};
pub use oracle::{oracle_gamma, oracle_iconn, ORACLE_DOMINATION_LIMIT, ORACLE_PATH_LIMIT};
pub use verify::{
    resolve_theorem, verify, verify_all, ReportStatus, TheoremReport, TheoremViolation,
    VerifyConfig, THEOREM_IDS,
};
pub use witness::{witness_composition_not_strong, witness_join_not_strong};
