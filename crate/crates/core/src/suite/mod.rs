//! Verification harness: bound formulas, named examples, per-graph checks,
//! random campaigns and the depth-2 search.

pub mod bounds;
pub mod examples;
pub mod fuzz;
pub mod search;
pub mod verify;

pub use bounds::{bounds, lemma_arithmetic, lemma_sweep, BoundSet};
pub use examples::Example;
pub use fuzz::{fuzz_campaign, FuzzOutcome, Profile};
pub use search::{search_depth2, SearchOutcome};
pub use verify::{verify_graph, Check, Status, VerificationReport, VerifyOptions};
