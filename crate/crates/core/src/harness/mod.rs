//! Reproduction harness: file formats, random inputs, reports, the trace and
//! classification drivers, and the property verifier used by the command-line
//! tool.

pub mod classify;
pub mod corpus;
pub mod digraph;
pub mod format;
pub mod random;
pub mod report;
pub mod trace;
pub mod verify;

pub use classify::{run_classify, ClassFilter, ClassifyInput, ClassifyReport};
pub use digraph::{edge_ideal_from_digraph, WeightedOrientedGraph};
pub use format::{parse_ideal, parse_matrix, serialize_ideal, serialize_matrix};
pub use random::{generate_random_ideal, RandomIdealSpec};
pub use report::{invariant_report, InvariantReport, JsonReport};
pub use trace::{run_trace, TraceOutcome, TraceReport};
pub use verify::{run_verify, verify_ideals, Property, VerifyConfig, VerifyReport};
