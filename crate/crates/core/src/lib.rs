//! Exclusion sieve for candidate integral modular fusion category types.
//!
//! A *type* is the multiset of Frobenius-Perron dimensions of the simple
//! objects. [`criterion::eno_crit`] enumerates every candidate universal
//! grading of a type ([`partition::modular_partitions`]) and tests the
//! lcm inequality on each grading's neutral component; a type with no
//! passing grading cannot be categorified.
//!
//! ```
//! use sieve_core::{eno_crit, FusionType, Mode};
//!
//! let t = FusionType::new(&[1, 1, 24, 24, 36, 40, 45, 45, 90, 90, 90, 180, 180, 180]).unwrap();
//! let verdict = eno_crit(&t, Mode::Paper).unwrap();
//! assert!(!verdict.survives);
//! assert_eq!(verdict.witness.unwrap().x_dim, 36);
//! ```

pub mod arith;
pub mod batch;
pub mod criterion;
pub mod fusion_type;
pub mod golden;
pub mod input;
pub mod partition;
pub mod report;

pub use arith::{gcd, lcm, prime_factors, ArithError, Nat};
pub use batch::{run_batch, run_batch_collect, BatchRecord, Outcome};
pub use criterion::{
    criterion_inter, eno_crit, survives, BestCandidate, CriterionVerdict, ExclusionWitness, Mode,
};
pub use fusion_type::{Dim, FusionType, TypeError};
pub use input::{parse_type, ParseError};
pub use partition::{
    gen_mparts, modular_partitions, vector_partitions, GradedPartition, ModularPartitions, Part,
};
pub use report::{emit_report, ReportWriter, Summary, Verbosity};
