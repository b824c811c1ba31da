//! The lcm exclusion criterion.
//!
//! Let `X` be a non-invertible simple in the adjoint subcategory and `p` a
//! prime divisor of `FPdim(X)` not dividing `pt`. A categorifiable type must
//! then contain a non-invertible `Y` with `p` coprime to `FPdim(Y)` and
//!
//! ```text
//! lcm(FPdim(X), FPdim(Y))^2 + FPdim(X)^2 * pt <= d
//! ```
//!
//! The adjoint subcategory is unknown, so every candidate universal grading
//! is tried; a type is excluded when no grading admits a neutral component
//! passing the test.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::arith::{checked_square, lcm, prime_factors, ArithError, Nat};
use crate::fusion_type::{Dim, FusionType};
use crate::partition::{GradedPartition, ModularPartitions, Part};

/// How the neutral component of each grading is chosen.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Mode {
    /// Test only the lexicographically least part, which always contains
    /// a unit. Reproduces the published exclusion lists.
    #[default]
    Paper,
    /// Accept a grading if any part containing a unit passes.
    Conservative,
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "paper" => Ok(Mode::Paper),
            "conservative" => Ok(Mode::Conservative),
            other => Err(format!(
                "unknown mode `{other}` (expected paper or conservative)"
            )),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Paper => "paper",
            Mode::Conservative => "conservative",
        })
    }
}

/// The `Y` closest to satisfying the inequality for a failing `(X, p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BestCandidate {
    pub y_dim: Dim,
    pub lhs: Nat,
}

/// Certificate that a neutral candidate fails: no `Y` qualifies for `(x_dim, p)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExclusionWitness {
    pub x_dim: Dim,
    pub p: Nat,
    /// Coprime `Y` minimizing the left-hand side; `None` when every
    /// non-unit dimension is divisible by `p`.
    pub best_candidate: Option<BestCandidate>,
    pub rhs: Nat,
}

/// Left-hand side of the inequality for dimensions `x`, `y`.
pub fn inequality_lhs(x: Dim, y: Dim, pt: u64) -> Result<Nat, ArithError> {
    let l = lcm(Nat::from(x), Nat::from(y))?;
    let x2 = checked_square(Nat::from(x))?;
    checked_square(l)?
        .checked_add(x2.checked_mul(Nat::from(pt)).ok_or(ArithError::Overflow)?)
        .ok_or(ArithError::Overflow)
}

/// Tests one neutral candidate.
///
/// `neutral_unique` and `all_unique` are strictly increasing and start with 1.
/// Returns the first failing `(i, p)` pair, scanning `i` and then `p` in
/// ascending order, or `None` when every pair finds a qualifying `j`.
pub fn criterion_inter(
    neutral_unique: &[Dim],
    all_unique: &[Dim],
    pt: u64,
    d: Nat,
) -> Result<Option<ExclusionWitness>, ArithError> {
    debug_assert_eq!(neutral_unique.first(), Some(&1));
    debug_assert_eq!(all_unique.first(), Some(&1));
    let pt_primes = prime_factors(Nat::from(pt))?;
    let others = &all_unique[1..];

    for &i in &neutral_unique[1..] {
        for p in prime_factors(Nat::from(i))? {
            if pt_primes.contains(&p) {
                continue;
            }
            let mut best: Option<BestCandidate> = None;
            let mut satisfied = false;
            for &j in others {
                if Nat::from(j) % p == 0 {
                    continue;
                }
                // An overflowing left-hand side cannot be <= d.
                let lhs = match inequality_lhs(i, j, pt) {
                    Ok(v) => v,
                    Err(ArithError::Overflow) => continue,
                    Err(e) => return Err(e),
                };
                if lhs <= d {
                    satisfied = true;
                    break;
                }
                if best.is_none_or(|b| lhs < b.lhs) {
                    best = Some(BestCandidate { y_dim: j, lhs });
                }
            }
            if !satisfied {
                return Ok(Some(ExclusionWitness {
                    x_dim: i,
                    p,
                    best_candidate: best,
                    rhs: d,
                }));
            }
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriterionVerdict {
    pub survives: bool,
    /// Gradings whose neutral candidate passed, in sorted order.
    pub surviving_partitions: Vec<GradedPartition>,
    pub total_partitions: usize,
    /// Some but not all gradings survive, on a non-perfect type.
    pub narrowed: bool,
    /// Failure certificate of the first grading, when the type is excluded
    /// and at least one grading existed.
    pub witness: Option<ExclusionWitness>,
    /// No grading exists at all.
    pub vacuous: bool,
}

/// Result of testing one grading.
fn check_partition(
    partition: &GradedPartition,
    t: &FusionType,
    mode: Mode,
) -> Result<Option<ExclusionWitness>, ArithError> {
    let test =
        |part: &Part| criterion_inter(&part.unique_dims(), t.unique_dims(), t.pt(), t.global_dim());
    let first = test(partition.first_part())?;
    if first.is_none() || mode == Mode::Paper {
        return Ok(first);
    }
    for part in partition.parts()[1..].iter().filter(|p| p.contains_unit()) {
        if test(part)?.is_none() {
            return Ok(None);
        }
    }
    Ok(first)
}

/// Runs the criterion over every grading of `t`.
pub fn eno_crit(t: &FusionType, mode: Mode) -> Result<CriterionVerdict, ArithError> {
    let mut partitions: Vec<GradedPartition> = ModularPartitions::new(t).collect();
    partitions.sort();
    let total_partitions = partitions.len();

    let mut surviving_partitions = Vec::new();
    let mut witness = None;
    for partition in partitions {
        match check_partition(&partition, t, mode)? {
            None => surviving_partitions.push(partition),
            Some(w) => {
                if witness.is_none() {
                    witness = Some(w);
                }
            }
        }
    }
    let survives = !surviving_partitions.is_empty();
    let narrowed = survives && surviving_partitions.len() < total_partitions && t.pt() > 1;
    Ok(CriterionVerdict {
        survives,
        surviving_partitions,
        total_partitions,
        narrowed,
        witness: if survives { None } else { witness },
        vacuous: total_partitions == 0,
    })
}

/// Boolean-only variant of [`eno_crit`]: stops at the first surviving grading.
pub fn survives(t: &FusionType, mode: Mode) -> Result<bool, ArithError> {
    for partition in ModularPartitions::new(t) {
        if check_partition(&partition, t, mode)?.is_none() {
            return Ok(true);
        }
    }
    Ok(false)
}
