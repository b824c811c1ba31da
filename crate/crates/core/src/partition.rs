//! Candidate universal gradings.
//!
//! A modular partition of a type splits its multiset of dimensions into `pt`
//! parts, each with square-sum `d / pt`. Enumeration runs in two stages:
//! [`SubmultisetSums`] lists every admissible part (a submultiset of the
//! squares summing to `d / pt`), and [`VectorPartitions`] combines those
//! parts, as multiplicity vectors, into exact covers of the whole type.

use std::borrow::Cow;

use serde::Serialize;

use crate::arith::Nat;
use crate::fusion_type::{Dim, FusionType};

/// Lazily yields every distinct submultiset of `items` summing to `target`.
///
/// `items` must be sorted nonincreasing and strictly positive. Each
/// submultiset is produced exactly once, as a nondecreasing vector: at every
/// depth the search never branches twice on equal values.
#[derive(Debug, Clone)]
pub struct SubmultisetSums<'a> {
    items: &'a [Nat],
    suffix: Vec<Nat>,
    stack: Vec<Frame>,
    chosen: Vec<Nat>,
    emit_empty: bool,
}

#[derive(Debug, Clone)]
struct Frame {
    next: usize,
    remaining: Nat,
    prev: Option<Nat>,
}

impl<'a> SubmultisetSums<'a> {
    pub fn new(items: &'a [Nat], target: Nat) -> Self {
        debug_assert!(items.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(items.iter().all(|&x| x > 0));
        let mut suffix: Vec<Nat> = vec![0; items.len() + 1];
        for i in (0..items.len()).rev() {
            suffix[i] = suffix[i + 1].saturating_add(items[i]);
        }
        let mut stack = Vec::new();
        if target > 0 {
            stack.push(Frame {
                next: 0,
                remaining: target,
                prev: None,
            });
        }
        Self {
            items,
            suffix,
            stack,
            chosen: Vec::new(),
            emit_empty: target == 0,
        }
    }
}

impl Iterator for SubmultisetSums<'_> {
    type Item = Vec<Nat>;

    fn next(&mut self) -> Option<Vec<Nat>> {
        if self.emit_empty {
            self.emit_empty = false;
            return Some(Vec::new());
        }
        loop {
            let frame = self.stack.last_mut()?;
            let mut i = frame.next;
            while i < self.items.len()
                && (self.items[i] > frame.remaining || Some(self.items[i]) == frame.prev)
            {
                i += 1;
            }
            if i >= self.items.len() || self.suffix[i] < frame.remaining {
                self.stack.pop();
                if !self.stack.is_empty() {
                    self.chosen.pop();
                }
                continue;
            }
            let value = self.items[i];
            frame.prev = Some(value);
            frame.next = i + 1;
            let remaining = frame.remaining - value;
            self.chosen.push(value);
            if remaining == 0 {
                let out: Vec<Nat> = self.chosen.iter().rev().copied().collect();
                self.chosen.pop();
                return Some(out);
            }
            self.stack.push(Frame {
                next: i + 1,
                remaining,
                prev: None,
            });
        }
    }
}

/// Convenience wrapper over [`SubmultisetSums::new`].
pub fn gen_mparts(items: &[Nat], target: Nat) -> SubmultisetSums<'_> {
    SubmultisetSums::new(items, target)
}

/// Lazily yields every multiset of `parts` (repetition allowed) whose
/// componentwise sum is `total`.
///
/// Each result is a nonincreasing sequence of indices into `parts`, so every
/// multiset appears exactly once. `parts` must be nonzero and pairwise
/// distinct; zero vectors are ignored.
#[derive(Debug, Clone)]
pub struct VectorPartitions<'a> {
    parts: Cow<'a, [Vec<u32>]>,
    remaining: Vec<u32>,
    remaining_sum: u64,
    // bound[k]: candidates for depth k are indices below this value
    bounds: Vec<usize>,
    chosen: Vec<usize>,
    emit_empty: bool,
}

impl<'a> VectorPartitions<'a> {
    pub fn new(total: &[u32], parts: impl Into<Cow<'a, [Vec<u32>]>>) -> Self {
        let parts = parts.into();
        debug_assert!(parts.iter().all(|p| p.len() == total.len()));
        let remaining_sum: u64 = total.iter().map(|&x| u64::from(x)).sum();
        Self {
            bounds: if remaining_sum > 0 {
                vec![parts.len()]
            } else {
                Vec::new()
            },
            parts,
            remaining: total.to_vec(),
            remaining_sum,
            chosen: Vec::new(),
            emit_empty: remaining_sum == 0,
        }
    }

    pub fn parts(&self) -> &[Vec<u32>] {
        &self.parts
    }

    fn fits(&self, j: usize) -> bool {
        let part = &self.parts[j];
        part.iter().any(|&x| x > 0) && part.iter().zip(&self.remaining).all(|(p, r)| p <= r)
    }

    fn apply(&mut self, j: usize, add: bool) {
        let parts = &self.parts;
        for (r, &p) in self.remaining.iter_mut().zip(&parts[j]) {
            if add {
                *r += p;
            } else {
                *r -= p;
            }
        }
        let s: u64 = self.parts[j].iter().map(|&x| u64::from(x)).sum();
        if add {
            self.remaining_sum += s;
        } else {
            self.remaining_sum -= s;
        }
    }
}

impl Iterator for VectorPartitions<'_> {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.emit_empty {
            self.emit_empty = false;
            return Some(Vec::new());
        }
        loop {
            let bound = *self.bounds.last()?;
            if bound == 0 {
                self.bounds.pop();
                if let Some(j) = self.chosen.pop() {
                    self.apply(j, true);
                }
                continue;
            }
            let j = bound - 1;
            *self.bounds.last_mut().unwrap() = j;
            if !self.fits(j) {
                continue;
            }
            self.apply(j, false);
            self.chosen.push(j);
            if self.remaining_sum == 0 {
                let out = self.chosen.clone();
                self.chosen.pop();
                self.apply(j, true);
                return Some(out);
            }
            self.bounds.push(j + 1);
        }
    }
}

pub fn vector_partitions<'a>(
    total: &[u32],
    parts: impl Into<Cow<'a, [Vec<u32>]>>,
) -> VectorPartitions<'a> {
    VectorPartitions::new(total, parts)
}

/// One component of a candidate grading.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Part {
    dims: Vec<Dim>,
    mult_vec: Vec<u32>,
}

impl Part {
    fn from_multiplicities(unique: &[Dim], mult_vec: &[u32]) -> Self {
        let dims = unique
            .iter()
            .zip(mult_vec)
            .flat_map(|(&u, &m)| std::iter::repeat_n(u, m as usize))
            .collect();
        Self {
            dims,
            mult_vec: mult_vec.to_vec(),
        }
    }

    /// Sorted nondecreasing dimensions of this part.
    pub fn dims(&self) -> &[Dim] {
        &self.dims
    }

    /// Multiplicities over the owning type's unique dims.
    pub fn mult_vec(&self) -> &[u32] {
        &self.mult_vec
    }

    pub fn contains_unit(&self) -> bool {
        self.dims.first() == Some(&1)
    }

    pub fn square_sum(&self) -> Nat {
        self.dims.iter().map(|&d| Nat::from(d) * Nat::from(d)).sum()
    }

    /// Distinct dims, strictly increasing.
    pub fn unique_dims(&self) -> Vec<Dim> {
        let mut u = self.dims.clone();
        u.dedup();
        u
    }
}

impl Serialize for Part {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.dims.serialize(serializer)
    }
}

/// A candidate universal grading: parts sorted lexicographically, so
/// `parts()[0]` is a part containing the unit.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct GradedPartition {
    parts: Vec<Part>,
}

impl GradedPartition {
    pub fn parts(&self) -> &[Part] {
        &self.parts
    }

    /// The part tested as neutral component in paper mode.
    pub fn first_part(&self) -> &Part {
        &self.parts[0]
    }

    /// Checks the grading invariants against `t`; returns a description of
    /// the first violation.
    pub fn check_against(&self, t: &FusionType) -> Result<(), String> {
        let pt = t.pt();
        if self.parts.len() as u64 != pt {
            return Err(format!("{} parts, expected {pt}", self.parts.len()));
        }
        let target = t.global_dim() / Nat::from(pt);
        for part in &self.parts {
            if part.square_sum() != target {
                return Err(format!(
                    "part {:?} has square-sum {}",
                    part.dims,
                    part.square_sum()
                ));
            }
            if part.mult_vec.len() != t.unique_dims().len() {
                return Err("multiplicity vector length mismatch".into());
            }
        }
        let mut union: Vec<Dim> = self
            .parts
            .iter()
            .flat_map(|p| p.dims.iter().copied())
            .collect();
        union.sort_unstable();
        if union != t.dims() {
            return Err("parts do not reassemble the type".into());
        }
        if !self.parts.windows(2).all(|w| w[0] <= w[1]) || !self.parts[0].contains_unit() {
            return Err("parts are not in canonical order".into());
        }
        Ok(())
    }
}

/// Streaming enumeration of the modular partitions of one type, in
/// generation order (each partition already canonical).
pub struct ModularPartitions<'t> {
    t: &'t FusionType,
    inner: Option<VectorPartitions<'static>>,
}

impl<'t> ModularPartitions<'t> {
    pub fn new(t: &'t FusionType) -> Self {
        let pt = Nat::from(t.pt());
        let d = t.global_dim();
        if !d.is_multiple_of(pt) {
            return Self { t, inner: None };
        }
        let unique = t.unique_dims();
        let squares: Vec<Nat> = t
            .dims()
            .iter()
            .rev()
            .map(|&x| Nat::from(x) * Nat::from(x))
            .collect();
        let parts: Vec<Vec<u32>> = gen_mparts(&squares, d / pt)
            .map(|sub| {
                unique
                    .iter()
                    .map(|&u| {
                        let sq = Nat::from(u) * Nat::from(u);
                        sub.iter().filter(|&&x| x == sq).count() as u32
                    })
                    .collect()
            })
            .collect();
        Self {
            t,
            inner: Some(VectorPartitions::new(t.multiplicities(), parts)),
        }
    }

    /// Number of admissible parts (submultisets with square-sum `d / pt`).
    pub fn candidate_part_count(&self) -> usize {
        self.inner.as_ref().map_or(0, |v| v.parts().len())
    }
}

impl Iterator for ModularPartitions<'_> {
    type Item = GradedPartition;

    fn next(&mut self) -> Option<GradedPartition> {
        let inner = self.inner.as_mut()?;
        let indices = inner.next()?;
        let unique = self.t.unique_dims();
        let mut parts: Vec<Part> = indices
            .iter()
            .map(|&j| Part::from_multiplicities(unique, &inner.parts()[j]))
            .collect();
        parts.sort();
        let partition = GradedPartition { parts };
        debug_assert_eq!(partition.check_against(self.t), Ok(()));
        Some(partition)
    }
}

/// All modular partitions of `t`, sorted. Empty when `pt` does not divide `d`.
pub fn modular_partitions(t: &FusionType) -> Vec<GradedPartition> {
    let mut all: Vec<GradedPartition> = ModularPartitions::new(t).collect();
    all.sort();
    all
}
