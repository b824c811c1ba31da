//! Candidate types: multisets of Frobenius-Perron dimensions.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::arith::Nat;

/// Frobenius-Perron dimension of a simple object.
pub type Dim = u64;

/// Largest accepted dimension. Keeps `lcm(x, y)^2` inside `u128`.
pub const MAX_DIM: Dim = u32::MAX as Dim;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TypeError {
    #[error("type is empty")]
    Empty,
    #[error("entry {position} is {value}; dimensions must be positive")]
    NonPositive { position: usize, value: i128 },
    #[error("entry {position} is {value}, above the supported maximum {MAX_DIM}")]
    TooLarge { position: usize, value: i128 },
    #[error("no entry equals 1 (a type must contain the unit object)")]
    NoUnit,
    #[error("pair {position} has multiplicity 0")]
    ZeroMultiplicity { position: usize },
}

/// A canonical type: dims sorted nondecreasing, `dims[0] == 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FusionType {
    dims: Vec<Dim>,
    unique: Vec<Dim>,
    multiplicities: Vec<u32>,
    pt: u64,
    global_dim: Nat,
}

impl FusionType {
    /// Builds a canonical type from an arbitrary ordering of dimensions.
    pub fn new(raw: &[i128]) -> Result<Self, TypeError> {
        if raw.is_empty() {
            return Err(TypeError::Empty);
        }
        let mut dims = Vec::with_capacity(raw.len());
        for (position, &value) in raw.iter().enumerate() {
            if value <= 0 {
                return Err(TypeError::NonPositive { position, value });
            }
            if value > MAX_DIM as i128 {
                return Err(TypeError::TooLarge { position, value });
            }
            dims.push(value as Dim);
        }
        Self::from_dims(dims)
    }

    /// Same as [`FusionType::new`] for already-unsigned input.
    pub fn from_dims(mut dims: Vec<Dim>) -> Result<Self, TypeError> {
        if dims.is_empty() {
            return Err(TypeError::Empty);
        }
        if let Some((position, &value)) = dims
            .iter()
            .enumerate()
            .find(|(_, &v)| v == 0 || v > MAX_DIM)
        {
            return Err(if value == 0 {
                TypeError::NonPositive { position, value: 0 }
            } else {
                TypeError::TooLarge {
                    position,
                    value: value as i128,
                }
            });
        }
        dims.sort_unstable();
        if dims[0] != 1 {
            return Err(TypeError::NoUnit);
        }

        let mut unique: Vec<Dim> = Vec::new();
        let mut multiplicities: Vec<u32> = Vec::new();
        for &d in &dims {
            if unique.last() == Some(&d) {
                *multiplicities.last_mut().unwrap() += 1;
            } else {
                unique.push(d);
                multiplicities.push(1);
            }
        }
        let pt = u64::from(multiplicities[0]);
        let global_dim = dims.iter().map(|&d| Nat::from(d) * Nat::from(d)).sum();
        Ok(Self {
            dims,
            unique,
            multiplicities,
            pt,
            global_dim,
        })
    }

    /// Expands `(dim, multiplicity)` pairs into a flat type.
    pub fn from_compact(pairs: &[(i128, i128)]) -> Result<Self, TypeError> {
        let mut raw = Vec::new();
        for (position, &(dim, mult)) in pairs.iter().enumerate() {
            if mult == 0 {
                return Err(TypeError::ZeroMultiplicity { position });
            }
            if mult < 0 {
                return Err(TypeError::NonPositive {
                    position,
                    value: mult,
                });
            }
            if dim <= 0 {
                return Err(TypeError::NonPositive {
                    position,
                    value: dim,
                });
            }
            if dim > MAX_DIM as i128 {
                return Err(TypeError::TooLarge {
                    position,
                    value: dim,
                });
            }
            raw.extend(std::iter::repeat_n(dim, mult as usize));
        }
        Self::new(&raw)
    }

    /// Sorted nondecreasing dimensions.
    pub fn dims(&self) -> &[Dim] {
        &self.dims
    }

    /// Distinct dimensions, strictly increasing; the first is always 1.
    pub fn unique_dims(&self) -> &[Dim] {
        &self.unique
    }

    /// Multiplicity of each entry of [`FusionType::unique_dims`].
    pub fn multiplicities(&self) -> &[u32] {
        &self.multiplicities
    }

    /// `(dim, multiplicity)` pairs in increasing dim order.
    pub fn compact(&self) -> Vec<(Dim, u32)> {
        self.unique
            .iter()
            .copied()
            .zip(self.multiplicities.iter().copied())
            .collect()
    }

    /// Number of invertible simples (entries equal to 1).
    pub fn pt(&self) -> u64 {
        self.pt
    }

    /// Global dimension: sum of squared entries.
    pub fn global_dim(&self) -> Nat {
        self.global_dim
    }

    pub fn rank(&self) -> usize {
        self.dims.len()
    }

    pub fn is_perfect(&self) -> bool {
        self.pt == 1
    }

    pub fn is_pointed(&self) -> bool {
        self.unique.len() == 1
    }
}

impl fmt::Display for FusionType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, d) in self.dims.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{d}")?;
        }
        f.write_str("]")
    }
}

impl Serialize for FusionType {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.dims.serialize(serializer)
    }
}
