//! Closed-form evaluation of `φ(k)` and the splitting type.
//!
//! Everything here is integer arithmetic on the block data of a center. The
//! covering counts `q̃` and `q` come from inclusion-exclusion over adjacent
//! parts of the partition; `φ` per component is
//! `Σ [[b_i - k + 1]] + [[λ - k + 1]] - q(k)`, and the splitting type is read
//! off either from the second differences of `φ` or directly as
//! `b_i + b_{i+1} + 2` with sentinels `b_0 = b_{r+1} = -1`.

use std::fmt;

use thiserror::Error;

use crate::curve::{Component, CurveSummary};

/// The truncation bracket `[[z]] = max(0, z)`.
pub fn trunc(z: i64) -> i64 {
    z.max(0)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("partition has no parts")]
    Empty,
    #[error("partition part {index} is zero")]
    ZeroPart { index: usize },
}

/// An ordered composition `γ_1 + ... + γ_r = λ` with positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, PartitionError> {
        if parts.is_empty() {
            return Err(PartitionError::Empty);
        }
        if let Some(index) = parts.iter().position(|&p| p == 0) {
            return Err(PartitionError::ZeroPart { index });
        }
        Ok(Self { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn r(&self) -> usize {
        self.parts.len()
    }

    pub fn lambda(&self) -> usize {
        self.parts.iter().sum()
    }

    fn first(&self) -> i64 {
        self.parts[0] as i64
    }

    fn last(&self) -> i64 {
        self.parts[self.parts.len() - 1] as i64
    }
}

/// Number of windows of `k` consecutive integers, anywhere in `Z`, that
/// contain at least one part of the partition.
pub fn qtilde(k: usize, partition: &Partition) -> usize {
    let k = k as i64;
    let singles: i64 = partition
        .parts
        .iter()
        .map(|&g| trunc(k - g as i64 + 1))
        .sum();
    let pairs: i64 = partition
        .parts
        .windows(2)
        .map(|w| trunc(k - w[0] as i64 - w[1] as i64 + 1))
        .sum();
    (singles - pairs) as usize
}

/// Number of covering windows of length `k` lying inside `[1, λ]`.
pub fn q(k: usize, partition: &Partition) -> usize {
    if partition.r() == 1 {
        return usize::from(k == partition.parts[0]);
    }
    if k > partition.lambda() {
        return 0;
    }
    let kk = k as i64;
    let value =
        qtilde(k, partition) as i64 - trunc(kk - partition.first()) - trunc(kk - partition.last());
    debug_assert!(value >= 0);
    value as usize
}

/// `φ(k)` restricted to one component, for `k >= 2`.
pub fn phi_component(comp: &Component, k: usize) -> usize {
    debug_assert!(k >= 2);
    let from_blocks: usize = comp
        .b_values()
        .iter()
        .map(|&b| (b + 1).saturating_sub(k))
        .sum();
    let from_apex = (comp.lambda() + 1).saturating_sub(k);
    from_blocks + from_apex - q(k, comp.partition())
}

/// The values `φ(0), φ(1), ...` up to and including two trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhiTable {
    values: Vec<usize>,
}

impl PhiTable {
    /// Wraps raw values, trimming or padding so the table ends in exactly
    /// two zeros. The caller guarantees `φ` vanishes past the last nonzero
    /// entry.
    pub fn from_values(mut values: Vec<usize>) -> Self {
        while values.len() > 2 && values[values.len() - 1] == 0 && values[values.len() - 2] == 0 {
            values.pop();
        }
        while values.len() < 2 || values[values.len() - 1] != 0 || values[values.len() - 2] != 0 {
            values.push(0);
        }
        Self { values }
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// `φ(k)`, zero past the end of the table.
    pub fn get(&self, k: usize) -> usize {
        self.values.get(k).copied().unwrap_or(0)
    }

    /// Largest `k` with `φ(k) != 0`.
    pub fn k_max(&self) -> usize {
        self.values.iter().rposition(|&v| v != 0).unwrap_or(0)
    }

    /// `Δ²φ(k) = φ(k+2) - 2φ(k+1) + φ(k)` for every `k` in the table.
    pub fn second_differences(&self) -> Vec<i64> {
        (0..self.values.len())
            .map(|k| {
                self.get(k + 2) as i64 - 2 * self.get(k + 1) as i64 + self.get(k) as i64
            })
            .collect()
    }
}

/// Evaluates `φ` from the closed form: `φ(0) = d + e`, `φ(1) = 2(e + 1)` and
/// for `k >= 2` the sum over components.
pub fn phi_table(summary: &CurveSummary) -> PhiTable {
    let mut values = vec![summary.degree() + summary.e(), 2 * (summary.e() + 1)];
    let mut k = 2;
    while values[values.len() - 1] != 0 || values[values.len() - 2] != 0 {
        let v = summary
            .components()
            .iter()
            .map(|comp| phi_component(comp, k))
            .sum();
        values.push(v);
        k += 1;
    }
    PhiTable { values }
}

/// The multiset `{c_i}` with `N_f = ⊕ O(c_i + d + 2)`, sorted descending.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SplittingType {
    c: Vec<usize>,
}

impl SplittingType {
    pub fn new(mut c: Vec<usize>) -> Self {
        c.sort_unstable_by(|a, b| b.cmp(a));
        Self { c }
    }

    pub fn values(&self) -> &[usize] {
        &self.c
    }

    pub fn len(&self) -> usize {
        self.c.len()
    }

    pub fn is_empty(&self) -> bool {
        self.c.is_empty()
    }

    pub fn sum(&self) -> usize {
        self.c.iter().sum()
    }
}

impl fmt::Display for SplittingType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (n, c) in self.c.iter().enumerate() {
            if n > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormulaError {
    #[error("internal error: Δ²φ({k}) = {value} is negative")]
    NegativeMultiplicity { k: usize, value: i64 },

    #[error("splitting type has {found} entries, expected s - 1 = {expected}")]
    CountMismatch { expected: usize, found: usize },

    #[error("second-difference route gives {from_phi}, direct route gives {direct}")]
    CrossCheckFailure {
        from_phi: SplittingType,
        direct: SplittingType,
    },
}

/// Reads the splitting type off `Δ²φ`: the value `k` occurs `Δ²φ(k)` times.
pub fn splitting_from_phi(table: &PhiTable, s: usize) -> Result<SplittingType, FormulaError> {
    let mut c = Vec::new();
    for (k, m) in table.second_differences().into_iter().enumerate() {
        if m < 0 {
            return Err(FormulaError::NegativeMultiplicity { k, value: m });
        }
        c.extend(std::iter::repeat_n(k, m as usize));
    }
    let expected = s.saturating_sub(1);
    if c.len() != expected {
        return Err(FormulaError::CountMismatch {
            expected,
            found: c.len(),
        });
    }
    Ok(SplittingType::new(c))
}

/// The `r + 1` nonzero entries a component contributes: `b_i + b_{i+1} + 2`
/// for `i = 0..=r` with `b_0 = b_{r+1} = -1`.
pub fn direct_c_values(comp: &Component) -> Vec<usize> {
    let mut padded: Vec<i64> = Vec::with_capacity(comp.r() + 2);
    padded.push(-1);
    padded.extend(comp.b_values().iter().map(|&b| b as i64));
    padded.push(-1);
    padded
        .windows(2)
        .map(|w| (w[0] + w[1] + 2) as usize)
        .collect()
}

/// Splitting type from the direct component formula padded with
/// `d - 1 - dim ∂²T` zeros, cross-checked against the `Δ²φ` route.
pub fn splitting_type(summary: &CurveSummary) -> Result<SplittingType, FormulaError> {
    let mut c: Vec<usize> = summary
        .components()
        .iter()
        .flat_map(direct_c_values)
        .collect();
    c.extend(std::iter::repeat_n(0, summary.zero_count()));
    let expected = summary.s() - 1;
    if c.len() != expected {
        return Err(FormulaError::CountMismatch {
            expected,
            found: c.len(),
        });
    }
    let direct = SplittingType::new(c);
    let from_phi = splitting_from_phi(&phi_table(summary), summary.s())?;
    if from_phi != direct {
        return Err(FormulaError::CrossCheckFailure { from_phi, direct });
    }
    Ok(direct)
}
