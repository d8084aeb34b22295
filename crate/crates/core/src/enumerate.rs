//! Exhaustive sweeps over monomial centers.
//!
//! Centers are generated directly as subsets of `[2, d-2]`, so every one of
//! them is already valid. Work is split across a rayon pool and merged with
//! an order-independent fold, so reports do not depend on scheduling.

use std::collections::BTreeMap;

use itertools::Itertools;
use rayon::prelude::*;
use thiserror::Error;

use crate::curve::{MonomialSpace, ValidatedSpace};
use crate::formula::{splitting_type, FormulaError, SplittingType};
use crate::oracle::splitting_oracle;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerationError {
    #[error("need d > s >= 3, got d = {degree}, s = {s}")]
    InvalidRange { degree: usize, s: usize },

    #[error("candidate {candidate:?} needs {expected_len} entries summing to {expected_sum}")]
    MalformedCandidate {
        candidate: Vec<usize>,
        expected_len: usize,
        expected_sum: usize,
    },

    #[error("failed to start worker pool: {0}")]
    Pool(String),

    #[error(transparent)]
    Formula(#[from] FormulaError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeEntry {
    pub count: usize,
    /// Lexicographically smallest center producing this type.
    pub witness: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationReport {
    pub degree: usize,
    pub s: usize,
    pub total_spaces: usize,
    pub histogram: BTreeMap<SplittingType, TypeEntry>,
}

type Histogram = BTreeMap<SplittingType, TypeEntry>;

fn record(mut hist: Histogram, c: SplittingType, center: Vec<usize>) -> Histogram {
    hist.entry(c)
        .and_modify(|e| {
            e.count += 1;
            if center < e.witness {
                e.witness = center.clone();
            }
        })
        .or_insert(TypeEntry {
            count: 1,
            witness: center,
        });
    hist
}

fn merge(mut left: Histogram, right: Histogram) -> Histogram {
    for (c, entry) in right {
        left.entry(c)
            .and_modify(|e| {
                e.count += entry.count;
                if entry.witness < e.witness {
                    e.witness = entry.witness.clone();
                }
            })
            .or_insert(entry);
    }
    left
}

fn centers(degree: usize, size: usize) -> Vec<Vec<usize>> {
    (2..=degree - 2).combinations(size).collect()
}

fn validated(degree: usize, center: &[usize]) -> ValidatedSpace {
    MonomialSpace::from_center(degree, center)
        .and_then(MonomialSpace::validate)
        .expect("generated centers lie in [2, d-2]")
}

/// Splitting types of every center of dimension `d - s`, on the current
/// rayon pool.
pub fn enumerate(degree: usize, s: usize) -> Result<EnumerationReport, EnumerationError> {
    if s < 3 || degree <= s {
        return Err(EnumerationError::InvalidRange { degree, s });
    }
    let all = centers(degree, degree - s);
    let histogram = all
        .par_iter()
        .try_fold(Histogram::new, |hist, center| {
            let c = splitting_type(&validated(degree, center).summary())?;
            Ok::<_, FormulaError>(record(hist, c, center.clone()))
        })
        .try_reduce(Histogram::new, |a, b| Ok(merge(a, b)))?;
    Ok(EnumerationReport {
        degree,
        s,
        total_spaces: all.len(),
        histogram,
    })
}

/// As [`enumerate`], on a dedicated pool of `jobs` workers (`None` lets
/// rayon decide).
pub fn enumerate_with_jobs(
    degree: usize,
    s: usize,
    jobs: Option<usize>,
) -> Result<EnumerationReport, EnumerationError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.unwrap_or(0))
        .build()
        .map_err(|e| EnumerationError::Pool(e.to_string()))?;
    pool.install(|| enumerate(degree, s))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Achievability {
    Achievable { witness: Vec<usize> },
    NotAchievable,
}

/// Whether some monomial center of degree `d` in `P^s` has splitting type
/// `candidate`.
pub fn achievable(
    degree: usize,
    s: usize,
    candidate: &[usize],
) -> Result<Achievability, EnumerationError> {
    if s < 3 || degree <= s {
        return Err(EnumerationError::InvalidRange { degree, s });
    }
    let expected_len = s - 1;
    let expected_sum = 2 * (degree - s);
    if candidate.len() != expected_len || candidate.iter().sum::<usize>() != expected_sum {
        return Err(EnumerationError::MalformedCandidate {
            candidate: candidate.to_vec(),
            expected_len,
            expected_sum,
        });
    }
    let wanted = SplittingType::new(candidate.to_vec());
    let report = enumerate(degree, s)?;
    Ok(match report.histogram.get(&wanted) {
        Some(entry) => Achievability::Achievable {
            witness: entry.witness.clone(),
        },
        None => Achievability::NotAchievable,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepMismatch {
    pub degree: usize,
    pub exponents: Vec<usize>,
    pub formula: Result<SplittingType, FormulaError>,
    pub oracle: Result<SplittingType, FormulaError>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepReport {
    pub d_max: usize,
    pub spaces_checked: usize,
    /// `(d, number of centers checked)` for each degree.
    pub per_degree: Vec<(usize, usize)>,
    pub first_mismatch: Option<SweepMismatch>,
}

impl SweepReport {
    pub fn success(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

/// Compares the closed form against the linear-algebra oracle on every
/// valid center with `6 <= d <= d_max`.
pub fn sweep_verify(d_max: usize) -> SweepReport {
    let mut per_degree = Vec::new();
    let mut first_mismatch = None;
    for degree in 6..=d_max {
        let width = degree - 3;
        let results: Vec<Option<SweepMismatch>> = (1u64..1 << width)
            .into_par_iter()
            .map(|mask| {
                let center: Vec<usize> = (0..width)
                    .filter(|b| mask >> b & 1 == 1)
                    .map(|b| b + 2)
                    .collect();
                let space = validated(degree, &center);
                let formula = splitting_type(&space.summary());
                let oracle = splitting_oracle(&space);
                match (&formula, &oracle) {
                    (Ok(a), Ok(b)) if a == b => None,
                    _ => Some(SweepMismatch {
                        degree,
                        exponents: center,
                        formula,
                        oracle,
                    }),
                }
            })
            .collect();
        per_degree.push((degree, results.len()));
        if first_mismatch.is_none() {
            first_mismatch = results.into_iter().flatten().next();
        }
    }
    SweepReport {
        d_max,
        spaces_checked: per_degree.iter().map(|&(_, n)| n).sum(),
        per_degree,
        first_mismatch,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumerate_smallest_case() {
        let report = enumerate(6, 3).unwrap();
        assert_eq!(report.total_spaces, 1);
        let types: Vec<_> = report.histogram.keys().map(|c| c.values().to_vec()).collect();
        assert_eq!(types, vec![vec![3, 3]]);
    }

    #[test]
    fn enumerate_rejects_bad_range() {
        assert_eq!(
            enumerate(6, 2),
            Err(EnumerationError::InvalidRange { degree: 6, s: 2 })
        );
        assert_eq!(
            enumerate(5, 5),
            Err(EnumerationError::InvalidRange { degree: 5, s: 5 })
        );
    }

    #[test]
    fn witness_is_smallest_center() {
        let report = enumerate(12, 5).unwrap();
        let entry = &report.histogram[&SplittingType::new(vec![7, 7, 0, 0])];
        assert_eq!(entry.witness, vec![2, 3, 4, 5, 6, 7, 8]);
    }

    #[test]
    fn achievable_checks_shape() {
        assert!(matches!(
            achievable(12, 5, &[6, 4, 2]),
            Err(EnumerationError::MalformedCandidate { .. })
        ));
        assert!(matches!(
            achievable(12, 5, &[6, 4, 2, 1]),
            Err(EnumerationError::MalformedCandidate { .. })
        ));
    }

    #[test]
    fn sweep_smallest_degree() {
        let report = sweep_verify(6);
        assert!(report.success());
        assert_eq!(report.spaces_checked, 7);
        assert_eq!(report.per_degree, vec![(6, 7)]);
    }

    #[test]
    fn merge_is_order_independent() {
        let a = record(Histogram::new(), SplittingType::new(vec![2, 2]), vec![3]);
        let b = record(Histogram::new(), SplittingType::new(vec![2, 2]), vec![2]);
        assert_eq!(merge(a.clone(), b.clone()), merge(b, a));
    }
}
