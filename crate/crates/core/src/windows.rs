//! Brute-force covering-window counts.
//!
//! A partition is laid out as consecutive integer intervals and every window
//! `[j+1, j+k]` that could possibly contain a part is tested directly. No
//! cleverness here: this module is the reference the closed forms in
//! [`crate::formula`] are checked against.

use crate::formula::Partition;

/// A partition realized as adjacent closed intervals `[a_i, b_i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalPartition {
    parts: Vec<(i64, i64)>,
}

impl IntervalPartition {
    /// Lays the parts out left to right starting at `base`.
    pub fn realize(partition: &Partition, base: i64) -> Self {
        let mut parts = Vec::with_capacity(partition.r());
        let mut a = base;
        for &g in partition.parts() {
            let b = a + g as i64 - 1;
            parts.push((a, b));
            a = b + 1;
        }
        Self { parts }
    }

    pub fn parts(&self) -> &[(i64, i64)] {
        &self.parts
    }

    pub fn start(&self) -> i64 {
        self.parts[0].0
    }

    pub fn end(&self) -> i64 {
        self.parts[self.parts.len() - 1].1
    }

    /// Whether `[j+1, j+k]` contains some part entirely.
    pub fn covers(&self, j: i64, k: usize) -> bool {
        let (lo, hi) = (j + 1, j + k as i64);
        self.parts.iter().any(|&(a, b)| lo <= a && b <= hi)
    }

    /// Covering windows anywhere in `Z`. Any covering window meets
    /// `[start, end]`, so `j` ranges over `[start - k, end - 1]`.
    pub fn count_qtilde(&self, k: usize) -> usize {
        (self.start() - k as i64..self.end())
            .filter(|&j| self.covers(j, k))
            .count()
    }

    /// Covering windows contained in `[start, end]`.
    pub fn count_q(&self, k: usize) -> usize {
        let last = self.end() - k as i64;
        (self.start() - 1..=last)
            .filter(|&j| self.covers(j, k))
            .count()
    }
}

pub fn count_qtilde(k: usize, partition: &Partition) -> usize {
    IntervalPartition::realize(partition, 1).count_qtilde(k)
}

pub fn count_q(k: usize, partition: &Partition) -> usize {
    IntervalPartition::realize(partition, 1).count_q(k)
}
