//! Monomial projection centers and their block structure.
//!
//! Exponent `i` stands for the monomial `x^(d-i) y^i` of `S^d U`. A center
//! `T` is a set of such exponents; the curve is parametrized by the
//! complementary monomials.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::formula::Partition;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CurveError {
    #[error("degree {0} is too small: need d >= 4")]
    DegreeTooSmall(usize),

    #[error("projection center is empty")]
    EmptyCenter,

    #[error("exponent {exponent} is outside [0, {degree}]")]
    ExponentOutOfRange { exponent: usize, degree: usize },

    #[error("center has {dim} monomials but degree {degree} allows at most {max} (need s >= 3)")]
    DimensionTooLarge { dim: usize, degree: usize, max: usize },

    #[error("curve monomials must include both x^d and y^d (exponents 0 and {degree}); missing {missing}")]
    MissingEndpoints { degree: usize, missing: usize },

    #[error("exponent {0} is forbidden in the center: it yields a base point or a cusp")]
    CuspOrBasepointForbidden(usize),
}

/// A subspace of `S^d U` spanned by monomials, given by its exponent set.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialSpace {
    degree: usize,
    exponents: Vec<usize>,
}

impl MonomialSpace {
    /// Builds the center directly from its exponents. Input order and
    /// repetitions are irrelevant.
    pub fn from_center(degree: usize, exponents: &[usize]) -> Result<Self, CurveError> {
        if degree < 4 {
            return Err(CurveError::DegreeTooSmall(degree));
        }
        let set: BTreeSet<usize> = exponents.iter().copied().collect();
        if set.is_empty() {
            return Err(CurveError::EmptyCenter);
        }
        if let Some(&exponent) = set.iter().find(|&&i| i > degree) {
            return Err(CurveError::ExponentOutOfRange { exponent, degree });
        }
        let max = degree - 3;
        if set.len() > max {
            return Err(CurveError::DimensionTooLarge {
                dim: set.len(),
                degree,
                max,
            });
        }
        Ok(Self {
            degree,
            exponents: set.into_iter().collect(),
        })
    }

    /// Builds the center from the exponents the curve itself uses; the
    /// center is their complement in `[0, d]`.
    pub fn from_curve(degree: usize, curve_exponents: &[usize]) -> Result<Self, CurveError> {
        if degree < 4 {
            return Err(CurveError::DegreeTooSmall(degree));
        }
        let used: BTreeSet<usize> = curve_exponents.iter().copied().collect();
        if let Some(&exponent) = used.iter().find(|&&i| i > degree) {
            return Err(CurveError::ExponentOutOfRange { exponent, degree });
        }
        for endpoint in [0, degree] {
            if !used.contains(&endpoint) {
                return Err(CurveError::MissingEndpoints {
                    degree,
                    missing: endpoint,
                });
            }
        }
        let center: Vec<usize> = (0..=degree).filter(|i| !used.contains(i)).collect();
        Self::from_center(degree, &center)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn exponents(&self) -> &[usize] {
        &self.exponents
    }

    /// `dim T = e + 1`.
    pub fn dim(&self) -> usize {
        self.exponents.len()
    }

    pub fn e(&self) -> usize {
        self.exponents.len() - 1
    }

    /// Dimension of the target projective space, `s = d - e - 1`.
    pub fn s(&self) -> usize {
        self.degree - self.exponents.len()
    }

    /// Rejects centers containing `x^d`, `x^(d-1) y`, `x y^(d-1)` or `y^d`.
    pub fn validate(self) -> Result<ValidatedSpace, CurveError> {
        let d = self.degree;
        for forbidden in [0, 1, d - 1, d] {
            if self.exponents.binary_search(&forbidden).is_ok() {
                return Err(CurveError::CuspOrBasepointForbidden(forbidden));
            }
        }
        Ok(ValidatedSpace { space: self })
    }
}

impl fmt::Display for MonomialSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "d={} T=[", self.degree)?;
        for (n, i) in self.exponents.iter().enumerate() {
            if n > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}")?;
        }
        f.write_str("]")
    }
}

/// A center whose exponents all lie in `[2, d-2]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ValidatedSpace {
    space: MonomialSpace,
}

impl ValidatedSpace {
    pub fn space(&self) -> &MonomialSpace {
        &self.space
    }

    pub fn degree(&self) -> usize {
        self.space.degree
    }

    pub fn exponents(&self) -> &[usize] {
        &self.space.exponents
    }

    pub fn e(&self) -> usize {
        self.space.e()
    }

    pub fn s(&self) -> usize {
        self.space.s()
    }

    /// Maximal runs of consecutive exponents, in increasing order.
    pub fn blocks(&self) -> Vec<Block> {
        let mut blocks: Vec<Block> = Vec::new();
        for &i in &self.space.exponents {
            match blocks.last_mut() {
                Some(block) if block.beta + 1 == i => block.beta = i,
                _ => blocks.push(Block { alpha: i, beta: i }),
            }
        }
        blocks
    }

    /// Groups blocks into maximal runs whose inter-block gaps are exactly 2.
    pub fn components(&self) -> Vec<Component> {
        let mut groups: Vec<Vec<Block>> = Vec::new();
        for block in self.blocks() {
            match groups.last_mut() {
                Some(group) if group.last().is_some_and(|prev| block.alpha == prev.beta + 2) => {
                    group.push(block)
                }
                _ => groups.push(vec![block]),
            }
        }
        groups
            .into_iter()
            .map(|blocks| Component::new(blocks, self.space.degree))
            .collect()
    }

    /// `dim ∂^{-k} T = Σ [[b_i - k + 1]]` over the blocks.
    pub fn dim_inverse_derivative(&self, k: usize) -> usize {
        self.blocks()
            .iter()
            .map(|block| (block.b() + 1).saturating_sub(k))
            .sum()
    }

    pub fn summary(&self) -> CurveSummary {
        let components = self.components();
        let dim_d2t = components.iter().map(|c| c.lambda() + 1).sum();
        CurveSummary {
            degree: self.space.degree,
            e: self.space.e(),
            s: self.space.s(),
            components,
            dim_d2t,
        }
    }
}

/// A run `[alpha, beta]` of consecutive exponents.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Block {
    pub alpha: usize,
    pub beta: usize,
}

impl Block {
    pub fn b(&self) -> usize {
        self.beta - self.alpha
    }

    pub fn gamma(&self) -> usize {
        self.b() + 2
    }
}

/// A maximal group of blocks separated by gaps of exactly 2. When it has at
/// least two blocks it is a special space with height `lambda` and apex of
/// degree `d + lambda - 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Component {
    blocks: Vec<Block>,
    lambda: usize,
    partition: Partition,
    apex_degree: usize,
}

impl Component {
    fn new(blocks: Vec<Block>, degree: usize) -> Self {
        debug_assert!(!blocks.is_empty());
        let parts: Vec<usize> = blocks.iter().map(Block::gamma).collect();
        let lambda = parts.iter().sum();
        let partition = Partition::new(parts).expect("block gammas are at least 2");
        Self {
            blocks,
            lambda,
            partition,
            apex_degree: degree + lambda - 2,
        }
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    /// Number of blocks, `r`.
    pub fn r(&self) -> usize {
        self.blocks.len()
    }

    pub fn b_values(&self) -> Vec<usize> {
        self.blocks.iter().map(Block::b).collect()
    }

    pub fn lambda(&self) -> usize {
        self.lambda
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn apex_degree(&self) -> usize {
        self.apex_degree
    }

    pub fn is_special(&self) -> bool {
        self.blocks.len() >= 2
    }

    pub fn first_alpha(&self) -> usize {
        self.blocks[0].alpha
    }

    pub fn last_beta(&self) -> usize {
        self.blocks[self.blocks.len() - 1].beta
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveSummary {
    degree: usize,
    e: usize,
    s: usize,
    components: Vec<Component>,
    dim_d2t: usize,
}

impl CurveSummary {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn e(&self) -> usize {
        self.e
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    /// `dim ∂²T`.
    pub fn dim_d2t(&self) -> usize {
        self.dim_d2t
    }

    /// Number of zero entries in the splitting type, `d - 1 - dim ∂²T`.
    pub fn zero_count(&self) -> usize {
        self.degree - 1 - self.dim_d2t
    }
}
