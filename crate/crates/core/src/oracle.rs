//! Independent route to `φ(k)` through exact kernel dimensions.
//!
//! Bases are monomial throughout. `S^k U ⊗ S^d U` is indexed by pairs
//! `(i, j)` of `y`-exponents, flattened as `i·(d+1) + j`. The operator
//! `D_k = ∂_x⊗∂_y − ∂_y⊗∂_x` and the polarization `p_k` are built as integer
//! matrices, and `φ(k)` is the kernel dimension of `D_{k-1}·D_k` restricted
//! to `S^k U ⊗ T`.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::curve::ValidatedSpace;
use crate::exact::{ExactMatrix, SubspaceBasis};
use crate::formula::{splitting_from_phi, FormulaError, PhiTable, SplittingType};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("center has {0} components; the Q_k oracle needs exactly one")]
    NotSingleComponent(usize),
    #[error("k = {k} is outside [2, {lambda}]")]
    KOutOfRange { k: usize, lambda: usize },
}

/// Basis element `x^(k-i) y^i ⊗ x^(d-j) y^j` of `S^k U ⊗ S^d U`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TensorBasisIndex {
    pub i: usize,
    pub j: usize,
}

impl TensorBasisIndex {
    pub fn flat(self, d: usize) -> usize {
        self.i * (d + 1) + self.j
    }

    pub fn from_flat(index: usize, d: usize) -> Self {
        Self {
            i: index / (d + 1),
            j: index % (d + 1),
        }
    }
}

fn falling(n: usize, k: usize) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, t| {
        if t >= n {
            BigInt::zero()
        } else {
            acc * (n - t)
        }
    })
}

fn binomial(n: usize, k: usize) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, t| acc * (n - t) / (t + 1))
}

/// `D_k : S^k U ⊗ S^d U → S^{k-1} U ⊗ S^{d-1} U`. Basis element `(i, j)`
/// maps to `(k-i)·j·(i, j-1) − i·(d-j)·(i-1, j)`.
pub fn matrix_d(k: usize, d: usize) -> ExactMatrix {
    assert!(k >= 1 && d >= 1, "D_k needs k, d >= 1");
    let mut m = ExactMatrix::zeros(k * d, (k + 1) * (d + 1));
    for i in 0..=k {
        for j in 0..=d {
            let col = TensorBasisIndex { i, j }.flat(d);
            if i < k && j > 0 {
                let row = TensorBasisIndex { i, j: j - 1 }.flat(d - 1);
                m.add(row, col, BigInt::from((k - i) * j));
            }
            if i > 0 && j < d {
                let row = TensorBasisIndex { i: i - 1, j }.flat(d - 1);
                m.add(row, col, -BigInt::from(i * (d - j)));
            }
        }
    }
    m
}

/// `p_k : S^{d+k} U → S^k U ⊗ S^d U` with the rational prefactor cleared.
/// Column `m` is the monomial `x^(d+k-m) y^m`; its image has entry
/// `C(k,i)·(d+k-m)_{k-i}·(m)_i` at `(i, m-i)`.
pub fn matrix_p(k: usize, d: usize) -> ExactMatrix {
    assert!(k >= 1 && d >= 1, "p_k needs k, d >= 1");
    let n = d + k;
    let mut out = ExactMatrix::zeros((k + 1) * (d + 1), n + 1);
    for m in 0..=n {
        for i in 0..=k.min(m) {
            if m - i > d {
                continue;
            }
            let value = binomial(k, i) * falling(n - m, k - i) * falling(m, i);
            let row = TensorBasisIndex { i, j: m - i }.flat(d);
            out.add(row, m, value);
        }
    }
    out
}

/// `D_{k-1}·D_k` restricted to the columns of `S^k U ⊗ T`.
fn d_squared_on_center(space: &ValidatedSpace, k: usize) -> ExactMatrix {
    let d = space.degree();
    let full = matrix_d(k - 1, d - 1).mul(&matrix_d(k, d));
    let cols: Vec<usize> = (0..=k)
        .flat_map(|i| space.exponents().iter().map(move |&j| TensorBasisIndex { i, j }.flat(d)))
        .collect();
    full.select_columns(&cols)
}

/// `φ(k) = dim ker(D² on S^k U ⊗ T)` for `k >= 2`.
pub fn phi_oracle(space: &ValidatedSpace, k: usize) -> usize {
    assert!(k >= 2, "phi_oracle needs k >= 2");
    let m = d_squared_on_center(space, k);
    m.cols() - m.rank()
}

/// Oracle `φ` values for `k = 0..=k_limit`, stopping early after two
/// consecutive zeros.
pub fn phi_values_oracle(space: &ValidatedSpace, k_limit: usize) -> Vec<usize> {
    let e = space.e();
    let mut values = vec![space.degree() + e, 2 * (e + 1)];
    let mut k = 2;
    while k <= k_limit && (values[values.len() - 1] != 0 || values[values.len() - 2] != 0) {
        values.push(phi_oracle(space, k));
        k += 1;
    }
    values.truncate(k_limit.saturating_add(1));
    values
}

pub fn phi_table_oracle(space: &ValidatedSpace) -> PhiTable {
    PhiTable::from_values(phi_values_oracle(space, usize::MAX))
}

pub fn splitting_oracle(space: &ValidatedSpace) -> Result<SplittingType, FormulaError> {
    splitting_from_phi(&phi_table_oracle(space), space.s())
}

/// `dim Q_k` for a single-component center: the part of
/// `p_{k-1}(∂^{λ-k} h)` not reached by `D_k(S^k U ⊗ T)`.
pub fn qk_oracle(space: &ValidatedSpace, k: usize) -> Result<usize, OracleError> {
    let components = space.components();
    if components.len() != 1 {
        return Err(OracleError::NotSingleComponent(components.len()));
    }
    let comp = &components[0];
    let lambda = comp.lambda();
    if k < 2 || k > lambda {
        return Err(OracleError::KOutOfRange { k, lambda });
    }
    let d = space.degree();
    let (alpha, beta) = (comp.first_alpha(), comp.last_beta());

    // apex h = x^(d-alpha) y^beta; generators ∂_x^j ∂_y^(λ-k-j) h live in
    // S^{d+k-2} U
    let target_dim = d + k - 1;
    let generators: Vec<Vec<BigInt>> = (0..=lambda - k)
        .map(|j| {
            let dy = lambda - k - j;
            let mut v = vec![BigInt::zero(); target_dim];
            v[beta - dy] = falling(d - alpha, j) * falling(beta, dy);
            v
        })
        .collect();
    let apex_derivatives = ExactMatrix::from_columns(target_dim, &generators);
    let polarized = matrix_p(k - 1, d - 1).mul(&apex_derivatives).column_space();

    let cols: Vec<usize> = (0..=k)
        .flat_map(|i| space.exponents().iter().map(move |&j| TensorBasisIndex { i, j }.flat(d)))
        .collect();
    let image: SubspaceBasis = matrix_d(k, d).select_columns(&cols).column_space();

    Ok(polarized.dim() - polarized.intersection_dim(&image))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::MonomialSpace;

    fn validated(d: usize, t: &[usize]) -> ValidatedSpace {
        MonomialSpace::from_center(d, t).unwrap().validate().unwrap()
    }

    #[test]
    fn tensor_index_round_trip() {
        for idx in 0..35 {
            assert_eq!(TensorBasisIndex::from_flat(idx, 6).flat(6), idx);
        }
    }

    #[test]
    fn d1_on_lines() {
        let m = matrix_d(1, 1);
        assert_eq!((m.rows(), m.cols()), (1, 4));
        assert_eq!(m, ExactMatrix::from_rows(&[vec![0, 1, -1, 0]]));
    }

    #[test]
    fn p_dimensions() {
        let p = matrix_p(3, 5);
        assert_eq!((p.rows(), p.cols()), (24, 9));
        assert_eq!(p.rank(), 9);
    }

    #[test]
    fn phi_oracle_examples() {
        assert_eq!(phi_oracle(&validated(6, &[2, 3, 4]), 2), 4);
        assert_eq!(phi_oracle(&validated(8, &[2, 3, 5, 6]), 3), 2);
        assert_eq!(phi_oracle(&validated(8, &[2, 3, 5, 6]), 4), 1);
        assert_eq!(phi_oracle(&validated(8, &[2, 3, 5, 6]), 7), 0);
    }

    #[test]
    fn qk_oracle_examples() {
        assert_eq!(qk_oracle(&validated(8, &[2, 3, 5, 6]), 4), Ok(2));
        assert_eq!(qk_oracle(&validated(6, &[2, 3, 4]), 4), Ok(1));
        assert_eq!(qk_oracle(&validated(6, &[2, 3, 4]), 2), Ok(0));
    }

    #[test]
    fn qk_oracle_preconditions() {
        assert_eq!(
            qk_oracle(&validated(12, &[2, 3, 7, 8]), 2),
            Err(OracleError::NotSingleComponent(2))
        );
        assert_eq!(
            qk_oracle(&validated(6, &[2, 3, 4]), 5),
            Err(OracleError::KOutOfRange { k: 5, lambda: 4 })
        );
    }

    #[test]
    fn oracle_tables() {
        assert_eq!(
            phi_table_oracle(&validated(8, &[2, 3, 5, 6])).values(),
            &[11, 8, 5, 2, 1, 0, 0]
        );
        assert_eq!(
            phi_table_oracle(&validated(6, &[2, 3, 4])).values(),
            &[8, 6, 4, 2, 0, 0]
        );
        assert_eq!(phi_values_oracle(&validated(8, &[2, 3, 5, 6]), 3), vec![11, 8, 5, 2]);
        assert_eq!(
            splitting_oracle(&validated(12, &[2, 3, 4, 5, 6, 7, 8]))
                .unwrap()
                .values(),
            &[7, 7, 0, 0]
        );
    }
}
