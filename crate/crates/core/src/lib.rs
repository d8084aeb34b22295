//! Exact computation of the normal bundle splitting type of rational monomial
//! curves.
//!
//! A monomial curve of degree `d` in `P^s` is the projection of the rational
//! normal curve from the span `T` of the monomials it does not use. The
//! exponent set of `T` determines everything: [`curve`] decomposes it into
//! blocks and components, [`formula`] evaluates the closed-form counts and
//! assembles the splitting type, and two independent oracles check the
//! answer: [`windows`] counts covering windows by brute force, and [`oracle`]
//! realizes the relevant differential operators as exact integer matrices.
//! [`enumerate`] sweeps every center of a given shape.
//!
//! ```
//! use normbundle::{splitting_type, MonomialSpace};
//!
//! let space = MonomialSpace::from_center(8, &[2, 3, 5, 6])?.validate()?;
//! let c = splitting_type(&space.summary())?;
//! assert_eq!(c.values(), &[4, 2, 2]);
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```

pub mod curve;
pub mod enumerate;
pub mod exact;
pub mod formula;
pub mod oracle;
pub mod windows;

pub use curve::{Block, Component, CurveError, CurveSummary, MonomialSpace, ValidatedSpace};
pub use enumerate::{
    achievable, enumerate, enumerate_with_jobs, sweep_verify, Achievability, EnumerationError,
    EnumerationReport, SweepMismatch, SweepReport, TypeEntry,
};
pub use exact::{ExactMatrix, SubspaceBasis};
pub use formula::{
    direct_c_values, phi_component, phi_table, q, qtilde, splitting_from_phi, splitting_type,
    trunc, FormulaError, Partition, PartitionError, PhiTable, SplittingType,
};
pub use oracle::{
    matrix_d, matrix_p, phi_oracle, phi_table_oracle, phi_values_oracle, qk_oracle,
    splitting_oracle, OracleError,
    TensorBasisIndex,
};
pub use windows::{count_q, count_qtilde, IntervalPartition};
