//! Exact-arithmetic Hochschild (co)homology of finite group algebras and
//! homology of nerves of action groupoids, together with the comparison
//! maps between the two and machine-checked verification of their laws.
//!
//! The crate is organized around five subsystems:
//!
//! * [`fingroup`] — finite groups as validated Cayley tables, conjugacy
//!   classes, centralizers;
//! * [`exactla`] — exact sparse linear algebra: ranks over the rationals
//!   and prime fields, Smith normal form over the integers, homology
//!   dimensions and induced maps on homology;
//! * [`hochschild`] — the Hochschild chain and cochain complexes of the
//!   group algebra, truncated at a degree bound, plus an independent
//!   derivation/inner-derivation computation of HH^1;
//! * [`nerve`] — truncated simplicial chain/cochain complexes of the
//!   nerves of the adjoint-action groupoid, the right-action groupoid,
//!   and the one-object category of the group, plus bar complexes;
//! * [`compare`] — the degreewise comparison maps between the Hochschild
//!   complexes and the nerve complexes, verification of their
//!   commutation laws and induced isomorphisms, the centralizer
//!   decomposition of Hochschild homology, and the dimension count that
//!   rules out the product decomposition of the diagonal induction
//!   module for non-abelian groups.
//!
//! All arithmetic is exact. Coefficients are either arbitrary-precision
//! rationals, prime fields, or arbitrary-precision integers; see
//! [`scalar`] for the scalar abstraction and [`exactla::FieldSpec`] for
//! the runtime selector.

pub mod compare;
pub mod exactla;
pub mod fingroup;
pub mod hochschild;
pub mod nerve;
pub mod report;
pub mod scalar;

/// Exact rational scalar used for characteristic-zero computations.
pub type Rational = num_rational::BigRational;
/// Exact integer scalar used for Smith normal form and torsion.
pub type Int = num_bigint::BigInt;
/// Prime-field scalar with a runtime modulus.
pub type Fp = scalar::Fp;

pub use exactla::{FieldSpec, SparseMatrix};
pub use fingroup::FiniteGroup;

use thiserror::Error;

/// Memory budget for complex construction. The differentials of a degree-N
/// truncation over a group of order n hold on the order of `n^(N+1)` basis
/// columns, so construction refuses up front when the estimate does not fit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub bytes: u64,
}

impl Budget {
    pub const DEFAULT_MB: u64 = 512;

    pub fn from_mb(mb: u64) -> Self {
        Budget {
            bytes: mb.saturating_mul(1 << 20),
        }
    }

    /// Reads `HHNERVE_BUDGET_MB` from the environment, falling back to the
    /// built-in default.
    pub fn from_env() -> Self {
        std::env::var("HHNERVE_BUDGET_MB")
            .ok()
            .and_then(|v| v.parse::<u64>().ok())
            .map(Budget::from_mb)
            .unwrap_or_default()
    }

    /// Checks that a complex whose degree-k spaces have the given basis
    /// sizes fits, assuming about `(k + 2)` stored entries per basis column
    /// of the degree-k differential.
    pub fn admit(&self, order: usize, max_degree: usize, dims: &[usize]) -> Result<(), BudgetError> {
        const BYTES_PER_ENTRY: u64 = 24;
        let mut needed: u64 = 0;
        for (k, &dim) in dims.iter().enumerate() {
            needed = needed.saturating_add((dim as u64).saturating_mul((k as u64 + 2) * BYTES_PER_ENTRY));
        }
        if needed > self.bytes {
            return Err(BudgetError {
                order,
                max_degree,
                needed,
                budget: self.bytes,
            });
        }
        Ok(())
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::from_mb(Budget::DEFAULT_MB)
    }
}

/// A complex build was refused because its estimated footprint exceeds the
/// configured budget.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
#[error("budget exceeded building a degree-{max_degree} complex for a group of order {order}: need ~{needed} bytes, budget {budget} bytes")]
pub struct BudgetError {
    pub order: usize,
    pub max_degree: usize,
    pub needed: u64,
    pub budget: u64,
}
