//! Numerical checks for the curvature identities of closed minimal
//! hypersurfaces of the unit sphere with two distinct principal curvatures.
//!
//! The crate is organized around the objects those identities live on:
//!
//! * [`spectra`] — pointwise principal-curvature algebra and the dimension-4
//!   curvature invariants, with an independent Gauss-equation tensor oracle;
//! * [`clifford`] — exact Clifford product-sphere models, their volumes and
//!   Euler-characteristic bookkeeping;
//! * [`otsuki`] — the rotational profile ODE, its conserved first integral,
//!   fixed-step integration with period detection, and a quadrature oracle
//!   for the period;
//! * [`measure`] — weighted period integrals, σ_k moments, the radial
//!   Laplacian, and residuals of the key integral identities;
//! * [`pinching`] — the thresholds δ_k(n) as roots of the sign polynomial;
//! * [`lowdim`] — the analytic dimension-2 checks;
//! * [`cli`], [`report`], [`suite`] — the command-line front end, the
//!   serialized report envelope, and the aggregated check suite.

pub mod cli;
pub mod clifford;
pub mod error;
pub mod lowdim;
pub mod measure;
pub mod otsuki;
pub mod pinching;
pub mod report;
pub mod spectra;
pub mod suite;

pub use error::{Error, Result};

/// Which coefficient set to use where two variants are implemented side by
/// side: the internally consistent one obtained by differentiation
/// (`Corrected`) and the one carried by the printed formulas (`Printed`).
/// The two agree at k = 2 and diverge for k ≥ 3; the residual checks
/// demonstrate which variant satisfies the identities.
#[derive(
    Debug,
    Clone,
    Copy,
    PartialEq,
    Eq,
    Hash,
    clap::ValueEnum,
    serde::Serialize,
    serde::Deserialize,
)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    Corrected,
    Printed,
}

impl std::fmt::Display for Variant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Variant::Corrected => write!(f, "corrected"),
            Variant::Printed => write!(f, "printed"),
        }
    }
}

/// Symmetric residual |lhs − rhs| / (|lhs| + |rhs| + 1).
///
/// The +1 keeps identities whose both sides vanish meaningful: the residual
/// of (0, 0) is 0 rather than 0/0.
pub fn residual(lhs: f64, rhs: f64) -> f64 {
    (lhs - rhs).abs() / (lhs.abs() + rhs.abs() + 1.0)
}

/// Plain relative error against a known reference, |x − want| / max(|want|, 1e−300).
pub fn rel_err(x: f64, want: f64) -> f64 {
    (x - want).abs() / want.abs().max(1e-300)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn residual_handles_double_zero() {
        assert_eq!(residual(0.0, 0.0), 0.0);
        assert!(residual(1.0, 1.0 + 1e-12) < 1e-12);
        assert!(residual(100.0, 101.0) < 1.0 / 200.0);
    }

    #[test]
    fn rel_err_is_scale_free() {
        assert!(rel_err(1e6 + 1.0, 1e6) - 1e-6 < 1e-18);
        assert_eq!(rel_err(2.0, 2.0), 0.0);
    }
}
