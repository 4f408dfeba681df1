//! Pointwise algebra of principal-curvature spectra and the curvature
//! invariants of a minimal hypersurface in the unit sphere.
//!
//! Two independent routes to the same invariants are kept side by side:
//! closed forms in the power sums (`curvature_invariants_dim4`,
//! `gbc_integrand`) and a raw Gauss-equation contraction
//! (`curvature_tensor_oracle`) that assembles the full curvature tensor and
//! contracts it by the definitions. The oracle is the ground truth the
//! closed forms are tested against.

use rand::Rng;

use crate::error::{Error, Result};
use crate::residual;

/// Absolute tolerance on the trace Σ mᵢλᵢ for a spectrum to count as minimal.
/// All spectra here are constructed, not measured, so the tolerance is tight.
pub const MINIMALITY_TOL: f64 = 1e-12;

/// Relative tolerance for the conformally-flat / Einstein classification.
pub const CLASSIFY_TOL: f64 = 1e-10;

/// Principal curvatures with multiplicities at a point of a hypersurface.
///
/// Stored as (value, multiplicity) pairs so the multiplicity structure is
/// first-class; `dimension` is the sum of the multiplicities.
#[derive(Debug, Clone, PartialEq)]
pub struct PrincipalSpectrum {
    entries: Vec<(f64, u32)>,
    n: u32,
}

impl PrincipalSpectrum {
    pub fn new(entries: Vec<(f64, u32)>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::Spectrum("spectrum has no entries".into()));
        }
        let mut n: u32 = 0;
        for &(value, mult) in &entries {
            if !value.is_finite() {
                return Err(Error::Spectrum(format!("non-finite curvature {value}")));
            }
            if mult == 0 {
                return Err(Error::Spectrum("multiplicity must be at least 1".into()));
            }
            n += mult;
        }
        Ok(Self { entries, n })
    }

    pub fn entries(&self) -> &[(f64, u32)] {
        &self.entries
    }

    pub fn dimension(&self) -> u32 {
        self.n
    }

    /// Σ mᵢλᵢ.
    pub fn trace(&self) -> f64 {
        self.entries.iter().map(|&(v, m)| f64::from(m) * v).sum()
    }

    pub fn is_minimal(&self) -> bool {
        self.trace().abs() <= MINIMALITY_TOL
    }

    /// Σ mᵢλᵢᵖ.
    pub fn power_sum(&self, p: u32) -> f64 {
        self.entries
            .iter()
            .map(|&(v, m)| f64::from(m) * v.powi(p as i32))
            .sum()
    }

    /// The eigenvalue list with multiplicities expanded, length `dimension`.
    pub fn eigenvalues(&self) -> Vec<f64> {
        let mut out = Vec::with_capacity(self.n as usize);
        for &(v, m) in &self.entries {
            out.extend(std::iter::repeat(v).take(m as usize));
        }
        out
    }

    /// The spectrum with every curvature negated (the opposite orientation).
    pub fn negated(&self) -> Self {
        Self {
            entries: self.entries.iter().map(|&(v, m)| (-v, m)).collect(),
            n: self.n,
        }
    }
}

fn require_minimal(spec: &PrincipalSpectrum) -> Result<()> {
    if spec.is_minimal() {
        Ok(())
    } else {
        Err(Error::NotMinimal { trace: spec.trace() })
    }
}

fn require_dimension(spec: &PrincipalSpectrum, expected: u32) -> Result<()> {
    if spec.dimension() == expected {
        Ok(())
    } else {
        Err(Error::Dimension {
            expected,
            got: spec.dimension(),
        })
    }
}

/// Curvature invariants of a 4-dimensional minimal hypersurface.
///
/// `weyl_sq` and `gbc_integrand` are only defined in dimension 4; the
/// tensor oracle leaves them NaN for other dimensions.
#[derive(Debug, Clone, Copy, serde::Serialize)]
pub struct CurvatureInvariants {
    pub scalar: f64,
    pub ricci_sq: f64,
    pub weyl_sq: f64,
    pub tracefree_ricci_sq: f64,
    pub gbc_integrand: f64,
}

/// Closed forms for the dimension-4 invariants of a minimal spectrum:
///
/// s = 12 − |A|²,  |Ric|² = 36 − 6|A|² + Σλᵢ⁴,  |W|² = (7/3)|A|⁴ − 4Σλᵢ⁴,
/// |Ring|² = Σλᵢ⁴ − ¼|A|⁴, and the Euler-density integrand
/// (3/2)|A|⁴ − 3Σλᵢ⁴ − 2|A|² + 12.
pub fn curvature_invariants_dim4(spec: &PrincipalSpectrum) -> Result<CurvatureInvariants> {
    require_dimension(spec, 4)?;
    require_minimal(spec)?;
    let a2 = spec.power_sum(2);
    let p4 = spec.power_sum(4);
    Ok(CurvatureInvariants {
        scalar: 12.0 - a2,
        ricci_sq: 36.0 - 6.0 * a2 + p4,
        weyl_sq: (7.0 / 3.0) * a2 * a2 - 4.0 * p4,
        tracefree_ricci_sq: p4 - 0.25 * a2 * a2,
        gbc_integrand: 1.5 * a2 * a2 - 3.0 * p4 - 2.0 * a2 + 12.0,
    })
}

/// The dimension-4 Euler-density integrand computed two algebraically
/// independent ways: directly in the power sums, and as
/// s²/3 − |Ric|² + |W|²/2 through the closed-form invariants.
/// The two must agree; the caller asserts it.
pub fn gbc_integrand(spec: &PrincipalSpectrum) -> Result<(f64, f64)> {
    let inv = curvature_invariants_dim4(spec)?;
    let via_decomposition = inv.scalar * inv.scalar / 3.0 - inv.ricci_sq + 0.5 * inv.weyl_sq;
    Ok((inv.gbc_integrand, via_decomposition))
}

/// Ground-truth route: assemble the full curvature tensor from the Gauss
/// equation
///
/// R_ijkl = δ_ik δ_jl − δ_il δ_jk + h_ik h_jl − h_il h_jk
///
/// with h diagonal, then contract by the raw definitions of s, |Ric|² and
/// (in dimension 4) |W|². No closed form is used anywhere on this path.
pub fn curvature_tensor_oracle(spec: &PrincipalSpectrum) -> Result<CurvatureInvariants> {
    let n = spec.dimension() as usize;
    if n < 3 {
        return Err(Error::Dimension {
            expected: 3,
            got: spec.dimension(),
        });
    }
    require_minimal(spec)?;

    let lam = spec.eigenvalues();
    let delta = |i: usize, j: usize| if i == j { 1.0 } else { 0.0 };
    let h = |i: usize, j: usize| if i == j { lam[i] } else { 0.0 };

    let idx = |i: usize, j: usize, k: usize, l: usize| ((i * n + j) * n + k) * n + l;
    let mut r = vec![0.0f64; n * n * n * n];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    r[idx(i, j, k, l)] = delta(i, k) * delta(j, l) - delta(i, l) * delta(j, k)
                        + h(i, k) * h(j, l)
                        - h(i, l) * h(j, k);
                }
            }
        }
    }

    let mut scalar = 0.0;
    for i in 0..n {
        for j in 0..n {
            scalar += r[idx(i, j, i, j)];
        }
    }

    let mut ric = vec![0.0f64; n * n];
    for i in 0..n {
        for j in 0..n {
            let mut sum = 0.0;
            for k in 0..n {
                sum += r[idx(i, k, j, k)];
            }
            ric[i * n + j] = sum;
        }
    }
    let ricci_sq: f64 = ric.iter().map(|v| v * v).sum();
    let tracefree_ricci_sq = ricci_sq - scalar * scalar / n as f64;

    let (weyl_sq, gbc) = if n == 4 {
        let mut w2 = 0.0;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        let w = r[idx(i, j, k, l)]
                            - 0.5
                                * (ric[i * n + k] * delta(j, l) - ric[i * n + l] * delta(j, k)
                                    + ric[j * n + l] * delta(i, k)
                                    - ric[j * n + k] * delta(i, l))
                            + scalar / 6.0 * (delta(i, k) * delta(j, l) - delta(i, l) * delta(j, k));
                        w2 += w * w;
                    }
                }
            }
        }
        (w2, scalar * scalar / 3.0 - ricci_sq + 0.5 * w2)
    } else {
        (f64::NAN, f64::NAN)
    };

    Ok(CurvatureInvariants {
        scalar,
        ricci_sq,
        weyl_sq,
        tracefree_ricci_sq,
        gbc_integrand: gbc,
    })
}

/// Outcome of the dimension-4 classification tests, with the residuals that
/// were compared against [`CLASSIFY_TOL`].
#[derive(Debug, Clone, Copy, serde::Serialize)]
pub struct ClassifyFlags {
    /// |A|⁴ = (12/7)Σλᵢ⁴, i.e. the Weyl tensor vanishes.
    pub lcf: bool,
    /// 4Σλᵢ⁴ = |A|⁴, i.e. the trace-free Ricci tensor vanishes.
    pub einstein: bool,
    pub lcf_residual: f64,
    pub einstein_residual: f64,
}

pub fn classify(spec: &PrincipalSpectrum) -> Result<ClassifyFlags> {
    require_dimension(spec, 4)?;
    require_minimal(spec)?;
    let a2 = spec.power_sum(2);
    let p4 = spec.power_sum(4);
    let a4 = a2 * a2;
    let lcf_residual = residual(a4, 12.0 / 7.0 * p4);
    let einstein_residual = residual(4.0 * p4, a4);
    Ok(ClassifyFlags {
        lcf: lcf_residual <= CLASSIFY_TOL,
        einstein: einstein_residual <= CLASSIFY_TOL,
        lcf_residual,
        einstein_residual,
    })
}

/// Random traceless spectrum: n−1 values uniform in [−10, 10], the last set
/// to minus their sum, all multiplicities 1.
pub fn random_minimal_spectrum<R: Rng + ?Sized>(n: u32, rng: &mut R) -> PrincipalSpectrum {
    assert!(n >= 2, "need at least two curvatures to balance the trace");
    let mut entries: Vec<(f64, u32)> = (1..n)
        .map(|_| (rng.random_range(-10.0..10.0), 1))
        .collect();
    let sum: f64 = entries.iter().map(|&(v, _)| v).sum();
    entries.push((-sum, 1));
    PrincipalSpectrum::new(entries).expect("constructed entries are valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::SeedableRng;

    fn spec(entries: &[(f64, u32)]) -> PrincipalSpectrum {
        PrincipalSpectrum::new(entries.to_vec()).unwrap()
    }

    fn zero4() -> PrincipalSpectrum {
        spec(&[(0.0, 4)])
    }

    #[test]
    fn power_sum_examples() {
        assert_eq!(zero4().power_sum(2), 0.0);
        let s = spec(&[(-3.0, 1), (1.0, 3)]);
        assert_eq!(s.power_sum(2), 12.0);
        assert_eq!(s.power_sum(4), 84.0);
    }

    #[test]
    fn construction_rejects_bad_entries() {
        assert!(PrincipalSpectrum::new(vec![]).is_err());
        assert!(PrincipalSpectrum::new(vec![(1.0, 0)]).is_err());
        assert!(PrincipalSpectrum::new(vec![(f64::NAN, 1)]).is_err());
    }

    #[test]
    fn minimality_flag() {
        assert!(spec(&[(-3.0, 1), (1.0, 3)]).is_minimal());
        assert!(!spec(&[(1.0, 4)]).is_minimal());
    }

    #[test]
    fn invariants_on_totally_geodesic() {
        let inv = curvature_invariants_dim4(&zero4()).unwrap();
        assert_eq!(inv.scalar, 12.0);
        assert_eq!(inv.ricci_sq, 36.0);
        assert_eq!(inv.weyl_sq, 0.0);
        assert_eq!(inv.gbc_integrand, 12.0);
    }

    #[test]
    fn invariants_on_symmetric_clifford_spectrum() {
        let inv = curvature_invariants_dim4(&spec(&[(1.0, 2), (-1.0, 2)])).unwrap();
        assert_eq!(inv.scalar, 8.0);
        assert_eq!(inv.ricci_sq, 16.0);
        assert!((inv.weyl_sq - 64.0 / 3.0).abs() < 1e-13);
        // cross-check the whole struct against the tensor oracle
        let orc = curvature_tensor_oracle(&spec(&[(1.0, 2), (-1.0, 2)])).unwrap();
        assert!(residual(inv.scalar, orc.scalar) < 1e-14);
        assert!(residual(inv.ricci_sq, orc.ricci_sq) < 1e-14);
        assert!(residual(inv.weyl_sq, orc.weyl_sq) < 1e-14);
    }

    #[test]
    fn invariants_on_unbalanced_spectrum() {
        let s = spec(&[(-3.0, 1), (1.0, 3)]);
        let inv = curvature_invariants_dim4(&s).unwrap();
        assert_eq!(inv.scalar, 0.0);
        assert_eq!(inv.ricci_sq, 48.0);
        assert!(inv.weyl_sq.abs() < 1e-12);
        let orc = curvature_tensor_oracle(&s).unwrap();
        assert!(residual(inv.ricci_sq, orc.ricci_sq) < 1e-14);
        assert!(orc.weyl_sq.abs() < 1e-12);
    }

    #[test]
    fn invariants_reject_wrong_inputs() {
        assert!(curvature_invariants_dim4(&spec(&[(1.0, 1), (-1.0, 1)])).is_err());
        assert!(curvature_invariants_dim4(&spec(&[(1.0, 4)])).is_err());
        assert!(curvature_tensor_oracle(&spec(&[(1.0, 1), (-1.0, 1)])).is_err());
    }

    #[test]
    fn gbc_forms_agree_on_examples() {
        let (a, b) = gbc_integrand(&zero4()).unwrap();
        assert_eq!((a, b), (12.0, 12.0));

        let (a, b) = gbc_integrand(&spec(&[(1.0, 2), (-1.0, 2)])).unwrap();
        assert!((a - 16.0).abs() < 1e-12 && (b - 16.0).abs() < 1e-12);

        // the (−3λ, λ, λ, λ) family: both forms reduce to −¼|A|⁴ − 2|A|² + 12
        let s = spec(&[(-2.7, 1), (0.9, 3)]);
        let a2 = s.power_sum(2);
        assert!((a2 - 12.0 * 0.81).abs() < 1e-12);
        let expect = -0.25 * a2 * a2 - 2.0 * a2 + 12.0;
        let (a, b) = gbc_integrand(&s).unwrap();
        assert!(residual(a, expect) < 1e-13);
        assert!(residual(b, expect) < 1e-13);
    }

    #[test]
    fn oracle_matches_closed_forms_on_seeded_batch() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..500 {
            let s = random_minimal_spectrum(4, &mut rng);
            let inv = curvature_invariants_dim4(&s).unwrap();
            let orc = curvature_tensor_oracle(&s).unwrap();
            assert!(residual(inv.scalar, orc.scalar) < 1e-10);
            assert!(residual(inv.ricci_sq, orc.ricci_sq) < 1e-10);
            assert!(residual(inv.weyl_sq, orc.weyl_sq) < 1e-9);
            assert!(residual(inv.gbc_integrand, orc.gbc_integrand) < 1e-9);
            // |Ring|² closed form vs |Ric|² − s²/4 from the oracle
            assert!(residual(inv.tracefree_ricci_sq, orc.tracefree_ricci_sq) < 1e-10);
        }
    }

    #[test]
    fn oracle_on_conformally_flat_clifford() {
        let s = spec(&[(3f64.sqrt(), 1), (-1.0 / 3f64.sqrt(), 3)]);
        let orc = curvature_tensor_oracle(&s).unwrap();
        assert!(orc.weyl_sq.abs() < 1e-13);
    }

    #[test]
    fn classify_examples() {
        let f = classify(&spec(&[(-3.0, 1), (1.0, 3)])).unwrap();
        assert!(f.lcf && !f.einstein);

        let f = classify(&spec(&[(1.0, 2), (-1.0, 2)])).unwrap();
        assert!(f.einstein && !f.lcf);

        let f = classify(&zero4()).unwrap();
        assert!(f.lcf && f.einstein);
    }

    #[test]
    fn random_spectra_are_traceless() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
        for _ in 0..100 {
            let s = random_minimal_spectrum(4, &mut rng);
            assert!(s.is_minimal());
            assert_eq!(s.dimension(), 4);
        }
    }

    prop_compose! {
        // traceless 4-spectra with entries of multiplicity one
        fn traceless4()(v in prop::array::uniform3(-10.0f64..10.0)) -> PrincipalSpectrum {
            let s = v[0] + v[1] + v[2];
            PrincipalSpectrum::new(vec![(v[0], 1), (v[1], 1), (v[2], 1), (-s, 1)]).unwrap()
        }
    }

    proptest! {
        #[test]
        fn gbc_forms_always_agree(s in traceless4()) {
            let (a, b) = gbc_integrand(&s).unwrap();
            prop_assert!(residual(a, b) < 1e-10);
        }

        #[test]
        fn classify_is_permutation_and_sign_invariant(s in traceless4()) {
            let base = classify(&s).unwrap();
            let mut rev = s.entries().to_vec();
            rev.reverse();
            let perm = classify(&PrincipalSpectrum::new(rev).unwrap()).unwrap();
            let neg = classify(&s.negated()).unwrap();
            prop_assert_eq!(base.lcf, perm.lcf);
            prop_assert_eq!(base.einstein, perm.einstein);
            prop_assert_eq!(base.lcf, neg.lcf);
            prop_assert_eq!(base.einstein, neg.einstein);
        }

        #[test]
        fn oracle_tracefree_matches_closed_form(s in traceless4()) {
            let inv = curvature_invariants_dim4(&s).unwrap();
            let orc = curvature_tensor_oracle(&s).unwrap();
            prop_assert!(residual(inv.tracefree_ricci_sq, orc.tracefree_ricci_sq) < 1e-10);
        }
    }
}
