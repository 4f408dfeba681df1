//! Exact models of the Clifford hypersurfaces
//! S^m(√(m/n)) × S^{n−m}(√((n−m)/n)): spectra, volumes, σ_k moments, and
//! the dimension-4 Euler-characteristic check.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::spectra::{self, PrincipalSpectrum};

/// A Clifford product-sphere model inside the unit (n+1)-sphere.
#[derive(Debug, Clone)]
pub struct CliffordModel {
    pub n: u32,
    pub m: u32,
    /// The two factor radii (√(m/n), √((n−m)/n)); their squares sum to 1.
    pub radii: (f64, f64),
    pub spectrum: PrincipalSpectrum,
}

fn validate_nm(n: u32, m: u32) -> Result<()> {
    if n < 2 {
        return Err(Error::Domain(format!("clifford model needs n >= 2, got {n}")));
    }
    if m < 1 || m > n - 1 {
        return Err(Error::Domain(format!(
            "factor dimension m = {m} out of range 1..={}",
            n - 1
        )));
    }
    Ok(())
}

pub fn clifford_model(n: u32, m: u32) -> Result<CliffordModel> {
    validate_nm(n, m)?;
    let (nf, mf) = (f64::from(n), f64::from(m));
    Ok(CliffordModel {
        n,
        m,
        radii: ((mf / nf).sqrt(), ((nf - mf) / nf).sqrt()),
        spectrum: clifford_spectrum(n, m)?,
    })
}

/// Principal curvatures of the Clifford model: √((n−m)/m) with multiplicity
/// m and −√(m/(n−m)) with multiplicity n−m. The trace vanishes and the
/// squared norm Σ mᵢλᵢ² equals n.
pub fn clifford_spectrum(n: u32, m: u32) -> Result<PrincipalSpectrum> {
    validate_nm(n, m)?;
    let mf = f64::from(m);
    let rest = f64::from(n - m);
    PrincipalSpectrum::new(vec![
        ((rest / mf).sqrt(), m),
        (-(mf / rest).sqrt(), n - m),
    ])
}

/// k-th moment of |A|² on the model. |A|² is identically n, so the moment is
/// n^k; computed by integer-exact repeated multiplication.
pub fn clifford_sigma(n: u32, m: u32, k: u32) -> Result<f64> {
    validate_nm(n, m)?;
    if k < 1 {
        return Err(Error::Domain("moment order k must be >= 1".into()));
    }
    Ok(f64::from(n).powi(k as i32))
}

/// Γ(half/2) by the recursion Γ(x+1) = xΓ(x) from Γ(1/2) = √π and Γ(1) = 1.
/// Exact up to rounding for every half-integer argument.
fn gamma_half(half: u32) -> f64 {
    debug_assert!(half >= 1);
    let mut value = if half % 2 == 0 { 1.0 } else { PI.sqrt() };
    let mut arg = if half % 2 == 0 { 2 } else { 1 };
    while arg < half {
        value *= f64::from(arg) / 2.0;
        arg += 2;
    }
    value
}

/// Volume of the round d-sphere of radius r: 2π^((d+1)/2) / Γ((d+1)/2) · r^d.
pub fn sphere_volume(d: u32, r: f64) -> Result<f64> {
    if d < 1 {
        return Err(Error::Domain(format!("sphere dimension must be >= 1, got {d}")));
    }
    if !(r > 0.0) {
        return Err(Error::Domain(format!("sphere radius must be positive, got {r}")));
    }
    Ok(2.0 * PI.powf(f64::from(d + 1) / 2.0) / gamma_half(d + 1) * r.powi(d as i32))
}

/// Product of the two factor volumes of the Clifford model.
pub fn clifford_volume(n: u32, m: u32) -> Result<f64> {
    validate_nm(n, m)?;
    let (nf, mf) = (f64::from(n), f64::from(m));
    let a = sphere_volume(m, (mf / nf).sqrt())?;
    let b = sphere_volume(n - m, ((nf - mf) / nf).sqrt())?;
    Ok(a * b)
}

/// χ(S^m × S^{n−m}) by the product rule χ(A×B) = χ(A)χ(B), with
/// χ(S^d) = 2 for even d and 0 for odd d.
pub fn euler_characteristic_product(n: u32, m: u32) -> i64 {
    let chi = |d: u32| if d % 2 == 0 { 2i64 } else { 0 };
    chi(m) * chi(n - m)
}

/// Both sides of the dimension-4 Euler-characteristic identity for the
/// Clifford model S^m × S^{4−m}: the constant Euler-density integrand times
/// the model volume on the left, 16π²χ on the right.
#[derive(Debug, Clone, Copy, serde::Serialize)]
pub struct GbcCheck {
    pub lhs: f64,
    pub rhs: f64,
    pub euler_characteristic: i64,
}

pub fn clifford_gbc_check(m: u32) -> Result<GbcCheck> {
    if !(1..=3).contains(&m) {
        return Err(Error::Domain(format!(
            "dimension-4 Clifford check needs m in 1..=3, got {m}"
        )));
    }
    let spec = clifford_spectrum(4, m)?;
    let (integrand, _) = spectra::gbc_integrand(&spec)?;
    let volume = clifford_volume(4, m)?;
    let chi = euler_characteristic_product(4, m);
    Ok(GbcCheck {
        lhs: integrand * volume,
        rhs: 16.0 * PI * PI * chi as f64,
        euler_characteristic: chi,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectra::classify;
    use crate::{rel_err, residual};

    #[test]
    fn spectrum_examples() {
        let s = clifford_spectrum(4, 2).unwrap();
        assert_eq!(s.entries(), &[(1.0, 2), (-1.0, 2)]);

        let s = clifford_spectrum(4, 1).unwrap();
        assert!((s.entries()[0].0 - 3f64.sqrt()).abs() < 1e-15);
        assert_eq!(s.entries()[0].1, 1);
        assert!((s.entries()[1].0 + 1.0 / 3f64.sqrt()).abs() < 1e-15);
        assert_eq!(s.entries()[1].1, 3);

        let s = clifford_spectrum(2, 1).unwrap();
        assert_eq!(s.entries(), &[(1.0, 1), (-1.0, 1)]);
        assert!((s.power_sum(2) - 2.0).abs() < 1e-15);
    }

    #[test]
    fn spectrum_rejects_bad_m() {
        assert!(clifford_spectrum(4, 0).is_err());
        assert!(clifford_spectrum(4, 4).is_err());
        assert!(clifford_spectrum(1, 1).is_err());
    }

    #[test]
    fn spectrum_family_is_minimal_with_norm_n() {
        for n in 2..=12u32 {
            for m in 1..n {
                let s = clifford_spectrum(n, m).unwrap();
                assert!(s.is_minimal(), "trace off for n={n} m={m}");
                assert!(
                    rel_err(s.power_sum(2), f64::from(n)) < 1e-13,
                    "|A|² off for n={n} m={m}"
                );
            }
        }
    }

    #[test]
    fn swapping_factors_negates_the_spectrum() {
        for n in 2..=8u32 {
            for m in 1..n {
                let a = clifford_spectrum(n, m).unwrap();
                let b = clifford_spectrum(n, n - m).unwrap();
                let mut neg: Vec<(f64, u32)> = a.negated().entries().to_vec();
                neg.reverse();
                for (x, y) in neg.iter().zip(b.entries()) {
                    assert!((x.0 - y.0).abs() < 1e-15);
                    assert_eq!(x.1, y.1);
                }
            }
        }
    }

    #[test]
    fn sigma_examples() {
        assert_eq!(clifford_sigma(4, 2, 2).unwrap(), 16.0);
        for k in 1..=6 {
            assert_eq!(clifford_sigma(2, 1, k).unwrap(), 2f64.powi(k as i32));
        }
        for n in 2..=12u32 {
            assert_eq!(clifford_sigma(n, 1, 1).unwrap(), f64::from(n));
        }
        assert!(clifford_sigma(4, 2, 0).is_err());
    }

    #[test]
    fn volume_examples() {
        assert!(rel_err(sphere_volume(2, 1.0).unwrap(), 4.0 * PI) < 1e-15);
        assert!(rel_err(sphere_volume(4, 1.0).unwrap(), 8.0 * PI * PI / 3.0) < 1e-14);
        assert!(rel_err(sphere_volume(1, 1.0).unwrap(), 2.0 * PI) < 1e-15);
        assert!(rel_err(clifford_volume(2, 1).unwrap(), 2.0 * PI * PI) < 1e-14);
        assert!(sphere_volume(0, 1.0).is_err());
        assert!(sphere_volume(2, 0.0).is_err());
    }

    #[test]
    fn gbc_check_examples() {
        let c = clifford_gbc_check(2).unwrap();
        assert_eq!(c.euler_characteristic, 4);
        assert!(rel_err(c.lhs, 64.0 * PI * PI) < 1e-12);
        assert!(residual(c.lhs, c.rhs) < 1e-12);

        let c = clifford_gbc_check(1).unwrap();
        assert_eq!(c.euler_characteristic, 0);
        assert!(c.lhs.abs() < 1e-10);
        assert_eq!(c.rhs, 0.0);

        let c = clifford_gbc_check(3).unwrap();
        assert!(c.lhs.abs() < 1e-10);

        assert!(clifford_gbc_check(0).is_err());
        assert!(clifford_gbc_check(4).is_err());
    }

    #[test]
    fn totally_geodesic_sphere_euler_sanity() {
        // zero spectrum: integrand 12, |S⁴| = 8π²/3, and χ(S⁴) = 2
        let vol = sphere_volume(4, 1.0).unwrap();
        assert!(rel_err(12.0 * vol, 32.0 * PI * PI) < 1e-13);
        assert!(rel_err(32.0 * PI * PI, 16.0 * PI * PI * 2.0) < 1e-15);
    }

    #[test]
    fn dim4_models_classify_as_expected() {
        let f = classify(&clifford_spectrum(4, 2).unwrap()).unwrap();
        assert!(f.einstein);
        let f = classify(&clifford_spectrum(4, 1).unwrap()).unwrap();
        assert!(f.lcf);
    }

    #[test]
    fn model_radii_are_normalized() {
        for n in 2..=10u32 {
            for m in 1..n {
                let model = clifford_model(n, m).unwrap();
                let (a, b) = model.radii;
                assert!((a * a + b * b - 1.0).abs() < 1e-15);
            }
        }
    }
}
