//! Analytic checks special to surfaces (n = 2), where the Gauss equation
//! K = 1 − |A|²/2 and the Gauss–Bonnet theorem turn the moment bounds into
//! genus arithmetic.

use std::f64::consts::PI;

use crate::error::{Error, Result};

/// Area and genus of a closed minimal surface in the 3-sphere.
#[derive(Debug, Clone, Copy, serde::Serialize)]
pub struct SurfaceData {
    pub area: f64,
    pub genus: u32,
}

impl SurfaceData {
    pub fn new(area: f64, genus: u32) -> Result<Self> {
        if !(area > 0.0) || !area.is_finite() {
            return Err(Error::Domain(format!("surface area must be positive, got {area}")));
        }
        Ok(Self { area, genus })
    }
}

/// σ = ∫|A|²/|M| expressed through the genus: σ = 2 − 8π(1 − g)/|M|.
pub fn sigma_from_genus(surface: &SurfaceData) -> f64 {
    2.0 - 8.0 * PI * (1.0 - f64::from(surface.genus)) / surface.area
}

/// The binomial tail Σ_{i=2}^k C(k,i)(−K)^i = (1−K)^k − 1 + kK.
///
/// Nonnegative for K ≤ 1 (the range the Gauss equation allows); for odd k
/// it goes negative for K large enough above 1, so the domain restriction
/// carries the bound.
pub fn genus_poly_bound(gauss_curvature: f64, k: u32) -> f64 {
    assert!(k >= 2, "the binomial tail starts at k = 2");
    (1.0 - gauss_curvature).powi(k as i32) - 1.0 + f64::from(k) * gauss_curvature
}

/// Lower bound σ₁ ≥ 2 + (g−1)/(g+1) for embedded surfaces of genus ≥ 2,
/// via the area bound |M| ≤ 8π(g+1).
pub fn choi_wang_lower(genus: u32) -> Result<f64> {
    if genus < 2 {
        return Err(Error::Domain(format!(
            "the area-bound argument needs genus >= 2, got {genus}"
        )));
    }
    let g = f64::from(genus);
    Ok(2.0 + (g - 1.0) / (g + 1.0))
}

/// Certificate that σ_k ≥ 2^k(1 + 4πk(g−1)/|M|) on a surface with the given
/// curvature samples; the bound itself is ≥ 2^k exactly when g ≥ 1.
#[derive(Debug, Clone, Copy, serde::Serialize)]
pub struct SigmaKCertificate {
    pub k: u32,
    pub genus: u32,
    pub area: f64,
    /// 2^k(1 + 4πk(g−1)/|M|).
    pub bound: f64,
    /// min over the samples of the binomial tail; nonnegative since K ≤ 1.
    pub min_poly: f64,
    /// True when the bound dominates 2^k, i.e. genus ≥ 1.
    pub lower_bound_claimed: bool,
}

pub fn sigma_k_dim2(
    surface: &SurfaceData,
    k_samples: &[f64],
    k: u32,
) -> Result<SigmaKCertificate> {
    if k < 2 {
        return Err(Error::Domain(format!("certificate needs k >= 2, got {k}")));
    }
    let mut min_poly = f64::INFINITY;
    for &kv in k_samples {
        if kv > 1.0 {
            return Err(Error::Domain(format!(
                "Gauss-equation violation: curvature sample {kv} exceeds 1"
            )));
        }
        min_poly = min_poly.min(genus_poly_bound(kv, k));
    }
    if k_samples.is_empty() {
        min_poly = 0.0;
    }
    let g = f64::from(surface.genus);
    let bound = 2f64.powi(k as i32)
        * (1.0 + 4.0 * PI * f64::from(k) * (g - 1.0) / surface.area);
    Ok(SigmaKCertificate {
        k,
        genus: surface.genus,
        area: surface.area,
        bound,
        min_poly,
        lower_bound_claimed: surface.genus >= 1,
    })
}
