//! Weighted period integrals over profiles: the leaf-volume density, the
//! σ_k moments, the radial Laplacian, and residual checks of the integral
//! identities.
//!
//! All integrals are taken against dμ = ρ(λ) dt over one period, where
//! ρ(λ) = (λ/λ_ref)^(−(n−1)/n) is the volume factor of the umbilic leaves
//! (from ⟨∇_{e_i}e_n, e_i⟩ = −λ̇/(nλ)). The unknown constant leaf volume
//! cancels in every reported ratio and residual; `measure_total` is the
//! weighted period, not a true hypersurface volume.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::otsuki::{self, OtsukiProfile};
use crate::pinching;
use crate::{residual, Variant};

/// Grid tolerance for the f′/f″ finite-difference consistency invariant.
pub const FD_CONSISTENCY_TOL: f64 = 1e-6;

/// Leaf-volume density (λ/λ_ref)^(−(n−1)/n), normalized to 1 at λ_ref.
pub fn leaf_density(n: u32, lambda: f64, lambda_ref: f64) -> Result<f64> {
    if n < 3 {
        return Err(Error::Domain(format!("leaf density requires n >= 3, got {n}")));
    }
    if !(lambda > 0.0) || !(lambda_ref > 0.0) {
        return Err(Error::Domain(format!(
            "leaf density needs positive lambda, got ({lambda}, {lambda_ref})"
        )));
    }
    let nf = f64::from(n);
    Ok((lambda / lambda_ref).powf(-(nf - 1.0) / nf))
}

/// ∫ g(λ, λ̇)·ρ dt over one period: composite Simpson on the profile's
/// uniform sample grid, the last sample being the period wrap.
pub fn period_integral<F: Fn(f64, f64) -> f64>(profile: &OtsukiProfile, g: F) -> f64 {
    let samples = &profile.samples;
    let panels = samples.len() - 1;
    debug_assert!(panels >= 2 && panels % 2 == 0);
    let nf = f64::from(profile.n);
    let lref = samples[0].lambda;
    let density = |l: f64| (l / lref).powf(-(nf - 1.0) / nf);
    let h = profile.period / panels as f64;

    let f = |i: usize| {
        let s = &samples[i];
        g(s.lambda, s.lambda_dot) * density(s.lambda)
    };
    let mut sum = f(0) + f(panels);
    for i in (1..panels).step_by(2) {
        sum += 4.0 * f(i);
    }
    for i in (2..panels).step_by(2) {
        sum += 2.0 * f(i);
    }
    sum * h / 3.0
}

/// Normalized k-th moment σ_k = ∫(|A|²)^k dμ / ∫dμ with |A|² = n(n−1)λ².
pub fn sigma_k(profile: &OtsukiProfile, k: u32) -> f64 {
    let n = profile.n;
    let num = period_integral(profile, |l, _| otsuki::profile_abs_a2(n, l).powi(k as i32));
    num / period_integral(profile, |_, _| 1.0)
}

/// n − σ₁; nonnegative on every profile, zero only in the constant limit.
pub fn perdomo_margin(profile: &OtsukiProfile) -> f64 {
    f64::from(profile.n) - sigma_k(profile, 1)
}

/// A radial test function: the evaluator triple (f, f′, f″) plus a label.
pub struct RadialFunction {
    f: Box<dyn Fn(f64) -> f64 + Send + Sync>,
    df: Box<dyn Fn(f64) -> f64 + Send + Sync>,
    d2f: Box<dyn Fn(f64) -> f64 + Send + Sync>,
    label: String,
}

impl std::fmt::Debug for RadialFunction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "RadialFunction({})", self.label)
    }
}

fn consistency_grid() -> Vec<f64> {
    (0..19).map(|i| 0.2 + 0.1 * i as f64).collect()
}

impl RadialFunction {
    /// Checked constructor: rejects triples whose f″ disagrees with the
    /// centered finite difference of f′ on the default grid.
    pub fn new(
        label: impl Into<String>,
        f: impl Fn(f64) -> f64 + Send + Sync + 'static,
        df: impl Fn(f64) -> f64 + Send + Sync + 'static,
        d2f: impl Fn(f64) -> f64 + Send + Sync + 'static,
    ) -> Result<Self> {
        let rf = Self::new_unchecked(label, f, df, d2f);
        let worst = rf.fd_consistency(&consistency_grid());
        if worst > FD_CONSISTENCY_TOL {
            return Err(Error::Invariant(format!(
                "radial function '{}': f'' disagrees with the finite difference of f' \
                 (worst residual {worst:.3e})",
                rf.label
            )));
        }
        Ok(rf)
    }

    /// Unchecked constructor for deliberately inconsistent triples (the
    /// printed-variant f″), whose failing residuals the checks demonstrate.
    pub fn new_unchecked(
        label: impl Into<String>,
        f: impl Fn(f64) -> f64 + Send + Sync + 'static,
        df: impl Fn(f64) -> f64 + Send + Sync + 'static,
        d2f: impl Fn(f64) -> f64 + Send + Sync + 'static,
    ) -> Self {
        Self {
            f: Box::new(f),
            df: Box::new(df),
            d2f: Box::new(d2f),
            label: label.into(),
        }
    }

    pub fn f(&self, lambda: f64) -> f64 {
        (self.f)(lambda)
    }

    pub fn df(&self, lambda: f64) -> f64 {
        (self.df)(lambda)
    }

    pub fn d2f(&self, lambda: f64) -> f64 {
        (self.d2f)(lambda)
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// Worst residual of (f′(λ+h) − f′(λ−h))/2h against f″(λ) over the grid.
    pub fn fd_consistency(&self, grid: &[f64]) -> f64 {
        let mut worst = 0.0f64;
        for &l in grid {
            let h = 1e-5 * l.max(1.0);
            let fd = (self.df(l + h) - self.df(l - h)) / (2.0 * h);
            worst = worst.max(residual(fd, self.d2f(l)));
        }
        worst
    }
}

/// f(λ) = λ².
pub fn lambda_squared() -> RadialFunction {
    RadialFunction::new("lambda^2", |l| l * l, |l| 2.0 * l, |_| 2.0)
        .expect("polynomial triple is consistent")
}

/// f(λ) = ln λ.
pub fn log_lambda() -> RadialFunction {
    RadialFunction::new(
        "ln(lambda)",
        |l: f64| l.ln(),
        |l| 1.0 / l,
        |l| -1.0 / (l * l),
    )
    .expect("logarithm triple is consistent")
}

/// The moment-generating test family
///
/// f = n^(k−1)·(ln λ + Σ_{i=1}^{k−1} (n−1)^i/(2i)·λ^(2i)),
/// f′ = n^(k−1)·(1/λ + Σ (n−1)^i λ^(2i−1)),
///
/// whose substitution into the key identity telescopes the left side to
/// ∫(|A|^(2k) − n^k). The `Corrected` f″ differentiates f′ term by term,
/// coefficient (2i−1)(n−1)^i; the `Printed` variant carries (n−1)^i/(2i−1)
/// instead and fails the consistency invariant for k ≥ 3, so it is built
/// unchecked.
pub fn f_k_variant(n: u32, k: u32, variant: Variant) -> Result<RadialFunction> {
    if n < 3 {
        return Err(Error::Domain(format!("test family requires n >= 3, got {n}")));
    }
    if k < 2 {
        return Err(Error::Domain(format!("test family requires k >= 2, got {k}")));
    }
    let nf = f64::from(n);
    let scale = nf.powi(k as i32 - 1);
    let terms = k - 1;

    let f = move |l: f64| {
        let mut acc = l.ln();
        for i in 1..=terms {
            acc += (nf - 1.0).powi(i as i32) / f64::from(2 * i) * l.powi(2 * i as i32);
        }
        scale * acc
    };
    let df = move |l: f64| {
        let mut acc = 1.0 / l;
        for i in 1..=terms {
            acc += (nf - 1.0).powi(i as i32) * l.powi(2 * i as i32 - 1);
        }
        scale * acc
    };
    let d2f_corrected = move |l: f64| {
        let mut acc = -1.0 / (l * l);
        for i in 1..=terms {
            acc += f64::from(2 * i - 1) * (nf - 1.0).powi(i as i32) * l.powi(2 * i as i32 - 2);
        }
        scale * acc
    };
    let d2f_printed = move |l: f64| {
        let mut acc = -1.0 / (l * l);
        for i in 1..=terms {
            acc += (nf - 1.0).powi(i as i32) / f64::from(2 * i - 1) * l.powi(2 * i as i32 - 2);
        }
        scale * acc
    };

    match variant {
        Variant::Corrected => RadialFunction::new(format!("f_{k}(n={n})"), f, df, d2f_corrected),
        Variant::Printed => Ok(RadialFunction::new_unchecked(
            format!("f_{k}(n={n},printed)"),
            f,
            df,
            d2f_printed,
        )),
    }
}

/// The consistent member of the test family.
pub fn f_k(n: u32, k: u32) -> Result<RadialFunction> {
    f_k_variant(n, k, Variant::Corrected)
}

/// The radial Laplacian of f(λ) along a profile:
/// Δf = (f″ + 2/(nλ)·f′)·λ̇² − nλ((n−1)λ² − 1)·f′.
pub fn laplacian_radial(
    n: u32,
    f: &RadialFunction,
    lambda: f64,
    lambda_dot: f64,
) -> Result<f64> {
    if n < 3 {
        return Err(Error::Domain(format!("radial Laplacian requires n >= 3, got {n}")));
    }
    if !(lambda > 0.0) {
        return Err(Error::Domain(format!("radial Laplacian needs lambda > 0, got {lambda}")));
    }
    let nf = f64::from(n);
    Ok(
        (f.d2f(lambda) + 2.0 / (nf * lambda) * f.df(lambda)) * lambda_dot * lambda_dot
            - nf * lambda * ((nf - 1.0) * lambda * lambda - 1.0) * f.df(lambda),
    )
}

/// Residual of the key integral identity
///
/// ∫ nλ((n−1)λ² − 1) f′ dμ = ∫ (f″ + 2/(nλ) f′) λ̇² dμ
///
/// over one period, normalized as |L − R|/(|L| + |R| + 1). Holds for every
/// consistent triple because Δf·ρ is the exact time derivative of ḟρ.
pub fn verify_keyeq(profile: &OtsukiProfile, f: &RadialFunction) -> f64 {
    let nf = f64::from(profile.n);
    let lhs = period_integral(profile, |l, _| {
        nf * l * ((nf - 1.0) * l * l - 1.0) * f.df(l)
    });
    let rhs = period_integral(profile, |l, ld| {
        (f.d2f(l) + 2.0 / (nf * l) * f.df(l)) * ld * ld
    });
    residual(lhs, rhs)
}

/// The sign polynomial S(λ) = Σ_{i=1}^{k−1} (n−1)^i c_i λ^(2(i−1)) − (n−2)/(nλ²)
/// weighting λ̇² on the right side of the σ_k identity.
pub fn sign_polynomial(n: u32, k: u32, lambda: f64, variant: Variant) -> Result<f64> {
    if k < 2 {
        return Err(Error::Domain(format!("sign polynomial requires k >= 2, got {k}")));
    }
    if !(lambda > 0.0) {
        return Err(Error::Domain(format!("sign polynomial needs lambda > 0, got {lambda}")));
    }
    let nf = f64::from(n);
    let mut acc = -(nf - 2.0) / (nf * lambda * lambda);
    for i in 1..k {
        acc += (nf - 1.0).powi(i as i32)
            * pinching::coefficient(n, i, variant)
            * lambda.powi(2 * (i as i32 - 1));
    }
    Ok(acc)
}

/// Range of S(λ) over the profile samples.
#[derive(Debug, Clone, Copy, serde::Serialize)]
pub struct SignData {
    pub s_min: f64,
    pub s_max: f64,
}

/// Residual of the σ_k identity
///
/// ∫(|A|^(2k) − n^k) dμ = ∫ n^(k−1)·S(λ)·λ̇² dμ
///
/// together with the observed range of S along the profile. With the
/// corrected coefficients the residual is quadrature-level; the printed
/// coefficients break it for k ≥ 3.
pub fn verify_sigma_identity(
    profile: &OtsukiProfile,
    k: u32,
    variant: Variant,
) -> Result<(f64, SignData)> {
    if k < 2 {
        return Err(Error::Domain(format!("sigma identity requires k >= 2, got {k}")));
    }
    let n = profile.n;
    let nf = f64::from(n);
    let scale = nf.powi(k as i32 - 1);
    let nk = nf.powi(k as i32);

    let lhs = period_integral(profile, |l, _| {
        otsuki::profile_abs_a2(n, l).powi(k as i32) - nk
    });
    let rhs = period_integral(profile, |l, ld| {
        scale * sign_polynomial(n, k, l, variant).expect("positive lambda on profile") * ld * ld
    });

    let mut s_min = f64::INFINITY;
    let mut s_max = f64::NEG_INFINITY;
    for s in &profile.samples {
        let v = sign_polynomial(n, k, s.lambda, variant)?;
        s_min = s_min.min(v);
        s_max = s_max.max(v);
    }
    Ok((residual(lhs, rhs), SignData { s_min, s_max }))
}

fn abs_a2_radial(n: u32) -> RadialFunction {
    let c = f64::from(n) * f64::from(n - 1);
    RadialFunction::new_unchecked(
        format!("|A|^2(n={n})"),
        move |l| c * l * l,
        move |l| 2.0 * c * l,
        move |_| 2.0 * c,
    )
}

/// Raw pointwise residuals of the Simons identity
/// ½Δ|A|² − |∇A|² − (n − |A|²)|A|², one per sample, with |∇A|² taken from
/// the selected coefficient variant.
pub fn simons_pointwise_residuals(profile: &OtsukiProfile, variant: Variant) -> Vec<f64> {
    let n = profile.n;
    let nf = f64::from(n);
    let a2f = abs_a2_radial(n);
    profile
        .samples
        .iter()
        .map(|s| {
            let half_lap = 0.5
                * laplacian_radial(n, &a2f, s.lambda, s.lambda_dot)
                    .expect("positive lambda on profile");
            let a2 = otsuki::profile_abs_a2(n, s.lambda);
            half_lap - otsuki::grad_a_norm_sq_variant(n, s.lambda_dot, variant) - (nf - a2) * a2
        })
        .collect()
}

/// max |pointwise Simons residual| over the profile.
pub fn simons_pointwise(profile: &OtsukiProfile, variant: Variant) -> f64 {
    simons_pointwise_residuals(profile, variant)
        .into_iter()
        .fold(0.0, |m, r| m.max(r.abs()))
}

/// Residual of the integrated Simons identity
/// ∫|A|⁴ dμ = ∫|∇A|² dμ + n∫|A|² dμ.
pub fn simons_integrated(profile: &OtsukiProfile, variant: Variant) -> f64 {
    let n = profile.n;
    let nf = f64::from(n);
    let lhs = period_integral(profile, |l, _| {
        let a2 = otsuki::profile_abs_a2(n, l);
        a2 * a2
    });
    let rhs = period_integral(profile, |l, ld| {
        otsuki::grad_a_norm_sq_variant(n, ld, variant) + nf * otsuki::profile_abs_a2(n, l)
    });
    residual(lhs, rhs)
}

/// The dimension-4 Euler-density combination ¼|A|⁴ + 2|A|² − 12 along a
/// profile (the negated constant-multiplicity-(1,3) integrand).
pub fn euler_integrand_dim4(lambda: f64) -> f64 {
    let a2 = otsuki::profile_abs_a2(4, lambda);
    0.25 * a2 * a2 + 2.0 * a2 - 12.0
}

/// Per-period weighted integral of the dimension-4 Euler-density
/// combination. Reported, never asserted: the vanishing argument needs a
/// closed immersion, and whether it extends to every single period is open.
pub fn euler_period_integral_dim4(profile: &OtsukiProfile) -> Result<f64> {
    if profile.n != 4 {
        return Err(Error::Dimension {
            expected: 4,
            got: profile.n,
        });
    }
    Ok(period_integral(profile, |l, _| euler_integrand_dim4(l)))
}

/// Summary of the σ_k moments and identity residuals for one profile.
#[derive(Debug, Clone, serde::Serialize, serde::Deserialize)]
pub struct SigmaReport {
    pub n: u32,
    pub k_min: u32,
    pub k_max: u32,
    pub sigma: BTreeMap<u32, f64>,
    pub min_a2: f64,
    pub max_a2: f64,
    /// n − σ₁.
    pub perdomo_margin: f64,
    /// Worst key-identity residual over the consistent test functions
    /// {f_k for k = 2..k_max, λ², ln λ}.
    pub keyeq_residual: f64,
    /// σ_k identity residuals (corrected coefficients), k = 2..k_max.
    pub identity_residual: BTreeMap<u32, f64>,
    pub simons_pointwise_max: f64,
    pub simons_integrated_residual: f64,
    /// ∫ρ dt: the weighted period, up to the constant leaf volume.
    pub measure_total: f64,
}

pub fn sigma_report(profile: &OtsukiProfile, k_max: u32) -> Result<SigmaReport> {
    if k_max < 2 {
        return Err(Error::Domain(format!("report needs k_max >= 2, got {k_max}")));
    }
    let n = profile.n;
    let mut sigma = BTreeMap::new();
    for k in 1..=k_max {
        sigma.insert(k, sigma_k(profile, k));
    }
    let mut keyeq_residual = 0.0f64;
    for k in 2..=k_max {
        keyeq_residual = keyeq_residual.max(verify_keyeq(profile, &f_k(n, k)?));
    }
    keyeq_residual = keyeq_residual
        .max(verify_keyeq(profile, &lambda_squared()))
        .max(verify_keyeq(profile, &log_lambda()));

    let mut identity_residual = BTreeMap::new();
    for k in 2..=k_max {
        let (res, _) = verify_sigma_identity(profile, k, Variant::Corrected)?;
        identity_residual.insert(k, res);
    }

    Ok(SigmaReport {
        n,
        k_min: 1,
        k_max,
        min_a2: otsuki::profile_abs_a2(n, profile.lambda_min),
        max_a2: otsuki::profile_abs_a2(n, profile.lambda_max),
        perdomo_margin: perdomo_margin(profile),
        keyeq_residual,
        identity_residual,
        simons_pointwise_max: simons_pointwise(profile, Variant::Corrected),
        simons_integrated_residual: simons_integrated(profile, Variant::Corrected),
        measure_total: period_integral(profile, |_, _| 1.0),
        sigma,
    })
}
