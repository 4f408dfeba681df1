//! The rotational-profile ODE
//!
//! λ̈ = (n+1)/(nλ)·λ̇² − nλ[(n−1)λ² − 1]
//!
//! governing the repeated principal curvature of a two-curvature minimal
//! hypersurface, its conserved first integral, fixed-step classical
//! 4th-order integration with event-refined period detection, and an
//! independent quadrature oracle for the period.
//!
//! The first integral is obtained by treating the equation as linear in λ̇²
//! as a function of λ (integrating factor λ^(−2(n+1)/n)):
//!
//! E = λ̇²·λ^(−2(n+1)/n) + n²(λ^(2(n−1)/n) + λ^(−2/n)).
//!
//! Its λ̇ = 0 section `potential` has a single minimum at the constant
//! (Clifford) value λ = 1/√(n−1) and diverges at λ → 0⁺ and λ → ∞, so every
//! non-constant orbit is a closed loop around that center with exactly two
//! turning points.

use crate::error::{Error, Result};
use crate::Variant;

/// Default integrator step.
pub const DEFAULT_STEP: f64 = 5e-4;

/// Certified relative drift of the first integral over one period at
/// [`DEFAULT_STEP`]. The bound for other steps scales as (step/default)⁴,
/// the integrator's order.
pub const DRIFT_BOUND_AT_DEFAULT: f64 = 1e-9;

/// Period-closure tolerance in (λ, λ̇) at [`DEFAULT_STEP`], after cubic
/// refinement of the λ̇ = 0 event. Scales as (step/default)⁴ like the drift.
pub const EVENT_TOL: f64 = 1e-10;

/// Orbits with λ_min² below this are rejected: the 1/λ terms of the ODE
/// degrade fixed-step accuracy as the profile approaches the origin.
pub const AMPLITUDE_GUARD: f64 = 0.05;

/// Starting values within this distance of 1/√(n−1) produce the constant
/// profile.
const EQUILIBRIUM_TOL: f64 = 1e-12;

fn require_n(n: u32) -> Result<()> {
    if n >= 3 {
        Ok(())
    } else {
        Err(Error::Domain(format!("profile machinery requires n >= 3, got {n}")))
    }
}

fn require_positive(name: &str, x: f64) -> Result<()> {
    if x > 0.0 && x.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!("{name} must be positive, got {x}")))
    }
}

/// λ value of the constant solution, 1/√(n−1).
pub fn clifford_lambda(n: u32) -> f64 {
    f64::from(n - 1).sqrt().recip()
}

/// Squared angular frequency of the linearization at the constant solution.
pub fn linearization_freq_sq(n: u32) -> f64 {
    2.0 * f64::from(n)
}

/// Small-amplitude period 2π/√(2n).
pub fn linearized_period(n: u32) -> f64 {
    std::f64::consts::TAU / linearization_freq_sq(n).sqrt()
}

/// Right-hand side λ̈ of the profile equation.
pub fn ode_rhs(n: u32, lambda: f64, lambda_dot: f64) -> Result<f64> {
    require_n(n)?;
    require_positive("lambda", lambda)?;
    let nf = f64::from(n);
    Ok((nf + 1.0) / (nf * lambda) * lambda_dot * lambda_dot
        - nf * lambda * ((nf - 1.0) * lambda * lambda - 1.0))
}

/// λ̇ = 0 section of the first integral, V(λ) = n²(λ^(2(n−1)/n) + λ^(−2/n)).
pub fn potential(n: u32, lambda: f64) -> f64 {
    let nf = f64::from(n);
    nf * nf * (lambda.powf(2.0 * (nf - 1.0) / nf) + lambda.powf(-2.0 / nf))
}

/// dV/dλ = 2nλ^(−(n+2)/n)·[(n−1)λ² − 1].
pub fn potential_deriv(n: u32, lambda: f64) -> f64 {
    let nf = f64::from(n);
    2.0 * nf * lambda.powf(-(nf + 2.0) / nf) * ((nf - 1.0) * lambda * lambda - 1.0)
}

/// Conserved quantity E(λ, λ̇); constant along exact solutions.
pub fn first_integral(n: u32, lambda: f64, lambda_dot: f64) -> Result<f64> {
    require_n(n)?;
    require_positive("lambda", lambda)?;
    let nf = f64::from(n);
    Ok(lambda_dot * lambda_dot * lambda.powf(-2.0 * (nf + 1.0) / nf) + potential(n, lambda))
}

#[derive(Debug, Clone, Copy)]
pub struct TurningPoints {
    pub lambda_min: f64,
    pub lambda_max: f64,
    /// True when the input was the equilibrium: both points equal λ0.
    pub degenerate: bool,
}

/// The two positive roots of V(λ) = V(λ0) bracketing the Clifford value,
/// found by bisection. One root is λ0 itself.
pub fn turning_points(n: u32, lambda0: f64) -> Result<TurningPoints> {
    require_n(n)?;
    require_positive("lambda0", lambda0)?;
    let star = clifford_lambda(n);
    if (lambda0 - star).abs() <= EQUILIBRIUM_TOL {
        return Ok(TurningPoints {
            lambda_min: lambda0,
            lambda_max: lambda0,
            degenerate: true,
        });
    }
    let level = potential(n, lambda0);
    let g = |l: f64| potential(n, l) - level;

    // Bracket the far root on the other side of the center; V is monotone
    // on each side, so doubling/halving finds a sign change quickly.
    let (mut lo, mut hi) = if lambda0 > star {
        let mut lo = star / 2.0;
        while g(lo) < 0.0 {
            lo /= 2.0;
            if lo < 1e-300 {
                return Err(Error::Integration("failed to bracket lower turning point".into()));
            }
        }
        (lo, star)
    } else {
        let mut hi = star * 2.0;
        while g(hi) < 0.0 {
            hi *= 2.0;
            if hi > 1e300 {
                return Err(Error::Integration("failed to bracket upper turning point".into()));
            }
        }
        (star, hi)
    };

    // g(lo) and g(hi) have opposite signs: g > 0 at the outer end, g < 0 at
    // the center (V(star) < level for non-degenerate inputs).
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        let gm = g(mid);
        let positive_outer = lambda0 > star; // outer end of the bracket is lo
        if (gm > 0.0) == positive_outer {
            lo = mid;
        } else {
            hi = mid;
        }
        if (hi - lo).abs() <= 1e-13 * hi.max(1.0) {
            break;
        }
    }
    let other = 0.5 * (lo + hi);
    let (lambda_min, lambda_max) = if lambda0 > star {
        (other, lambda0)
    } else {
        (lambda0, other)
    };
    Ok(TurningPoints {
        lambda_min,
        lambda_max,
        degenerate: false,
    })
}

/// One stored state of a profile.
#[derive(Debug, Clone, Copy, serde::Serialize)]
pub struct Sample {
    pub t: f64,
    pub lambda: f64,
    pub lambda_dot: f64,
}

/// One sampled period of a profile solution, on a uniform time grid with the
/// wrap point stored as the last sample.
#[derive(Debug, Clone)]
pub struct OtsukiProfile {
    pub n: u32,
    pub samples: Vec<Sample>,
    pub period: f64,
    /// First-integral value at the start state.
    pub energy: f64,
    pub lambda_min: f64,
    pub lambda_max: f64,
    /// max |E(t) − E(0)| / E(0) over the stored samples.
    pub energy_drift: f64,
    pub degenerate: bool,
}

fn rk4_step(n: u32, y: (f64, f64), h: f64) -> Result<(f64, f64)> {
    let f = |l: f64, v: f64| -> Result<(f64, f64)> { Ok((v, ode_rhs(n, l, v)?)) };
    let k1 = f(y.0, y.1)?;
    let k2 = f(y.0 + 0.5 * h * k1.0, y.1 + 0.5 * h * k1.1)?;
    let k3 = f(y.0 + 0.5 * h * k2.0, y.1 + 0.5 * h * k2.1)?;
    let k4 = f(y.0 + h * k3.0, y.1 + h * k3.1)?;
    Ok((
        y.0 + h / 6.0 * (k1.0 + 2.0 * k2.0 + 2.0 * k3.0 + k4.0),
        y.1 + h / 6.0 * (k1.1 + 2.0 * k2.1 + 2.0 * k3.1 + k4.1),
    ))
}

/// Fraction θ ∈ [0, 1] of the step at which the cubic Hermite model of
/// λ̇(t) — built from the endpoint values and accelerations — crosses zero.
fn refine_crossing(n: u32, ya: (f64, f64), yb: (f64, f64), h: f64) -> Result<f64> {
    if yb.1 == 0.0 {
        return Ok(1.0);
    }
    let aa = ode_rhs(n, ya.0, ya.1)?;
    let ab = ode_rhs(n, yb.0, yb.1)?;
    let v = |th: f64| {
        let h00 = (2.0 * th - 3.0) * th * th + 1.0;
        let h10 = ((th - 2.0) * th + 1.0) * th;
        let h01 = (3.0 - 2.0 * th) * th * th;
        let h11 = (th - 1.0) * th * th;
        h00 * ya.1 + h10 * h * aa + h01 * yb.1 + h11 * h * ab
    };
    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    let vlo = v(lo);
    for _ in 0..100 {
        let mid = 0.5 * (lo + hi);
        if (v(mid) > 0.0) == (vlo > 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo < 1e-16 {
            break;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Integrate from (λ0, 0) until λ̇ has crossed zero twice (one full
/// oscillation), returning the refined period.
fn detect_period(n: u32, lambda0: f64, h: f64) -> Result<f64> {
    let max_steps = (100.0 * linearized_period(n) / h).ceil() as usize;
    let mut t = 0.0;
    let mut y = (lambda0, 0.0);
    let mut crossings = 0u32;
    for _ in 0..max_steps {
        let y1 = rk4_step(n, y, h)?;
        if y.1 * y1.1 < 0.0 || (y1.1 == 0.0 && y.1 != 0.0) {
            crossings += 1;
            if crossings == 2 {
                return Ok(t + refine_crossing(n, y, y1, h)? * h);
            }
        }
        y = y1;
        t += h;
    }
    Err(Error::Integration(format!(
        "no period found within {max_steps} steps at step {h}"
    )))
}

/// The drift the integrator certifies at a given step: the default-step
/// bound scaled by the integrator's 4th order.
pub fn certified_drift_bound(step: f64) -> f64 {
    (DRIFT_BOUND_AT_DEFAULT * (step / DEFAULT_STEP).powi(4)).clamp(1e-12, 1e-2)
}

/// Period-closure tolerance at a given step, scaled like the drift.
pub fn certified_closure_bound(step: f64) -> f64 {
    (EVENT_TOL * (step / DEFAULT_STEP).powi(4)).clamp(EVENT_TOL, 1e-2)
}

/// Integrate one full oscillation starting from (λ0, 0) and resample it on a
/// uniform grid of the detected period (even panel count, wrap point stored),
/// certifying the first-integral drift and the period closure.
pub fn integrate_profile(n: u32, lambda0: f64, step: f64) -> Result<OtsukiProfile> {
    require_n(n)?;
    require_positive("lambda0", lambda0)?;
    require_positive("step", step)?;

    let tp = turning_points(n, lambda0)?;
    if tp.degenerate {
        let period = linearized_period(n);
        let count = ((period / step).ceil() as usize).max(2).next_multiple_of(2);
        let h = period / count as f64;
        let samples = (0..=count)
            .map(|i| Sample {
                t: i as f64 * h,
                lambda: lambda0,
                lambda_dot: 0.0,
            })
            .collect();
        return Ok(OtsukiProfile {
            n,
            samples,
            period,
            energy: potential(n, lambda0),
            lambda_min: lambda0,
            lambda_max: lambda0,
            energy_drift: 0.0,
            degenerate: true,
        });
    }

    let xmin = tp.lambda_min * tp.lambda_min;
    if xmin < AMPLITUDE_GUARD {
        return Err(Error::Domain(format!(
            "amplitude guard: lambda_min^2 = {xmin:.4e} < {AMPLITUDE_GUARD} (lambda_min = {:.6})",
            tp.lambda_min
        )));
    }

    let period = detect_period(n, lambda0, step)?;
    let count = ((period / step).ceil() as usize).max(2).next_multiple_of(2);
    let h = period / count as f64;
    let energy = potential(n, lambda0);

    let mut samples = Vec::with_capacity(count + 1);
    samples.push(Sample {
        t: 0.0,
        lambda: lambda0,
        lambda_dot: 0.0,
    });
    let mut y = (lambda0, 0.0);
    let mut drift = 0.0f64;
    for i in 1..=count {
        y = rk4_step(n, y, h)?;
        let e = first_integral(n, y.0, y.1)?;
        drift = drift.max(((e - energy) / energy).abs());
        samples.push(Sample {
            t: i as f64 * h,
            lambda: y.0,
            lambda_dot: y.1,
        });
    }

    if drift > drift_bound(step) {
        return Err(Error::Integration(format!(
            "first-integral drift {drift:.3e} exceeds the certified bound {:.3e} at step {step}",
            drift_bound(step)
        )));
    }
    let closure = (y.0 - lambda0).abs().max(y.1.abs());
    if closure > closure_bound(step) {
        return Err(Error::Integration(format!(
            "period closure mismatch {closure:.3e} exceeds {:.3e} at step {step}",
            closure_bound(step)
        )));
    }

    Ok(OtsukiProfile {
        n,
        samples,
        period,
        energy,
        lambda_min: tp.lambda_min,
        lambda_max: tp.lambda_max,
        energy_drift: drift,
        degenerate: false,
    })
}

/// Independent oracle for the period:
///
/// T = 2 ∫ dλ/|λ̇| with λ̇²(λ) = (E − V(λ))·λ^(2(n+1)/n) from the first
/// integral. The substitution λ = λ_min + (λ_max − λ_min)·sin²θ removes the
/// inverse-square-root endpoint singularities exactly: the integrand becomes
/// 4 / (√q(λ(θ)) · λ^((n+1)/n)) with q(λ) = (E − V)/((λ−λ_min)(λ_max−λ))
/// smooth and positive on the closed interval, using q = ∓V′(endpoint)/(λ_max−λ_min)
/// at the ends. Composite Simpson then converges at full order.
pub fn period_quadrature(n: u32, lambda0: f64) -> Result<f64> {
    require_n(n)?;
    require_positive("lambda0", lambda0)?;
    let tp = turning_points(n, lambda0)?;
    if tp.degenerate {
        return Err(Error::Domain(
            "the constant profile has no oscillation to time".into(),
        ));
    }
    let (lmin, lmax) = (tp.lambda_min, tp.lambda_max);
    let span = lmax - lmin;
    let level = potential(n, lambda0);
    let nf = f64::from(n);
    let expo = (nf + 1.0) / nf;

    let panels = 4096usize;
    let h = std::f64::consts::FRAC_PI_2 / panels as f64;
    let eval = |i: usize| -> f64 {
        let (lam, q) = if i == 0 {
            (lmin, -potential_deriv(n, lmin) / span)
        } else if i == panels {
            (lmax, potential_deriv(n, lmax) / span)
        } else {
            let s = (i as f64 * h).sin();
            let lam = lmin + span * s * s;
            let q = (level - potential(n, lam)) / ((lam - lmin) * (lmax - lam));
            (lam, q)
        };
        4.0 / (q.sqrt() * lam.powf(expo))
    };

    let mut sum = eval(0) + eval(panels);
    for i in (1..panels).step_by(2) {
        sum += 4.0 * eval(i);
    }
    for i in (2..panels).step_by(2) {
        sum += 2.0 * eval(i);
    }
    Ok(sum * h / 3.0)
}

/// |A|² along a profile: the two curvatures are λ (multiplicity n−1) and
/// −(n−1)λ (multiplicity 1), so |A|² = n(n−1)λ².
pub fn profile_abs_a2(n: u32, lambda: f64) -> f64 {
    let nf = f64::from(n);
    nf * (nf - 1.0) * lambda * lambda
}

/// |∇A|² along a profile with the consistent coefficient (n−1)(n+2)λ̇²:
/// the nonzero components of the derivative of the shape tensor are the
/// (n−1)² entries worth of the axial direction plus three permutations of
/// λ̇ for each leaf direction, (n−1)² + 3(n−1) = (n−1)(n+2). Only this
/// value closes the pointwise Simons identity against the radial Laplacian.
pub fn grad_a_norm_sq(n: u32, lambda_dot: f64) -> f64 {
    grad_a_norm_sq_variant(n, lambda_dot, Variant::Corrected)
}

/// The `Printed` alternative n(n−1)λ̇² is kept selectable so the residual
/// checks can demonstrate it fails the pointwise identity by 2(n−1)λ̇².
pub fn grad_a_norm_sq_variant(n: u32, lambda_dot: f64, variant: Variant) -> f64 {
    let nf = f64::from(n);
    let v2 = lambda_dot * lambda_dot;
    match variant {
        Variant::Corrected => (nf - 1.0) * (nf + 2.0) * v2,
        Variant::Printed => nf * (nf - 1.0) * v2,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rel_err;
    use rand::Rng;
    use rand::SeedableRng;

    #[test]
    fn rhs_examples() {
        for n in 3..=6 {
            assert!(ode_rhs(n, clifford_lambda(n), 0.0).unwrap().abs() < 1e-13);
        }
        assert_eq!(ode_rhs(3, 1.0, 0.0).unwrap(), -3.0);
        assert!((ode_rhs(4, 0.5, 0.2).unwrap() - 0.6).abs() < 1e-14);
        assert!(ode_rhs(3, 0.0, 0.0).is_err());
        assert!(ode_rhs(3, -1.0, 0.0).is_err());
        assert!(ode_rhs(2, 1.0, 0.0).is_err());
    }

    #[test]
    fn first_integral_at_equilibrium() {
        for n in 3..=6u32 {
            let nf = f64::from(n);
            let want = nf * nf
                * ((nf - 1.0).powf(-(nf - 1.0) / nf) + (nf - 1.0).powf(1.0 / nf));
            let got = first_integral(n, clifford_lambda(n), 0.0).unwrap();
            assert!(rel_err(got, want) < 1e-14, "n={n}");
        }
        let e = first_integral(3, 0.5f64.sqrt(), 0.0).unwrap();
        assert!((e - 17.008934173580788).abs() < 1e-12);
    }

    #[test]
    fn first_integral_is_conserved_analytically() {
        // dE/dt = ∂E/∂λ·λ̇ + ∂E/∂λ̇·λ̈ vanishes identically along the rhs.
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let n = rng.random_range(3..=7u32);
            let nf = f64::from(n);
            let l: f64 = rng.random_range(0.2..2.0);
            let v: f64 = rng.random_range(-2.0..2.0);
            let acc = ode_rhs(n, l, v).unwrap();
            let w = l.powf(-2.0 * (nf + 1.0) / nf);
            let de_dl = -2.0 * (nf + 1.0) / nf * v * v * w / l + potential_deriv(n, l);
            let de_dv = 2.0 * v * w;
            let de_dt = de_dl * v + de_dv * acc;
            let e = first_integral(n, l, v).unwrap();
            assert!(de_dt.abs() <= 1e-12 * (1.0 + e.abs()), "dE/dt = {de_dt:e}");
        }
    }

    #[test]
    fn turning_point_examples() {
        let tp = turning_points(3, 0.9).unwrap();
        assert_eq!(tp.lambda_max, 0.9);
        assert!(tp.lambda_min > 0.54 && tp.lambda_min < 0.56);
        assert!(
            (potential(3, tp.lambda_min) - potential(3, 0.9)).abs()
                < 1e-11 * potential(3, 0.9)
        );

        let tp = turning_points(4, clifford_lambda(4)).unwrap();
        assert!(tp.degenerate);
        assert_eq!(tp.lambda_min, tp.lambda_max);
    }

    #[test]
    fn turning_points_straddle_the_center() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let n = rng.random_range(3..=6u32);
            let star = clifford_lambda(n);
            let lambda0 = star * rng.random_range(0.5..1.8);
            if (lambda0 - star).abs() < 1e-6 {
                continue;
            }
            let tp = turning_points(n, lambda0).unwrap();
            assert!(tp.lambda_min < star && star < tp.lambda_max);
            let e = potential(n, lambda0);
            assert!((potential(n, tp.lambda_min) - e).abs() < 1e-10 * e);
            assert!((potential(n, tp.lambda_max) - e).abs() < 1e-10 * e);
        }
    }

    #[test]
    fn constant_profile_at_equilibrium() {
        let p = integrate_profile(4, clifford_lambda(4), 1e-3).unwrap();
        assert!(p.degenerate);
        assert_eq!(p.energy_drift, 0.0);
        for s in &p.samples {
            assert_eq!(s.lambda_dot, 0.0);
            assert!((profile_abs_a2(4, s.lambda) - 4.0).abs() < 1e-13);
        }
    }

    #[test]
    fn profile_matches_turning_points() {
        let p = integrate_profile(3, 0.9, 1e-3).unwrap();
        let tp = turning_points(3, 0.9).unwrap();
        let lo = p.samples.iter().map(|s| s.lambda).fold(f64::INFINITY, f64::min);
        let hi = p
            .samples
            .iter()
            .map(|s| s.lambda)
            .fold(f64::NEG_INFINITY, f64::max);
        // the sampled extremes sit within O(h²) of the true turning points
        // (the grid does not land exactly on them), and never outside
        assert!(lo >= tp.lambda_min - 1e-9 && lo <= tp.lambda_min + 1e-4);
        assert!(hi <= tp.lambda_max + 1e-9 && hi >= tp.lambda_max - 1e-4);
        assert!(p.samples.iter().all(|s| s.lambda > 0.0));
        assert_eq!(p.lambda_max, 0.9);
    }

    #[test]
    fn profile_is_time_reversible() {
        let p = integrate_profile(3, 0.9, 1e-3).unwrap();
        let m = p.samples.len() - 1;
        for i in 0..=m {
            let a = &p.samples[i];
            let b = &p.samples[m - i];
            assert!((a.lambda - b.lambda).abs() < 1e-8);
            assert!((a.lambda_dot + b.lambda_dot).abs() < 1e-8);
        }
    }

    #[test]
    fn drift_within_bound_at_default_step() {
        let p = integrate_profile(3, 0.9, DEFAULT_STEP).unwrap();
        assert!(p.energy_drift < DRIFT_BOUND_AT_DEFAULT);
    }

    #[test]
    fn amplitude_guard_rejects_wide_orbits() {
        let err = integrate_profile(3, 2.0, 1e-3).unwrap_err();
        assert!(format!("{err}").contains("amplitude guard"));
    }

    #[test]
    fn quadrature_small_amplitude_limit() {
        for n in 3..=5u32 {
            let lambda0 = clifford_lambda(n) * (1.0 + 1e-4);
            let t = period_quadrature(n, lambda0).unwrap();
            assert!(
                rel_err(t, linearized_period(n)) < 1e-6,
                "n={n}: {t} vs {}",
                linearized_period(n)
            );
        }
    }

    #[test]
    fn quadrature_cross_checks_integration() {
        let p = integrate_profile(3, 0.9, 1e-3).unwrap();
        let t = period_quadrature(3, 0.9).unwrap();
        assert!((p.period - t).abs() < 1e-7, "{} vs {t}", p.period);
    }

    #[test]
    fn quadrature_is_turning_point_symmetric() {
        let tp = turning_points(3, 0.9).unwrap();
        let a = period_quadrature(3, 0.9).unwrap();
        let b = period_quadrature(3, tp.lambda_min).unwrap();
        assert!((a - b).abs() < 1e-8);
        assert!(period_quadrature(3, clifford_lambda(3)).is_err());
    }

    #[test]
    fn period_error_scales_at_fourth_order() {
        let truth = period_quadrature(3, 0.9).unwrap();
        let e1 = (integrate_profile(3, 0.9, 0.02).unwrap().period - truth).abs();
        let e2 = (integrate_profile(3, 0.9, 0.01).unwrap().period - truth).abs();
        let ratio = e1 / e2;
        assert!(ratio > 8.0 && ratio < 32.0, "ratio {ratio}");
    }

    #[test]
    fn pointwise_quantities() {
        for n in 3..=6 {
            assert!((profile_abs_a2(n, clifford_lambda(n)) - f64::from(n)).abs() < 1e-13);
        }
        assert_eq!(grad_a_norm_sq(3, 0.0), 0.0);
        assert_eq!(grad_a_norm_sq(3, 1.0), 10.0);
        assert_eq!(grad_a_norm_sq_variant(3, 1.0, Variant::Printed), 6.0);
    }
}
