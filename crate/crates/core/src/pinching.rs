//! The pinching thresholds δ_k(n), located as the unique positive root of
//! the sign polynomial in the squared-curvature variable x = λ²:
//!
//! P(x) = Σ_{i=1}^{k−1} (n−1)^i c_i x^i − (n−2)/n,
//!
//! with c_i = (2i−1) + 2/n (corrected) or 1/(2i−1) + 2/n (printed). All
//! non-constant coefficients are positive and the constant term is negative
//! for n ≥ 3, so P is strictly increasing on x ≥ 0 and has exactly one
//! positive root x*. Since |A|² = n(n−1)λ² along a profile, the threshold in
//! |A|² units is δ_k(n) = n(n−1)·x*: min|A|² ≥ δ_k(n) is exactly λ_min² ≥ x*.

use crate::error::{Error, Result};
use crate::Variant;

/// Bisection width for the root in the x = λ² variable.
pub const ROOT_TOL: f64 = 1e-14;

/// The coefficient c_i of the sign polynomial. The two variants agree at
/// i = 1 (both 1 + 2/n) and diverge for i ≥ 2.
pub fn coefficient(n: u32, i: u32, variant: Variant) -> f64 {
    let nf = f64::from(n);
    match variant {
        Variant::Corrected => f64::from(2 * i - 1) + 2.0 / nf,
        Variant::Printed => 1.0 / f64::from(2 * i - 1) + 2.0 / nf,
    }
}

fn validate(n: u32, k: u32) -> Result<()> {
    if n < 3 {
        return Err(Error::Domain(format!("pinching requires n >= 3, got {n}")));
    }
    if k < 2 {
        return Err(Error::Domain(format!("pinching requires k >= 2, got {k}")));
    }
    Ok(())
}

/// P(x) for x ≥ 0.
pub fn pinching_poly(n: u32, k: u32, x: f64, variant: Variant) -> Result<f64> {
    validate(n, k)?;
    if !(x >= 0.0) {
        return Err(Error::Domain(format!("polynomial argument must be >= 0, got {x}")));
    }
    let nf = f64::from(n);
    let mut acc = -(nf - 2.0) / nf;
    let mut pw = 1.0;
    for i in 1..k {
        pw *= (nf - 1.0) * x;
        acc += coefficient(n, i, variant) * pw;
    }
    Ok(acc)
}

/// The unique positive root x* of P together with the final bisection
/// bracket.
pub fn pinching_root(n: u32, k: u32, variant: Variant) -> Result<(f64, (f64, f64))> {
    validate(n, k)?;
    let mut hi = 1.0;
    while pinching_poly(n, k, hi, variant)? <= 0.0 {
        hi *= 2.0;
        if hi > 1e30 {
            return Err(Error::Integration("failed to bracket the pinching root".into()));
        }
    }
    let mut lo = 0.0;
    while hi - lo > ROOT_TOL {
        let mid = 0.5 * (lo + hi);
        if pinching_poly(n, k, mid, variant)? > 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok((0.5 * (lo + hi), (lo, hi)))
}

/// δ_k(n) = n(n−1)·x*, the min|A|² threshold.
pub fn delta_k(n: u32, k: u32, variant: Variant) -> Result<f64> {
    let (root, _) = pinching_root(n, k, variant)?;
    Ok(f64::from(n) * f64::from(n - 1) * root)
}

#[derive(Debug, Clone, Copy, serde::Serialize)]
pub struct PinchingEntry {
    pub k: u32,
    /// Positive root of the sign polynomial in x = λ².
    pub root_x: f64,
    /// n(n−1)·root_x.
    pub delta: f64,
    pub variant: Variant,
    /// Final bisection bracket for the root.
    pub bracket: (f64, f64),
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct PinchingTable {
    pub n: u32,
    pub entries: Vec<PinchingEntry>,
}

/// The table for k = 2..k_max, with the monotonicity and boundedness
/// invariants enforced: δ_k strictly decreasing and δ_k < n throughout.
pub fn monotonicity_table(n: u32, k_max: u32, variant: Variant) -> Result<PinchingTable> {
    validate(n, k_max)?;
    let nf = f64::from(n);
    let mut entries = Vec::new();
    let mut prev = f64::INFINITY;
    for k in 2..=k_max {
        let (root_x, bracket) = pinching_root(n, k, variant)?;
        let delta = nf * (nf - 1.0) * root_x;
        if delta >= prev {
            return Err(Error::Invariant(format!(
                "delta_{k}({n}) = {delta} is not below delta_{}({n}) = {prev}",
                k - 1
            )));
        }
        if delta >= nf {
            return Err(Error::Invariant(format!("delta_{k}({n}) = {delta} is not below n")));
        }
        prev = delta;
        entries.push(PinchingEntry {
            k,
            root_x,
            delta,
            variant,
            bracket,
        });
    }
    Ok(PinchingTable { n, entries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rel_err;

    #[test]
    fn k2_root_is_closed_form() {
        // P is linear at k = 2: root x* = (n−2)/((n−1)(n+2)), δ = n(n−2)/(n+2)
        for n in 3..=10u32 {
            let nf = f64::from(n);
            let want_x = (nf - 2.0) / ((nf - 1.0) * (nf + 2.0));
            for variant in [Variant::Corrected, Variant::Printed] {
                let (x, _) = pinching_root(n, 2, variant).unwrap();
                assert!(rel_err(x, want_x) < 1e-12);
                let d = delta_k(n, 2, variant).unwrap();
                assert!(rel_err(d, nf * (nf - 2.0) / (nf + 2.0)) < 1e-12);
            }
        }
        assert!(rel_err(delta_k(4, 2, Variant::Corrected).unwrap(), 4.0 / 3.0) < 1e-12);
        assert!(rel_err(delta_k(3, 2, Variant::Corrected).unwrap(), 0.6) < 1e-12);
    }

    #[test]
    fn poly_shape() {
        for n in 3..=8u32 {
            let nf = f64::from(n);
            assert!(rel_err(
                pinching_poly(n, 5, 0.0, Variant::Corrected).unwrap(),
                -(nf - 2.0) / nf
            ) < 1e-15);
            // strictly increasing on x > 0
            let mut prev = f64::NEG_INFINITY;
            for i in 0..50 {
                let v = pinching_poly(n, 4, 0.01 * f64::from(i), Variant::Corrected).unwrap();
                assert!(v > prev);
                prev = v;
            }
        }
        assert!(pinching_poly(3, 1, 0.1, Variant::Corrected).is_err());
        assert!(pinching_poly(2, 3, 0.1, Variant::Corrected).is_err());
    }

    #[test]
    fn n3_k3_roots_match_the_quadratic_formula() {
        // corrected: 44x² + 10x − 1 = 0
        let want = (-10.0 + 276f64.sqrt()) / 88.0;
        let (x, _) = pinching_root(3, 3, Variant::Corrected).unwrap();
        assert!(rel_err(x, want) < 1e-12);
        let d = delta_k(3, 3, Variant::Corrected).unwrap();
        assert!((d - 0.4509).abs() < 1e-4);

        // printed: 12x² + 10x − 1 = 0
        let want = (-10.0 + 148f64.sqrt()) / 24.0;
        let (x, _) = pinching_root(3, 3, Variant::Printed).unwrap();
        assert!(rel_err(x, want) < 1e-12);
        let d = delta_k(3, 3, Variant::Printed).unwrap();
        assert!((d - 0.5414).abs() < 1e-4);
    }

    #[test]
    fn variants_agree_at_k2_and_split_later() {
        for n in 3..=8u32 {
            let a = delta_k(n, 2, Variant::Corrected).unwrap();
            let b = delta_k(n, 2, Variant::Printed).unwrap();
            assert!(rel_err(a, b) < 1e-13);
        }
        let a = delta_k(3, 3, Variant::Corrected).unwrap();
        let b = delta_k(3, 3, Variant::Printed).unwrap();
        assert!((b - a) / a > 0.05);
    }

    #[test]
    fn table_is_decreasing_and_bounded() {
        for n in 3..=8u32 {
            let t = monotonicity_table(n, 6, Variant::Corrected).unwrap();
            assert_eq!(t.entries.len(), 5);
            let first = &t.entries[0];
            assert!(rel_err(first.delta, f64::from(n) * (f64::from(n) - 2.0) / (f64::from(n) + 2.0)) < 1e-12);
            for e in &t.entries {
                assert!(e.delta < f64::from(n));
                // the threshold sits below the constant-solution value
                assert!(e.root_x < 1.0 / f64::from(n - 1));
                assert!(
                    pinching_poly(n, e.k, 1.0 / f64::from(n - 1), e.variant).unwrap() > 0.0
                );
                assert!(e.bracket.1 - e.bracket.0 <= ROOT_TOL);
            }
        }
    }

    #[test]
    fn sign_agrees_with_measure_polynomial() {
        // x ≥ x* ⟺ S(λ)|_(λ²=x) ≥ 0 on a grid
        use crate::measure::sign_polynomial;
        for (n, k) in [(3u32, 3u32), (4, 2), (5, 4)] {
            let (x_star, _) = pinching_root(n, k, Variant::Corrected).unwrap();
            for j in 1..60 {
                let x = 0.005 * f64::from(j);
                let s = sign_polynomial(n, k, x.sqrt(), Variant::Corrected).unwrap();
                if x > x_star + 1e-9 {
                    assert!(s > 0.0, "S should be positive at x={x} (x*={x_star})");
                } else if x < x_star - 1e-9 {
                    assert!(s < 0.0, "S should be negative at x={x} (x*={x_star})");
                }
            }
        }
    }
}
