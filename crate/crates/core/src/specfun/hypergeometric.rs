use super::gamma::beta;
use super::{Method, SpecFunResult};
use crate::error::{Error, Result};
use crate::quadrature::{tanh_sinh, Abscissa};

/// Gauss hypergeometric function ₂F₁(a, b; c; z) for z ∈ [0, 1).
pub fn hyp2f1(a: f64, b: f64, c: f64, z: f64) -> Result<f64> {
    hyp2f1_result(a, b, c, z).map(|r| r.value)
}

pub fn hyp2f1_result(a: f64, b: f64, c: f64, z: f64) -> Result<SpecFunResult> {
    if !(0.0..1.0).contains(&z) {
        return Err(Error::domain(format!("hyp2f1 needs z in [0, 1), got {z}")));
    }
    hyp2f1_impl(a, b, c, z, 1.0 - z)
}

/// ₂F₁(a, b; c; 1 - w), taking the distance `w` to the branch point directly
/// so that arguments very close to 1 keep full relative precision.
pub fn hyp2f1_complement(a: f64, b: f64, c: f64, w: f64) -> Result<f64> {
    if !(w > 0.0 && w <= 1.0) {
        return Err(Error::domain(format!("hyp2f1 complement needs w in (0, 1], got {w}")));
    }
    hyp2f1_impl(a, b, c, 1.0 - w, w).map(|r| r.value)
}

fn hyp2f1_impl(a: f64, b: f64, c: f64, z: f64, w: f64) -> Result<SpecFunResult> {
    if !a.is_finite() || !b.is_finite() || !c.is_finite() {
        return Err(Error::domain("hyp2f1 parameters must be finite"));
    }
    if c <= 0.0 && c.fract() == 0.0 {
        return Err(Error::domain(format!("hyp2f1 undefined for c = {c}")));
    }
    if z == 0.0 {
        return Ok(SpecFunResult::exact(1.0, Method::Series));
    }
    if z <= 0.5 {
        return series(a, b, c, z, 200);
    }
    if c > b && b > 0.0 {
        return euler(a, b, c, z, w);
    }
    if c > a && a > 0.0 {
        return euler(b, a, c, z, w);
    }
    series(a, b, c, z, 2_000_000)
}

fn series(a: f64, b: f64, c: f64, z: f64, max_terms: usize) -> Result<SpecFunResult> {
    let mut term = 1.0;
    let mut sum = 1.0;
    let mut abs_sum = 1.0;
    for k in 0..max_terms {
        let kf = k as f64;
        term *= (a + kf) * (b + kf) / ((c + kf) * (kf + 1.0)) * z;
        sum += term;
        abs_sum += term.abs();
        if term == 0.0 || (term.abs() <= 1e-17 * sum.abs() && k > 2) {
            let est_error = 4.0 * f64::EPSILON * abs_sum + term.abs();
            return Ok(SpecFunResult { value: sum, est_error, method: Method::Series });
        }
    }
    Err(Error::Accuracy { value: sum, est_error: term.abs() })
}

/// F = 1/B(b, c-b) ∫₀¹ v^{b-1} (1-v)^{c-b-1} (1-vz)^{-a} dv, valid for c > b > 0.
fn euler(a: f64, b: f64, c: f64, z: f64, w: f64) -> Result<SpecFunResult> {
    let f = |p: Abscissa| {
        // 1 - v z = w + z (1 - v)
        let base = w + z * p.to_hi;
        p.from_lo.powf(b - 1.0) * p.to_hi.powf(c - b - 1.0) * base.powf(-a)
    };
    let r = tanh_sinh(&f, 0.0, 1.0, 0.0, 1e-14, 14)?;
    let norm = beta(b, c - b);
    Ok(SpecFunResult {
        value: r.value / norm,
        est_error: (r.est_error + 8.0 * f64::EPSILON * r.value.abs()) / norm,
        method: Method::Integral,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_and_binomial() {
        assert_eq!(hyp2f1(0.3, 0.7, 1.1, 0.0).unwrap(), 1.0);
        // F(a, b; a; z) = (1 - z)^{-b}
        let v = hyp2f1(1.0, 0.5, 1.0, 0.75).unwrap();
        assert!((v - 2.0).abs() < 2e-10);
        for &z in &[0.2, 0.6, 0.9, 0.999] {
            let v = hyp2f1(1.3, 0.5, 1.3, z).unwrap();
            let want = (1.0 - z).powf(-0.5);
            assert!(((v - want) / want).abs() < 1e-10, "z={z}");
        }
    }

    #[test]
    fn series_and_integral_agree_at_half() {
        let s = series(0.5, 0.5, 1.0, 0.5, 500).unwrap().value;
        let e = euler(0.5, 0.5, 1.0, 0.5, 0.5).unwrap().value;
        assert!(((s - e) / s).abs() < 1e-10);
    }

    #[test]
    fn elementary_identities() {
        // F(1, 1; 2; z) = -ln(1 - z) / z
        for &z in &[0.3, 0.7, 0.95] {
            let v = hyp2f1(1.0, 1.0, 2.0, z).unwrap();
            let want = -(1.0 - z).ln() / z;
            assert!(((v - want) / want).abs() < 1e-10, "z={z}");
        }
        // F(1/2, 1; 3/2; z^2) = atanh(z) / z
        for &x in &[0.5, 0.9, 0.99] {
            let v = hyp2f1(0.5, 1.0, 1.5, x * x).unwrap();
            let want = x.atanh() / x;
            assert!(((v - want) / want).abs() < 1e-10, "x={x}");
        }
    }

    #[test]
    fn complement_near_branch_point() {
        let w = 1e-9;
        let v = hyp2f1_complement(1.0, 0.5, 1.0, w).unwrap();
        assert!((v * w.sqrt() - 1.0).abs() < 1e-10);
    }

    #[test]
    fn domain_errors() {
        assert!(hyp2f1(1.0, 1.0, 2.0, 1.0).is_err());
        assert!(hyp2f1(1.0, 1.0, -2.0, 0.3).is_err());
        assert!(hyp2f1(1.0, 1.0, 2.0, -0.1).is_err());
    }
}
