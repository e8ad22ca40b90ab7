//! Special functions: Γ and B, Bessel J_ν, Gauss ₂F₁ and the Schoenberg
//! kernels Ω_n.

mod bessel;
mod gamma;
mod hypergeometric;

use serde::{Deserialize, Serialize};

pub use bessel::{bessel_j, bessel_j_even_sequence, bessel_j_result};
pub use gamma::{beta, gamma, gamma_beta, ln_gamma};
pub use hypergeometric::{hyp2f1, hyp2f1_complement, hyp2f1_result};

use crate::error::{Error, Result};
use crate::quadrature::{integrate, Abscissa, EndpointHints, ErrorSlot, Integral, QuadratureSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Series,
    Asymptotic,
    Recurrence,
    Integral,
}

/// A special-function value with an absolute error estimate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpecFunResult {
    pub value: f64,
    pub est_error: f64,
    pub method: Method,
}

impl SpecFunResult {
    pub(crate) fn exact(value: f64, method: Method) -> Self {
        SpecFunResult { value, est_error: 0.0, method }
    }
}

/// Ω_n(s) = Γ(q+1) (2/s)^q J_q(s) with q = n/2 - 1.
pub fn omega(n: u32, s: f64) -> Result<f64> {
    omega_result(n, s).map(|r| r.value)
}

pub fn omega_result(n: u32, s: f64) -> Result<SpecFunResult> {
    if n == 0 {
        return Err(Error::domain("Schoenberg kernel needs n >= 1"));
    }
    let s = s.abs();
    if !s.is_finite() {
        return Err(Error::domain(format!("Schoenberg kernel argument must be finite, got {s}")));
    }
    if s == 0.0 {
        return Ok(SpecFunResult::exact(1.0, Method::Series));
    }
    let q = 0.5 * n as f64 - 1.0;
    if s <= (4.0 * (q + 1.0).sqrt()).max(6.0) {
        return Ok(omega_series(q, s));
    }
    let j = bessel_j_result(q, s)?;
    let pre =
        if q < 100.0 { gamma(q + 1.0) * (2.0 / s).powf(q) } else { (ln_gamma(q + 1.0) + q * (2.0 / s).ln()).exp() };
    Ok(SpecFunResult { value: pre * j.value, est_error: pre * j.est_error, method: j.method })
}

fn omega_series(q: f64, s: f64) -> SpecFunResult {
    let y = -0.25 * s * s;
    let mut term = 1.0;
    let mut sum = 1.0;
    let mut abs_sum = 1.0;
    for j in 1..400 {
        let jf = j as f64;
        term *= y / (jf * (jf + q));
        sum += term;
        abs_sum += term.abs();
        if term.abs() <= 0.25 * f64::EPSILON * sum.abs().max(1e-300) {
            break;
        }
    }
    SpecFunResult { value: sum, est_error: 4.0 * f64::EPSILON * abs_sum, method: Method::Series }
}

/// Sonine's average (2/B(m/2, k/2)) ∫₀¹ Ω_m(ts) s^{m-1} (1-s²)^{k/2-1} ds,
/// which equals Ω_{m+k}(t).
pub fn sonine_integral(m: u32, k: u32, t: f64, spec: &QuadratureSpec) -> Result<Integral> {
    if m == 0 || k == 0 {
        return Err(Error::domain(format!("Sonine integral needs m, k >= 1, got m={m}, k={k}")));
    }
    let c = 2.0 / beta(0.5 * m as f64, 0.5 * k as f64);
    let e = 0.5 * k as f64 - 1.0;
    let slot = ErrorSlot::new();
    let f = |a: Abscissa| {
        let w = if k == 2 { 1.0 } else { (a.to_hi * (1.0 + a.x)).powf(e) };
        slot.catch(omega(m, t * a.x)) * a.x.powi(m as i32 - 1) * w
    };
    let hints = EndpointHints::new(m as f64 - 1.0, e);
    let i = slot.check(integrate(f, 0.0, 1.0, hints, spec))?;
    Ok(Integral { value: c * i.value, est_error: c * i.est_error })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::f64::consts::PI;

    #[test]
    fn low_dimensional_kernels() {
        assert!((omega(1, PI).unwrap() + 1.0).abs() < 1e-15);
        assert!(omega(3, PI).unwrap().abs() < 1e-15);
        for n in 1..30 {
            assert_eq!(omega(n, 0.0).unwrap(), 1.0);
        }
        assert!((omega(2, 5.0).unwrap() - bessel_j(0.0, 5.0).unwrap()).abs() < 1e-13);
        assert!(omega(0, 1.0).is_err());
    }

    #[test]
    fn taylor_front() {
        // Richardson on the remainder after the quartic term: R(t)/t^6 tends to a constant
        for n in 1..=8u32 {
            let nf = n as f64;
            let rem = |t: f64| {
                let t2 = t * t;
                omega(n, t).unwrap() - (1.0 - t2 / (2.0 * nf) + t2 * t2 / (8.0 * nf * (nf + 2.0)))
            };
            let c6 = -1.0 / (48.0 * nf * (nf + 2.0) * (nf + 4.0));
            for &t in &[0.2, 0.1] {
                assert!((rem(t) / t.powi(6) - c6).abs() < 0.02 * c6.abs() + 1e-6, "n={n} t={t}");
            }
        }
    }

    #[test]
    fn sonine() {
        let spec = QuadratureSpec::default().with_abs_tol(1e-12).unwrap();
        for m in 1..=3u32 {
            for k in 1..=3u32 {
                for &t in &[0.5, 2.0, 7.0] {
                    let lhs = omega(m + k, t).unwrap();
                    let rhs = sonine_integral(m, k, t, &spec).unwrap().value;
                    assert!((lhs - rhs).abs() < 1e-9, "m={m} k={k} t={t}");
                }
            }
        }
    }

    #[test]
    fn crossover_continuity() {
        for n in [1u32, 2, 4, 7, 12, 20] {
            let q = 0.5 * n as f64 - 1.0;
            let s = (4.0 * (q + 1.0).sqrt()).max(6.0);
            let lo = omega_series(q, s).value;
            let hi = omega_result(n, s * (1.0 + 1e-15)).unwrap().value;
            assert!((lo - hi).abs() < 1e-13, "n={n}");
        }
    }

    proptest! {
        #[test]
        fn bounded_by_one(n in 1u32..=20, s in 0.0f64..100.0) {
            let v = omega(n, s).unwrap();
            prop_assert!(v.abs() <= 1.0 + 1e-13);
        }

        #[test]
        fn sine_kernel(s in 0.01f64..100.0) {
            prop_assert!((omega(3, s).unwrap() - s.sin() / s).abs() <= 1e-12);
            prop_assert!((omega(1, s).unwrap() - s.cos()).abs() <= 1e-12);
        }
    }
}
