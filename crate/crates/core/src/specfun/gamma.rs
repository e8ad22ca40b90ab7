use std::f64::consts::PI;

use crate::error::{Error, Result};

// Lanczos approximation, g = 7, n = 9.
const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_8;

/// Γ(x) for any real x that is not a pole. Poles give NaN.
pub fn gamma(x: f64) -> f64 {
    if x <= 0.0 && x.fract() == 0.0 {
        return f64::NAN;
    }
    if x < 0.5 {
        return PI / ((PI * x).sin() * gamma(1.0 - x));
    }
    if x.fract() == 0.0 && x <= 23.0 {
        // exact in double precision
        return (2..x as u64).fold(1.0, |acc, k| acc * k as f64);
    }
    if x > 171.7 {
        return f64::INFINITY;
    }
    let z = x - 1.0;
    let mut sum = LANCZOS[0];
    for (i, c) in LANCZOS.iter().enumerate().skip(1) {
        sum += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    // split the power to delay overflow near the top of the range
    let half = t.powf(0.5 * (z + 0.5));
    (2.0 * PI).sqrt() * half * (-t).exp() * half * sum
}

/// ln Γ(x) for x > 0.
pub fn ln_gamma(x: f64) -> f64 {
    if x <= 0.0 {
        return f64::NAN;
    }
    if x < 15.0 {
        return gamma(x).ln();
    }
    let inv = 1.0 / x;
    let inv2 = inv * inv;
    let series =
        inv * (1.0 / 12.0 - inv2 * (1.0 / 360.0 - inv2 * (1.0 / 1260.0 - inv2 * (1.0 / 1680.0 - inv2 / 1188.0))));
    (x - 0.5) * x.ln() - x + LN_SQRT_2PI + series
}

/// Euler beta function B(a, b) for a, b > 0.
pub fn beta(a: f64, b: f64) -> f64 {
    if a + b < 150.0 {
        gamma(a) * gamma(b) / gamma(a + b)
    } else {
        (ln_gamma(a) + ln_gamma(b) - ln_gamma(a + b)).exp()
    }
}

/// Γ(a) when `b` is absent, B(a, b) otherwise.
pub fn gamma_beta(a: f64, b: Option<f64>) -> Result<f64> {
    if !(a > 0.0) || !a.is_finite() {
        return Err(Error::domain(format!("gamma/beta argument must be positive, got {a}")));
    }
    let value = match b {
        None => gamma(a),
        Some(b) if b > 0.0 && b.is_finite() => beta(a, b),
        Some(b) => return Err(Error::domain(format!("beta argument must be positive, got {b}"))),
    };
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::Numerical(format!("gamma/beta overflow at a = {a}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn factorials_and_half_integers() {
        let mut fact = 1.0;
        for n in 1..30u32 {
            assert!(rel(gamma(n as f64), fact) < 1e-13, "Γ({n})");
            fact *= n as f64;
        }
        let mut half = PI.sqrt();
        for n in 0..40 {
            let x = n as f64 + 0.5;
            assert!(rel(gamma(x), half) < 1e-13, "Γ({x})");
            half *= x;
        }
    }

    #[test]
    fn reflection() {
        assert!(rel(gamma(-0.5), -2.0 * PI.sqrt()) < 1e-14);
        assert!(gamma(-2.0).is_nan());
    }

    #[test]
    fn ln_gamma_matches_gamma() {
        for &x in &[0.3, 1.0, 7.5, 14.9, 15.0, 30.5, 100.0, 170.0] {
            assert!((ln_gamma(x) - gamma(x).ln()).abs() < 1e-12 * ln_gamma(x).abs().max(1.0), "{x}");
        }
    }

    #[test]
    fn gamma_beta_examples() {
        assert_eq!(gamma_beta(1.0, None).unwrap(), 1.0);
        assert!(rel(gamma_beta(0.5, Some(0.5)).unwrap(), PI) < 1e-14);
        assert!(rel(gamma_beta(1.5, Some(0.5)).unwrap(), PI / 2.0) < 1e-14);
        assert!(gamma_beta(0.0, None).is_err());
        assert!(gamma_beta(1.0, Some(-1.0)).is_err());
    }

    #[test]
    fn beta_large_arguments() {
        // B(a, 1) = 1 / a
        for &a in &[10.0, 149.0, 151.0, 400.0] {
            assert!(rel(beta(a, 1.0), 1.0 / a) < 1e-12, "{a}");
        }
    }
}
