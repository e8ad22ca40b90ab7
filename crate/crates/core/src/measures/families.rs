use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::sync::Mutex;

use serde::{Deserialize, Serialize};

use super::{Atom, DensityComponent, RadialMeasure};
use crate::error::{Error, Result};
use crate::quadrature::{integrate, Abscissa, EndpointHints, ErrorSlot, QuadratureSpec};
use crate::specfun::{beta, gamma, hyp2f1_complement};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    ExpDecay,
    GaussDecay,
}

/// Dimension-m Schoenberg density of e^{-r} or e^{-r²} at u > 0.
pub fn classical_family_density(family: Family, m: u32, u: f64) -> Result<f64> {
    if m == 0 {
        return Err(Error::domain("family dimension must be >= 1"));
    }
    if !(u > 0.0) || !u.is_finite() {
        return Err(Error::domain(format!("density argument must be positive, got {u}")));
    }
    let mf = m as f64;
    Ok(match family {
        Family::ExpDecay => 2.0 / beta(0.5 * mf, 0.5) * u.powi(m as i32 - 1) / (1.0 + u * u).powf(0.5 * (mf + 1.0)),
        Family::GaussDecay => (0.5 * u).powi(m as i32 - 1) * (-0.25 * u * u).exp() / gamma(0.5 * mf),
    })
}

/// C_n = 2Γ(n/2)² / (π Γ(n-1)).
pub fn omega_sq_constant(n: u32) -> f64 {
    let g = gamma(0.5 * n as f64);
    2.0 * g * g / (PI * gamma(n as f64 - 1.0))
}

/// Dimension 2n-2 density of Ω_n², C_n x^{n-2} / sqrt(4 - x²) on (0, 2).
pub fn omega_sq_density(n: u32, x: f64) -> Result<f64> {
    if n < 2 {
        return Err(Error::domain(format!("square-kernel density needs n >= 2, got {n}")));
    }
    if !(x > 0.0 && x < 2.0) {
        return Err(Error::domain(format!("square-kernel density needs x in (0, 2), got {x}")));
    }
    DensityComponent::omega_sq(n, 1.0)?.eval(x)
}

/// Schoenberg measure of Ω_n² in dimension 2n-2; for n = 1 it is (δ₀ + δ₂)/2
/// in dimension 1.
pub fn omega_sq_measure(n: u32) -> Result<RadialMeasure> {
    match n {
        0 => Err(Error::domain("n must be >= 1")),
        1 => RadialMeasure::new(
            vec![Atom { location: 0.0, mass: 0.5 }, Atom { location: 2.0, mass: 0.5 }],
            Vec::new(),
            &QuadratureSpec::default(),
        ),
        _ => RadialMeasure::from_component(DensityComponent::omega_sq(n, 1.0)?, &QuadratureSpec::default()),
    }
}

static STEP_BACK_CONSTANTS: Mutex<BTreeMap<u32, f64>> = Mutex::new(BTreeMap::new());

/// C′_n normalising x^{2n-4} F((n-1)/2, 1/2; 1; 1 - x²/4) to unit mass on
/// (0, 2). Computed once per n by quadrature.
pub fn step_back_constant(n: u32) -> Result<f64> {
    if n < 2 {
        return Err(Error::domain(format!("step-back density needs n >= 2, got {n}")));
    }
    if let Some(&c) = STEP_BACK_CONSTANTS.lock().unwrap().get(&n) {
        return Ok(c);
    }
    let spec = QuadratureSpec::default().with_abs_tol(1e-13)?;
    let a = 0.5 * (n as f64 - 1.0);
    let slot = ErrorSlot::new();
    let f = |p: Abscissa| p.x.powi(2 * n as i32 - 4) * slot.catch(hyp2f1_complement(a, 0.5, 1.0, 0.25 * p.x * p.x));
    let mass = slot.check(integrate(f, 0.0, 2.0, EndpointHints::REGULAR, &spec))?.value;
    let c = 1.0 / mass;
    STEP_BACK_CONSTANTS.lock().unwrap().insert(n, c);
    Ok(c)
}

/// Dimension 2n-3 density of Ω_n² at x in (0, 2).
pub fn omega_sq_step_back_density(n: u32, x: f64) -> Result<f64> {
    if n < 2 {
        return Err(Error::domain(format!("step-back density needs n >= 2, got {n}")));
    }
    if !(x > 0.0 && x < 2.0) {
        return Err(Error::domain(format!("step-back density needs x in (0, 2), got {x}")));
    }
    DensityComponent::step_back(n)?.eval(x)
}

/// Support of the Schoenberg measure of Ω_n(a·)Ω_n(b·).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ProductSupport {
    pub lo: f64,
    pub hi: f64,
    /// The support stays away from 0, so the kernel is not in the next class.
    pub not_in_next: bool,
}

pub fn product_kernel_support(n: u32, a: f64, b: f64) -> Result<ProductSupport> {
    if n == 0 {
        return Err(Error::domain("n must be >= 1"));
    }
    if !(a > 0.0) || !(b > 0.0) || !a.is_finite() || !b.is_finite() {
        return Err(Error::domain(format!("product scales must be positive, got {a}, {b}")));
    }
    Ok(ProductSupport { lo: (a - b).abs(), hi: a + b, not_in_next: a != b })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernels::RadialKernel;
    use crate::measures::schoenberg_transform;

    #[test]
    fn family_closed_forms() {
        for &u in &[0.1, 1.0, 3.0] {
            let cauchy = classical_family_density(Family::ExpDecay, 1, u).unwrap();
            assert!((cauchy - 2.0 / PI / (1.0 + u * u)).abs() < 1e-15);
            let g2 = classical_family_density(Family::GaussDecay, 2, u).unwrap();
            assert!((g2 - 0.5 * u * (-0.25 * u * u).exp()).abs() < 1e-15);
        }
        assert!(classical_family_density(Family::ExpDecay, 1, 0.0).is_err());
    }

    #[test]
    fn omega_sq_examples() {
        assert!((omega_sq_constant(2) - 2.0 / PI).abs() < 1e-15);
        let m = omega_sq_measure(2).unwrap();
        assert!((m.total_mass() - 1.0).abs() < 1e-12);
        let m3 = omega_sq_measure(3).unwrap();
        let sq = RadialKernel::power(RadialKernel::omega(3).unwrap(), 2).unwrap();
        for &t in &[0.5, 1.0, 5.0] {
            let v = schoenberg_transform(4, &m3, t, &QuadratureSpec::default()).unwrap();
            assert!((v - sq.eval(t).unwrap()).abs() < 1e-8, "t={t}");
        }
        let m1 = omega_sq_measure(1).unwrap();
        assert_eq!(m1.atoms().len(), 2);
        assert!(m1.blocks_promotion());
        assert!(omega_sq_density(3, 2.0).is_err());
    }

    #[test]
    fn step_back_constants() {
        // F(1, 1/2; 1; z) = (1-z)^{-1/2} gives p(x) = C' x² (2/x), so C'_3 = 1/4
        assert!((step_back_constant(3).unwrap() - 0.25).abs() < 1e-12);
        for &x in &[0.3, 1.0, 1.9] {
            assert!((omega_sq_step_back_density(3, x).unwrap() - 0.5 * x).abs() < 1e-12);
        }
        // closed form (2 / B((2n-3)/2, 1/2)) 2^{-n} C_n π
        for n in 2..=6u32 {
            let nf = n as f64;
            let closed = 2.0 / beta(nf - 1.5, 0.5) * 2f64.powi(-(n as i32)) * omega_sq_constant(n) * PI;
            assert!((step_back_constant(n).unwrap() - closed).abs() < 1e-10 * closed, "n={n}");
        }
    }

    #[test]
    fn step_back_endpoint_is_finite() {
        for n in 2..=5u32 {
            let c = step_back_constant(n).unwrap();
            let near = omega_sq_step_back_density(n, 2.0 - 1e-9).unwrap();
            assert!((near - c * 2f64.powi(2 * n as i32 - 4)).abs() < 1e-6 * near, "n={n}");
        }
    }

    #[test]
    fn product_supports() {
        let s = product_kernel_support(3, 1.0, 1.0).unwrap();
        assert_eq!((s.lo, s.hi, s.not_in_next), (0.0, 2.0, false));
        let s = product_kernel_support(3, 1.0, 3.0).unwrap();
        assert_eq!((s.lo, s.hi, s.not_in_next), (2.0, 4.0, true));
        let s = product_kernel_support(2, 2.0, 2.5).unwrap();
        assert_eq!((s.lo, s.hi, s.not_in_next), (0.5, 4.5, true));
    }
}
