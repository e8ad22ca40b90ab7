//! Transition images of measures: k-step transitions between dimensions,
//! Gaussian mixtures and the square-kernel subclass.

use std::sync::Arc;

use super::{integrate_against, Atom, DensityComponent, DensityKind, RadialMeasure};
use crate::error::{Error, Result};
use crate::quadrature::{Abscissa, QuadratureSpec};
use crate::specfun::{beta, gamma};

use super::families::omega_sq_constant;

fn check_positive_x(x: f64) -> Result<()> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::domain(format!("density argument must be positive, got {x}")));
    }
    Ok(())
}

/// 2 x^{m-1} / B(m/2, k/2).
pub(super) fn prefactor(m: u32, k: u32, x: f64) -> f64 {
    2.0 * x.powi(m as i32 - 1) / beta(0.5 * m as f64, 0.5 * k as f64)
}

/// (1 - x²/u²)^{k/2-1} / u^m, with d = u - x supplied exactly.
pub(super) fn kernel_factor(m: u32, k: u32, x: f64, u: f64, d: f64) -> f64 {
    let um = u.powi(-(m as i32));
    if k == 2 {
        return um;
    }
    (d * (u + x) / (u * u)).powf(0.5 * k as f64 - 1.0) * um
}

pub(super) fn transition_integral(m: u32, k: u32, c: &DensityComponent, x: f64, spec: &QuadratureSpec) -> Result<f64> {
    Ok(integrate_against(c, x, |a: Abscissa| kernel_factor(m, k, x, a.x, a.from_lo), None, spec)?.value)
}

fn check_mk(m: u32, k: u32) -> Result<()> {
    if m == 0 || k == 0 {
        return Err(Error::domain(format!("transition needs m, k >= 1, got m={m}, k={k}")));
    }
    Ok(())
}

/// Dimension-m density p_m(x) of the function whose dimension-(m+k)
/// Schoenberg measure is `nu`:
/// p_m(x) = 2x^{m-1}/B(m/2, k/2) ∫_x^∞ (1 - x²/u²)^{k/2-1} u^{-m} ν(du).
pub fn transition_density(m: u32, k: u32, nu: &RadialMeasure, x: f64, spec: &QuadratureSpec) -> Result<f64> {
    check_mk(m, k)?;
    check_positive_x(x)?;
    let mut sum = 0.0;
    for a in nu.atoms() {
        if a.location == x && k <= 2 {
            return Err(Error::PrincipalValue(format!("atom at u = {x} coincides with the evaluation point")));
        }
        if a.location > x {
            sum += a.mass * kernel_factor(m, k, x, a.location, a.location - x);
        }
    }
    for c in nu.components() {
        sum += transition_integral(m, k, c, x, spec)?;
    }
    Ok(prefactor(m, k, x) * sum)
}

fn atom_transition(m: u32, k: u32, a: &Atom) -> DensityComponent {
    let kind = DensityKind::AtomTransition { m, k, u0: a.location };
    DensityComponent {
        weight: a.mass,
        ..DensityComponent::derived(kind, 0.0, a.location, m as f64 - 1.0, 0.5 * k as f64 - 1.0)
    }
}

/// The whole dimension-m measure; atoms at 0 stay atoms, other atoms and
/// density components become transition densities.
pub fn transition_measure(m: u32, k: u32, nu: &RadialMeasure, spec: &QuadratureSpec) -> Result<RadialMeasure> {
    check_mk(m, k)?;
    let mut atoms = Vec::new();
    let mut comps = Vec::new();
    for a in nu.atoms() {
        if a.location == 0.0 {
            atoms.push(*a);
        } else {
            comps.push(atom_transition(m, k, a));
        }
    }
    for c in nu.components() {
        let (lo, hi) = c.support();
        let left = if lo > 0.0 { m as f64 - 1.0 } else { (m as f64 - 1.0).min(c.left_exp) };
        let kind = DensityKind::Transition { m, k, source: Arc::new(c.clone()), spec: *spec };
        comps.push(DensityComponent::derived(kind, 0.0, hi, left, c.right_exp + 0.5 * k as f64));
    }
    RadialMeasure::new(atoms, comps, spec)
}

/// x^{m-1}/(2^{m/2-1}Γ(m/2)) (2 s0)^{-m/2} e^{-x²/(4 s0)}.
pub(super) fn gauss_atom(m: u32, s0: f64, x: f64) -> f64 {
    let h = 0.5 * m as f64;
    let log = (m as f64 - 1.0) * x.ln() - (h - 1.0) * std::f64::consts::LN_2 - h * (2.0 * s0).ln() - 0.25 * x * x / s0;
    log.exp() / gamma(h)
}

pub(super) fn gauss_mixture_integral(m: u32, source: &DensityComponent, x: f64, spec: &QuadratureSpec) -> Result<f64> {
    Ok(integrate_against(source, 0.0, |a: Abscissa| gauss_atom(m, a.x, x), None, spec)?.value)
}

fn check_sigma_for_mixture(sigma: &RadialMeasure) -> Result<()> {
    if sigma.atoms().iter().any(|a| a.location == 0.0) {
        return Err(Error::domain("mixing measure has mass at s = 0"));
    }
    Ok(())
}

/// p_{m,σ}(x) = x^{m-1}/(2^{m/2-1}Γ(m/2)) ∫ (2s)^{-m/2} e^{-x²/(4s)} σ(ds):
/// the dimension-m density of ∫ e^{-s r²} σ(ds).
pub fn gaussian_mixture_density(m: u32, sigma: &RadialMeasure, x: f64, spec: &QuadratureSpec) -> Result<f64> {
    if m == 0 {
        return Err(Error::domain("m must be >= 1"));
    }
    check_positive_x(x)?;
    check_sigma_for_mixture(sigma)?;
    let mut sum: f64 = sigma.atoms().iter().map(|a| a.mass * gauss_atom(m, a.location, x)).sum();
    for c in sigma.components() {
        sum += gauss_mixture_integral(m, c, x, spec)?;
    }
    Ok(sum)
}

pub fn gaussian_mixture_measure(m: u32, sigma: &RadialMeasure, spec: &QuadratureSpec) -> Result<RadialMeasure> {
    if m == 0 {
        return Err(Error::domain("m must be >= 1"));
    }
    check_sigma_for_mixture(sigma)?;
    let left = m as f64 - 1.0;
    let mut comps = Vec::new();
    for a in sigma.atoms() {
        let kind = DensityKind::GaussAtom { m, s0: a.location };
        comps.push(DensityComponent {
            weight: a.mass,
            ..DensityComponent::derived(kind, 0.0, f64::INFINITY, left, 0.0)
        });
    }
    for c in sigma.components() {
        let kind = DensityKind::GaussMixture { m, source: Arc::new(c.clone()), spec: *spec };
        comps.push(DensityComponent::derived(kind, 0.0, f64::INFINITY, left, 0.0));
    }
    RadialMeasure::new(Vec::new(), comps, spec)
}

/// C_n ∫_{u/2}^∞ (u/t)^{n-2} σ(dt) / sqrt(4t² - u²) over a density component.
pub(super) fn phi2_integral(n: u32, source: &DensityComponent, u: f64, spec: &QuadratureSpec) -> Result<f64> {
    let from = 0.5 * u;
    let g = |a: Abscissa| {
        let t = a.x;
        // 4t² - u² = 2(t - u/2)(2t + u)
        (u / t).powi(n as i32 - 2) / (2.0 * a.from_lo * (2.0 * t + u)).sqrt()
    };
    Ok(omega_sq_constant(n) * integrate_against(source, from, g, None, spec)?.value)
}

/// Dimension 2n-2 density at u of f(r) = ∫ Ω_n²(rt) σ(dt).
pub fn phi2_subclass_density(n: u32, sigma: &RadialMeasure, u: f64, spec: &QuadratureSpec) -> Result<f64> {
    if n < 2 {
        return Err(Error::domain(format!("square-kernel subclass needs n >= 2, got {n}")));
    }
    check_positive_x(u)?;
    let mut sum = 0.0;
    for a in sigma.atoms() {
        if a.location > 0.0 && u < 2.0 * a.location {
            sum += a.mass * DensityComponent::omega_sq(n, a.location)?.eval(u)?;
        }
    }
    for c in sigma.components() {
        sum += phi2_integral(n, c, u, spec)?;
    }
    Ok(sum)
}

pub fn phi2_measure(n: u32, sigma: &RadialMeasure, spec: &QuadratureSpec) -> Result<RadialMeasure> {
    if n < 2 {
        return Err(Error::domain(format!("square-kernel subclass needs n >= 2, got {n}")));
    }
    let mut atoms = Vec::new();
    let mut comps = Vec::new();
    for a in sigma.atoms() {
        if a.location == 0.0 {
            atoms.push(*a);
        } else {
            comps.push(DensityComponent::omega_sq(n, a.location)?.with_weight(a.mass)?);
        }
    }
    for c in sigma.components() {
        let (lo, hi) = c.support();
        let left = if lo > 0.0 { n as f64 - 2.0 } else { (n as f64 - 2.0).min(c.left_exp) };
        let kind = DensityKind::Phi2 { n, source: Arc::new(c.clone()), spec: *spec };
        comps.push(DensityComponent::derived(kind, 0.0, 2.0 * hi, left, c.right_exp + 0.5));
    }
    RadialMeasure::new(atoms, comps, spec)
}
