//! Radial (Schoenberg) measures on ℝ₊: atoms plus a finite sum of density
//! components, each with a declared support and endpoint behaviour.
//!
//! Closed-form families, transition images, Gaussian mixtures and the
//! square-kernel densities are all density components; derived components
//! keep a reference to the component they were computed from and evaluate
//! lazily by quadrature.

mod families;
mod text;
mod transition;

use std::f64::consts::PI;
use std::fmt;
use std::sync::Arc;

pub use families::{
    classical_family_density, omega_sq_constant, omega_sq_density, omega_sq_measure, omega_sq_step_back_density,
    product_kernel_support, step_back_constant, Family, ProductSupport,
};
pub use text::{format_measure, parse_measure};
pub use transition::{
    gaussian_mixture_density, gaussian_mixture_measure, phi2_measure, phi2_subclass_density, transition_density,
    transition_measure,
};

pub use crate::quadrature::{integrate, Abscissa, EndpointHints, Integral, QuadratureMethod, QuadratureSpec};

use crate::error::{Error, Result};
use crate::quadrature::{integrate_oscillatory, ErrorSlot};
use crate::specfun::{beta, gamma, hyp2f1_complement, omega};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Atom {
    pub location: f64,
    pub mass: f64,
}

pub type DensityFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// The functional form of a density component.
///
/// The closed-form kinds are probability densities scaled by the component
/// weight. Derived kinds carry their source component (weight included) and
/// have weight 1.
#[derive(Clone)]
pub enum DensityKind {
    ExpFamily {
        m: u32,
    },
    GaussFamily {
        m: u32,
    },
    /// Density of Ω_n² in dimension 2n-2, dilated by `scale`.
    OmegaSq {
        n: u32,
        scale: f64,
    },
    /// Dimension 2n-3 density of Ω_n².
    StepBack {
        n: u32,
    },
    Uniform,
    /// Image of δ_{u0} under the k-step transition to dimension m.
    AtomTransition {
        m: u32,
        k: u32,
        u0: f64,
    },
    Transition {
        m: u32,
        k: u32,
        source: Arc<DensityComponent>,
        spec: QuadratureSpec,
    },
    /// Dimension-m density of e^{-s0 r²}.
    GaussAtom {
        m: u32,
        s0: f64,
    },
    GaussMixture {
        m: u32,
        source: Arc<DensityComponent>,
        spec: QuadratureSpec,
    },
    /// Dimension 2n-2 density of ∫ Ω_n²(rt) σ(dt).
    Phi2 {
        n: u32,
        source: Arc<DensityComponent>,
        spec: QuadratureSpec,
    },
    Function(DensityFn),
}

impl fmt::Debug for DensityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DensityKind::ExpFamily { m } => write!(f, "ExpFamily(m={m})"),
            DensityKind::GaussFamily { m } => write!(f, "GaussFamily(m={m})"),
            DensityKind::OmegaSq { n, scale } => write!(f, "OmegaSq(n={n}, scale={scale})"),
            DensityKind::StepBack { n } => write!(f, "StepBack(n={n})"),
            DensityKind::Uniform => write!(f, "Uniform"),
            DensityKind::AtomTransition { m, k, u0 } => write!(f, "AtomTransition(m={m}, k={k}, u0={u0})"),
            DensityKind::Transition { m, k, source, .. } => write!(f, "Transition(m={m}, k={k}, {source:?})"),
            DensityKind::GaussAtom { m, s0 } => write!(f, "GaussAtom(m={m}, s0={s0})"),
            DensityKind::GaussMixture { m, source, .. } => write!(f, "GaussMixture(m={m}, {source:?})"),
            DensityKind::Phi2 { n, source, .. } => write!(f, "Phi2(n={n}, {source:?})"),
            DensityKind::Function(_) => write!(f, "Function"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct DensityComponent {
    kind: DensityKind,
    weight: f64,
    lo: f64,
    hi: f64,
    left_exp: f64,
    right_exp: f64,
}

fn check_dim(name: &str, v: u32, min: u32) -> Result<()> {
    if v < min {
        return Err(Error::domain(format!("{name} must be >= {min}, got {v}")));
    }
    Ok(())
}

impl DensityComponent {
    fn raw(kind: DensityKind, lo: f64, hi: f64, left_exp: f64, right_exp: f64) -> Self {
        DensityComponent { kind, weight: 1.0, lo, hi, left_exp, right_exp }
    }

    /// (2/B(m/2, 1/2)) u^{m-1} (1+u²)^{-(m+1)/2}: the measure of e^{-r}.
    pub fn exp_family(m: u32) -> Result<Self> {
        check_dim("m", m, 1)?;
        Ok(Self::raw(DensityKind::ExpFamily { m }, 0.0, f64::INFINITY, m as f64 - 1.0, 0.0))
    }

    /// (1/Γ(m/2)) (u/2)^{m-1} e^{-u²/4}: the measure of e^{-r²}.
    pub fn gauss_family(m: u32) -> Result<Self> {
        check_dim("m", m, 1)?;
        Ok(Self::raw(DensityKind::GaussFamily { m }, 0.0, f64::INFINITY, m as f64 - 1.0, 0.0))
    }

    pub fn omega_sq(n: u32, scale: f64) -> Result<Self> {
        check_dim("n", n, 2)?;
        if !(scale > 0.0) || !scale.is_finite() {
            return Err(Error::domain(format!("scale must be positive, got {scale}")));
        }
        Ok(Self::raw(DensityKind::OmegaSq { n, scale }, 0.0, 2.0 * scale, n as f64 - 2.0, -0.5))
    }

    pub fn step_back(n: u32) -> Result<Self> {
        check_dim("n", n, 2)?;
        // n = 2 has a logarithmic singularity at 0
        let left = if n == 2 { 0.0 } else { n as f64 - 2.0 };
        Ok(Self::raw(DensityKind::StepBack { n }, 0.0, 2.0, left, 0.0))
    }

    pub fn uniform(lo: f64, hi: f64) -> Result<Self> {
        if !(lo >= 0.0) || !(hi > lo) || !hi.is_finite() {
            return Err(Error::domain(format!("uniform support [{lo}, {hi}] is invalid")));
        }
        Ok(Self::raw(DensityKind::Uniform, lo, hi, 0.0, 0.0))
    }

    /// Arbitrary density on [lo, hi]; the exponents describe its endpoint behaviour.
    pub fn function(f: DensityFn, lo: f64, hi: f64, left_exp: f64, right_exp: f64) -> Result<Self> {
        if !(lo >= 0.0) || !(hi > lo) || !lo.is_finite() {
            return Err(Error::domain(format!("density support [{lo}, {hi}] is invalid")));
        }
        if !(left_exp > -1.0) || !(right_exp > -1.0) {
            return Err(Error::domain("endpoint exponents must exceed -1"));
        }
        Ok(Self::raw(DensityKind::Function(f), lo, hi, left_exp, right_exp))
    }

    pub fn with_weight(mut self, weight: f64) -> Result<Self> {
        if !(weight > 0.0) || !weight.is_finite() {
            return Err(Error::domain(format!("component weight must be positive, got {weight}")));
        }
        self.weight *= weight;
        Ok(self)
    }

    /// Overrides the declared endpoint exponents.
    pub fn with_exponents(mut self, left: f64, right: f64) -> Result<Self> {
        if !(left > -1.0) || !(right > -1.0) {
            return Err(Error::domain("endpoint exponents must exceed -1"));
        }
        self.left_exp = left;
        self.right_exp = right;
        Ok(self)
    }

    pub(crate) fn derived(kind: DensityKind, lo: f64, hi: f64, left_exp: f64, right_exp: f64) -> Self {
        Self::raw(kind, lo, hi, left_exp.max(-0.5), right_exp.max(-0.5))
    }

    pub fn kind(&self) -> &DensityKind {
        &self.kind
    }

    pub fn weight(&self) -> f64 {
        self.weight
    }

    pub fn support(&self) -> (f64, f64) {
        (self.lo, self.hi)
    }

    pub fn exponents(&self) -> EndpointHints {
        EndpointHints::new(self.left_exp, self.right_exp)
    }

    /// Mass implied by the construction, when it is known without quadrature.
    pub fn analytic_mass(&self) -> Option<f64> {
        match &self.kind {
            DensityKind::Function(_) => None,
            DensityKind::Transition { source, .. }
            | DensityKind::GaussMixture { source, .. }
            | DensityKind::Phi2 { source, .. } => source.analytic_mass().map(|m| m * self.weight),
            _ => Some(self.weight),
        }
    }

    /// Interior points where the density is not smooth.
    pub fn breakpoints(&self) -> Vec<f64> {
        let mut pts = match &self.kind {
            DensityKind::Transition { source, .. } => {
                let mut v = source.breakpoints();
                v.push(source.lo);
                v
            }
            DensityKind::Phi2 { source, .. } => {
                let mut v: Vec<f64> = source.breakpoints().iter().map(|b| 2.0 * b).collect();
                v.push(2.0 * source.lo);
                v
            }
            _ => Vec::new(),
        };
        pts.retain(|&b| b > self.lo && b < self.hi);
        pts.sort_by(|a, b| a.partial_cmp(b).unwrap());
        pts.dedup();
        pts
    }

    /// Whether ∫ x^p p(x) dx is finite; `None` when it cannot be decided.
    pub fn has_finite_moment(&self, p: f64) -> Option<bool> {
        if self.hi.is_finite() {
            return Some(true);
        }
        match &self.kind {
            DensityKind::ExpFamily { .. } => Some(p < 1.0),
            DensityKind::GaussFamily { .. } | DensityKind::GaussAtom { .. } => Some(true),
            DensityKind::Transition { source, .. } => source.has_finite_moment(p),
            DensityKind::GaussMixture { source, .. } => source.has_finite_moment(0.5 * p),
            DensityKind::Phi2 { source, .. } => source.has_finite_moment(p),
            _ => None,
        }
    }

    pub fn eval(&self, x: f64) -> Result<f64> {
        if !(x > self.lo) || !(x < self.hi) {
            return Ok(0.0);
        }
        self.eval_at(Abscissa { x, from_lo: x - self.lo, to_hi: self.hi - x })
    }

    /// Density at a node whose distances to the support ends are known
    /// exactly; used by quadrature near singular endpoints.
    pub fn eval_at(&self, a: Abscissa) -> Result<f64> {
        let x = a.x;
        let w = self.weight;
        let v = match &self.kind {
            DensityKind::ExpFamily { m } => {
                let mf = *m as f64;
                let ratio = x / x.hypot(1.0);
                2.0 / beta(0.5 * mf, 0.5) * ratio.powi(*m as i32 - 1) / (1.0 + x * x)
            }
            DensityKind::GaussFamily { m } => {
                (0.5 * x).powi(*m as i32 - 1) * (-0.25 * x * x).exp() / gamma(0.5 * *m as f64)
            }
            DensityKind::OmegaSq { n, scale } => {
                let y = x / scale;
                let d = a.to_hi / scale;
                omega_sq_constant(*n) * y.powi(*n as i32 - 2) / (d * (4.0 - d)).sqrt() / scale
            }
            DensityKind::StepBack { n } => {
                let c = step_back_constant(*n)?;
                let f = hyp2f1_complement(0.5 * (*n as f64 - 1.0), 0.5, 1.0, 0.25 * x * x)?;
                c * x.powi(2 * *n as i32 - 4) * f
            }
            DensityKind::Uniform => 1.0 / (self.hi - self.lo),
            DensityKind::AtomTransition { m, k, u0 } => {
                let d = a.to_hi;
                transition::prefactor(*m, *k, x) * transition::kernel_factor(*m, *k, x, *u0, d)
            }
            DensityKind::Transition { m, k, source, spec } => {
                transition::prefactor(*m, *k, x) * transition::transition_integral(*m, *k, source, x, spec)?
            }
            DensityKind::GaussAtom { m, s0 } => transition::gauss_atom(*m, *s0, x),
            DensityKind::GaussMixture { m, source, spec } => transition::gauss_mixture_integral(*m, source, x, spec)?,
            DensityKind::Phi2 { n, source, spec } => transition::phi2_integral(*n, source, x, spec)?,
            DensityKind::Function(f) => f(x),
        };
        if v.is_finite() {
            Ok(w * v)
        } else {
            Err(Error::Numerical(format!("density {:?} is not finite at {x}", self.kind)))
        }
    }
}

/// ∫ g(u) p(u) du over the part of the component support above `from`,
/// split at the breakpoints.
///
/// `g` sees distances measured from `from` (`from_lo`) and to the top of the
/// support (`to_hi`). With `half_period` set, long or infinite pieces are
/// integrated chunk by chunk.
pub(crate) fn integrate_against<G>(
    c: &DensityComponent,
    from: f64,
    g: G,
    half_period: Option<f64>,
    spec: &QuadratureSpec,
) -> Result<Integral>
where
    G: Fn(Abscissa) -> f64,
{
    let start = from.max(c.lo);
    if start >= c.hi {
        return Ok(Integral::ZERO);
    }
    let mut cuts = vec![start];
    cuts.extend(c.breakpoints().into_iter().filter(|&b| b > start));
    cuts.push(c.hi);

    let slot = ErrorSlot::new();
    let mut total = Integral::ZERO;
    for w in cuts.windows(2) {
        let (p0, p1) = (w[0], w[1]);
        let off_from = p0 - from;
        let off_lo = p0 - c.lo;
        let off_hi = if p1.is_finite() { c.hi - p1 } else { 0.0 };
        let integrand = |a: Abscissa| {
            let at = Abscissa { x: a.x, from_lo: off_lo + a.from_lo, to_hi: off_hi + a.to_hi };
            let d = slot.catch(c.eval_at(at));
            if d == 0.0 {
                return 0.0;
            }
            g(Abscissa { x: a.x, from_lo: off_from + a.from_lo, to_hi: at.to_hi }) * d
        };
        let hints = EndpointHints::REGULAR;
        let piece = match half_period {
            Some(h) if h.is_finite() && h > 0.0 && (p1 - p0) > 4.0 * h => {
                integrate_oscillatory(integrand, p0, p1, h, hints, spec)
            }
            _ => integrate(integrand, p0, p1, hints, spec),
        };
        total += slot.check(piece)?;
    }
    Ok(total)
}

/// A finite positive Borel measure on ℝ₊.
#[derive(Debug, Clone)]
pub struct RadialMeasure {
    atoms: Vec<Atom>,
    components: Vec<DensityComponent>,
    total_mass: f64,
}

impl RadialMeasure {
    /// Validates the pieces and checks the density masses by quadrature.
    pub fn new(atoms: Vec<Atom>, components: Vec<DensityComponent>, spec: &QuadratureSpec) -> Result<Self> {
        if atoms.is_empty() && components.is_empty() {
            return Err(Error::domain("a measure needs at least one atom or density component"));
        }
        for a in &atoms {
            if !(a.location >= 0.0) || !a.location.is_finite() {
                return Err(Error::domain(format!("atom location must be finite and >= 0, got {}", a.location)));
            }
            if !(a.mass > 0.0) || !a.mass.is_finite() {
                return Err(Error::domain(format!("atom mass must be positive, got {}", a.mass)));
            }
        }
        let mut total: f64 = atoms.iter().map(|a| a.mass).sum();
        for c in &components {
            let quad = integrate_against(c, c.lo, |_| 1.0, None, spec)?.value;
            let mass = match c.analytic_mass() {
                Some(m) => {
                    let tol = (1e-8 * m.max(1.0)).max(100.0 * spec.abs_tol);
                    if (quad - m).abs() > tol {
                        return Err(Error::Numerical(format!(
                            "density {:?} integrates to {quad}, expected {m}",
                            c.kind
                        )));
                    }
                    m
                }
                None => quad,
            };
            if !(mass > 0.0) {
                return Err(Error::domain(format!("density component has nonpositive mass {mass}")));
            }
            total += mass;
        }
        Ok(RadialMeasure { atoms, components, total_mass: total })
    }

    pub fn dirac(location: f64) -> Result<Self> {
        Self::discrete(&[(location, 1.0)])
    }

    pub fn discrete(atoms: &[(f64, f64)]) -> Result<Self> {
        let atoms = atoms.iter().map(|&(location, mass)| Atom { location, mass }).collect();
        Self::new(atoms, Vec::new(), &QuadratureSpec::default())
    }

    pub fn from_component(c: DensityComponent, spec: &QuadratureSpec) -> Result<Self> {
        Self::new(Vec::new(), vec![c], spec)
    }

    /// Schoenberg measure of e^{-r} in dimension m.
    pub fn exp_family(m: u32) -> Result<Self> {
        Self::from_component(DensityComponent::exp_family(m)?, &QuadratureSpec::default())
    }

    /// Schoenberg measure of e^{-r²} in dimension m.
    pub fn gauss_family(m: u32) -> Result<Self> {
        Self::from_component(DensityComponent::gauss_family(m)?, &QuadratureSpec::default())
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    pub fn components(&self) -> &[DensityComponent] {
        &self.components
    }

    pub fn total_mass(&self) -> f64 {
        self.total_mass
    }

    pub fn is_probability(&self) -> bool {
        (self.total_mass - 1.0).abs() <= 1e-8
    }

    /// Sum of the component densities at x (atoms excluded).
    pub fn density(&self, x: f64) -> Result<f64> {
        self.components.iter().map(|c| c.eval(x)).sum()
    }

    /// Smallest point of the support.
    pub fn support_min(&self) -> f64 {
        let a = self.atoms.iter().map(|a| a.location).fold(f64::INFINITY, f64::min);
        let c = self.components.iter().map(|c| c.lo).fold(f64::INFINITY, f64::min);
        a.min(c)
    }

    /// True when the measure cannot be the dimension-m image of a measure in a
    /// higher dimension: it has atoms, or its density vanishes near 0.
    pub fn blocks_promotion(&self) -> bool {
        !self.atoms.is_empty() || self.components.iter().all(|c| c.lo > 0.0)
    }

    /// ∫ x^p ν(dx).
    pub fn moment(&self, p: f64, spec: &QuadratureSpec) -> Result<f64> {
        let mut s: f64 = self.atoms.iter().map(|a| a.mass * a.location.powf(p)).sum();
        for c in &self.components {
            if c.has_finite_moment(p) == Some(false) {
                return Err(Error::Unsupported(format!("moment of order {p} diverges for {:?}", c.kind)));
            }
            s += integrate_against(c, c.lo, |a| a.x.powf(p), None, spec)?.value;
        }
        Ok(s)
    }

    pub fn has_finite_moment(&self, p: f64) -> Option<bool> {
        self.components.iter().try_fold(true, |acc, c| c.has_finite_moment(p).map(|f| acc && f))
    }
}

/// f(r) = Σ m_i Ω_n(r t_i) + ∫ Ω_n(r t) p(t) dt.
pub fn schoenberg_transform(n: u32, nu: &RadialMeasure, r: f64, spec: &QuadratureSpec) -> Result<f64> {
    check_dim("n", n, 1)?;
    if !(r >= 0.0) || !r.is_finite() {
        return Err(Error::domain(format!("transform argument must be finite and >= 0, got {r}")));
    }
    if r == 0.0 {
        return Ok(nu.total_mass);
    }
    let mut sum = 0.0;
    for a in &nu.atoms {
        sum += a.mass * omega(n, r * a.location)?;
    }
    let half_period = PI / r;
    for c in &nu.components {
        let slot = ErrorSlot::new();
        let g = |a: Abscissa| slot.catch(omega(n, r * a.x));
        sum += slot.check(integrate_against(c, c.lo, g, Some(half_period), spec))?.value;
    }
    Ok(sum)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec() -> QuadratureSpec {
        QuadratureSpec::default()
    }

    #[test]
    fn integrate_examples() {
        let s = spec();
        assert!((crate::quadrature::integrate_fn(|_| 1.0, 0.0, 1.0, &s).unwrap().value - 1.0).abs() < 1e-12);
        let f = |a: Abscissa| 1.0 / (a.to_hi * (4.0 - a.to_hi)).sqrt();
        let r = integrate(f, 0.0, 2.0, EndpointHints::new(0.0, -0.5), &s).unwrap();
        assert!((r.value - PI / 2.0).abs() < 1e-10);
        assert!(r.est_error <= s.abs_tol);
    }

    #[test]
    fn dirac_transform() {
        let d = RadialMeasure::dirac(1.0).unwrap();
        assert!(schoenberg_transform(3, &d, PI, &spec()).unwrap().abs() < 1e-15);
        assert_eq!(schoenberg_transform(5, &d, 0.0, &spec()).unwrap(), 1.0);
    }

    #[test]
    fn gauss_family_transform() {
        let g = RadialMeasure::gauss_family(2).unwrap();
        let v = schoenberg_transform(2, &g, 1.3, &spec()).unwrap();
        assert!((v - (-1.69f64).exp()).abs() < 1e-8);
    }

    #[test]
    fn exp_family_transform() {
        let e = RadialMeasure::exp_family(3).unwrap();
        let v = schoenberg_transform(3, &e, 2.0, &spec()).unwrap();
        assert!((v - (-2.0f64).exp()).abs() < 1e-8, "{v}");
        let e = RadialMeasure::exp_family(1).unwrap();
        for &r in &[0.5, 3.0, 10.0] {
            let v = schoenberg_transform(1, &e, r, &spec()).unwrap();
            assert!((v - (-r).exp()).abs() < 1e-8, "r={r}: {v}");
        }
    }

    #[test]
    fn promotion_flags() {
        let half = RadialMeasure::discrete(&[(0.0, 0.5), (2.0, 0.5)]).unwrap();
        assert!(half.blocks_promotion());
        assert!(!RadialMeasure::exp_family(2).unwrap().blocks_promotion());
        let u = RadialMeasure::from_component(DensityComponent::uniform(1.0, 2.0).unwrap(), &spec()).unwrap();
        assert!(u.blocks_promotion());
    }

    #[test]
    fn mass_self_check_catches_bad_weight() {
        let f: DensityFn = Arc::new(|x| 2.0 * x);
        let c = DensityComponent::function(f, 0.0, 1.0, 1.0, 0.0).unwrap();
        let m = RadialMeasure::from_component(c, &spec()).unwrap();
        assert!((m.total_mass() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn moments() {
        let g = RadialMeasure::gauss_family(3).unwrap();
        // s_2 of the e^{-r²} measure in dimension n equals 2n
        assert!((g.moment(2.0, &spec()).unwrap() - 6.0).abs() < 1e-8);
        assert!(matches!(RadialMeasure::exp_family(3).unwrap().moment(2.0, &spec()), Err(Error::Unsupported(_))));
    }

    #[test]
    fn invalid_inputs() {
        assert!(RadialMeasure::discrete(&[(-1.0, 1.0)]).is_err());
        assert!(RadialMeasure::discrete(&[(1.0, 0.0)]).is_err());
        assert!(RadialMeasure::new(Vec::new(), Vec::new(), &spec()).is_err());
        assert!(DensityComponent::uniform(2.0, 1.0).is_err());
    }
}
