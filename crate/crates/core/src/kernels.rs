//! Composable radial kernels, their Taylor fronts and the Taylor
//! non-membership criterion.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::measures::{schoenberg_transform, RadialMeasure};
use crate::quadrature::QuadratureSpec;
use crate::specfun::omega;

#[derive(Debug, Clone)]
pub enum RadialKernel {
    Omega(u32),
    /// e^{-r}
    ExpDecay,
    /// e^{-r²}
    GaussDecay,
    /// cos(s r)
    Cosine(f64),
    /// inner(a r)
    Scaled(Box<RadialKernel>, f64),
    Product(Box<RadialKernel>, Box<RadialKernel>),
    Power(Box<RadialKernel>, u32),
    /// ∫ Ω_n(r t) ν(dt) for a probability measure ν.
    Mixture {
        n: u32,
        measure: Arc<RadialMeasure>,
    },
}

impl RadialKernel {
    pub fn omega(n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::domain("Omega kernel needs n >= 1"));
        }
        Ok(RadialKernel::Omega(n))
    }

    pub fn cosine(s: f64) -> Result<Self> {
        if !(s > 0.0) || !s.is_finite() {
            return Err(Error::domain(format!("cosine frequency must be positive, got {s}")));
        }
        Ok(RadialKernel::Cosine(s))
    }

    pub fn scaled(inner: RadialKernel, a: f64) -> Result<Self> {
        if !(a > 0.0) || !a.is_finite() {
            return Err(Error::domain(format!("scale must be positive, got {a}")));
        }
        Ok(RadialKernel::Scaled(Box::new(inner), a))
    }

    pub fn product(left: RadialKernel, right: RadialKernel) -> Self {
        RadialKernel::Product(Box::new(left), Box::new(right))
    }

    pub fn power(inner: RadialKernel, p: u32) -> Result<Self> {
        if p == 0 {
            return Err(Error::domain("kernel power must be >= 1"));
        }
        Ok(RadialKernel::Power(Box::new(inner), p))
    }

    pub fn mixture(n: u32, measure: RadialMeasure) -> Result<Self> {
        if n == 0 {
            return Err(Error::domain("mixture dimension must be >= 1"));
        }
        if !measure.is_probability() {
            return Err(Error::domain(format!("mixture measure must have total mass 1, got {}", measure.total_mass())));
        }
        Ok(RadialKernel::Mixture { n, measure: Arc::new(measure) })
    }

    pub fn eval(&self, r: f64) -> Result<f64> {
        self.eval_with(r, &QuadratureSpec::default())
    }

    /// Value at r; `spec` sets the quadrature for mixture kernels.
    pub fn eval_with(&self, r: f64, spec: &QuadratureSpec) -> Result<f64> {
        if !r.is_finite() {
            return Err(Error::domain(format!("kernel argument must be finite, got {r}")));
        }
        let r = r.abs();
        Ok(match self {
            RadialKernel::Omega(n) => omega(*n, r)?,
            RadialKernel::ExpDecay => (-r).exp(),
            RadialKernel::GaussDecay => (-r * r).exp(),
            RadialKernel::Cosine(s) => (s * r).cos(),
            RadialKernel::Scaled(inner, a) => inner.eval_with(a * r, spec)?,
            RadialKernel::Product(f, g) => f.eval_with(r, spec)? * g.eval_with(r, spec)?,
            RadialKernel::Power(f, p) => f.eval_with(r, spec)?.powi(*p as i32),
            RadialKernel::Mixture { n, measure } => schoenberg_transform(*n, measure, r, spec)?,
        })
    }

    /// Whether |f| ≤ 1 holds by construction.
    pub fn is_bounded_by_one(&self) -> bool {
        match self {
            RadialKernel::Scaled(f, _) | RadialKernel::Power(f, _) => f.is_bounded_by_one(),
            RadialKernel::Product(f, g) => f.is_bounded_by_one() && g.is_bounded_by_one(),
            _ => true,
        }
    }
}

impl fmt::Display for RadialKernel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RadialKernel::Omega(n) => write!(f, "omega:{n}"),
            RadialKernel::ExpDecay => write!(f, "exp"),
            RadialKernel::GaussDecay => write!(f, "gauss"),
            RadialKernel::Cosine(s) => write!(f, "cos:{s}"),
            RadialKernel::Scaled(k, a) => write!(f, "scale:{a}({k})"),
            RadialKernel::Product(a, b) => write!(f, "prod({a},{b})"),
            RadialKernel::Power(k, p) => write!(f, "pow:{p}({k})"),
            RadialKernel::Mixture { n, .. } => write!(f, "mix:{n}@<measure>"),
        }
    }
}

/// Coefficients of f(z) = 1 - a₁z² + a₂z⁴ - …, held exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TaylorFront {
    pub a1: BigRational,
    pub a2: BigRational,
}

impl TaylorFront {
    pub fn a1_f64(&self) -> f64 {
        self.a1.to_f64().unwrap_or(f64::NAN)
    }

    pub fn a2_f64(&self) -> f64 {
        self.a2.to_f64().unwrap_or(f64::NAN)
    }
}

fn ratio(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

fn exact(x: f64) -> Result<BigRational> {
    BigRational::from_float(x).ok_or_else(|| Error::domain(format!("non-finite parameter {x}")))
}

fn product_front(f: &TaylorFront, g: &TaylorFront) -> TaylorFront {
    TaylorFront { a1: &f.a1 + &g.a1, a2: &f.a2 + &g.a2 + &f.a1 * &g.a1 }
}

/// Exact Taylor front of a kernel. Parameters given as floats enter through
/// their exact binary values.
pub fn taylor_coeffs(k: &RadialKernel) -> Result<TaylorFront> {
    taylor_coeffs_with(k, &QuadratureSpec::default())
}

pub fn taylor_coeffs_with(k: &RadialKernel, spec: &QuadratureSpec) -> Result<TaylorFront> {
    Ok(match k {
        RadialKernel::Omega(n) => {
            let n = *n as i64;
            TaylorFront { a1: ratio(1, 2 * n), a2: ratio(1, 8 * n * (n + 2)) }
        }
        RadialKernel::GaussDecay => TaylorFront { a1: BigRational::one(), a2: ratio(1, 2) },
        RadialKernel::ExpDecay => {
            return Err(Error::Unsupported("e^{-r} has a linear term at the origin".into()));
        }
        RadialKernel::Cosine(s) => {
            let s2 = exact(*s)? * exact(*s)?;
            TaylorFront {
                a1: &s2 / BigRational::from_integer(2.into()),
                a2: &s2 * &s2 / BigRational::from_integer(24.into()),
            }
        }
        RadialKernel::Scaled(inner, a) => {
            let t = taylor_coeffs_with(inner, spec)?;
            let a2 = exact(*a)? * exact(*a)?;
            TaylorFront { a1: &t.a1 * &a2, a2: &t.a2 * &a2 * &a2 }
        }
        RadialKernel::Product(f, g) => product_front(&taylor_coeffs_with(f, spec)?, &taylor_coeffs_with(g, spec)?),
        RadialKernel::Power(f, p) => {
            let base = taylor_coeffs_with(f, spec)?;
            let mut acc = base.clone();
            for _ in 1..*p {
                acc = product_front(&acc, &base);
            }
            acc
        }
        RadialKernel::Mixture { n, measure } => {
            if measure.has_finite_moment(4.0) == Some(false) {
                return Err(Error::Unsupported("mixture measure has an infinite 4th moment".into()));
            }
            let s2 = measure.moment(2.0, spec)?;
            let s4 = measure.moment(4.0, spec)?;
            if !s4.is_finite() {
                return Err(Error::Unsupported("mixture measure has an infinite 4th moment".into()));
            }
            let n = *n as i64;
            TaylorFront { a1: exact(s2)? * ratio(1, 2 * n), a2: exact(s4)? * ratio(1, 8 * n * (n + 2)) }
        }
    })
}

/// Smallest m with (2m+6) a₂ < (m+1) a₁², so that f lies outside Φ_{m+1};
/// `None` when a₂/a₁² ≥ 1/2 and the criterion never fires. Equality is a tie
/// and does not count.
pub fn taylor_nonmembership(k: &RadialKernel) -> Result<Option<u64>> {
    let t = taylor_coeffs(k)?;
    nonmembership_from_front(&t)
}

pub fn nonmembership_from_front(t: &TaylorFront) -> Result<Option<u64>> {
    if !t.a1.is_positive() || !t.a2.is_positive() {
        return Err(Error::Unsupported("Taylor front must alternate with a1, a2 > 0".into()));
    }
    let a1sq = &t.a1 * &t.a1;
    let two = BigRational::from_integer(2.into());
    let six = BigRational::from_integer(6.into());
    // m (a1² - 2 a2) > 6 a2 - a1²
    let d = &a1sq - &two * &t.a2;
    if !d.is_positive() {
        return Ok(None);
    }
    let bound = (&six * &t.a2 - &a1sq) / d;
    let m = if bound.is_negative() { BigInt::zero() } else { bound.floor().to_integer() + 1 };
    let m = m.max(BigInt::one());
    Ok(m.to_u64())
}
