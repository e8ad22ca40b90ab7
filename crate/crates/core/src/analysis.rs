//! Certification procedures built on the kernels, matrices and measures:
//! moment obstructions, polygon spectra, even-order Bessel sign counts,
//! the oscillatory h(r), and the growth of negative squares on shifted
//! unions.

use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::error::{Error, Result};
use crate::geometry::{polygon_chord, shifted_union, simplex_with_center, ConfigLabel, PointConfig};
use crate::kernels::RadialKernel;
use crate::matrices::{
    circulant_eigs, default_tol, kappa_minus, schoenberg_matrix, simplex_lambda, sym_eigenvalues, SimplexLambda,
};
use crate::measures::{integrate_against, RadialMeasure};
use crate::quadrature::{periodic_trapezoid, ErrorSlot, Integral, QuadratureSpec};
use crate::specfun::bessel_j_even_sequence;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CertificateReport {
    pub claim: String,
    pub witness: serde_json::Value,
    pub margin: f64,
    pub tolerance: f64,
    pub passed: bool,
}

impl CertificateReport {
    /// `passed` is set only when the margin clears ten times the tolerance.
    pub fn new(claim: impl Into<String>, witness: serde_json::Value, margin: f64, tolerance: f64) -> Self {
        let passed = margin.is_finite() && margin >= 10.0 * tolerance;
        CertificateReport { claim: claim.into(), witness, margin, tolerance, passed }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Unicode subscript digits, for claims such as Ω₃ ∉ Φ₄.
pub fn subscript(n: u32) -> String {
    n.to_string().chars().map(|c| char::from_u32('₀' as u32 + c.to_digit(10).unwrap()).unwrap()).collect()
}

fn not_in_next(n: u32) -> String {
    format!("Ω{} ∉ Φ{}", subscript(n), subscript(n + 1))
}

fn check_n(n: u32) -> Result<()> {
    if n == 0 {
        return Err(Error::domain("n must be >= 1"));
    }
    Ok(())
}

/// Even moments s_0, s_2, …, s_{2K} that the measure of Ω_n in dimension
/// n+1 would need: s_{2k} = Π_{j≤k} (n+2j-1)/(n+2j-2).
pub fn omega_moments(n: u32, k: usize) -> Result<Vec<f64>> {
    check_n(n)?;
    if k == 0 {
        return Err(Error::domain("moment count K must be >= 1"));
    }
    let nf = n as f64;
    let mut out = Vec::with_capacity(k + 1);
    let mut s = 1.0;
    out.push(s);
    for j in 1..=k {
        let jf = j as f64;
        s *= (nf + 2.0 * jf - 1.0) / (nf + 2.0 * jf - 2.0);
        out.push(s);
    }
    Ok(out)
}

/// det [[s₀, s₂], [s₂, s₄]]; negative, so no measure has these moments.
pub fn moment_determinant(n: u32) -> Result<f64> {
    let s = omega_moments(n, 2)?;
    Ok(s[0] * s[2] - s[1] * s[1])
}

/// -2(n+1) / (n²(n+2)).
pub fn moment_determinant_closed(n: u32) -> f64 {
    let nf = n as f64;
    -2.0 * (nf + 1.0) / (nf * nf * (nf + 2.0))
}

pub fn moment_report(n: u32) -> Result<CertificateReport> {
    let det = moment_determinant(n)?;
    Ok(CertificateReport::new(
        not_in_next(n),
        json!({ "kernel": format!("omega:{n}"), "determinant": det, "closed_form": moment_determinant_closed(n) }),
        -det,
        1e-13,
    ))
}

/// (1/2π) ∫₀^{2π} g(2r sin(t/2)) cos(idx·t) dt by the periodic trapezoid rule.
pub fn fourier_coefficient(k: &RadialKernel, idx: u32, r: f64, spec: &QuadratureSpec) -> Result<Integral> {
    if idx == 0 {
        return Err(Error::domain("Fourier index must be >= 1"));
    }
    if !(r > 0.0) || !r.is_finite() {
        return Err(Error::domain(format!("polygon radius must be positive, got {r}")));
    }
    let slot = ErrorSlot::new();
    let f = |t: f64| slot.catch(k.eval_with(2.0 * r * (0.5 * t).sin(), spec)) * (idx as f64 * t).cos();
    let i = slot.check(periodic_trapezoid(f, 0.0, 2.0 * PI, spec))?;
    Ok(Integral { value: i.value / (2.0 * PI), est_error: i.est_error / (2.0 * PI) })
}

/// λ_{k,m}(r) = Σ_j g(2r sin(πj/m)) cos(2πkj/m), k = 0..m-1.
pub fn polygon_eigenvalues(k: &RadialKernel, m: usize, r: f64) -> Result<Vec<f64>> {
    if m < 3 {
        return Err(Error::domain(format!("polygon needs m >= 3, got {m}")));
    }
    if !(r > 0.0) || !r.is_finite() {
        return Err(Error::domain(format!("polygon radius must be positive, got {r}")));
    }
    let row = (0..m)
        .map(|j| if j == 0 { k.eval(0.0) } else { k.eval(polygon_chord(m, r, j.min(m - j))) })
        .collect::<Result<Vec<f64>>>()?;
    circulant_eigs(&row)
}

/// Eigenvalues of the polygon Schoenberg matrix below -tol; `None` uses
/// 1e-9 max(1, Σ|a_j|).
pub fn polygon_negative_count(k: &RadialKernel, m: usize, r: f64, tol: Option<f64>) -> Result<usize> {
    let eigs = polygon_eigenvalues(k, m, r)?;
    let tol = match tol {
        Some(t) => t,
        None => {
            let norm: f64 = (0..m)
                .map(|j| k.eval(polygon_chord(m, r, j.min(m - j))))
                .collect::<Result<Vec<_>>>()?
                .iter()
                .map(|v| v.abs())
                .sum();
            1e-9 * norm.max(1.0)
        }
    };
    Ok(eigs.iter().filter(|&&l| l < -tol).count())
}

/// Number of negative values among J_{2p}(x), p = 1..K. An x within 1e-12 of
/// a zero of one of them is nudged up by 1e-6.
pub fn even_bessel_negative_count(x: f64, k: usize) -> Result<usize> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::domain(format!("x must be positive, got {x}")));
    }
    if k == 0 {
        return Err(Error::domain("K must be >= 1"));
    }
    let mut x = x;
    for _ in 0..8 {
        let seq = bessel_j_even_sequence(x, k)?;
        if seq[1..].iter().any(|v| v.abs() < 1e-12) {
            x += 1e-6;
            continue;
        }
        return Ok(seq[1..].iter().filter(|&&v| v < 0.0).count());
    }
    Err(Error::Numerical(format!("could not move x = {x} off the zeros of J_2p")))
}

/// h(r) = (1/(2π^{3/2})) ∫ cos(2rs - π/4) s^{-1/2} ν(ds) for ν away from 0.
pub fn h_oscillatory(nu: &RadialMeasure, r: f64, spec: &QuadratureSpec) -> Result<f64> {
    if !(r > 0.0) || !r.is_finite() {
        return Err(Error::domain(format!("r must be positive, got {r}")));
    }
    if !(nu.support_min() > 0.0) {
        return Err(Error::domain("measure support must stay away from 0"));
    }
    let c = 1.0 / (2.0 * PI.powf(1.5));
    let kernel = |s: f64| (2.0 * r * s - 0.25 * PI).cos() / s.sqrt();
    let mut sum: f64 = nu.atoms().iter().map(|a| a.mass * kernel(a.location)).sum();
    for comp in nu.components() {
        sum += integrate_against(comp, comp.support().0, |a| kernel(a.x), Some(0.5 * PI / r), spec)?.value;
    }
    Ok(c * sum)
}

/// Largest |h| on a grid: a lower bound for its limsup, never the limsup.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HScan {
    pub r_at_max: f64,
    pub max_abs: f64,
}

pub fn h_scan(nu: &RadialMeasure, grid: &[f64], spec: &QuadratureSpec) -> Result<HScan> {
    let mut best = HScan { r_at_max: f64::NAN, max_abs: 0.0 };
    for &r in grid {
        let h = h_oscillatory(nu, r, spec)?.abs();
        if h > best.max_abs || best.r_at_max.is_nan() {
            best = HScan { r_at_max: r, max_abs: h };
        }
    }
    Ok(best)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SimplexWitness {
    pub m: usize,
    pub t: f64,
    pub lambda: SimplexLambda,
    pub threshold: f64,
}

/// Halve t from 1/2 until λ < -10·tol·(m+3).
pub fn simplex_scan(m: usize, k: &RadialKernel, tol: f64) -> Result<SimplexWitness> {
    if !(tol > 0.0) {
        return Err(Error::domain(format!("tolerance must be positive, got {tol}")));
    }
    let threshold = -10.0 * tol * (m as f64 + 3.0);
    let mut t = 0.5;
    let mut best: Option<SimplexLambda> = None;
    for _ in 0..40 {
        let l = simplex_lambda(m, k, t)?;
        if l.lambda < threshold {
            return Ok(SimplexWitness { m, t, lambda: l, threshold });
        }
        if best.is_none_or(|b| l.lambda < b.lambda) {
            best = Some(l);
        }
        t *= 0.5;
    }
    Err(Error::SearchFailure {
        reason: format!(
            "no t in 2^-1..2^-40 gives lambda below {threshold:e} (best {:e})",
            best.map_or(f64::NAN, |b| b.lambda)
        ),
        best_count: 0,
    })
}

/// Best (m+2)-point set in ℝ^{m+1} found by random search: the smallest
/// eigenvalue reached, with its configuration. No claim is attached.
#[derive(Debug, Clone)]
pub struct RandomSearch {
    pub min_eigenvalue: f64,
    pub config: PointConfig,
    pub trials: usize,
}

pub fn random_small_witness(m: usize, k: &RadialKernel, trials: usize, seed: u64, side: f64) -> Result<RandomSearch> {
    if m == 0 || trials == 0 {
        return Err(Error::domain("random search needs m >= 1 and trials >= 1"));
    }
    if !(side > 0.0) || !side.is_finite() {
        return Err(Error::domain(format!("box side must be positive, got {side}")));
    }
    let dim = m + 1;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best: Option<(f64, PointConfig)> = None;
    for _ in 0..trials {
        let pts: Vec<Vec<f64>> = (0..m + 2).map(|_| (0..dim).map(|_| rng.random_range(0.0..side)).collect()).collect();
        let Ok(cfg) = PointConfig::new(dim, pts, ConfigLabel::Explicit) else { continue };
        let low = sym_eigenvalues(&schoenberg_matrix(k, &cfg)?)?[0];
        if best.as_ref().is_none_or(|(b, _)| low < *b) {
            best = Some((low, cfg));
        }
    }
    let (min_eigenvalue, config) =
        best.ok_or_else(|| Error::Degenerate("every sampled set had repeated points".into()))?;
    Ok(RandomSearch { min_eigenvalue, config, trials })
}

/// Sampled behaviour of g on the octaves [2^j, 2^{j+1}], j = 6..13.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LimitCheck {
    /// Half of max - min on each octave.
    pub amplitudes: Vec<f64>,
    /// Centre of the last octave's range.
    pub limit: f64,
    pub accepted: bool,
}

const LIMIT_OCTAVES: std::ops::Range<i32> = 6..14;
const LIMIT_SAMPLES: usize = 257;

/// Accepts a limit when the last amplitude is below 1e-3, or when it is below
/// 1e-2 and the amplitudes shrink by a factor 0.9 or better per octave.
pub fn kernel_limit(k: &RadialKernel) -> Result<LimitCheck> {
    let mut amplitudes = Vec::new();
    let mut limit = f64::NAN;
    for j in LIMIT_OCTAVES {
        let lo = 2f64.powi(j);
        let mut mn = f64::INFINITY;
        let mut mx = f64::NEG_INFINITY;
        for i in 0..LIMIT_SAMPLES {
            // irrational stride so the samples do not lock onto a period
            let frac = (i as f64 * 0.618_033_988_749_894_9).fract();
            let v = k.eval(lo * (1.0 + frac))?;
            mn = mn.min(v);
            mx = mx.max(v);
        }
        amplitudes.push(0.5 * (mx - mn));
        limit = 0.5 * (mx + mn);
    }
    let last = *amplitudes.last().unwrap();
    let decaying = amplitudes.windows(2).all(|w| w[1] <= 0.9 * w[0] || w[1] < 1e-12);
    let accepted = last < 1e-3 || (decaying && last < 1e-2);
    Ok(LimitCheck { amplitudes, limit, accepted })
}

/// Shifts the base along axis 0 by multiples of a gap that doubles from
/// 10·diameter until at least `target` eigenvalues (N-1 when g(∞) > 0) lie
/// below -10·tol, or the gap passes 2^20·diameter.
pub fn negative_squares_growth(
    k: &RadialKernel,
    base: &PointConfig,
    target: usize,
    tol: Option<f64>,
) -> Result<CertificateReport> {
    if target == 0 {
        return Err(Error::domain("target count N must be >= 1"));
    }
    let base_matrix = schoenberg_matrix(k, base)?;
    let base_tol = tol.unwrap_or_else(|| default_tol(&base_matrix));
    let base_neg = kappa_minus(k, base, Some(base_tol))?;
    if base_neg == 0 {
        return Err(Error::domain(format!("kernel {k} has no negative eigenvalue on the base configuration")));
    }
    let lim = kernel_limit(k)?;
    if !lim.accepted {
        return Err(Error::Unsupported(format!(
            "no limit g(inf) detected for {k} (last amplitude {:e}); use the polygon construction",
            lim.amplitudes.last().unwrap()
        )));
    }
    let positive_limit = lim.limit > 10.0 * lim.amplitudes.last().unwrap().max(1e-12);
    let required = if positive_limit { target.saturating_sub(1).max(1) } else { target };
    let claim = format!("kappa^-({k}) >= {required} on {target} shifted copies");

    let diameter = base.diameter();
    let cap = 2f64.powi(20) * diameter;
    let mut gap = 10.0 * diameter;
    let mut best = 0usize;
    let mut spacings = vec![0.0];
    loop {
        if target > 1 {
            spacings = (0..target).map(|j| j as f64 * gap).collect();
        }
        let cfg = shifted_union(base, &spacings, 0)?;
        let a = schoenberg_matrix(k, &cfg)?;
        let tol = tol.unwrap_or_else(|| default_tol(&a));
        let eigs = sym_eigenvalues(&a)?;
        let count = eigs.iter().filter(|&&l| l < -10.0 * tol).count();
        best = best.max(count);
        if count >= required {
            let margin = -eigs[required - 1];
            let witness = json!({
                "kernel": k.to_string(),
                "base": base.label().to_string(),
                "copies": target,
                "spacings": spacings,
                "gap": if target > 1 { gap } else { 0.0 },
                "achieved": count,
                "required": required,
                "limit": lim.limit,
            });
            return Ok(CertificateReport::new(claim, witness, margin, tol));
        }
        if target == 1 {
            break;
        }
        gap *= 2.0;
        if gap > cap {
            break;
        }
    }
    Err(Error::SearchFailure { reason: format!("gap cap 2^20 x diameter reached for {claim}"), best_count: best })
}

/// The simplex witness for Ω_n in ℝ^{n+1}, certified through the dense
/// eigensolver.
pub fn simplex_report(n: u32, tol: f64) -> Result<CertificateReport> {
    check_n(n)?;
    let m = n as usize;
    let k = RadialKernel::Omega(n);
    let w = simplex_scan(m, &k, tol)?;
    let eigs = sym_eigenvalues(&schoenberg_matrix(&k, &simplex_with_center(m, w.t)?)?)?;
    let n_neg = eigs.iter().filter(|&&l| l < -tol).count();
    let witness = json!({
        "kernel": k.to_string(),
        "config": format!("simplex-center:{m}@{}", w.t),
        "t": w.t,
        "lambda": w.lambda.lambda,
        "min_eigenvalue": eigs[0],
        "n_neg": n_neg,
    });
    Ok(CertificateReport::new(not_in_next(n), witness, -eigs[0], tol))
}
