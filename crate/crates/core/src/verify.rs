//! The acceptance suite: fourteen numbered criteria, each a self-contained
//! check with its own tolerance. Criteria run in parallel; results come back
//! in numeric order.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::analysis::{
    even_bessel_negative_count, fourier_coefficient, moment_determinant, moment_determinant_closed,
    negative_squares_growth, polygon_eigenvalues, polygon_negative_count, simplex_scan,
};
use crate::error::Result;
use crate::geometry::{random_config, regular_polygon, simplex_with_center};
use crate::kernels::{taylor_nonmembership, RadialKernel};
use crate::matrices::{kappa_minus, schoenberg_matrix, sym_eigenvalues, SymmetricMatrix};
use crate::measures::{
    classical_family_density, omega_sq_measure, omega_sq_step_back_density, product_kernel_support,
    schoenberg_transform, transition_density, DensityComponent, Family, RadialMeasure,
};
use crate::quadrature::QuadratureSpec;
use crate::specfun::{bessel_j, omega, sonine_integral};

/// Outcome of one comparison: an error bound (`observed ≤ limit`) or a count
/// requirement (`observed ≥ limit`).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub observed: f64,
    pub limit: f64,
    pub at_least: bool,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    pub fn at_most(observed: f64, limit: f64, detail: impl Into<String>) -> Self {
        Check { observed, limit, at_least: false, passed: observed <= limit, detail: detail.into() }
    }

    pub fn at_least(observed: f64, limit: f64, detail: impl Into<String>) -> Self {
        Check { observed, limit, at_least: true, passed: observed >= limit, detail: detail.into() }
    }

    /// Signed distance to the limit; negative means failure.
    pub fn margin(&self) -> f64 {
        if self.at_least {
            self.observed - self.limit
        } else {
            self.limit - self.observed
        }
    }

    fn relative_slack(&self) -> f64 {
        let m = self.margin();
        if self.limit == 0.0 {
            m
        } else {
            m / self.limit.abs()
        }
    }

    /// Conjunction; the reported numbers are those of the tightest part.
    pub fn all(parts: Vec<Check>) -> Self {
        let passed = parts.iter().all(|c| c.passed);
        let detail = parts.iter().map(|c| c.detail.as_str()).filter(|d| !d.is_empty()).collect::<Vec<_>>().join("; ");
        let worst = parts
            .into_iter()
            .min_by(|a, b| a.relative_slack().partial_cmp(&b.relative_slack()).unwrap_or(std::cmp::Ordering::Less))
            .expect("at least one part");
        Check { passed, detail, ..worst }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Outcome {
    pub id: u8,
    pub title: &'static str,
    pub passed: bool,
    pub observed: f64,
    pub limit: f64,
    pub margin: f64,
    pub detail: String,
}

impl Outcome {
    fn from_result(c: &Criterion, r: Result<Check>) -> Self {
        match r {
            Ok(ch) => Outcome {
                id: c.id,
                title: c.title,
                passed: ch.passed,
                observed: ch.observed,
                limit: ch.limit,
                margin: ch.margin(),
                detail: ch.detail,
            },
            Err(e) => Outcome {
                id: c.id,
                title: c.title,
                passed: false,
                observed: f64::NAN,
                limit: f64::NAN,
                margin: f64::NAN,
                detail: format!("error: {e}"),
            },
        }
    }

    /// One table row: status, number, title, observed vs limit, detail.
    pub fn line(&self) -> String {
        let status = if self.passed { "PASS" } else { "FAIL" };
        format!(
            "{status} {:>2} {:<34} observed={:<11.4e} limit={:<9.3e} {}",
            self.id, self.title, self.observed, self.limit, self.detail
        )
    }
}

pub struct Criterion {
    pub id: u8,
    pub title: &'static str,
    pub tags: &'static [&'static str],
    pub run: fn() -> Result<Check>,
}

impl Criterion {
    /// A filter matches the criterion number or any tag.
    pub fn matches(&self, filter: &str) -> bool {
        filter.split(',').map(str::trim).any(|f| f == self.id.to_string() || self.tags.contains(&f))
    }
}

pub fn criteria() -> Vec<Criterion> {
    vec![
        Criterion { id: 1, title: "kernel identities", tags: &["specfun", "kernels"], run: c01_kernel_identities },
        Criterion { id: 2, title: "moment obstruction", tags: &["analysis", "moments"], run: c02_moments },
        Criterion { id: 3, title: "simplex witness", tags: &["matrices", "geometry", "simplex"], run: c03_simplex },
        Criterion { id: 4, title: "Taylor criterion", tags: &["kernels", "taylor"], run: c04_taylor },
        Criterion { id: 5, title: "transition formula", tags: &["measures", "transition"], run: c05_transition },
        Criterion { id: 6, title: "Sonine identity", tags: &["specfun", "sonine"], run: c06_sonine },
        Criterion { id: 7, title: "square-kernel representation", tags: &["measures", "square"], run: c07_square },
        Criterion { id: 8, title: "step-back density", tags: &["measures", "square"], run: c08_step_back },
        Criterion { id: 9, title: "circulant spectra", tags: &["matrices", "polygon"], run: c09_circulant },
        Criterion { id: 10, title: "Fourier-Bessel identity", tags: &["analysis", "fourier"], run: c10_fourier },
        Criterion { id: 11, title: "even-Bessel negative counts", tags: &["analysis", "polygon"], run: c11_counts },
        Criterion { id: 12, title: "negative-squares growth", tags: &["analysis", "growth"], run: c12_growth },
        Criterion { id: 13, title: "product kernels", tags: &["analysis", "product"], run: c13_products },
        Criterion { id: 14, title: "eigensolver identities", tags: &["matrices", "eigen"], run: c14_eigen },
    ]
}

/// Runs the selected criteria concurrently; the outcomes keep numeric order.
pub fn run_suite(filter: Option<&str>) -> Vec<Outcome> {
    let selected: Vec<Criterion> = criteria().into_iter().filter(|c| filter.is_none_or(|f| c.matches(f))).collect();
    selected.par_iter().map(|c| Outcome::from_result(c, (c.run)())).collect()
}

pub fn summary_line(outcomes: &[Outcome]) -> String {
    let passed = outcomes.iter().filter(|o| o.passed).count();
    format!("{passed}/{} criteria passed", outcomes.len())
}

fn spec(tol: f64) -> QuadratureSpec {
    QuadratureSpec::default().with_abs_tol(tol).expect("valid tolerance")
}

fn c01_kernel_identities() -> Result<Check> {
    let mut worst = [0.0f64; 3];
    for j in 0..=500 {
        let s = 0.1 * j as f64;
        let sinc = if s == 0.0 { 1.0 } else { s.sin() / s };
        worst[0] = worst[0].max((omega(1, s)? - s.cos()).abs());
        worst[1] = worst[1].max((omega(2, s)? - bessel_j(0.0, s)?).abs());
        worst[2] = worst[2].max((omega(3, s)? - sinc).abs());
    }
    Ok(Check::all(vec![
        Check::at_most(worst[0], 1e-12, format!("cos {:.1e}", worst[0])),
        Check::at_most(worst[1], 1e-12, format!("J0 {:.1e}", worst[1])),
        Check::at_most(worst[2], 1e-12, format!("sinc {:.1e}", worst[2])),
    ]))
}

fn c02_moments() -> Result<Check> {
    let mut err = 0.0f64;
    let mut largest = f64::NEG_INFINITY;
    for n in 1..=50 {
        let d = moment_determinant(n)?;
        err = err.max((d - moment_determinant_closed(n)).abs());
        largest = largest.max(d);
    }
    Ok(Check::all(vec![
        Check::at_most(err, 1e-13, format!("closed form -2(n+1)/(n^2(n+2)) within {err:.1e}")),
        Check::at_most(largest, 0.0, format!("largest determinant {largest:.3e}")),
    ]))
}

fn c03_simplex() -> Result<Check> {
    let tol = 1e-9;
    let mut parts = Vec::new();
    let mut ts = Vec::new();
    for n in 1..=8u32 {
        let m = n as usize;
        let k = RadialKernel::Omega(n);
        let w = simplex_scan(m, &k, tol)?;
        let eigs = sym_eigenvalues(&schoenberg_matrix(&k, &simplex_with_center(m, w.t)?)?)?;
        let n_neg = eigs.iter().filter(|&&l| l < -tol).count();
        parts.push(Check::at_least(n_neg as f64, 1.0, ""));
        parts.push(Check::at_least(-eigs[0], 10.0 * tol, ""));
        parts.push(Check::at_most(w.t, 0.5, ""));
        let random = kappa_minus(&k, &random_config(m, 40, 1000 + n as u64, 10.0)?, None)?;
        parts.push(Check::at_most(
            random as f64,
            0.0,
            if random > 0 { format!("n={n}: random set has {random} negative") } else { String::new() },
        ));
        ts.push(format!("{}", w.t));
    }
    let mut c = Check::all(parts);
    c.detail = format!(
        "t* = [{}]{}",
        ts.join(", "),
        if c.detail.is_empty() { String::new() } else { format!("; {}", c.detail) }
    );
    Ok(c)
}

fn c04_taylor() -> Result<Check> {
    let mut mismatches = Vec::new();
    for n in 1..=10u32 {
        let o = RadialKernel::Omega(n);
        let expect = [
            (o.clone(), n as u64),
            (RadialKernel::power(o.clone(), 2)?, 2 * n as u64 + 2),
            (RadialKernel::power(o, 3)?, 3 * n as u64 + 4),
        ];
        for (k, want) in expect {
            let got = taylor_nonmembership(&k)?;
            if got != Some(want) {
                mismatches.push(format!("{k}: {got:?} != {want}"));
            }
        }
    }
    let detail = if mismatches.is_empty() { "30 exact matches".to_string() } else { mismatches.join(", ") };
    Ok(Check::at_most(mismatches.len() as f64, 0.0, detail))
}

fn c05_transition() -> Result<Check> {
    let spec = QuadratureSpec::default();
    let mut worst = 0.0f64;
    for family in [Family::ExpDecay, Family::GaussDecay] {
        for m in 1..=3u32 {
            for k in 1..=4u32 {
                let nu = match family {
                    Family::ExpDecay => RadialMeasure::exp_family(m + k)?,
                    Family::GaussDecay => RadialMeasure::gauss_family(m + k)?,
                };
                for &x in &[0.3, 1.0, 4.0] {
                    let got = transition_density(m, k, &nu, x, &spec)?;
                    worst = worst.max((got - classical_family_density(family, m, x)?).abs());
                }
            }
        }
    }
    Ok(Check::at_most(worst, 1e-7, "24 (family, m, k) triples at x in {0.3, 1, 4}"))
}

fn c06_sonine() -> Result<Check> {
    let spec = spec(1e-12);
    let mut worst = 0.0f64;
    for m in 1..=3u32 {
        for k in 1..=3u32 {
            for &t in &[0.5, 2.0, 7.0] {
                worst = worst.max((omega(m + k, t)? - sonine_integral(m, k, t, &spec)?.value).abs());
            }
        }
    }
    Ok(Check::at_most(worst, 1e-9, ""))
}

fn c07_square() -> Result<Check> {
    let spec = spec(1e-12);
    let mut worst = 0.0f64;
    for n in 2..=5u32 {
        let nu = omega_sq_measure(n)?;
        for &t in &[0.5, 1.0, 2.0, 5.0] {
            let lhs = omega(n, t)?.powi(2);
            worst = worst.max((lhs - schoenberg_transform(2 * n - 2, &nu, t, &spec)?).abs());
        }
    }
    // n = 3: the dimension-3 density is x/2 and its transform is sin²t/t²
    let tight = spec_tight();
    let step = RadialMeasure::from_component(DensityComponent::step_back(3)?, &tight)?;
    let mut chain = 0.0f64;
    for &x in &[0.1, 0.5, 1.0, 1.5, 1.9] {
        chain = chain.max((omega_sq_step_back_density(3, x)? - 0.5 * x).abs());
    }
    for t in [0.5f64, 1.0, 2.0, 5.0] {
        let sq = (t.sin() / t).powi(2);
        chain = chain.max(((1.0 - (2.0 * t).cos()) / (2.0 * t * t) - sq).abs());
        chain = chain.max((schoenberg_transform(3, &step, t, &tight)? - sq).abs());
    }
    Ok(Check::all(vec![
        Check::at_most(worst, 1e-8, format!("representation {worst:.1e}")),
        Check::at_most(chain, 1e-12, format!("n=3 chain {chain:.1e}")),
    ]))
}

fn spec_tight() -> QuadratureSpec {
    spec(crate::quadrature::MIN_ABS_TOL)
}

fn c08_step_back() -> Result<Check> {
    let spec = spec(1e-12);
    let mut worst = 0.0f64;
    for n in 2..=3u32 {
        let nu = omega_sq_measure(n)?;
        for &x in &[0.5, 1.0, 1.9] {
            let quad = transition_density(2 * n - 3, 1, &nu, x, &spec)?;
            worst = worst.max((omega_sq_step_back_density(n, x)? - quad).abs());
        }
    }
    Ok(Check::at_most(worst, 1e-7, ""))
}

fn c09_circulant() -> Result<Check> {
    let mut parts = Vec::new();
    for (m, r) in [(8usize, 1.0), (32, 5.0), (128, 10.0)] {
        for k in [RadialKernel::Cosine(1.0), RadialKernel::Omega(2)] {
            let mut closed = polygon_eigenvalues(&k, m, r)?;
            closed.sort_by(|a, b| a.total_cmp(b));
            let dense = sym_eigenvalues(&schoenberg_matrix(&k, &regular_polygon(m, r)?)?)?;
            let dist = closed.iter().zip(&dense).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
            parts.push(Check::at_most(dist, 1e-9 * m as f64, ""));
        }
    }
    Ok(Check::all(parts))
}

fn c10_fourier() -> Result<Check> {
    let spec = spec(1e-13);
    let cos = RadialKernel::Cosine(1.0);
    let mut worst = 0.0f64;
    for &r in &[1.0, 5.0, 10.0] {
        for k in 1..=20u32 {
            let g = fourier_coefficient(&cos, k, r, &spec)?.value;
            worst = worst.max((g - bessel_j(2.0 * k as f64, 2.0 * r)?).abs());
        }
    }
    Ok(Check::at_most(worst, 1e-10, ""))
}

fn c11_counts() -> Result<Check> {
    let mut parts = Vec::new();
    let mut slack = Vec::new();
    for n in 1..=20usize {
        let c = even_bessel_negative_count(9.0 * n as f64 + 0.5, 3 * n)?;
        slack.push(c as i64 - n as i64);
        parts.push(Check::at_least(c as f64, n as f64, if c < n { format!("N={n}: {c}") } else { String::new() }));
    }
    let cos = RadialKernel::Cosine(1.0);
    let mut poly = Vec::new();
    for n in [3usize, 5] {
        let c = polygon_negative_count(&cos, 4096, 0.5 * (9.0 * n as f64 + 0.5), None)?;
        poly.push(format!("N={n}: {c}"));
        parts.push(Check::at_least(c as f64, n as f64, ""));
    }
    let mut c = Check::all(parts);
    let min_slack = slack.iter().min().unwrap();
    c.detail = format!(
        "Bessel excess >= {min_slack}; polygon m=4096 {}{}",
        poly.join(", "),
        if c.detail.is_empty() { String::new() } else { format!("; {}", c.detail) }
    );
    Ok(c)
}

fn c12_growth() -> Result<Check> {
    let tol = 1e-9;
    let k = RadialKernel::Omega(2);
    let w = simplex_scan(2, &k, tol)?;
    let base = simplex_with_center(2, w.t)?;
    let report = negative_squares_growth(&k, &base, 4, Some(tol))?;
    let achieved = report.witness["achieved"].as_u64().unwrap_or(0) as f64;
    let gap = report.witness["gap"].as_f64().unwrap_or(f64::NAN);
    Ok(Check::at_least(achieved, 4.0, format!("t*={}, gap={gap:.4}, 4th eigenvalue -{:.3e}", w.t, report.margin)))
}

fn c13_products() -> Result<Check> {
    let mut parts = Vec::new();
    let prod = RadialKernel::product(RadialKernel::Omega(2), RadialKernel::scaled(RadialKernel::Omega(2), 3.0)?);
    let mut worst = 0usize;
    for seed in 0..10u64 {
        worst = worst.max(kappa_minus(&prod, &random_config(2, 40, 500 + seed, 10.0)?, None)?);
    }
    parts.push(Check::at_most(worst as f64, 0.0, format!("kappa on 10 random sets in R^2: {worst}")));
    let s = product_kernel_support(2, 1.0, 3.0)?;
    let flag_ok = s.lo == 2.0 && s.hi == 4.0 && s.not_in_next;
    parts.push(Check::at_least(
        flag_ok as u8 as f64,
        1.0,
        format!("support [{}, {}] not_in_next={}", s.lo, s.hi, s.not_in_next),
    ));

    // cos² = (1 + cos 2r)/2: a rank-one shift of the cos(2·) matrix
    let (m, r) = (4096usize, 13.75);
    let cos = polygon_negative_count(&RadialKernel::Cosine(1.0), m, r, None)?;
    let cos2 = polygon_negative_count(&RadialKernel::Cosine(2.0), m, r, None)?;
    let sq = polygon_negative_count(&RadialKernel::power(RadialKernel::Cosine(1.0), 2)?, m, r, None)?;
    parts.push(Check::at_least(sq as f64, 3.0, format!("cos^2 n_neg={sq}, cos n_neg={cos}, cos(2.) n_neg={cos2}")));
    parts.push(Check::at_least(sq as f64, cos2 as f64 - 1.0, ""));
    parts.push(Check::at_least(sq as f64, cos as f64 - 1.0, ""));
    Ok(Check::all(parts))
}

fn c14_eigen() -> Result<Check> {
    let mut jobs = Vec::new();
    for &n in &[10usize, 50, 200] {
        for seed in 0..50u64 {
            jobs.push((n, seed));
        }
    }
    let worst = jobs
        .par_iter()
        .map(|&(n, seed)| -> Result<(f64, f64)> {
            let mut rng = ChaCha8Rng::seed_from_u64(seed * 1000 + n as u64);
            let a = SymmetricMatrix::from_fn(n, |_, _| rng.random_range(-1.0..1.0));
            let eigs = sym_eigenvalues(&a)?;
            let fro = a.frobenius_norm();
            let trace_err = (eigs.iter().sum::<f64>() - a.trace()).abs() / (fro * (n as f64).sqrt());
            let fro_err = ((eigs.iter().map(|l| l * l).sum::<f64>()).sqrt() - fro).abs() / fro;
            Ok((trace_err, fro_err))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .fold((0.0f64, 0.0f64), |acc, e| (acc.0.max(e.0), acc.1.max(e.1)));
    Ok(Check::all(vec![
        Check::at_most(worst.0, 1e-12, format!("trace {:.1e}", worst.0)),
        Check::at_most(worst.1, 1e-12, format!("Frobenius {:.1e}", worst.1)),
    ]))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn filters() {
        let all = criteria();
        assert_eq!(all.len(), 14);
        assert!(all.iter().enumerate().all(|(i, c)| c.id as usize == i + 1));
        let spec: Vec<u8> = all.iter().filter(|c| c.matches("specfun")).map(|c| c.id).collect();
        assert_eq!(spec, vec![1, 6]);
        let tr: Vec<u8> = all.iter().filter(|c| c.matches("transition")).map(|c| c.id).collect();
        assert_eq!(tr, vec![5]);
        assert!(all[11].matches("12"));
    }

    #[test]
    fn check_composition() {
        let c = Check::all(vec![Check::at_most(1e-13, 1e-12, "a"), Check::at_least(3.0, 3.0, "b")]);
        assert!(c.passed);
        assert_eq!(c.observed, 3.0);
        let c = Check::all(vec![Check::at_most(2e-12, 1e-12, ""), Check::at_least(5.0, 3.0, "")]);
        assert!(!c.passed);
        assert!(c.margin() < 0.0);
    }

    #[test]
    fn quick_subset_passes() {
        let out = run_suite(Some("1,2,4"));
        assert_eq!(out.iter().map(|o| o.id).collect::<Vec<_>>(), vec![1, 2, 4]);
        assert!(out.iter().all(|o| o.passed), "{:?}", out);
    }
}
