use std::fmt::Write as _;

use rpd_core::analysis::{
    fourier_coefficient, moment_report, negative_squares_growth, polygon_eigenvalues, random_small_witness,
    simplex_scan as scan, CertificateReport,
};
use rpd_core::grammar::{load_measure, parse_config, parse_kernel};
use rpd_core::io::{density_csv, fmt_f64};
use rpd_core::matrices::{default_tol, inertia_of, schoenberg_matrix_with, sym_eigenvalues, Inertia};
use rpd_core::measures::{transition_density, DensityComponent, RadialMeasure};
use rpd_core::verify::{run_suite, summary_line};
use rpd_core::{Error, QuadratureSpec, RadialKernel};
use serde_json::json;

/// How a command failed; decides the exit code.
pub enum Failure {
    /// Carries the output to print (exit 1).
    Verification(String),
    Usage(String),
    Numerical(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            e if e.is_usage() => Failure::Usage(e.to_string()),
            Error::SearchFailure { .. } => {
                Failure::Verification(format!("{}\n", json!({ "passed": false, "error": e.to_string() })))
            }
            e => Failure::Numerical(e.to_string()),
        }
    }
}

type Out = Result<String, Failure>;

#[derive(Clone, Copy, Debug)]
pub struct Grid {
    lo: f64,
    hi: f64,
    count: usize,
}

impl Grid {
    fn points(&self) -> Vec<f64> {
        if self.count == 1 {
            return vec![self.lo];
        }
        let step = (self.hi - self.lo) / (self.count - 1) as f64;
        (0..self.count).map(|i| if i + 1 == self.count { self.hi } else { self.lo + step * i as f64 }).collect()
    }
}

pub fn parse_grid(s: &str) -> Result<Grid, String> {
    let parts: Vec<&str> = s.split(':').collect();
    let [lo, hi, n] = parts.as_slice() else {
        return Err("grid must be lo:hi:count".into());
    };
    let lo: f64 = lo.parse().map_err(|_| format!("bad grid start '{lo}'"))?;
    let hi: f64 = hi.parse().map_err(|_| format!("bad grid end '{hi}'"))?;
    let count: usize = n.parse().map_err(|_| format!("bad grid count '{n}'"))?;
    if !lo.is_finite() || !hi.is_finite() || hi < lo {
        return Err("grid needs finite lo <= hi".into());
    }
    if count == 0 || count > 10_000_000 {
        return Err("grid count must be in 1..=10^7".into());
    }
    Ok(Grid { lo, hi, count })
}

pub fn positive_f64(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(v) if v > 0.0 && v.is_finite() => Ok(v),
        _ => Err(format!("expected a finite number > 0, got '{s}'")),
    }
}

pub fn nonneg_f64(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(v) if v >= 0.0 && v.is_finite() => Ok(v),
        _ => Err(format!("expected a finite number >= 0, got '{s}'")),
    }
}

pub fn quadrature_from_env() -> Result<QuadratureSpec, Failure> {
    let spec = QuadratureSpec::default();
    match std::env::var("RPD_QUAD_TOL") {
        Ok(v) => {
            let tol = positive_f64(v.trim()).map_err(|e| Failure::Usage(format!("RPD_QUAD_TOL: {e}")))?;
            Ok(spec.with_abs_tol(tol)?)
        }
        Err(_) => Ok(spec),
    }
}

fn points(at: &[f64], grid: Option<Grid>) -> Result<Vec<f64>, Failure> {
    let mut xs = at.to_vec();
    if let Some(g) = grid {
        xs.extend(g.points());
    }
    if xs.is_empty() {
        return Err(Failure::Usage("give --at or --grid".into()));
    }
    Ok(xs)
}

fn json_out(v: &serde_json::Value) -> String {
    format!("{}\n", serde_json::to_string_pretty(v).expect("json"))
}

fn kernel(text: &str, spec: &QuadratureSpec) -> Result<RadialKernel, Failure> {
    Ok(parse_kernel(text, spec)?)
}

pub fn eval(k: &str, at: &[f64], grid: Option<Grid>, spec: &QuadratureSpec) -> Out {
    let k = kernel(k, spec)?;
    let mut out = String::from("r,f(r)\n");
    for r in points(at, grid)? {
        writeln!(out, "{},{}", fmt_f64(r), fmt_f64(k.eval_with(r, spec)?)).unwrap();
    }
    Ok(out)
}

pub fn inertia(
    k: &str,
    config: &str,
    tol: Option<f64>,
    eigenvalues: bool,
    matrix_csv: bool,
    spec: &QuadratureSpec,
) -> Out {
    let k = kernel(k, spec)?;
    let x = parse_config(config)?;
    let a = schoenberg_matrix_with(&k, &x, spec)?;
    if matrix_csv {
        return Ok(a.to_csv());
    }
    let tol = tol.unwrap_or_else(|| default_tol(&a));
    let eigs = sym_eigenvalues(&a)?;
    let Inertia { n_neg, n_zero, n_pos, .. } = inertia_of(&a, tol)?;
    let mut v = json!({
        "kernel": k.to_string(),
        "config": x.label().to_string(),
        "order": a.order(),
        "tol": tol,
        "n_neg": n_neg,
        "n_zero": n_zero,
        "n_pos": n_pos,
        "min_eigenvalue": eigs[0],
        "max_eigenvalue": eigs[eigs.len() - 1],
    });
    if eigenvalues {
        v["eigenvalues"] = json!(eigs);
    }
    Ok(json_out(&v))
}

pub fn simplex_scan(k: &str, m: u32, tol: f64, spec: &QuadratureSpec) -> Out {
    let k = kernel(k, spec)?;
    let m = m as usize;
    let w = scan(m, &k, tol)?;
    let x = rpd_core::geometry::simplex_with_center(m, w.t)?;
    let eigs = sym_eigenvalues(&schoenberg_matrix_with(&k, &x, spec)?)?;
    let report = CertificateReport::new(
        format!("{k} has a negative eigenvalue on simplex-center:{m}@{}", w.t),
        json!({
            "kernel": k.to_string(),
            "config": x.label().to_string(),
            "t": w.t,
            "lambda": w.lambda.lambda,
            "threshold": w.threshold,
            "vertex_entry": w.lambda.a,
            "centre_entry": w.lambda.b,
            "min_eigenvalue": eigs[0],
            "n_neg": eigs.iter().filter(|&&l| l < -tol).count(),
        }),
        -eigs[0],
        tol,
    );
    Ok(report.to_json() + "\n")
}

pub fn random_search(k: &str, m: u32, trials: u32, seed: u64, side: f64, spec: &QuadratureSpec) -> Out {
    let k = kernel(k, spec)?;
    let r = random_small_witness(m as usize, &k, trials as usize, seed, side)?;
    Ok(json_out(&json!({
        "kernel": k.to_string(),
        "points": m + 2,
        "dim": m + 1,
        "trials": r.trials,
        "seed": seed,
        "box": side,
        "min_eigenvalue": r.min_eigenvalue,
        "best_config": r.config.points(),
        "note": "search result only; no claim attached",
    })))
}

pub fn polygon_spectrum(k: &str, m: u32, r: f64, tol: Option<f64>, spec: &QuadratureSpec) -> Out {
    let k = kernel(k, spec)?;
    let eigs = polygon_eigenvalues(&k, m as usize, r)?;
    let norm: f64 = eigs.iter().fold(0.0f64, |s, l| s.max(l.abs()));
    let tol = tol.unwrap_or(1e-9 * norm.max(1.0));
    let n_neg = eigs.iter().filter(|&&l| l < -tol).count();
    let mut out =
        format!("# rpd-lab polygon spectrum v1, kernel={k}, m={m}, r={r}, tol={tol:e}, n_neg={n_neg}\nk,lambda\n");
    for (i, l) in eigs.iter().enumerate() {
        writeln!(out, "{i},{}", fmt_f64(*l)).unwrap();
    }
    Ok(out)
}

pub fn fourier(k: &str, r: f64, k_max: u32, spec: &QuadratureSpec) -> Out {
    let k = kernel(k, spec)?;
    let mut out = String::from("k,coefficient,est_error\n");
    for idx in 1..=k_max {
        let c = fourier_coefficient(&k, idx, r, spec)?;
        writeln!(out, "{idx},{},{}", fmt_f64(c.value), fmt_f64(c.est_error)).unwrap();
    }
    Ok(out)
}

/// `exp:m`, `gauss:m`, `omegasq:n`, `stepback:n` or `@FILE`.
fn measure(source: &str, spec: &QuadratureSpec) -> Result<RadialMeasure, Failure> {
    if let Some(path) = source.strip_prefix('@') {
        return Ok(load_measure(path, spec)?);
    }
    let (name, param) = source.split_once(':').ok_or_else(|| Failure::Usage(format!("unknown measure '{source}'")))?;
    let n: u32 = param.parse().map_err(|_| Failure::Usage(format!("bad measure parameter '{param}'")))?;
    let c = match name {
        "exp" => DensityComponent::exp_family(n)?,
        "gauss" => DensityComponent::gauss_family(n)?,
        "omegasq" => DensityComponent::omega_sq(n, 1.0)?,
        "stepback" => DensityComponent::step_back(n)?,
        _ => return Err(Failure::Usage(format!("unknown measure family '{name}'"))),
    };
    Ok(RadialMeasure::from_component(c, spec)?)
}

pub fn transition(source: &str, m: u32, k: u32, at: &[f64], grid: Option<Grid>, spec: &QuadratureSpec) -> Out {
    let nu = measure(source, spec)?;
    let xs = points(at, grid)?;
    let samples =
        xs.into_iter().map(|x| Ok((x, transition_density(m, k, &nu, x, spec)?))).collect::<Result<Vec<_>, Error>>()?;
    Ok(density_csv(&samples))
}

pub fn density(source: &str, at: &[f64], grid: Option<Grid>, spec: &QuadratureSpec) -> Out {
    let nu = measure(source, spec)?;
    let samples = points(at, grid)?.into_iter().map(|x| Ok((x, nu.density(x)?))).collect::<Result<Vec<_>, Error>>()?;
    Ok(density_csv(&samples))
}

pub fn growth(k: &str, base: &str, n: u32, tol: Option<f64>, spec: &QuadratureSpec) -> Out {
    let k = kernel(k, spec)?;
    let base = parse_config(base)?;
    let report = negative_squares_growth(&k, &base, n as usize, tol)?;
    let out = report.to_json() + "\n";
    if report.passed {
        Ok(out)
    } else {
        Err(Failure::Verification(out))
    }
}

pub fn moment_test(n: u32) -> Out {
    let report = moment_report(n)?;
    let mut v = serde_json::to_value(&report).expect("json");
    v["verdict"] = json!(if report.passed { report.claim.clone() } else { "inconclusive".to_string() });
    let out = json_out(&v);
    if report.passed {
        Ok(out)
    } else {
        Err(Failure::Verification(out))
    }
}

pub fn verify(only: Option<&str>, as_json: bool) -> Out {
    let outcomes = run_suite(only);
    if outcomes.is_empty() {
        return Err(Failure::Usage(format!("no criterion matches '{}'", only.unwrap_or(""))));
    }
    let out = if as_json {
        json_out(&json!({ "criteria": outcomes, "summary": summary_line(&outcomes) }))
    } else {
        let mut s = String::new();
        for o in &outcomes {
            writeln!(s, "{}", o.line()).unwrap();
        }
        writeln!(s, "{}", summary_line(&outcomes)).unwrap();
        s
    };
    if outcomes.iter().all(|o| o.passed) {
        Ok(out)
    } else {
        Err(Failure::Verification(out))
    }
}
