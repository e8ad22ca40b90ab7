//! Bessel functions of the first kind for real order ν ≥ -1/2.
//!
//! Three regions:
//! - power series when x ≤ 8 or x²/4 ≤ ν + 1 (no early cancellation);
//! - Hankel's asymptotic expansion when x ≥ max(25, ν²/2), provided the
//!   terms drop below 1e-17 before they start growing;
//! - Miller's backward recurrence everywhere else, normalised with the
//!   Neumann series (x/2)^β = Σ_k c_k J_{β+2k}(x).

use std::f64::consts::PI;

use super::gamma::{gamma, ln_gamma};
use super::{Method, SpecFunResult};
use crate::error::{Error, Result};

const EPS: f64 = f64::EPSILON;

pub fn bessel_j(nu: f64, x: f64) -> Result<f64> {
    bessel_j_result(nu, x).map(|r| r.value)
}

pub fn bessel_j_result(nu: f64, x: f64) -> Result<SpecFunResult> {
    if !(nu >= -0.5) || !nu.is_finite() {
        return Err(Error::domain(format!("Bessel order must be >= -1/2, got {nu}")));
    }
    if !(x >= 0.0) || !x.is_finite() {
        return Err(Error::domain(format!("Bessel argument must be finite and >= 0, got {x}")));
    }
    if x == 0.0 {
        return if nu == 0.0 {
            Ok(SpecFunResult::exact(1.0, Method::Series))
        } else if nu > 0.0 {
            Ok(SpecFunResult::exact(0.0, Method::Series))
        } else {
            Err(Error::domain("J_nu(0) is unbounded for negative order"))
        };
    }
    if x <= 8.0 || 0.25 * x * x <= nu + 1.0 {
        return Ok(series(nu, x));
    }
    if x >= (0.5 * nu * nu).max(25.0) {
        if let Some(r) = hankel(nu, x) {
            return Ok(r);
        }
    }
    miller(nu, x)
}

/// (x/2)^ν / Γ(ν+1), computed through logarithms once Γ would overflow.
fn series_prefactor(nu: f64, x: f64) -> f64 {
    if nu + 1.0 < 160.0 {
        (0.5 * x).powf(nu) / gamma(nu + 1.0)
    } else {
        (nu * (0.5 * x).ln() - ln_gamma(nu + 1.0)).exp()
    }
}

fn series(nu: f64, x: f64) -> SpecFunResult {
    let y = -0.25 * x * x;
    let mut term = 1.0;
    let mut sum = 1.0;
    let mut abs_sum = 1.0;
    for k in 1..500 {
        let kf = k as f64;
        term *= y / (kf * (kf + nu));
        sum += term;
        abs_sum += term.abs();
        if term.abs() <= 0.25 * EPS * sum.abs() {
            break;
        }
    }
    let pre = series_prefactor(nu, x);
    SpecFunResult { value: pre * sum, est_error: 4.0 * EPS * pre.abs() * abs_sum, method: Method::Series }
}

fn hankel(nu: f64, x: f64) -> Option<SpecFunResult> {
    let mu = 4.0 * nu * nu;
    let mut p = 1.0;
    let mut q = 0.0;
    let mut term: f64 = 1.0;
    let mut converged = false;
    for k in 1..200 {
        let kf = k as f64;
        let odd = 2.0 * kf - 1.0;
        let next = term * (mu - odd * odd) / (kf * 8.0 * x);
        if next.abs() > term.abs() && k > 1 {
            break;
        }
        term = next;
        // terms alternate between Q (odd k) and P (even k), each with its own sign
        match k % 4 {
            1 => q += term,
            2 => p -= term,
            3 => q -= term,
            _ => p += term,
        }
        if term.abs() < 1e-17 {
            converged = true;
            break;
        }
    }
    if !converged {
        return None;
    }
    let (sx, cx) = x.sin_cos();
    // φ = (ν/2 + 1/4)π reduced modulo 2π before taking trig functions
    let phase = (0.5 * nu + 0.25).rem_euclid(2.0);
    let (sp, cp) = (PI * phase).sin_cos();
    let cos_chi = cx * cp + sx * sp;
    let sin_chi = sx * cp - cx * sp;
    let amp = (2.0 / (PI * x)).sqrt();
    let value = amp * (p * cos_chi - q * sin_chi);
    Some(SpecFunResult { value, est_error: amp * (4.0 * EPS * (1.0 + x * EPS) + 1e-17), method: Method::Asymptotic })
}

/// Start index for backward recurrence; even.
fn miller_start(order: f64, x: f64) -> usize {
    let top = order.max(x);
    let n = (top + 20.0 + 10.0 * (0.5 * top).cbrt()).ceil() as usize;
    n + (n & 1)
}

const RESCALE: f64 = 1e250;

fn miller(nu: f64, x: f64) -> Result<SpecFunResult> {
    let beta = if nu >= 0.0 { nu.fract() } else { nu };
    let target = (nu - beta).round() as usize;
    let start = miller_start(nu, x);

    // Neumann coefficients c_k for index 2k, built upward then consumed downward.
    let half = start / 2;
    let mut coeff = vec![0.0; half + 1];
    coeff[0] = gamma(beta + 1.0);
    let mut g = gamma(beta + 1.0);
    for (k, c) in coeff.iter_mut().enumerate().skip(1) {
        if k > 1 {
            g *= (beta + k as f64 - 1.0) / k as f64;
        }
        *c = (beta + 2.0 * k as f64) * g;
    }

    let mut f_next = 0.0; // index n + 1
    let mut f_cur = 1e-300; // index n
    let mut norm = 0.0;
    let mut norm_abs = 0.0;
    let mut at_target = 0.0;
    let mut n = start;
    loop {
        if n == target {
            at_target = f_cur;
        }
        if n.is_multiple_of(2) {
            let c = coeff[n / 2];
            norm += c * f_cur;
            norm_abs += (c * f_cur).abs();
        }
        if n == 0 {
            break;
        }
        let order = beta + n as f64;
        let f_prev = 2.0 * order / x * f_cur - f_next;
        f_next = f_cur;
        f_cur = f_prev;
        n -= 1;
        if f_cur.abs() > RESCALE {
            f_cur /= RESCALE;
            f_next /= RESCALE;
            norm /= RESCALE;
            norm_abs /= RESCALE;
            at_target /= RESCALE;
        }
    }
    if norm == 0.0 || !norm.is_finite() {
        return Err(Error::Numerical(format!("Miller normalisation failed for J_{nu}({x})")));
    }
    let scale = (0.5 * x).powf(beta) / norm;
    let value = at_target * scale;
    let est_error = EPS * (start as f64) * (value.abs() + norm_abs * scale.abs());
    Ok(SpecFunResult { value, est_error, method: Method::Recurrence })
}

/// J_0(x), J_2(x), ..., J_{2K}(x) from one integer-order Miller sweep
/// normalised by J_0 + 2 Σ J_{2p} = 1.
pub fn bessel_j_even_sequence(x: f64, k_max: usize) -> Result<Vec<f64>> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::domain(format!("even Bessel sequence needs x > 0, got {x}")));
    }
    if k_max == 0 {
        return Err(Error::domain("even Bessel sequence needs K >= 1"));
    }
    let top = 2 * k_max;
    let by_count = top + 20 + x.ceil() as usize;
    let start = miller_start(top as f64, x).max(by_count);
    let start = start + (start & 1);

    let mut out = vec![0.0; k_max + 1];
    let mut f_next = 0.0;
    let mut f_cur = 1e-300;
    let mut norm = 0.0;
    let mut n = start;
    loop {
        if n.is_multiple_of(2) {
            if n <= top {
                out[n / 2] = f_cur;
            }
            norm += if n == 0 { f_cur } else { 2.0 * f_cur };
        }
        if n == 0 {
            break;
        }
        let f_prev = 2.0 * n as f64 / x * f_cur - f_next;
        f_next = f_cur;
        f_cur = f_prev;
        n -= 1;
        if f_cur.abs() > RESCALE {
            f_cur /= RESCALE;
            f_next /= RESCALE;
            norm /= RESCALE;
            for v in out.iter_mut() {
                *v /= RESCALE;
            }
        }
    }
    if norm == 0.0 || !norm.is_finite() {
        return Err(Error::Numerical(format!("even-order Miller normalisation failed at x = {x}")));
    }
    for v in out.iter_mut() {
        *v /= norm;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    // J_ν by direct power series with a long fixed tail;
    // cancellation limits it to x below about 9.
    fn series_oracle(nu: f64, x: f64) -> f64 {
        let y = 0.25 * x * x;
        let mut term = 1.0 / gamma(nu + 1.0);
        let mut sum = term;
        for k in 1..400 {
            term *= -y / (k as f64 * (k as f64 + nu));
            sum += term;
        }
        sum * (0.5 * x).powf(nu)
    }

    #[test]
    fn small_values() {
        assert_eq!(bessel_j(0.0, 0.0).unwrap(), 1.0);
        assert_eq!(bessel_j(3.0, 0.0).unwrap(), 0.0);
        assert!(bessel_j(-0.5, 0.0).is_err());
        assert!(bessel_j(-0.6, 1.0).is_err());
        assert!(bessel_j(0.0, -1.0).is_err());
    }

    #[test]
    fn half_integer_closed_form() {
        for &x in &[1.0, 7.5, 12.0, 30.0, 48.0] {
            let exact = (2.0 / (PI * x)).sqrt() * x.cos();
            assert!((bessel_j(-0.5, x).unwrap() - exact).abs() < 1e-14, "x={x}");
            let exact = (2.0 / (PI * x)).sqrt() * x.sin();
            assert!((bessel_j(0.5, x).unwrap() - exact).abs() < 1e-14, "x={x}");
            let exact = (2.0 / (PI * x)).sqrt() * (x.sin() / x - x.cos());
            assert!((bessel_j(1.5, x).unwrap() - exact).abs() < 1e-14, "x={x}");
        }
    }

    #[test]
    fn first_zero_of_j0() {
        assert!(bessel_j(0.0, 2.404_825_557_695_773).unwrap().abs() < 1e-12);
    }

    #[test]
    fn agrees_with_series_oracle_where_it_is_reliable() {
        for &nu in &[0.0, 0.3, 1.0, 2.5, 7.0, 20.0, 40.5, 60.0] {
            for &x in &[0.1, 3.0, 7.0, 9.0] {
                let got = bessel_j(nu, x).unwrap();
                let want = series_oracle(nu, x);
                assert!((got - want).abs() < 2e-13, "J_{nu}({x}): {got} vs {want}");
            }
        }
    }

    // 40-digit reference values (mpmath.besselj)
    const REFERENCE: &[(f64, f64, f64)] = &[
        (0.0, 12.0, 0.047689310796833537),
        (0.0, 16.0, -0.17489907398362918),
        (0.0, 30.0, -0.086367983581040211),
        (0.0, 45.5, 0.088176093155092095),
        (0.0, 50.0, 0.055812327669251815),
        (0.3, 12.0, -0.058942057108976807),
        (0.3, 16.0, -0.11281080338851265),
        (0.3, 30.0, -0.13011079142417547),
        (0.3, 45.5, 0.11432948167331941),
        (0.3, 50.0, 0.0053100391078477327),
        (1.0, 12.0, -0.22344710449062761),
        (1.0, 16.0, 0.090397175661304186),
        (1.0, 30.0, -0.11875106261662294),
        (1.0, 45.5, 0.079813799653066776),
        (1.0, 50.0, -0.097511828125175138),
        (2.5, 12.0, 0.072422673831809522),
        (2.5, 16.0, 0.092572681583959578),
        (2.5, 30.0, 0.14120285879928212),
        (2.5, 45.5, -0.11836231605438511),
        (2.5, 50.0, 0.02303721950962553),
        (7.0, 12.0, -0.17025380412720805),
        (7.0, 16.0, 0.18251382371420195),
        (7.0, 30.0, 0.14518518957232827),
        (7.0, 45.5, -0.11361256680525626),
        (7.0, 50.0, 0.060491201259537108),
        (20.0, 12.0, 0.00025121327024539953),
        (20.0, 16.0, 0.017328746227591996),
        (20.0, 30.0, 0.0048310199934040645),
        (20.0, 45.5, 0.058348548098397567),
        (20.0, 50.0, -0.11670435275957974),
        (40.5, 12.0, 2.6165216914388634e-18),
        (40.5, 16.0, 1.4993728556854478e-13),
        (40.5, 30.0, 0.00023838105980624519),
        (40.5, 45.5, 0.12728326029252639),
        (40.5, 50.0, -0.14704681596391638),
        (60.0, 12.0, 3.2460848900150472e-36),
        (60.0, 16.0, 6.3918629376740353e-29),
        (60.0, 30.0, 9.8075576431286246e-14),
        (60.0, 45.5, 3.1634901459838394e-5),
        (60.0, 50.0, 0.0010485195995314181),
    ];

    #[test]
    fn matches_reference_table() {
        for &(nu, x, want) in REFERENCE {
            let got = bessel_j(nu, x).unwrap();
            assert!((got - want).abs() < 1e-13, "J_{nu}({x}): {got} vs {want}");
        }
    }

    #[test]
    fn regions_agree_at_boundaries() {
        // Miller vs asymptotic vs series on the same inputs
        for &nu in &[0.0, 0.5, 1.0, 3.0, 6.5] {
            for &x in &[25.0, 30.0, 45.5] {
                let m = miller(nu, x).unwrap().value;
                let h = hankel(nu, x).unwrap().value;
                assert!((m - h).abs() < 1e-14, "J_{nu}({x}): {m} vs {h}");
            }
            let x = 8.0;
            assert!((miller(nu, x).unwrap().value - series(nu, x).value).abs() < 1e-13);
        }
    }

    #[test]
    fn wronskian_like_recurrence() {
        for &x in &[0.5, 1.0, 5.0, 20.0, 45.5] {
            for p in 1..=40 {
                let pf = p as f64;
                let jm = bessel_j(pf - 1.0, x).unwrap();
                let j0 = bessel_j(pf, x).unwrap();
                let jp = bessel_j(pf + 1.0, x).unwrap();
                let r = (jm + jp - 2.0 * pf / x * j0).abs();
                assert!(r <= 1e-11 * j0.abs().max(1.0), "p={p} x={x} r={r:e}");
            }
        }
    }

    #[test]
    fn even_sequence() {
        let s = bessel_j_even_sequence(1.0, 3).unwrap();
        assert_eq!(s.len(), 4);
        assert!(s.iter().all(|&v| v > 0.0));

        let s = bessel_j_even_sequence(10.0, 40).unwrap();
        let total: f64 = s[0] + 2.0 * s[1..].iter().sum::<f64>();
        assert!((total - 1.0).abs() < 1e-10);

        let s = bessel_j_even_sequence(20.0, 25).unwrap();
        for (p, v) in s.iter().enumerate() {
            assert!((v - bessel_j(2.0 * p as f64, 20.0).unwrap()).abs() < 1e-11, "p={p}");
        }
        assert!(bessel_j_even_sequence(0.0, 3).is_err());
    }
}
