//! Line-oriented measure files:
//!
//! ```text
//! # comment
//! atom <location> <mass>
//! density <family>:<params> support <lo> <hi> exps <l> <r> [weight <w>]
//! ```
//!
//! Families: `exp:m`, `gauss:m`, `omegasq:n` (support [0, 2s] for the
//! dilation by s), `stepback:n`, `uniform`. `hi` may be `inf`.

use std::fmt::Write as _;

use super::{Atom, DensityComponent, DensityKind, RadialMeasure};
use crate::error::{Error, Result};
use crate::quadrature::QuadratureSpec;

fn number(tok: Option<&str>, what: &str, line: usize) -> Result<f64> {
    let tok = tok.ok_or_else(|| Error::parse(format!("line {line}: missing {what}")))?;
    match tok {
        "inf" | "+inf" | "infinity" => Ok(f64::INFINITY),
        _ => tok.parse::<f64>().map_err(|_| Error::parse(format!("line {line}: bad {what} '{tok}'"))),
    }
}

fn integer(s: &str, line: usize) -> Result<u32> {
    s.parse::<u32>().map_err(|_| Error::parse(format!("line {line}: bad integer parameter '{s}'")))
}

fn expect(tok: Option<&str>, word: &str, line: usize) -> Result<()> {
    match tok {
        Some(t) if t == word => Ok(()),
        other => Err(Error::parse(format!("line {line}: expected '{word}', found {other:?}"))),
    }
}

fn check_support(lo: f64, hi: f64, want_lo: f64, want_hi: f64, family: &str, line: usize) -> Result<()> {
    if lo != want_lo || hi != want_hi {
        return Err(Error::parse(format!(
            "line {line}: family {family} has support [{want_lo}, {want_hi}], file declares [{lo}, {hi}]"
        )));
    }
    Ok(())
}

pub fn parse_measure(text: &str, spec: &QuadratureSpec) -> Result<RadialMeasure> {
    let mut atoms = Vec::new();
    let mut comps = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let mut toks = content.split_whitespace();
        match toks.next() {
            Some("atom") => {
                let location = number(toks.next(), "atom location", line)?;
                let mass = number(toks.next(), "atom mass", line)?;
                atoms.push(Atom { location, mass });
            }
            Some("density") => {
                let fam = toks.next().ok_or_else(|| Error::parse(format!("line {line}: missing family")))?;
                expect(toks.next(), "support", line)?;
                let lo = number(toks.next(), "support lower end", line)?;
                let hi = number(toks.next(), "support upper end", line)?;
                expect(toks.next(), "exps", line)?;
                let l = number(toks.next(), "left exponent", line)?;
                let r = number(toks.next(), "right exponent", line)?;
                let weight = match toks.next() {
                    None => 1.0,
                    Some("weight") => number(toks.next(), "weight", line)?,
                    Some(t) => return Err(Error::parse(format!("line {line}: unexpected token '{t}'"))),
                };
                let (name, params) = fam.split_once(':').unwrap_or((fam, ""));
                let c = match name {
                    "exp" => {
                        check_support(lo, hi, 0.0, f64::INFINITY, fam, line)?;
                        DensityComponent::exp_family(integer(params, line)?)?
                    }
                    "gauss" => {
                        check_support(lo, hi, 0.0, f64::INFINITY, fam, line)?;
                        DensityComponent::gauss_family(integer(params, line)?)?
                    }
                    "omegasq" => {
                        if lo != 0.0 {
                            return Err(Error::parse(format!("line {line}: omegasq support must start at 0")));
                        }
                        DensityComponent::omega_sq(integer(params, line)?, 0.5 * hi)?
                    }
                    "stepback" => {
                        check_support(lo, hi, 0.0, 2.0, fam, line)?;
                        DensityComponent::step_back(integer(params, line)?)?
                    }
                    "uniform" => DensityComponent::uniform(lo, hi)?,
                    _ => return Err(Error::parse(format!("line {line}: unknown density family '{name}'"))),
                };
                comps.push(c.with_exponents(l, r)?.with_weight(weight)?);
            }
            Some(other) => return Err(Error::parse(format!("line {line}: unknown record '{other}'"))),
            None => unreachable!(),
        }
    }
    RadialMeasure::new(atoms, comps, spec)
}

/// Inverse of [`parse_measure`]; `None` when a component has no text form.
pub fn format_measure(nu: &RadialMeasure) -> Option<String> {
    let mut out = String::new();
    for a in nu.atoms() {
        writeln!(out, "atom {} {}", a.location, a.mass).unwrap();
    }
    for c in nu.components() {
        let fam = match c.kind() {
            DensityKind::ExpFamily { m } => format!("exp:{m}"),
            DensityKind::GaussFamily { m } => format!("gauss:{m}"),
            DensityKind::OmegaSq { n, .. } => format!("omegasq:{n}"),
            DensityKind::StepBack { n } => format!("stepback:{n}"),
            DensityKind::Uniform => "uniform".to_string(),
            _ => return None,
        };
        let (lo, hi) = c.support();
        let e = c.exponents();
        let hi = if hi.is_infinite() { "inf".to_string() } else { hi.to_string() };
        write!(out, "density {fam} support {lo} {hi} exps {} {}", e.left, e.right).unwrap();
        if c.weight() != 1.0 {
            write!(out, " weight {}", c.weight()).unwrap();
        }
        out.push('\n');
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let text =
            "# two atoms and a family\natom 0.5 0.25\natom 2 0.25\ndensity gauss:3 support 0 inf exps 2 0 weight 0.5\n";
        let nu = parse_measure(text, &QuadratureSpec::default()).unwrap();
        assert!((nu.total_mass() - 1.0).abs() < 1e-12);
        let again = format_measure(&nu).unwrap();
        let nu2 = parse_measure(&again, &QuadratureSpec::default()).unwrap();
        assert_eq!(format_measure(&nu2).unwrap(), again);
    }

    #[test]
    fn dilated_square_density() {
        let nu = parse_measure("density omegasq:3 support 0 4 exps 1 -0.5", &QuadratureSpec::default()).unwrap();
        assert!((nu.total_mass() - 1.0).abs() < 1e-12);
        assert_eq!(nu.components()[0].support(), (0.0, 4.0));
    }

    #[test]
    fn errors() {
        let s = QuadratureSpec::default();
        assert!(matches!(parse_measure("atom 1", &s), Err(Error::Parse(_))));
        assert!(matches!(parse_measure("blob 1 2", &s), Err(Error::Parse(_))));
        assert!(matches!(parse_measure("density exp:2 support 0 5 exps 1 0", &s), Err(Error::Parse(_))));
        assert!(matches!(parse_measure("density cauchy:1 support 0 inf exps 0 0", &s), Err(Error::Parse(_))));
        assert!(parse_measure("density uniform support 1 2 exps -1 0", &s).is_err());
    }
}
