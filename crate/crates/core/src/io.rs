//! CSV exchange for sampled densities and other x,y series.

use std::fmt::Write as _;

use crate::error::{Error, Result};

pub const DENSITY_HEADER: &str = "# rpd-lab density v1";

/// 17 significant digits, enough to round-trip an f64.
pub fn fmt_f64(v: f64) -> String {
    format!("{v:.16e}")
}

pub fn density_csv(samples: &[(f64, f64)]) -> String {
    let mut out = String::with_capacity(48 * (samples.len() + 2));
    out.push_str(DENSITY_HEADER);
    out.push('\n');
    out.push_str("x,p(x)\n");
    for &(x, p) in samples {
        writeln!(out, "{},{}", fmt_f64(x), fmt_f64(p)).unwrap();
    }
    out
}

pub fn parse_density_csv(text: &str) -> Result<Vec<(f64, f64)>> {
    let mut lines = text.lines();
    if lines.next().map(str::trim) != Some(DENSITY_HEADER) {
        return Err(Error::parse(format!("missing header '{DENSITY_HEADER}'")));
    }
    let mut out = Vec::new();
    for (i, line) in lines.enumerate() {
        let line = line.trim();
        if line.is_empty() || line == "x,p(x)" {
            continue;
        }
        let (a, b) = line.split_once(',').ok_or_else(|| Error::parse(format!("line {}: expected x,p(x)", i + 2)))?;
        let x = a.trim().parse::<f64>().map_err(|_| Error::parse(format!("line {}: bad x '{a}'", i + 2)))?;
        let p = b.trim().parse::<f64>().map_err(|_| Error::parse(format!("line {}: bad p(x) '{b}'", i + 2)))?;
        out.push((x, p));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn layout() {
        let csv = density_csv(&[(0.5, 0.25)]);
        assert_eq!(csv, "# rpd-lab density v1\nx,p(x)\n5.0000000000000000e-1,2.5000000000000000e-1\n");
        assert!(parse_density_csv("x,p(x)\n1,2\n").is_err());
        assert!(parse_density_csv("# rpd-lab density v1\n1;2\n").is_err());
    }

    proptest! {
        #[test]
        fn round_trip(xs in proptest::collection::vec((-1e300f64..1e300, -1e-300f64..1e-300), 0..20)) {
            let back = parse_density_csv(&density_csv(&xs)).unwrap();
            prop_assert_eq!(back, xs);
        }
    }
}
