//! Text grammars for kernels and point configurations.
//!
//! ```text
//! kernel := omega:n | exp | gauss | cos:s | scale:a(kernel)
//!         | prod(kernel,kernel) | pow:p(kernel) | mix:n@FILE
//! config := simplex-center:m@t | polygon:m@r | random:dim,count,seed,box
//!         | shifted(config; u1,u2,...[; axis=k])
//! ```

use std::path::Path;

use crate::error::{Error, Result};
use crate::geometry::{random_config, regular_polygon, shifted_union, simplex_with_center, PointConfig};
use crate::kernels::RadialKernel;
use crate::measures::{parse_measure, RadialMeasure};
use crate::quadrature::QuadratureSpec;

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Cursor { src, pos: 0 }
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn eat(&mut self, s: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(s) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, s: &str) -> Result<()> {
        if self.eat(s) {
            Ok(())
        } else {
            Err(self.error(&format!("expected '{s}'")))
        }
    }

    /// Characters up to (not including) one of `stops`.
    fn token(&mut self, stops: &[char]) -> &'a str {
        self.skip_ws();
        let rest = self.rest();
        let end = rest.find(|c: char| stops.contains(&c) || c.is_whitespace()).unwrap_or(rest.len());
        self.pos += end;
        &rest[..end]
    }

    fn number<T: std::str::FromStr>(&mut self, what: &str, stops: &[char]) -> Result<T> {
        let tok = self.token(stops);
        tok.parse::<T>().map_err(|_| self.error(&format!("bad {what} '{tok}'")))
    }

    fn error(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} at offset {} in '{}'", self.pos, self.src))
    }

    fn finish(&mut self) -> Result<()> {
        self.skip_ws();
        if self.rest().is_empty() {
            Ok(())
        } else {
            Err(self.error("trailing input"))
        }
    }
}

const KERNEL_STOPS: &[char] = &['(', ')', ','];

/// Parses a kernel, resolving `mix:n@FILE` through `load`.
pub fn parse_kernel_with(text: &str, load: &dyn Fn(&str) -> Result<RadialMeasure>) -> Result<RadialKernel> {
    let mut c = Cursor::new(text);
    let k = kernel(&mut c, load)?;
    c.finish()?;
    Ok(k)
}

/// Parses a kernel; measure files are read from disk with `spec`.
pub fn parse_kernel(text: &str, spec: &QuadratureSpec) -> Result<RadialKernel> {
    parse_kernel_with(text, &|path| load_measure(path, spec))
}

pub fn load_measure(path: impl AsRef<Path>, spec: &QuadratureSpec) -> Result<RadialMeasure> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read measure file {}: {e}", path.display())))?;
    parse_measure(&text, spec)
}

fn kernel(c: &mut Cursor<'_>, load: &dyn Fn(&str) -> Result<RadialMeasure>) -> Result<RadialKernel> {
    let head = c.token(&['(', ')', ',', ':']);
    match head {
        "exp" => Ok(RadialKernel::ExpDecay),
        "gauss" => Ok(RadialKernel::GaussDecay),
        "omega" => {
            c.expect(":")?;
            RadialKernel::omega(c.number("dimension", KERNEL_STOPS)?)
        }
        "cos" => {
            c.expect(":")?;
            RadialKernel::cosine(c.number("frequency", KERNEL_STOPS)?)
        }
        "scale" => {
            c.expect(":")?;
            let a = c.number("scale", KERNEL_STOPS)?;
            c.expect("(")?;
            let inner = kernel(c, load)?;
            c.expect(")")?;
            RadialKernel::scaled(inner, a)
        }
        "pow" => {
            c.expect(":")?;
            let p = c.number("exponent", KERNEL_STOPS)?;
            c.expect("(")?;
            let inner = kernel(c, load)?;
            c.expect(")")?;
            RadialKernel::power(inner, p)
        }
        "prod" => {
            c.expect("(")?;
            let left = kernel(c, load)?;
            c.expect(",")?;
            let right = kernel(c, load)?;
            c.expect(")")?;
            Ok(RadialKernel::product(left, right))
        }
        "mix" => {
            c.expect(":")?;
            let n = c.number("dimension", &['@'])?;
            c.expect("@")?;
            let path = c.token(&[')', ',']);
            if path.is_empty() {
                return Err(c.error("missing measure file"));
            }
            RadialKernel::mixture(n, load(path)?)
        }
        "" => Err(c.error("expected a kernel")),
        other => Err(c.error(&format!("unknown kernel '{other}'"))),
    }
}

const CONFIG_STOPS: &[char] = &[',', ';', '(', ')', '@'];

pub fn parse_config(text: &str) -> Result<PointConfig> {
    let mut c = Cursor::new(text);
    let cfg = config(&mut c)?;
    c.finish()?;
    Ok(cfg)
}

fn config(c: &mut Cursor<'_>) -> Result<PointConfig> {
    let head = c.token(&[':', '(', ';', ')']);
    match head {
        "simplex-center" => {
            c.expect(":")?;
            let m = c.number("simplex dimension", CONFIG_STOPS)?;
            c.expect("@")?;
            simplex_with_center(m, c.number("edge length", CONFIG_STOPS)?)
        }
        "polygon" => {
            c.expect(":")?;
            let m = c.number("vertex count", CONFIG_STOPS)?;
            c.expect("@")?;
            regular_polygon(m, c.number("radius", CONFIG_STOPS)?)
        }
        "random" => {
            c.expect(":")?;
            let dim = c.number("dimension", CONFIG_STOPS)?;
            c.expect(",")?;
            let count = c.number("count", CONFIG_STOPS)?;
            c.expect(",")?;
            let seed = c.number("seed", CONFIG_STOPS)?;
            c.expect(",")?;
            random_config(dim, count, seed, c.number("box side", CONFIG_STOPS)?)
        }
        "shifted" => {
            c.expect("(")?;
            let base = config(c)?;
            c.expect(";")?;
            let mut spacings = vec![c.number::<f64>("spacing", CONFIG_STOPS)?];
            while c.eat(",") {
                spacings.push(c.number("spacing", CONFIG_STOPS)?);
            }
            let mut axis = 0;
            if c.eat(";") {
                c.expect("axis=")?;
                axis = c.number("axis", CONFIG_STOPS)?;
            }
            c.expect(")")?;
            shifted_union(&base, &spacings, axis)
        }
        "" => Err(c.error("expected a configuration")),
        other => Err(c.error(&format!("unknown configuration '{other}'"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::ConfigLabel;

    fn no_files(_: &str) -> Result<RadialMeasure> {
        Err(Error::Parse("no files here".into()))
    }

    #[test]
    fn kernels_round_trip() {
        for text in [
            "omega:3",
            "exp",
            "gauss",
            "cos:2.5",
            "scale:2(omega:2)",
            "prod(omega:2,scale:3(omega:2))",
            "pow:3(omega:1)",
        ] {
            let k = parse_kernel_with(text, &no_files).unwrap();
            assert_eq!(k.to_string(), text);
        }
        let k = parse_kernel_with(" prod( omega:2 , cos:1 ) ", &no_files).unwrap();
        assert_eq!(k.to_string(), "prod(omega:2,cos:1)");
    }

    #[test]
    fn mixture_uses_loader() {
        let load = |p: &str| {
            assert_eq!(p, "nu.txt");
            RadialMeasure::dirac(1.0)
        };
        let k = parse_kernel_with("pow:2(mix:3@nu.txt)", &load).unwrap();
        let v = k.eval(std::f64::consts::PI).unwrap();
        assert!(v.abs() < 1e-15);
    }

    #[test]
    fn kernel_errors() {
        for bad in
            ["", "omega", "omega:0", "omega:x", "cos:-1", "pow:0(exp)", "prod(exp)", "exp exp", "bessel:2", "mix:2@nu"]
        {
            assert!(parse_kernel_with(bad, &no_files).is_err(), "{bad}");
        }
    }

    #[test]
    fn configs() {
        let s = parse_config("simplex-center:2@0.1").unwrap();
        assert_eq!((s.len(), s.dim()), (5, 3));
        let p = parse_config("polygon:6@1").unwrap();
        assert!((p.distance(0, 1) - 1.0).abs() < 1e-14);
        let r = parse_config("random:2,40,7,10").unwrap();
        assert_eq!(r.len(), 40);
        assert_eq!(r.label(), &ConfigLabel::Random { dim: 2, count: 40, seed: 7, side: 10.0 });
        let u = parse_config("shifted(polygon:4@1; 0, 10, 20)").unwrap();
        assert_eq!(u.len(), 12);
        assert_eq!(parse_config(&u.label().to_string()).unwrap().points(), u.points());
        let v = parse_config("shifted(simplex-center:1@0.5; 0,3; axis=1)").unwrap();
        assert_eq!(parse_config(&v.label().to_string()).unwrap().points(), v.points());
        for bad in ["polygon:2@1", "polygon:4", "simplex-center:1@-1", "shifted(polygon:4@1; 1)", "cube:3"] {
            assert!(parse_config(bad).is_err(), "{bad}");
        }
    }
}
