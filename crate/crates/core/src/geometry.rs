//! Point configurations used as Schoenberg-matrix witnesses.

use std::f64::consts::PI;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrices::SymmetricMatrix;

/// How a configuration was built. `Display` renders the CLI grammar.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ConfigLabel {
    SimplexCenter { m: usize, t: f64 },
    Polygon { m: usize, r: f64 },
    Shifted { base: Box<ConfigLabel>, spacings: Vec<f64>, axis: usize },
    Random { dim: usize, count: usize, seed: u64, side: f64 },
    Explicit,
}

impl fmt::Display for ConfigLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConfigLabel::SimplexCenter { m, t } => write!(f, "simplex-center:{m}@{t}"),
            ConfigLabel::Polygon { m, r } => write!(f, "polygon:{m}@{r}"),
            ConfigLabel::Shifted { base, spacings, axis } => {
                write!(f, "shifted({base}; ")?;
                for (i, s) in spacings.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{s}")?;
                }
                if *axis != 0 {
                    write!(f, "; axis={axis}")?;
                }
                write!(f, ")")
            }
            ConfigLabel::Random { dim, count, seed, side } => write!(f, "random:{dim},{count},{seed},{side}"),
            ConfigLabel::Explicit => write!(f, "explicit"),
        }
    }
}

/// A finite set of pairwise distinct points in ℝ^dim.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PointConfig {
    dim: usize,
    points: Vec<Vec<f64>>,
    label: ConfigLabel,
}

impl PointConfig {
    pub fn new(dim: usize, points: Vec<Vec<f64>>, label: ConfigLabel) -> Result<Self> {
        if dim == 0 {
            return Err(Error::domain("configuration dimension must be positive"));
        }
        if points.is_empty() {
            return Err(Error::Degenerate("configuration has no points".into()));
        }
        for p in &points {
            if p.len() != dim {
                return Err(Error::domain(format!("point of length {} in a {dim}-dimensional configuration", p.len())));
            }
            if p.iter().any(|c| !c.is_finite()) {
                return Err(Error::domain("configuration coordinates must be finite"));
            }
        }
        let mut order: Vec<usize> = (0..points.len()).collect();
        order.sort_by(|&i, &j| points[i].partial_cmp(&points[j]).unwrap());
        if let Some(w) = order.windows(2).find(|w| points[w[0]] == points[w[1]]) {
            return Err(Error::Degenerate(format!("points {} and {} coincide", w[0].min(w[1]), w[0].max(w[1]))));
        }
        Ok(PointConfig { dim, points, label })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Vec<f64>] {
        &self.points
    }

    pub fn label(&self) -> &ConfigLabel {
        &self.label
    }

    pub fn distance(&self, i: usize, j: usize) -> f64 {
        euclid(&self.points[i], &self.points[j])
    }

    pub fn diameter(&self) -> f64 {
        let n = self.len();
        let mut d: f64 = 0.0;
        for i in 0..n {
            for j in i + 1..n {
                d = d.max(self.distance(i, j));
            }
        }
        d
    }

    /// Copies with extra zero coordinates appended, so a configuration in
    /// ℝ^d can be read as one in ℝ^{d'} for d' ≥ d.
    pub fn embed(&self, dim: usize) -> Result<Self> {
        if dim < self.dim {
            return Err(Error::domain(format!(
                "cannot embed a {}-dimensional configuration in {dim} dimensions",
                self.dim
            )));
        }
        let points = self
            .points
            .iter()
            .map(|p| {
                let mut q = p.clone();
                q.resize(dim, 0.0);
                q
            })
            .collect();
        Ok(PointConfig { dim, points, label: self.label.clone() })
    }
}

fn euclid(a: &[f64], b: &[f64]) -> f64 {
    // scaled accumulation avoids overflow for very large spacings
    let scale = a.iter().zip(b).fold(0.0f64, |m, (x, y)| m.max((x - y).abs()));
    if scale == 0.0 {
        return 0.0;
    }
    let s: f64 = a.iter().zip(b).map(|(x, y)| ((x - y) / scale).powi(2)).sum();
    scale * s.sqrt()
}

/// Regular simplex with m+2 vertices and edge `t`, plus its centroid, in ℝ^{m+1}.
///
/// The vertices are the standard basis vectors of ℝ^{m+2} written in the
/// Helmert basis of the hyperplane orthogonal to (1, ..., 1); the centroid is
/// the origin and is listed last.
pub fn simplex_with_center(m: usize, t: f64) -> Result<PointConfig> {
    if m == 0 {
        return Err(Error::domain("simplex witness needs m >= 1"));
    }
    if !(t > 0.0) || !t.is_finite() {
        return Err(Error::domain(format!("simplex edge must be positive, got {t}")));
    }
    let p = m + 2;
    let scale = t / std::f64::consts::SQRT_2;
    let mut points = Vec::with_capacity(p + 1);
    for i in 0..p {
        // coordinate k of e_i in the Helmert basis u_k = (1,..,1,-k,0,..)/sqrt(k(k+1))
        let coords = (1..p)
            .map(|k| {
                let norm = ((k * (k + 1)) as f64).sqrt();
                let c = match i.cmp(&k) {
                    std::cmp::Ordering::Less => 1.0,
                    std::cmp::Ordering::Equal => -(k as f64),
                    std::cmp::Ordering::Greater => 0.0,
                };
                scale * c / norm
            })
            .collect();
        points.push(coords);
    }
    points.push(vec![0.0; p - 1]);
    PointConfig::new(p - 1, points, ConfigLabel::SimplexCenter { m, t })
}

/// Circumradius ratio ρ_m = sqrt((m+1) / (2(m+2))) of the simplex witness.
pub fn simplex_rho(m: usize) -> f64 {
    ((m + 1) as f64 / (2.0 * (m + 2) as f64)).sqrt()
}

/// Vertices r (cos 2πk/m, sin 2πk/m), k = 0..m.
pub fn regular_polygon(m: usize, r: f64) -> Result<PointConfig> {
    if m < 3 {
        return Err(Error::domain(format!("polygon needs m >= 3, got {m}")));
    }
    if !(r > 0.0) || !r.is_finite() {
        return Err(Error::domain(format!("polygon radius must be positive, got {r}")));
    }
    let points = (0..m)
        .map(|k| {
            let (s, c) = (2.0 * PI * k as f64 / m as f64).sin_cos();
            vec![r * c, r * s]
        })
        .collect();
    PointConfig::new(2, points, ConfigLabel::Polygon { m, r })
}

/// Chord |y_j - y_k| = 2r sin(π|j-k|/m) of the regular m-gon.
pub fn polygon_chord(m: usize, r: f64, gap: usize) -> f64 {
    2.0 * r * (PI * (gap % m) as f64 / m as f64).sin()
}

/// Union of translates of `base` by `spacing_j` along `axis`.
pub fn shifted_union(base: &PointConfig, spacings: &[f64], axis: usize) -> Result<PointConfig> {
    if axis >= base.dim {
        return Err(Error::domain(format!("axis {axis} out of range for dimension {}", base.dim)));
    }
    if spacings.first() != Some(&0.0) {
        return Err(Error::domain("spacings must start at 0"));
    }
    if spacings.iter().any(|s| !s.is_finite()) || spacings.windows(2).any(|w| !(w[1] > w[0])) {
        return Err(Error::domain("spacings must be finite and strictly increasing"));
    }
    let mut points = Vec::with_capacity(base.len() * spacings.len());
    for &w in spacings {
        for p in &base.points {
            let mut q = p.clone();
            q[axis] += w;
            points.push(q);
        }
    }
    let label = ConfigLabel::Shifted { base: Box::new(base.label.clone()), spacings: spacings.to_vec(), axis };
    PointConfig::new(base.dim, points, label)
}

/// `count` points uniform in [0, side]^dim from a seeded ChaCha8 stream.
pub fn random_config(dim: usize, count: usize, seed: u64, side: f64) -> Result<PointConfig> {
    if dim == 0 || count == 0 {
        return Err(Error::domain("random configuration needs dim >= 1 and count >= 1"));
    }
    if !(side > 0.0) || !side.is_finite() {
        return Err(Error::domain(format!("random box side must be positive, got {side}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let points = (0..count).map(|_| (0..dim).map(|_| rng.random_range(0.0..side)).collect()).collect();
    PointConfig::new(dim, points, ConfigLabel::Random { dim, count, seed, side })
}

pub fn distance_matrix(config: &PointConfig) -> SymmetricMatrix {
    SymmetricMatrix::from_fn(config.len(), |i, j| if i == j { 0.0 } else { config.distance(i, j) })
}
