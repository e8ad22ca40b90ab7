//! Schoenberg matrices, a cyclic Jacobi eigensolver, inertia counts and the
//! closed-form spectra used by the witnesses.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{simplex_rho, simplex_with_center, PointConfig};
use crate::kernels::RadialKernel;
use crate::quadrature::QuadratureSpec;

/// Dense real symmetric matrix, stored in full row-major order.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricMatrix {
    n: usize,
    data: Vec<f64>,
}

impl SymmetricMatrix {
    /// Builds from the upper triangle of `f`; the lower triangle mirrors it.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut data = vec![0.0; n * n];
        for i in 0..n {
            for j in i..n {
                let v = f(i, j);
                data[i * n + j] = v;
                data[j * n + i] = v;
            }
        }
        SymmetricMatrix { n, data }
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::domain("matrix rows must form a square array"));
        }
        for i in 0..n {
            for j in 0..i {
                if rows[i][j] != rows[j][i] {
                    return Err(Error::domain(format!("matrix is not symmetric at ({i}, {j})")));
                }
            }
        }
        Ok(SymmetricMatrix { n, data: rows.concat() })
    }

    pub fn identity(n: usize) -> Self {
        SymmetricMatrix::from_fn(n, |i, j| if i == j { 1.0 } else { 0.0 })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|v| v * v).sum::<f64>().sqrt()
    }

    /// Maximum absolute row sum.
    pub fn norm_inf(&self) -> f64 {
        (0..self.n).map(|i| self.row(i).iter().map(|v| v.abs()).sum::<f64>()).fold(0.0, f64::max)
    }

    /// `# rpd-lab matrix v1, order=N` followed by one comma-separated row per line.
    pub fn to_csv(&self) -> String {
        let mut out = format!("# rpd-lab matrix v1, order={}\n", self.n);
        for i in 0..self.n {
            let row: Vec<String> = self.row(i).iter().map(|v| format!("{v:.16e}")).collect();
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }
}

/// Signed eigenvalue counts relative to the threshold ±tol.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Inertia {
    pub n_neg: usize,
    pub n_zero: usize,
    pub n_pos: usize,
    #[serde(skip)]
    tol_bits: u64,
}

impl Inertia {
    pub fn from_eigenvalues(eigs: &[f64], tol: f64) -> Self {
        let n_neg = eigs.iter().filter(|&&l| l < -tol).count();
        let n_pos = eigs.iter().filter(|&&l| l > tol).count();
        Inertia { n_neg, n_zero: eigs.len() - n_neg - n_pos, n_pos, tol_bits: tol.to_bits() }
    }

    pub fn tol(&self) -> f64 {
        f64::from_bits(self.tol_bits)
    }
}

const MAX_SWEEPS: usize = 100;

/// All eigenvalues in ascending order by cyclic Jacobi rotations, iterated
/// until the off-diagonal Frobenius norm is at most 1e-14 ‖A‖_F.
pub fn sym_eigenvalues(a: &SymmetricMatrix) -> Result<Vec<f64>> {
    let n = a.n;
    let mut m = a.data.clone();
    let norm = a.frobenius_norm();
    let target = 1e-14 * norm;
    let off_norm = |m: &[f64]| {
        let mut s = 0.0;
        for i in 0..n {
            for j in i + 1..n {
                s += m[i * n + j] * m[i * n + j];
            }
        }
        (2.0 * s).sqrt()
    };
    let mut off = off_norm(&m);
    let mut sweeps = 0;
    while off > target {
        if sweeps == MAX_SWEEPS {
            return Err(Error::Numerical(format!(
                "Jacobi eigensolver did not converge in {MAX_SWEEPS} sweeps (off-diagonal norm {off:e})"
            )));
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = m[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = m[p * n + p];
                let aqq = m[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + theta.hypot(1.0));
                let c = 1.0 / t.hypot(1.0);
                let s = t * c;
                for k in 0..n {
                    let akp = m[k * n + p];
                    let akq = m[k * n + q];
                    m[k * n + p] = c * akp - s * akq;
                    m[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = m[p * n + k];
                    let aqk = m[q * n + k];
                    m[p * n + k] = c * apk - s * aqk;
                    m[q * n + k] = s * apk + c * aqk;
                }
                m[p * n + p] = app - t * apq;
                m[q * n + q] = aqq + t * apq;
                m[p * n + q] = 0.0;
                m[q * n + p] = 0.0;
            }
        }
        off = off_norm(&m);
    }
    let mut eigs: Vec<f64> = (0..n).map(|i| m[i * n + i]).collect();
    eigs.sort_by(|x, y| x.partial_cmp(y).unwrap());
    Ok(eigs)
}

/// 1e-9 max(1, ‖A‖_∞).
pub fn default_tol(a: &SymmetricMatrix) -> f64 {
    1e-9 * a.norm_inf().max(1.0)
}

pub fn inertia_of(a: &SymmetricMatrix, tol: f64) -> Result<Inertia> {
    if !(tol > 0.0) || !tol.is_finite() {
        return Err(Error::domain(format!("inertia tolerance must be positive, got {tol}")));
    }
    Ok(Inertia::from_eigenvalues(&sym_eigenvalues(a)?, tol))
}

/// Entries f(|x_i - x_j|).
pub fn schoenberg_matrix(k: &RadialKernel, x: &PointConfig) -> Result<SymmetricMatrix> {
    schoenberg_matrix_with(k, x, &QuadratureSpec::default())
}

pub fn schoenberg_matrix_with(k: &RadialKernel, x: &PointConfig, spec: &QuadratureSpec) -> Result<SymmetricMatrix> {
    let n = x.len();
    let rows: Vec<Vec<f64>> = (0..n)
        .into_par_iter()
        .map(|i| {
            (i..n).map(|j| if i == j { k.eval_with(0.0, spec) } else { k.eval_with(x.distance(i, j), spec) }).collect()
        })
        .collect::<Result<_>>()?;
    Ok(SymmetricMatrix::from_fn(n, |i, j| rows[i][j - i]))
}

/// Number of eigenvalues of the Schoenberg matrix below -tol; `None` uses
/// [`default_tol`].
pub fn kappa_minus(k: &RadialKernel, x: &PointConfig, tol: Option<f64>) -> Result<usize> {
    let a = schoenberg_matrix(k, x)?;
    let tol = tol.unwrap_or_else(|| default_tol(&a));
    Ok(inertia_of(&a, tol)?.n_neg)
}

/// λ_k = Σ_j a_j cos(2πkj/m), k = 0..m, for an evenly symmetric first row.
pub fn circulant_eigs(first_row: &[f64]) -> Result<Vec<f64>> {
    let m = first_row.len();
    if m == 0 {
        return Err(Error::domain("circulant row is empty"));
    }
    let scale = first_row.iter().fold(0.0f64, |s, v| s.max(v.abs()));
    for j in 1..m {
        if (first_row[j] - first_row[m - j]).abs() > 1e-12 * scale {
            return Err(Error::domain(format!("circulant row is not even-symmetric at index {j}")));
        }
    }
    let cosines: Vec<f64> = (0..m).map(|i| (2.0 * std::f64::consts::PI * i as f64 / m as f64).cos()).collect();
    Ok((0..m).map(|k| (0..m).map(|j| first_row[j] * cosines[(k * j) % m]).sum()).collect())
}

/// Circulant matrix with the given first row.
pub fn circulant_matrix(first_row: &[f64]) -> Result<SymmetricMatrix> {
    let m = first_row.len();
    let rows: Vec<Vec<f64>> = (0..m).map(|i| (0..m).map(|j| first_row[(j + m - i) % m]).collect()).collect();
    SymmetricMatrix::from_rows(&rows)
}

/// Smallest eigenvalue candidate of the simplex witness matrix.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SimplexLambda {
    pub lambda: f64,
    pub has_negative: bool,
    /// f(t), the vertex-vertex entry.
    pub a: f64,
    /// f(ρ_m t), the vertex-centre entry.
    pub b: f64,
}

/// λ = 1 + (m+1) f(t) - (m+2) f(ρ_m t)².
pub fn simplex_lambda(m: usize, k: &RadialKernel, t: f64) -> Result<SimplexLambda> {
    if m == 0 {
        return Err(Error::domain("simplex witness needs m >= 1"));
    }
    if !(t > 0.0) || !t.is_finite() {
        return Err(Error::domain(format!("simplex edge must be positive, got {t}")));
    }
    let a = k.eval(t)?;
    let b = k.eval(simplex_rho(m) * t)?;
    let mf = m as f64;
    let lambda = 1.0 + (mf + 1.0) * a - (mf + 2.0) * b * b;
    Ok(SimplexLambda { lambda, has_negative: a > 1.0 || lambda < 0.0, a, b })
}

/// Schoenberg matrix of the simplex witness; its inertia matches
/// [`simplex_lambda`] through the block factorisation.
pub fn simplex_matrix(m: usize, k: &RadialKernel, t: f64) -> Result<SymmetricMatrix> {
    schoenberg_matrix(k, &simplex_with_center(m, t)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_symmetric(n: usize, seed: u64) -> SymmetricMatrix {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        SymmetricMatrix::from_fn(n, |_, _| rng.random_range(-1.0..1.0))
    }

    #[test]
    fn small_spectra() {
        assert_eq!(sym_eigenvalues(&SymmetricMatrix::identity(5)).unwrap(), vec![1.0; 5]);
        let ones = SymmetricMatrix::from_fn(4, |_, _| 1.0);
        let e = sym_eigenvalues(&ones).unwrap();
        for (got, want) in e.iter().zip([0.0, 0.0, 0.0, 4.0]) {
            assert!((got - want).abs() < 1e-14);
        }
        let d = SymmetricMatrix::from_rows(&[vec![1.0, 0.0, 0.0], vec![0.0, -2.0, 0.0], vec![0.0, 0.0, 3.0]]).unwrap();
        assert_eq!(sym_eigenvalues(&d).unwrap(), vec![-2.0, 1.0, 3.0]);
    }

    #[test]
    fn inertia_examples() {
        let ones = SymmetricMatrix::from_fn(4, |_, _| 1.0);
        let i = inertia_of(&ones, 1e-10).unwrap();
        assert_eq!((i.n_neg, i.n_zero, i.n_pos), (0, 3, 1));
        let i = inertia_of(&SymmetricMatrix::identity(6), 1e-10).unwrap();
        assert_eq!((i.n_neg, i.n_zero, i.n_pos), (0, 0, 6));
        assert!(inertia_of(&ones, 0.0).is_err());

        // block matrix with p = 4, k = 1, a = 0.9, b = 0.99
        let (p, a, b) = (4, 0.9, 0.99);
        let s = SymmetricMatrix::from_fn(p + 1, |i, j| match (i == j, i == p || j == p) {
            (true, _) => 1.0,
            (false, true) => b,
            (false, false) => a,
        });
        let lambda = 1.0 + 3.0 * a - 4.0 * b * b;
        assert!((lambda + 0.2204).abs() < 1e-12);
        assert!(inertia_of(&s, 1e-10).unwrap().n_neg >= 1);
    }

    #[test]
    fn rejects_asymmetric_input() {
        assert!(SymmetricMatrix::from_rows(&[vec![1.0, 2.0], vec![2.5, 1.0]]).is_err());
        assert!(circulant_eigs(&[1.0, 0.3, 0.2, 0.1]).is_err());
    }

    #[test]
    fn circulant_examples() {
        assert_eq!(circulant_eigs(&[1.0, 0.0, 0.0, 0.0]).unwrap(), vec![1.0; 4]);
        let mut e = circulant_eigs(&[1.0, 0.5, 0.2, 0.5]).unwrap();
        e.sort_by(|a, b| a.partial_cmp(b).unwrap());
        for (got, want) in e.iter().zip([0.2, 0.8, 0.8, 2.2]) {
            assert!((got - want).abs() < 1e-14);
        }
    }

    #[test]
    fn circulant_matches_dense() {
        for &m in &[3usize, 8, 17, 32] {
            let row: Vec<f64> =
                (0..m).map(|j| (2.0 * (std::f64::consts::PI * j.min(m - j) as f64 / m as f64).sin()).cos()).collect();
            let mut closed = circulant_eigs(&row).unwrap();
            closed.sort_by(|a, b| a.partial_cmp(b).unwrap());
            let dense = sym_eigenvalues(&circulant_matrix(&row).unwrap()).unwrap();
            for (x, y) in closed.iter().zip(&dense) {
                assert!((x - y).abs() < 1e-9, "m={m}");
            }
        }
    }

    #[test]
    fn block_inertia_law() {
        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        for _ in 0..20 {
            let p = rng.random_range(2..8usize);
            let k = rng.random_range(1..4usize);
            let a = rng.random_range(-0.5..1.5);
            let b = rng.random_range(-1.0..1.0);
            let n = p + k;
            let s = SymmetricMatrix::from_fn(n, |i, j| match (i < p, j < p) {
                _ if i == j => 1.0,
                (true, true) => a,
                (false, false) => 0.0,
                _ => b,
            });
            let closed = [1.0 - a, 1.0 + (p as f64 - 1.0) * a - (k * p) as f64 * b * b];
            let mult = [p - 1, 1];
            let tol = 1e-9;
            let want: usize = closed.iter().zip(mult).filter(|(l, _)| **l < -tol).map(|(_, c)| c).sum();
            assert_eq!(inertia_of(&s, tol).unwrap().n_neg, want, "p={p} k={k} a={a} b={b}");
        }
    }

    #[test]
    fn csv_header_and_precision() {
        let csv = SymmetricMatrix::identity(2).to_csv();
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("# rpd-lab matrix v1, order=2"));
        assert_eq!(lines.next(), Some("1.0000000000000000e0,0.0000000000000000e0"));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]
        #[test]
        fn trace_and_frobenius(n in 1usize..60, seed in any::<u64>()) {
            let a = random_symmetric(n, seed);
            let e = sym_eigenvalues(&a).unwrap();
            let tr: f64 = e.iter().sum();
            let fr: f64 = e.iter().map(|l| l * l).sum();
            let scale = a.frobenius_norm().powi(2);
            prop_assert!((tr - a.trace()).abs() <= 1e-12 * scale.sqrt() * (n as f64).sqrt());
            prop_assert!((fr - scale).abs() <= 1e-12 * scale);
            prop_assert!(e.windows(2).all(|w| w[0] <= w[1]));
        }
    }
}
