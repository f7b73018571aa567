//! Floating-point checks of the root-of-unity machinery: the DFT inversion
//! pair, the inverse of the Vandermonde matrix `[zeta^(jk)]`, and the
//! factorization `Q = U C V` of the fractional-part matrix.
//!
//! These objects live outside the Laurent ring, so they are validated
//! numerically with residual bounds rather than exactly.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::det_bareiss;
use crate::ntheory::{gcd, mod_nonneg};
use crate::qmatrix::{build_laurent, check_odd, MatrixKind, MatrixSpec};
use crate::verify::ReportRecord;

/// Base absolute tolerance for orders up to 15 at moderate `q0`.
pub const BASE_TOLERANCE: f64 = 1e-9;

/// Tolerance policy: [`BASE_TOLERANCE`], scaled linearly with `n / 15` and
/// with the largest entry magnitude when those exceed one.
pub fn default_tolerance(n: usize, max_entry: f64) -> f64 {
    BASE_TOLERANCE * (n as f64 / 15.0).max(1.0) * max_entry.max(1.0)
}

/// `zeta^k` for `zeta = exp(2 pi i / n)`, with `k` reduced modulo `n` first.
pub fn zeta_pow(k: i64, n: usize) -> Complex64 {
    let r = mod_nonneg(k, n as i64) as f64;
    Complex64::from_polar(1.0, 2.0 * PI * r / n as f64)
}

/// Dense complex matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    n: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    /// Builds from `f(j, k)` with 1-based indices.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for j in 1..=n {
            for k in 1..=n {
                data.push(f(j, k));
            }
        }
        ComplexMatrix { n, data }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |j, k| if j == k { Complex64::new(1.0, 0.0) } else { Complex64::new(0.0, 0.0) })
    }

    pub fn diagonal(d: &[Complex64]) -> Self {
        Self::from_fn(d.len(), |j, k| if j == k { d[j - 1] } else { Complex64::new(0.0, 0.0) })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Entry at 0-based `(row, col)`.
    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.data[row * self.n + col]
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }

    pub fn mul(&self, other: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.n, other.n, "order mismatch");
        let n = self.n;
        ComplexMatrix::from_fn(n, |j, k| {
            (0..n).map(|m| self.get(j - 1, m) * other.get(m, k - 1)).sum()
        })
    }

    pub fn scale(&self, c: Complex64) -> ComplexMatrix {
        ComplexMatrix {
            n: self.n,
            data: self.data.iter().map(|z| z * c).collect(),
        }
    }

    /// Max-norm of `self - other`.
    pub fn max_abs_diff(&self, other: &ComplexMatrix) -> f64 {
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Determinant by LU decomposition with partial pivoting.
    pub fn det(&self) -> Complex64 {
        let n = self.n;
        let mut a = self.data.clone();
        let mut det = Complex64::new(1.0, 0.0);
        for k in 0..n {
            let p = (k..n)
                .max_by(|&x, &y| a[x * n + k].norm().total_cmp(&a[y * n + k].norm()))
                .unwrap();
            if a[p * n + k].norm() == 0.0 {
                return Complex64::new(0.0, 0.0);
            }
            if p != k {
                for c in 0..n {
                    a.swap(p * n + c, k * n + c);
                }
                det = -det;
            }
            let pivot = a[k * n + k];
            det *= pivot;
            for r in k + 1..n {
                let factor = a[r * n + k] / pivot;
                if factor.norm() == 0.0 {
                    continue;
                }
                for c in k..n {
                    let v = a[k * n + c];
                    a[r * n + c] -= factor * v;
                }
            }
        }
        det
    }
}

/// Outcome of one numeric check.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResidualReport {
    pub check: String,
    pub n: usize,
    pub a: i64,
    pub q0: Option<f64>,
    pub residual: f64,
    pub tolerance: f64,
    pub pass: bool,
    pub elapsed_ms: f64,
}

impl ResidualReport {
    fn new(check: &str, n: usize, a: i64, q0: Option<f64>, residual: f64, tolerance: f64) -> Self {
        ResidualReport {
            check: check.to_string(),
            n,
            a,
            q0,
            residual,
            tolerance,
            pass: residual.is_finite() && residual <= tolerance,
            elapsed_ms: 0.0,
        }
    }

    fn timed(mut self, start: std::time::Instant) -> Self {
        self.elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
        self
    }

    pub fn to_record(&self) -> ReportRecord {
        let lhs = match self.q0 {
            Some(q0) => format!("residual={:.3e} q0={q0}", self.residual),
            None => format!("residual={:.3e}", self.residual),
        };
        ReportRecord {
            identity: self.check.clone(),
            a: self.a,
            n: self.n as i64,
            pass: self.pass,
            skipped: false,
            lhs,
            rhs: format!("tol={:.1e}", self.tolerance),
            elapsed_ms: self.elapsed_ms,
            numeric: true,
        }
    }
}

/// Forward sum `a_m = sum_k b_k zeta^(km)` followed by the inverse
/// `b'_m = (1/n) sum_k a_k zeta^(-km)`; the residual is `max |b - b'|`.
pub fn dft_roundtrip(b: &[Complex64], tolerance: f64) -> ResidualReport {
    let start = std::time::Instant::now();
    let n = b.len();
    let forward: Vec<Complex64> = (1..=n as i64)
        .map(|m| {
            (1..=n as i64)
                .map(|k| b[k as usize - 1] * zeta_pow(k * m, n))
                .sum()
        })
        .collect();
    let back: Vec<Complex64> = (1..=n as i64)
        .map(|m| {
            (1..=n as i64)
                .map(|k| forward[k as usize - 1] * zeta_pow(-k * m, n))
                .sum::<Complex64>()
                / n as f64
        })
        .collect();
    let residual = b
        .iter()
        .zip(&back)
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max);
    ResidualReport::new("DFT_ROUNDTRIP", n, 0, None, residual, tolerance).timed(start)
}

/// `W = [zeta^(jk)]`.
pub fn vandermonde(n: usize) -> ComplexMatrix {
    ComplexMatrix::from_fn(n, |j, k| zeta_pow((j * k) as i64, n))
}

/// Max-norm distance of `W (1/n) W*` from the identity, `W* = [zeta^(-jk)]`.
pub fn vandermonde_inverse_check(n: usize, tolerance: f64) -> ResidualReport {
    let start = std::time::Instant::now();
    let w = vandermonde(n);
    let w_star = ComplexMatrix::from_fn(n, |j, k| zeta_pow(-((j * k) as i64), n));
    let product = w.mul(&w_star.scale(Complex64::new(1.0 / n as f64, 0.0)));
    let residual = product.max_abs_diff(&ComplexMatrix::identity(n));
    ResidualReport::new("VANDERMONDE_INVERSE", n, 0, None, residual, tolerance).timed(start)
}

fn check_q0(q0: f64) -> Result<()> {
    if !(q0.is_finite() && q0 > 0.0 && q0 != 1.0) {
        return Err(Error::BadQ(q0));
    }
    Ok(())
}

/// `Q = [q0^(-{(aj - (a+1)k)/n})]`.
pub fn q_matrix_numeric(a: i64, n: usize, q0: f64) -> ComplexMatrix {
    let ni = n as i64;
    ComplexMatrix::from_fn(n, |j, k| {
        let r = mod_nonneg(a * j as i64 - (a + 1) * k as i64, ni);
        Complex64::new(q0.powf(-(r as f64) / n as f64), 0.0)
    })
}

/// `c_m = (1 - q0^-1) / (n (1 - q0^(-1/n) zeta^-m))` for `m = 1..n`.
pub fn c_coefficients(n: usize, q0: f64) -> Vec<Complex64> {
    let num = Complex64::new(1.0 - 1.0 / q0, 0.0);
    let root = q0.powf(-1.0 / n as f64);
    (1..=n as i64)
        .map(|m| num / (n as f64 * (Complex64::new(1.0, 0.0) - root * zeta_pow(-m, n))))
        .collect()
}

/// The three factors `(U, C, V)` with `U = [zeta^(ajk)]`,
/// `C = diag(c_1..c_n)` and `V = [zeta^(-(a+1)jk)]`.
pub fn ucv_factors(a: i64, n: usize, q0: f64) -> (ComplexMatrix, ComplexMatrix, ComplexMatrix) {
    let u = ComplexMatrix::from_fn(n, |j, k| zeta_pow(a * (j * k) as i64, n));
    let v = ComplexMatrix::from_fn(n, |j, k| zeta_pow(-(a + 1) * (j * k) as i64, n));
    let c = ComplexMatrix::diagonal(&c_coefficients(n, q0));
    (u, c, v)
}

/// Residual of `Q - U C V`. When `gcd(a, n) > 1` (resp. `gcd(a+1, n) > 1`)
/// the determinant of `U` (resp. `V`), normalized by the Hadamard bound
/// `n^(n/2)`, must also vanish within tolerance; the reported residual is
/// the largest of these quantities.
pub fn ucv_factorization_check(a: i64, n: usize, q0: f64, tolerance: f64) -> Result<ResidualReport> {
    let start = std::time::Instant::now();
    check_odd(n as i64)?;
    check_q0(q0)?;
    let q = q_matrix_numeric(a, n, q0);
    let (u, c, v) = ucv_factors(a, n, q0);
    let product = u.mul(&c).mul(&v);
    if !product.is_finite() {
        return Err(Error::Internal("non-finite entries in U C V".into()));
    }
    let mut residual = q.max_abs_diff(&product);
    let hadamard = (n as f64).powf(n as f64 / 2.0);
    let ni = n as i64;
    if gcd(a, ni) > 1 {
        residual = residual.max(u.det().norm() / hadamard);
    }
    if gcd(a + 1, ni) > 1 {
        residual = residual.max(v.det().norm() / hadamard);
    }
    Ok(ResidualReport::new("UCV_FACTORIZATION", n, a, Some(q0), residual, tolerance).timed(start))
}

/// Relative error between the numeric determinant of `Q` at `q0` and the
/// exact determinant from the Laurent pipeline evaluated at
/// `t = q0^(1/n)`. When the exact value is zero the absolute error is used.
pub fn det_q_consistency(a: i64, n: usize, q0: f64, tolerance: f64) -> Result<ResidualReport> {
    let start = std::time::Instant::now();
    check_q0(q0)?;
    let spec = MatrixSpec::new(MatrixKind::QFractional, a, n as i64)?;
    let exact = det_bareiss(&build_laurent(&spec)?)?;
    // The expanded closed form cancels catastrophically in plain floating
    // point, so it is evaluated exactly at the binary value of t0.
    let t0 = q0.powf(1.0 / n as f64);
    let exact_value = exact.eval_f64_exact(t0)?;
    let numeric = q_matrix_numeric(a, n, q0).det();
    let err = (numeric - Complex64::new(exact_value, 0.0)).norm();
    let residual = if exact.is_zero() {
        err
    } else {
        err / exact_value.abs()
    };
    Ok(ResidualReport::new("NUMERIC_DETQ", n, a, Some(q0), residual, tolerance).timed(start))
}

/// The numeric checks a sweep can run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum NumericCheck {
    DftRoundtrip,
    VandermondeInverse,
    UcvFactorization,
    NumericDetq,
}

impl NumericCheck {
    pub const ALL: [NumericCheck; 4] = [
        NumericCheck::DftRoundtrip,
        NumericCheck::VandermondeInverse,
        NumericCheck::UcvFactorization,
        NumericCheck::NumericDetq,
    ];

    pub fn name(self) -> &'static str {
        match self {
            NumericCheck::DftRoundtrip => "DFT_ROUNDTRIP",
            NumericCheck::VandermondeInverse => "VANDERMONDE_INVERSE",
            NumericCheck::UcvFactorization => "UCV_FACTORIZATION",
            NumericCheck::NumericDetq => "NUMERIC_DETQ",
        }
    }

    /// Whether the check depends on `a` (the others run once per `n`).
    pub fn uses_a(self) -> bool {
        matches!(self, NumericCheck::UcvFactorization | NumericCheck::NumericDetq)
    }
}

impl std::fmt::Display for NumericCheck {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for NumericCheck {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.to_ascii_uppercase().replace('-', "_");
        NumericCheck::ALL
            .into_iter()
            .find(|c| c.name() == norm)
            .ok_or_else(|| Error::BadSpec(format!("unknown numeric check {s:?}")))
    }
}

/// Sample points used by sweeps.
pub const SWEEP_Q0: [f64; 3] = [2.0, 1.5, 10.0];

/// Relative tolerance for [`det_q_consistency`].
pub const DETQ_TOLERANCE: f64 = 1e-8;

/// Deterministic test vector for the DFT round trip.
pub fn sample_vector(n: usize) -> Vec<Complex64> {
    (1..=n)
        .map(|k| Complex64::new((k as f64).sin(), ((k * k) as f64).cos()))
        .collect()
}

/// Runs `checks` over every odd `n` in `n_values` and every `a` in
/// `a_values` at each point of [`SWEEP_Q0`]. `tolerance` overrides the
/// default policy. Output is ordered by `(check, n, a, q0)`.
pub fn run_numeric_sweep(
    a_values: &[i64],
    n_values: &[i64],
    checks: &[NumericCheck],
    tolerance: Option<f64>,
) -> Result<Vec<ResidualReport>> {
    for &n in n_values {
        check_odd(n)?;
    }
    if let Some(t) = tolerance {
        if !(t > 0.0 && t.is_finite()) {
            return Err(Error::BadSpec(format!("tolerance must be positive, got {t}")));
        }
    }
    let mut out = Vec::new();
    let mut checks = checks.to_vec();
    checks.sort();
    checks.dedup();
    for check in checks {
        for &n in n_values {
            let nu = n as usize;
            let tol = tolerance.unwrap_or_else(|| default_tolerance(nu, 1.0));
            match check {
                NumericCheck::DftRoundtrip => out.push(dft_roundtrip(&sample_vector(nu), tol)),
                NumericCheck::VandermondeInverse => out.push(vandermonde_inverse_check(nu, tol)),
                NumericCheck::UcvFactorization | NumericCheck::NumericDetq => {
                    for &a in a_values {
                        for q0 in SWEEP_Q0 {
                            out.push(match check {
                                NumericCheck::UcvFactorization => {
                                    ucv_factorization_check(a, nu, q0, tol)?
                                }
                                _ => det_q_consistency(
                                    a,
                                    nu,
                                    q0,
                                    tolerance.unwrap_or(DETQ_TOLERANCE),
                                )?,
                            });
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}
