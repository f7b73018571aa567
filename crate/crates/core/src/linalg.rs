//! Exact dense linear algebra over an integral domain with exact division.

use crate::error::{Error, Result};
use crate::exactring::{LaurentPoly, Rational, Ring};
use crate::matrix::{RingMatrix, Variable};

/// Largest order accepted by the cofactor-expansion routines.
pub const COFACTOR_LIMIT: usize = 8;

/// Default evaluation points for [`rank_by_evaluation`].
pub fn default_sample_points() -> Vec<Rational> {
    vec![
        Rational::from_integer(2.into()),
        Rational::from_integer(3.into()),
        Rational::new(5.into(), 2.into()),
    ]
}

/// Diagnostics of one fraction-free elimination.
#[derive(Debug, Clone, PartialEq)]
pub struct EliminationTrace<R> {
    /// `(row, col)` of each pivot, 0-based, after swapping.
    pub pivots: Vec<(usize, usize)>,
    pub swaps: usize,
    /// Successive pivot values; entry `k` divided every update of step `k + 1`.
    pub denominators: Vec<R>,
    pub singular: bool,
}

fn internal(e: Error) -> Error {
    match e {
        Error::NonExactDivision => {
            Error::Internal("non-exact division during fraction-free elimination".into())
        }
        other => other,
    }
}

/// Determinant by fraction-free Bareiss elimination, pivoting on the first
/// nonzero entry of each column.
pub fn det_bareiss<R: Ring>(m: &RingMatrix<R>) -> Result<R> {
    det_bareiss_traced(m).map(|(d, _)| d)
}

pub fn det_bareiss_traced<R: Ring>(m: &RingMatrix<R>) -> Result<(R, EliminationTrace<R>)> {
    let n = m.n();
    let mut a = m.rows();
    let mut trace = EliminationTrace {
        pivots: Vec::with_capacity(n),
        swaps: 0,
        denominators: Vec::with_capacity(n),
        singular: false,
    };
    let mut prev = R::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !a[r][k].is_zero()) else {
            trace.singular = true;
            return Ok((R::zero(), trace));
        };
        if p != k {
            a.swap(p, k);
            trace.swaps += 1;
        }
        trace.pivots.push((k, k));
        let (top, rest) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        let pivot = &pivot_row[k];
        for row in rest.iter_mut() {
            let lead = row[k].clone();
            for j in k + 1..n {
                let mut num = pivot.times(&row[j]);
                if !lead.is_zero() && !pivot_row[j].is_zero() {
                    num = num.minus(&lead.times(&pivot_row[j]));
                }
                row[j] = num.div_exact(&prev).map_err(internal)?;
            }
            row[k] = R::zero();
        }
        prev = a[k][k].clone();
        trace.denominators.push(prev.clone());
    }
    let det = if n == 0 { R::one() } else { a[n - 1][n - 1].clone() };
    let det = if trace.swaps % 2 == 1 { det.negate() } else { det };
    Ok((det, trace))
}

/// Determinant by first-row cofactor expansion, for orders up to
/// [`COFACTOR_LIMIT`].
pub fn det_cofactor<R: Ring>(m: &RingMatrix<R>) -> Result<R> {
    if m.n() > COFACTOR_LIMIT {
        return Err(Error::TooLarge(m.n(), COFACTOR_LIMIT));
    }
    let rows: Vec<usize> = (0..m.n()).collect();
    let cols: Vec<usize> = (0..m.n()).collect();
    Ok(cofactor_expand(m, &rows, &cols))
}

fn cofactor_expand<R: Ring>(m: &RingMatrix<R>, rows: &[usize], cols: &[usize]) -> R {
    match rows.len() {
        0 => R::one(),
        1 => m.get(rows[0], cols[0]).clone(),
        _ => {
            let r = rows[0];
            let mut acc = R::zero();
            for (idx, &c) in cols.iter().enumerate() {
                let entry = m.get(r, c);
                if entry.is_zero() {
                    continue;
                }
                let sub_cols: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
                let term = entry.times(&cofactor_expand(m, &rows[1..], &sub_cols));
                acc = if idx % 2 == 0 {
                    acc.plus(&term)
                } else {
                    acc.minus(&term)
                };
            }
            acc
        }
    }
}

fn minor<R: Ring>(m: &RingMatrix<R>, skip_row: usize, skip_col: usize) -> RingMatrix<R> {
    let n = m.n();
    let entries = (0..n)
        .filter(|&r| r != skip_row)
        .flat_map(|r| {
            (0..n)
                .filter(move |&c| c != skip_col)
                .map(move |c| m.get(r, c).clone())
        })
        .collect();
    RingMatrix::new(n - 1, entries, m.variable()).expect("minor has the right size")
}

fn adjugate_by_minors<R: Ring>(
    m: &RingMatrix<R>,
    det: impl Fn(&RingMatrix<R>) -> Result<R>,
) -> Result<RingMatrix<R>> {
    let n = m.n();
    if n == 1 {
        return Ok(RingMatrix::identity(1, m.variable()));
    }
    let mut out = RingMatrix::zeros(n, m.variable());
    for i in 0..n {
        for j in 0..n {
            let d = det(&minor(m, j, i))?;
            out.set(i, j, if (i + j) % 2 == 0 { d } else { d.negate() });
        }
    }
    Ok(out)
}

/// Adjugate by explicit cofactor expansion of every minor; bounded by
/// [`COFACTOR_LIMIT`].
pub fn adjugate_cofactor<R: Ring>(m: &RingMatrix<R>) -> Result<RingMatrix<R>> {
    if m.n() > COFACTOR_LIMIT {
        return Err(Error::TooLarge(m.n(), COFACTOR_LIMIT));
    }
    adjugate_by_minors(m, det_cofactor)
}

/// Adjugate `adj(M)` with `M adj(M) = det(M) I`.
///
/// Invertible matrices go through fraction-free Gauss-Jordan elimination on
/// `[M | I]`, which ends at `[d I | d M^-1]` with `d = ±det(M)`. Singular
/// matrices fall back to Bareiss determinants of all minors.
pub fn adjugate<R: Ring>(m: &RingMatrix<R>) -> Result<RingMatrix<R>> {
    let n = m.n();
    if n == 0 {
        return Ok(m.clone());
    }
    let width = 2 * n;
    let mut aug: Vec<Vec<R>> = (0..n)
        .map(|r| {
            let mut row = m.row(r).to_vec();
            row.extend((0..n).map(|c| if c == r { R::one() } else { R::zero() }));
            row
        })
        .collect();
    let mut prev = R::one();
    let mut swaps = 0usize;
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !aug[r][k].is_zero()) else {
            return adjugate_by_minors(m, det_bareiss);
        };
        if p != k {
            aug.swap(p, k);
            swaps += 1;
        }
        let pivot_row = aug[k].clone();
        let pivot = &pivot_row[k];
        for (i, row) in aug.iter_mut().enumerate() {
            if i == k {
                continue;
            }
            let lead = row[k].clone();
            for j in 0..width {
                if j == k {
                    continue;
                }
                let mut num = pivot.times(&row[j]);
                if !lead.is_zero() && !pivot_row[j].is_zero() {
                    num = num.minus(&lead.times(&pivot_row[j]));
                }
                row[j] = num.div_exact(&prev).map_err(internal)?;
            }
            row[k] = R::zero();
        }
        prev = pivot.clone();
    }
    let entries = aug
        .into_iter()
        .flat_map(|row| row.into_iter().skip(n))
        .map(|e| if swaps % 2 == 1 { e.negate() } else { e })
        .collect();
    RingMatrix::new(n, entries, m.variable())
}

/// `1^T adj(M) 1`, the sum of all adjugate entries.
pub fn grand_adjugate_sum<R: Ring>(m: &RingMatrix<R>) -> Result<R> {
    Ok(adjugate(m)?.grand_sum())
}

/// Rank of a rational matrix by exact Gaussian elimination.
pub fn rank_rational(m: &RingMatrix<Rational>) -> usize {
    let n = m.n();
    let mut a = m.rows();
    let mut rank = 0;
    for col in 0..n {
        let Some(p) = (rank..n).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(p, rank);
        let pivot = a[rank][col].clone();
        let pivot_row = a[rank].clone();
        for row in a.iter_mut().skip(rank + 1) {
            if row[col].is_zero() {
                continue;
            }
            let factor = &row[col] / &pivot;
            for c in col..n {
                row[c] = &row[c] - &(&factor * &pivot_row[c]);
            }
        }
        rank += 1;
    }
    rank
}

/// Rank of a Laurent matrix, measured as the maximum rank over
/// specializations at the given nonzero rational points.
///
/// This never exceeds the rank over the function field and equals it for
/// all but finitely many points.
pub fn rank_by_evaluation(m: &RingMatrix<LaurentPoly>, points: &[Rational]) -> Result<usize> {
    if points.len() < 3 {
        return Err(Error::TooFewPoints(points.len()));
    }
    let mut best = 0;
    for p in points {
        if p == &Rational::from_integer(0.into()) {
            return Err(Error::ZeroPoint);
        }
        let evaluated = m.try_map(|e| e.eval(p))?;
        best = best.max(rank_rational(&evaluated));
    }
    Ok(best)
}

/// Both sides of the rank-one update formula
/// `det(M + u v^T) = det(M) + v^T adj(M) u`.
#[derive(Debug, Clone, PartialEq)]
pub struct RankOneUpdate<R> {
    /// `det(M) + v^T adj(M) u`
    pub via_adjugate: R,
    /// `det(M + u v^T)` computed directly
    pub direct: R,
}

impl<R: Ring> RankOneUpdate<R> {
    pub fn agrees(&self) -> bool {
        self.via_adjugate == self.direct
    }
}

pub fn det_rank_one_update<R: Ring>(
    m: &RingMatrix<R>,
    u: &[R],
    v: &[R],
) -> Result<RankOneUpdate<R>> {
    let n = m.n();
    if u.len() != n || v.len() != n {
        return Err(Error::DimensionMismatch(format!(
            "update vectors of lengths {} and {} for order {n}",
            u.len(),
            v.len()
        )));
    }
    let det = det_bareiss(m)?;
    let adj_u = adjugate(m)?.mul_vec(u)?;
    let correction = v
        .iter()
        .zip(&adj_u)
        .fold(R::zero(), |acc, (a, b)| acc.plus(&a.times(b)));
    let outer = RingMatrix::from_fn(n, m.variable(), |j, k| u[j - 1].times(&v[k - 1]));
    let direct = det_bareiss(&m.add(&outer)?)?;
    Ok(RankOneUpdate {
        via_adjugate: det.plus(&correction),
        direct,
    })
}

/// Identity matrix helper for callers that do not care about the variable tag.
pub fn identity<R: Ring>(n: usize) -> RingMatrix<R> {
    RingMatrix::identity(n, Variable::Q)
}
