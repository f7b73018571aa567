//! Dense square matrices over an exact ring.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactring::{BigInt, LaurentPoly, Rational, Ring, XPoly};

/// Name of the Laurent variable the entries are written in: `q` itself or
/// `t = q^(1/n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variable {
    Q,
    T,
}

impl Variable {
    pub fn name(self) -> &'static str {
        match self {
            Variable::Q => "q",
            Variable::T => "t",
        }
    }
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Text rendering of a ring element in a named variable.
pub trait Render {
    fn render(&self, var: Variable) -> String;
}

impl Render for LaurentPoly {
    fn render(&self, var: Variable) -> String {
        self.display_var(var.name()).to_string()
    }
}

impl Render for XPoly {
    fn render(&self, var: Variable) -> String {
        self.display_var(var.name()).to_string()
    }
}

impl Render for BigInt {
    fn render(&self, _: Variable) -> String {
        self.to_string()
    }
}

impl Render for Rational {
    fn render(&self, _: Variable) -> String {
        self.to_string()
    }
}

/// Square matrix stored row-major.
#[derive(Clone, PartialEq)]
pub struct RingMatrix<R> {
    n: usize,
    entries: Vec<R>,
    variable: Variable,
}

impl<R: Ring> RingMatrix<R> {
    pub fn new(n: usize, entries: Vec<R>, variable: Variable) -> Result<Self> {
        if entries.len() != n * n {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {n}x{n} matrix",
                entries.len()
            )));
        }
        Ok(RingMatrix {
            n,
            entries,
            variable,
        })
    }

    pub fn from_rows(rows: Vec<Vec<R>>, variable: Variable) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch("matrix is not square".into()));
        }
        Self::new(n, rows.into_iter().flatten().collect(), variable)
    }

    /// Builds the matrix from `f(j, k)` with 1-based indices `1 <= j, k <= n`.
    pub fn from_fn(n: usize, variable: Variable, mut f: impl FnMut(usize, usize) -> R) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for j in 1..=n {
            for k in 1..=n {
                entries.push(f(j, k));
            }
        }
        RingMatrix {
            n,
            entries,
            variable,
        }
    }

    pub fn identity(n: usize, variable: Variable) -> Self {
        Self::from_fn(n, variable, |j, k| if j == k { R::one() } else { R::zero() })
    }

    pub fn zeros(n: usize, variable: Variable) -> Self {
        Self::from_fn(n, variable, |_, _| R::zero())
    }

    pub fn diagonal(diag: Vec<R>, variable: Variable) -> Self {
        let n = diag.len();
        Self::from_fn(n, variable, |j, k| {
            if j == k {
                diag[j - 1].clone()
            } else {
                R::zero()
            }
        })
    }

    /// The all-ones matrix `J`.
    pub fn ones(n: usize, variable: Variable) -> Self {
        Self::from_fn(n, variable, |_, _| R::one())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn variable(&self) -> Variable {
        self.variable
    }

    pub fn with_variable(mut self, variable: Variable) -> Self {
        self.variable = variable;
        self
    }

    /// Entry at 0-based `(row, col)`.
    pub fn get(&self, row: usize, col: usize) -> &R {
        &self.entries[row * self.n + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: R) {
        self.entries[row * self.n + col] = value;
    }

    pub fn row(&self, row: usize) -> &[R] {
        &self.entries[row * self.n..(row + 1) * self.n]
    }

    pub fn rows(&self) -> Vec<Vec<R>> {
        self.entries.chunks(self.n.max(1)).map(<[R]>::to_vec).collect()
    }

    pub fn entries(&self) -> &[R] {
        &self.entries
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.n {
            self.entries.swap(a * self.n + c, b * self.n + c);
        }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, self.variable, |j, k| self.get(k - 1, j - 1).clone())
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.n, self.n, other.n, other.n
            )));
        }
        Ok(())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let n = self.n;
        Ok(Self::from_fn(n, self.variable, |j, k| {
            let mut acc = R::zero();
            for m in 0..n {
                let a = self.get(j - 1, m);
                if a.is_zero() {
                    continue;
                }
                let b = other.get(m, k - 1);
                if b.is_zero() {
                    continue;
                }
                acc = acc.plus(&a.times(b));
            }
            acc
        }))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(self.zip_with(other, R::plus))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(self.zip_with(other, R::minus))
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&R, &R) -> R) -> Self {
        RingMatrix {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| f(a, b))
                .collect(),
            variable: self.variable,
        }
    }

    pub fn scale(&self, c: &R) -> Self {
        self.map(|e| e.times(c))
    }

    pub fn neg(&self) -> Self {
        self.map(R::negate)
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> RingMatrix<S> {
        RingMatrix {
            n: self.n,
            entries: self.entries.iter().map(f).collect(),
            variable: self.variable,
        }
    }

    pub fn try_map<S: Ring>(&self, f: impl Fn(&R) -> Result<S>) -> Result<RingMatrix<S>> {
        Ok(RingMatrix {
            n: self.n,
            entries: self.entries.iter().map(f).collect::<Result<_>>()?,
            variable: self.variable,
        })
    }

    /// `M v` for a column vector `v`.
    pub fn mul_vec(&self, v: &[R]) -> Result<Vec<R>> {
        if v.len() != self.n {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} against order {}",
                v.len(),
                self.n
            )));
        }
        Ok((0..self.n)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(R::zero(), |acc, (a, b)| acc.plus(&a.times(b)))
            })
            .collect())
    }

    /// Sum of all entries, `1^T M 1`.
    pub fn grand_sum(&self) -> R {
        self.entries.iter().fold(R::zero(), |acc, e| acc.plus(e))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(R::is_zero)
    }
}

impl<R: Ring + Render> RingMatrix<R> {
    /// Entries rendered as text, row by row.
    pub fn render_rows(&self) -> Vec<Vec<String>> {
        (0..self.n)
            .map(|r| self.row(r).iter().map(|e| e.render(self.variable)).collect())
            .collect()
    }

    /// Single-line form `[[a, b], [c, d]]`.
    pub fn render_inline(&self) -> String {
        let rows: Vec<String> = self
            .render_rows()
            .into_iter()
            .map(|r| format!("[{}]", r.join(", ")))
            .collect();
        format!("[{}]", rows.join(", "))
    }

    /// Aligned text grid, one row per line.
    pub fn render_grid(&self) -> String {
        let rows = self.render_rows();
        let width = rows
            .iter()
            .flatten()
            .map(String::len)
            .max()
            .unwrap_or(0);
        rows.iter()
            .map(|r| {
                r.iter()
                    .map(|e| format!("{e:>width$}"))
                    .collect::<Vec<_>>()
                    .join("  ")
            })
            .collect::<Vec<_>>()
            .join("\n")
    }
}

impl<R: Ring + Render> fmt::Display for RingMatrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_grid())
    }
}

impl<R: Ring> fmt::Debug for RingMatrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RingMatrix")
            .field("n", &self.n)
            .field("variable", &self.variable)
            .field("rows", &self.rows())
            .finish()
    }
}
