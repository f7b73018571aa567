//! Polynomials in an indeterminate `x` with Laurent polynomial
//! coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::laurent::LaurentPoly;
use super::ring::Ring;
use crate::error::{Error, Result};

/// `coeffs[i]` is the coefficient of `x^i`; trailing zeros are stripped.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(from = "Vec<LaurentPoly>", into = "Vec<LaurentPoly>")]
pub struct XPoly {
    coeffs: Vec<LaurentPoly>,
}

impl XPoly {
    pub fn new(mut coeffs: Vec<LaurentPoly>) -> Self {
        while coeffs.last().is_some_and(LaurentPoly::is_zero) {
            coeffs.pop();
        }
        XPoly { coeffs }
    }

    pub fn zero() -> Self {
        XPoly::default()
    }

    pub fn one() -> Self {
        Self::constant(LaurentPoly::one())
    }

    pub fn constant(c: LaurentPoly) -> Self {
        Self::new(vec![c])
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::new(vec![LaurentPoly::zero(), LaurentPoly::one()])
    }

    /// `x + c`.
    pub fn x_plus(c: LaurentPoly) -> Self {
        Self::new(vec![c, LaurentPoly::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree in `x`; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[LaurentPoly] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> LaurentPoly {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// Substitutes a value for `x`.
    pub fn eval_x(&self, x0: &LaurentPoly) -> LaurentPoly {
        self.coeffs
            .iter()
            .rev()
            .fold(LaurentPoly::zero(), |acc, c| &(&acc * x0) + c)
    }

    /// Exact quotient by long division in `x`, each step an exact Laurent
    /// division of leading coefficients.
    pub fn div_exact(&self, divisor: &XPoly) -> Result<XPoly> {
        let dg = divisor.degree().ok_or(Error::NonExactDivision)?;
        if self.is_zero() {
            return Ok(XPoly::zero());
        }
        if self.coeffs.len() <= dg {
            return Err(Error::NonExactDivision);
        }
        let lead = &divisor.coeffs[dg];
        let mut rem = self.coeffs.clone();
        let qlen = rem.len() - dg;
        let mut quot = vec![LaurentPoly::zero(); qlen];
        for i in (0..qlen).rev() {
            if rem[i + dg].is_zero() {
                continue;
            }
            let c = rem[i + dg].div_exact(lead)?;
            for (j, gj) in divisor.coeffs.iter().enumerate() {
                rem[i + j] = &rem[i + j] - &(&c * gj);
            }
            quot[i] = c;
        }
        if rem.iter().any(|r| !r.is_zero()) {
            return Err(Error::NonExactDivision);
        }
        Ok(XPoly::new(quot))
    }

    pub fn display_var<'a>(&'a self, var: &'a str) -> impl fmt::Display + 'a {
        DisplayX { poly: self, var }
    }
}

impl From<Vec<LaurentPoly>> for XPoly {
    fn from(v: Vec<LaurentPoly>) -> Self {
        XPoly::new(v)
    }
}

impl From<XPoly> for Vec<LaurentPoly> {
    fn from(p: XPoly) -> Self {
        p.coeffs
    }
}

impl From<LaurentPoly> for XPoly {
    fn from(c: LaurentPoly) -> Self {
        XPoly::constant(c)
    }
}

impl Add<&XPoly> for &XPoly {
    type Output = XPoly;

    fn add(self, rhs: &XPoly) -> XPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        XPoly::new((0..len).map(|i| &self.coeff(i) + &rhs.coeff(i)).collect())
    }
}

impl Sub<&XPoly> for &XPoly {
    type Output = XPoly;

    fn sub(self, rhs: &XPoly) -> XPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        XPoly::new((0..len).map(|i| &self.coeff(i) - &rhs.coeff(i)).collect())
    }
}

impl Neg for &XPoly {
    type Output = XPoly;

    fn neg(self) -> XPoly {
        XPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul<&XPoly> for &XPoly {
    type Output = XPoly;

    fn mul(self, rhs: &XPoly) -> XPoly {
        if self.is_zero() || rhs.is_zero() {
            return XPoly::zero();
        }
        let mut out = vec![LaurentPoly::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        XPoly::new(out)
    }
}

impl Ring for XPoly {
    fn zero() -> Self {
        XPoly::zero()
    }
    fn one() -> Self {
        XPoly::one()
    }
    fn is_zero(&self) -> bool {
        XPoly::is_zero(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negate(&self) -> Self {
        -self
    }
    fn div_exact(&self, rhs: &Self) -> Result<Self> {
        XPoly::div_exact(self, rhs)
    }
    fn from_i64(v: i64) -> Self {
        XPoly::constant(LaurentPoly::from(v))
    }
}

struct DisplayX<'a> {
    poly: &'a XPoly,
    var: &'a str,
}

impl fmt::Display for DisplayX<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.poly.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let xpart = match i {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{i}"),
            };
            let text = c.display_var(self.var).to_string();
            let (neg, body) = match c.as_monomial() {
                Some(_) => match text.strip_prefix('-') {
                    Some(rest) => (true, rest.to_string()),
                    None => (false, text),
                },
                None => (false, format!("({text})")),
            };
            let term = match (body.as_str(), xpart.is_empty()) {
                (_, true) => body,
                ("1", false) => xpart,
                (_, false) => format!("{body}*{xpart}"),
            };
            match (first, neg) {
                (true, true) => write!(f, "-{term}")?,
                (true, false) => write!(f, "{term}")?,
                (false, true) => write!(f, " - {term}")?,
                (false, false) => write!(f, " + {term}")?,
            }
            first = false;
        }
        Ok(())
    }
}

impl fmt::Display for XPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.display_var("q").fmt(f)
    }
}

impl fmt::Debug for XPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "XPoly({self})")
    }
}
