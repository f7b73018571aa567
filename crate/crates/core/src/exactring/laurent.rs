//! Laurent polynomials in one variable with arbitrary-precision integer
//! coefficients, i.e. the ring Z[v, 1/v].
//!
//! The representation is dense: a lowest exponent plus the coefficient
//! vector running upward from it. Canonical form keeps both end
//! coefficients nonzero; zero is the empty vector with `low == 0`.
//!
//! Arithmetic runs on `i128` with checked operations when the operands
//! fit, and falls back to `BigInt` on overflow.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    low: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    /// Builds `sum coeffs[i] * v^(low + i)` and normalizes it.
    pub fn new(low: i64, coeffs: Vec<BigInt>) -> Self {
        let mut p = LaurentPoly { low, coeffs };
        p.normalize();
        p
    }

    pub fn from_i64s(low: i64, coeffs: &[i64]) -> Self {
        Self::new(low, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: BigInt, exp: i64) -> Self {
        Self::new(exp, vec![c])
    }

    /// The unit monomial `v^exp`.
    pub fn var_pow(exp: i64) -> Self {
        LaurentPoly {
            low: exp,
            coeffs: vec![BigInt::one()],
        }
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i64;
        }
        if self.coeffs.is_empty() {
            self.low = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lowest exponent with a nonzero coefficient (0 for the zero polynomial).
    pub fn low(&self) -> i64 {
        self.low
    }

    /// Highest exponent with a nonzero coefficient (`None` for zero).
    pub fn high(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.low + self.coeffs.len() as i64 - 1)
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        let idx = exp - self.low;
        if idx < 0 || idx >= self.coeffs.len() as i64 {
            BigInt::zero()
        } else {
            self.coeffs[idx as usize].clone()
        }
    }

    /// Nonzero terms as `(exponent, coefficient)` pairs in ascending order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.low + i as i64, c))
    }

    /// `Some((c, e))` when the polynomial is the single term `c * v^e`.
    pub fn as_monomial(&self) -> Option<(&BigInt, i64)> {
        if self.coeffs.len() == 1 {
            Some((&self.coeffs[0], self.low))
        } else {
            None
        }
    }

    /// Multiplies by `v^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        LaurentPoly {
            low: self.low + k,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.low, self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact quotient `self / divisor` in the Laurent ring.
    ///
    /// Both operands are shifted to ordinary polynomials with nonzero
    /// constant term, divided by classical long division, and shifted back.
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Result<LaurentPoly> {
        if divisor.is_zero() {
            return Err(Error::NonExactDivision);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        if self.coeffs.len() < divisor.coeffs.len() {
            return Err(Error::NonExactDivision);
        }
        let low = self.low - divisor.low;
        if let Some(q) = div_small(&self.coeffs, &divisor.coeffs) {
            let q = q.map_err(|()| Error::NonExactDivision)?;
            return Ok(Self::new(low, q));
        }
        let q = div_big(&self.coeffs, &divisor.coeffs)?;
        Ok(Self::new(low, q))
    }

    /// Value at a nonzero rational point. At zero the value is the constant
    /// term, unless a negative power is present.
    pub fn eval(&self, point: &BigRational) -> Result<BigRational> {
        if self.is_zero() {
            return Ok(BigRational::zero());
        }
        if point.is_zero() {
            if self.low < 0 {
                return Err(Error::ZeroPoint);
            }
            return Ok(BigRational::from_integer(self.coeff(0)));
        }
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * point + BigRational::from_integer(c.clone());
        }
        Ok(acc * rational_pow(point, self.low))
    }

    pub fn eval_f64(&self, point: f64) -> f64 {
        self.terms()
            .map(|(e, c)| c.to_f64().unwrap_or(f64::NAN) * point.powi(e as i32))
            .sum()
    }

    /// Value at the exact binary value of `point`, rounded once at the end.
    /// Unlike [`eval_f64`](Self::eval_f64) this is immune to cancellation
    /// between large coefficients.
    pub fn eval_f64_exact(&self, point: f64) -> Result<f64> {
        let x = BigRational::from_float(point)
            .ok_or_else(|| Error::Internal(format!("non-finite point {point}")))?;
        if self.is_zero() || x.is_zero() {
            return self.eval(&x).map(|v| v.to_f64().unwrap_or(f64::NAN));
        }
        // P(p/d) = N / d^D with N = sum c_k p^k d^(D-k), by Horner
        let (p, d) = (x.numer(), x.denom());
        let mut acc = BigInt::zero();
        let mut d_pow = BigInt::one();
        for c in self.coeffs.iter().rev() {
            acc = acc * p + c * &d_pow;
            d_pow *= d;
        }
        d_pow /= d;
        let body = BigRational::new_raw(acc, d_pow)
            .to_f64()
            .unwrap_or(f64::NAN);
        Ok(body * point.powi(self.low as i32))
    }

    /// Substitutes `v -> v^n`, scaling every exponent by `n`.
    pub fn inflate(&self, n: u32) -> Self {
        assert!(n >= 1, "inflation factor must be positive");
        if self.is_zero() || n == 1 {
            return self.clone();
        }
        let step = n as usize;
        let mut coeffs = vec![BigInt::zero(); (self.coeffs.len() - 1) * step + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * step] = c.clone();
        }
        LaurentPoly {
            low: self.low * n as i64,
            coeffs,
        }
    }

    /// Display adaptor rendering with the given variable name.
    pub fn display_var<'a>(&'a self, var: &'a str) -> impl fmt::Display + 'a {
        DisplayVar { poly: self, var }
    }

    /// Parses the text form, accepting any single-letter variable name.
    pub fn parse(s: &str) -> Result<Self, ParseLaurentError> {
        parse_laurent(s)
    }
}

pub(crate) fn rational_pow(base: &BigRational, exp: i64) -> BigRational {
    let mut b = if exp < 0 { base.recip() } else { base.clone() };
    let mut k = exp.unsigned_abs();
    let mut acc = BigRational::one();
    while k > 0 {
        if k & 1 == 1 {
            acc *= &b;
        }
        k >>= 1;
        if k > 0 {
            b = &b * &b;
        }
    }
    acc
}

fn to_small(v: &[BigInt]) -> Option<Vec<i128>> {
    v.iter().map(|c| c.to_i128()).collect()
}

fn mul_small(f: &[i128], g: &[i128]) -> Option<Vec<i128>> {
    let mut out = vec![0i128; f.len() + g.len() - 1];
    for (i, a) in f.iter().enumerate() {
        if *a == 0 {
            continue;
        }
        for (j, b) in g.iter().enumerate() {
            let prod = a.checked_mul(*b)?;
            out[i + j] = out[i + j].checked_add(prod)?;
        }
    }
    Some(out)
}

fn mul_big(f: &[BigInt], g: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); f.len() + g.len() - 1];
    for (i, a) in f.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, b) in g.iter().enumerate() {
            out[i + j] += a * b;
        }
    }
    out
}

/// Long division on `i128` coefficients. `None` signals overflow;
/// `Some(Err(()))` signals a nonzero remainder.
fn div_small(f: &[BigInt], g: &[BigInt]) -> Option<std::result::Result<Vec<BigInt>, ()>> {
    let mut rem = to_small(f)?;
    let g = to_small(g)?;
    let dg = g.len() - 1;
    let lead = g[dg];
    let qlen = rem.len() - dg;
    let mut quot = vec![0i128; qlen];
    for i in (0..qlen).rev() {
        let top = rem[i + dg];
        if top == 0 {
            continue;
        }
        if top % lead != 0 {
            return Some(Err(()));
        }
        let c = top / lead;
        quot[i] = c;
        for (j, gj) in g.iter().enumerate() {
            rem[i + j] = rem[i + j].checked_sub(c.checked_mul(*gj)?)?;
        }
    }
    if rem.iter().any(|r| *r != 0) {
        return Some(Err(()));
    }
    Some(Ok(quot.into_iter().map(BigInt::from).collect()))
}

fn div_big(f: &[BigInt], g: &[BigInt]) -> Result<Vec<BigInt>> {
    let mut rem = f.to_vec();
    let dg = g.len() - 1;
    let lead = &g[dg];
    let qlen = rem.len() - dg;
    let mut quot = vec![BigInt::zero(); qlen];
    for i in (0..qlen).rev() {
        if rem[i + dg].is_zero() {
            continue;
        }
        let (c, r) = rem[i + dg].div_rem(lead);
        if !r.is_zero() {
            return Err(Error::NonExactDivision);
        }
        for (j, gj) in g.iter().enumerate() {
            rem[i + j] -= &c * gj;
        }
        quot[i] = c;
    }
    if rem.iter().any(|r| !r.is_zero()) {
        return Err(Error::NonExactDivision);
    }
    Ok(quot)
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let low = self.low.min(rhs.low);
        let high = self.high().unwrap().max(rhs.high().unwrap());
        let mut coeffs = vec![BigInt::zero(); (high - low + 1) as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[(self.low - low) as usize + i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[(rhs.low - low) as usize + i] += c;
        }
        LaurentPoly::new(low, coeffs)
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            low: self.low,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let low = self.low + rhs.low;
        let small = to_small(&self.coeffs)
            .zip(to_small(&rhs.coeffs))
            .and_then(|(f, g)| mul_small(&f, &g));
        match small {
            Some(c) => LaurentPoly::new(low, c.into_iter().map(BigInt::from).collect()),
            None => LaurentPoly::new(low, mul_big(&self.coeffs, &rhs.coeffs)),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::constant(BigInt::from(c))
    }
}

impl super::ring::Ring for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn one() -> Self {
        LaurentPoly::one()
    }
    fn is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
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
        LaurentPoly::div_exact(self, rhs)
    }
    fn from_i64(v: i64) -> Self {
        LaurentPoly::from(v)
    }
}

struct DisplayVar<'a> {
    poly: &'a LaurentPoly,
    var: &'a str,
}

impl fmt::Display for DisplayVar<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return f.write_str("0");
        }
        for (k, (e, c)) in self.poly.terms().rev().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            if e == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            if e == 1 {
                f.write_str(self.var)?;
            } else {
                write!(f, "{}^{}", self.var, e)?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.display_var("q").fmt(f)
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse Laurent polynomial from {input:?}: {reason}")]
pub struct ParseLaurentError {
    input: String,
    reason: &'static str,
}

fn parse_laurent(s: &str) -> Result<LaurentPoly, ParseLaurentError> {
    let err = |reason| ParseLaurentError {
        input: s.to_string(),
        reason,
    };
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(err("empty input"));
    }
    // split into signed terms; a sign directly after '^' belongs to the exponent
    let mut terms: Vec<(bool, String)> = Vec::new();
    let mut cur = String::new();
    let mut neg = false;
    let mut prev: Option<char> = None;
    for ch in compact.chars() {
        if (ch == '+' || ch == '-') && prev != Some('^') {
            if !cur.is_empty() {
                terms.push((neg, std::mem::take(&mut cur)));
            } else if prev.is_some() {
                return Err(err("dangling sign"));
            }
            neg = ch == '-';
        } else {
            cur.push(ch);
        }
        prev = Some(ch);
    }
    if cur.is_empty() {
        return Err(err("trailing sign"));
    }
    terms.push((neg, cur));

    let mut var: Option<char> = None;
    let mut acc = LaurentPoly::zero();
    for (neg, body) in terms {
        let (coef_text, mono_text) = match body.find(|c: char| c.is_ascii_alphabetic()) {
            Some(pos) => (&body[..pos], Some(&body[pos..])),
            None => (body.as_str(), None),
        };
        let coef_text = coef_text.strip_suffix('*').unwrap_or(coef_text);
        let mut coef = if coef_text.is_empty() {
            if mono_text.is_none() {
                return Err(err("empty term"));
            }
            BigInt::one()
        } else {
            BigInt::from_str(coef_text).map_err(|_| err("bad coefficient"))?
        };
        if neg {
            coef = -coef;
        }
        let exp = match mono_text {
            None => 0,
            Some(m) => {
                let mut chars = m.chars();
                let v = chars.next().unwrap();
                if *var.get_or_insert(v) != v {
                    return Err(err("mixed variable names"));
                }
                let rest = chars.as_str();
                if rest.is_empty() {
                    1
                } else {
                    let e = rest.strip_prefix('^').ok_or_else(|| err("expected '^'"))?;
                    e.parse::<i64>().map_err(|_| err("bad exponent"))?
                }
            }
        };
        acc = &acc + &LaurentPoly::monomial(coef, exp);
    }
    Ok(acc)
}

impl FromStr for LaurentPoly {
    type Err = ParseLaurentError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_laurent(s)
    }
}

#[derive(Serialize, Deserialize)]
struct LaurentRepr {
    low: i64,
    coeffs: Vec<String>,
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        LaurentRepr {
            low: self.low,
            coeffs: self.coeffs.iter().map(|c| c.to_string()).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = LaurentRepr::deserialize(deserializer)?;
        let coeffs = repr
            .coeffs
            .iter()
            .map(|c| BigInt::from_str(c).map_err(serde::de::Error::custom))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(LaurentPoly::new(repr.low, coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(low: i64, c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_i64s(low, c)
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn mul_examples() {
        assert_eq!(&lp(0, &[1, 1]) * &lp(0, &[1, 1]), lp(0, &[1, 2, 1]));
        assert_eq!(&LaurentPoly::zero() * &lp(-3, &[1, 0, 0, 5]), LaurentPoly::zero());
        // (-q^-1) * (-q^-1 - q^-2) = q^-2 + q^-3
        let f = lp(-1, &[-1]);
        let g = lp(-2, &[-1, -1]);
        let prod = &f * &g;
        assert_eq!(prod, lp(-3, &[1, 1]));
        let two = rat(2, 1);
        assert_eq!(
            prod.eval(&two).unwrap(),
            f.eval(&two).unwrap() * g.eval(&two).unwrap()
        );
        assert_eq!(prod.eval(&two).unwrap(), rat(3, 8));
    }

    #[test]
    fn exact_div_examples() {
        assert_eq!(lp(0, &[1, 0, -1]).div_exact(&lp(0, &[1, -1])).unwrap(), lp(0, &[1, 1]));
        assert_eq!(lp(-3, &[1, 1]).div_exact(&lp(-1, &[-1])).unwrap(), lp(-2, &[-1, -1]));
        assert_eq!(
            lp(0, &[1, 1]).div_exact(&lp(0, &[1, -1])),
            Err(Error::NonExactDivision)
        );
        assert_eq!(lp(0, &[1]).div_exact(&LaurentPoly::zero()), Err(Error::NonExactDivision));
        assert_eq!(lp(0, &[2]).div_exact(&lp(0, &[3])), Err(Error::NonExactDivision));
    }

    #[test]
    fn exact_div_big_fallback() {
        let big = BigInt::from(1u8) << 200usize;
        let f = LaurentPoly::new(0, vec![big.clone(), BigInt::one()]);
        let g = lp(-2, &[3, -1, 7]);
        let prod = &f * &g;
        assert_eq!(prod.div_exact(&g).unwrap(), f);
        assert_eq!(prod.div_exact(&f).unwrap(), g);
        let off = &prod + &LaurentPoly::one();
        assert_eq!(off.div_exact(&g), Err(Error::NonExactDivision));
    }

    #[test]
    fn eval_examples() {
        assert_eq!(lp(0, &[1, 1]).eval(&rat(1, 1)).unwrap(), rat(2, 1));
        assert_eq!(lp(-1, &[-1]).eval(&rat(2, 1)).unwrap(), rat(-1, 2));
        assert_eq!(lp(-4, &[1]).eval(&rat(2, 1)).unwrap(), rat(1, 16));
        assert_eq!(lp(-1, &[1, 1]).eval(&rat(0, 1)), Err(Error::ZeroPoint));
        assert_eq!(lp(0, &[4, 1]).eval(&rat(0, 1)).unwrap(), rat(4, 1));
    }

    #[test]
    fn inflate_examples() {
        assert_eq!(lp(-1, &[-1, 1]).inflate(3), lp(-3, &[-1, 0, 0, 1]));
        assert_eq!(LaurentPoly::zero().inflate(5), LaurentPoly::zero());
        assert_eq!(lp(1, &[1, 1]).inflate(2), lp(2, &[1, 0, 1]));
    }

    #[test]
    fn canonical_form() {
        let p = LaurentPoly::new(-2, vec![0.into(), 0.into(), 3.into(), 0.into()]);
        assert_eq!(p.low(), 0);
        assert_eq!(p.coeffs().len(), 1);
        let z = LaurentPoly::new(7, vec![0.into(), 0.into()]);
        assert_eq!(z, LaurentPoly::zero());
        assert_eq!(z.low(), 0);
    }

    #[test]
    fn display_and_parse() {
        assert_eq!(lp(-2, &[-1, -1]).to_string(), "-q^-1 - q^-2");
        assert_eq!(lp(0, &[1, 1]).to_string(), "q + 1");
        assert_eq!(lp(-4, &[1]).to_string(), "q^-4");
        assert_eq!(lp(1, &[-1]).to_string(), "-q");
        assert_eq!(lp(0, &[-3, 0, 2]).to_string(), "2*q^2 - 3");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(lp(-3, &[1, 0, 0, -1]).display_var("t").to_string(), "-1 + t^-3");
        for s in ["-q^-1 - q^-2", "2*q^2 - 3", "0", "-1 + t^-3", "q", "4*q - 17*q^-5"] {
            let p: LaurentPoly = s.parse().unwrap();
            let var = if s.contains('t') { "t" } else { "q" };
            assert_eq!(p.display_var(var).to_string(), s);
        }
        assert!("q + t".parse::<LaurentPoly>().is_err());
        assert!("3 +".parse::<LaurentPoly>().is_err());
        assert!("q^x".parse::<LaurentPoly>().is_err());
    }

    #[test]
    fn json_form() {
        let p = lp(-2, &[-1, -1]);
        let js = serde_json::to_string(&p).unwrap();
        assert_eq!(js, r#"{"low":-2,"coeffs":["-1","-1"]}"#);
        let back: LaurentPoly = serde_json::from_str(&js).unwrap();
        assert_eq!(back, p);
        let messy: LaurentPoly = serde_json::from_str(r#"{"low":5,"coeffs":["0","2","0"]}"#).unwrap();
        assert_eq!(messy, lp(6, &[2]));
    }

    #[test]
    fn exact_float_evaluation() {
        let p = lp(-2, &[3, 0, -1, 4]);
        let v = p.eval_f64_exact(0.5).unwrap();
        assert_eq!(v, 3.0 * 4.0 - 1.0 + 4.0 * 0.5);
        assert_eq!(LaurentPoly::zero().eval_f64_exact(2.0).unwrap(), 0.0);
        assert_eq!(lp(0, &[7]).eval_f64_exact(0.0).unwrap(), 7.0);
        // (1 - x)^40 near x = 1 cancels badly when expanded
        let one_minus = lp(0, &[1, -1]);
        let big = one_minus.pow(40);
        let x = 0.75;
        let want = 0.25f64.powi(40);
        assert!((big.eval_f64_exact(x).unwrap() - want).abs() / want < 1e-14);
        assert!((big.eval_f64(x) - want).abs() / want > 1e-6);
    }
}
