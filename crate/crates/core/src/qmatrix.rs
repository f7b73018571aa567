//! Builders for the q-integer floor/ceiling matrices, their pure-power and
//! x-shifted variants, and the fractional-part matrices with their
//! diagonal factors.
//!
//! Every matrix involving `q^(1/n)` is written in `t = q^(1/n)` so that all
//! exponents stay integral. Indices are 1-based: `1 <= j, k <= n`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactring::{BigInt, LaurentPoly, XPoly};
use crate::matrix::{RingMatrix, Variable};
use crate::ntheory::{ceil_div, floor_div, mod_nonneg};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum MatrixKind {
    /// `[[floor((aj - (a+1)k)/n)]_q]`
    FloorQint,
    /// `[[ceil(((a+1)j - ak)/n)]_q]`
    CeilQint,
    /// `[q^floor((aj - (a+1)k)/n)]`, written in `t`
    FloorPower,
    /// `[q^ceil(((a+1)j - ak)/n)]`, written in `t`
    CeilPower,
    /// `[x + q^floor(...)]`
    FloorX,
    /// `[x + q^ceil(...)]`
    CeilX,
    /// `[q^-{(aj - (a+1)k)/n}]` with `{.}` the fractional part, in `t`
    QFractional,
    /// `[q^{(ak - (a+1)j)/n}]`, in `t`
    QPrimeFractional,
}

impl MatrixKind {
    pub const ALL: [MatrixKind; 8] = [
        MatrixKind::FloorQint,
        MatrixKind::CeilQint,
        MatrixKind::FloorPower,
        MatrixKind::CeilPower,
        MatrixKind::FloorX,
        MatrixKind::CeilX,
        MatrixKind::QFractional,
        MatrixKind::QPrimeFractional,
    ];

    /// Kebab-case name used on the command line.
    pub fn cli_name(self) -> &'static str {
        match self {
            MatrixKind::FloorQint => "floor-qint",
            MatrixKind::CeilQint => "ceil-qint",
            MatrixKind::FloorPower => "floor-power",
            MatrixKind::CeilPower => "ceil-power",
            MatrixKind::FloorX => "floor-x",
            MatrixKind::CeilX => "ceil-x",
            MatrixKind::QFractional => "q-fractional",
            MatrixKind::QPrimeFractional => "q-prime-fractional",
        }
    }

    pub fn variable(self) -> Variable {
        match self {
            MatrixKind::FloorPower
            | MatrixKind::CeilPower
            | MatrixKind::QFractional
            | MatrixKind::QPrimeFractional => Variable::T,
            _ => Variable::Q,
        }
    }

    pub fn is_symbolic_x(self) -> bool {
        matches!(self, MatrixKind::FloorX | MatrixKind::CeilX)
    }
}

impl fmt::Display for MatrixKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.cli_name())
    }
}

impl FromStr for MatrixKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.to_ascii_lowercase().replace('_', "-");
        MatrixKind::ALL
            .into_iter()
            .find(|k| k.cli_name() == norm)
            .ok_or_else(|| Error::BadSpec(format!("unknown matrix kind {s:?}")))
    }
}

/// Names one matrix: its kind and the parameters `a` and odd `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MatrixSpec {
    pub kind: MatrixKind,
    pub a: i64,
    pub n: i64,
}

impl MatrixSpec {
    pub fn new(kind: MatrixKind, a: i64, n: i64) -> Result<Self> {
        let spec = MatrixSpec { kind, a, n };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        check_odd(self.n).map_err(|_| Error::BadSpec(format!("n must be odd and positive, got {}", self.n)))
    }

    fn order(&self) -> usize {
        self.n as usize
    }
}

pub(crate) fn check_odd(n: i64) -> Result<()> {
    if n < 1 || n % 2 == 0 {
        return Err(Error::BadModulus(n.to_string()));
    }
    Ok(())
}

/// `floor((a j - (a+1) k) / n)`.
pub fn floor_exponent(a: i64, n: i64, j: usize, k: usize) -> i64 {
    floor_div(a * j as i64 - (a + 1) * k as i64, n)
}

/// `ceil(((a+1) j - a k) / n)`.
pub fn ceil_exponent(a: i64, n: i64, j: usize, k: usize) -> i64 {
    ceil_div((a + 1) * j as i64 - a * k as i64, n)
}

/// The q-integer `[m]_q = (1 - q^m) / (1 - q)`.
pub fn q_integer(m: i64) -> LaurentPoly {
    match m {
        0 => LaurentPoly::zero(),
        m if m > 0 => LaurentPoly::new(0, vec![BigInt::from(1); m as usize]),
        // -(q^-1 + ... + q^m)
        m => LaurentPoly::new(m, vec![BigInt::from(-1); (-m) as usize]),
    }
}

/// Integer matrix `[floor((aj - (a+1)k)/n)]`.
pub fn floor_values(a: i64, n: i64) -> Result<RingMatrix<BigInt>> {
    check_odd(n)?;
    Ok(RingMatrix::from_fn(n as usize, Variable::Q, |j, k| {
        BigInt::from(floor_exponent(a, n, j, k))
    }))
}

/// Integer matrix `[ceil(((a+1)j - ak)/n)]`.
pub fn ceil_values(a: i64, n: i64) -> Result<RingMatrix<BigInt>> {
    check_odd(n)?;
    Ok(RingMatrix::from_fn(n as usize, Variable::Q, |j, k| {
        BigInt::from(ceil_exponent(a, n, j, k))
    }))
}

/// A built matrix: Laurent entries, or x-polynomial entries for the
/// symbolic kinds.
#[derive(Debug, Clone, PartialEq)]
pub enum BuiltMatrix {
    Laurent(RingMatrix<LaurentPoly>),
    Symbolic(RingMatrix<XPoly>),
}

impl BuiltMatrix {
    pub fn render_rows(&self) -> Vec<Vec<String>> {
        match self {
            BuiltMatrix::Laurent(m) => m.render_rows(),
            BuiltMatrix::Symbolic(m) => m.render_rows(),
        }
    }

    pub fn render_grid(&self) -> String {
        match self {
            BuiltMatrix::Laurent(m) => m.render_grid(),
            BuiltMatrix::Symbolic(m) => m.render_grid(),
        }
    }

    pub fn variable(&self) -> Variable {
        match self {
            BuiltMatrix::Laurent(m) => m.variable(),
            BuiltMatrix::Symbolic(m) => m.variable(),
        }
    }
}

/// Builds any of the Laurent-entry kinds. Symbolic kinds are rejected; use
/// [`build_symbolic`] or [`build`].
pub fn build_laurent(spec: &MatrixSpec) -> Result<RingMatrix<LaurentPoly>> {
    spec.validate()?;
    let (a, n) = (spec.a, spec.n);
    let var = spec.kind.variable();
    let m = match spec.kind {
        MatrixKind::FloorQint => RingMatrix::from_fn(spec.order(), var, |j, k| {
            q_integer(floor_exponent(a, n, j, k))
        }),
        MatrixKind::CeilQint => RingMatrix::from_fn(spec.order(), var, |j, k| {
            q_integer(ceil_exponent(a, n, j, k))
        }),
        MatrixKind::FloorPower => RingMatrix::from_fn(spec.order(), var, |j, k| {
            LaurentPoly::var_pow(n * floor_exponent(a, n, j, k))
        }),
        MatrixKind::CeilPower => RingMatrix::from_fn(spec.order(), var, |j, k| {
            LaurentPoly::var_pow(n * ceil_exponent(a, n, j, k))
        }),
        MatrixKind::QFractional => RingMatrix::from_fn(spec.order(), var, |j, k| {
            LaurentPoly::var_pow(-mod_nonneg(a * j as i64 - (a + 1) * k as i64, n))
        }),
        MatrixKind::QPrimeFractional => RingMatrix::from_fn(spec.order(), var, |j, k| {
            LaurentPoly::var_pow(mod_nonneg(a * k as i64 - (a + 1) * j as i64, n))
        }),
        MatrixKind::FloorX | MatrixKind::CeilX => {
            return Err(Error::BadSpec(format!(
                "{} has x-polynomial entries",
                spec.kind
            )))
        }
    };
    Ok(m)
}

/// Builds `[x + q^floor(...)]` or `[x + q^ceil(...)]`.
pub fn build_symbolic(spec: &MatrixSpec) -> Result<RingMatrix<XPoly>> {
    spec.validate()?;
    let (a, n) = (spec.a, spec.n);
    let exponent: fn(i64, i64, usize, usize) -> i64 = match spec.kind {
        MatrixKind::FloorX => floor_exponent,
        MatrixKind::CeilX => ceil_exponent,
        other => {
            return Err(Error::BadSpec(format!(
                "{other} does not have x-polynomial entries"
            )))
        }
    };
    Ok(RingMatrix::from_fn(spec.order(), Variable::Q, |j, k| {
        XPoly::x_plus(LaurentPoly::var_pow(exponent(a, n, j, k)))
    }))
}

pub fn build(spec: &MatrixSpec) -> Result<BuiltMatrix> {
    if spec.kind.is_symbolic_x() {
        build_symbolic(spec).map(BuiltMatrix::Symbolic)
    } else {
        build_laurent(spec).map(BuiltMatrix::Laurent)
    }
}

/// Diagonal factors in `t` of the power matrices: `(B, C)` with
/// `A = B Q C` for the floor kind, `(B', C')` with `A' = B' Q' C'` for the
/// ceiling kind.
pub fn build_diagonal_factors(
    spec: &MatrixSpec,
) -> Result<(RingMatrix<LaurentPoly>, RingMatrix<LaurentPoly>)> {
    spec.validate()?;
    let (left, right) = match spec.kind {
        MatrixKind::FloorPower => (spec.a, -(spec.a + 1)),
        MatrixKind::CeilPower => (spec.a + 1, -spec.a),
        other => {
            return Err(Error::BadSpec(format!(
                "diagonal factors exist only for the power kinds, not {other}"
            )))
        }
    };
    let n = spec.order();
    let diag = |step: i64| {
        RingMatrix::diagonal(
            (1..=n as i64).map(|m| LaurentPoly::var_pow(step * m)).collect(),
            Variable::T,
        )
    };
    Ok((diag(left), diag(right)))
}

/// Serialized form `{kind, a, n, variable, entries}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub kind: MatrixKind,
    pub a: i64,
    pub n: i64,
    pub variable: Variable,
    pub entries: Vec<Vec<String>>,
}

impl MatrixJson {
    pub fn from_built(spec: &MatrixSpec, m: &BuiltMatrix) -> Self {
        MatrixJson {
            kind: spec.kind,
            a: spec.a,
            n: spec.n,
            variable: m.variable(),
            entries: m.render_rows(),
        }
    }

    /// Parses the Laurent entries back into a matrix. Symbolic kinds are not
    /// supported.
    pub fn to_laurent(&self) -> Result<RingMatrix<LaurentPoly>> {
        if self.kind.is_symbolic_x() {
            return Err(Error::BadSpec("symbolic matrices are text-only".into()));
        }
        let rows = self
            .entries
            .iter()
            .map(|r| {
                r.iter()
                    .map(|e| LaurentPoly::parse(e).map_err(|err| Error::BadSpec(err.to_string())))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        RingMatrix::from_rows(rows, self.variable)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactring::{rational, Rational};

    fn lp(low: i64, c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_i64s(low, c)
    }

    fn spec(kind: MatrixKind, a: i64, n: i64) -> MatrixSpec {
        MatrixSpec::new(kind, a, n).unwrap()
    }

    #[test]
    fn q_integer_examples() {
        assert_eq!(q_integer(2), lp(0, &[1, 1]));
        assert_eq!(q_integer(1), LaurentPoly::one());
        assert_eq!(q_integer(0), LaurentPoly::zero());
        assert_eq!(q_integer(-2), lp(-2, &[-1, -1]));
        // (1 - 2^-2)/(1 - 2) = -3/4
        assert_eq!(q_integer(-2).eval(&rational(2, 1)).unwrap(), rational(-3, 4));
    }

    #[test]
    fn q_integer_at_one_is_m() {
        for m in -50..=50 {
            assert_eq!(q_integer(m).eval(&rational(1, 1)).unwrap(), Rational::from_integer(m.into()));
        }
    }

    #[test]
    fn q_integer_matches_quotient_form() {
        // (1 - q^m) = (1 - q) [m]_q
        let one_minus_q = lp(0, &[1, -1]);
        for m in -20..=20 {
            let lhs = &LaurentPoly::one() - &LaurentPoly::var_pow(m);
            assert_eq!(&one_minus_q * &q_integer(m), lhs, "m={m}");
        }
    }

    #[test]
    fn floor_qint_example() {
        let m = build_laurent(&spec(MatrixKind::FloorQint, 1, 3)).unwrap();
        let a = lp(-1, &[-1]);
        let b = lp(-2, &[-1, -1]);
        let z = LaurentPoly::zero();
        let expected = RingMatrix::from_rows(
            vec![
                vec![a.clone(), a.clone(), b.clone()],
                vec![z.clone(), a.clone(), b.clone()],
                vec![z, a.clone(), a],
            ],
            Variable::Q,
        )
        .unwrap();
        assert_eq!(m, expected);
        let vals = floor_values(1, 3).unwrap();
        let expect: Vec<Vec<i64>> = vec![vec![-1, -1, -2], vec![0, -1, -2], vec![0, -1, -1]];
        for (r, row) in expect.iter().enumerate() {
            for (c, v) in row.iter().enumerate() {
                assert_eq!(vals.get(r, c), &BigInt::from(*v));
            }
        }
    }

    #[test]
    fn ceil_qint_example() {
        let m = build_laurent(&spec(MatrixKind::CeilQint, 1, 3)).unwrap();
        let one = LaurentPoly::one();
        let z = LaurentPoly::zero();
        let qp = lp(0, &[1, 1]);
        let expected = RingMatrix::from_rows(
            vec![
                vec![one.clone(), z.clone(), z],
                vec![one.clone(), one.clone(), one.clone()],
                vec![qp.clone(), qp, one],
            ],
            Variable::Q,
        )
        .unwrap();
        assert_eq!(m, expected);
    }

    #[test]
    fn trivial_order_one() {
        let m = build_laurent(&spec(MatrixKind::FloorQint, 0, 1)).unwrap();
        assert_eq!(m.entries(), &[lp(-1, &[-1])]);
    }

    #[test]
    fn rejects_even_n() {
        assert!(matches!(
            MatrixSpec::new(MatrixKind::FloorQint, 1, 4),
            Err(Error::BadSpec(_))
        ));
        assert!(matches!(
            MatrixSpec::new(MatrixKind::FloorQint, 1, -3),
            Err(Error::BadSpec(_))
        ));
        let bad = MatrixSpec {
            kind: MatrixKind::CeilQint,
            a: 1,
            n: 0,
        };
        assert!(build(&bad).is_err());
    }

    #[test]
    fn diagonal_factor_examples() {
        let (b, c) = build_diagonal_factors(&spec(MatrixKind::FloorPower, 1, 3)).unwrap();
        let d = |e: &[i64]| {
            RingMatrix::diagonal(e.iter().map(|&x| LaurentPoly::var_pow(x)).collect(), Variable::T)
        };
        assert_eq!(b, d(&[1, 2, 3]));
        assert_eq!(c, d(&[-2, -4, -6]));
        let (b, c) = build_diagonal_factors(&spec(MatrixKind::FloorPower, 0, 1)).unwrap();
        assert_eq!(b, d(&[0]));
        assert_eq!(c, d(&[-1]));
        let (b, c) = build_diagonal_factors(&spec(MatrixKind::CeilPower, 1, 3)).unwrap();
        assert_eq!(b, d(&[2, 4, 6]));
        assert_eq!(c, d(&[-1, -2, -3]));
        assert!(build_diagonal_factors(&spec(MatrixKind::FloorQint, 1, 3)).is_err());
    }

    #[test]
    fn factorizations_hold() {
        for n in (1..=15).step_by(2) {
            for a in -4..=4 {
                let a_mat = build_laurent(&spec(MatrixKind::FloorPower, a, n)).unwrap();
                let q = build_laurent(&spec(MatrixKind::QFractional, a, n)).unwrap();
                let (b, c) = build_diagonal_factors(&spec(MatrixKind::FloorPower, a, n)).unwrap();
                assert_eq!(b.mul(&q).unwrap().mul(&c).unwrap(), a_mat, "A=BQC a={a} n={n}");

                let ap = build_laurent(&spec(MatrixKind::CeilPower, a, n)).unwrap();
                let qp = build_laurent(&spec(MatrixKind::QPrimeFractional, a, n)).unwrap();
                let (bp, cp) = build_diagonal_factors(&spec(MatrixKind::CeilPower, a, n)).unwrap();
                assert_eq!(bp.mul(&qp).unwrap().mul(&cp).unwrap(), ap, "A'=B'Q'C' a={a} n={n}");
            }
        }
    }

    #[test]
    fn exponent_level_factorization() {
        for n in (1..=15i64).step_by(2) {
            for a in -4..=4i64 {
                for j in 1..=n as usize {
                    for k in 1..=n as usize {
                        let x = a * j as i64 - (a + 1) * k as i64;
                        assert_eq!(
                            a * j as i64 - mod_nonneg(x, n) - (a + 1) * k as i64,
                            n * floor_exponent(a, n, j, k)
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn fractional_entries_are_bounded_monomials() {
        for n in (1..=15).step_by(2) {
            for a in -4..=4 {
                let q = build_laurent(&spec(MatrixKind::QFractional, a, n)).unwrap();
                for e in q.entries() {
                    let (c, exp) = e.as_monomial().unwrap();
                    assert_eq!(c, &BigInt::from(1));
                    assert!((-(n - 1)..=0).contains(&exp));
                }
            }
        }
    }

    #[test]
    fn symbolic_at_zero_matches_power_after_inflation() {
        for n in (1..=9).step_by(2) {
            for a in -3..=3 {
                for (xk, pk) in [
                    (MatrixKind::FloorX, MatrixKind::FloorPower),
                    (MatrixKind::CeilX, MatrixKind::CeilPower),
                ] {
                    let x = build_symbolic(&spec(xk, a, n)).unwrap();
                    let p = build_laurent(&spec(pk, a, n)).unwrap();
                    let at_zero = x.map(|e| e.eval_x(&LaurentPoly::zero()).inflate(n as u32));
                    assert_eq!(at_zero.with_variable(Variable::T), p);
                }
            }
        }
    }

    #[test]
    fn json_round_trip() {
        let s = spec(MatrixKind::QFractional, 1, 3);
        let built = build(&s).unwrap();
        let js = MatrixJson::from_built(&s, &built);
        assert_eq!(js.variable, Variable::T);
        assert_eq!(js.entries[0], vec!["t^-2", "1", "t^-1"]);
        let text = serde_json::to_string(&js).unwrap();
        assert!(text.contains(r#""kind":"Q_FRACTIONAL""#));
        let back: MatrixJson = serde_json::from_str(&text).unwrap();
        let BuiltMatrix::Laurent(m) = built else { unreachable!() };
        assert_eq!(back.to_laurent().unwrap(), m);
    }

    #[test]
    fn kind_names_parse() {
        for k in MatrixKind::ALL {
            assert_eq!(k.cli_name().parse::<MatrixKind>().unwrap(), k);
        }
        assert_eq!("FLOOR_QINT".parse::<MatrixKind>().unwrap(), MatrixKind::FloorQint);
        assert!("bogus".parse::<MatrixKind>().is_err());
    }
}
