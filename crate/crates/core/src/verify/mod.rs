//! Closed-form right-hand sides of every identity, compared exactly against
//! determinants and products computed by the engine.

mod report;

use std::time::Instant;

use num_traits::One;
use rayon::prelude::*;

pub use report::{
    write_csv, write_jsonl, Hypothesis, IdentityId, ReportRecord, Status, VerificationReport,
    CSV_HEADER,
};

use crate::error::{Error, Result};
use crate::exactring::{rational_pow, BigInt, LaurentPoly, Rational, XPoly};
use crate::linalg::{adjugate, default_sample_points, det_bareiss, rank_by_evaluation};
use crate::matrix::{Render, RingMatrix, Variable};
use crate::ntheory::{gcd, jacobi_i64, perm_sign};
use crate::qmatrix::{
    build_diagonal_factors, build_laurent, build_symbolic, ceil_exponent, check_odd,
    floor_exponent, MatrixKind, MatrixSpec,
};

/// Floor or ceiling variant of a two-sided identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Floor,
    Ceil,
}

/// `(a(a+1) / n)` as an integer in `{-1, 0, 1}`.
pub fn jacobi_a(a: i64, n: i64) -> Result<i64> {
    Ok(jacobi_i64(a * (a + 1), n)?.as_i64())
}

/// Whether `gcd(a(a+1), n) = 1`.
pub fn is_coprime_case(a: i64, n: i64) -> bool {
    gcd(a * (a + 1), n) == 1
}

fn finish(
    identity: IdentityId,
    a: i64,
    n: i64,
    pass: bool,
    lhs: String,
    rhs: String,
    start: Instant,
) -> VerificationReport {
    VerificationReport {
        identity,
        a,
        n,
        lhs,
        rhs,
        status: if pass { Status::Pass } else { Status::Fail },
        elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
    }
}

fn compare<R: PartialEq + Render>(
    identity: IdentityId,
    a: i64,
    n: i64,
    lhs: &R,
    rhs: &R,
    var: Variable,
    start: Instant,
) -> VerificationReport {
    finish(identity, a, n, lhs == rhs, lhs.render(var), rhs.render(var), start)
}

fn signed_monomial(c: i64, exp: i64) -> LaurentPoly {
    LaurentPoly::monomial(BigInt::from(c), exp)
}

/// `1 - v^exp`.
fn one_minus_var_pow(exp: i64) -> LaurentPoly {
    &LaurentPoly::one() - &LaurentPoly::var_pow(exp)
}

fn spec(kind: MatrixKind, a: i64, n: i64) -> Result<MatrixSpec> {
    check_odd(n)?;
    MatrixSpec::new(kind, a, n)
}

/// `det [[floor((aj-(a+1)k)/n)]_q] = -(a(a+1)/n) q^((1-3n)/2)`.
pub fn verify_floor_theorem(a: i64, n: i64) -> Result<VerificationReport> {
    let start = Instant::now();
    let jac = jacobi_a(a, n)?;
    let lhs = det_bareiss(&build_laurent(&spec(MatrixKind::FloorQint, a, n)?)?)?;
    let rhs = signed_monomial(-jac, (1 - 3 * n) / 2);
    Ok(compare(IdentityId::ThmFloor, a, n, &lhs, &rhs, Variable::Q, start))
}

/// `det [[ceil(((a+1)j-ak)/n)]_q] = (a(a+1)/n) q^((n-1)/2)`.
pub fn verify_ceil_theorem(a: i64, n: i64) -> Result<VerificationReport> {
    let start = Instant::now();
    let jac = jacobi_a(a, n)?;
    let lhs = det_bareiss(&build_laurent(&spec(MatrixKind::CeilQint, a, n)?)?)?;
    let rhs = signed_monomial(jac, (n - 1) / 2);
    Ok(compare(IdentityId::ThmCeil, a, n, &lhs, &rhs, Variable::Q, start))
}

/// Closed form of the symbolic-x determinant:
/// floor `(a(a+1)/n) q^((1-3n)/2) (1-q)^(n-1) (1+qx)`,
/// ceiling `(a(a+1)/n) q^((n-1)/2) (1-q)^(n-1) (x+q)`.
pub fn x_theorem_rhs(a: i64, n: i64, side: Side) -> Result<XPoly> {
    let jac = jacobi_a(a, n)?;
    let base = &one_minus_var_pow(1).pow((n - 1) as u32) * &LaurentPoly::from(jac);
    let xp = match side {
        Side::Floor => {
            let c = base.shift((1 - 3 * n) / 2);
            XPoly::new(vec![c.clone(), c.shift(1)])
        }
        Side::Ceil => {
            let c = base.shift((n - 1) / 2);
            XPoly::new(vec![c.shift(1), c])
        }
    };
    Ok(xp)
}

/// Symbolic-x determinant, asserted linear in `x` and equal to the closed form.
pub fn verify_x_theorem(a: i64, n: i64, side: Side) -> Result<VerificationReport> {
    let start = Instant::now();
    let (kind, id) = match side {
        Side::Floor => (MatrixKind::FloorX, IdentityId::ThmXFloor),
        Side::Ceil => (MatrixKind::CeilX, IdentityId::ThmXCeil),
    };
    let lhs = det_bareiss(&build_symbolic(&spec(kind, a, n)?)?)?;
    if let Some(d) = lhs.degree().filter(|&d| d > 1) {
        return Err(Error::DegreeViolation(d));
    }
    let rhs = x_theorem_rhs(a, n, side)?;
    Ok(compare(id, a, n, &lhs, &rhs, Variable::Q, start))
}

fn two() -> Rational {
    Rational::from_integer(2.into())
}

fn rational_matrix(n: i64, f: impl Fn(usize, usize) -> Rational) -> RingMatrix<Rational> {
    RingMatrix::from_fn(n as usize, Variable::Q, f)
}

fn int_matrix(n: i64, f: impl Fn(usize, usize) -> i64) -> RingMatrix<BigInt> {
    RingMatrix::from_fn(n as usize, Variable::Q, |j, k| BigInt::from(f(j, k)))
}

fn neg_one_pow(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// One of the seven specialized identities obtained at `q -> 1`, `q = 2`,
/// `q = -1` and `x = 0`, each computed as its own integer or rational
/// determinant.
pub fn verify_specialization(id: IdentityId, a: i64, n: i64) -> Result<VerificationReport> {
    let start = Instant::now();
    check_odd(n)?;
    let jac = jacobi_a(a, n)?;
    let fl = |j, k| floor_exponent(a, n, j, k);
    let cl = |j, k| ceil_exponent(a, n, j, k);
    let var = Variable::Q;
    let jr = Rational::from_integer(jac.into());
    let report = match id {
        IdentityId::Cor1Floor => {
            let lhs = det_bareiss(&int_matrix(n, fl))?;
            compare(id, a, n, &lhs, &BigInt::from(-jac), var, start)
        }
        IdentityId::Cor1Ceil => {
            let lhs = det_bareiss(&int_matrix(n, cl))?;
            compare(id, a, n, &lhs, &BigInt::from(jac), var, start)
        }
        IdentityId::Cor2Floor => {
            let m = rational_matrix(n, |j, k| rational_pow(&two(), fl(j, k)) - Rational::one());
            let rhs = -&jr * rational_pow(&two(), (1 - 3 * n) / 2);
            compare(id, a, n, &det_bareiss(&m)?, &rhs, var, start)
        }
        IdentityId::Cor2Ceil => {
            let m = rational_matrix(n, |j, k| rational_pow(&two(), cl(j, k)) - Rational::one());
            let rhs = &jr * rational_pow(&two(), (n - 1) / 2);
            compare(id, a, n, &det_bareiss(&m)?, &rhs, var, start)
        }
        IdentityId::CorNeg1 => {
            let floor_det = det_bareiss(&int_matrix(n, |j, k| neg_one_pow(fl(j, k))))?;
            let ceil_det = det_bareiss(&int_matrix(n, |j, k| neg_one_pow(cl(j, k))))?;
            let rhs = BigInt::from(jac * neg_one_pow((n + 1) / 2)) << (n - 1) as usize;
            let pass = floor_det == rhs && ceil_det == rhs;
            finish(
                id,
                a,
                n,
                pass,
                format!("{floor_det}; {ceil_det}"),
                format!("{rhs}; {rhs}"),
                start,
            )
        }
        IdentityId::Cor2PowFloor => {
            let m = rational_matrix(n, |j, k| rational_pow(&two(), fl(j, k)));
            let rhs = &jr * rational_pow(&two(), (1 - 3 * n) / 2);
            compare(id, a, n, &det_bareiss(&m)?, &rhs, var, start)
        }
        IdentityId::Cor2PowCeil => {
            let m = rational_matrix(n, |j, k| rational_pow(&two(), cl(j, k)));
            let rhs = &jr * rational_pow(&two(), (n + 1) / 2);
            compare(id, a, n, &det_bareiss(&m)?, &rhs, var, start)
        }
        other => {
            return Err(Error::BadSpec(format!("{other} is not a specialization identity")))
        }
    };
    Ok(report)
}

/// All seven specializations, in the order (1floor), (2floor), (1ceil),
/// (2ceil), (-1), (2-floor), (2-ceil).
pub fn verify_specializations(a: i64, n: i64) -> Result<Vec<VerificationReport>> {
    IdentityId::SPECIALIZATIONS
        .into_iter()
        .map(|id| verify_specialization(id, a, n))
        .collect()
}

/// `det Q = (a(a+1)/n) (1 - t^-n)^(n-1)` in `t = q^(1/n)`.
pub fn verify_prop_det_q(a: i64, n: i64) -> Result<VerificationReport> {
    let start = Instant::now();
    let jac = jacobi_a(a, n)?;
    let lhs = det_bareiss(&build_laurent(&spec(MatrixKind::QFractional, a, n)?)?)?;
    let rhs = &one_minus_var_pow(-n).pow((n - 1) as u32) * &LaurentPoly::from(jac);
    Ok(compare(IdentityId::PropDetQ, a, n, &lhs, &rhs, Variable::T, start))
}

fn require_coprime(a: i64, n: i64) -> Result<()> {
    check_odd(n)?;
    if !is_coprime_case(a, n) {
        return Err(Error::NotCoprime((a * (a + 1)).to_string(), n.to_string()));
    }
    Ok(())
}

/// The matrix `F = [f(j,k)]` in `t`, with
/// `f(j,k) = [n | (a+1)j - ak] - t^-1 [n | (a+1)j - ak - 1]`.
pub fn q_inverse_numerator(a: i64, n: i64) -> Result<RingMatrix<LaurentPoly>> {
    check_odd(n)?;
    Ok(RingMatrix::from_fn(n as usize, Variable::T, |j, k| {
        let d = (a + 1) * j as i64 - a * k as i64;
        let mut e = LaurentPoly::zero();
        if d.rem_euclid(n) == 0 {
            e = &e + &LaurentPoly::one();
        }
        if (d - 1).rem_euclid(n) == 0 {
            e = &e - &LaurentPoly::var_pow(-1);
        }
        e
    }))
}

/// `Q F = (1 - t^-n) I`, the denominator-cleared inverse formula.
pub fn verify_prop_q_inverse(a: i64, n: i64) -> Result<VerificationReport> {
    let start = Instant::now();
    require_coprime(a, n)?;
    let q = build_laurent(&spec(MatrixKind::QFractional, a, n)?)?;
    let lhs = q.mul(&q_inverse_numerator(a, n)?)?;
    let rhs = RingMatrix::identity(n as usize, Variable::T).scale(&one_minus_var_pow(-n));
    Ok(finish(
        IdentityId::PropQInv,
        a,
        n,
        lhs == rhs,
        lhs.render_inline(),
        rhs.render_inline(),
        start,
    ))
}

/// Grand adjugate sums `1^T adj(A) 1 = t^n det(A)` and
/// `1^T adj(A') 1 = t^-n det(A')`, reported as `SUM_S` then `SUM_SPRIME`.
pub fn verify_adjugate_sums(a: i64, n: i64) -> Result<Vec<VerificationReport>> {
    require_coprime(a, n)?;
    [Side::Floor, Side::Ceil]
        .into_iter()
        .map(|side| verify_adjugate_sum(a, n, side))
        .collect()
}

pub fn verify_adjugate_sum(a: i64, n: i64, side: Side) -> Result<VerificationReport> {
    let start = Instant::now();
    require_coprime(a, n)?;
    let (kind, id, shift) = match side {
        Side::Floor => (MatrixKind::FloorPower, IdentityId::SumS, n),
        Side::Ceil => (MatrixKind::CeilPower, IdentityId::SumSPrime, -n),
    };
    let m = build_laurent(&spec(kind, a, n)?)?;
    let lhs = adjugate(&m)?.grand_sum();
    let rhs = det_bareiss(&m)?.shift(shift);
    Ok(compare(id, a, n, &lhs, &rhs, Variable::T, start))
}

/// Measured ranks of the power matrices when `gcd(a(a+1), n) > 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RankBound {
    pub floor_rank: usize,
    pub ceil_rank: usize,
    pub n: i64,
}

impl RankBound {
    pub fn holds(&self) -> bool {
        3 * self.floor_rank as i64 <= self.n && 3 * self.ceil_rank as i64 <= self.n
    }
}

pub fn measure_ranks(a: i64, n: i64, points: &[Rational]) -> Result<RankBound> {
    check_odd(n)?;
    if is_coprime_case(a, n) {
        return Err(Error::CoprimeInput((a * (a + 1)).to_string(), n.to_string()));
    }
    let floor_rank = rank_by_evaluation(&build_laurent(&spec(MatrixKind::FloorPower, a, n)?)?, points)?;
    let ceil_rank = rank_by_evaluation(&build_laurent(&spec(MatrixKind::CeilPower, a, n)?)?, points)?;
    Ok(RankBound {
        floor_rank,
        ceil_rank,
        n,
    })
}

/// `rank(A) <= n/3` and `rank(A') <= n/3` for non-coprime `(a, n)`, ranks
/// measured at the default sample points.
pub fn verify_rank_bound(a: i64, n: i64) -> Result<VerificationReport> {
    let start = Instant::now();
    let r = measure_ranks(a, n, &default_sample_points())?;
    Ok(finish(
        IdentityId::RankBound,
        a,
        n,
        r.holds(),
        format!("rank(A)={}, rank(A')={}", r.floor_rank, r.ceil_rank),
        format!("3*rank <= {n}"),
        start,
    ))
}

/// Sign of `j -> aj mod n` against the Jacobi symbol `(a/n)`.
pub fn verify_zolotarev(a: i64, n: i64) -> Result<VerificationReport> {
    let start = Instant::now();
    check_odd(n)?;
    let sign = perm_sign(a, n)?;
    let jac = jacobi_i64(a, n)?.as_i64();
    Ok(finish(
        IdentityId::Zolotarev,
        a,
        n,
        sign == jac,
        sign.to_string(),
        jac.to_string(),
        start,
    ))
}

/// `A = B Q C` and `A' = B' Q' C'` as exact products in `t`.
pub fn verify_factorization(a: i64, n: i64) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut lhs = Vec::new();
    let mut rhs = Vec::new();
    let mut pass = true;
    for (pk, qk) in [
        (MatrixKind::FloorPower, MatrixKind::QFractional),
        (MatrixKind::CeilPower, MatrixKind::QPrimeFractional),
    ] {
        let ps = spec(pk, a, n)?;
        let (b, c) = build_diagonal_factors(&ps)?;
        let q = build_laurent(&spec(qk, a, n)?)?;
        let product = b.mul(&q)?.mul(&c)?;
        let target = build_laurent(&ps)?;
        pass &= product == target;
        lhs.push(product.render_inline());
        rhs.push(target.render_inline());
    }
    Ok(finish(
        IdentityId::FactorBqc,
        a,
        n,
        pass,
        lhs.join("; "),
        rhs.join("; "),
        start,
    ))
}

fn hypothesis_met(h: Hypothesis, a: i64, n: i64) -> bool {
    match h {
        Hypothesis::None => true,
        Hypothesis::Coprime => is_coprime_case(a, n),
        Hypothesis::NotCoprime => !is_coprime_case(a, n),
        Hypothesis::UnitA => gcd(a, n) == 1,
    }
}

fn run_identity(id: IdentityId, a: i64, n: i64) -> Result<VerificationReport> {
    match id {
        IdentityId::ThmFloor => verify_floor_theorem(a, n),
        IdentityId::ThmCeil => verify_ceil_theorem(a, n),
        IdentityId::ThmXFloor => verify_x_theorem(a, n, Side::Floor),
        IdentityId::ThmXCeil => verify_x_theorem(a, n, Side::Ceil),
        IdentityId::PropDetQ => verify_prop_det_q(a, n),
        IdentityId::PropQInv => verify_prop_q_inverse(a, n),
        IdentityId::SumS => verify_adjugate_sum(a, n, Side::Floor),
        IdentityId::SumSPrime => verify_adjugate_sum(a, n, Side::Ceil),
        IdentityId::RankBound => verify_rank_bound(a, n),
        IdentityId::Zolotarev => verify_zolotarev(a, n),
        IdentityId::FactorBqc => verify_factorization(a, n),
        spec_id => verify_specialization(spec_id, a, n),
    }
}

/// Runs one identity at one parameter pair. Unmet hypotheses give a
/// `Skipped` report; errors are captured as failures.
pub fn verify_case(id: IdentityId, a: i64, n: i64) -> VerificationReport {
    let start = Instant::now();
    if !hypothesis_met(id.hypothesis(), a, n) {
        return VerificationReport {
            identity: id,
            a,
            n,
            lhs: String::new(),
            rhs: String::new(),
            status: Status::Skipped,
            elapsed_ms: 0.0,
        };
    }
    run_identity(id, a, n).unwrap_or_else(|e| VerificationReport {
        identity: id,
        a,
        n,
        lhs: format!("error: {e}"),
        rhs: String::new(),
        status: Status::Fail,
        elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
    })
}

fn suite_cases(
    a_values: &[i64],
    n_values: &[i64],
    identities: &[IdentityId],
) -> Result<Vec<(IdentityId, i64, i64)>> {
    if let Some(&bad) = n_values.iter().find(|&&n| n < 1 || n % 2 == 0) {
        return Err(Error::BadModulus(bad.to_string()));
    }
    let mut ids = identities.to_vec();
    ids.sort();
    ids.dedup();
    let mut ns = n_values.to_vec();
    ns.sort();
    ns.dedup();
    let mut avs = a_values.to_vec();
    avs.sort();
    avs.dedup();
    let mut cases = Vec::new();
    for &id in &ids {
        for &n in &ns {
            for &a in &avs {
                cases.push((id, a, n));
            }
        }
    }
    Ok(cases)
}

/// Cartesian sweep over identities, `n` and `a`, evaluated in parallel and
/// returned in `(identity, n, a)` order.
pub fn run_suite(
    a_values: &[i64],
    n_values: &[i64],
    identities: &[IdentityId],
) -> Result<Vec<VerificationReport>> {
    let cases = suite_cases(a_values, n_values, identities)?;
    let mut reports: Vec<VerificationReport> = cases
        .into_par_iter()
        .map(|(id, a, n)| verify_case(id, a, n))
        .collect();
    reports.sort_by_key(|r| (r.identity, r.n, r.a));
    Ok(reports)
}

/// [`run_suite`] on a dedicated pool of `jobs` worker threads.
pub fn run_suite_with_jobs(
    a_values: &[i64],
    n_values: &[i64],
    identities: &[IdentityId],
    jobs: usize,
) -> Result<Vec<VerificationReport>> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::Internal(e.to_string()))?;
    pool.install(|| run_suite(a_values, n_values, identities))
}
