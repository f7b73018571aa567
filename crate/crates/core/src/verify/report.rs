use std::fmt;
use std::io::Write;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Every identity the suite can check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum IdentityId {
    #[serde(rename = "THM_FLOOR")]
    ThmFloor,
    #[serde(rename = "THM_CEIL")]
    ThmCeil,
    #[serde(rename = "THM_X_FLOOR")]
    ThmXFloor,
    #[serde(rename = "THM_X_CEIL")]
    ThmXCeil,
    #[serde(rename = "COR_1FLOOR")]
    Cor1Floor,
    #[serde(rename = "COR_2FLOOR")]
    Cor2Floor,
    #[serde(rename = "COR_1CEIL")]
    Cor1Ceil,
    #[serde(rename = "COR_2CEIL")]
    Cor2Ceil,
    #[serde(rename = "COR_NEG1")]
    CorNeg1,
    #[serde(rename = "COR_2POW_FLOOR")]
    Cor2PowFloor,
    #[serde(rename = "COR_2POW_CEIL")]
    Cor2PowCeil,
    #[serde(rename = "PROP_DETQ")]
    PropDetQ,
    #[serde(rename = "PROP_QINV")]
    PropQInv,
    #[serde(rename = "SUM_S")]
    SumS,
    #[serde(rename = "SUM_SPRIME")]
    SumSPrime,
    #[serde(rename = "RANK_BOUND")]
    RankBound,
    #[serde(rename = "ZOLOTAREV")]
    Zolotarev,
    #[serde(rename = "FACTOR_BQC")]
    FactorBqc,
}

/// Which coprimality condition on `(a, n)` an identity needs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Hypothesis {
    None,
    /// `gcd(a(a+1), n) = 1`
    Coprime,
    /// `gcd(a(a+1), n) > 1`
    NotCoprime,
    /// `gcd(a, n) = 1`
    UnitA,
}

impl IdentityId {
    pub const ALL: [IdentityId; 18] = [
        IdentityId::ThmFloor,
        IdentityId::ThmCeil,
        IdentityId::ThmXFloor,
        IdentityId::ThmXCeil,
        IdentityId::Cor1Floor,
        IdentityId::Cor2Floor,
        IdentityId::Cor1Ceil,
        IdentityId::Cor2Ceil,
        IdentityId::CorNeg1,
        IdentityId::Cor2PowFloor,
        IdentityId::Cor2PowCeil,
        IdentityId::PropDetQ,
        IdentityId::PropQInv,
        IdentityId::SumS,
        IdentityId::SumSPrime,
        IdentityId::RankBound,
        IdentityId::Zolotarev,
        IdentityId::FactorBqc,
    ];

    /// The seven specialized corollary identities.
    pub const SPECIALIZATIONS: [IdentityId; 7] = [
        IdentityId::Cor1Floor,
        IdentityId::Cor2Floor,
        IdentityId::Cor1Ceil,
        IdentityId::Cor2Ceil,
        IdentityId::CorNeg1,
        IdentityId::Cor2PowFloor,
        IdentityId::Cor2PowCeil,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdentityId::ThmFloor => "THM_FLOOR",
            IdentityId::ThmCeil => "THM_CEIL",
            IdentityId::ThmXFloor => "THM_X_FLOOR",
            IdentityId::ThmXCeil => "THM_X_CEIL",
            IdentityId::Cor1Floor => "COR_1FLOOR",
            IdentityId::Cor2Floor => "COR_2FLOOR",
            IdentityId::Cor1Ceil => "COR_1CEIL",
            IdentityId::Cor2Ceil => "COR_2CEIL",
            IdentityId::CorNeg1 => "COR_NEG1",
            IdentityId::Cor2PowFloor => "COR_2POW_FLOOR",
            IdentityId::Cor2PowCeil => "COR_2POW_CEIL",
            IdentityId::PropDetQ => "PROP_DETQ",
            IdentityId::PropQInv => "PROP_QINV",
            IdentityId::SumS => "SUM_S",
            IdentityId::SumSPrime => "SUM_SPRIME",
            IdentityId::RankBound => "RANK_BOUND",
            IdentityId::Zolotarev => "ZOLOTAREV",
            IdentityId::FactorBqc => "FACTOR_BQC",
        }
    }

    /// Kebab-case name, e.g. `thm-floor`.
    pub fn cli_name(self) -> String {
        self.name().to_ascii_lowercase().replace('_', "-")
    }

    pub fn hypothesis(self) -> Hypothesis {
        match self {
            IdentityId::PropQInv | IdentityId::SumS | IdentityId::SumSPrime => Hypothesis::Coprime,
            IdentityId::RankBound => Hypothesis::NotCoprime,
            IdentityId::Zolotarev => Hypothesis::UnitA,
            _ => Hypothesis::None,
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.to_ascii_uppercase().replace('-', "_");
        IdentityId::ALL
            .into_iter()
            .find(|id| id.name() == norm)
            .ok_or_else(|| Error::BadSpec(format!("unknown identity {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

/// Outcome of one exact identity check at one parameter pair.
#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub identity: IdentityId,
    pub a: i64,
    pub n: i64,
    /// Engine-computed value, rendered canonically.
    pub lhs: String,
    /// Closed-form value, rendered canonically.
    pub rhs: String,
    pub status: Status,
    pub elapsed_ms: f64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn failed(&self) -> bool {
        self.status == Status::Fail
    }

    pub fn skipped(&self) -> bool {
        self.status == Status::Skipped
    }

    pub fn to_record(&self) -> ReportRecord {
        ReportRecord {
            identity: self.identity.name().to_string(),
            a: self.a,
            n: self.n,
            pass: self.passed(),
            skipped: self.skipped(),
            lhs: self.lhs.clone(),
            rhs: self.rhs.clone(),
            elapsed_ms: self.elapsed_ms,
            numeric: false,
        }
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIP",
        };
        write!(
            f,
            "{tag:<4} {:<15} a={:<4} n={:<4} lhs={}  rhs={}",
            self.identity.name(),
            self.a,
            self.n,
            self.lhs,
            self.rhs
        )
    }
}

/// Flat wire format shared by exact and numeric reports.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportRecord {
    pub identity: String,
    pub a: i64,
    pub n: i64,
    pub pass: bool,
    pub skipped: bool,
    pub lhs: String,
    pub rhs: String,
    pub elapsed_ms: f64,
    pub numeric: bool,
}

pub const CSV_HEADER: [&str; 7] = ["identity", "a", "n", "pass", "lhs", "rhs", "elapsed_ms"];

/// Writes one JSON object per line.
pub fn write_jsonl<W: Write>(mut out: W, records: &[ReportRecord]) -> std::io::Result<()> {
    for r in records {
        serde_json::to_writer(&mut out, r)?;
        out.write_all(b"\n")?;
    }
    Ok(())
}

/// Writes the CSV form with the fixed [`CSV_HEADER`].
pub fn write_csv<W: Write>(out: W, records: &[ReportRecord]) -> std::io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for r in records {
        w.write_record([
            r.identity.clone(),
            r.a.to_string(),
            r.n.to_string(),
            r.pass.to_string(),
            r.lhs.clone(),
            r.rhs.clone(),
            format!("{:.3}", r.elapsed_ms),
        ])?;
    }
    w.flush()?;
    Ok(())
}
