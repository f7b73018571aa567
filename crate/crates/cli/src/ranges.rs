//! Parsing of `-a` / `-n` value lists: `7`, `1,3,5` or the inclusive range
//! `lo..hi`, possibly mixed (`1..9,15`).

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RangeError(pub String);

impl fmt::Display for RangeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for RangeError {}

/// One comma-separated piece of a value list.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Piece {
    Single(i64),
    Range(i64, i64),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValueList(pub Vec<Piece>);

fn parse_int(s: &str) -> Result<i64, RangeError> {
    s.trim()
        .parse()
        .map_err(|_| RangeError(format!("not an integer: {s:?}")))
}

impl std::str::FromStr for ValueList {
    type Err = RangeError;

    fn from_str(s: &str) -> Result<Self, RangeError> {
        let mut pieces = Vec::new();
        for part in s.split(',') {
            let part = part.trim();
            if part.is_empty() {
                return Err(RangeError(format!("empty item in {s:?}")));
            }
            // the separator is the first ".." after position 0, so "-6..-2" works
            let piece = match part.find("..") {
                Some(i) => {
                    let (lo, hi) = (parse_int(&part[..i])?, parse_int(&part[i + 2..])?);
                    if lo > hi {
                        return Err(RangeError(format!("empty range {part:?}")));
                    }
                    Piece::Range(lo, hi)
                }
                None => Piece::Single(parse_int(part)?),
            };
            pieces.push(piece);
        }
        Ok(ValueList(pieces))
    }
}

impl ValueList {
    /// Every value, sorted and deduplicated.
    pub fn values(&self) -> Vec<i64> {
        let mut out = Vec::new();
        for p in &self.0 {
            match *p {
                Piece::Single(v) => out.push(v),
                Piece::Range(lo, hi) => out.extend(lo..=hi),
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Values for the order `n`. A range whose endpoints are both odd walks
    /// the odd numbers between them; anything else must already be odd and
    /// positive, and the offending values are listed otherwise.
    pub fn odd_values(&self) -> Result<Vec<i64>, RangeError> {
        let mut out = Vec::new();
        for p in &self.0 {
            match *p {
                Piece::Range(lo, hi) if lo % 2 != 0 && hi % 2 != 0 => {
                    out.extend((lo..=hi).step_by(2))
                }
                Piece::Range(lo, hi) => out.extend(lo..=hi),
                Piece::Single(v) => out.push(v),
            }
        }
        out.sort_unstable();
        out.dedup();
        let bad: Vec<String> = out
            .iter()
            .filter(|&&v| v <= 0 || v % 2 == 0)
            .map(i64::to_string)
            .collect();
        if !bad.is_empty() {
            return Err(RangeError(format!(
                "n must be odd and positive; offending values: {}",
                bad.join(", ")
            )));
        }
        Ok(out)
    }
}
