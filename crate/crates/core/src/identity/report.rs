//! Structured outcomes of individual verification checks.

use crate::exact::{PolyX, Rat, SeriesPhi};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// Outcome of one check: pass exactly when both sides are identical exact
/// objects.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Status::Pass => write!(f, "pass"),
            Status::Fail => write!(f, "fail"),
        }
    }
}

/// A parameter value in a check's parameter record: a plain integer or a
/// list of integers (used for composition/partition parameters).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ParamValue {
    Int(i64),
    List(Vec<i64>),
}

impl fmt::Display for ParamValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamValue::Int(v) => write!(f, "{}", v),
            ParamValue::List(vs) => {
                write!(f, "[")?;
                for (i, v) in vs.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{}", v)?;
                }
                write!(f, "]")
            }
        }
    }
}

/// Parameter record with deterministic (sorted-key) ordering.
pub type Params = BTreeMap<String, ParamValue>;

/// Convenience builder for integer-only parameter records.
pub fn int_params(pairs: &[(&str, i64)]) -> Params {
    pairs
        .iter()
        .map(|&(k, v)| (k.to_string(), ParamValue::Int(v)))
        .collect()
}

/// The result of one verification check. Fields mirror the report wire
/// format exactly; `lhs`/`rhs` carry the exact values rendered as strings
/// (`num/den` scalars, ascending coefficient lists for polynomials and
/// series) and `witness` locates the first disagreement on failure.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct CheckResult {
    pub check: String,
    pub params: Params,
    pub status: Status,
    pub lhs: String,
    pub rhs: String,
    pub witness: Option<String>,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// Compare two polynomials coefficient-by-coefficient.
    pub fn of_polys(check: &str, params: Params, lhs: &PolyX, rhs: &PolyX) -> CheckResult {
        let witness = poly_witness(lhs, rhs, "");
        CheckResult {
            check: check.to_string(),
            params,
            status: if witness.is_none() { Status::Pass } else { Status::Fail },
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            witness,
        }
    }

    /// Compare two truncated series through the smaller order; differing
    /// truncation orders are themselves a failure.
    pub fn of_series(check: &str, params: Params, lhs: &SeriesPhi, rhs: &SeriesPhi) -> CheckResult {
        let witness = series_witness(lhs, rhs);
        CheckResult {
            check: check.to_string(),
            params,
            status: if witness.is_none() { Status::Pass } else { Status::Fail },
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            witness,
        }
    }

    /// Compare two exact integers (rendered like every other scalar, as
    /// `num/den` with denominator 1).
    pub fn of_ints(check: &str, params: Params, lhs: &BigInt, rhs: &BigInt) -> CheckResult {
        let (l, r) = (Rat::from(lhs), Rat::from(rhs));
        let witness = if l == r {
            None
        } else {
            Some(format!("value: {} != {}", l, r))
        };
        CheckResult {
            check: check.to_string(),
            params,
            status: if witness.is_none() { Status::Pass } else { Status::Fail },
            lhs: l.to_string(),
            rhs: r.to_string(),
            witness,
        }
    }
}

/// First X-power where the polynomials differ, if any. `prefix` scopes the
/// locus when the polynomial sits inside a series coefficient.
pub(crate) fn poly_witness(lhs: &PolyX, rhs: &PolyX, prefix: &str) -> Option<String> {
    let top = lhs.coeffs().len().max(rhs.coeffs().len());
    for k in 0..top {
        let (a, b) = (lhs.coeff(k), rhs.coeff(k));
        if a != b {
            return Some(format!("{prefix}X^{k}: {} != {}", a, b));
        }
    }
    None
}

/// First Φ-order (and X-power within it) where the series differ, if any.
pub(crate) fn series_witness(lhs: &SeriesPhi, rhs: &SeriesPhi) -> Option<String> {
    if lhs.order() != rhs.order() {
        return Some(format!("order: {} != {}", lhs.order(), rhs.order()));
    }
    for k in 0..=lhs.order() {
        if let Some(w) = poly_witness(lhs.coeff(k), rhs.coeff(k), &format!("Phi^{k} ")) {
            return Some(w);
        }
    }
    None
}
