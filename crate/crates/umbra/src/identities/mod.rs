//! A registry of machine-checkable identities, each with at least two
//! independently computed routes and an exact comparison in Q(lambda)[x]
//! (or Q[x]), producing mismatch-localizing reports.
//!
//! Several entries carry more than one registered formula variant because the
//! source material prints two inconsistent forms (an index drift, an extra
//! factor, or a reciprocal swap). The engine adjudicates: each variant is
//! evaluated against the generating-function route, the report's
//! `variant_note` records which one (if any) matches at every tested degree,
//! and an unmatched variant is never asserted as correct — its first
//! mismatching coefficient is recorded instead.
//!
//! There is no tolerance anywhere: comparisons are exact field equality.

mod checks;

use std::collections::BTreeMap;
use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::coefficients::Scalar;
use crate::error::{Error, Result};
use crate::series::working_precision;

/// Stable identifiers for the registered identities, in registry order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum IdentityId {
    Thm1,
    Eq18,
    Eq20,
    Eq2124Chain,
    Thm2Eq26,
    Eq28,
    Eq29,
    Eq30,
    Eq31,
    Thm3Eq36,
    Thm4Eq38,
    Eq39,
    Eq4041,
    Thm5,
    Remark45,
    Thm6Eq49,
    Eq50,
    Eq51,
    Eq53TStar,
    Eq13Conv,
    Eq9Multi,
}

pub const ALL_IDENTITIES: [IdentityId; 21] = [
    IdentityId::Thm1,
    IdentityId::Eq18,
    IdentityId::Eq20,
    IdentityId::Eq2124Chain,
    IdentityId::Thm2Eq26,
    IdentityId::Eq28,
    IdentityId::Eq29,
    IdentityId::Eq30,
    IdentityId::Eq31,
    IdentityId::Thm3Eq36,
    IdentityId::Thm4Eq38,
    IdentityId::Eq39,
    IdentityId::Eq4041,
    IdentityId::Thm5,
    IdentityId::Remark45,
    IdentityId::Thm6Eq49,
    IdentityId::Eq50,
    IdentityId::Eq51,
    IdentityId::Eq53TStar,
    IdentityId::Eq13Conv,
    IdentityId::Eq9Multi,
];

impl IdentityId {
    pub fn as_str(&self) -> &'static str {
        match self {
            IdentityId::Thm1 => "THM1",
            IdentityId::Eq18 => "EQ18",
            IdentityId::Eq20 => "EQ20",
            IdentityId::Eq2124Chain => "EQ21_24_CHAIN",
            IdentityId::Thm2Eq26 => "THM2_EQ26",
            IdentityId::Eq28 => "EQ28",
            IdentityId::Eq29 => "EQ29",
            IdentityId::Eq30 => "EQ30",
            IdentityId::Eq31 => "EQ31",
            IdentityId::Thm3Eq36 => "THM3_EQ36",
            IdentityId::Thm4Eq38 => "THM4_EQ38",
            IdentityId::Eq39 => "EQ39",
            IdentityId::Eq4041 => "EQ40_41",
            IdentityId::Thm5 => "THM5",
            IdentityId::Remark45 => "REMARK45",
            IdentityId::Thm6Eq49 => "THM6_EQ49",
            IdentityId::Eq50 => "EQ50",
            IdentityId::Eq51 => "EQ51",
            IdentityId::Eq53TStar => "EQ53_TSTAR",
            IdentityId::Eq13Conv => "EQ13_CONV",
            IdentityId::Eq9Multi => "EQ9_MULTI",
        }
    }

    pub fn parse(s: &str) -> Result<IdentityId> {
        ALL_IDENTITIES
            .iter()
            .copied()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| Error::UnknownIdentity(s.to_string()))
    }

    /// Smallest degree the identity is stated for.
    pub fn min_degree(&self) -> usize {
        match self {
            IdentityId::Thm1
            | IdentityId::Eq18
            | IdentityId::Eq20
            | IdentityId::Eq28
            | IdentityId::Eq29
            | IdentityId::Eq31
            | IdentityId::Thm6Eq49
            | IdentityId::Eq53TStar
            | IdentityId::Eq13Conv
            | IdentityId::Eq9Multi => 0,
            _ => 1,
        }
    }

    pub fn uses_a(&self) -> bool {
        matches!(
            self,
            IdentityId::Thm3Eq36
                | IdentityId::Thm4Eq38
                | IdentityId::Eq4041
                | IdentityId::Thm5
                | IdentityId::Eq13Conv
        )
    }

    pub fn uses_b(&self) -> bool {
        matches!(self, IdentityId::Eq39 | IdentityId::Eq4041 | IdentityId::Thm5)
    }

    /// One-line description of what the entry checks, by content.
    pub fn describe(&self) -> &'static str {
        match self {
            IdentityId::Thm1 => {
                "closed form for the associated sequence of (1-lambda)t/(e^t-lambda) \
                 against its generating-function expansion"
            }
            IdentityId::Eq18 => {
                "applying (1-lambda)/(e^t-lambda) to the degree-n Daehee polynomial \
                 yields the n-th Mittag-Leffler polynomial"
            }
            IdentityId::Eq20 => {
                "the transfer-formula derivation chain for the lambda-deformed \
                 associated sequence: operator form, shift-sum form, closed form"
            }
            IdentityId::Eq2124Chain => {
                "the step-by-step rewriting of the Mittag-Leffler polynomial from the \
                 lambda-deformed sequence: transfer, operator split, binomial sum, \
                 Bernoulli substitution, degree reduction, number expansion, \
                 Frobenius-Euler substitution; a failure names the first bad step"
            }
            IdentityId::Thm2Eq26 => {
                "Daehee polynomials as a triple sum over Bernoulli numbers and \
                 Frobenius-Euler polynomials; two printed variants (with and without \
                 an extra x factor) are adjudicated"
            }
            IdentityId::Eq28 => {
                "the associated sequence of t/(e^t+1) equals x sum_j C(n,j) (x+j)^{n-1}"
            }
            IdentityId::Eq29 => {
                "the Mittag-Leffler polynomial as sum_j C(n,j) x B_{n-1}^(n)(x+j) via \
                 the transfer formula from the t/(e^t+1) sequence"
            }
            IdentityId::Eq30 => {
                "Daehee polynomials from the shifted-Bernoulli double sum; two \
                 registered index variants for the first sum are adjudicated"
            }
            IdentityId::Eq31 => {
                "Daehee polynomials as the falling-factorial sum \
                 1/(1-lambda) sum_k C(n,k)(n-1)_{n-k} 2^k {(x+1)_k - lambda (x)_k}"
            }
            IdentityId::Thm3Eq36 => {
                "Changhee polynomials of order a as a Bernoulli/Frobenius-Euler sum; \
                 the printed orders (a, a+1) and the sign-corrected orders (-a, 1-a) \
                 are both registered and adjudicated"
            }
            IdentityId::Thm4Eq38 => {
                "which of the two reciprocal pair variants for \
                 t((e^t-lambda)/(1-lambda))^{+-a} has x H_{n-1}^(an)(x|lambda) as its \
                 associated sequence; the derivation pair and the statement pair \
                 disagree by a reciprocal and are adjudicated"
            }
            IdentityId::Eq39 => {
                "x B_{n-1}^(bn)(x) is the associated sequence of t((e^t-1)/t)^b"
            }
            IdentityId::Eq4041 => {
                "the operator bridge between the order-an Frobenius-Euler and \
                 order-bn Bernoulli sequences; the trailing Bernoulli superscript is \
                 registered in both printed (an) and pair-implied (bn) variants"
            }
            IdentityId::Thm5 => {
                "shifted Frobenius-Euler sum equals the Stirling/Bernoulli sum, with \
                 the operator form as a third agreeing route; both sides also equal \
                 (1-lambda)^{an} x^{n-1}"
            }
            IdentityId::Remark45 => {
                "the Sheffer sequence for ((1-lambda)/(e^t-lambda), \
                 t(1-lambda)/(e^t-lambda)) against the shifted Frobenius-Euler \
                 expression; the positive-order and negative-order variants are \
                 adjudicated"
            }
            IdentityId::Thm6Eq49 => {
                "the lambda-analogue Mittag-Leffler sequence equals \
                 sum_l C(n,l)(-lambda)^{n-l} x B_{n-1}^(n)(x+l)"
            }
            IdentityId::Eq50 => {
                "the lambda-analogue Mittag-Leffler sequence as the fully expanded \
                 double sum over Bernoulli numbers"
            }
            IdentityId::Eq51 => {
                "second-kind Daehee polynomials from the lambda-analogue \
                 Mittag-Leffler sequence; the first-term Bernoulli index is \
                 registered in printed (n-j) and corrected (n-1) variants"
            }
            IdentityId::Eq53TStar => {
                "the T* sequence: exp/sqrt generating route, transfer route, and the \
                 closed-form sum all agree"
            }
            IdentityId::Eq13Conv => {
                "the binomial convolution S_n(x+y) = sum_k C(n,k) p_k(y) S_{n-k}(x) \
                 (both printed orderings) for the Daehee and Changhee pairs at \
                 y in {0, 1, -1, 1/2}"
            }
            IdentityId::Eq9Multi => {
                "the multinomial expansion of <f_1 ... f_m | x^n> against the direct \
                 pairing of the product, for functional lists of length up to 3"
            }
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for IdentityId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

impl<'de> Deserialize<'de> for IdentityId {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        IdentityId::parse(&s).map_err(D::Error::custom)
    }
}

/// Order parameters for the identities that take them, plus an optional
/// series-precision override. Defaults run a in {1,2} and b in {1,2}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyParams {
    pub a: Vec<i64>,
    pub b: Vec<i64>,
    pub precision: Option<usize>,
}

impl Default for VerifyParams {
    fn default() -> Self {
        VerifyParams {
            a: vec![1, 2],
            b: vec![1, 2],
            precision: None,
        }
    }
}

impl VerifyParams {
    pub fn with_a(a: i64) -> Self {
        VerifyParams {
            a: vec![a],
            ..Default::default()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    pub x_power: usize,
    pub lhs: Scalar,
    pub rhs: Scalar,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeVerdict {
    pub n: usize,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub first_mismatch: Option<Mismatch>,
}

/// Per-identity verification report. `per_degree` covers every tested degree
/// (folded over all parameter combinations); a fail always carries the first
/// mismatching coefficient. `variant_note` is present for entries with
/// registered formula variants and records the adjudication.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub id: IdentityId,
    pub params: BTreeMap<String, Vec<i64>>,
    pub per_degree: Vec<DegreeVerdict>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub variant_note: Option<String>,
}

impl IdentityReport {
    pub fn all_pass(&self) -> bool {
        self.per_degree.iter().all(|d| d.verdict == Verdict::Pass)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serializes")
    }
}

/// Verifies one identity up to degree `n_max` with the given parameters,
/// producing per-degree verdicts with exact mismatch localization.
pub fn verify(id: IdentityId, n_max: usize, params: &VerifyParams) -> Result<IdentityReport> {
    if n_max < id.min_degree() {
        return Err(Error::ParamOutOfRange(format!(
            "{id} is stated for degrees >= {}, got n_max = {n_max}",
            id.min_degree()
        )));
    }
    for &a in &params.a {
        if id == IdentityId::Thm4Eq38 || id == IdentityId::Eq4041 || id == IdentityId::Thm5 {
            if a < 0 {
                return Err(Error::ParamOutOfRange(format!(
                    "{id} requires a nonnegative order a, got {a}"
                )));
            }
        }
    }
    let prec = params.precision.unwrap_or_else(|| working_precision(n_max));
    let prec = prec.max(n_max + 2);
    let ctx = checks::Ctx {
        n_max,
        prec,
        a: params.a.clone(),
        b: params.b.clone(),
    };
    let (per_degree, variant_note) = checks::run(id, &ctx)?;
    let mut recorded = BTreeMap::new();
    if id.uses_a() {
        recorded.insert("a".to_string(), params.a.clone());
    }
    if id.uses_b() {
        recorded.insert("b".to_string(), params.b.clone());
    }
    Ok(IdentityReport {
        id,
        params: recorded,
        per_degree,
        variant_note,
    })
}

/// Runs the whole registry in order with default parameters.
pub fn verify_all(n_max: usize) -> Result<Vec<IdentityReport>> {
    let params = VerifyParams::default();
    ALL_IDENTITIES
        .iter()
        .map(|&id| verify(id, n_max.max(id.min_degree()), &params))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn id_strings_round_trip() {
        for id in ALL_IDENTITIES {
            assert_eq!(IdentityId::parse(id.as_str()).unwrap(), id);
        }
        assert!(matches!(
            IdentityId::parse("THM99"),
            Err(Error::UnknownIdentity(_))
        ));
    }

    #[test]
    fn report_json_round_trip() {
        let report = verify(IdentityId::Thm1, 3, &VerifyParams::default()).unwrap();
        let json = serde_json::to_string(&report).unwrap();
        let back: IdentityReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, report);
    }

    #[test]
    fn thm1_small_degrees_pass() {
        let report = verify(IdentityId::Thm1, 4, &VerifyParams::default()).unwrap();
        assert!(report.all_pass());
        assert_eq!(report.per_degree.len(), 5);
    }

    #[test]
    fn eq18_degree_zero_trivial() {
        let report = verify(IdentityId::Eq18, 0, &VerifyParams::default()).unwrap();
        assert!(report.all_pass());
        assert_eq!(report.per_degree.len(), 1);
    }

    #[test]
    fn verify_all_smallest_run() {
        let reports = verify_all(1).unwrap();
        assert_eq!(reports.len(), 21);
        let ids: Vec<&str> = reports.iter().map(|r| r.id.as_str()).collect();
        let mut sorted = ids.clone();
        sorted.sort_by_key(|s| {
            ALL_IDENTITIES
                .iter()
                .position(|id| id.as_str() == *s)
                .unwrap()
        });
        assert_eq!(ids, sorted);
    }

    #[test]
    fn n_max_below_range_is_an_error() {
        assert!(matches!(
            verify(IdentityId::Thm2Eq26, 0, &VerifyParams::default()),
            Err(Error::ParamOutOfRange(_))
        ));
    }
}
