//! Machine-readable output records and their three renderings.

use clap::ValueEnum;
use ehrkit::EhrhartPolynomial;
use serde::{Deserialize, Serialize};

/// The three polytope families the CLI can address.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    /// Unit n-cube sliced at coordinate sum exactly k (1 <= k <= n-1).
    Hypersimplex,
    /// Unit (n-1)-cube with coordinate sum in (k-1, k]; closed for k = 1.
    #[value(alias = "half_open")]
    HalfOpen,
    /// Unit n-cube with coordinate sum at most k (1 <= k <= n).
    Independence,
}

impl Family {
    /// The snake_case token used in JSON and CSV output.
    pub fn token(self) -> &'static str {
        match self {
            Family::Hypersimplex => "hypersimplex",
            Family::HalfOpen => "half_open",
            Family::Independence => "independence",
        }
    }
}

/// One polynomial result: exact coefficients as `p/q` strings in lowest
/// terms (constant term first), plus optional exact evaluations. Counts are
/// serialized as decimal strings so arbitrary precision survives JSON.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub family: Family,
    pub k: u64,
    pub n: u64,
    /// Dimension of the polytope = degree of the polynomial.
    pub dim: usize,
    pub coefficients: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub evaluations: Option<Vec<(u64, String)>>,
}

impl OutputRecord {
    /// Builds the record for one polynomial, evaluating it at the requested
    /// dilations.
    pub fn new(family: Family, k: u64, n: u64, poly: &EhrhartPolynomial, evals: &[u64]) -> Self {
        let evaluations = if evals.is_empty() {
            None
        } else {
            Some(
                evals
                    .iter()
                    .map(|&t| {
                        let count = poly
                            .eval_count(t)
                            .expect("counting polynomials take integer values at integer points");
                        (t, count.to_string())
                    })
                    .collect(),
            )
        };
        OutputRecord {
            family,
            k,
            n,
            dim: poly.degree(),
            coefficients: poly.coeffs().iter().map(|c| c.to_string()).collect(),
            evaluations,
        }
    }

    /// Compact single-line JSON.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("record serialization cannot fail")
    }

    /// Long-form CSV rows, one coefficient per row (no header).
    pub fn csv_rows(&self) -> Vec<String> {
        self.coefficients
            .iter()
            .enumerate()
            .map(|(degree, c)| {
                format!("{},{},{},{degree},{c}", self.family.token(), self.k, self.n)
            })
            .collect()
    }
}

/// The CSV header matching [`OutputRecord::csv_rows`].
pub const CSV_HEADER: &str = "family,k,n,degree,coefficient";

/// Human-readable one-liner for a record's polynomial.
pub fn plain_line(family: Family, k: u64, n: u64, poly: &EhrhartPolynomial) -> String {
    format!("{} ({k}, {n}): {poly}", family.token())
}
