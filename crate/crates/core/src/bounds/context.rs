use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::BoundError;
use crate::degseq::{self, DegreeSequence};
use crate::graph::Graph;
use crate::indices;
use crate::Rational;

/// How a listed sequence maps to the scalars `n` and `m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Convention {
    /// The entries are the complete degree sequence of a tree: `n = L`, `m = L - 1`.
    FullSequence,
    /// Tabulated rows: `n` is the entry sum, `m = n - 1`; index sums still run over the `L` entries.
    Table,
}

impl FromStr for Convention {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "full" | "full_sequence" => Ok(Convention::FullSequence),
            "table" => Ok(Convention::Table),
            _ => Err(format!("unknown convention {s:?} (expected `table` or `full`)")),
        }
    }
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Convention::FullSequence => "full",
            Convention::Table => "table",
        })
    }
}

/// Optional inputs layered over the derived scalars.
#[derive(Clone, Debug, Default)]
pub struct Overrides {
    pub k: Option<i64>,
    pub eta: Option<u32>,
    pub sigma: Option<u64>,
    pub harmonic: Option<Rational>,
    pub forgotten: Option<u64>,
    pub zagreb1: Option<u64>,
}

impl Overrides {
    /// σ, F, M1 and H taken from a graph.
    pub fn from_graph(g: &Graph) -> Self {
        Overrides {
            sigma: Some(indices::sigma(g)),
            harmonic: Some(indices::harmonic(g)),
            forgotten: Some(indices::forgotten(g)),
            zagreb1: Some(indices::zagreb1(g)),
            ..Default::default()
        }
    }
}

pub const DEFAULT_K: i64 = 2;
pub const DEFAULT_ETA: u32 = 1;

/// Scalars every bound expression is evaluated on.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundContext {
    /// Entries in listed order; `d_1` is `entries[0]`.
    pub entries: Vec<usize>,
    pub convention: Convention,
    pub n: i64,
    pub m: i64,
    /// Δ, the first listed entry.
    pub max_degree: i64,
    /// δ, the last listed entry.
    pub min_degree: i64,
    /// Mean of the listed entries.
    pub lambda: Rational,
    pub k: i64,
    pub eta: u32,
    pub sigma: Option<u64>,
    pub harmonic: Option<Rational>,
    pub forgotten: Option<u64>,
    pub zagreb1: Option<u64>,
}

impl BoundContext {
    /// Builds a context from listed entries.
    ///
    /// `FullSequence` requires a non-increasing tree degree sequence
    /// (Σ d_i = 2(L − 1)); `Table` accepts any positive entries in any order.
    pub fn from_entries(
        entries: &[usize],
        convention: Convention,
        overrides: Overrides,
    ) -> Result<Self, BoundError> {
        let raw: Vec<i64> = entries.iter().map(|&x| x as i64).collect();
        let entries = match convention {
            Convention::FullSequence => DegreeSequence::validate(&raw)?.entries().to_vec(),
            Convention::Table => degseq::positive_entries(&raw)?,
        };
        let l = entries.len();
        let sum: usize = entries.iter().sum();
        let n = match convention {
            Convention::FullSequence => {
                if l < 2 || sum != 2 * (l - 1) {
                    return Err(BoundError::SumMismatch { sum, expected: 2 * l.saturating_sub(1) });
                }
                l as i64
            }
            Convention::Table => sum as i64,
        };
        let k = overrides.k.unwrap_or(DEFAULT_K);
        if k < 1 {
            return Err(BoundError::InvalidParameter(format!("k must be at least 1, got {k}")));
        }
        Ok(BoundContext {
            lambda: degseq::mean(&entries),
            max_degree: entries[0] as i64,
            min_degree: entries[l - 1] as i64,
            entries,
            convention,
            n,
            m: n - 1,
            k,
            eta: overrides.eta.unwrap_or(DEFAULT_ETA),
            sigma: overrides.sigma,
            harmonic: overrides.harmonic,
            forgotten: overrides.forgotten,
            zagreb1: overrides.zagreb1,
        })
    }

    /// Full-sequence context of a tree with σ, F, M1 and H filled in.
    pub fn for_tree(t: &Graph, k: Option<i64>, eta: Option<u32>) -> Result<Self, BoundError> {
        let d = t.sorted_degrees();
        let overrides = Overrides { k, eta, ..Overrides::from_graph(t) };
        BoundContext::from_entries(&d, Convention::FullSequence, overrides)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// d_i with 1-based `i`, as in the bound formulas.
    pub(crate) fn d(&self, i: usize) -> i64 {
        self.entries[i - 1] as i64
    }

    pub(crate) fn echo(&self) -> ContextEcho {
        ContextEcho {
            entries: self.entries.clone(),
            convention: self.convention,
            n: self.n,
            m: self.m,
            max_degree: self.max_degree,
            min_degree: self.min_degree,
            lambda: self.lambda.to_string(),
            k: self.k,
            eta: self.eta,
            sigma: self.sigma,
        }
    }
}

/// Builds a context from a validated sequence.
pub fn build_context(
    d: &DegreeSequence,
    convention: Convention,
    overrides: Overrides,
) -> Result<BoundContext, BoundError> {
    BoundContext::from_entries(d.entries(), convention, overrides)
}

/// Serializable summary of the context a result was computed on.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ContextEcho {
    pub entries: Vec<usize>,
    pub convention: Convention,
    pub n: i64,
    pub m: i64,
    pub max_degree: i64,
    pub min_degree: i64,
    pub lambda: String,
    pub k: i64,
    pub eta: u32,
    pub sigma: Option<u64>,
}

pub(crate) fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_context() {
        let ctx = BoundContext::from_entries(
            &[20, 18, 16, 13, 10, 7, 3],
            Convention::Table,
            Overrides::default(),
        )
        .unwrap();
        assert_eq!((ctx.n, ctx.m, ctx.max_degree, ctx.min_degree), (87, 86, 20, 3));
        assert_eq!(ctx.lambda, Rational::new(87.into(), 7.into()));
        assert_eq!((ctx.k, ctx.eta), (DEFAULT_K, DEFAULT_ETA));
    }

    #[test]
    fn table_context_keeps_listed_order() {
        let ctx = BoundContext::from_entries(
            &[42, 31, 29, 19, 26, 24, 21],
            Convention::Table,
            Overrides::default(),
        )
        .unwrap();
        assert_eq!((ctx.n, ctx.max_degree, ctx.min_degree), (192, 42, 21));
    }

    #[test]
    fn full_context() {
        let d = DegreeSequence::validate(&[2, 2, 1, 1]).unwrap();
        let ctx = build_context(&d, Convention::FullSequence, Overrides::default()).unwrap();
        assert_eq!((ctx.n, ctx.m, ctx.max_degree, ctx.min_degree), (4, 3, 2, 1));
        assert_eq!(ctx.lambda, Rational::new(3.into(), 2.into()));

        let bad = DegreeSequence::validate(&[3, 1, 1]).unwrap();
        assert!(matches!(
            build_context(&bad, Convention::FullSequence, Overrides::default()),
            Err(BoundError::SumMismatch { sum: 5, expected: 4 })
        ));
        assert!(BoundContext::from_entries(&[1, 2, 1], Convention::FullSequence, Overrides::default())
            .is_err());
    }

    #[test]
    fn rejects_bad_k() {
        let ov = Overrides { k: Some(0), ..Default::default() };
        assert!(matches!(
            BoundContext::from_entries(&[3, 2], Convention::Table, ov),
            Err(BoundError::InvalidParameter(_))
        ));
    }

    #[test]
    fn tree_context_fills_indices() {
        let ctx = BoundContext::for_tree(&crate::graph::star(6), None, None).unwrap();
        assert_eq!(ctx.sigma, Some(150));
        assert_eq!(ctx.forgotten, Some(6 * 37));
        assert_eq!(ctx.n, 7);
    }
}
