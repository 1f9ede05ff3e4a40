//! Degree-based topological indices, computed exactly.
//!
//! | kind          | definition                                   |
//! |---------------|----------------------------------------------|
//! | `Sigma`       | Σ over edges of (d_u − d_v)²                 |
//! | `Albertson`   | Σ over edges of \|d_u − d_v\|                |
//! | `Forgotten`   | Σ over edges of d_u² + d_v²                  |
//! | `Zagreb1`     | Σ over vertices of d_v²                      |
//! | `Zagreb2`     | Σ over edges of d_u · d_v                    |
//! | `Harmonic`    | Σ over edges of 2 / (d_u + d_v)              |
//! | `SigmaTotal`  | Σ over unordered vertex pairs of (d_u − d_v)² |

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::degseq::{self, SequenceError};
use crate::graph::Graph;
use crate::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum IndexKind {
    Sigma,
    Albertson,
    Forgotten,
    Zagreb1,
    Zagreb2,
    Harmonic,
    SigmaTotal,
}

impl IndexKind {
    pub const ALL: [IndexKind; 7] = [
        IndexKind::Sigma,
        IndexKind::Albertson,
        IndexKind::Forgotten,
        IndexKind::Zagreb1,
        IndexKind::Zagreb2,
        IndexKind::Harmonic,
        IndexKind::SigmaTotal,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IndexKind::Sigma => "sigma",
            IndexKind::Albertson => "albertson",
            IndexKind::Forgotten => "forgotten",
            IndexKind::Zagreb1 => "zagreb1",
            IndexKind::Zagreb2 => "zagreb2",
            IndexKind::Harmonic => "harmonic",
            IndexKind::SigmaTotal => "sigma_total",
        }
    }
}

impl fmt::Display for IndexKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IndexKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        IndexKind::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown index {s:?}"))
    }
}

/// Exact index value. Integral for every kind except `Harmonic`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct IndexValue(pub Rational);

impl IndexValue {
    pub fn integer(v: u64) -> Self {
        IndexValue(Rational::from_integer(BigInt::from(v)))
    }

    pub fn as_integer(&self) -> Option<BigInt> {
        self.0.is_integer().then(|| self.0.to_integer())
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }
}

impl fmt::Display for IndexValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn edge_sum(g: &Graph, term: impl Fn(u64, u64) -> u64) -> u64 {
    g.edges().map(|(u, v)| term(g.degree(u) as u64, g.degree(v) as u64)).sum()
}

pub fn sigma(g: &Graph) -> u64 {
    edge_sum(g, |a, b| a.abs_diff(b).pow(2))
}

pub fn albertson(g: &Graph) -> u64 {
    edge_sum(g, |a, b| a.abs_diff(b))
}

pub fn forgotten(g: &Graph) -> u64 {
    edge_sum(g, |a, b| a * a + b * b)
}

pub fn zagreb1(g: &Graph) -> u64 {
    g.degrees().iter().map(|&d| (d as u64).pow(2)).sum()
}

pub fn zagreb2(g: &Graph) -> u64 {
    edge_sum(g, |a, b| a * b)
}

pub fn harmonic(g: &Graph) -> Rational {
    g.edges().fold(Rational::zero(), |acc, (u, v)| {
        let s = (g.degree(u) + g.degree(v)) as u64;
        acc + Rational::new(BigInt::from(2), BigInt::from(s))
    })
}

/// Σ over all unordered vertex pairs, adjacent or not.
pub fn sigma_total(g: &Graph) -> u64 {
    let d = g.degrees();
    let mut total = 0u64;
    for (i, &a) in d.iter().enumerate() {
        for &b in &d[i + 1..] {
            total += (a as u64).abs_diff(b as u64).pow(2);
        }
    }
    total
}

pub fn compute_index(kind: IndexKind, g: &Graph) -> IndexValue {
    match kind {
        IndexKind::Sigma => IndexValue::integer(sigma(g)),
        IndexKind::Albertson => IndexValue::integer(albertson(g)),
        IndexKind::Forgotten => IndexValue::integer(forgotten(g)),
        IndexKind::Zagreb1 => IndexValue::integer(zagreb1(g)),
        IndexKind::Zagreb2 => IndexValue::integer(zagreb2(g)),
        IndexKind::Harmonic => IndexValue(harmonic(g)),
        IndexKind::SigmaTotal => IndexValue::integer(sigma_total(g)),
    }
}

/// σ through the forgotten and second Zagreb indices: F − 2·M2.
pub fn sigma_via_identity(g: &Graph) -> IndexValue {
    IndexValue::integer(forgotten(g) - 2 * zagreb2(g))
}

/// σ of the caterpillar with these spine degrees, in closed form.
///
/// Every pendant edge at spine vertex `i` contributes (d_i − 1)²; spine
/// edges contribute (d_i − d_{i+1})².
pub fn caterpillar_sigma(spine: &[usize]) -> Result<u64, SequenceError> {
    degseq::check_spine(spine)?;
    let l = spine.len();
    let d: Vec<u64> = spine.iter().map(|&x| x as u64).collect();
    let pendant: u64 = (0..l)
        .map(|i| {
            let leaves = if l == 1 {
                d[0]
            } else if i == 0 || i == l - 1 {
                d[i] - 1
            } else {
                d[i] - 2
            };
            leaves * (d[i] - 1).pow(2)
        })
        .sum();
    let spine_edges: u64 = d.windows(2).map(|w| w[0].abs_diff(w[1]).pow(2)).sum();
    Ok(pendant + spine_edges)
}

/// (k−1)³ + (r−1)³ + (k−r)² for the double star with center degrees `r`, `k`.
pub fn double_star_sigma(r: u64, k: u64) -> u64 {
    (k - 1).pow(3) + (r - 1).pow(3) + k.abs_diff(r).pow(2)
}

/// Degree-sequence expression for σ of a tree, evaluated verbatim on the
/// stored order with `L = d.len()`:
///
/// Σ_{i∈{1,L}} (d_i+1)(d_i−1)² + Σ_{i=2}^{L−1} (d_i+2)(d_i−1)²
///   + Σ_{i=2}^{L−1} (d_i − d_{i+1})² + 2L − 2
///
/// This does not agree with σ in general (σ(P4) = 2, formula gives 14);
/// see [`crate::oracle::scan_thm23`].
pub fn thm23_formula(d: &[usize]) -> Result<u64, SequenceError> {
    let l = d.len();
    if l < 2 {
        return Err(SequenceError::SequenceTooShort { len: l, min: 2 });
    }
    let d: Vec<u64> = d.iter().map(|&x| x as u64).collect();
    let sq1 = |x: u64| (x.max(1) - 1).pow(2);
    let ends = (d[0] + 1) * sq1(d[0]) + (d[l - 1] + 1) * sq1(d[l - 1]);
    let middle: u64 = d[1..l - 1].iter().map(|&x| (x + 2) * sq1(x)).sum();
    // 1-based i = 2..L-1 pairs (d_i, d_{i+1})
    let diffs: u64 = (1..l - 1).map(|i| d[i].abs_diff(d[i + 1]).pow(2)).sum();
    Ok(ends + middle + diffs + 2 * l as u64 - 2)
}
