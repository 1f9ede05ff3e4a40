//! Degree sequences, tree realizability and caterpillar realization.

mod prufer;

pub(crate) use prufer::code_multiset;

pub use prufer::{
    decode_into, labeled_tree_count, prufer_decode, prufer_encode, sequence_tree_count,
    trees_with_sequence, MultisetPermutations, PruferCode,
};

use num_bigint::BigInt;
use thiserror::Error;

use crate::graph::{self, Graph};
use crate::Rational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SequenceError {
    #[error("sequence is not non-increasing at index {index}")]
    NotSorted { index: usize },
    #[error("entry {value} at index {index} is not positive")]
    NonPositiveEntry { index: usize, value: i64 },
    #[error("sequence of length {len} is too short (need at least {min})")]
    SequenceTooShort { len: usize, min: usize },
    #[error("spine entry {value} at index {index} is below 2")]
    EntryBelowTwo { index: usize, value: usize },
    #[error("Prüfer code has length {got}, expected {expected}")]
    BadLength { expected: usize, got: usize },
    #[error("label {value} is outside 0..{bound}")]
    VertexOutOfRange { value: usize, bound: usize },
    #[error("graph is not a tree")]
    NotATree,
    #[error("no tree has degree sequence {0:?}")]
    NotRealizable(Vec<usize>),
    #[error("cannot parse degree sequence: {0}")]
    Parse(String),
}

/// Validated degree sequence: positive entries, non-increasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DegreeSequence(Vec<usize>);

impl DegreeSequence {
    /// Accepts `entries` as given; an unsorted input is an error, never re-sorted.
    pub fn validate(entries: &[i64]) -> Result<Self, SequenceError> {
        if entries.is_empty() {
            return Err(SequenceError::SequenceTooShort { len: 0, min: 1 });
        }
        if let Some((index, &value)) = entries.iter().enumerate().find(|(_, &v)| v < 1) {
            return Err(SequenceError::NonPositiveEntry { index, value });
        }
        if let Some(index) = entries.windows(2).position(|w| w[0] < w[1]) {
            return Err(SequenceError::NotSorted { index: index + 1 });
        }
        Ok(DegreeSequence(entries.iter().map(|&v| v as usize).collect()))
    }

    /// Degree sequence of a graph, sorted. Fails on isolated vertices.
    pub fn of_graph(g: &Graph) -> Result<Self, SequenceError> {
        let d: Vec<i64> = g.sorted_degrees().into_iter().map(|x| x as i64).collect();
        Self::validate(&d)
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn max(&self) -> usize {
        self.0[0]
    }

    pub fn min(&self) -> usize {
        self.0[self.0.len() - 1]
    }

    /// Whether some tree on `L` vertices has exactly these degrees.
    pub fn tree_realizable(&self) -> Result<bool, SequenceError> {
        if self.len() < 2 {
            return Err(SequenceError::SequenceTooShort { len: self.len(), min: 2 });
        }
        Ok(self.sum() == 2 * (self.len() - 1))
    }

    /// Arithmetic mean of the entries, exact.
    pub fn lambda_avg(&self) -> Rational {
        mean(&self.0)
    }
}

/// Exact mean of a non-empty slice.
pub fn mean(entries: &[usize]) -> Rational {
    let sum: usize = entries.iter().sum();
    Rational::new(BigInt::from(sum), BigInt::from(entries.len()))
}

/// Parses `15,13,11` (whitespace tolerated) into raw integers.
pub fn parse_entries(text: &str) -> Result<Vec<i64>, SequenceError> {
    let text = text.trim().trim_start_matches('(').trim_end_matches(')');
    text.split(',')
        .map(|f| {
            let f = f.trim();
            f.parse::<i64>().map_err(|e| SequenceError::Parse(format!("{f:?}: {e}")))
        })
        .collect()
}

/// Raw entries that must all be positive, in any order.
pub fn positive_entries(raw: &[i64]) -> Result<Vec<usize>, SequenceError> {
    if raw.is_empty() {
        return Err(SequenceError::SequenceTooShort { len: 0, min: 1 });
    }
    raw.iter()
        .enumerate()
        .map(|(index, &value)| {
            if value < 1 {
                Err(SequenceError::NonPositiveEntry { index, value })
            } else {
                Ok(value as usize)
            }
        })
        .collect()
}

/// Number of pendant leaves attached to spine vertex `i` of a caterpillar.
fn spine_leaves(spine: &[usize], i: usize) -> usize {
    let l = spine.len();
    if l == 1 {
        spine[0]
    } else if i == 0 || i == l - 1 {
        spine[i] - 1
    } else {
        spine[i] - 2
    }
}

pub(crate) fn check_spine(spine: &[usize]) -> Result<(), SequenceError> {
    match spine.len() {
        0 => Err(SequenceError::SequenceTooShort { len: 0, min: 1 }),
        1 if spine[0] == 0 => Err(SequenceError::EntryBelowTwo { index: 0, value: 0 }),
        1 => Ok(()),
        _ => match spine.iter().position(|&d| d < 2) {
            Some(index) => Err(SequenceError::EntryBelowTwo { index, value: spine[index] }),
            None => Ok(()),
        },
    }
}

/// Caterpillar whose spine vertices `0..L` have total degrees `spine` in
/// the order given; spine ends carry `d - 1` pendant leaves, interior
/// spine vertices `d - 2`. A single entry gives a star.
pub fn caterpillar_realize(spine: &[usize]) -> Result<Graph, SequenceError> {
    check_spine(spine)?;
    let l = spine.len();
    let leaves: usize = (0..l).map(|i| spine_leaves(spine, i)).sum();
    if l == 1 {
        return Ok(graph::star(leaves));
    }
    let mut edges: Vec<(usize, usize)> = (1..l).map(|i| (i - 1, i)).collect();
    let mut next = l;
    for i in 0..l {
        for _ in 0..spine_leaves(spine, i) {
            edges.push((i, next));
            next += 1;
        }
    }
    Ok(Graph::from_trusted_edges(next, &edges))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::indices::sigma;

    fn seq(v: &[i64]) -> DegreeSequence {
        DegreeSequence::validate(v).unwrap()
    }

    #[test]
    fn validation() {
        assert!(DegreeSequence::validate(&[15, 13, 11, 10, 8, 6, 4]).is_ok());
        assert_eq!(DegreeSequence::validate(&[1, 2]), Err(SequenceError::NotSorted { index: 1 }));
        assert_eq!(
            DegreeSequence::validate(&[2, 0]),
            Err(SequenceError::NonPositiveEntry { index: 1, value: 0 })
        );
        assert_eq!(
            DegreeSequence::validate(&[]),
            Err(SequenceError::SequenceTooShort { len: 0, min: 1 })
        );
    }

    #[test]
    fn realizability() {
        assert_eq!(seq(&[3, 1, 1, 1]).tree_realizable(), Ok(true));
        assert_eq!(seq(&[2, 2, 2]).tree_realizable(), Ok(false));
        assert_eq!(seq(&[2, 2, 1, 1]).tree_realizable(), Ok(true));
        assert!(matches!(seq(&[4]).tree_realizable(), Err(SequenceError::SequenceTooShort { .. })));
    }

    #[test]
    fn lambda() {
        let r = |a: i64, b: i64| Rational::new(a.into(), b.into());
        assert_eq!(seq(&[15, 13, 11, 10, 8, 6, 4]).lambda_avg(), r(67, 7));
        assert_eq!(seq(&[5]).lambda_avg(), r(5, 1));
        assert_eq!(seq(&[2, 2, 2, 2]).lambda_avg(), r(2, 1));
    }

    #[test]
    fn caterpillars() {
        let t = caterpillar_realize(&[15, 13, 11, 10, 8, 6, 4]).unwrap();
        assert!(t.is_tree());
        // 7 spine vertices plus 67 - 2·6 leaves; the tabulated n = 67 is the entry sum
        assert_eq!(t.vertex_count(), 62);
        assert_eq!(sigma(&t), 6318);
        let mut inner: Vec<_> = t.degrees().into_iter().filter(|&d| d > 1).collect();
        inner.sort_unstable_by(|a, b| b.cmp(a));
        assert_eq!(inner, vec![15, 13, 11, 10, 8, 6, 4]);

        assert_eq!(caterpillar_realize(&[3]).unwrap(), graph::star(3));
        assert_eq!(caterpillar_realize(&[2, 2]).unwrap().sorted_degrees(), vec![2, 2, 1, 1]);
        assert!(caterpillar_realize(&[2, 2]).unwrap().is_tree());
        assert_eq!(
            caterpillar_realize(&[3, 1, 2]),
            Err(SequenceError::EntryBelowTwo { index: 1, value: 1 })
        );
        assert!(caterpillar_realize(&[]).is_err());
    }

    #[test]
    fn parsing() {
        assert_eq!(parse_entries("15,13, 11").unwrap(), vec![15, 13, 11]);
        assert_eq!(parse_entries("(3,1,1,1)").unwrap(), vec![3, 1, 1, 1]);
        assert!(parse_entries("3,,1").is_err());
        assert_eq!(
            positive_entries(&[3, -1]),
            Err(SequenceError::NonPositiveEntry { index: 1, value: -1 })
        );
    }
}
