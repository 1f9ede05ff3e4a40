//! Prüfer codes and fixed-degree tree enumeration.

use super::{DegreeSequence, SequenceError};
use crate::graph::Graph;

/// Prüfer code of a labeled tree on `len() + 2` vertices.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PruferCode(pub Vec<usize>);

impl PruferCode {
    /// Number of labeled vertices of the encoded tree.
    pub fn vertex_count(&self) -> usize {
        self.0.len() + 2
    }
}

/// Decodes `code` into tree edges and vertex degrees, reusing the buffers.
///
/// `code` must have length `l - 2` with entries `< l`; not checked here.
pub fn decode_into(code: &[usize], l: usize, edges: &mut Vec<(usize, usize)>, degree: &mut Vec<usize>) {
    edges.clear();
    degree.clear();
    degree.resize(l, 1);
    for &v in code {
        degree[v] += 1;
    }
    // degree is consumed below, so keep a copy for the caller
    let mut remaining = degree.clone();
    let mut ptr = remaining.iter().position(|&d| d == 1).unwrap_or(0);
    let mut leaf = ptr;
    for &v in code {
        edges.push((leaf.min(v), leaf.max(v)));
        remaining[v] -= 1;
        if remaining[v] == 1 && v < ptr {
            leaf = v;
        } else {
            ptr += 1;
            while remaining[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    edges.push((leaf.min(l - 1), leaf.max(l - 1)));
}

/// The unique labeled tree on `0..l` with this code.
pub fn prufer_decode(code: &PruferCode, l: usize) -> Result<Graph, SequenceError> {
    if l < 2 {
        return Err(SequenceError::SequenceTooShort { len: l, min: 2 });
    }
    if code.0.len() != l - 2 {
        return Err(SequenceError::BadLength { expected: l - 2, got: code.0.len() });
    }
    if let Some(&value) = code.0.iter().find(|&&v| v >= l) {
        return Err(SequenceError::VertexOutOfRange { value, bound: l });
    }
    let mut edges = Vec::with_capacity(l - 1);
    let mut degree = Vec::with_capacity(l);
    decode_into(&code.0, l, &mut edges, &mut degree);
    Ok(Graph::from_trusted_edges(l, &edges))
}

/// Inverse of [`prufer_decode`].
pub fn prufer_encode(t: &Graph) -> Result<PruferCode, SequenceError> {
    let l = t.vertex_count();
    if !t.is_tree() || l < 2 {
        return Err(SequenceError::NotATree);
    }
    // root at l - 1 so it is never removed
    let mut parent = vec![usize::MAX; l];
    let mut stack = vec![l - 1];
    parent[l - 1] = l - 1;
    while let Some(u) = stack.pop() {
        for &v in t.neighbors(u) {
            if parent[v] == usize::MAX {
                parent[v] = u;
                stack.push(v);
            }
        }
    }
    let mut degree = t.degrees();
    let mut ptr = degree.iter().position(|&d| d == 1).unwrap_or(0);
    let mut leaf = ptr;
    let mut code = Vec::with_capacity(l - 2);
    for _ in 0..l - 2 {
        let next = parent[leaf];
        code.push(next);
        degree[next] -= 1;
        if degree[next] == 1 && next < ptr {
            leaf = next;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    Ok(PruferCode(code))
}

/// `l^(l-2)`, or `None` on overflow.
pub fn labeled_tree_count(l: usize) -> Option<u128> {
    match l {
        0 => None,
        1 => Some(1),
        _ => (l as u128).checked_pow((l - 2) as u32),
    }
}

/// `(L-2)! / prod (d_i - 1)!` for a tree-realizable sequence, or `None` on overflow.
pub fn sequence_tree_count(d: &DegreeSequence) -> Option<u128> {
    // multinomial as a product of binomials keeps intermediates small
    let mut total: u128 = 1;
    let mut placed: u128 = 0;
    for &di in d.entries() {
        for j in 1..di as u128 {
            placed += 1;
            total = total.checked_mul(placed)? / j;
        }
    }
    Some(total)
}

/// Distinct permutations of a multiset in lexicographic order.
#[derive(Clone, Debug)]
pub struct MultisetPermutations {
    current: Option<Vec<usize>>,
}

impl MultisetPermutations {
    pub fn new(mut items: Vec<usize>) -> Self {
        items.sort_unstable();
        MultisetPermutations { current: Some(items) }
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

impl Iterator for MultisetPermutations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.take()?;
        let mut succ = out.clone();
        if next_permutation(&mut succ) {
            self.current = Some(succ);
        }
        Some(out)
    }
}

/// Code multiset for `d`: label `i` repeated `d_i - 1` times.
pub(crate) fn code_multiset(d: &DegreeSequence) -> Vec<usize> {
    d.entries()
        .iter()
        .enumerate()
        .flat_map(|(label, &di)| std::iter::repeat_n(label, di - 1))
        .collect()
}

/// Every labeled tree on `0..L` in which vertex `i` has degree `d_i`,
/// each exactly once, in lexicographic order of Prüfer code.
pub fn trees_with_sequence(
    d: &DegreeSequence,
) -> Result<impl Iterator<Item = (PruferCode, Graph)>, SequenceError> {
    if !d.tree_realizable()? {
        return Err(SequenceError::NotRealizable(d.entries().to_vec()));
    }
    let l = d.len();
    Ok(MultisetPermutations::new(code_multiset(d)).map(move |code| {
        let mut edges = Vec::with_capacity(l - 1);
        let mut degree = Vec::with_capacity(l);
        decode_into(&code, l, &mut edges, &mut degree);
        (PruferCode(code), Graph::from_trusted_edges(l, &edges))
    }))
}
