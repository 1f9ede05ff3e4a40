//! Undirected simple graphs on dense vertex ids `0..n`.

use std::collections::HashSet;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("edge ({0}, {1}) has an endpoint outside 0..{2}")]
    VertexOutOfRange(usize, usize, usize),
    #[error("edge list line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// Immutable simple undirected graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Graph {
    /// Graph with `vertex_count` isolated vertices.
    pub fn empty(vertex_count: usize) -> Self {
        Graph { adjacency: vec![Vec::new(); vertex_count], edge_count: 0 }
    }

    /// Builds a graph, rejecting self-loops, repeated pairs (in either
    /// orientation) and endpoints `>= vertex_count`.
    pub fn from_edges(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut seen = HashSet::with_capacity(edges.len());
        let mut adjacency = vec![Vec::new(); vertex_count];
        for &(u, v) in edges {
            if u >= vertex_count || v >= vertex_count {
                return Err(GraphError::VertexOutOfRange(u, v, vertex_count));
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(GraphError::DuplicateEdge(u, v));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        Ok(Graph { adjacency, edge_count: edges.len() })
    }

    /// Skips validation; callers guarantee a simple edge set in range.
    pub(crate) fn from_trusted_edges(vertex_count: usize, edges: &[(usize, usize)]) -> Self {
        let mut adjacency = vec![Vec::new(); vertex_count];
        for &(u, v) in edges {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        Graph { adjacency, edge_count: edges.len() }
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    /// Degree of every vertex, indexed by vertex id.
    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    /// Degrees sorted non-increasing.
    pub fn sorted_degrees(&self) -> Vec<usize> {
        let mut d = self.degrees();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// Each edge once, as `(u, v)` with `u < v`, ordered by `u` then adjacency order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    /// Same graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let edges: Vec<_> = self.edges().map(|(u, v)| (perm[u], perm[v])).collect();
        Graph::from_trusted_edges(self.vertex_count(), &edges)
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return false;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = stack.pop() {
            for &v in &self.adjacency[u] {
                if !seen[v] {
                    seen[v] = true;
                    reached += 1;
                    stack.push(v);
                }
            }
        }
        reached == n
    }

    /// Connected with exactly `n - 1` edges.
    pub fn is_tree(&self) -> bool {
        let n = self.vertex_count();
        n > 0 && self.edge_count + 1 == n && self.is_connected()
    }
}

/// Path on `n` vertices, `0 - 1 - ... - (n-1)`.
pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_trusted_edges(n, &edges)
}

/// Star with center 0 and `leaves` pendant vertices.
pub fn star(leaves: usize) -> Graph {
    let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
    Graph::from_trusted_edges(leaves + 1, &edges)
}

/// Double star: adjacent centers 0 and 1 of degrees `k` and `r`.
pub fn double_star(r: usize, k: usize) -> Graph {
    let mut edges = vec![(0, 1)];
    let mut next = 2;
    for _ in 1..k {
        edges.push((0, next));
        next += 1;
    }
    for _ in 1..r {
        edges.push((1, next));
        next += 1;
    }
    Graph::from_trusted_edges(next, &edges)
}

/// Parses the whitespace edge-list format.
///
/// One edge per line; `#` lines and blank lines are skipped. The first
/// data line may be `n <count>`; otherwise the vertex count is one more
/// than the largest id seen.
pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut declared = None;
    let mut edges = Vec::new();
    let mut first = true;
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let line_no = idx + 1;
        let fields: Vec<&str> = line.split_whitespace().collect();
        if first && fields.first() == Some(&"n") {
            first = false;
            if fields.len() != 2 {
                return Err(GraphError::Parse { line: line_no, msg: "expected `n <count>`".into() });
            }
            let n = fields[1].parse::<usize>().map_err(|e| GraphError::Parse {
                line: line_no,
                msg: format!("bad vertex count: {e}"),
            })?;
            declared = Some(n);
            continue;
        }
        first = false;
        if fields.len() != 2 {
            return Err(GraphError::Parse {
                line: line_no,
                msg: format!("expected two vertex ids, found {}", fields.len()),
            });
        }
        let mut ids = [0usize; 2];
        for (slot, f) in ids.iter_mut().zip(&fields) {
            *slot = f.parse().map_err(|e| GraphError::Parse {
                line: line_no,
                msg: format!("bad vertex id {f:?}: {e}"),
            })?;
        }
        edges.push((ids[0], ids[1]));
    }
    let n = declared.unwrap_or_else(|| edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0));
    Graph::from_edges(n, &edges)
}
