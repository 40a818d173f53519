//! Simple connected signed graphs.
//!
//! Vertices are `0..n` in the library API. The edge-list text format and all
//! serialized outputs label vertices `1..=n`.

use std::collections::VecDeque;

use thiserror::Error;

use crate::sign::Sign;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: bad sign token {token:?}")]
    BadSign { line: usize, token: String },
    #[error("loop edge at vertex {}", .vertex + 1)]
    LoopEdge { vertex: usize },
    #[error("duplicate edge {{{}, {}}}", .u + 1, .v + 1)]
    DuplicateEdge { u: usize, v: usize },
    #[error("vertex {} out of range 1..={n}", .vertex.wrapping_add(1))]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("graph is not connected (vertex {} unreachable from vertex 1)", .unreachable + 1)]
    Disconnected { unreachable: usize },
    #[error("graph has no vertices")]
    Empty,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub sign: Sign,
}

impl Edge {
    pub fn new(u: usize, v: usize, sign: Sign) -> Self {
        Edge { u, v, sign }
    }

    /// Endpoints ordered `(min, max)`.
    pub fn key(&self) -> (usize, usize) {
        (self.u.min(self.v), self.u.max(self.v))
    }
}

/// Vertex labelling `ζ: V → {+1, −1}` used to switch a signed graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SwitchingFunction(Vec<Sign>);

impl SwitchingFunction {
    pub fn new(zeta: Vec<Sign>) -> Self {
        SwitchingFunction(zeta)
    }

    pub fn identity(n: usize) -> Self {
        SwitchingFunction(vec![Sign::Plus; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, v: usize) -> Sign {
        self.0[v]
    }

    pub fn as_slice(&self) -> &[Sign] {
        &self.0
    }
}

/// A simple, connected, undirected graph with a `±1` sign on every edge.
///
/// Immutable after construction. Neighbor lists are sorted ascending; the edge
/// list keeps the order and orientation it was built with so that emitted
/// files are reproducible.
#[derive(Clone, Debug)]
pub struct SignedGraph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<(usize, Sign)>>,
}

impl PartialEq for SignedGraph {
    /// Same vertex count and same signed edge set, regardless of edge order.
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}

impl Eq for SignedGraph {}

impl SignedGraph {
    /// Builds and validates a signed graph on vertices `0..n`.
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize, Sign)>,
    {
        let g = Self::build(n, edges)?;
        g.check_connected()?;
        Ok(g)
    }

    // Validates simplicity and ranges but not connectivity.
    fn build<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize, Sign)>,
    {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut adj: Vec<Vec<(usize, Sign)>> = vec![Vec::new(); n];
        let mut list = Vec::new();
        for (u, v, sign) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(GraphError::LoopEdge { vertex: u });
            }
            if adj[u].iter().any(|&(w, _)| w == v) {
                return Err(GraphError::DuplicateEdge { u, v });
            }
            adj[u].push((v, sign));
            adj[v].push((u, sign));
            list.push(Edge::new(u, v, sign));
        }
        for nbrs in &mut adj {
            nbrs.sort_unstable_by_key(|&(w, _)| w);
        }
        Ok(SignedGraph { n, edges: list, adj })
    }

    fn check_connected(&self) -> Result<(), GraphError> {
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(x) = queue.pop_front() {
            for &(y, _) in &self.adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        match seen.iter().position(|&s| !s) {
            Some(unreachable) => Err(GraphError::Disconnected { unreachable }),
            None => Ok(()),
        }
    }

    /// All-positive signed graph on an unsigned edge list.
    pub fn all_positive<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Self::new(n, edges.into_iter().map(|(u, v)| (u, v, Sign::Plus)))
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Neighbors of `v` with edge signs, sorted by neighbor.
    pub fn neighbors(&self, v: usize) -> &[(usize, Sign)] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn sign(&self, u: usize, v: usize) -> Option<Sign> {
        self.adj[u]
            .binary_search_by_key(&v, |&(w, _)| w)
            .ok()
            .map(|i| self.adj[u][i].1)
    }

    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.sign(u, v).is_some()
    }

    pub fn is_complete(&self) -> bool {
        2 * self.size() == self.n * (self.n - 1)
    }

    /// `Σ^ζ`: every edge sign multiplied by `ζ(u)ζ(v)`.
    ///
    /// Panics if `zeta` is not defined on exactly the vertices of the graph.
    pub fn switch(&self, zeta: &SwitchingFunction) -> SignedGraph {
        assert_eq!(zeta.len(), self.n, "switching function must be total on V");
        self.map_signs(|e| zeta.get(e.u) * e.sign * zeta.get(e.v))
    }

    /// `−Σ`: every edge sign flipped.
    pub fn negate(&self) -> SignedGraph {
        self.map_signs(|e| -e.sign)
    }

    /// The underlying graph as an all-positive signed graph.
    pub fn underlying(&self) -> SignedGraph {
        self.map_signs(|_| Sign::Plus)
    }

    /// Same underlying graph with signs taken from `signs`, in edge-list order.
    pub fn with_signs(&self, signs: &[Sign]) -> SignedGraph {
        assert_eq!(signs.len(), self.size());
        let mut i = 0;
        self.map_signs(|_| {
            i += 1;
            signs[i - 1]
        })
    }

    fn map_signs(&self, mut f: impl FnMut(&Edge) -> Sign) -> SignedGraph {
        let signs: Vec<(usize, usize, Sign)> = self.edges.iter().map(|e| (e.u, e.v, f(e))).collect();
        Self::build(self.n, signs).expect("same underlying graph")
    }

    /// Subgraph induced by `vertices`, relabelled `0..k` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Result<SignedGraph, GraphError> {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            if v >= self.n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n: self.n });
            }
            index[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| index[e.u] != usize::MAX && index[e.v] != usize::MAX)
            .map(|e| (index[e.u], index[e.v], e.sign));
        SignedGraph::new(vertices.len(), edges)
    }

    /// Proper 2-colouring of the underlying graph, if one exists.
    /// Returned as `true`/`false` per vertex with vertex 0 coloured `true`.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let mut color: Vec<Option<bool>> = vec![None; self.n];
        color[0] = Some(true);
        let mut queue = VecDeque::from([0]);
        while let Some(x) = queue.pop_front() {
            let cx = color[x].unwrap();
            for &(y, _) in &self.adj[x] {
                match color[y] {
                    None => {
                        color[y] = Some(!cx);
                        queue.push_back(y);
                    }
                    Some(cy) if cy == cx => return None,
                    Some(_) => {}
                }
            }
        }
        Some(color.into_iter().map(|c| c.unwrap()).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Sign of the closed walk `cycle[0] cycle[1] ... cycle[k-1] cycle[0]`.
    /// Returns `None` if some consecutive pair is not an edge.
    pub fn cycle_sign(&self, cycle: &[usize]) -> Option<Sign> {
        let k = cycle.len();
        (0..k).map(|i| self.sign(cycle[i], cycle[(i + 1) % k])).product()
    }

    /// Sign of the walk `path[0] path[1] ... path[k-1]`.
    pub fn path_sign(&self, path: &[usize]) -> Option<Sign> {
        path.windows(2).map(|w| self.sign(w[0], w[1])).product()
    }
}
