//! Simple undirected graphs on at most 64 vertices.
//!
//! Every neighborhood is a [`VertexSet`] bitmask, so the game engine can
//! evaluate coverage and legality with a handful of word operations.

mod bitset;
pub mod family;
pub mod graph6;

use std::fmt;

use thiserror::Error;

pub use bitset::{Iter as VertexIter, VertexSet, MAX_VERTICES};
pub use family::Family;
pub use graph6::Graph6Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("a graph needs at least one vertex")]
    Empty,
    #[error("{0} vertices exceeds the cap of {MAX_VERTICES}")]
    TooManyVertices(usize),
    #[error("edge ({0}, {1}) references a vertex outside 0..{2}")]
    VertexOutOfRange(usize, usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("{family} requires {param} >= {min}, got {got}")]
    ParameterTooSmall {
        family: &'static str,
        param: &'static str,
        min: usize,
        got: usize,
    },
    #[error("{0} labels given for {1} vertices")]
    LabelCount(usize, usize),
}

/// An immutable simple graph.
///
/// Equality and hashing look at the adjacency structure only; display
/// labels are ignored.
#[derive(Clone)]
pub struct Graph {
    adj: Vec<VertexSet>,
    labels: Option<Vec<String>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.adj == other.adj
    }
}

impl Eq for Graph {}

impl std::hash::Hash for Graph {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.adj.hash(state);
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(Graph {
            adj: vec![VertexSet::EMPTY; n],
            labels: None,
        })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from raw neighborhood masks, symmetrizing them.
    pub(crate) fn from_adjacency(adj: Vec<VertexSet>) -> Self {
        let n = adj.len();
        debug_assert!((1..=MAX_VERTICES).contains(&n));
        let mut sym = adj.clone();
        for (v, nb) in adj.iter().enumerate() {
            for u in nb.iter() {
                sym[u].insert(v);
            }
        }
        for (v, nb) in sym.iter_mut().enumerate() {
            nb.remove(v);
            *nb &= VertexSet::full(n);
        }
        Graph {
            adj: sym,
            labels: None,
        }
    }

    fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        let n = self.n();
        if u >= n || v >= n {
            return Err(GraphError::VertexOutOfRange(u, v, n));
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, GraphError> {
        if labels.len() != self.n() {
            return Err(GraphError::LabelCount(labels.len(), self.n()));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    /// Open neighborhood `N(v)`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    /// Closed neighborhood `N[v] = N(v) ∪ {v}`.
    #[inline]
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        self.adj[v].with(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, nb)| {
            nb.iter().filter(move |&v| v > u).map(move |v| (u, v))
        })
    }

    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn has_isolated(&self) -> bool {
        self.adj.iter().any(|a| a.is_empty())
    }

    pub fn isolated_vertices(&self) -> VertexSet {
        (0..self.n()).filter(|&v| self.adj[v].is_empty()).collect()
    }

    /// Connected components, ordered by their smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut out = Vec::new();
        let mut unseen = self.vertices();
        while let Some(start) = unseen.first() {
            let mut comp = VertexSet::singleton(start);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let mut next = VertexSet::EMPTY;
                for v in frontier {
                    next |= self.adj[v];
                }
                frontier = next - comp;
                comp |= frontier;
            }
            unseen -= comp;
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// True iff every component is a single edge.
    pub fn is_perfect_matching(&self) -> bool {
        self.adj.iter().all(|a| a.len() == 1)
            && self.adj.iter().enumerate().all(|(v, a)| {
                let u = a.first().unwrap();
                self.adj[u].len() == 1 && self.adj[u].contains(v)
            })
    }

    pub fn is_tree(&self) -> bool {
        self.edge_count() + 1 == self.n() && self.is_connected()
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.n() + other.n();
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let shift = self.n();
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|a| VertexSet::from_bits(a.bits() << shift)),
        );
        Ok(Graph { adj, labels: None })
    }

    /// The graph obtained by renaming vertex `v` to `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n());
        let mut adj = vec![VertexSet::EMPTY; self.n()];
        for (u, v) in self.edges() {
            adj[perm[u]].insert(perm[v]);
            adj[perm[v]].insert(perm[u]);
        }
        Graph { adj, labels: None }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n())?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        f.write_str("])")
    }
}
