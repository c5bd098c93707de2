//! Simple undirected graphs and the structural queries built on them:
//! BFS distances, connected components, blocks and cut vertices.
//!
//! Vertices are `0..n`. A [`Graph`] is immutable once built; operations that
//! add edges return a new graph.

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("a graph needs at least one vertex")]
    Empty,
    #[error("edge ({u}, {v}) references a vertex outside 0..{n}")]
    VertexOutOfRange { u: usize, v: usize, n: usize },
    #[error("edge ({v}, {v}) is a self-loop")]
    SelfLoop { v: usize },
    #[error("diameter needs at least two vertices")]
    TooFewVertices,
}

/// A simple undirected graph stored as sorted adjacency lists.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph on `n` vertices. Duplicate edges (in either
    /// orientation) collapse to one.
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop { v });
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        Ok(Self::from_raw(adj))
    }

    /// `n` vertices, no edges.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        Self::new(n, std::iter::empty())
    }

    fn from_raw(mut adj: Vec<Vec<usize>>) -> Self {
        let mut twice = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            twice += list.len();
        }
        Graph {
            adj,
            edge_count: twice / 2,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    /// Degrees sorted in descending order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d = self.degrees();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.adj.len() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// A new graph with `extra` edges added.
    pub fn with_edges<I>(&self, extra: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Graph::new(self.vertex_count(), self.edges().chain(extra))
    }

    pub fn complement(&self) -> Graph {
        let n = self.vertex_count();
        let adj = (0..n)
            .map(|u| (0..n).filter(|&v| v != u && !self.has_edge(u, v)).collect())
            .collect();
        Graph::from_raw(adj)
    }

    /// The subgraph induced by `vertices`, relabelled to `0..vertices.len()`
    /// in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let adj = vertices
            .iter()
            .map(|&v| {
                self.adj[v]
                    .iter()
                    .filter(|&&u| index[u] != usize::MAX)
                    .map(|&u| index[u])
                    .collect()
            })
            .collect();
        Graph::from_raw(adj)
    }

    /// True when every pair of distinct vertices in `vertices` is adjacent.
    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(i, &u)| vertices[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    pub fn is_connected(&self) -> bool {
        connected_components(self).len() == 1
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.vertex_count())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Hop distance between two vertices. `Infinite` sorts after every finite
/// distance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Distance {
    Finite(usize),
    Infinite,
}

impl Distance {
    pub fn finite(self) -> Option<usize> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Infinite => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Distance::Finite(_))
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Infinite => f.write_str("inf"),
        }
    }
}

/// All-pairs hop distances.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceTable {
    n: usize,
    dist: Vec<Distance>,
}

impl DistanceTable {
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> Distance {
        self.dist[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[Distance] {
        &self.dist[u * self.n..(u + 1) * self.n]
    }

    /// Largest finite entry.
    pub fn max_finite(&self) -> usize {
        self.dist
            .iter()
            .filter_map(|d| d.finite())
            .max()
            .unwrap_or(0)
    }

    /// Some pair at infinite distance, if the graph is disconnected.
    pub fn separated_pair(&self) -> Option<(usize, usize)> {
        let i = self.dist.iter().position(|d| !d.is_finite())?;
        Some((i / self.n, i % self.n))
    }

    /// Sum of distances from `v` to every other vertex. `None` when some
    /// vertex is unreachable.
    pub fn transmission(&self, v: usize) -> Option<usize> {
        self.row(v).iter().map(|d| d.finite()).sum()
    }
}

/// BFS from every vertex.
pub fn distances(g: &Graph) -> DistanceTable {
    let n = g.vertex_count();
    let mut dist = vec![Distance::Infinite; n * n];
    let mut queue = VecDeque::with_capacity(n);
    for s in 0..n {
        let row = &mut dist[s * n..(s + 1) * n];
        row[s] = Distance::Finite(0);
        queue.push_back((s, 0));
        while let Some((u, d)) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if row[w] == Distance::Infinite {
                    row[w] = Distance::Finite(d + 1);
                    queue.push_back((w, d + 1));
                }
            }
        }
    }
    DistanceTable { n, dist }
}

/// Maximum distance over all pairs of distinct vertices.
pub fn diameter(g: &Graph) -> Result<Distance, GraphError> {
    if g.vertex_count() < 2 {
        return Err(GraphError::TooFewVertices);
    }
    let table = distances(g);
    Ok(match table.separated_pair() {
        Some(_) => Distance::Infinite,
        None => Distance::Finite(table.max_finite()),
    })
}

/// Vertex sets of the connected components, each sorted, ordered by their
/// smallest vertex.
pub fn connected_components(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut parts = Vec::new();
    let mut stack = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        stack.push(s);
        let mut part = Vec::new();
        while let Some(u) = stack.pop() {
            part.push(u);
            for &w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        part.sort_unstable();
        parts.push(part);
    }
    parts
}

/// Blocks (maximal 2-connected pieces, bridges, isolated vertices) and the
/// cut vertices joining them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    /// Each block sorted; blocks in lexicographic order.
    pub blocks: Vec<Vec<usize>>,
    /// Sorted.
    pub cut_vertices: Vec<usize>,
}

impl BlockDecomposition {
    pub fn is_single_block(&self) -> bool {
        self.blocks.len() == 1
    }
}

/// Hopcroft–Tarjan low-point decomposition, run iteratively with an edge
/// stack.
pub fn block_decomposition(g: &Graph) -> BlockDecomposition {
    let n = g.vertex_count();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut timer = 0;
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    // (vertex, parent, next neighbour index)
    let mut call: Vec<(usize, usize, usize)> = Vec::new();

    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        if g.degree(root) == 0 {
            blocks.push(vec![root]);
            continue;
        }
        call.push((root, usize::MAX, 0));
        while let Some(frame) = call.last_mut() {
            let (u, parent, ref mut next) = *frame;
            if let Some(&w) = g.neighbors(u).get(*next) {
                *next += 1;
                if disc[w] == usize::MAX {
                    edge_stack.push((u, w));
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    call.push((w, u, 0));
                } else if w != parent && disc[w] < disc[u] {
                    edge_stack.push((u, w));
                    low[u] = low[u].min(disc[w]);
                }
                continue;
            }
            call.pop();
            if parent == usize::MAX {
                continue;
            }
            low[parent] = low[parent].min(low[u]);
            if low[u] >= disc[parent] {
                let mut block = Vec::new();
                while let Some((a, b)) = edge_stack.pop() {
                    block.push(a);
                    block.push(b);
                    if (a, b) == (parent, u) {
                        break;
                    }
                }
                block.sort_unstable();
                block.dedup();
                blocks.push(block);
            }
        }
    }

    let mut membership = vec![0usize; n];
    for block in &blocks {
        for &v in block {
            membership[v] += 1;
        }
    }
    let cut_vertices = (0..n).filter(|&v| membership[v] >= 2).collect();
    blocks.sort();
    BlockDecomposition {
        blocks,
        cut_vertices,
    }
}
