//! Brute-force oracles shared by the integration tests. Nothing here calls
//! into the library's algorithms beyond building a `Graph`.

#![allow(dead_code)]

use cdgraph::Graph;
use num_bigint::BigUint;
use num_traits::{One, Zero};

/// Vertex pairs `(i, j)`, `i < j`, in lexicographic order.
pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect()
}

/// The labelled graph on `n` vertices whose edges are the set bits of `mask`
/// over [`pairs`].
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let edges = pairs(n)
        .into_iter()
        .enumerate()
        .filter(|(k, _)| mask >> k & 1 == 1)
        .map(|(_, e)| e);
    Graph::new(n, edges).unwrap()
}

/// Every labelled graph on `n` vertices.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let m = n * n.saturating_sub(1) / 2;
    (0..1u64 << m).map(move |mask| graph_from_mask(n, mask))
}

pub fn adjacency(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.vertex_count();
    (0..n)
        .map(|u| (0..n).map(|v| g.has_edge(u, v)).collect())
        .collect()
}

/// Floyd–Warshall hop distances; `None` for unreachable.
pub fn floyd_warshall(g: &Graph) -> Vec<Vec<Option<usize>>> {
    let n = g.vertex_count();
    let adj = adjacency(g);
    let mut d: Vec<Vec<Option<usize>>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        Some(0)
                    } else if adj[i][j] {
                        Some(1)
                    } else {
                        None
                    }
                })
                .collect()
        })
        .collect();
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if let (Some(a), Some(b)) = (d[i][k], d[k][j]) {
                    if d[i][j].is_none_or(|c| a + b < c) {
                        d[i][j] = Some(a + b);
                    }
                }
            }
        }
    }
    d
}

/// Components counted by flood fill over an adjacency matrix with some
/// vertices removed.
pub fn component_count_without(adj: &[Vec<bool>], removed: Option<usize>) -> usize {
    let n = adj.len();
    let mut seen = vec![false; n];
    if let Some(r) = removed {
        seen[r] = true;
    }
    let mut count = 0;
    for s in 0..n {
        if seen[s] {
            continue;
        }
        count += 1;
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for w in 0..n {
                if adj[u][w] && !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
    }
    count
}

/// Vertices whose removal increases the component count.
pub fn brute_cut_vertices(g: &Graph) -> Vec<usize> {
    let adj = adjacency(g);
    let base = component_count_without(&adj, None);
    (0..g.vertex_count())
        .filter(|&v| component_count_without(&adj, Some(v)) > base)
        .collect()
}

/// Whether some triple of vertices spans no edge.
pub fn brute_has_independent_triple(g: &Graph) -> bool {
    let n = g.vertex_count();
    (0..n).any(|a| {
        (a + 1..n).any(|b| {
            (b + 1..n).any(|c| !g.has_edge(a, b) && !g.has_edge(a, c) && !g.has_edge(b, c))
        })
    })
}

/// Tries every assignment of the sub-maximal-degree vertices to two parts.
pub fn brute_fitting_height_2(g: &Graph) -> bool {
    let n = g.vertex_count();
    let low: Vec<usize> = (0..n).filter(|&v| g.degree(v) + 1 < n).collect();
    let is_clique = |set: &[usize]| {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| g.has_edge(u, v)))
    };
    (0..1u64 << low.len()).any(|mask| {
        let mut a = Vec::new();
        let mut b = Vec::new();
        for (i, &v) in low.iter().enumerate() {
            if mask >> i & 1 == 1 {
                a.push(v);
            } else {
                b.push(v);
            }
        }
        is_clique(&a) && is_clique(&b) && a.iter().all(|&v| g.degree(v) + 2 == n)
    })
}

/// Spanning trees by deletion–contraction on a multigraph edge list.
pub fn deletion_contraction(g: &Graph) -> BigUint {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    dc(g.vertex_count(), edges)
}

fn multigraph_connected(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    let mut parts = n;
    for &(u, v) in edges {
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a != b {
            parent[a] = b;
            parts -= 1;
        }
    }
    parts == 1
}

fn dc(n: usize, mut edges: Vec<(usize, usize)>) -> BigUint {
    if n == 1 {
        return BigUint::one();
    }
    if !multigraph_connected(n, &edges) {
        return BigUint::zero();
    }
    let (u, v) = edges.pop().expect("connected with n > 1 has an edge");
    // Delete.
    let deleted = dc(n, edges.clone());
    // Contract v into u, relabel the last vertex into v's slot, drop loops.
    let last = n - 1;
    let relabel = |x: usize| {
        let x = if x == v { u } else { x };
        if x == last {
            v
        } else {
            x
        }
    };
    let contracted: Vec<(usize, usize)> = edges
        .into_iter()
        .map(|(a, b)| (relabel(a), relabel(b)))
        .filter(|(a, b)| a != b)
        .collect();
    deleted + dc(n - 1, contracted)
}

/// Seeded random graph with edge probability `p`.
pub fn random_graph(n: usize, p: f64, rng: &mut impl rand::Rng) -> Graph {
    let edges: Vec<_> = pairs(n).into_iter().filter(|_| rng.gen_bool(p)).collect();
    Graph::new(n, edges).unwrap()
}

/// Sorted degree multiset as `(degree, count)` descending.
pub fn degree_multiset(g: &Graph) -> Vec<(usize, usize)> {
    let mut out: Vec<(usize, usize)> = Vec::new();
    for d in g.degree_sequence() {
        match out.last_mut() {
            Some((v, c)) if *v == d => *c += 1,
            _ => out.push((d, 1)),
        }
    }
    out
}
