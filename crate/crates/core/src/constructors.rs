//! Generators for the character degree graph families and the direct
//! product construction used to grow them.
//!
//! Vertex numbering is canonical so that outputs are reproducible:
//!
//! * cocktail party: vertex `i` misses only its antipode `(i + n/2) mod n`;
//! * supergraph: the first `n1` antipodal pairs `{i, i + n/2}` are filled in;
//! * two cliques on a cut vertex: small clique `0..n1`, cut vertex `n1`,
//!   large clique `n1+1..n`.

use std::fmt;

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParamError {
    #[error("n must be at least {min}, got {n}")]
    TooSmall { n: usize, min: usize },
    #[error("n must be even, got {n}")]
    OddOrder { n: usize },
    #[error("n1 out of range: need {lo} <= n1 <= {hi}, got {n1}")]
    N1OutOfRange { n1: usize, lo: usize, hi: usize },
}

/// One of the three graph families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    /// The (n-2)-regular graph whose complement is a perfect matching.
    CocktailParty,
    /// A cocktail party graph with `n1` antipodal edges added.
    Supergraph,
    /// `K_{n1}` and `K_{n-n1-1}` glued through one shared cut vertex.
    TwoClique,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::CocktailParty, Family::Supergraph, Family::TwoClique];

    /// Short name used on the command line and in reports.
    pub fn name(self) -> &'static str {
        match self {
            Family::CocktailParty => "cocktail",
            Family::Supergraph => "supergraph",
            Family::TwoClique => "two-clique",
        }
    }

    pub fn from_name(name: &str) -> Option<Family> {
        Family::ALL.into_iter().find(|f| f.name() == name)
    }

    /// Admissible `n1` values for a given `n`, or `None` when `n` itself is
    /// out of range for the family.
    pub fn n1_range(self, n: usize) -> Option<std::ops::RangeInclusive<usize>> {
        match self {
            Family::CocktailParty => (n >= 4 && n.is_multiple_of(2)).then_some(0..=0),
            Family::Supergraph => (n >= 4 && n.is_multiple_of(2)).then_some(1..=n / 2),
            Family::TwoClique => (n >= 3).then_some(1..=(n - 1) / 2),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A validated point of one family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FamilyParams {
    family: Family,
    n: usize,
    n1: usize,
}

impl FamilyParams {
    pub fn new(family: Family, n: usize, n1: usize) -> Result<Self, ParamError> {
        match family {
            Family::CocktailParty => check_even_order(n)?,
            Family::Supergraph => {
                check_even_order(n)?;
                check_n1(n1, 1, n / 2)?;
            }
            Family::TwoClique => {
                if n < 3 {
                    return Err(ParamError::TooSmall { n, min: 3 });
                }
                check_n1(n1, 1, (n - 1) / 2)?;
            }
        }
        let n1 = if family == Family::CocktailParty {
            0
        } else {
            n1
        };
        Ok(FamilyParams { family, n, n1 })
    }

    pub fn cocktail(n: usize) -> Result<Self, ParamError> {
        Self::new(Family::CocktailParty, n, 0)
    }

    pub fn supergraph(n: usize, n1: usize) -> Result<Self, ParamError> {
        Self::new(Family::Supergraph, n, n1)
    }

    pub fn two_clique(n: usize, n1: usize) -> Result<Self, ParamError> {
        Self::new(Family::TwoClique, n, n1)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn n1(&self) -> usize {
        self.n1
    }

    pub fn build(&self) -> Graph {
        let built = match self.family {
            Family::CocktailParty => cocktail_party(self.n),
            Family::Supergraph => supergraph(self.n, self.n1),
            Family::TwoClique => two_clique_cut_vertex(self.n, self.n1),
        };
        built.expect("validated parameters")
    }
}

impl fmt::Display for FamilyParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::CocktailParty => write!(f, "{}(n={})", self.family, self.n),
            _ => write!(f, "{}(n={}, n1={})", self.family, self.n, self.n1),
        }
    }
}

fn check_even_order(n: usize) -> Result<(), ParamError> {
    if n < 4 {
        return Err(ParamError::TooSmall { n, min: 4 });
    }
    if !n.is_multiple_of(2) {
        return Err(ParamError::OddOrder { n });
    }
    Ok(())
}

fn check_n1(n1: usize, lo: usize, hi: usize) -> Result<(), ParamError> {
    if n1 < lo || n1 > hi {
        return Err(ParamError::N1OutOfRange { n1, lo, hi });
    }
    Ok(())
}

/// `K_n`.
pub fn complete(n: usize) -> Result<Graph, ParamError> {
    if n == 0 {
        return Err(ParamError::TooSmall { n, min: 1 });
    }
    Ok(Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).expect("in range"))
}

/// `n` isolated vertices.
pub fn isolated(n: usize) -> Result<Graph, ParamError> {
    Graph::empty(n).map_err(|_| ParamError::TooSmall { n, min: 1 })
}

/// The (n-2)-regular graph where `i` is adjacent to everything except
/// itself and `(i + n/2) mod n`.
pub fn cocktail_party(n: usize) -> Result<Graph, ParamError> {
    check_even_order(n)?;
    let half = n / 2;
    let edges = (0..n).flat_map(move |u| {
        (u + 1..n)
            .filter(move |&v| v != u + half)
            .map(move |v| (u, v))
    });
    Ok(Graph::new(n, edges).expect("in range"))
}

/// `cocktail_party(n)` plus the antipodal edges `{i, i + n/2}` for
/// `i < n1`.
pub fn supergraph(n: usize, n1: usize) -> Result<Graph, ParamError> {
    check_even_order(n)?;
    check_n1(n1, 1, n / 2)?;
    let half = n / 2;
    let base = cocktail_party(n)?;
    Ok(base
        .with_edges((0..n1).map(|i| (i, i + half)))
        .expect("in range"))
}

/// `K_{n1} - v - K_{n-n1-1}`: vertices `0..n1` form the small clique,
/// vertex `n1` is the cut vertex adjacent to all others, and `n1+1..n` form
/// the large clique.
pub fn two_clique_cut_vertex(n: usize, n1: usize) -> Result<Graph, ParamError> {
    if n < 3 {
        return Err(ParamError::TooSmall { n, min: 3 });
    }
    check_n1(n1, 1, (n - 1) / 2)?;
    // Both cliques include the cut vertex n1.
    let clique =
        |lo: usize, hi: usize| (lo..hi).flat_map(move |u| (u + 1..hi).map(move |v| (u, v)));
    let edges = clique(0, n1 + 1).chain(clique(n1, n));
    Ok(Graph::new(n, edges).expect("in range"))
}

/// Disjoint union of `a` and `b` with every cross pair joined. Vertices of
/// `b` are shifted by `a.vertex_count()`.
pub fn direct_product_join(a: &Graph, b: &Graph) -> Graph {
    let offset = a.vertex_count();
    let n = offset + b.vertex_count();
    let edges = a
        .edges()
        .chain(b.edges().map(|(u, v)| (u + offset, v + offset)))
        .chain((0..offset).flat_map(|u| (offset..n).map(move |v| (u, v))));
    Graph::new(n, edges).expect("in range")
}

/// Joins `g` with two isolated vertices; the new vertices get indices `n`
/// and `n + 1`, are adjacent to every old vertex, and not to each other.
pub fn operation_d(g: &Graph) -> Graph {
    direct_product_join(g, &isolated(2).expect("two vertices"))
}
