//! Necessary conditions for a graph to be the character degree graph of a
//! finite solvable group, and Lewis's fitting-height-2 characterization.
//!
//! Every failing check carries a witness that can be verified directly
//! against the graph. Passing all necessary conditions does not make a graph
//! a character degree graph; reports say "passes necessary conditions" and
//! nothing stronger.

use std::fmt;

use crate::graph::{block_decomposition, connected_components, distances, Distance, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Pass,
    Fail,
    NotApplicable,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::NotApplicable => "not-applicable",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Evidence attached to a verdict.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Witness {
    /// A vertex set: an independent triple, the cut vertices, a path order.
    Vertices(Vec<usize>),
    /// Vertex pairs: a pair at distance > 3, missing edges inside a block.
    Pairs(Vec<(usize, usize)>),
    /// The connected components.
    Components(Vec<Vec<usize>>),
    /// Two cliques covering the vertices of degree below `n - 1`; the first
    /// holds only vertices of degree `n - 2`.
    Partition {
        first: Vec<usize>,
        second: Vec<usize>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CheckKind {
    Palfy,
    ComponentCount,
    Diameter,
    ForbiddenP4,
    CutVertices,
    BlockCompleteness,
    FittingHeight2,
}

impl CheckKind {
    pub const ALL: [CheckKind; 7] = [
        CheckKind::Palfy,
        CheckKind::ComponentCount,
        CheckKind::Diameter,
        CheckKind::ForbiddenP4,
        CheckKind::CutVertices,
        CheckKind::BlockCompleteness,
        CheckKind::FittingHeight2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckKind::Palfy => "palfy",
            CheckKind::ComponentCount => "component_count",
            CheckKind::Diameter => "diameter",
            CheckKind::ForbiddenP4 => "forbidden_p4",
            CheckKind::CutVertices => "cut_vertices",
            CheckKind::BlockCompleteness => "block_completeness",
            CheckKind::FittingHeight2 => "fitting_height_2",
        }
    }

    /// Whether failing this check rules the graph out. The fitting-height-2
    /// criterion is an equivalence for that height only, so it is reported
    /// but never decides the overall verdict.
    pub fn is_necessary(self) -> bool {
        !matches!(self, CheckKind::FittingHeight2)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub kind: CheckKind,
    pub verdict: Verdict,
    pub witness: Option<Witness>,
}

impl CheckResult {
    fn pass(kind: CheckKind) -> Self {
        CheckResult {
            kind,
            verdict: Verdict::Pass,
            witness: None,
        }
    }

    fn not_applicable(kind: CheckKind) -> Self {
        CheckResult {
            kind,
            verdict: Verdict::NotApplicable,
            witness: None,
        }
    }

    fn fail(kind: CheckKind, witness: Witness) -> Self {
        CheckResult {
            kind,
            verdict: Verdict::Fail,
            witness: Some(witness),
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn failed(&self) -> bool {
        self.verdict == Verdict::Fail
    }
}

/// Among any three vertices at least one edge: the complement is
/// triangle-free. Fails with an independent triple.
pub fn check_palfy(g: &Graph) -> CheckResult {
    let kind = CheckKind::Palfy;
    let n = g.vertex_count();
    if n < 3 {
        return CheckResult::not_applicable(kind);
    }
    for a in 0..n {
        for b in a + 1..n {
            if g.has_edge(a, b) {
                continue;
            }
            if let Some(c) = (b + 1..n).find(|&c| !g.has_edge(a, c) && !g.has_edge(b, c)) {
                return CheckResult::fail(kind, Witness::Vertices(vec![a, b, c]));
            }
        }
    }
    CheckResult::pass(kind)
}

/// At most two connected components.
pub fn check_component_count(g: &Graph) -> CheckResult {
    let parts = connected_components(g);
    if parts.len() <= 2 {
        CheckResult::pass(CheckKind::ComponentCount)
    } else {
        CheckResult::fail(CheckKind::ComponentCount, Witness::Components(parts))
    }
}

/// Every connected component has diameter at most 3. Fails with a pair at
/// distance greater than 3.
pub fn check_diameter(g: &Graph) -> CheckResult {
    let table = distances(g);
    let n = g.vertex_count();
    for u in 0..n {
        for v in u + 1..n {
            if let Distance::Finite(d) = table.get(u, v) {
                if d > 3 {
                    return CheckResult::fail(CheckKind::Diameter, Witness::Pairs(vec![(u, v)]));
                }
            }
        }
    }
    CheckResult::pass(CheckKind::Diameter)
}

/// Fails exactly when the whole graph is the path on four vertices. The
/// witness lists the path in order.
pub fn check_forbidden_p4(g: &Graph) -> CheckResult {
    let kind = CheckKind::ForbiddenP4;
    if g.vertex_count() != 4
        || g.edge_count() != 3
        || g.degree_sequence() != [2, 2, 1, 1]
        || !g.is_connected()
    {
        return CheckResult::pass(kind);
    }
    let start = (0..4).find(|&v| g.degree(v) == 1).expect("two leaves");
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while order.len() < 4 {
        let next = *g
            .neighbors(cur)
            .iter()
            .find(|&&w| w != prev)
            .expect("path continues");
        order.push(next);
        prev = cur;
        cur = next;
    }
    CheckResult::fail(kind, Witness::Vertices(order))
}

/// At most one cut vertex. Fails with the full cut-vertex set.
pub fn check_cut_vertices(g: &Graph) -> CheckResult {
    let cuts = block_decomposition(g).cut_vertices;
    if cuts.len() <= 1 {
        CheckResult::pass(CheckKind::CutVertices)
    } else {
        CheckResult::fail(CheckKind::CutVertices, Witness::Vertices(cuts))
    }
}

/// When the graph is not a single block and has diameter at most 2, every
/// block must be complete. Fails with the missing edges inside blocks.
pub fn check_block_completeness(g: &Graph) -> CheckResult {
    let kind = CheckKind::BlockCompleteness;
    let decomposition = block_decomposition(g);
    if decomposition.is_single_block() {
        return CheckResult::not_applicable(kind);
    }
    let table = distances(g);
    if table.separated_pair().is_some() || table.max_finite() > 2 {
        return CheckResult::not_applicable(kind);
    }
    let missing: Vec<(usize, usize)> = decomposition
        .blocks
        .iter()
        .flat_map(|block| {
            block.iter().enumerate().flat_map(move |(i, &u)| {
                block[i + 1..]
                    .iter()
                    .filter(move |&&v| !g.has_edge(u, v))
                    .map(move |&v| (u, v))
            })
        })
        .collect();
    if missing.is_empty() {
        CheckResult::pass(kind)
    } else {
        CheckResult::fail(kind, Witness::Pairs(missing))
    }
}

/// Lewis's criterion: the vertices of degree below `n - 1` split into two
/// cliques, one of which has only vertices of degree `n - 2`. Either part may
/// be empty.
///
/// Two vertices that are non-adjacent must land in different parts, so the
/// search runs over the components of the complement restricted to those
/// vertices. Each component must be 2-colourable, and the choice of which
/// colour class goes to the first part is independent between components;
/// a component contributes a valid choice when one of its colour classes
/// contains only degree-`(n - 2)` vertices. This covers every 2-colouring
/// without enumerating their product.
///
/// On failure the witness is the set of sub-maximal-degree vertices.
pub fn check_fitting_height_2(g: &Graph) -> CheckResult {
    let kind = CheckKind::FittingHeight2;
    match fitting_height_2_partition(g) {
        Some((first, second)) => CheckResult {
            kind,
            verdict: Verdict::Pass,
            witness: Some(Witness::Partition { first, second }),
        },
        None => {
            let n = g.vertex_count();
            let low = (0..n).filter(|&v| g.degree(v) + 1 < n).collect();
            CheckResult::fail(kind, Witness::Vertices(low))
        }
    }
}

/// The partition behind [`check_fitting_height_2`], both parts sorted.
pub fn fitting_height_2_partition(g: &Graph) -> Option<(Vec<usize>, Vec<usize>)> {
    let n = g.vertex_count();
    let low: Vec<usize> = (0..n).filter(|&v| g.degree(v) + 1 < n).collect();
    let mut colour: Vec<Option<bool>> = vec![None; n];
    let mut first = Vec::new();
    let mut second = Vec::new();
    for &start in &low {
        if colour[start].is_some() {
            continue;
        }
        // Two-colour the complement component containing `start`.
        let mut sides: [Vec<usize>; 2] = [Vec::new(), Vec::new()];
        colour[start] = Some(false);
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            let cu = colour[u].expect("coloured");
            sides[cu as usize].push(u);
            for &w in &low {
                if w == u || g.has_edge(u, w) {
                    continue;
                }
                match colour[w] {
                    None => {
                        colour[w] = Some(!cu);
                        stack.push(w);
                    }
                    Some(cw) if cw == cu => return None,
                    Some(_) => {}
                }
            }
        }
        let all_n_minus_2 = |side: &[usize]| side.iter().all(|&v| g.degree(v) + 2 == n);
        let [a, b] = sides;
        if all_n_minus_2(&a) {
            first.extend(a);
            second.extend(b);
        } else if all_n_minus_2(&b) {
            first.extend(b);
            second.extend(a);
        } else {
            return None;
        }
    }
    first.sort_unstable();
    second.sort_unstable();
    Some((first, second))
}

/// Outcome of running every check on one graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    /// One entry per [`CheckKind`], in [`CheckKind::ALL`] order.
    pub checks: Vec<CheckResult>,
}

impl CheckReport {
    /// True when no necessary condition fails.
    pub fn passes_necessary_conditions(&self) -> bool {
        !self
            .checks
            .iter()
            .any(|c| c.kind.is_necessary() && c.failed())
    }

    /// Names of the failed necessary conditions.
    pub fn failures(&self) -> Vec<CheckKind> {
        self.checks
            .iter()
            .filter(|c| c.kind.is_necessary() && c.failed())
            .map(|c| c.kind)
            .collect()
    }

    pub fn get(&self, kind: CheckKind) -> &CheckResult {
        self.checks
            .iter()
            .find(|c| c.kind == kind)
            .expect("every check is present")
    }

    pub fn annotation(&self) -> &'static str {
        if self.passes_necessary_conditions() {
            "passes necessary conditions only; this does not certify a character degree graph"
        } else {
            "not the character degree graph of any solvable group"
        }
    }
}

/// Runs every check in a fixed order.
pub fn full_report(g: &Graph) -> CheckReport {
    let checks = CheckKind::ALL
        .iter()
        .map(|&kind| match kind {
            CheckKind::Palfy => check_palfy(g),
            CheckKind::ComponentCount => check_component_count(g),
            CheckKind::Diameter => check_diameter(g),
            CheckKind::ForbiddenP4 => check_forbidden_p4(g),
            CheckKind::CutVertices => check_cut_vertices(g),
            CheckKind::BlockCompleteness => check_block_completeness(g),
            CheckKind::FittingHeight2 => check_fitting_height_2(g),
        })
        .collect();
    CheckReport { checks }
}
