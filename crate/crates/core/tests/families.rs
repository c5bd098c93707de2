mod common;

use cdgraph::closed_forms::{printed_over_corrected, sweep_points, verify_family_with};
use cdgraph::constructors::{
    cocktail_party, complete, direct_product_join, isolated, operation_d, supergraph,
    two_clique_cut_vertex,
};
use cdgraph::graph::block_decomposition;
use cdgraph::{predict, verify_family, verify_sweep, Exec, Family, FamilyParams, Graph};
use common::degree_multiset;
use num_bigint::BigUint;

fn complement_is_perfect_matching(g: &Graph) -> bool {
    let c = g.complement();
    (0..c.vertex_count()).all(|v| c.degree(v) == 1)
}

#[test]
fn cocktail_structure() {
    for n in (4..=20).step_by(2) {
        let g = cocktail_party(n).unwrap();
        assert!(g.degrees().iter().all(|&d| d == n - 2));
        assert!(complement_is_perfect_matching(&g));
        assert_eq!(g.edge_count(), n * (n - 2) / 2);
    }
    assert!(cocktail_party(5).is_err());
    assert!(cocktail_party(2).is_err());
}

#[test]
fn supergraph_structure() {
    for n in (4..=16).step_by(2) {
        let base = cocktail_party(n).unwrap().edge_count();
        for n1 in 1..=n / 2 {
            assert_eq!(supergraph(n, n1).unwrap().edge_count(), base + n1);
        }
        assert_eq!(supergraph(n, n / 2).unwrap(), complete(n).unwrap());
        assert!(supergraph(n, n / 2 + 1).is_err());
    }
}

#[test]
fn two_clique_structure() {
    for n in 3..=16 {
        for n1 in 1..=(n - 1) / 2 {
            let g = two_clique_cut_vertex(n, n1).unwrap();
            let d = block_decomposition(&g);
            assert_eq!(d.cut_vertices, vec![n1]);
            assert_eq!(d.blocks.len(), 2);
            assert!(d.blocks.iter().all(|b| g.is_clique(b)));
            assert_eq!(g.degree(n1), n - 1);
            let m = n - n1 - 1;
            assert_eq!(g.edge_count(), n1 * (n1 + 1) / 2 + m * (m + 1) / 2);
        }
    }
    assert_eq!(two_clique_cut_vertex(5, 2).unwrap().edge_count(), 6);
    assert!(two_clique_cut_vertex(5, 3).is_err());
}

#[test]
fn join_counts() {
    let pieces = [
        complete(1).unwrap(),
        isolated(3).unwrap(),
        cocktail_party(4).unwrap(),
        two_clique_cut_vertex(5, 2).unwrap(),
    ];
    for a in &pieces {
        for b in &pieces {
            let j = direct_product_join(a, b);
            assert_eq!(j.vertex_count(), a.vertex_count() + b.vertex_count());
            assert_eq!(
                j.edge_count(),
                a.edge_count() + b.edge_count() + a.vertex_count() * b.vertex_count()
            );
        }
    }
    let k1 = complete(1).unwrap();
    assert_eq!(direct_product_join(&k1, &k1), complete(2).unwrap());
    let k2 = complete(2).unwrap();
    assert_eq!(direct_product_join(&k2, &k2), complete(4).unwrap());
}

#[test]
fn square_joined_with_two_points_is_octahedron() {
    let c4 = Graph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
    let g = direct_product_join(&c4, &isolated(2).unwrap());
    assert!(complement_is_perfect_matching(&g));
    assert_eq!(
        g.degree_sequence(),
        cocktail_party(6).unwrap().degree_sequence()
    );
}

#[test]
fn operation_d_examples() {
    let p3 = operation_d(&complete(1).unwrap());
    assert_eq!(p3, Graph::new(3, [(0, 1), (0, 2)]).unwrap());
    let g = operation_d(&supergraph(6, 1).unwrap());
    assert_eq!(g.degree_sequence(), vec![7, 7, 6, 6, 6, 6, 6, 6]);
    assert!(!g.has_edge(6, 7));
}

#[test]
fn repeated_operation_d_stays_cocktail() {
    for n in (4..=10).step_by(2) {
        let mut g = cocktail_party(n).unwrap();
        for k in 1..=3 {
            g = operation_d(&g);
            assert_eq!(g.vertex_count(), n + 2 * k);
            assert!(complement_is_perfect_matching(&g));
        }
    }
}

/// The four six-vertex graphs of the construction: the octahedron and its
/// supergraphs with one, two and three antipodal edges added.
fn six_vertex_graphs() -> Vec<Graph> {
    let mut out = vec![cocktail_party(6).unwrap()];
    out.extend((1..=3).map(|n1| supergraph(6, n1).unwrap()));
    out
}

#[test]
fn eight_vertex_degree_multisets() {
    let got: Vec<_> = six_vertex_graphs()
        .iter()
        .map(|g| degree_multiset(&operation_d(g)))
        .collect();
    assert_eq!(
        got,
        vec![
            vec![(6, 8)],
            vec![(7, 2), (6, 6)],
            vec![(7, 4), (6, 4)],
            vec![(7, 6), (6, 2)],
        ]
    );
}

#[test]
fn ten_vertex_degree_multisets() {
    let mut eight: Vec<Graph> = six_vertex_graphs().iter().map(operation_d).collect();
    eight.push(complete(8).unwrap());
    let got: Vec<_> = eight
        .iter()
        .map(|g| degree_multiset(&operation_d(g)))
        .collect();
    assert_eq!(
        got,
        vec![
            vec![(8, 10)],
            vec![(9, 2), (8, 8)],
            vec![(9, 4), (8, 6)],
            vec![(9, 6), (8, 4)],
            vec![(9, 8), (8, 2)],
        ]
    );
}

#[test]
fn small_family_points_verify() {
    for family in Family::ALL {
        for p in sweep_points(family, 3..=14, None) {
            let r = verify_family(p);
            assert!(r.all_match(), "{p}");
            assert!(r.dl_direct_match, "{p}");
            assert!(r.tree_routes_agree, "{p}");
            assert!(!r.tree_match_printed, "{p}");
        }
    }
}

#[test]
fn printed_counts_are_off_by_n() {
    for family in Family::ALL {
        for p in sweep_points(family, 3..=30, None) {
            let pred = predict(p);
            assert_eq!(
                printed_over_corrected(&pred),
                Some(BigUint::from(p.n())),
                "{p}"
            );
        }
    }
}

#[test]
fn anchors() {
    let r = verify_family(FamilyParams::two_clique(3, 1).unwrap());
    assert!(r.all_match());
    assert_eq!(r.tree_count, BigUint::from(1u32));
    assert_eq!(r.l_spectrum.pairs(), &[(3, 1), (1, 1), (0, 1)]);

    let r = verify_family(FamilyParams::two_clique(5, 2).unwrap());
    assert_eq!(r.l_spectrum.pairs(), &[(5, 1), (3, 2), (1, 1), (0, 1)]);
    assert_eq!(
        r.dl_direct.unwrap().pairs(),
        &[(9, 1), (7, 2), (5, 1), (0, 1)]
    );
    assert_eq!(r.tree_count, BigUint::from(9u32));
    assert_eq!(r.prediction.tree_count_as_printed, BigUint::from(45u32));

    let r = verify_family(FamilyParams::supergraph(6, 3).unwrap());
    assert_eq!(r.l_spectrum.pairs(), &[(6, 5), (0, 1)]);
}

#[test]
fn sweep_order_and_strategy_independent() {
    let points = sweep_points(Family::Supergraph, 4..=10, None);
    let seq = verify_sweep(&points, Exec::Sequential);
    let par = verify_sweep(&points, Exec::Parallel);
    assert_eq!(seq, par);
    assert_eq!(seq.iter().map(|r| r.params).collect::<Vec<_>>(), points);
    let p = FamilyParams::cocktail(8).unwrap();
    assert_eq!(verify_family_with(p, Exec::Parallel), verify_family(p));
}

#[test]
fn param_errors() {
    assert!(FamilyParams::supergraph(6, 7)
        .unwrap_err()
        .to_string()
        .contains("n1 out of range"));
    assert!(FamilyParams::supergraph(6, 0).is_err());
    assert!(FamilyParams::cocktail(7).is_err());
    assert!(FamilyParams::two_clique(2, 1).is_err());
    assert!(FamilyParams::two_clique(6, 3).is_err());
}
