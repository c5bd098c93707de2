use std::io::Write;
use std::process::{Command, Output, Stdio};

use cdgraph::{Family, FamilyParams, Graph};
use cdgraph_cli::GraphFile;
use serde_json::{json, Value};

fn run(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_cdgraph"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    {
        let mut pipe = child.stdin.take().unwrap();
        if let Some(text) = stdin {
            pipe.write_all(text.as_bytes()).unwrap();
        }
    }
    child.wait_with_output().unwrap()
}

fn json_out(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

const P4: &str = "n 4\n0 1\n1 2\n2 3\n";
const C4: &str = r#"{"n": 4, "edges": [[0, 1], [1, 2], [2, 3], [3, 0]]}"#;

#[test]
fn construct_examples() {
    let out = run(&["construct", "cocktail", "--n", "4"], None);
    assert_eq!(out.status.code(), Some(0));
    let doc = json_out(&out);
    assert_eq!(doc["n"], 4);
    assert_eq!(doc["edges"].as_array().unwrap().len(), 4);

    let out = run(&["construct", "two-clique", "--n", "5", "--n1", "2"], None);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_out(&out)["edges"].as_array().unwrap().len(), 6);

    let out = run(&["construct", "supergraph", "--n", "6", "--n1", "7"], None);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("n1 out of range"));
    assert!(out.stdout.is_empty());
}

#[test]
fn construct_round_trips_through_both_formats() {
    for family in Family::ALL {
        for n in 3..=12 {
            let Some(range) = family.n1_range(n) else {
                continue;
            };
            for n1 in range {
                let expected = FamilyParams::new(family, n, n1).unwrap().build();
                let n_arg = n.to_string();
                let n1_arg = n1.to_string();
                let mut args = vec!["construct", family.name(), "--n", &n_arg];
                if family != Family::CocktailParty {
                    args.extend(["--n1", &n1_arg]);
                }
                for format in ["json", "edgelist"] {
                    let mut a = args.clone();
                    a.extend(["--format", format]);
                    let out = run(&a, None);
                    assert_eq!(out.status.code(), Some(0));
                    let parsed =
                        GraphFile::parse(std::str::from_utf8(&out.stdout).unwrap()).unwrap();
                    assert_eq!(parsed.graph, expected, "{family} {n} {n1} {format}");
                }
            }
        }
    }
}

#[test]
fn check_exit_codes() {
    let out = run(&["check"], Some(P4));
    assert_eq!(out.status.code(), Some(1));
    let doc = json_out(&out);
    assert_eq!(
        doc["result"]["failures"],
        json!(["forbidden_p4", "cut_vertices"])
    );
    let cut = &doc["result"]["checks"][4];
    assert_eq!(cut["name"], "cut_vertices");
    assert_eq!(
        cut["witness"],
        json!({"kind": "vertices", "vertices": [1, 2]})
    );

    let octahedron = run(&["construct", "cocktail", "--n", "6"], None);
    let out = run(
        &["check"],
        Some(std::str::from_utf8(&octahedron.stdout).unwrap()),
    );
    assert_eq!(out.status.code(), Some(0));
    let doc = json_out(&out);
    assert_eq!(doc["result"]["passes_necessary_conditions"], true);
    assert!(doc["result"]["annotation"]
        .as_str()
        .unwrap()
        .contains("does not certify"));

    let out = run(&["check"], Some(r#"{"n": 3, "edges": [[0, 1]"#));
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["check"], Some("n 3\n0 1\n0 9\n"));
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("line 3"));
}

#[test]
fn spectrum_examples() {
    let out = run(&["spectrum", "--which", "laplacian"], Some(C4));
    assert_eq!(out.status.code(), Some(0));
    let doc = json_out(&out);
    assert_eq!(
        doc["result"]["spectrum"]["eigenvalues"],
        json!([[4, 1], [2, 2], [0, 1]])
    );
    assert_eq!(doc["result"]["spanning_trees"], "4");
    assert_eq!(
        doc["result"]["char_poly"],
        json!(["0", "-16", "20", "-8", "1"])
    );

    let bowtie = run(&["construct", "two-clique", "--n", "5", "--n1", "2"], None);
    let out = run(
        &["spectrum", "--which", "distance-laplacian"],
        Some(std::str::from_utf8(&bowtie.stdout).unwrap()),
    );
    assert_eq!(out.status.code(), Some(0));
    let doc = json_out(&out);
    assert_eq!(
        doc["result"]["spectrum"]["eigenvalues"],
        json!([[9, 1], [7, 2], [5, 1], [0, 1]])
    );
    assert!(doc["result"].get("spanning_trees").is_none());

    let out = run(
        &["spectrum", "--which", "distance-laplacian"],
        Some("n 4\n0 1\n2 3\n"),
    );
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json_out(&out)["witness"]["pairs"], json!([[0, 2]]));
}

#[test]
fn spectrum_reports_residual() {
    // The path on three edges has irrational Laplacian eigenvalues.
    let out = run(&["spectrum"], Some(P4));
    assert_eq!(out.status.code(), Some(0));
    let doc = json_out(&out);
    assert_eq!(
        doc["result"]["spectrum"]["eigenvalues"],
        json!([[2, 1], [0, 1]])
    );
    assert_eq!(
        doc["result"]["spectrum"]["residual"],
        json!(["2", "-4", "1"])
    );
    assert_eq!(doc["result"]["spanning_trees"], "1");
}

#[test]
fn verify_examples() {
    let out = run(&["verify", "cocktail", "--n", "4..12"], None);
    assert_eq!(out.status.code(), Some(0));
    let doc = json_out(&out);
    assert_eq!(doc["summary"]["points"], 5);
    assert_eq!(doc["summary"]["printed_tree_discrepancies"], 5);
    for p in doc["points"].as_array().unwrap() {
        assert_eq!(p["spanning_trees"]["match_printed"], false);
        assert_eq!(p["all_match"], true);
    }
    assert!(stderr(&out).contains("printed tree count differs at 5 points"));

    let out = run(&["verify", "two-clique", "--n", "3..10"], None);
    assert_eq!(out.status.code(), Some(0));

    let out = run(&["verify", "supergraph", "--n", "6", "--n1", "1..3"], None);
    assert_eq!(out.status.code(), Some(0));
    let doc = json_out(&out);
    let last = &doc["points"][2];
    assert_eq!(last["n1"], 3);
    assert_eq!(last["laplacian"]["actual"], json!([[6, 5], [0, 1]]));
}

#[test]
fn verify_rejects_bad_ranges() {
    for args in [
        &["verify", "cocktail", "--n", "12..4"][..],
        &["verify", "cocktail", "--n", "x"],
        &["verify", "cocktail", "--n", "5..5"],
        &["verify", "cocktail", "--n", "4..8", "--n1", "1"],
        &["verify", "hexagon", "--n", "4"],
    ] {
        assert_eq!(run(args, None).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn output_file_and_labels() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.txt");
    let p = path.to_str().unwrap();
    let out = run(
        &[
            "construct",
            "cocktail",
            "--n",
            "4",
            "--format",
            "edgelist",
            "--output",
            p,
            "--labels",
            "2,3,5,7",
        ],
        None,
    );
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("n 4\nlabels 2,3,5,7\n"));

    let out = run(&["check", p], None);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        json_out(&out)["input"]["labels"],
        json!(["2", "3", "5", "7"])
    );

    let out = run(&["check", p, "--labels", "2,3"], None);
    assert_eq!(out.status.code(), Some(2));

    let out = run(
        &["check", dir.path().join("missing").to_str().unwrap()],
        None,
    );
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn parsed_file_equals_constructed_graph() {
    let g = Graph::new(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap();
    let out = run(&["construct", "two-clique", "--n", "5", "--n1", "2"], None);
    assert_eq!(
        GraphFile::parse(std::str::from_utf8(&out.stdout).unwrap())
            .unwrap()
            .graph,
        g
    );
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&[], None).status.code(), Some(2));
    assert_eq!(run(&["construct", "cocktail"], None).status.code(), Some(2));
    assert_eq!(
        run(&["spectrum", "--which", "adjacency"], Some(C4))
            .status
            .code(),
        Some(2)
    );
}
