use std::path::Path;
use std::process::{Command, Output};

use ttwfree::synthesis::families;
use ttwfree::{validate_treerep, Graph};
use ttwfree_cli::pace::parse_pace;
use ttwfree_cli::{parse_graph, write_edge_list, write_graph6, InputFormat};

fn ttwfree(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ttwfree")).args(args).output().expect("binary runs")
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn check_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let c6 = write(dir.path(), "c6.txt", "0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n");
    let o = ttwfree(&["check", &c6]);
    assert_eq!(o.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(report["treewidth"], 2);
    assert_eq!(report["ttw_free"], true);

    let pet = write(dir.path(), "petersen.g6", &write_graph6(&families::petersen()));
    let o = ttwfree(&["check", &pet]);
    assert_eq!(o.status.code(), Some(1));
    let report: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(report["ttw_free"], false);

    let bad = write(dir.path(), "bad.txt", "0 1\n1 x\n");
    let o = ttwfree(&["check", &bad]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
    assert_eq!(ttwfree(&["check", "/nonexistent/graph.txt"]).status.code(), Some(2));
}

#[test]
fn dimacs_input() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(dir.path(), "c5.col", "c pentagon\np edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\n");
    assert_eq!(ttwfree(&["check", &p]).status.code(), Some(0));
    let o = ttwfree(&["check", "--format", "graph6", &p]);
    assert_eq!(o.status.code(), Some(2));
}

fn treewidth_of(g: &Graph) -> (usize, usize) {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "g.txt", &write_edge_list(g));
    let out = dir.path().join("g.td");
    let o = ttwfree(&["treewidth", &input, "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&out).unwrap();
    let header: Vec<usize> = text.lines().next().unwrap().split_whitespace().skip(2).map(|t| t.parse().unwrap()).collect();
    let (rep, n) = parse_pace(&text).unwrap();
    assert_eq!(n, g.n());
    let w = validate_treerep(g, &rep).unwrap();
    assert_eq!(header[1], w + 1);
    (w, header[1])
}

#[test]
fn treewidth_files() {
    assert_eq!(treewidth_of(&families::cube()), (3, 4));
    assert_eq!(treewidth_of(&families::full_daisy(5).0).0, 4);
    assert_eq!(treewidth_of(&Graph::complete(2)).0, 1);

    let dir = tempfile::tempdir().unwrap();
    let pet = write(dir.path(), "p.g6", &write_graph6(&families::petersen()));
    let o = ttwfree(&["treewidth", &pet]);
    assert_eq!(o.status.code(), Some(1));
    assert!(o.stdout.is_empty());
}

#[test]
fn decompose_double_pentagon() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(dir.path(), "dp.txt", &write_edge_list(&families::cycles_sharing_edge(5, 5)));
    let o = ttwfree(&["decompose", "--dot", &p]);
    assert_eq!(o.status.code(), Some(0));
    let dot = stdout(&o);
    assert!(dot.starts_with("graph decomposition {"));
    assert_eq!(dot.matches("[label=").count(), 3);
    assert!(dot.contains("n0 -- n1;") && dot.contains("n0 -- n2;"));
}

#[test]
fn generate_then_check() {
    let o = ttwfree(&["generate", "--seed", "1", "--size", "12"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(parse_graph(&text, InputFormat::EdgeList).unwrap().n(), 12);
    let dir = tempfile::tempdir().unwrap();
    let p = write(dir.path(), "gen.txt", &text);
    assert_eq!(ttwfree(&["check", &p]).status.code(), Some(0));

    let o = ttwfree(&["generate", "--seed", "3", "--size", "20", "--subclass", "even-hole-free", "--atomic"]);
    assert_eq!(o.status.code(), Some(0));
    let p = write(dir.path(), "atomic.txt", &stdout(&o));
    let o = ttwfree(&["ears", &p]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("base "));
}

#[test]
fn oracle_witnesses() {
    let dir = tempfile::tempdir().unwrap();
    let k23 = write(dir.path(), "k23.txt", &write_edge_list(&Graph::complete_bipartite(2, 3)));
    let o = ttwfree(&["oracle", "theta", &k23]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("Theta"));
    assert_eq!(ttwfree(&["oracle", "triangle", &k23]).status.code(), Some(1));
    let pet = write(dir.path(), "p.g6", &write_graph6(&families::petersen()));
    assert_eq!(ttwfree(&["oracle", "kuratowski", &pet]).status.code(), Some(0));
    assert_eq!(ttwfree(&["oracle", "no-such-pattern", &pet]).status.code(), Some(2));
}

#[test]
fn outputs_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let g = ttwfree(&["generate", "--seed", "7", "--size", "40"]);
    let p = write(dir.path(), "g.txt", &stdout(&g));
    for args in [
        vec!["generate", "--seed", "7", "--size", "40"],
        vec!["check", &p],
        vec!["treewidth", &p],
        vec!["decompose", &p],
        vec!["decompose", "--dot", &p],
    ] {
        let a = ttwfree(&args);
        let b = ttwfree(&args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert_eq!(a.status.code(), b.status.code());
    }
}
