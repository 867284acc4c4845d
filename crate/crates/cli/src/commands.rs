//! The subcommands, as functions from parsed input to output text and an
//! exit code.

use std::fmt::Write as _;

use ttwfree::analysis::analyze_full;
use ttwfree::decompose::decompose_with_budget;
use ttwfree::oracles::{find_pattern, kuratowski_witness, PatternKind};
use ttwfree::synthesis::text::write_ear_sequence;
use ttwfree::synthesis::{ear_sequence, random_member_with, GeneratorConfig, Subclass};
use ttwfree::{recognize_basic, validate_treerep, DecompositionTree, Graph};

use crate::error::{CliError, EXIT_NEGATIVE};
use crate::formats::write_edge_list;
use crate::pace::write_pace;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    /// Printed on standard error.
    pub note: Option<String>,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, note: None, code: 0 }
    }

    fn negative(stdout: String, note: impl Into<String>) -> Self {
        Outcome { stdout, note: Some(note.into()), code: EXIT_NEGATIVE }
    }
}

/// The class report as JSON; exit 1 when the graph is not in the class.
pub fn cmd_check(g: &Graph) -> Result<Outcome, CliError> {
    let a = analyze_full(g)?;
    let mut out = serde_json::to_string_pretty(&a.report).expect("reports serialise");
    out.push('\n');
    Ok(if a.report.ttw_free { Outcome::ok(out) } else { Outcome::negative(out, "not (theta, triangle, wac)-free") })
}

/// A PACE decomposition of optimal width.
pub fn cmd_treewidth(g: &Graph) -> Result<Outcome, CliError> {
    let a = analyze_full(g)?;
    let Some((class, rep)) = a.width else {
        return Ok(Outcome::negative(String::new(), "not (theta, triangle, wac)-free; no decomposition"));
    };
    let w = validate_treerep(g, &rep)?;
    debug_assert_eq!(w, class.predicted);
    Ok(Outcome::ok(write_pace(&rep, g.n())))
}

fn node_label(t: &DecompositionTree, id: usize) -> String {
    let node = &t.nodes[id];
    match &node.separator {
        Some(s) => {
            let sep: Vec<String> = s.separator().iter().map(|&v| node.to_root[v].to_string()).collect();
            format!("{} {{{}}}", s.kind_name(), sep.join(","))
        }
        None => match recognize_basic(&node.graph) {
            Some(kind) => kind.name().to_string(),
            None => "not basic".to_string(),
        },
    }
}

/// The decomposition tree as text, or as DOT with `dot`.
pub fn cmd_decompose(g: &Graph, dot: bool) -> Result<Outcome, CliError> {
    let t = match decompose_with_budget(g, None) {
        Ok(t) => t,
        Err(ttwfree::Error::BudgetExceeded { limit }) => {
            return Ok(Outcome::negative(String::new(), format!("more than {limit} nodes; not in the class")))
        }
        Err(e) => return Err(e.into()),
    };
    let mut s = String::new();
    if dot {
        s.push_str("graph decomposition {\n  node [shape=box];\n");
        for (id, node) in t.nodes.iter().enumerate() {
            let _ = writeln!(s, "  n{id} [label=\"{}\\n{} vertices\"];", node_label(&t, id), node.graph.n());
        }
        for (id, node) in t.nodes.iter().enumerate() {
            for c in &node.children {
                let _ = writeln!(s, "  n{id} -- n{c};");
            }
        }
        s.push_str("}\n");
    } else {
        for (id, node) in t.nodes.iter().enumerate() {
            let parent = node.parent.map_or("-".to_string(), |p| p.to_string());
            let vs: Vec<String> = node.to_root.iter().map(|v| v.to_string()).collect();
            let _ = writeln!(
                s,
                "node {id} parent {parent} type {} {} : {}",
                node.node_type,
                node_label(&t, id),
                vs.join(" ")
            );
        }
    }
    let all_basic = t.leaves().all(|(_, l)| recognize_basic(&l.graph).is_some());
    Ok(if all_basic { Outcome::ok(s) } else { Outcome::negative(s, "some leaf is not basic") })
}

/// An ear sequence; the `# order` line maps replay ids to input ids.
pub fn cmd_ears(g: &Graph) -> Result<Outcome, CliError> {
    let seq = match ear_sequence(g) {
        Ok(s) => s,
        Err(ttwfree::Error::Precondition(m)) => return Ok(Outcome::negative(String::new(), m)),
        Err(e) => return Err(e.into()),
    };
    let order: Vec<String> = seq.order.iter().map(|v| v.to_string()).collect();
    Ok(Outcome::ok(format!("# order {}\n{}", order.join(" "), write_ear_sequence(&seq))))
}

pub fn cmd_generate(seed: u64, size: usize, subclass: Option<Subclass>, atomic: bool) -> Result<Outcome, CliError> {
    let cfg = GeneratorConfig { atomic, ..GeneratorConfig::with_subclass(subclass) };
    match random_member_with(seed, size, &cfg) {
        Ok(g) => Ok(Outcome::ok(write_edge_list(&g.graph))),
        Err(ttwfree::Error::Unsatisfiable(m)) => Ok(Outcome::negative(String::new(), m)),
        Err(e) => Err(e.into()),
    }
}

/// Brute-force search for a pattern (or a Kuratowski subgraph with kind
/// `kuratowski`). Exit 0 with a witness, 1 when there is none.
pub fn cmd_oracle(g: &Graph, kind: &str) -> Result<Outcome, CliError> {
    let json = if kind.eq_ignore_ascii_case("kuratowski") {
        kuratowski_witness(g)?.map(|w| serde_json::to_string_pretty(&w).expect("witnesses serialise"))
    } else {
        let kind: PatternKind = kind.parse()?;
        find_pattern(g, kind)?.map(|w| serde_json::to_string_pretty(&w).expect("witnesses serialise"))
    };
    Ok(match json {
        Some(j) => Outcome::ok(j + "\n"),
        None => Outcome::negative("none\n".to_string(), format!("no {kind} found")),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use ttwfree::synthesis::families;

    #[test]
    fn check_verdicts() {
        let o = cmd_check(&Graph::cycle(6)).unwrap();
        assert_eq!(o.code, 0);
        assert!(o.stdout.contains("\"treewidth\": 2"));
        let o = cmd_check(&families::petersen()).unwrap();
        assert_eq!(o.code, 1);
        assert!(o.stdout.contains("Rejected"));
    }

    #[test]
    fn decompose_double_pentagon() {
        let g = families::cycles_sharing_edge(5, 5);
        let o = cmd_decompose(&g, true).unwrap();
        assert_eq!(o.stdout.matches(" -- ").count(), 2);
        assert_eq!(o.stdout.matches("hole").count(), 2);
        let o = cmd_decompose(&g, false).unwrap();
        assert_eq!(o.stdout.lines().count(), 3);
    }

    #[test]
    fn oracle_on_k23() {
        let o = cmd_oracle(&Graph::complete_bipartite(2, 3), "theta").unwrap();
        assert_eq!(o.code, 0);
        assert!(o.stdout.contains("Theta"));
        assert_eq!(cmd_oracle(&Graph::cycle(5), "theta").unwrap().code, 1);
        assert!(cmd_oracle(&Graph::cycle(5), "nonsense").is_err());
    }
}
